#pragma once

#include "catdias/report.hpp"
#include "catdias/support.hpp"

#include <vector>

namespace catdias {

// Supports of the bimodules defining the Diassociative cooperad and the
// support-level verifiers for its axioms.
//
// Axis conventions:
//   S_{m;i}^n lives on (gamma, mu, nu) = [(m+n-1)op, m, n].
//   The four-factor composites live on (gamma, mu, nu, pi) =
//   [(m+n+p-2)op, m, n, p].

struct FamilyParams {
    int m = 1;
    int n = 1;
    int p = 1;
    int i = 1;
    int j = 1;
};

// gamma <= mu below slot i, gamma <= i+nu-1 at slot i, gamma <= mu+n-1 above.
Support s_support(int m, int i, int n);
// Same set, built from the description by ranges of gamma.
Support s_support_alt(int m, int i, int n);

// The Nakayama bimodule: {(a, b) : a >= b} on [n op, n].
Support n_support(int n);

enum class IntervalKind { projective, injective, simple };

// [j, n], [1, j] or {j} on the plain shape [n].
Support interval_support(int n, IntervalKind kind, int j);

// The closed-form four-factor sets both sides of each cooperad axiom reduce to.
Support reference_commutativity_set(int m, int n, int p, int i, int j);
Support reference_associativity_set(int m, int n, int p, int i, int j);

// Closed forms of the intermediate supports met while checking the
// anticyclic axioms.
//
// gamma-reversal of S_{m;1}^n, on [(m+n-1)op, m, n].
Support border_gamma_reversal_set(int m, int n);
// Reversal of S_{n;n}^m along its length-m axis, on [(m+n-1)op, n, m].
Support border_first_reversal_set(int m, int n);
// gamma-reversal of S_{m;i}^n, on [(m+n-1)op, m, n].
Support inner_gamma_reversal_set(int m, int n, int i);
// mu-reversal of S_{m;i-1}^n, on [(m+n-1)op, m, n].
Support inner_mu_reversal_set(int m, int n, int i);

// One tensor product performed by a cooperad verifier: contract `left` along
// `left_axis` with `right` along `right_axis`, then permute the result into
// (gamma, mu, nu, pi) order.
struct Contraction {
    Support left;
    std::size_t left_axis = 0;
    Support right;
    std::size_t right_axis = 0;
    std::vector<std::size_t> to_canonical;
};

// Both sides of each axiom, left-hand side first.
std::vector<Contraction> commutativity_contractions(int m, int n, int p, int i, int j);
std::vector<Contraction> associativity_contractions(int m, int n, int p, int i, int j);

// Performs the contraction and the permutation.
Support evaluate(const Contraction& c);

void check_commutativity_params(int m, int n, int p, int i, int j);
void check_associativity_params(int m, int n, int p, int i, int j);
void check_border_params(int m, int n);
void check_inner_params(int m, int n, int i);

Report verify_commutativity(int m, int n, int p, int i, int j);
Report verify_associativity(int m, int n, int p, int i, int j);
Report verify_border(int m, int n);
Report verify_inner(int m, int n, int i);

} // namespace catdias
