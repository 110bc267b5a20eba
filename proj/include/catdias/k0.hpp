#pragma once

// Grothendieck-group shadow of the cooperad: classes of modules in the basis
// of simple modules, the matrices of the nabla functors, the Nakayama and
// Auslander-Reiten matrices, and the Diassociative compositions dual to them.
//
// Basis conventions: K0 of A_L has basis [S_1], ..., [S_L]. K0 of a product
// A_m x A_n has basis [S_(mu,nu)] in row-major order, index (mu-1)*n + (nu-1);
// longer products extend this row-major. The shift acts by -1 on K0, once per
// product category.

#include "catdias/int_matrix.hpp"
#include "catdias/report.hpp"
#include "catdias/support.hpp"

#include <string>

namespace catdias {

struct K0Map {
    std::string source;
    std::string target;
    IntMatrix matrix;
};

std::string line_basis(int length);
std::string product_basis(std::initializer_list<int> lengths);

// Dimension vector of the standard module on `s`. All axes must be plain.
K0Vector k0_class(const Support& s);

// Class of [P_{a,b}] on A_m x A_n; zero when a > m or b > n.
K0Vector projective_class(int m, int n, int a, int b);

// Matrix of the exact functor X -> X (x) B for a bimodule support B whose
// axis 0 is op: column g is [P_g (x) B] - [P_{g+1} (x) B].
IntMatrix k0_of_bimodule(const Support& bimodule);

// [nabla_{m;i}^n]: (m*n) x (m+n-1).
K0Map nabla_k0(int m, int i, int n);

// The closed forms for [nabla(P_j)] and [nabla(S_j)], by cases on j.
K0Vector nabla_projective_formula(int m, int i, int n, int j);
K0Vector nabla_simple_formula(int m, int i, int n, int j);
// Compares both closed forms against classes computed from contractions.
Report verify_nabla_formulas(int m, int i, int n);

// Index of e_j o_i e_k in the basis of Dias(m+n-1), 1-based.
int dias_compose(int m, int i, int n, int j, int k);
// (m+n-1) x (m*n) 0/1 matrix of o_i in the e-bases.
IntMatrix dias_compose_matrix(int m, int i, int n);
// transpose(nabla_k0) == dias_compose_matrix.
Report duality_check(int m, int i, int n);

// nu [P_j] = [I_j] for all j.
K0Map nu_k0(int n);
// tau = -nu.
K0Map tau_k0(int n);
// Sends [S_(mu,nu)] on A_m x A_n to [S_(nu,mu)] on A_n x A_m.
K0Map flip_k0(int m, int n);
// Transpose of tau_k0(n), acting on Dias(n) in the dual basis.
K0Map dias_tau(int n);

// Smallest k in [1, max_power] with a^k = id, or 0.
unsigned matrix_order(const IntMatrix& a, unsigned max_power);
// tau_k0(n) and dias_tau(n) have order exactly n+1.
Report verify_tau_order(int n);

// nabla_{m;1}^n nu = X (nu_n x nu_m) nabla_{n;n}^m, and the tau form with
// the shift sign.
Report verify_border_k0(int m, int n);
// nabla_{m;i}^n nu = (nu_m x id) nabla_{m;i-1}^n, and the tau form.
Report verify_inner_k0(int m, int n, int i);

// Operad axioms for o on basis elements, checked alongside the K0 matrices
// of both sides of the dual cooperad identity and the K0 matrix of the
// closed-form four-factor support. The parallel axiom is checked when
// i < j <= m, the nested one when i <= m and j <= n; at least one must apply.
Report dias_operad_axiom_check(int m, int n, int p, int i, int j);

} // namespace catdias
