#include "catdias/families.hpp"

#include "catdias/error.hpp"

#include <fmt/format.h>

namespace catdias {

namespace {

void require(bool ok, const char* what, int value)
{
    if (!ok)
        throw ParameterError(fmt::format("{} (got {})", what, value));
}

Shape s_shape(int m, int n) { return Shape{op(m + n - 1), plain(m), plain(n)}; }

Shape composite_shape(int m, int n, int p) { return Shape{op(m + n + p - 2), plain(m), plain(n), plain(p)}; }

void compare(Report& report, const char* check, const Support& a, const Support& b)
{
    report.fail_all(check, symmetric_difference(a, b));
}

} // namespace

Support s_support(int m, int i, int n)
{
    require(m >= 1, "m must be >= 1", m);
    require(n >= 1, "n must be >= 1", n);
    require(1 <= i && i <= m, "slot i must satisfy 1 <= i <= m", i);
    return Support::from_predicate(s_shape(m, n), [=](const Point& x) {
        const int g = x[0], mu = x[1], nu = x[2];
        return (mu <= i - 1 && g <= mu) || (mu == i && g <= i + nu - 1)
            || (i + 1 <= mu && g <= mu + n - 1);
    });
}

Support s_support_alt(int m, int i, int n)
{
    require(m >= 1, "m must be >= 1", m);
    require(n >= 1, "n must be >= 1", n);
    require(1 <= i && i <= m, "slot i must satisfy 1 <= i <= m", i);
    return Support::from_predicate(s_shape(m, n), [=](const Point& x) {
        const int g = x[0], mu = x[1], nu = x[2];
        const bool middle = i + 1 <= g && g <= i + n - 1;
        return (g <= i && g <= mu) || (middle && g <= i + nu - 1 && i <= mu)
            || (middle && i + nu <= g && i + 1 <= mu) || (i + n <= g && g - n + 1 <= mu);
    });
}

Support n_support(int n)
{
    require(n >= 1, "n must be >= 1", n);
    return Support::from_predicate(Shape{op(n), plain(n)}, [](const Point& x) { return x[0] >= x[1]; });
}

Support interval_support(int n, IntervalKind kind, int j)
{
    require(n >= 1, "n must be >= 1", n);
    require(1 <= j && j <= n, "vertex j must satisfy 1 <= j <= n", j);
    return Support::from_predicate(Shape{plain(n)}, [=](const Point& x) {
        switch (kind) {
        case IntervalKind::projective:
            return x[0] >= j;
        case IntervalKind::injective:
            return x[0] <= j;
        case IntervalKind::simple:
            return x[0] == j;
        }
        return false;
    });
}

void check_commutativity_params(int m, int n, int p, int i, int j)
{
    require(n >= 1, "n must be >= 1", n);
    require(p >= 1, "p must be >= 1", p);
    require(1 <= i, "slot i must be >= 1", i);
    require(i < j, "commutativity needs i < j", j);
    require(j <= m, "commutativity needs j <= m", m);
}

void check_associativity_params(int m, int n, int p, int i, int j)
{
    require(p >= 1, "p must be >= 1", p);
    require(1 <= i && i <= m, "slot i must satisfy 1 <= i <= m", i);
    require(1 <= j && j <= n, "slot j must satisfy 1 <= j <= n", j);
}

void check_border_params(int m, int n)
{
    require(m >= 1, "m must be >= 1", m);
    require(n >= 1, "n must be >= 1", n);
}

void check_inner_params(int m, int n, int i)
{
    require(n >= 1, "n must be >= 1", n);
    require(2 <= i, "inner axiom needs i >= 2 (i = 1 is the border axiom)", i);
    require(i <= m, "slot i must satisfy i <= m", i);
}

Support reference_commutativity_set(int m, int n, int p, int i, int j)
{
    check_commutativity_params(m, n, p, i, j);
    return Support::from_predicate(composite_shape(m, n, p), [=](const Point& x) {
        const int g = x[0], mu = x[1], nu = x[2], pi = x[3];
        return (mu <= i - 1 && g <= mu) || (mu == i && g <= i + nu - 1)
            || (i + 1 <= mu && mu <= j - 1 && g <= mu + n - 1) || (mu == j && g <= j + n + pi - 2)
            || (j + 1 <= mu && g <= mu + n + p - 2);
    });
}

Support reference_associativity_set(int m, int n, int p, int i, int j)
{
    check_associativity_params(m, n, p, i, j);
    return Support::from_predicate(composite_shape(m, n, p), [=](const Point& x) {
        const int g = x[0], mu = x[1], nu = x[2], pi = x[3];
        return (mu <= i - 1 && g <= mu) || (mu == i && nu <= j - 1 && g <= i + nu - 1)
            || (mu == i && nu == j && g <= i + j + pi - 2)
            || (mu == i && j + 1 <= nu && g <= i + nu + p - 2) || (i + 1 <= mu && g <= mu + n + p - 2);
    });
}

Support border_gamma_reversal_set(int m, int n)
{
    check_border_params(m, n);
    return Support::from_predicate(s_shape(m, n), [=](const Point& x) {
        const int g = x[0], mu = x[1], nu = x[2];
        return (mu == 1 && g >= nu) || g >= mu + n - 1;
    });
}

Support border_first_reversal_set(int m, int n)
{
    check_border_params(m, n);
    // Axis 1 has length n, axis 2 has length m.
    return Support::from_predicate(s_shape(n, m), [=](const Point& x) {
        const int g = x[0], len_n = x[1], len_m = x[2];
        return (len_m == 1 && g <= len_n) || (len_n == n && g >= n + len_m - 1);
    });
}

Support inner_gamma_reversal_set(int m, int n, int i)
{
    check_inner_params(m, n, i);
    return Support::from_predicate(s_shape(m, n), [=](const Point& x) {
        const int g = x[0], mu = x[1], nu = x[2];
        return (mu <= i - 1 && g >= mu) || (mu == i && g >= i + nu - 1)
            || (i + 1 <= mu && g >= mu + n - 1);
    });
}

Support inner_mu_reversal_set(int m, int n, int i)
{
    check_inner_params(m, n, i);
    return Support::from_predicate(s_shape(m, n), [=](const Point& x) {
        const int g = x[0], mu = x[1], nu = x[2];
        const bool middle = i <= g && g <= i + n - 2;
        return (g <= i - 1 && g >= mu) || (middle && g <= i + nu - 2 && i - 1 >= mu)
            || (middle && i - 1 + nu <= g && i >= mu) || (i + n - 1 <= g && g - n + 1 >= mu);
    });
}

std::vector<Contraction> commutativity_contractions(int m, int n, int p, int i, int j)
{
    check_commutativity_params(m, n, p, i, j);
    return {
        // M_{m+p-1;i}^n over A_{m+p-1} with M_{m;j}^p: (gamma, nu, mu, pi).
        {s_support(m + p - 1, i, n), 1, s_support(m, j, p), 0, {0, 2, 1, 3}},
        // M_{m+n-1;j+n-1}^p over A_{m+n-1} with M_{m;i}^n: (gamma, pi, mu, nu).
        {s_support(m + n - 1, j + n - 1, p), 1, s_support(m, i, n), 0, {0, 2, 3, 1}},
    };
}

std::vector<Contraction> associativity_contractions(int m, int n, int p, int i, int j)
{
    check_associativity_params(m, n, p, i, j);
    return {
        // M_{m;i}^{n+p-1} over A_{n+p-1} with M_{n;j}^p: (gamma, mu, nu, pi).
        {s_support(m, i, n + p - 1), 2, s_support(n, j, p), 0, {0, 1, 2, 3}},
        // M_{m+n-1;j+i-1}^p over A_{m+n-1} with M_{m;i}^n: (gamma, pi, mu, nu).
        {s_support(m + n - 1, j + i - 1, p), 1, s_support(m, i, n), 0, {0, 2, 3, 1}},
    };
}

Support evaluate(const Contraction& c)
{
    const Support raw = contract(c.left, c.left_axis, c.right, c.right_axis);
    return permute_axes(raw, std::span<const std::size_t>(c.to_canonical));
}

namespace {

Report verify_cooperad_axiom(const char* name, const std::vector<Contraction>& sides,
                             const Support& reference, FamilyParams fp)
{
    return timed([&] {
        Report report;
        report.verifier = name;
        report.params = {{"m", fp.m}, {"n", fp.n}, {"p", fp.p}, {"i", fp.i}, {"j", fp.j}};
        const Support lhs = evaluate(sides[0]);
        const Support rhs = evaluate(sides[1]);
        report.left_size = lhs.size();
        report.right_size = rhs.size();
        compare(report, "lhs-vs-rhs", lhs, rhs);
        compare(report, "lhs-vs-reference", lhs, reference);
        compare(report, "rhs-vs-reference", rhs, reference);
        return report;
    });
}

} // namespace

Report verify_commutativity(int m, int n, int p, int i, int j)
{
    return verify_cooperad_axiom("commutativity", commutativity_contractions(m, n, p, i, j),
                                 reference_commutativity_set(m, n, p, i, j), {m, n, p, i, j});
}

Report verify_associativity(int m, int n, int p, int i, int j)
{
    return verify_cooperad_axiom("associativity", associativity_contractions(m, n, p, i, j),
                                 reference_associativity_set(m, n, p, i, j), {m, n, p, i, j});
}

Report verify_border(int m, int n)
{
    check_border_params(m, n);
    return timed([&] {
        Report report;
        report.verifier = "border";
        report.params = {{"m", m}, {"n", n}};

        const Support lhs = fiber_reversal(s_support(m, 1, n), 0, ReversalMode::successor);
        // S_{n;n}^m is (gamma, length n, length m); reverse the length-m axis first.
        const Support swapped = s_support(n, n, m);
        const Support first = fiber_reversal(swapped, 2, reversal_mode_for(swapped.shape().axis(2)));
        const Support second = fiber_reversal(first, 1, reversal_mode_for(first.shape().axis(1)));
        const Support rhs = permute_axes(second, {0, 2, 1});

        report.left_size = lhs.size();
        report.right_size = rhs.size();
        compare(report, "lhs-vs-rhs", lhs, rhs);
        compare(report, "lhs-vs-display", lhs, border_gamma_reversal_set(m, n));
        compare(report, "intermediate-vs-display", first, border_first_reversal_set(m, n));
        return report;
    });
}

Report verify_inner(int m, int n, int i)
{
    check_inner_params(m, n, i);
    return timed([&] {
        Report report;
        report.verifier = "inner";
        report.params = {{"m", m}, {"n", n}, {"i", i}};

        const Support lhs = fiber_reversal(s_support(m, i, n), 0, ReversalMode::successor);
        const Support rhs = fiber_reversal(s_support(m, i - 1, n), 1, ReversalMode::predecessor);
        report.left_size = lhs.size();
        report.right_size = rhs.size();
        compare(report, "lhs-vs-rhs", lhs, rhs);
        compare(report, "lhs-vs-display", lhs, inner_gamma_reversal_set(m, n, i));
        compare(report, "rhs-vs-display", rhs, inner_mu_reversal_set(m, n, i));
        return report;
    });
}

} // namespace catdias
