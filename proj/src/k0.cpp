#include "catdias/k0.hpp"

#include "catdias/error.hpp"
#include "catdias/families.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace catdias {

namespace {

void require(bool ok, const char* what, int value)
{
    if (!ok)
        throw ParameterError(fmt::format("{} (got {})", what, value));
}

void check_slot(int m, int i, int n)
{
    require(m >= 1, "m must be >= 1", m);
    require(n >= 1, "n must be >= 1", n);
    require(1 <= i && i <= m, "slot i must satisfy 1 <= i <= m", i);
}

K0Vector difference(const K0Vector& a, const K0Vector& b)
{
    K0Vector out(a.size());
    for (std::size_t t = 0; t < a.size(); ++t)
        out[t] = a[t] - b[t];
    return out;
}

std::vector<std::vector<int>> differing_rows(const K0Vector& a, const K0Vector& b, int column)
{
    std::vector<std::vector<int>> out;
    for (std::size_t t = 0; t < a.size(); ++t)
        if (a[t] != b[t])
            out.push_back({column, static_cast<int>(t + 1)});
    return out;
}

NamedMatrix named(std::string name, const K0Map& map)
{
    return {std::move(name), map.source, map.target, map.matrix};
}

} // namespace

std::string line_basis(int length) { return fmt::format("S[1..{}]", length); }

std::string product_basis(std::initializer_list<int> lengths)
{
    std::vector<std::string> parts;
    for (int l : lengths)
        parts.push_back(fmt::format("[1..{}]", l));
    return fmt::format("S[{}] row-major", fmt::join(parts, "x"));
}

K0Vector k0_class(const Support& s)
{
    for (std::size_t k = 0; k < s.shape().arity(); ++k)
        if (s.shape().axis(k).polarity != Polarity::plain)
            throw ParameterError(fmt::format("k0_class needs plain axes, axis {} is op", k));
    K0Vector out(s.shape().volume(), 0);
    for (std::size_t v = 0; v < out.size(); ++v)
        out[v] = s.contains_index(v) ? 1 : 0;
    return out;
}

K0Vector projective_class(int m, int n, int a, int b)
{
    K0Vector out(static_cast<std::size_t>(m * n), 0);
    for (int mu = a; mu <= m; ++mu)
        for (int nu = b; nu <= n; ++nu)
            out[static_cast<std::size_t>((mu - 1) * n + (nu - 1))] = 1;
    return out;
}

IntMatrix k0_of_bimodule(const Support& bimodule)
{
    const Shape& shape = bimodule.shape();
    if (shape.arity() < 2 || shape.axis(0).polarity != Polarity::op)
        throw ParameterError("bimodule support needs an op axis 0 and at least one more axis");
    const int len = shape.axis(0).length;
    const std::size_t rows = shape.volume() / static_cast<std::size_t>(len);
    std::vector<K0Vector> proj(static_cast<std::size_t>(len) + 1, K0Vector(rows, 0));
    for (int g = 1; g <= len; ++g)
        proj[static_cast<std::size_t>(g - 1)] =
            k0_class(contract(interval_support(len, IntervalKind::projective, g), 0, bimodule, 0));
    IntMatrix out(rows, static_cast<std::size_t>(len));
    for (int g = 1; g <= len; ++g)
        out.set_column(static_cast<std::size_t>(g - 1),
                       difference(proj[static_cast<std::size_t>(g - 1)], proj[static_cast<std::size_t>(g)]));
    return out;
}

K0Map nabla_k0(int m, int i, int n)
{
    check_slot(m, i, n);
    return {line_basis(m + n - 1), product_basis({m, n}), k0_of_bimodule(s_support(m, i, n))};
}

K0Vector nabla_projective_formula(int m, int i, int n, int j)
{
    check_slot(m, i, n);
    require(1 <= j && j <= m + n - 1, "vertex j must satisfy 1 <= j <= m+n-1", j);
    if (j <= i)
        return projective_class(m, n, j, 1);
    if (j <= i + n - 1) {
        K0Vector out = projective_class(m, n, i + 1, 1);
        const K0Vector plus = projective_class(m, n, i, j - i + 1);
        const K0Vector minus = projective_class(m, n, i + 1, j - i + 1);
        for (std::size_t t = 0; t < out.size(); ++t)
            out[t] += plus[t] - minus[t];
        return out;
    }
    return projective_class(m, n, j - n + 1, 1);
}

K0Vector nabla_simple_formula(int m, int i, int n, int j)
{
    check_slot(m, i, n);
    require(1 <= j && j <= m + n - 1, "vertex j must satisfy 1 <= j <= m+n-1", j);
    K0Vector out(static_cast<std::size_t>(m * n), 0);
    auto at = [&](int mu, int nu) -> std::int64_t& { return out[static_cast<std::size_t>((mu - 1) * n + (nu - 1))]; };
    if (j <= i - 1) {
        for (int k = 1; k <= n; ++k)
            at(j, k) += 1;
    } else if (j <= i + n - 1) {
        at(i, j - i + 1) += 1;
    } else {
        for (int k = 1; k <= n; ++k)
            at(j - n + 1, k) += 1;
    }
    return out;
}

Report verify_nabla_formulas(int m, int i, int n)
{
    check_slot(m, i, n);
    return timed([&] {
        Report report;
        report.verifier = "nabla-formulas";
        report.params = {{"m", m}, {"i", i}, {"n", n}};
        const Support bimodule = s_support(m, i, n);
        const IntMatrix nabla = nabla_k0(m, i, n).matrix;
        const int len = m + n - 1;
        for (int j = 1; j <= len; ++j) {
            const K0Vector proj
                = k0_class(contract(interval_support(len, IntervalKind::projective, j), 0, bimodule, 0));
            report.fail_all("projective", differing_rows(proj, nabla_projective_formula(m, i, n, j), j));
            report.fail_all("simple",
                differing_rows(nabla.column(static_cast<std::size_t>(j - 1)), nabla_simple_formula(m, i, n, j), j));
        }
        report.left_size = report.right_size = static_cast<std::size_t>(len);
        return report;
    });
}

int dias_compose(int m, int i, int n, int j, int k)
{
    check_slot(m, i, n);
    require(1 <= j && j <= m, "basis index j must satisfy 1 <= j <= m", j);
    require(1 <= k && k <= n, "basis index k must satisfy 1 <= k <= n", k);
    if (i > j)
        return j;
    if (i == j)
        return i + k - 1;
    return j + n - 1;
}

IntMatrix dias_compose_matrix(int m, int i, int n)
{
    check_slot(m, i, n);
    IntMatrix out(static_cast<std::size_t>(m + n - 1), static_cast<std::size_t>(m * n));
    for (int j = 1; j <= m; ++j)
        for (int k = 1; k <= n; ++k)
            out(static_cast<std::size_t>(dias_compose(m, i, n, j, k) - 1), static_cast<std::size_t>((j - 1) * n + (k - 1))) = 1;
    return out;
}

Report duality_check(int m, int i, int n)
{
    check_slot(m, i, n);
    return timed([&] {
        Report report;
        report.verifier = "duality";
        report.params = {{"m", m}, {"i", i}, {"n", n}};
        const K0Map nabla = nabla_k0(m, i, n);
        const IntMatrix compose = dias_compose_matrix(m, i, n);
        report.fail_all("transpose-vs-compose", differing_entries(nabla.matrix.transpose(), compose));
        report.left_size = nabla.matrix.rows() * nabla.matrix.cols();
        report.right_size = compose.rows() * compose.cols();
        report.matrices.push_back(named("nabla", nabla));
        report.matrices.push_back(
            {"compose", product_basis({m, n}) + " dual", line_basis(m + n - 1) + " dual", compose});
        return report;
    });
}

K0Map nu_k0(int n)
{
    require(n >= 1, "n must be >= 1", n);
    const std::size_t sz = static_cast<std::size_t>(n);
    // Columns [P_j] = [j, n] and [I_j] = [1, j].
    IntMatrix proj(sz, sz), inj(sz, sz);
    for (std::size_t j = 0; j < sz; ++j)
        for (std::size_t r = 0; r < sz; ++r) {
            proj(r, j) = r >= j ? 1 : 0;
            inj(r, j) = r <= j ? 1 : 0;
        }
    // proj is unit lower triangular; invert by forward substitution.
    IntMatrix proj_inv(sz, sz);
    for (std::size_t c = 0; c < sz; ++c)
        for (std::size_t r = 0; r < sz; ++r) {
            std::int64_t v = r == c ? 1 : 0;
            for (std::size_t t = 0; t < r; ++t)
                v -= proj(r, t) * proj_inv(t, c);
            proj_inv(r, c) = v;
        }
    return {line_basis(n), line_basis(n), inj * proj_inv};
}

K0Map tau_k0(int n)
{
    K0Map nu = nu_k0(n);
    nu.matrix = -nu.matrix;
    return nu;
}

K0Map flip_k0(int m, int n)
{
    require(m >= 1, "m must be >= 1", m);
    require(n >= 1, "n must be >= 1", n);
    IntMatrix out(static_cast<std::size_t>(m * n), static_cast<std::size_t>(m * n));
    for (int mu = 1; mu <= m; ++mu)
        for (int nu = 1; nu <= n; ++nu)
            out(static_cast<std::size_t>((nu - 1) * m + (mu - 1)), static_cast<std::size_t>((mu - 1) * n + (nu - 1))) = 1;
    return {product_basis({m, n}), product_basis({n, m}), out};
}

K0Map dias_tau(int n)
{
    const K0Map tau = tau_k0(n);
    return {fmt::format("Dias({}) e-basis", n), fmt::format("Dias({}) e-basis", n), tau.matrix.transpose()};
}

unsigned matrix_order(const IntMatrix& a, unsigned max_power)
{
    const IntMatrix id = IntMatrix::identity(a.rows());
    IntMatrix acc = a;
    for (unsigned k = 1; k <= max_power; ++k) {
        if (acc == id)
            return k;
        acc = acc * a;
    }
    return 0;
}

Report verify_tau_order(int n)
{
    require(n >= 1, "n must be >= 1", n);
    return timed([&] {
        Report report;
        report.verifier = "tau-order";
        report.params = {{"n", n}};
        const unsigned want = static_cast<unsigned>(n) + 1;
        const unsigned tau = matrix_order(tau_k0(n).matrix, want);
        const unsigned dual = matrix_order(dias_tau(n).matrix, want);
        if (tau != want)
            report.fail("tau-order", {static_cast<int>(tau)});
        if (dual != want)
            report.fail("dias-tau-order", {static_cast<int>(dual)});
        report.left_size = tau;
        report.right_size = dual;
        report.matrices.push_back(named("tau", tau_k0(n)));
        return report;
    });
}

Report verify_border_k0(int m, int n)
{
    check_border_params(m, n);
    return timed([&] {
        Report report;
        report.verifier = "border-k0";
        report.params = {{"m", m}, {"n", n}};
        const IntMatrix left_nabla = nabla_k0(m, 1, n).matrix;
        const IntMatrix right_nabla = nabla_k0(n, n, m).matrix;
        const IntMatrix flip = flip_k0(n, m).matrix;

        const IntMatrix nu_lhs = left_nabla * nu_k0(m + n - 1).matrix;
        const IntMatrix nu_rhs = flip * kronecker(nu_k0(n).matrix, nu_k0(m).matrix) * right_nabla;
        report.fail_all("nu-form", differing_entries(nu_lhs, nu_rhs));

        // Shift on the product category contributes a single -1.
        const IntMatrix tau_lhs = left_nabla * tau_k0(m + n - 1).matrix;
        const IntMatrix tau_rhs = -(flip * kronecker(tau_k0(n).matrix, tau_k0(m).matrix) * right_nabla);
        report.fail_all("tau-form", differing_entries(tau_lhs, tau_rhs));

        report.left_size = nu_lhs.rows() * nu_lhs.cols();
        report.right_size = nu_rhs.rows() * nu_rhs.cols();
        const std::string src = line_basis(m + n - 1), tgt = product_basis({m, n});
        report.matrices.push_back({"nu-lhs", src, tgt, nu_lhs});
        report.matrices.push_back({"nu-rhs", src, tgt, nu_rhs});
        return report;
    });
}

Report verify_inner_k0(int m, int n, int i)
{
    check_inner_params(m, n, i);
    return timed([&] {
        Report report;
        report.verifier = "inner-k0";
        report.params = {{"m", m}, {"n", n}, {"i", i}};
        const IntMatrix upper = nabla_k0(m, i, n).matrix;
        const IntMatrix lower = nabla_k0(m, i - 1, n).matrix;
        const IntMatrix id_n = IntMatrix::identity(static_cast<std::size_t>(n));

        const IntMatrix nu_lhs = upper * nu_k0(m + n - 1).matrix;
        const IntMatrix nu_rhs = kronecker(nu_k0(m).matrix, id_n) * lower;
        report.fail_all("nu-form", differing_entries(nu_lhs, nu_rhs));

        const IntMatrix tau_lhs = upper * tau_k0(m + n - 1).matrix;
        const IntMatrix tau_rhs = kronecker(tau_k0(m).matrix, id_n) * lower;
        report.fail_all("tau-form", differing_entries(tau_lhs, tau_rhs));

        report.left_size = nu_lhs.rows() * nu_lhs.cols();
        report.right_size = nu_rhs.rows() * nu_rhs.cols();
        const std::string src = line_basis(m + n - 1), tgt = product_basis({m, n});
        report.matrices.push_back({"nu-lhs", src, tgt, nu_lhs});
        report.matrices.push_back({"nu-rhs", src, tgt, nu_rhs});
        return report;
    });
}

namespace {

// Column (a,b,c) row-major over lengths (m,n,p) of the 0/1 matrix sending
// e_a (x) e_b (x) e_c to e_{index(a,b,c)}.
template <class F>
IntMatrix basis_map(int m, int n, int p, int target, F&& index)
{
    IntMatrix out(static_cast<std::size_t>(target), static_cast<std::size_t>(m * n * p));
    for (int a = 1; a <= m; ++a)
        for (int b = 1; b <= n; ++b)
            for (int c = 1; c <= p; ++c)
                out(static_cast<std::size_t>(index(a, b, c) - 1),
                    static_cast<std::size_t>(((a - 1) * n + (b - 1)) * p + (c - 1))) = 1;
    return out;
}

} // namespace

Report dias_operad_axiom_check(int m, int n, int p, int i, int j)
{
    require(m >= 1 && n >= 1 && p >= 1, "arities must be >= 1", std::min({m, n, p}));
    const bool parallel = 1 <= i && i < j && j <= m;
    const bool nested = 1 <= i && i <= m && 1 <= j && j <= n;
    if (!parallel && !nested)
        throw ParameterError(fmt::format("no operad axiom applies to (m,n,p,i,j)=({},{},{},{},{})", m, n, p, i, j));
    return timed([&] {
        Report report;
        report.verifier = "dias-axioms";
        report.params = {{"m", m}, {"n", n}, {"p", p}, {"i", i}, {"j", j}};
        const int total = m + n + p - 2;
        const auto id = [](int k) { return IntMatrix::identity(static_cast<std::size_t>(k)); };

        if (parallel) {
            // (x o_j y) o_i z = (x o_i z) o_{j+n-1} y with x in Dias(m), z in Dias(n), y in Dias(p).
            for (int a = 1; a <= m; ++a)
                for (int b = 1; b <= n; ++b)
                    for (int c = 1; c <= p; ++c) {
                        const int lhs = dias_compose(m + p - 1, i, n, dias_compose(m, j, p, a, c), b);
                        const int rhs = dias_compose(m + n - 1, j + n - 1, p, dias_compose(m, i, n, a, b), c);
                        if (lhs != rhs)
                            report.fail("parallel-basis", {a, b, c});
                    }
            const IntMatrix k0_lhs = kronecker(id(m), flip_k0(p, n).matrix) * kronecker(nabla_k0(m, j, p).matrix, id(n))
                * nabla_k0(m + p - 1, i, n).matrix;
            const IntMatrix k0_rhs
                = kronecker(nabla_k0(m, i, n).matrix, id(p)) * nabla_k0(m + n - 1, j + n - 1, p).matrix;
            report.fail_all("parallel-k0", differing_entries(k0_lhs, k0_rhs));
            const IntMatrix dual = basis_map(m, n, p, total,
                [&](int a, int b, int c) { return dias_compose(m + p - 1, i, n, dias_compose(m, j, p, a, c), b); });
            report.fail_all("parallel-dual", differing_entries(k0_lhs.transpose(), dual));
            report.fail_all("parallel-support",
                differing_entries(k0_of_bimodule(reference_commutativity_set(m, n, p, i, j)), k0_lhs));
            report.left_size += k0_lhs.rows() * k0_lhs.cols();
            report.right_size += k0_rhs.rows() * k0_rhs.cols();
        }
        if (nested) {
            // x o_i (y o_j z) = (x o_i y) o_{i+j-1} z with x in Dias(m), y in Dias(n), z in Dias(p).
            for (int a = 1; a <= m; ++a)
                for (int b = 1; b <= n; ++b)
                    for (int c = 1; c <= p; ++c) {
                        const int lhs = dias_compose(m, i, n + p - 1, a, dias_compose(n, j, p, b, c));
                        const int rhs = dias_compose(m + n - 1, i + j - 1, p, dias_compose(m, i, n, a, b), c);
                        if (lhs != rhs)
                            report.fail("nested-basis", {a, b, c});
                    }
            const IntMatrix k0_lhs = kronecker(id(m), nabla_k0(n, j, p).matrix) * nabla_k0(m, i, n + p - 1).matrix;
            const IntMatrix k0_rhs
                = kronecker(nabla_k0(m, i, n).matrix, id(p)) * nabla_k0(m + n - 1, j + i - 1, p).matrix;
            report.fail_all("nested-k0", differing_entries(k0_lhs, k0_rhs));
            const IntMatrix dual = basis_map(m, n, p, total,
                [&](int a, int b, int c) { return dias_compose(m, i, n + p - 1, a, dias_compose(n, j, p, b, c)); });
            report.fail_all("nested-dual", differing_entries(k0_lhs.transpose(), dual));
            report.fail_all("nested-support",
                differing_entries(k0_of_bimodule(reference_associativity_set(m, n, p, i, j)), k0_lhs));
            report.left_size += k0_lhs.rows() * k0_lhs.cols();
            report.right_size += k0_rhs.rows() * k0_rhs.cols();
        }
        return report;
    });
}

} // namespace catdias
