// Acceptance suite: one PASS/FAIL line per criterion. Every criterion is an
// exact equality; the time limit is part of the criterion.

#include "catdias/error.hpp"
#include "catdias/families.hpp"
#include "catdias/k0.hpp"
#include "catdias/oracle.hpp"
#include "catdias/render.hpp"
#include "oracles.hpp"

#include <chrono>
#include <fmt/format.h>
#include <functional>
#include <string>

using namespace catdias;

namespace {

struct Outcome {
    bool ok = true;
    std::size_t cases = 0;
    std::string note;

    void expect(bool cond, const std::string& what)
    {
        ++cases;
        if (!cond && ok) {
            ok = false;
            note = what;
        }
    }
};

struct Criterion {
    std::string id;
    std::string title;
    double limit_s;
    std::function<Outcome()> run;
};

std::size_t count_char(const std::string& s, char c) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), c)); }

Outcome cooperad_commutativity()
{
    Outcome o;
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 5; ++n)
            for (int p = 1; p <= 5; ++p)
                for (int i = 1; i <= m; ++i)
                    for (int j = i + 1; j <= m; ++j) {
                        const auto tag = fmt::format("(m,n,p,i,j)=({},{},{},{},{})", m, n, p, i, j);
                        o.expect(verify_commutativity(m, n, p, i, j).pass(), tag);
                        const auto ref = reference_commutativity_set(m, n, p, i, j);
                        const auto lhs = oracle::naive_permute(
                            oracle::naive_contract(oracle::s_set(m + p - 1, i, n), 1, oracle::s_set(m, j, p), 0),
                            {0, 2, 1, 3});
                        o.expect(lhs == ref, tag + " brute force");
                    }
    return o;
}

Outcome cooperad_associativity()
{
    Outcome o;
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 5; ++n)
            for (int p = 1; p <= 5; ++p)
                for (int i = 1; i <= m; ++i)
                    for (int j = 1; j <= n; ++j) {
                        const auto tag = fmt::format("(m,n,p,i,j)=({},{},{},{},{})", m, n, p, i, j);
                        o.expect(verify_associativity(m, n, p, i, j).pass(), tag);
                        const auto ref = reference_associativity_set(m, n, p, i, j);
                        const auto lhs =
                            oracle::naive_contract(oracle::s_set(m, i, n + p - 1), 2, oracle::s_set(n, j, p), 0);
                        o.expect(lhs == ref, tag + " brute force");
                    }
    return o;
}

Outcome anticyclic_border()
{
    Outcome o;
    for (int m = 1; m <= 6; ++m)
        for (int n = 1; n <= 6; ++n) {
            const auto tag = fmt::format("(m,n)=({},{})", m, n);
            o.expect(verify_border(m, n).pass(), tag);
            const auto lhs = oracle::naive_reversal(oracle::s_set(m, 1, n), 0, false);
            const auto first = oracle::naive_reversal(oracle::s_set(n, n, m), 2, true);
            const auto rhs = oracle::naive_permute(oracle::naive_reversal(first, 1, true), {0, 2, 1});
            o.expect(lhs == border_gamma_reversal_set(m, n), tag + " first display");
            o.expect(first == border_first_reversal_set(m, n), tag + " second display");
            o.expect(lhs == rhs, tag + " brute force");
        }
    return o;
}

Outcome anticyclic_inner()
{
    Outcome o;
    for (int m = 2; m <= 6; ++m)
        for (int n = 1; n <= 6; ++n)
            for (int i = 2; i <= m; ++i) {
                const auto tag = fmt::format("(m,n,i)=({},{},{})", m, n, i);
                o.expect(verify_inner(m, n, i).pass(), tag);
                const auto g = oracle::naive_reversal(oracle::s_set(m, i, n), 0, false);
                const auto mu = oracle::naive_reversal(oracle::s_set(m, i - 1, n), 1, true);
                o.expect(g == inner_gamma_reversal_set(m, n, i), tag + " gamma display");
                o.expect(mu == inner_mu_reversal_set(m, n, i), tag + " mu display");
                o.expect(g == mu, tag + " brute force");
            }
    return o;
}

Outcome oracle_equivalence()
{
    Outcome o;
    const FieldConfig prime{};
    const FieldConfig rational{FieldConfig::Kind::rational};
    auto all_pass = [](const std::vector<Report>& rs) {
        return std::all_of(rs.begin(), rs.end(), [](const Report& r) { return r.pass(); });
    };
    auto same_dims = [&](const std::vector<Contraction>& cs) {
        for (const auto& c : cs)
            if (tensor_dimensions(c.left, c.left_axis, c.right, c.right_axis, c.to_canonical, prime) !=
                tensor_dimensions(c.left, c.left_axis, c.right, c.right_axis, c.to_canonical, rational))
                return false;
        return true;
    };
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n)
            for (int i = 1; i <= m; ++i) {
                for (const auto& f : {prime, rational}) {
                    const auto tag = fmt::format("(m,i,n)=({},{},{}) over {}", m, i, n, f.name());
                    o.expect(verify_nakayama_gamma(m, i, n, f).pass(), tag + " nakayama gamma");
                    o.expect(verify_nakayama_mu(m, i, n, f).pass(), tag + " nakayama mu");
                }
                for (int p = 1; p <= 3; ++p) {
                    for (int j = i + 1; j <= m; ++j) {
                        const auto tag = fmt::format("commutativity ({},{},{},{},{})", m, n, p, i, j);
                        for (const auto& f : {prime, rational})
                            o.expect(all_pass(verify_commutativity_oracle(m, n, p, i, j, f)), tag + " " + f.name());
                        o.expect(same_dims(commutativity_contractions(m, n, p, i, j)), tag + " field agreement");
                    }
                    for (int j = 1; j <= n; ++j) {
                        const auto tag = fmt::format("associativity ({},{},{},{},{})", m, n, p, i, j);
                        for (const auto& f : {prime, rational})
                            o.expect(all_pass(verify_associativity_oracle(m, n, p, i, j, f)), tag + " " + f.name());
                        o.expect(same_dims(associativity_contractions(m, n, p, i, j)), tag + " field agreement");
                    }
                }
            }
    return o;
}

Outcome k0_duality()
{
    Outcome o;
    const IntMatrix n212 = nabla_k0(2, 1, 2).matrix;
    o.expect(n212.column(0) == K0Vector{1, 0, 0, 0}, "[nabla S_1] of (2,1,2)");
    o.expect(n212.column(1) == K0Vector{0, 1, 0, 0}, "[nabla S_2] of (2,1,2)");
    o.expect(n212.column(2) == K0Vector{0, 0, 1, 1}, "[nabla S_3] of (2,1,2)");
    for (int m = 1; m <= 6; ++m)
        for (int i = 1; i <= m; ++i)
            for (int n = 1; n <= 6; ++n) {
                const auto tag = fmt::format("(m,i,n)=({},{},{})", m, i, n);
                o.expect(duality_check(m, i, n).pass(), tag);
                // Brute-force composition table from the three cases.
                IntMatrix comp(static_cast<std::size_t>(m + n - 1), static_cast<std::size_t>(m * n));
                for (int j = 1; j <= m; ++j)
                    for (int k = 1; k <= n; ++k) {
                        const int t = i > j ? j : i == j ? i + k - 1 : j + n - 1;
                        comp(static_cast<std::size_t>(t - 1), static_cast<std::size_t>((j - 1) * n + k - 1)) = 1;
                    }
                o.expect(nabla_k0(m, i, n).matrix.transpose() == comp, tag + " brute force");
            }
    return o;
}

Outcome nabla_projective_display()
{
    Outcome o;
    for (int m = 1; m <= 6; ++m)
        for (int i = 1; i <= m; ++i)
            for (int n = 1; n <= 6; ++n) {
                const auto s = s_support(m, i, n);
                const int len = m + n - 1;
                o.expect(verify_nabla_formulas(m, i, n).pass(), fmt::format("(m,i,n)=({},{},{})", m, i, n));
                for (int j = 1; j <= len; ++j) {
                    const K0Vector computed =
                        k0_class(contract(interval_support(len, IntervalKind::projective, j), 0, s, 0));
                    K0Vector display;
                    if (j <= i) {
                        display = oracle::projective(m, n, j, 1);
                    } else if (j <= i + n - 1) {
                        display = oracle::projective(m, n, i + 1, 1);
                        const auto plus = oracle::projective(m, n, i, j - i + 1);
                        const auto minus = oracle::projective(m, n, i + 1, j - i + 1);
                        for (std::size_t t = 0; t < display.size(); ++t)
                            display[t] += plus[t] - minus[t];
                    } else {
                        display = oracle::projective(m, n, j - n + 1, 1);
                    }
                    o.expect(computed == display, fmt::format("(m,i,n,j)=({},{},{},{})", m, i, n, j));
                }
            }
    return o;
}

Outcome anticyclic_k0()
{
    Outcome o;
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 5; ++n) {
            const auto border = verify_border_k0(m, n);
            o.expect(border.pass(), fmt::format("border (m,n)=({},{})", m, n));
            const IntMatrix nu_lhs = nabla_k0(m, 1, n).matrix * nu_k0(m + n - 1).matrix;
            const IntMatrix nu_rhs = flip_k0(n, m).matrix * kronecker(nu_k0(n).matrix, nu_k0(m).matrix) *
                nabla_k0(n, n, m).matrix;
            const IntMatrix tau_lhs = nabla_k0(m, 1, n).matrix * tau_k0(m + n - 1).matrix;
            const IntMatrix tau_rhs = -(flip_k0(n, m).matrix * kronecker(tau_k0(n).matrix, tau_k0(m).matrix) *
                                        nabla_k0(n, n, m).matrix);
            o.expect(nu_lhs == nu_rhs, fmt::format("border nu-form ({},{})", m, n));
            o.expect(tau_lhs == tau_rhs, fmt::format("border tau-form ({},{})", m, n));
            for (int i = 2; i <= m; ++i) {
                o.expect(verify_inner_k0(m, n, i).pass(), fmt::format("inner (m,n,i)=({},{},{})", m, n, i));
                const IntMatrix id_n = IntMatrix::identity(static_cast<std::size_t>(n));
                const IntMatrix l = nabla_k0(m, i, n).matrix * nu_k0(m + n - 1).matrix;
                const IntMatrix r = kronecker(nu_k0(m).matrix, id_n) * nabla_k0(m, i - 1, n).matrix;
                const IntMatrix tl = nabla_k0(m, i, n).matrix * tau_k0(m + n - 1).matrix;
                const IntMatrix tr = kronecker(tau_k0(m).matrix, id_n) * nabla_k0(m, i - 1, n).matrix;
                o.expect(l == r, fmt::format("inner nu-form ({},{},{})", m, n, i));
                o.expect(tl == tr, fmt::format("inner tau-form ({},{},{})", m, n, i));
            }
        }
    return o;
}

Outcome order_property()
{
    Outcome o;
    for (int n = 1; n <= 8; ++n) {
        const auto id = IntMatrix::identity(static_cast<std::size_t>(n));
        for (const auto& [name, a] : {std::pair{"tau", tau_k0(n).matrix}, std::pair{"dias tau", dias_tau(n).matrix}}) {
            o.expect(oracle::naive_power(a, static_cast<unsigned>(n + 1)) == id, fmt::format("{}({})^(n+1)", name, n));
            if (n >= 2)
                for (unsigned k = 1; k <= static_cast<unsigned>(n); ++k)
                    o.expect(!(oracle::naive_power(a, k) == id), fmt::format("{}({})^{} is the identity", name, n, k));
        }
        o.expect(verify_tau_order(n).pass(), fmt::format("verify_tau_order({})", n));
    }
    return o;
}

Outcome figures()
{
    Outcome o;
    const auto fig2 = s_support(6, 3, 4);
    const auto fig2_ascii = render_ascii(fig2);
    o.expect(fig2.size() == 126, "|S_{6;3}^4|");
    o.expect(count_char(fig2_ascii, '#') == 126, "filled cells of figure 2");
    o.expect(slice_count(fig2) == 4, "slices of figure 2");
    const auto fig1 = n_support(6);
    o.expect(fig1.size() == 21, "|N_6|");
    o.expect(count_char(render_ascii(fig1), '#') == 21, "filled cells of figure 1");

    std::vector<Support> others;
    const auto m446 = s_support(4, 4, 6);
    others.push_back(m446);
    others.push_back(fiber_reversal(m446, 2, ReversalMode::predecessor));
    others.push_back(permute_axes(fiber_reversal(others.back(), 1, ReversalMode::predecessor), {0, 2, 1}));
    const auto m614 = s_support(6, 1, 4);
    others.push_back(m614);
    others.push_back(fiber_reversal(m614, 0, ReversalMode::successor));
    const auto m847 = s_support(8, 4, 7);
    others.push_back(m847);
    others.push_back(fiber_reversal(m847, 0, ReversalMode::successor));
    others.push_back(fiber_reversal(s_support(8, 3, 7), 1, ReversalMode::predecessor));
    o.expect(others[2] == others[4], "figures 3 and 4 show the same final set");
    o.expect(others[6] == others[7], "figure 5 reversals agree");
    for (const auto& s : others) {
        const auto ascii = render_ascii(s);
        const auto svg = render_svg(s);
        o.expect(count_char(ascii, '#') == s.size(), "ascii cell count");
        o.expect(svg.find("</svg>") != std::string::npos, "svg document");
    }
    return o;
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {"AC1", "cooperad commutativity, n,p <= 5, i < j <= m <= 5", 120, cooperad_commutativity},
        {"AC2", "cooperad associativity, i <= m <= 5, j <= n <= 5, p <= 5", 120, cooperad_associativity},
        {"AC3", "anticyclic border axiom and intermediates, m,n <= 6", 30, anticyclic_border},
        {"AC4", "anticyclic inner axiom and intermediates, 2 <= i <= m <= 6, n <= 6", 30, anticyclic_inner},
        {"AC5", "module oracle vs support calculus, m,n,p <= 3, both fields", 120, oracle_equivalence},
        {"AC6", "nabla at K0 is dual to the Dias composition, m,n <= 6", 60, k0_duality},
        {"AC7", "[nabla P_j] inclusion-exclusion formula, m,n <= 6", 60, nabla_projective_display},
        {"AC8", "anticyclic identities at K0, nu-form and tau-form, m,n <= 5", 60, anticyclic_k0},
        {"AC9", "tau and dual tau have order exactly n+1, n <= 8", 60, order_property},
        {"AC10", "figure supports and renderings", 60, figures},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.note = fmt::format("exception: {}", e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs <= c.limit_s;
        const bool pass = o.ok && in_time;
        if (!pass)
            ++failed;
        std::string detail = fmt::format("{} checks, exact, {:.2f}s (limit {:.0f}s)", o.cases, secs, c.limit_s);
        if (!o.ok)
            detail += "; first failure: " + o.note;
        else if (!in_time)
            detail += "; over the time limit";
        fmt::print("{:<5} {} {}: {}\n", c.id, pass ? "PASS" : "FAIL", c.title, detail);
    }
    fmt::print("{} of {} criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
    return failed == 0 ? 0 : 1;
}
