#include "catdias/error.hpp"
#include "catdias/families.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace catdias;

TEST_CASE("s_support examples")
{
    const auto s = s_support(6, 3, 4);
    CHECK(s.shape() == Shape{op(9), plain(6), plain(4)});
    CHECK(s.size() == 126);
    CHECK(s.contains({4, 3, 2}));
    CHECK_FALSE(s.contains({4, 3, 1}));

    CHECK(s_support(1, 1, 1).points() == std::vector<Point>{{1, 1, 1}});

    for (int m = 1; m <= 5; ++m)
        for (int i = 1; i <= m; ++i) {
            const auto r = s_support(m, i, 1);
            CHECK(r == Support::from_predicate(r.shape(), [](const Point& p) { return p[0] <= p[1]; }));
        }

    CHECK_THROWS_AS(s_support(0, 1, 1), ParameterError);
    CHECK_THROWS_AS(s_support(3, 4, 1), ParameterError);
    CHECK_THROWS_AS(s_support(3, 0, 1), ParameterError);
    CHECK_THROWS_AS(s_support(3, 1, 0), ParameterError);
}

TEST_CASE("s_support matches the clause oracle and the alternative description")
{
    for (int m = 1; m <= 8; ++m)
        for (int i = 1; i <= m; ++i)
            for (int n = 1; n <= 8; ++n) {
                const auto s = s_support(m, i, n);
                REQUIRE(s == oracle::s_set(m, i, n));
                REQUIRE(s_support_alt(m, i, n) == s);
            }
    CHECK(s_support_alt(2, 1, 2).size() == 9);
}

TEST_CASE("n_support and interval_support")
{
    CHECK(n_support(6) == oracle::n_set(6));
    CHECK(n_support(6).size() == 21);
    CHECK(n_support(1).points() == std::vector<Point>{{1, 1}});
    CHECK(closure_check(n_support(5), 0, Sense::upward));
    CHECK(closure_check(n_support(5), 1, Sense::downward));
    CHECK_THROWS_AS(n_support(0), ParameterError);

    CHECK(interval_support(5, IntervalKind::projective, 2).points() == std::vector<Point>{{2}, {3}, {4}, {5}});
    CHECK(interval_support(5, IntervalKind::injective, 2).points() == std::vector<Point>{{1}, {2}});
    CHECK(interval_support(5, IntervalKind::simple, 5) == interval_support(5, IntervalKind::projective, 5));
    CHECK_THROWS_AS(interval_support(5, IntervalKind::simple, 6), ParameterError);
    CHECK_THROWS_AS(interval_support(5, IntervalKind::simple, 0), ParameterError);
}

TEST_CASE("reference sets")
{
    CHECK(reference_commutativity_set(2, 2, 2, 1, 2).size() == 20);
    CHECK(reference_associativity_set(2, 2, 2, 1, 1).size() == 25);
    CHECK_THROWS_AS(reference_commutativity_set(2, 2, 2, 2, 2), ParameterError);
    CHECK_THROWS_AS(reference_associativity_set(2, 2, 2, 1, 3), ParameterError);
}

TEST_CASE("reference sets equal brute-force contractions of clause-built supports")
{
    // Both sides of each axiom evaluated by existential projection on
    // oracle-built supports, then permuted to (gamma, mu, nu, pi).
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n)
            for (int p = 1; p <= 4; ++p) {
                for (int i = 1; i <= m; ++i)
                    for (int j = i + 1; j <= m; ++j) {
                        const auto lhs = oracle::naive_permute(
                            oracle::naive_contract(oracle::s_set(m + p - 1, i, n), 1, oracle::s_set(m, j, p), 0),
                            {0, 2, 1, 3});
                        const auto rhs = oracle::naive_permute(
                            oracle::naive_contract(oracle::s_set(m + n - 1, j + n - 1, p), 1,
                                                   oracle::s_set(m, i, n), 0),
                            {0, 2, 3, 1});
                        const auto ref = reference_commutativity_set(m, n, p, i, j);
                        CHECK(lhs == ref);
                        CHECK(rhs == ref);
                    }
                for (int i = 1; i <= m; ++i)
                    for (int j = 1; j <= n; ++j) {
                        const auto lhs = oracle::naive_contract(oracle::s_set(m, i, n + p - 1), 2,
                                                                oracle::s_set(n, j, p), 0);
                        const auto rhs = oracle::naive_permute(
                            oracle::naive_contract(oracle::s_set(m + n - 1, j + i - 1, p), 1,
                                                   oracle::s_set(m, i, n), 0),
                            {0, 2, 3, 1});
                        const auto ref = reference_associativity_set(m, n, p, i, j);
                        CHECK(lhs == ref);
                        CHECK(rhs == ref);
                    }
            }
}

TEST_CASE("the reference set distinguishes the wrong axis order")
{
    const auto sides = commutativity_contractions(3, 2, 2, 1, 2);
    Contraction wrong = sides[0];
    wrong.to_canonical = {0, 1, 2, 3};
    CHECK_FALSE(evaluate(wrong) == reference_commutativity_set(3, 2, 2, 1, 2));
}

TEST_CASE("cooperad verifiers")
{
    auto r = verify_commutativity(2, 2, 2, 1, 2);
    CHECK(r.pass());
    CHECK(r.left_size == 20);
    CHECK(r.right_size == 20);
    CHECK(verify_commutativity(5, 3, 2, 2, 4).pass());
    CHECK_THROWS_AS(verify_commutativity(3, 2, 2, 2, 2), ParameterError);
    CHECK_THROWS_AS(verify_commutativity(3, 2, 2, 3, 2), ParameterError);

    r = verify_associativity(2, 2, 2, 1, 1);
    CHECK(r.pass());
    CHECK(r.left_size == 25);
    CHECK(verify_associativity(4, 3, 2, 2, 3).pass());
    for (int n = 1; n <= 3; ++n)
        for (int p = 1; p <= 3; ++p)
            for (int j = 1; j <= n; ++j)
                CHECK(verify_associativity(1, n, p, 1, j).pass());
    CHECK_THROWS_AS(verify_associativity(2, 2, 2, 1, 3), ParameterError);
    CHECK_THROWS_AS(verify_associativity(2, 2, 0, 1, 1), ParameterError);
}

TEST_CASE("cooperad verifiers pass on the small sweep")
{
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n)
            for (int p = 1; p <= 4; ++p)
                for (int i = 1; i <= m; ++i) {
                    for (int j = i + 1; j <= m; ++j)
                        CHECK(verify_commutativity(m, n, p, i, j).pass());
                    for (int j = 1; j <= n; ++j)
                        CHECK(verify_associativity(m, n, p, i, j).pass());
                }
}

TEST_CASE("border verifier and its intermediate sets")
{
    auto r = verify_border(2, 2);
    CHECK(r.pass());
    CHECK(r.left_size == 7);
    r = verify_border(1, 1);
    CHECK(r.pass());
    CHECK(r.left_size == 1);
    CHECK(verify_border(4, 6).pass());
    CHECK(verify_border(6, 4).pass());
    CHECK_THROWS_AS(verify_border(0, 2), ParameterError);

    for (int m = 1; m <= 6; ++m)
        for (int n = 1; n <= 6; ++n) {
            const auto lhs = oracle::naive_reversal(oracle::s_set(m, 1, n), 0, false);
            CHECK(border_gamma_reversal_set(m, n) == lhs);
            // S_{n;n}^m on (gamma, n, m): reverse the length-m axis, then the
            // length-n axis, then swap the two.
            const auto first = oracle::naive_reversal(oracle::s_set(n, n, m), 2, true);
            CHECK(border_first_reversal_set(m, n) == first);
            const auto rhs = oracle::naive_permute(oracle::naive_reversal(first, 1, true), {0, 2, 1});
            CHECK(rhs == lhs);
        }
}

TEST_CASE("border at m = n: the other axis order also gives the identity")
{
    // With m = n both plain axes of S_{n;n}^m have the same length; reversing
    // them in the opposite order gives the same final set.
    for (int n = 1; n <= 6; ++n) {
        const auto s = s_support(n, n, n);
        const auto a = fiber_reversal(fiber_reversal(s, 2, ReversalMode::predecessor), 1, ReversalMode::predecessor);
        const auto b = fiber_reversal(fiber_reversal(s, 1, ReversalMode::predecessor), 2, ReversalMode::predecessor);
        CHECK(a == b);
        CHECK(permute_axes(a, {0, 2, 1}) == border_gamma_reversal_set(n, n));
    }
}

TEST_CASE("inner verifier and its intermediate sets")
{
    CHECK(verify_inner(8, 7, 4).pass());
    CHECK(verify_inner(2, 1, 2).pass());
    CHECK_THROWS_AS(verify_inner(3, 2, 1), ParameterError);
    CHECK_THROWS_AS(verify_inner(3, 2, 4), ParameterError);

    for (int m = 2; m <= 6; ++m)
        for (int n = 1; n <= 6; ++n)
            for (int i = 2; i <= m; ++i) {
                const auto g = oracle::naive_reversal(oracle::s_set(m, i, n), 0, false);
                const auto mu = oracle::naive_reversal(oracle::s_set(m, i - 1, n), 1, true);
                CHECK(inner_gamma_reversal_set(m, n, i) == g);
                CHECK(inner_mu_reversal_set(m, n, i) == mu);
                CHECK(g == mu);
                CHECK(verify_inner(m, n, i).pass());
            }
}

TEST_CASE("report witness semantics")
{
    Report r;
    CHECK(r.pass());
    r.fail("lhs-vs-rhs", {1, 2, 3});
    CHECK_FALSE(r.pass());
    CHECK(r.witnesses.front().point == std::vector<int>{1, 2, 3});
    const auto line = summary_line(r);
    CHECK(line.find("FAIL") != std::string::npos);
}
