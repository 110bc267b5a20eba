#include "catdias/error.hpp"
#include "catdias/families.hpp"
#include "catdias/oracle.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace catdias;

namespace {

const FieldConfig prime_field{};
const FieldConfig rational_field{FieldConfig::Kind::rational};

} // namespace

TEST_CASE("fields")
{
    CHECK(is_prime(32003));
    CHECK(is_prime(2));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(32001));
    CHECK_THROWS_AS(PrimeField(32001), ParameterError);

    const PrimeField k(7);
    for (std::int64_t a = 1; a < 7; ++a)
        CHECK(k.mul(a, k.inv(a)) == 1);
    CHECK(k.from_int(-1) == 6);
    CHECK_THROWS(k.inv(0));

    const RationalField q;
    CHECK(q.mul(q.from_int(3), q.inv(q.from_int(3))) == 1);
    CHECK_THROWS(q.inv(q.zero()));

    CHECK(prime_field.name() == "GF(32003)");
    CHECK(rational_field.name() == "QQ");
}

TEST_CASE("row reducer")
{
    const PrimeField k(5);
    RowReducer<PrimeField> r(k, 3);
    CHECK(r.insert({1, 2, 0}));
    CHECK(r.insert({2, 4, 1}));
    CHECK_FALSE(r.insert({3, 1, 4}));
    CHECK(r.rank() == 2);
    CHECK(r.free_columns() == std::vector<std::size_t>{1});
    std::vector<std::int64_t> v{1, 2, 3};
    r.reduce(v);
    CHECK(v == std::vector<std::int64_t>{0, 0, 0});
}

TEST_CASE("standard_module examples")
{
    const PrimeField k;
    const auto n2 = standard_module(n_support(2), k);
    CHECK(n2.dims() == std::vector<std::size_t>{1, 0, 1, 1});
    // (2,1) -> (2,2) along the plain axis and (2,1) -> (1,1) along the op axis.
    CHECK(n2.arrow(2, 1) == identity_matrix(k, 1));
    CHECK(n2.arrow(0, 0) == identity_matrix(k, 1));
    CHECK(n2.arrow_source(0, 0) == 2);
    CHECK(n2.arrow_target(0, 0) == 0);
    CHECK(check_relations(n2).empty());

    const auto simple = standard_module(interval_support(4, IntervalKind::simple, 2), k);
    CHECK(simple.dims() == std::vector<std::size_t>{0, 1, 0, 0});
    for (std::size_t v = 0; v < 3; ++v) {
        const auto& a = simple.arrow(v, 0);
        for (std::size_t r = 0; r < a.rows(); ++r)
            for (std::size_t c = 0; c < a.cols(); ++c)
                CHECK(k.is_zero(a(r, c)));
    }

    CHECK_THROWS_AS(standard_module(make_support(Shape{plain(2), plain(2)}, {{1, 1}, {2, 1}, {2, 2}}), k),
                    StandardnessError);
}

TEST_CASE("check_relations finds a scaled square")
{
    const PrimeField k;
    const Shape sq{plain(2), plain(2)};
    auto module = standard_module(Support::from_predicate(sq, [](const Point&) { return true; }), k);
    CHECK(check_relations(module).empty());
    auto two = identity_matrix(k, 1);
    two(0, 0) = 2;
    module.set_arrow(0, 0, two);
    const auto bad = check_relations(module);
    REQUIRE(bad.size() == 1);
    CHECK(bad[0].base == Point{1, 1});
    CHECK_THROWS_AS(module.set_arrow(1, 1, two), BoundsError);
    CHECK_THROWS_AS(module.set_arrow(0, 0, identity_matrix(k, 2)), ParameterError);
}

TEST_CASE("dimension_vector and iso_to_standard")
{
    const PrimeField k;
    const auto p2 = interval_support(5, IntervalKind::projective, 2);
    auto m = standard_module(p2, k);
    CHECK(dimension_vector(m) == K0Vector{0, 1, 1, 1, 1});
    CHECK(iso_to_standard(m, p2));

    // Nonzero scalars are fine, a zero arrow is not.
    auto scaled = m;
    auto three = identity_matrix(k, 1);
    three(0, 0) = 3;
    scaled.set_arrow(1, 0, three);
    CHECK(iso_to_standard(scaled, p2));
    auto broken = m;
    broken.set_arrow(2, 0, zero_matrix(k, 1, 1));
    CHECK_FALSE(iso_to_standard(broken, p2));

    CHECK_FALSE(iso_to_standard(m, interval_support(5, IntervalKind::projective, 3)));

    const auto s = s_support(3, 2, 2);
    CHECK(iso_to_standard(standard_module(s, k), s));
}

TEST_CASE("non-tree edge with an inconsistent scalar is rejected")
{
    // The square (1,1),(1,2),(2,1),(2,2) with three identity arrows and one
    // arrow equal to 2: a spanning tree can absorb any three, not all four.
    const PrimeField k;
    const Shape sq{plain(2), plain(2)};
    const auto full = Support::from_predicate(sq, [](const Point&) { return true; });
    auto m = standard_module(full, k);
    auto two = identity_matrix(k, 1);
    two(0, 0) = 2;
    m.set_arrow(2, 1, two);
    CHECK_FALSE(iso_to_standard(m, full));
}

TEST_CASE("tensor_over examples")
{
    const RationalField k;
    for (int m = 1; m <= 3; ++m)
        for (int j = 1; j <= m; ++j)
            for (int n = 1; n <= 3; ++n) {
                const int len = m + n - 1;
                const auto regular = Support::from_predicate(Shape{op(len), plain(len)},
                                                             [](const Point& p) { return p[0] <= p[1]; });
                const auto s = s_support(m, j, n);
                const auto t = tensor_over(standard_module(regular, k), 1, standard_module(s, k), 0);
                CHECK(dimension_vector(t) == indicator(s));
                CHECK(check_relations(t).empty());
                CHECK(iso_to_standard(t, s));
            }

    const auto s = s_support(2, 1, 2);
    for (int j = 1; j <= 3; ++j) {
        const auto pj = interval_support(3, IntervalKind::projective, j);
        const auto t = tensor_over(standard_module(pj, k), 0, standard_module(s, k), 0);
        const auto expected = oracle::naive_contract(pj, 0, s, 0);
        CHECK(dimension_vector(t) == indicator(expected));
        CHECK(iso_to_standard(t, expected));
    }

    const auto t = tensor_over(standard_module(n_support(3), k), 1, standard_module(s, k), 0);
    const auto reversed = oracle::naive_reversal(s, 0, false);
    CHECK(dimension_vector(t) == indicator(reversed));
    CHECK(iso_to_standard(t, reversed));
}

TEST_CASE("tensor_over errors")
{
    const PrimeField k;
    const auto s = standard_module(s_support(2, 1, 2), k);
    const auto p4 = standard_module(interval_support(4, IntervalKind::projective, 1), k);
    CHECK_THROWS_AS(tensor_over(p4, 0, s, 0), ParameterError);
    CHECK_THROWS_AS(tensor_over(s, 0, s, 0), ParameterError);
    const auto other = standard_module(interval_support(3, IntervalKind::projective, 1), PrimeField(7));
    CHECK_THROWS_AS(tensor_over(other, 0, s, 0), ParameterError);
}

TEST_CASE("tensor of a non-standard-looking input picks up the right dimensions")
{
    // Two copies of the field at one vertex: the tensor product with the
    // regular module keeps the dimension.
    const PrimeField k;
    QuiverModule<PrimeField> wide(k, Shape{op(2), plain(2)}, {2, 2, 0, 2});
    wide.set_arrow(0, 1, identity_matrix(k, 2));
    wide.set_arrow(1, 0, identity_matrix(k, 2));
    REQUIRE(check_relations(wide).empty());
    const auto regular = standard_module(
        Support::from_predicate(Shape{op(2), plain(2)}, [](const Point& p) { return p[0] <= p[1]; }), k);
    const auto t = tensor_over(regular, 1, wide, 0);
    CHECK(t.dims() == wide.dims());
    CHECK(check_relations(t).empty());
}

TEST_CASE("oracle reports agree with the support calculus over both fields")
{
    for (const auto& field : {prime_field, rational_field})
        for (int m = 1; m <= 2; ++m)
            for (int n = 1; n <= 2; ++n)
                for (int i = 1; i <= m; ++i) {
                    CHECK(verify_nakayama_gamma(m, i, n, field).pass());
                    CHECK(verify_nakayama_mu(m, i, n, field).pass());
                    for (int p = 1; p <= 2; ++p) {
                        for (int j = i + 1; j <= m; ++j)
                            for (const auto& r : verify_commutativity_oracle(m, n, p, i, j, field))
                                CHECK(r.pass());
                        for (int j = 1; j <= n; ++j)
                            for (const auto& r : verify_associativity_oracle(m, n, p, i, j, field))
                                CHECK(r.pass());
                    }
                }
}

TEST_CASE("verify_tensor reports mismatches as witnesses")
{
    const auto s = s_support(2, 1, 2);
    const auto pj = interval_support(3, IntervalKind::projective, 2);
    const auto right = oracle::naive_contract(pj, 0, s, 0);
    const auto wrong = make_support(right.shape(), {{2, 2}});
    const auto good = verify_tensor("t", {}, pj, 0, s, 0, {0, 1}, right, prime_field);
    const auto bad = verify_tensor("t", {}, pj, 0, s, 0, {0, 1}, wrong, prime_field);
    CHECK(good.pass());
    CHECK_FALSE(bad.pass());
    CHECK(bad.witnesses.front().check == "dimension");
    CHECK(tensor_dimensions(pj, 0, s, 0, {0, 1}, prime_field) ==
          tensor_dimensions(pj, 0, s, 0, {0, 1}, rational_field));
}
