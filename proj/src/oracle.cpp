#include "catdias/oracle.hpp"

#include "catdias/families.hpp"

namespace catdias {

K0Vector indicator(const Support& s)
{
    K0Vector out(s.shape().volume(), 0);
    for (std::size_t v = 0; v < out.size(); ++v)
        out[v] = s.contains_index(v) ? 1 : 0;
    return out;
}

bool is_prime(std::int64_t q)
{
    if (q < 2)
        return false;
    for (std::int64_t d = 2; d * d <= q; ++d)
        if (q % d == 0)
            return false;
    return true;
}

PrimeField::PrimeField(std::int64_t modulus) : q_(modulus)
{
    if (!is_prime(q_))
        throw ParameterError(fmt::format("modulus {} is not prime", q_));
    if (q_ > (std::int64_t{1} << 31))
        throw ParameterError(fmt::format("modulus {} exceeds 2^31", q_));
}

std::string PrimeField::name() const { return fmt::format("GF({})", q_); }

PrimeField::Element PrimeField::inv(Element a) const
{
    if (a == 0)
        throw ParameterError("division by zero");
    // Fermat: a^(q-2).
    Element result = 1, base = a;
    for (std::int64_t e = q_ - 2; e > 0; e >>= 1) {
        if (e & 1)
            result = mul(result, base);
        base = mul(base, base);
    }
    return result;
}

RationalField::Element RationalField::inv(const Element& a) const
{
    if (sgn(a) == 0)
        throw ParameterError("division by zero");
    return 1 / a;
}

std::string FieldConfig::name() const
{
    return kind == Kind::rational ? std::string("QQ") : fmt::format("GF({})", modulus);
}

namespace {

template <class Field>
QuiverModule<Field> permute_module(const QuiverModule<Field>& module, const std::vector<std::size_t>& perm)
{
    const Shape& shape = module.shape();
    std::vector<Axis> axes;
    for (std::size_t k : perm)
        axes.push_back(shape.axis(k));
    const Shape target(std::move(axes));
    std::vector<std::size_t> old_of_new(target.volume());
    std::vector<std::size_t> dims(target.volume());
    for (std::size_t w = 0; w < target.volume(); ++w) {
        const Point q = target.point_at(w);
        Point p(q.size());
        for (std::size_t k = 0; k < perm.size(); ++k)
            p[perm[k]] = q[k];
        old_of_new[w] = shape.index_of(p);
        dims[w] = module.dim(old_of_new[w]);
    }
    QuiverModule<Field> out(module.field(), target, std::move(dims));
    for (std::size_t w = 0; w < target.volume(); ++w)
        for (std::size_t k = 0; k < perm.size(); ++k)
            if (out.has_arrow(w, k))
                out.set_arrow(w, k, module.arrow(old_of_new[w], perm[k]));
    return out;
}

template <class Field>
QuiverModule<Field> tensor_permuted(const Support& left, std::size_t left_axis, const Support& right,
                                    std::size_t right_axis, const std::vector<std::size_t>& perm, const Field& k)
{
    const auto t = tensor_over(standard_module(left, k), left_axis, standard_module(right, k), right_axis);
    return permute_module(t, perm);
}

} // namespace

K0Vector tensor_dimensions(const Support& left, std::size_t left_axis, const Support& right,
                           std::size_t right_axis, const std::vector<std::size_t>& perm, const FieldConfig& field)
{
    return with_field(field, [&](const auto& k) {
        return dimension_vector(tensor_permuted(left, left_axis, right, right_axis, perm, k));
    });
}

Report verify_tensor(const std::string& name, std::vector<std::pair<std::string, int>> params,
                     const Support& left, std::size_t left_axis, const Support& right, std::size_t right_axis,
                     const std::vector<std::size_t>& perm, const Support& expected, const FieldConfig& field)
{
    return timed([&] {
        Report report;
        report.verifier = name;
        report.params = std::move(params);
        if (field.kind == FieldConfig::Kind::prime)
            report.params.emplace_back("q", static_cast<int>(field.modulus));
        with_field(field, [&](const auto& k) {
            const auto t = tensor_permuted(left, left_axis, right, right_axis, perm, k);
            const K0Vector dims = dimension_vector(t);
            const K0Vector want = indicator(expected);
            std::size_t total = 0;
            for (std::size_t v = 0; v < dims.size(); ++v) {
                total += static_cast<std::size_t>(dims[v]);
                if (dims[v] != want[v]) {
                    Point p = expected.shape().point_at(v);
                    p.push_back(static_cast<int>(dims[v]));
                    report.fail("dimension", std::move(p));
                }
            }
            report.left_size = total;
            report.right_size = expected.size();
            for (const auto& bad : check_relations(t))
                report.fail("relations", bad.base);
            if (report.pass() && !iso_to_standard(t, expected))
                report.fail("not-standard");
        });
        return report;
    });
}

Report verify_nakayama_gamma(int m, int i, int n, const FieldConfig& field)
{
    const Support s = s_support(m, i, n);
    return verify_tensor("oracle-nakayama-gamma", {{"m", m}, {"i", i}, {"n", n}}, n_support(m + n - 1), 1, s, 0,
                         {0, 1, 2}, fiber_reversal(s, 0, ReversalMode::successor), field);
}

Report verify_nakayama_mu(int m, int i, int n, const FieldConfig& field)
{
    const Support s = s_support(m, i, n);
    // Result axes are (gamma, nu, mu).
    return verify_tensor("oracle-nakayama-mu", {{"m", m}, {"i", i}, {"n", n}}, s, 1, n_support(m), 0, {0, 2, 1},
                         fiber_reversal(s, 1, ReversalMode::predecessor), field);
}

namespace {

std::vector<Report> verify_contractions(const char* name, const std::vector<Contraction>& sides, FamilyParams fp,
                                        const FieldConfig& field)
{
    std::vector<Report> out;
    for (std::size_t side = 0; side < sides.size(); ++side) {
        const auto& c = sides[side];
        out.push_back(verify_tensor(name,
                                    {{"m", fp.m}, {"n", fp.n}, {"p", fp.p}, {"i", fp.i}, {"j", fp.j},
                                     {"side", static_cast<int>(side)}},
                                    c.left, c.left_axis, c.right, c.right_axis, c.to_canonical, evaluate(c), field));
    }
    return out;
}

} // namespace

std::vector<Report> verify_commutativity_oracle(int m, int n, int p, int i, int j, const FieldConfig& field)
{
    return verify_contractions("oracle-commutativity", commutativity_contractions(m, n, p, i, j), {m, n, p, i, j},
                               field);
}

std::vector<Report> verify_associativity_oracle(int m, int n, int p, int i, int j, const FieldConfig& field)
{
    return verify_contractions("oracle-associativity", associativity_contractions(m, n, p, i, j), {m, n, p, i, j},
                               field);
}

} // namespace catdias
