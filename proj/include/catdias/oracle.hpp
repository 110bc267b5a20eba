#pragma once

// Explicit quiver modules over an exact field. This is the brute-force
// counterpart of the support calculus: modules are built from supports,
// tensored by linear algebra, and compared back.

#include "catdias/dense_matrix.hpp"
#include "catdias/error.hpp"
#include "catdias/field.hpp"
#include "catdias/int_matrix.hpp"
#include "catdias/report.hpp"
#include "catdias/support.hpp"

#include <deque>
#include <fmt/format.h>
#include <optional>
#include <string>
#include <vector>

namespace catdias {

// Representation of a product quiver with commutation relations. The arrow
// along axis k between vertex v and v + e_k is stored at the lower vertex v;
// it maps v -> v + e_k on plain axes and v + e_k -> v on op axes.
template <class Field>
class QuiverModule {
public:
    using Element = typename Field::Element;
    using Matrix = MatrixOver<Field>;

    QuiverModule(Field field, Shape shape, std::vector<std::size_t> dims)
        : field_(std::move(field)), shape_(std::move(shape)), dims_(std::move(dims))
    {
        if (dims_.size() != shape_.volume())
            throw ParameterError("one dimension per vertex required");
        arrows_.resize(shape_.volume() * shape_.arity());
        for (std::size_t v = 0; v < shape_.volume(); ++v)
            for (std::size_t k = 0; k < shape_.arity(); ++k)
                if (has_arrow(v, k))
                    arrows_[v * shape_.arity() + k] =
                        zero_matrix(field_, dims_[arrow_target(v, k)], dims_[arrow_source(v, k)]);
    }

    const Field& field() const { return field_; }
    const Shape& shape() const { return shape_; }
    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t dim(std::size_t vertex) const { return dims_[vertex]; }

    bool has_arrow(std::size_t vertex, std::size_t axis) const
    {
        const int coord = static_cast<int>(vertex / shape_.stride(axis)) % shape_.axis(axis).length;
        return coord + 1 < shape_.axis(axis).length;
    }
    std::size_t arrow_source(std::size_t vertex, std::size_t axis) const
    {
        return shape_.axis(axis).polarity == Polarity::plain ? vertex : vertex + shape_.stride(axis);
    }
    std::size_t arrow_target(std::size_t vertex, std::size_t axis) const
    {
        return shape_.axis(axis).polarity == Polarity::plain ? vertex + shape_.stride(axis) : vertex;
    }

    const Matrix& arrow(std::size_t vertex, std::size_t axis) const
    {
        check_arrow(vertex, axis);
        return arrows_[vertex * shape_.arity() + axis];
    }
    void set_arrow(std::size_t vertex, std::size_t axis, Matrix m)
    {
        check_arrow(vertex, axis);
        if (m.rows() != dims_[arrow_target(vertex, axis)] || m.cols() != dims_[arrow_source(vertex, axis)])
            throw ParameterError(fmt::format("arrow at vertex {} axis {} must be {}x{}", vertex, axis,
                                             dims_[arrow_target(vertex, axis)],
                                             dims_[arrow_source(vertex, axis)]));
        arrows_[vertex * shape_.arity() + axis] = std::move(m);
    }

private:
    void check_arrow(std::size_t vertex, std::size_t axis) const
    {
        shape_.check_axis(axis);
        if (vertex >= shape_.volume() || !has_arrow(vertex, axis))
            throw BoundsError(fmt::format("no arrow at vertex {} along axis {}", vertex, axis));
    }

    Field field_;
    Shape shape_;
    std::vector<std::size_t> dims_;
    std::vector<Matrix> arrows_;
};

// Copies of the field at each support vertex, identity maps between them.
template <class Field>
QuiverModule<Field> standard_module(const Support& s, const Field& k)
{
    const auto violations = validate_standard(s);
    if (!violations.empty())
        throw StandardnessError(fmt::format("support is not standard: {}", to_string(violations.front())));
    const Shape& shape = s.shape();
    std::vector<std::size_t> dims(shape.volume());
    for (std::size_t v = 0; v < shape.volume(); ++v)
        dims[v] = s.contains_index(v) ? 1 : 0;
    QuiverModule<Field> module(k, shape, std::move(dims));
    for (std::size_t v = 0; v < shape.volume(); ++v)
        for (std::size_t a = 0; a < shape.arity(); ++a)
            if (module.has_arrow(v, a) && s.contains_index(v) && s.contains_index(v + shape.stride(a)))
                module.set_arrow(v, a, identity_matrix(k, 1));
    return module;
}

// Squares whose two composites differ.
template <class Field>
std::vector<SquareViolation> check_relations(const QuiverModule<Field>& module)
{
    const Shape& shape = module.shape();
    const Field& k = module.field();
    std::vector<SquareViolation> out;
    for (std::size_t v = 0; v < shape.volume(); ++v)
        for (std::size_t a = 0; a < shape.arity(); ++a) {
            if (!module.has_arrow(v, a))
                continue;
            for (std::size_t b = a + 1; b < shape.arity(); ++b) {
                if (!module.has_arrow(v, b))
                    continue;
                const std::size_t da = shape.stride(a), db = shape.stride(b);
                // Each composite runs source -> middle -> target; the arrow
                // between two corners is stored at the lower one.
                const bool op_a = shape.axis(a).polarity == Polarity::op;
                const bool op_b = shape.axis(b).polarity == Polarity::op;
                // Path through mid_a: first along a, then along b.
                const auto& a_first = module.arrow(op_b ? v + db : v, a);
                const auto& b_second = module.arrow(op_a ? v : v + da, b);
                // Path through mid_b: first along b, then along a.
                const auto& b_first = module.arrow(op_a ? v + da : v, b);
                const auto& a_second = module.arrow(op_b ? v : v + db, a);
                if (!matrices_equal(k, multiply(k, b_second, a_first), multiply(k, a_second, b_first)))
                    out.push_back({shape.point_at(v), a, b});
            }
        }
    return out;
}

// Tensor product over the path algebra of the shared A_L factor: m1 is a
// right module along its plain axis a1, m2 a left module along its op axis a2.
// At each vertex (x, y) of the result the space is the direct sum over c of
// m1(x, c) (x) m2(y, c) modulo the balancing relations
//   (x . arrow) (x) y - x (x) (arrow . y)
// for every arrow c -> c+1 of A_L.
template <class Field>
QuiverModule<Field> tensor_over(const QuiverModule<Field>& m1, std::size_t a1, const QuiverModule<Field>& m2,
                                std::size_t a2)
{
    using Element = typename Field::Element;
    const Shape& sh1 = m1.shape();
    const Shape& sh2 = m2.shape();
    sh1.check_axis(a1);
    sh2.check_axis(a2);
    if (!(m1.field() == m2.field()))
        throw ParameterError(fmt::format("field mismatch: {} vs {}", m1.field().name(), m2.field().name()));
    if (sh1.axis(a1).length != sh2.axis(a2).length)
        throw ParameterError(fmt::format("contracted axes have lengths {} and {}", sh1.axis(a1).length,
                                         sh2.axis(a2).length));
    if (sh1.axis(a1).polarity != Polarity::plain || sh2.axis(a2).polarity != Polarity::op)
        throw ParameterError("tensor product pairs a plain axis of the left module with an op axis "
                             "of the right module");
    if (sh1.arity() < 2 && sh2.arity() < 2)
        throw ParameterError("tensor product of two one-axis modules has no axes left");
    const Field& k = m1.field();
    const std::size_t len = static_cast<std::size_t>(sh1.axis(a1).length);

    std::vector<Axis> axes;
    for (std::size_t t = 0; t < sh1.arity(); ++t)
        if (t != a1)
            axes.push_back(sh1.axis(t));
    for (std::size_t t = 0; t < sh2.arity(); ++t)
        if (t != a2)
            axes.push_back(sh2.axis(t));
    const Shape result(std::move(axes));
    const std::size_t left_arity = sh1.arity() - 1;

    // Vertex of m1 (resp. m2) lying over result vertex v at shared coordinate c (0-based).
    auto split = [&](std::size_t v) {
        const Point p = result.point_at(v);
        Point p1(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(left_arity));
        Point p2(p.begin() + static_cast<std::ptrdiff_t>(left_arity), p.end());
        p1.insert(p1.begin() + static_cast<std::ptrdiff_t>(a1), 1);
        p2.insert(p2.begin() + static_cast<std::ptrdiff_t>(a2), 1);
        return std::pair{sh1.index_of(p1), sh2.index_of(p2)};
    };

    struct Local {
        std::size_t base1 = 0, base2 = 0;
        std::vector<std::size_t> offset; // start of block c in the generator space
        std::size_t width = 0;
        std::optional<RowReducer<Field>> relations;
        std::vector<std::size_t> basis; // free columns
    };
    std::vector<Local> local(result.volume());
    const std::size_t stride1 = sh1.stride(a1), stride2 = sh2.stride(a2);

    for (std::size_t v = 0; v < result.volume(); ++v) {
        Local& L = local[v];
        std::tie(L.base1, L.base2) = split(v);
        L.offset.resize(len + 1);
        for (std::size_t c = 0; c < len; ++c) {
            L.offset[c] = L.width;
            L.width += m1.dim(L.base1 + c * stride1) * m2.dim(L.base2 + c * stride2);
        }
        L.offset[len] = L.width;
        L.relations.emplace(k, L.width);
        for (std::size_t c = 0; c + 1 < len; ++c) {
            const std::size_t u1 = L.base1 + c * stride1, u2 = L.base2 + c * stride2;
            const auto& right_action = m1.arrow(u1, a1); // m1(c) -> m1(c+1)
            const auto& left_action = m2.arrow(u2, a2);  // m2(c+1) -> m2(c)
            const std::size_t d1 = m1.dim(u1), d1n = m1.dim(u1 + stride1);
            const std::size_t d2 = m2.dim(u2), d2n = m2.dim(u2 + stride2);
            for (std::size_t x = 0; x < d1; ++x)
                for (std::size_t y = 0; y < d2n; ++y) {
                    std::vector<Element> rel(L.width, k.zero());
                    for (std::size_t xn = 0; xn < d1n; ++xn)
                        rel[L.offset[c + 1] + xn * d2n + y] = right_action(xn, x);
                    for (std::size_t yp = 0; yp < d2; ++yp)
                        rel[L.offset[c] + x * d2 + yp] =
                            k.sub(rel[L.offset[c] + x * d2 + yp], left_action(yp, y));
                    L.relations->insert(std::move(rel));
                }
        }
        L.basis = L.relations->free_columns();
    }

    std::vector<std::size_t> dims(result.volume());
    for (std::size_t v = 0; v < result.volume(); ++v)
        dims[v] = local[v].basis.size();
    QuiverModule<Field> out(k, result, std::move(dims));

    for (std::size_t v = 0; v < result.volume(); ++v)
        for (std::size_t axis = 0; axis < result.arity(); ++axis) {
            if (!out.has_arrow(v, axis))
                continue;
            const std::size_t src = out.arrow_source(v, axis), tgt = out.arrow_target(v, axis);
            const Local& S = local[src];
            const Local& T = local[tgt];
            const bool from_left = axis < left_arity;
            // Axis index in the originating module.
            std::size_t orig = from_left ? axis : axis - left_arity;
            if (from_left && orig >= a1)
                ++orig;
            if (!from_left && orig >= a2)
                ++orig;
            auto induced = zero_matrix(k, T.basis.size(), S.basis.size());
            for (std::size_t col = 0; col < S.basis.size(); ++col) {
                const std::size_t g = S.basis[col];
                std::size_t c = 0;
                while (S.offset[c + 1] <= g)
                    ++c;
                const std::size_t lower1 = local[v].base1 + c * stride1;
                const std::size_t lower2 = local[v].base2 + c * stride2;
                const std::size_t dsrc2 = m2.dim(S.base2 + c * stride2);
                const std::size_t x = (g - S.offset[c]) / dsrc2, y = (g - S.offset[c]) % dsrc2;
                std::vector<Element> image(T.width, k.zero());
                if (from_left) {
                    const auto& f = m1.arrow(lower1, orig);
                    const std::size_t d2 = m2.dim(T.base2 + c * stride2);
                    for (std::size_t xn = 0; xn < f.rows(); ++xn)
                        image[T.offset[c] + xn * d2 + y] = f(xn, x);
                } else {
                    const auto& f = m2.arrow(lower2, orig);
                    const std::size_t d2 = f.rows();
                    for (std::size_t yn = 0; yn < d2; ++yn)
                        image[T.offset[c] + x * d2 + yn] = f(yn, y);
                }
                T.relations->reduce(image);
                for (std::size_t row = 0; row < T.basis.size(); ++row)
                    induced(row, col) = image[T.basis[row]];
            }
            out.set_arrow(v, axis, std::move(induced));
        }
    return out;
}

template <class Field>
K0Vector dimension_vector(const QuiverModule<Field>& module)
{
    K0Vector out;
    out.reserve(module.dims().size());
    for (std::size_t d : module.dims())
        out.push_back(static_cast<std::int64_t>(d));
    return out;
}

K0Vector indicator(const Support& s);

// True iff the module is isomorphic to the standard module on `s`: the
// dimensions match, every arrow inside the support is a nonzero scalar, and
// rescaling basis vectors along a spanning forest turns every such arrow
// into 1.
template <class Field>
bool iso_to_standard(const QuiverModule<Field>& module, const Support& s)
{
    const Shape& shape = s.shape();
    if (!(module.shape() == shape) || dimension_vector(module) != indicator(s))
        return false;
    const Field& k = module.field();
    using Element = typename Field::Element;

    for (std::size_t v = 0; v < shape.volume(); ++v)
        for (std::size_t a = 0; a < shape.arity(); ++a)
            if (module.has_arrow(v, a) && s.contains_index(v) && s.contains_index(v + shape.stride(a))
                && k.is_zero(module.arrow(v, a)(0, 0)))
                return false;

    std::vector<std::optional<Element>> scale(shape.volume());
    for (std::size_t root = 0; root < shape.volume(); ++root) {
        if (!s.contains_index(root) || scale[root])
            continue;
        scale[root] = k.one();
        std::deque<std::size_t> queue{root};
        while (!queue.empty()) {
            const std::size_t u = queue.front();
            queue.pop_front();
            const Point pu = shape.point_at(u);
            for (std::size_t a = 0; a < shape.arity(); ++a)
                for (int dir : {-1, 1}) {
                    const int coord = pu[a] + dir;
                    if (coord < 1 || coord > shape.axis(a).length)
                        continue;
                    const std::size_t w = dir > 0 ? u + shape.stride(a) : u - shape.stride(a);
                    if (!s.contains_index(w) || scale[w])
                        continue;
                    const std::size_t lower = std::min(u, w);
                    const Element& x = module.arrow(lower, a)(0, 0);
                    // Scaled arrow is scale[src] * x / scale[tgt]; make it 1.
                    const bool u_is_source = module.arrow_source(lower, a) == u;
                    scale[w] = u_is_source ? k.mul(*scale[u], x) : k.mul(*scale[u], k.inv(x));
                    queue.push_back(w);
                }
        }
    }

    for (std::size_t v = 0; v < shape.volume(); ++v)
        for (std::size_t a = 0; a < shape.arity(); ++a) {
            if (!module.has_arrow(v, a) || !s.contains_index(v) || !s.contains_index(v + shape.stride(a)))
                continue;
            const std::size_t src = module.arrow_source(v, a), tgt = module.arrow_target(v, a);
            if (!k.equal(k.mul(*scale[src], module.arrow(v, a)(0, 0)), *scale[tgt]))
                return false;
        }
    return true;
}

// Oracle checks used by the sweeps. Each builds standard modules over the
// configured field, tensors them and compares against the support calculus.

// Tensor of standard(left) along left_axis with standard(right) along
// right_axis, permuted by `perm`, against the expected support.
Report verify_tensor(const std::string& name, std::vector<std::pair<std::string, int>> params,
                     const Support& left, std::size_t left_axis, const Support& right, std::size_t right_axis,
                     const std::vector<std::size_t>& perm, const Support& expected, const FieldConfig& field);

// Dimension vector of the permuted tensor product, for cross-field comparison.
K0Vector tensor_dimensions(const Support& left, std::size_t left_axis, const Support& right,
                           std::size_t right_axis, const std::vector<std::size_t>& perm, const FieldConfig& field);

// N_{m+n-1} (x) S_{m;i}^n against the gamma-reversal of S_{m;i}^n.
Report verify_nakayama_gamma(int m, int i, int n, const FieldConfig& field);
// S_{m;i}^n (x) N_m against the mu-reversal of S_{m;i}^n.
Report verify_nakayama_mu(int m, int i, int n, const FieldConfig& field);
// Both contractions of each cooperad axiom instance against contract().
std::vector<Report> verify_commutativity_oracle(int m, int n, int p, int i, int j, const FieldConfig& field);
std::vector<Report> verify_associativity_oracle(int m, int n, int p, int i, int j, const FieldConfig& field);

} // namespace catdias
