#include "catdias/support.hpp"

#include "catdias/error.hpp"

#include <algorithm>
#include <fmt/format.h>
#include <fmt/ranges.h>

namespace catdias {

std::string to_string(const Axis& axis)
{
    return fmt::format("{}{}", axis.length, axis.polarity == Polarity::op ? "op" : "");
}

std::string to_string(const Point& point)
{
    return fmt::format("({})", fmt::join(point, ","));
}

std::string to_string(const Shape& shape)
{
    std::vector<std::string> parts;
    for (const auto& a : shape.axes())
        parts.push_back(to_string(a));
    return fmt::format("[{}]", fmt::join(parts, ","));
}

Shape::Shape(std::vector<Axis> axes) : axes_(std::move(axes))
{
    if (axes_.empty())
        throw ParameterError("shape needs at least one axis");
    strides_.assign(axes_.size(), 1);
    volume_ = 1;
    for (std::size_t k = axes_.size(); k-- > 0;) {
        if (axes_[k].length < 1)
            throw ParameterError(fmt::format("axis {} has length {} < 1", k, axes_[k].length));
        strides_[k] = volume_;
        volume_ *= static_cast<std::size_t>(axes_[k].length);
    }
}

bool Shape::in_bounds(const Point& p) const
{
    if (p.size() != axes_.size())
        return false;
    for (std::size_t k = 0; k < p.size(); ++k)
        if (p[k] < 1 || p[k] > axes_[k].length)
            return false;
    return true;
}

void Shape::check_point(const Point& p) const
{
    if (p.size() != axes_.size())
        throw BoundsError(fmt::format("point {} has arity {}, shape {} has arity {}", to_string(p),
                                      p.size(), to_string(*this), axes_.size()));
    for (std::size_t k = 0; k < p.size(); ++k)
        if (p[k] < 1 || p[k] > axes_[k].length)
            throw BoundsError(fmt::format("point {}: coordinate {} = {} outside [1,{}]", to_string(p),
                                          k, p[k], axes_[k].length));
}

void Shape::check_axis(std::size_t k) const
{
    if (k >= axes_.size())
        throw BoundsError(fmt::format("axis index {} out of range for arity {}", k, axes_.size()));
}

std::size_t Shape::index_of(const Point& p) const
{
    std::size_t index = 0;
    for (std::size_t k = 0; k < p.size(); ++k)
        index += static_cast<std::size_t>(p[k] - 1) * strides_[k];
    return index;
}

Point Shape::point_at(std::size_t index) const
{
    Point p(axes_.size());
    for (std::size_t k = 0; k < axes_.size(); ++k) {
        p[k] = static_cast<int>(index / strides_[k]) + 1;
        index %= strides_[k];
    }
    return p;
}

Shape Shape::without(std::size_t k) const
{
    check_axis(k);
    std::vector<Axis> rest = axes_;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
    return Shape(std::move(rest));
}

Shape Shape::concat(const Shape& other) const
{
    std::vector<Axis> all = axes_;
    all.insert(all.end(), other.axes_.begin(), other.axes_.end());
    return Shape(std::move(all));
}

Support::Support(Shape shape, std::vector<Point> points) : shape_(std::move(shape))
{
    mask_.assign(shape_.volume(), 0);
    for (const auto& p : points) {
        shape_.check_point(p);
        mask_[shape_.index_of(p)] = 1;
    }
    for (std::size_t idx = 0; idx < mask_.size(); ++idx)
        if (mask_[idx])
            points_.push_back(shape_.point_at(idx));
}

Support Support::from_mask(Shape shape, std::vector<char> mask)
{
    if (mask.size() != shape.volume())
        throw ParameterError("mask size does not match shape volume");
    Support s;
    s.shape_ = std::move(shape);
    s.mask_ = std::move(mask);
    for (std::size_t idx = 0; idx < s.mask_.size(); ++idx) {
        s.mask_[idx] = s.mask_[idx] ? 1 : 0;
        if (s.mask_[idx])
            s.points_.push_back(s.shape_.point_at(idx));
    }
    return s;
}

Support Support::from_predicate(Shape shape, const std::function<bool(const Point&)>& member)
{
    std::vector<char> mask(shape.volume(), 0);
    for (std::size_t idx = 0; idx < mask.size(); ++idx)
        mask[idx] = member(shape.point_at(idx)) ? 1 : 0;
    return from_mask(std::move(shape), std::move(mask));
}

bool Support::contains(const Point& p) const
{
    return shape_.in_bounds(p) && mask_[shape_.index_of(p)] != 0;
}

Support make_support(Shape shape, std::vector<Point> points)
{
    return Support(std::move(shape), std::move(points));
}

std::string to_string(const SquareViolation& v)
{
    return fmt::format("square at {} on axes ({},{})", to_string(v.base), v.axis_a, v.axis_b);
}

std::vector<SquareViolation> validate_standard(const Support& s)
{
    const Shape& shape = s.shape();
    std::vector<SquareViolation> out;
    for (std::size_t idx = 0; idx < shape.volume(); ++idx) {
        const Point base = shape.point_at(idx);
        for (std::size_t a = 0; a < shape.arity(); ++a) {
            if (base[a] == shape.axis(a).length)
                continue;
            for (std::size_t b = a + 1; b < shape.arity(); ++b) {
                if (base[b] == shape.axis(b).length)
                    continue;
                // Arrows run upward on plain axes and downward on op axes.
                const std::size_t da = shape.stride(a), db = shape.stride(b);
                const bool op_a = shape.axis(a).polarity == Polarity::op;
                const bool op_b = shape.axis(b).polarity == Polarity::op;
                const std::size_t source = idx + (op_a ? da : 0) + (op_b ? db : 0);
                const std::size_t target = idx + (op_a ? 0 : da) + (op_b ? 0 : db);
                const std::size_t via_a = idx + (op_a ? 0 : da) + (op_b ? db : 0);
                const std::size_t via_b = idx + (op_a ? da : 0) + (op_b ? 0 : db);
                if (s.contains_index(source) && s.contains_index(target)
                    && s.contains_index(via_a) != s.contains_index(via_b))
                    out.push_back({base, a, b});
            }
        }
    }
    return out;
}

namespace {

// Calls f(rest_index_base, fiber_mask) for every line along `axis`.
template <class F>
void for_each_line(const Shape& shape, std::size_t axis, F&& f)
{
    const std::size_t stride = shape.stride(axis);
    const std::size_t len = static_cast<std::size_t>(shape.axis(axis).length);
    for (std::size_t idx = 0; idx < shape.volume(); ++idx) {
        if ((idx / stride) % len != 0)
            continue;
        f(idx);
    }
}

bool line_closed(const Support& s, std::size_t base, std::size_t stride, std::size_t len, Sense sense)
{
    bool seen = false;
    if (sense == Sense::upward) {
        for (std::size_t t = 0; t < len; ++t) {
            const bool in = s.contains_index(base + t * stride);
            if (seen && !in)
                return false;
            seen = seen || in;
        }
    } else {
        for (std::size_t t = len; t-- > 0;) {
            const bool in = s.contains_index(base + t * stride);
            if (seen && !in)
                return false;
            seen = seen || in;
        }
    }
    return true;
}

} // namespace

bool closure_check(const Support& s, std::size_t axis, Sense sense)
{
    const Shape& shape = s.shape();
    shape.check_axis(axis);
    const std::size_t stride = shape.stride(axis);
    const std::size_t len = static_cast<std::size_t>(shape.axis(axis).length);
    bool ok = true;
    for_each_line(shape, axis, [&](std::size_t base) {
        if (ok && !line_closed(s, base, stride, len, sense))
            ok = false;
    });
    return ok;
}

Sense projective_sense(const Axis& axis)
{
    return axis.polarity == Polarity::plain ? Sense::upward : Sense::downward;
}

Sense injective_sense(const Axis& axis)
{
    return axis.polarity == Polarity::plain ? Sense::downward : Sense::upward;
}

bool is_projective(const Support& s, std::size_t axis)
{
    s.shape().check_axis(axis);
    return closure_check(s, axis, projective_sense(s.shape().axis(axis)));
}

bool is_injective(const Support& s, std::size_t axis)
{
    s.shape().check_axis(axis);
    return closure_check(s, axis, injective_sense(s.shape().axis(axis)));
}

std::vector<int> fiber(const Support& s, std::size_t axis, const Point& rest)
{
    const Shape& shape = s.shape();
    shape.check_axis(axis);
    if (shape.arity() == 1) {
        if (!rest.empty())
            throw BoundsError("fiber of a one-axis support takes an empty rest point");
    } else {
        shape.without(axis).check_point(rest);
    }
    Point p = rest;
    p.insert(p.begin() + static_cast<std::ptrdiff_t>(axis), 1);
    std::vector<int> out;
    for (int j = 1; j <= shape.axis(axis).length; ++j) {
        p[axis] = j;
        if (s.contains(p))
            out.push_back(j);
    }
    return out;
}

namespace {

// Rest indices (in the shape without `axis`) mapped to the bitmask of the
// fiber, restricted to rests with a nonempty fiber.
struct FiberTable {
    std::vector<std::size_t> rests;
    std::vector<std::vector<char>> fibers;
};

FiberTable fibers_of(const Support& s, std::size_t axis)
{
    const Shape& shape = s.shape();
    const std::size_t stride = shape.stride(axis);
    const std::size_t len = static_cast<std::size_t>(shape.axis(axis).length);
    FiberTable table;
    std::size_t rest_index = 0;
    for_each_line(shape, axis, [&](std::size_t base) {
        std::vector<char> f(len, 0);
        bool any = false;
        for (std::size_t t = 0; t < len; ++t) {
            f[t] = s.contains_index(base + t * stride) ? 1 : 0;
            any = any || f[t];
        }
        if (any) {
            table.rests.push_back(rest_index);
            table.fibers.push_back(std::move(f));
        }
        ++rest_index;
    });
    return table;
}

} // namespace

Support contract(const Support& s1, std::size_t a1, const Support& s2, std::size_t a2)
{
    const Shape& sh1 = s1.shape();
    const Shape& sh2 = s2.shape();
    sh1.check_axis(a1);
    sh2.check_axis(a2);
    if (sh1.axis(a1).length != sh2.axis(a2).length)
        throw ParameterError(fmt::format("contracted axes have lengths {} and {}",
                                         sh1.axis(a1).length, sh2.axis(a2).length));
    if (sh1.axis(a1).polarity != Polarity::plain || sh2.axis(a2).polarity != Polarity::op)
        throw ParameterError("contraction pairs a plain axis of the left operand with an op axis "
                             "of the right operand");
    if (sh1.arity() < 2 && sh2.arity() < 2)
        throw ParameterError("contraction of two one-axis supports has no axes left");
    if (!closure_check(s1, a1, Sense::upward))
        throw ClosureError(fmt::format("left operand is not upward-closed along axis {}", a1), 1);
    if (!closure_check(s2, a2, Sense::downward))
        throw ClosureError(fmt::format("right operand is not downward-closed along axis {}", a2), 2);

    const FiberTable f1 = fibers_of(s1, a1);
    const FiberTable f2 = fibers_of(s2, a2);
    const std::size_t len = static_cast<std::size_t>(sh1.axis(a1).length);

    std::vector<Axis> axes;
    for (std::size_t k = 0; k < sh1.arity(); ++k)
        if (k != a1)
            axes.push_back(sh1.axis(k));
    for (std::size_t k = 0; k < sh2.arity(); ++k)
        if (k != a2)
            axes.push_back(sh2.axis(k));
    Shape result(std::move(axes));
    const std::size_t right_volume = sh2.volume() / len;

    std::vector<char> mask(result.volume(), 0);
    for (std::size_t x = 0; x < f1.rests.size(); ++x)
        for (std::size_t y = 0; y < f2.rests.size(); ++y)
            for (std::size_t c = 0; c < len; ++c)
                if (f1.fibers[x][c] && f2.fibers[y][c]) {
                    mask[f1.rests[x] * right_volume + f2.rests[y]] = 1;
                    break;
                }
    return Support::from_mask(std::move(result), std::move(mask));
}

ReversalMode reversal_mode_for(const Axis& axis)
{
    return axis.polarity == Polarity::plain ? ReversalMode::predecessor : ReversalMode::successor;
}

Support fiber_reversal(const Support& s, std::size_t axis, ReversalMode mode)
{
    const Shape& shape = s.shape();
    shape.check_axis(axis);
    const std::size_t stride = shape.stride(axis);
    const std::size_t len = static_cast<std::size_t>(shape.axis(axis).length);
    const Sense needed = mode == ReversalMode::predecessor ? Sense::upward : Sense::downward;
    std::vector<char> mask(shape.volume(), 0);
    for_each_line(shape, axis, [&](std::size_t base) {
        if (!line_closed(s, base, stride, len, needed))
            throw ClosureError(fmt::format("fiber through {} along axis {} is not {}-closed",
                                           to_string(shape.point_at(base)), axis,
                                           needed == Sense::upward ? "upward" : "downward"),
                               0);
        std::size_t first = len, last = 0;
        for (std::size_t t = 0; t < len; ++t)
            if (s.contains_index(base + t * stride)) {
                first = std::min(first, t);
                last = t;
            }
        if (first == len)
            return;
        // Threshold t of [t, L] (predecessor) or [1, t] (successor).
        const std::size_t lo = mode == ReversalMode::predecessor ? 0 : last;
        const std::size_t hi = mode == ReversalMode::predecessor ? first : len - 1;
        for (std::size_t t = lo; t <= hi; ++t)
            mask[base + t * stride] = 1;
    });
    return Support::from_mask(shape, std::move(mask));
}

Support permute_axes(const Support& s, std::span<const std::size_t> perm)
{
    const Shape& shape = s.shape();
    if (perm.size() != shape.arity())
        throw ParameterError(fmt::format("permutation of length {} for arity {}", perm.size(),
                                         shape.arity()));
    std::vector<char> seen(perm.size(), 0);
    for (std::size_t k : perm) {
        if (k >= perm.size() || seen[k])
            throw ParameterError(fmt::format("[{}] is not a permutation", fmt::join(perm, ",")));
        seen[k] = 1;
    }
    std::vector<Axis> axes;
    for (std::size_t k : perm)
        axes.push_back(shape.axis(k));
    std::vector<Point> points;
    points.reserve(s.size());
    for (const auto& p : s.points()) {
        Point q(p.size());
        for (std::size_t k = 0; k < perm.size(); ++k)
            q[k] = p[perm[k]];
        points.push_back(std::move(q));
    }
    return Support(Shape(std::move(axes)), std::move(points));
}

Support permute_axes(const Support& s, std::initializer_list<std::size_t> perm)
{
    return permute_axes(s, std::span<const std::size_t>(perm.begin(), perm.size()));
}

std::vector<Point> symmetric_difference(const Support& a, const Support& b)
{
    if (!(a.shape() == b.shape()))
        throw ParameterError(fmt::format("cannot compare supports on shapes {} and {}",
                                         to_string(a.shape()), to_string(b.shape())));
    std::vector<Point> out;
    for (std::size_t idx = 0; idx < a.shape().volume(); ++idx)
        if (a.contains_index(idx) != b.contains_index(idx))
            out.push_back(a.shape().point_at(idx));
    return out;
}

} // namespace catdias
