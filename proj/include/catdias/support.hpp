#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace catdias {

// Orientation of an A_n factor. An op factor carries reversed arrows.
enum class Polarity { plain, op };

struct Axis {
    int length = 1;
    Polarity polarity = Polarity::plain;

    bool operator==(const Axis&) const = default;
};

inline Axis plain(int length) { return {length, Polarity::plain}; }
inline Axis op(int length) { return {length, Polarity::op}; }

// 1-based coordinates, one per axis.
using Point = std::vector<int>;

std::string to_string(const Axis& axis);
std::string to_string(const Point& point);

// Product of linear quivers A_{m_1} x ... x A_{m_k}, each factor possibly op.
// Vertices are enumerated in row-major order (last axis fastest), which
// coincides with lexicographic order on points.
class Shape {
public:
    Shape() = default;
    explicit Shape(std::vector<Axis> axes);
    Shape(std::initializer_list<Axis> axes) : Shape(std::vector<Axis>(axes)) {}

    const std::vector<Axis>& axes() const { return axes_; }
    const Axis& axis(std::size_t k) const { return axes_.at(k); }
    std::size_t arity() const { return axes_.size(); }
    std::size_t volume() const { return volume_; }

    bool in_bounds(const Point& p) const;
    // Throws BoundsError naming the offending coordinate.
    void check_point(const Point& p) const;
    void check_axis(std::size_t k) const;

    std::size_t index_of(const Point& p) const;
    Point point_at(std::size_t index) const;
    std::size_t stride(std::size_t k) const { return strides_.at(k); }

    Shape without(std::size_t k) const;
    Shape concat(const Shape& other) const;

    bool operator==(const Shape& other) const { return axes_ == other.axes_; }

private:
    std::vector<Axis> axes_;
    std::vector<std::size_t> strides_;
    std::size_t volume_ = 0;
};

std::string to_string(const Shape& shape);

// Finite point set in a Shape, stored canonically: sorted, duplicate-free.
class Support {
public:
    Support() = default;
    // Canonicalizes; throws BoundsError on arity mismatch or out-of-bounds points.
    Support(Shape shape, std::vector<Point> points);

    static Support from_predicate(Shape shape, const std::function<bool(const Point&)>& member);
    static Support from_mask(Shape shape, std::vector<char> mask);

    const Shape& shape() const { return shape_; }
    const std::vector<Point>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }

    // False for out-of-bounds points.
    bool contains(const Point& p) const;
    bool contains_index(std::size_t index) const { return mask_[index] != 0; }
    // One byte per vertex of the shape, row-major.
    const std::vector<char>& mask() const { return mask_; }

    bool operator==(const Support& other) const
    {
        return shape_ == other.shape_ && mask_ == other.mask_;
    }

private:
    Shape shape_;
    std::vector<Point> points_;
    std::vector<char> mask_;
};

Support make_support(Shape shape, std::vector<Point> points);

// A commutation square whose identity-arrow composites disagree.
struct SquareViolation {
    Point base; // corner with the smallest coordinates
    std::size_t axis_a = 0;
    std::size_t axis_b = 0;
};

std::string to_string(const SquareViolation& v);

// Empty iff the standard module with identity arrows on `s` satisfies every
// commutation relation. For every square the source and target corners are
// determined by the polarities of its two axes; the square fails exactly when
// source and target lie in the support and exactly one of the two middle
// corners does.
std::vector<SquareViolation> validate_standard(const Support& s);

enum class Sense { upward, downward };

// Every fiber along `axis` is closed upward (resp. downward).
bool closure_check(const Support& s, std::size_t axis, Sense sense);

// Polarity-aware aliases: on a plain axis projective means upward-closed and
// injective downward-closed; an op axis swaps the two.
Sense projective_sense(const Axis& axis);
Sense injective_sense(const Axis& axis);
bool is_projective(const Support& s, std::size_t axis);
bool is_injective(const Support& s, std::size_t axis);

// The set {j : rest with j inserted at `axis` lies in s}, ascending.
// `rest` has arity s.shape().arity() - 1.
std::vector<int> fiber(const Support& s, std::size_t axis, const Point& rest);

// Support of the tensor product of two standard modules over a shared A_c
// factor: tuples (x, y) such that some c has (x with c at a1) in s1 and
// (y with c at a2) in s2. Requires a1 plain with s1 upward-closed along it and
// a2 op with s2 downward-closed along it.
Support contract(const Support& s1, std::size_t a1, const Support& s2, std::size_t a2);

enum class ReversalMode { predecessor, successor };

// Mode matching the projective side of an axis: predecessor on plain axes,
// successor on op axes.
ReversalMode reversal_mode_for(const Axis& axis);

// Per fiber along `axis`: predecessor mode sends an upward-closed [t, L] to
// [1, t]; successor mode sends a downward-closed [1, t] to [t, L]. Empty
// fibers stay empty. Throws ClosureError if a fiber has the wrong closure.
Support fiber_reversal(const Support& s, std::size_t axis, ReversalMode mode);

// New axis k is old axis perm[k].
Support permute_axes(const Support& s, std::span<const std::size_t> perm);
Support permute_axes(const Support& s, std::initializer_list<std::size_t> perm);

// Points in exactly one of the two supports (shapes must agree).
std::vector<Point> symmetric_difference(const Support& a, const Support& b);

} // namespace catdias
