#include "catdias/render.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace catdias {

namespace {

constexpr int cell = 16;
constexpr int margin = 24;

struct Layout {
    std::size_t row_axis = 0;
    std::size_t col_axis = 0;
    int rows = 1;
    int cols = 1;
    bool single_row = false;
};

Layout layout_of(const Shape& shape)
{
    Layout l;
    if (shape.arity() == 1) {
        l.single_row = true;
        l.cols = shape.axis(0).length;
    } else if (shape.arity() == 2) {
        l.row_axis = 0;
        l.col_axis = 1;
    } else {
        l.row_axis = 1;
        l.col_axis = 0;
    }
    if (!l.single_row) {
        l.rows = shape.axis(l.row_axis).length;
        l.cols = shape.axis(l.col_axis).length;
    }
    return l;
}

// Coordinates of the slicing axes (2, 3, ...) for each slice.
std::vector<Point> slices_of(const Shape& shape)
{
    if (shape.arity() <= 2)
        return {Point{}};
    std::vector<Axis> rest(shape.axes().begin() + 2, shape.axes().end());
    const Shape sliced(std::move(rest));
    std::vector<Point> out;
    for (std::size_t idx = 0; idx < sliced.volume(); ++idx)
        out.push_back(sliced.point_at(idx));
    return out;
}

bool filled(const Support& s, const Layout& l, const Point& slice, int row, int col)
{
    if (l.single_row)
        return s.contains(Point{col});
    Point p(s.shape().arity());
    p[l.row_axis] = row;
    p[l.col_axis] = col;
    for (std::size_t k = 0; k < slice.size(); ++k)
        p[k + 2] = slice[k];
    return s.contains(p);
}

std::string slice_label(const Point& slice)
{
    if (slice.empty())
        return {};
    std::vector<std::string> parts;
    for (std::size_t k = 0; k < slice.size(); ++k)
        parts.push_back(fmt::format("axis{}={}", k + 2, slice[k]));
    return fmt::format("slice {}", fmt::join(parts, " "));
}

} // namespace

std::size_t slice_count(const Support& s) { return slices_of(s.shape()).size(); }

std::string render_ascii(const Support& s)
{
    const Layout l = layout_of(s.shape());
    std::string out = fmt::format("support on {} with {} points\n", to_string(s.shape()), s.size());
    for (const auto& slice : slices_of(s.shape())) {
        if (!slice.empty())
            out += slice_label(slice) + '\n';
        for (int r = 1; r <= l.rows; ++r) {
            for (int c = 1; c <= l.cols; ++c)
                out += filled(s, l, slice, r, c) ? '#' : '.';
            out += '\n';
        }
    }
    return out;
}

std::string render_svg(const Support& s)
{
    const Layout l = layout_of(s.shape());
    const auto slices = slices_of(s.shape());
    const int label_h = slices.size() > 1 ? cell : 0;
    const int slice_w = l.cols * cell;
    const int width = margin * 2 + static_cast<int>(slices.size()) * slice_w
        + static_cast<int>(slices.size() - 1) * cell;
    const int height = margin * 2 + label_h + l.rows * cell;

    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += fmt::format("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" "
                       "viewBox=\"0 0 {} {}\">\n",
                       width, height, width, height);
    out += fmt::format("<title>support on {} with {} points</title>\n", to_string(s.shape()), s.size());
    for (std::size_t t = 0; t < slices.size(); ++t) {
        const int x0 = margin + static_cast<int>(t) * (slice_w + cell);
        const int y0 = margin + label_h;
        out += "<g>\n";
        if (label_h)
            out += fmt::format("<text x=\"{}\" y=\"{}\" font-family=\"monospace\" font-size=\"10\">{}</text>\n", x0,
                               y0 - 4, slice_label(slices[t]));
        for (int r = 1; r <= l.rows; ++r)
            for (int c = 1; c <= l.cols; ++c)
                out += fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{}\" stroke=\"#888\"/>\n",
                                   x0 + (c - 1) * cell, y0 + (r - 1) * cell, cell, cell,
                                   filled(s, l, slices[t], r, c) ? "#333" : "#fff");
        out += "</g>\n";
    }
    out += "</svg>\n";
    return out;
}

} // namespace catdias
