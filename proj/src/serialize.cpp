#include "catdias/serialize.hpp"

#include "catdias/error.hpp"

#include <charconv>
#include <fmt/format.h>
#include <sstream>

namespace catdias {

std::string write_support(const Support& s)
{
    std::string out = "axes";
    for (const auto& a : s.shape().axes())
        out += fmt::format(" {}:{}", a.length, a.polarity == Polarity::op ? "op" : "plain");
    out += fmt::format("\npoints {}\n", s.size());
    for (const auto& p : s.points()) {
        for (std::size_t k = 0; k < p.size(); ++k)
            out += fmt::format("{}{}", k ? " " : "", p[k]);
        out += '\n';
    }
    return out;
}

namespace {

std::vector<std::string> tokens(const std::string& line)
{
    std::istringstream in(line);
    std::vector<std::string> out;
    for (std::string t; in >> t;)
        out.push_back(t);
    return out;
}

int parse_int(const std::string& token, const char* field, int line)
{
    int value = 0;
    const char* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc() || ptr != end)
        throw ParseError(fmt::format("line {}: {}: '{}' is not an integer", line, field, token), line);
    return value;
}

Axis parse_axis(const std::string& token, int line)
{
    const auto colon = token.find(':');
    if (colon == std::string::npos)
        throw ParseError(fmt::format("line {}: axes: '{}' is not of the form <len>:<plain|op>", line, token), line);
    const int len = parse_int(token.substr(0, colon), "axes", line);
    if (len < 1)
        throw ParseError(fmt::format("line {}: axes: length {} < 1", line, len), line);
    const std::string pol = token.substr(colon + 1);
    if (pol == "plain")
        return plain(len);
    if (pol == "op")
        return op(len);
    throw ParseError(fmt::format("line {}: axes: unknown polarity '{}'", line, pol), line);
}

} // namespace

Support read_support(const std::string& text)
{
    std::istringstream in(text);
    std::vector<Axis> axes;
    std::vector<Point> points;
    long expected = -1;
    int line_no = 0;
    enum { want_axes, want_count, want_points } state = want_axes;
    for (std::string line; std::getline(in, line);) {
        ++line_no;
        const auto tok = tokens(line);
        if (tok.empty() || tok[0][0] == '#')
            continue;
        switch (state) {
        case want_axes:
            if (tok[0] != "axes")
                throw ParseError(fmt::format("line {}: expected field 'axes', found '{}'", line_no, tok[0]), line_no);
            if (tok.size() < 2)
                throw ParseError(fmt::format("line {}: axes: at least one axis required", line_no), line_no);
            for (std::size_t t = 1; t < tok.size(); ++t)
                axes.push_back(parse_axis(tok[t], line_no));
            state = want_count;
            break;
        case want_count:
            if (tok[0] != "points" || tok.size() != 2)
                throw ParseError(fmt::format("line {}: expected 'points <count>'", line_no), line_no);
            expected = parse_int(tok[1], "points", line_no);
            if (expected < 0)
                throw ParseError(fmt::format("line {}: points: negative count", line_no), line_no);
            state = want_points;
            break;
        case want_points: {
            if (static_cast<long>(points.size()) == expected)
                throw ParseError(fmt::format("line {}: more points than the declared {}", line_no, expected), line_no);
            if (tok.size() != axes.size())
                throw ParseError(fmt::format("line {}: point has {} coordinates, expected {}", line_no, tok.size(),
                                             axes.size()),
                                 line_no);
            Point p;
            for (const auto& t : tok)
                p.push_back(parse_int(t, "point", line_no));
            for (std::size_t k = 0; k < p.size(); ++k)
                if (p[k] < 1 || p[k] > axes[k].length)
                    throw ParseError(fmt::format("line {}: point coordinate {} = {} outside [1,{}]", line_no, k + 1,
                                                 p[k], axes[k].length),
                                     line_no);
            points.push_back(std::move(p));
            break;
        }
        }
    }
    if (state == want_axes)
        throw ParseError(fmt::format("line {}: missing field 'axes'", line_no), line_no);
    if (state == want_count)
        throw ParseError(fmt::format("line {}: missing field 'points'", line_no), line_no);
    if (static_cast<long>(points.size()) != expected)
        throw ParseError(fmt::format("line {}: declared {} points, found {}", line_no, expected, points.size()),
                         line_no);
    return Support(Shape(std::move(axes)), std::move(points));
}

nlohmann::ordered_json to_json(const Support& s)
{
    nlohmann::ordered_json axes = nlohmann::ordered_json::array();
    for (const auto& a : s.shape().axes())
        axes.push_back({{"len", a.length}, {"polarity", a.polarity == Polarity::op ? "op" : "plain"}});
    return {{"axes", axes}, {"points", s.points()}};
}

nlohmann::ordered_json to_json(const Report& report, bool with_timing)
{
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [name, value] : report.params)
        params[name] = value;
    nlohmann::ordered_json witnesses = nlohmann::ordered_json::array();
    for (const auto& w : report.witnesses)
        witnesses.push_back({{"check", w.check}, {"point", w.point}});
    nlohmann::ordered_json j = {
        {"verifier", report.verifier},
        {"params", params},
        {"pass", report.pass()},
        {"left", report.left_size},
        {"right", report.right_size},
        {"witnesses", witnesses},
    };
    if (!report.matrices.empty()) {
        nlohmann::ordered_json mats = nlohmann::ordered_json::array();
        for (const auto& m : report.matrices)
            mats.push_back({{"name", m.name},
                            {"source", m.source_basis},
                            {"target", m.target_basis},
                            {"entries", m.matrix.nested()}});
        j["matrices"] = mats;
    }
    if (with_timing)
        j["elapsed_ms"] = report.elapsed_ms;
    return j;
}

} // namespace catdias
