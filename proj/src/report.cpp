#include "catdias/report.hpp"

#include <fmt/format.h>

namespace catdias {

std::string summary_line(const Report& report)
{
    std::string params;
    for (const auto& [name, value] : report.params)
        params += fmt::format("{}{}={}", params.empty() ? "" : " ", name, value);
    return fmt::format("{:<24} {:<28} {} |L|={} |R|={} witnesses={}", report.verifier, params,
                       report.pass() ? "PASS" : "FAIL", report.left_size, report.right_size,
                       report.witnesses.size());
}

} // namespace catdias
