// catdias: build and render supports, run verification sweeps, and
// canonicalize support files.

#include "catdias/error.hpp"
#include "catdias/families.hpp"
#include "catdias/render.hpp"
#include "catdias/serialize.hpp"
#include "catdias/sweep.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fmt/format.h>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace catdias;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_config = 2;

struct SupportArgs {
    std::string family;
    std::string input;
    int m = 0, i = 0, n = 0, j = 0;
    std::string format = "text";
    std::vector<std::string> reversals;
    std::string permutation;
    std::string output;
};

struct VerifyArgs {
    std::string suite = "all";
    int max = 4;
    int max_m = 0, max_n = 0, max_p = 0;
    int oracle_max = 0;
    std::string field = "both";
    std::int64_t modulus = PrimeField::default_modulus;
    int workers = 1;
    std::string output_dir;
    std::string output;
    bool no_oracle = false;
    bool no_timings = false;
    bool quiet = false;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParameterError(fmt::format("cannot open '{}'", path));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& path)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ParameterError(fmt::format("cannot write '{}'", path));
    out << text;
}

Support build_family(const SupportArgs& a)
{
    if (a.family == "s")
        return s_support(a.m, a.i, a.n);
    if (a.family == "n")
        return n_support(a.n);
    if (a.family == "projective")
        return interval_support(a.n, IntervalKind::projective, a.j);
    if (a.family == "injective")
        return interval_support(a.n, IntervalKind::injective, a.j);
    if (a.family == "simple")
        return interval_support(a.n, IntervalKind::simple, a.j);
    throw ParameterError(fmt::format("unknown family '{}'", a.family));
}

// "<axis>" or "<axis>:<predecessor|successor>"; the default mode follows the
// axis polarity.
Support apply_reversal(const Support& s, const std::string& arg)
{
    const auto colon = arg.find(':');
    const std::string axis_text = arg.substr(0, colon);
    std::size_t axis = 0;
    try {
        axis = static_cast<std::size_t>(std::stoul(axis_text));
    } catch (const std::exception&) {
        throw ParameterError(fmt::format("--reverse: '{}' is not an axis index", axis_text));
    }
    s.shape().check_axis(axis);
    ReversalMode mode = reversal_mode_for(s.shape().axis(axis));
    if (colon != std::string::npos) {
        const std::string m = arg.substr(colon + 1);
        if (m == "predecessor")
            mode = ReversalMode::predecessor;
        else if (m == "successor")
            mode = ReversalMode::successor;
        else
            throw ParameterError(fmt::format("--reverse: unknown mode '{}'", m));
    }
    return fiber_reversal(s, axis, mode);
}

Support apply_permutation(const Support& s, const std::string& arg)
{
    std::vector<std::size_t> perm;
    std::stringstream in(arg);
    for (std::string item; std::getline(in, item, ',');) {
        try {
            perm.push_back(static_cast<std::size_t>(std::stoul(item)));
        } catch (const std::exception&) {
            throw ParameterError(fmt::format("--permute: '{}' is not an axis index", item));
        }
    }
    return permute_axes(s, std::span<const std::size_t>(perm));
}

int cmd_support(const SupportArgs& a)
{
    Support s = a.input.empty() ? build_family(a) : read_support(read_file(a.input));
    for (const auto& r : a.reversals)
        s = apply_reversal(s, r);
    if (!a.permutation.empty())
        s = apply_permutation(s, a.permutation);
    if (a.format == "text")
        emit(write_support(s), a.output);
    else if (a.format == "ascii")
        emit(render_ascii(s), a.output);
    else if (a.format == "svg")
        emit(render_svg(s), a.output);
    else
        throw ParameterError(fmt::format("unknown format '{}'", a.format));
    return exit_ok;
}

SweepConfig sweep_config(const VerifyArgs& a)
{
    SweepConfig c;
    c.suites = parse_suites(a.suite);
    if (a.no_oracle)
        std::erase(c.suites, Suite::oracle);
    c.max_m = a.max_m ? a.max_m : a.max;
    c.max_n = a.max_n ? a.max_n : a.max;
    c.max_p = a.max_p ? a.max_p : a.max;
    c.oracle_max = a.oracle_max ? a.oracle_max : std::min({3, c.max_m, c.max_n, c.max_p});
    const FieldConfig prime{FieldConfig::Kind::prime, a.modulus};
    const FieldConfig rational{FieldConfig::Kind::rational};
    if (a.field == "prime")
        c.fields = {prime};
    else if (a.field == "rational")
        c.fields = {rational};
    else if (a.field == "both")
        c.fields = {prime, rational};
    else
        throw ParameterError(fmt::format("unknown field '{}' (expected prime, rational or both)", a.field));
    c.workers = a.workers;
    if (!a.output_dir.empty())
        c.output_dir = a.output_dir;
    else if (const char* env = std::getenv("CATDIAS_OUTPUT_DIR"))
        c.output_dir = env;
    validate(c);
    return c;
}

int cmd_verify(const VerifyArgs& a)
{
    const SweepConfig config = sweep_config(a);
    const ReportFile file = run_sweep(config);
    std::string path = a.output;
    if (path.empty()) {
        std::filesystem::create_directories(config.output_dir);
        path = (std::filesystem::path(config.output_dir) / fmt::format("verify-{}.jsonl", a.suite)).string();
    }
    emit(write_report_file(file, !a.no_timings), path);
    for (const auto& r : file.reports)
        if (!a.quiet || !r.pass())
            std::cout << summary_line(r) << '\n';
    std::cout << fmt::format("{} reports, {} passed, {} failed; written to {}\n", file.reports.size(), file.passed,
                             file.failed, path);
    return file.failed == 0 ? exit_ok : exit_failed;
}

int cmd_roundtrip(const std::string& input, const std::string& output)
{
    emit(write_support(read_support(read_file(input))), output);
    return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Supports of standard modules over products of type A quivers, and verification of the "
                 "Diassociative cooperad identities"};
    app.require_subcommand(1);

    SupportArgs sa;
    auto* support = app.add_subcommand("support", "Build, transform and render a support");
    support->add_option("--family", sa.family, "s, n, projective, injective or simple");
    support->add_option("--input", sa.input, "Read the support from a file instead");
    support->add_option("--m", sa.m, "m for family s");
    support->add_option("--i", sa.i, "slot i for family s");
    support->add_option("--n", sa.n, "n for families s, n and the interval families");
    support->add_option("--j", sa.j, "vertex j for the interval families");
    support->add_option("--reverse", sa.reversals, "Fiber-reverse along AXIS[:MODE], applied in order");
    support->add_option("--permute", sa.permutation, "Comma-separated axis permutation, new k = old perm[k]");
    support->add_option("--format", sa.format, "text, ascii or svg");
    support->add_option("--output,-o", sa.output, "Output file (default stdout)");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Run verification sweeps and write a report file");
    verify->add_option("--suite", va.suite, "cooperad, anticyclic, k0, oracle or all");
    verify->add_option("--max", va.max, "Bound on m, n and p");
    verify->add_option("--max-m", va.max_m, "Override the bound on m");
    verify->add_option("--max-n", va.max_n, "Override the bound on n");
    verify->add_option("--max-p", va.max_p, "Override the bound on p");
    verify->add_flag("--no-oracle", va.no_oracle, "Skip the module oracle");
    verify->add_option("--oracle-max", va.oracle_max, "Bound on arities for the module oracle (default min(3, max))");
    verify->add_option("--field", va.field, "prime, rational or both");
    verify->add_option("--modulus", va.modulus, "Prime for the modular field");
    verify->add_option("--workers", va.workers, "Worker threads");
    verify->add_option("--output-dir", va.output_dir, "Report directory (default $CATDIAS_OUTPUT_DIR or .)");
    verify->add_option("--output,-o", va.output, "Report file path, overrides --output-dir");
    verify->add_flag("--no-timings", va.no_timings, "Omit timings so the file is reproducible byte for byte");
    verify->add_flag("--quiet,-q", va.quiet, "Print failing reports only");

    std::string rt_input, rt_output;
    auto* roundtrip = app.add_subcommand("roundtrip", "Parse a support file and write it back canonically");
    roundtrip->add_option("file", rt_input, "Support file")->required();
    roundtrip->add_option("--output,-o", rt_output, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_config;
    }

    try {
        if (*support) {
            if (sa.family.empty() == sa.input.empty())
                throw ParameterError("give exactly one of --family and --input");
            return cmd_support(sa);
        }
        if (*verify)
            return cmd_verify(va);
        return cmd_roundtrip(rt_input, rt_output);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return exit_config;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_config;
    }
}
