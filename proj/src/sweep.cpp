#include "catdias/sweep.hpp"

#include "catdias/error.hpp"
#include "catdias/families.hpp"
#include "catdias/k0.hpp"
#include "catdias/oracle.hpp"
#include "catdias/serialize.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fmt/format.h>
#include <thread>

namespace catdias {

std::string to_string(Suite suite)
{
    switch (suite) {
    case Suite::cooperad:
        return "cooperad";
    case Suite::anticyclic:
        return "anticyclic";
    case Suite::k0:
        return "k0";
    case Suite::oracle:
        return "oracle";
    }
    return "?";
}

std::vector<Suite> parse_suites(const std::string& name)
{
    if (name == "all")
        return {Suite::cooperad, Suite::anticyclic, Suite::k0, Suite::oracle};
    for (Suite s : {Suite::cooperad, Suite::anticyclic, Suite::k0, Suite::oracle})
        if (to_string(s) == name)
            return {s};
    throw ParameterError(fmt::format("unknown suite '{}' (expected cooperad, anticyclic, k0, oracle or all)", name));
}

void validate(const SweepConfig& config)
{
    if (config.max_m < 1 || config.max_n < 1 || config.max_p < 1)
        throw ParameterError("sweep bounds must be positive");
    if (config.oracle_max < 1)
        throw ParameterError("oracle bound must be positive");
    if (config.oracle_max > std::min({config.max_m, config.max_n, config.max_p}))
        throw ParameterError(fmt::format("oracle bound {} exceeds the sweep bounds", config.oracle_max));
    if (config.workers < 1)
        throw ParameterError("worker count must be positive");
    if (config.suites.empty())
        throw ParameterError("no suite selected");
    if (config.fields.empty())
        throw ParameterError("no field selected");
    for (const auto& f : config.fields)
        if (f.kind == FieldConfig::Kind::prime && !is_prime(f.modulus))
            throw ParameterError(fmt::format("modulus {} is not prime", f.modulus));
}

namespace {

using Tasks = std::vector<SweepTask>;

template <class F>
void add(Tasks& tasks, std::string label, F&& f)
{
    tasks.push_back({std::move(label), [f = std::forward<F>(f)] { return std::vector<Report>{f()}; }});
}

void plan_cooperad(const SweepConfig& c, Tasks& tasks)
{
    for (int m = 1; m <= c.max_m; ++m)
        for (int n = 1; n <= c.max_n; ++n)
            for (int p = 1; p <= c.max_p; ++p)
                for (int i = 1; i <= m; ++i)
                    for (int j = i + 1; j <= m; ++j)
                        add(tasks, fmt::format("commutativity {} {} {} {} {}", m, n, p, i, j),
                            [=] { return verify_commutativity(m, n, p, i, j); });
    for (int m = 1; m <= c.max_m; ++m)
        for (int n = 1; n <= c.max_n; ++n)
            for (int p = 1; p <= c.max_p; ++p)
                for (int i = 1; i <= m; ++i)
                    for (int j = 1; j <= n; ++j)
                        add(tasks, fmt::format("associativity {} {} {} {} {}", m, n, p, i, j),
                            [=] { return verify_associativity(m, n, p, i, j); });
}

void plan_anticyclic(const SweepConfig& c, Tasks& tasks)
{
    for (int m = 1; m <= c.max_m; ++m)
        for (int n = 1; n <= c.max_n; ++n)
            add(tasks, fmt::format("border {} {}", m, n), [=] { return verify_border(m, n); });
    for (int m = 2; m <= c.max_m; ++m)
        for (int n = 1; n <= c.max_n; ++n)
            for (int i = 2; i <= m; ++i)
                add(tasks, fmt::format("inner {} {} {}", m, n, i), [=] { return verify_inner(m, n, i); });
}

void plan_k0(const SweepConfig& c, Tasks& tasks)
{
    for (int m = 1; m <= c.max_m; ++m)
        for (int n = 1; n <= c.max_n; ++n)
            for (int i = 1; i <= m; ++i) {
                add(tasks, fmt::format("nabla-formulas {} {} {}", m, i, n), [=] { return verify_nabla_formulas(m, i, n); });
                add(tasks, fmt::format("duality {} {} {}", m, i, n), [=] { return duality_check(m, i, n); });
            }
    for (int m = 1; m <= c.max_m; ++m)
        for (int n = 1; n <= c.max_n; ++n)
            add(tasks, fmt::format("border-k0 {} {}", m, n), [=] { return verify_border_k0(m, n); });
    for (int m = 2; m <= c.max_m; ++m)
        for (int n = 1; n <= c.max_n; ++n)
            for (int i = 2; i <= m; ++i)
                add(tasks, fmt::format("inner-k0 {} {} {}", m, n, i), [=] { return verify_inner_k0(m, n, i); });
    for (int m = 1; m <= c.max_m; ++m)
        for (int n = 1; n <= c.max_n; ++n)
            for (int p = 1; p <= c.max_p; ++p)
                for (int i = 1; i <= m; ++i)
                    for (int j = 1; j <= std::max(m, n); ++j)
                        if ((i < j && j <= m) || j <= n)
                            add(tasks, fmt::format("dias-axioms {} {} {} {} {}", m, n, p, i, j),
                                [=] { return dias_operad_axiom_check(m, n, p, i, j); });
    for (int n = 1; n <= 2 * std::max({c.max_m, c.max_n, c.max_p}); ++n)
        add(tasks, fmt::format("tau-order {}", n), [=] { return verify_tau_order(n); });
}

Report field_agreement(const std::string& what, const std::vector<std::pair<std::string, int>>& params,
                       const std::vector<FieldConfig>& fields, const std::function<K0Vector(const FieldConfig&)>& dims)
{
    return timed([&] {
        Report report;
        report.verifier = "oracle-field-agreement";
        report.params = params;
        report.params.emplace_back("fields", static_cast<int>(fields.size()));
        const K0Vector first = dims(fields.front());
        for (std::size_t f = 1; f < fields.size(); ++f) {
            const K0Vector other = dims(fields[f]);
            for (std::size_t v = 0; v < first.size(); ++v)
                if (first[v] != other[v])
                    report.fail(what + " " + fields[f].name(), {static_cast<int>(v)});
        }
        report.left_size = report.right_size = first.size();
        return report;
    });
}

void plan_oracle(const SweepConfig& c, Tasks& tasks)
{
    const int top = c.oracle_max;
    const auto fields = c.fields;
    using OracleFn = std::vector<Report> (*)(int, int, int, int, int, const FieldConfig&);
    auto contractions = [fields](const char* name, OracleFn oracle, std::vector<Contraction> sides,
                                 FamilyParams fp) {
        std::vector<Report> out;
        for (const auto& f : fields) {
            auto part = oracle(fp.m, fp.n, fp.p, fp.i, fp.j, f);
            out.insert(out.end(), part.begin(), part.end());
        }
        if (fields.size() > 1)
            for (std::size_t side = 0; side < sides.size(); ++side) {
                const Contraction& cs = sides[side];
                out.push_back(field_agreement(
                    name, {{"m", fp.m}, {"n", fp.n}, {"p", fp.p}, {"i", fp.i}, {"j", fp.j}, {"side", int(side)}},
                    fields, [&](const FieldConfig& f) {
                        return tensor_dimensions(cs.left, cs.left_axis, cs.right, cs.right_axis, cs.to_canonical, f);
                    }));
            }
        return out;
    };
    for (int m = 1; m <= top; ++m)
        for (int n = 1; n <= top; ++n)
            for (int p = 1; p <= top; ++p) {
                for (int i = 1; i <= m; ++i)
                    for (int j = i + 1; j <= m; ++j)
                        tasks.push_back({fmt::format("oracle-commutativity {} {} {} {} {}", m, n, p, i, j), [=] {
                                             return contractions("commutativity", verify_commutativity_oracle,
                                                                 commutativity_contractions(m, n, p, i, j),
                                                                 {m, n, p, i, j});
                                         }});
                for (int i = 1; i <= m; ++i)
                    for (int j = 1; j <= n; ++j)
                        tasks.push_back({fmt::format("oracle-associativity {} {} {} {} {}", m, n, p, i, j), [=] {
                                             return contractions("associativity", verify_associativity_oracle,
                                                                 associativity_contractions(m, n, p, i, j),
                                                                 {m, n, p, i, j});
                                         }});
            }
    for (int m = 1; m <= top; ++m)
        for (int n = 1; n <= top; ++n)
            for (int i = 1; i <= m; ++i)
                tasks.push_back({fmt::format("oracle-nakayama {} {} {}", m, i, n), [=] {
                                     std::vector<Report> out;
                                     for (const auto& f : fields) {
                                         out.push_back(verify_nakayama_gamma(m, i, n, f));
                                         out.push_back(verify_nakayama_mu(m, i, n, f));
                                     }
                                     if (fields.size() > 1) {
                                         const Support s = s_support(m, i, n);
                                         out.push_back(field_agreement(
                                             "nakayama-gamma", {{"m", m}, {"i", i}, {"n", n}}, fields,
                                             [&](const FieldConfig& f) {
                                                 return tensor_dimensions(n_support(m + n - 1), 1, s, 0, {0, 1, 2}, f);
                                             }));
                                         out.push_back(field_agreement(
                                             "nakayama-mu", {{"m", m}, {"i", i}, {"n", n}}, fields,
                                             [&](const FieldConfig& f) {
                                                 return tensor_dimensions(s, 1, n_support(m), 0, {0, 2, 1}, f);
                                             }));
                                     }
                                     return out;
                                 }});
}

} // namespace

std::vector<SweepTask> plan_sweep(const SweepConfig& config)
{
    validate(config);
    Tasks tasks;
    for (Suite s : config.suites) {
        switch (s) {
        case Suite::cooperad:
            plan_cooperad(config, tasks);
            break;
        case Suite::anticyclic:
            plan_anticyclic(config, tasks);
            break;
        case Suite::k0:
            plan_k0(config, tasks);
            break;
        case Suite::oracle:
            plan_oracle(config, tasks);
            break;
        }
    }
    return tasks;
}

ReportFile run_sweep(const SweepConfig& config)
{
    const auto start = std::chrono::steady_clock::now();
    const auto tasks = plan_sweep(config);
    std::vector<std::vector<Report>> results(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t t = next++; t < tasks.size(); t = next++) {
            try {
                results[t] = tasks[t].run();
            } catch (const std::exception& e) {
                Report r;
                r.verifier = "error";
                r.fail(fmt::format("{}: {}", tasks[t].label, e.what()));
                results[t] = {r};
            }
        }
    };
    const int threads = std::max(1, std::min<int>(config.workers, static_cast<int>(tasks.size())));
    std::vector<std::thread> pool;
    for (int w = 1; w < threads; ++w)
        pool.emplace_back(worker);
    worker();
    for (auto& th : pool)
        th.join();

    ReportFile file;
    file.config = config;
    for (auto& batch : results)
        for (auto& r : batch) {
            (r.pass() ? file.passed : file.failed) += 1;
            file.reports.push_back(std::move(r));
        }
    file.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return file;
}

std::string write_report_file(const ReportFile& file, bool with_timing)
{
    nlohmann::ordered_json suites = nlohmann::ordered_json::array();
    for (Suite s : file.config.suites)
        suites.push_back(to_string(s));
    nlohmann::ordered_json fields = nlohmann::ordered_json::array();
    for (const auto& f : file.config.fields)
        fields.push_back(f.name());
    const nlohmann::ordered_json header = {
        {"type", "header"},
        {"tool", "catdias"},
        {"version", file.version},
        {"config",
         {{"suites", suites},
          {"max_m", file.config.max_m},
          {"max_n", file.config.max_n},
          {"max_p", file.config.max_p},
          {"oracle_max", file.config.oracle_max},
          {"fields", fields}}},
    };
    std::string out = header.dump() + '\n';
    for (const auto& r : file.reports) {
        nlohmann::ordered_json rec = {{"type", "report"}};
        rec.update(to_json(r, with_timing));
        out += rec.dump() + '\n';
    }
    const nlohmann::ordered_json summary = {{"type", "summary"},
                                            {"total", file.reports.size()},
                                            {"passed", file.passed},
                                            {"failed", file.failed}};
    out += summary.dump() + '\n';
    if (with_timing)
        out += nlohmann::ordered_json{{"type", "timing"}, {"elapsed_ms", file.elapsed_ms}}.dump() + '\n';
    return out;
}

} // namespace catdias
