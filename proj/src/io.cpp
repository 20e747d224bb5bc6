#include "slo/io.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace slo {

std::string format_double(double x) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

namespace {

std::string format_optional(const std::optional<double>& x) {
    return x ? format_double(*x) : std::string{};
}

template <typename Fn>
void emit_to_file(const std::string& path, Fn&& emit) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    emit(out);
    out.flush();
    if (!out)
        throw std::runtime_error("write to '" + path + "' failed");
}

} // namespace

void emit_trace_csv(const RunResult& result, std::ostream& out) {
    out << "season,best_wealthy,best_regular,best_weakest,global_best\n";
    for (const auto& r : result.trace) {
        out << r.season << ',' << format_optional(r.best_wealthy) << ','
            << format_optional(r.best_regular) << ',' << format_optional(r.best_weakest) << ','
            << format_double(r.global_best) << '\n';
    }
    if (!out)
        throw std::runtime_error("trace stream write failed");
}

void emit_trace_csv(const RunResult& result, const std::string& path) {
    emit_to_file(path, [&](std::ostream& out) { emit_trace_csv(result, out); });
}

void emit_summary_json(const SummaryTable& summary, std::ostream& out,
                       const AcceptanceReport* acceptance) {
    nlohmann::json doc;
    doc["objective"] = summary.objective;
    doc["algorithm"] = summary.algorithm;

    nlohmann::json runs = nlohmann::json::array();
    for (const auto& row : summary.rows) {
        runs.push_back({{"run", row.run},
                        {"seed", row.seed},
                        {"best_raw", row.best_raw},
                        {"best_score", row.best_score},
                        {"best_point", row.best_point}});
    }
    doc["runs"] = std::move(runs);

    // aggregates are reported in raw objective space; the sense mapping is
    // an exact negation so they stay consistent with the score aggregates
    const ObjectiveSpec& spec = lookup(summary.objective);
    doc["aggregates"] = {{"best", spec.to_raw(summary.best_score)},
                         {"median", spec.to_raw(summary.median_score)},
                         {"worst", spec.to_raw(summary.worst_score)},
                         {"mean", spec.to_raw(summary.mean_score)},
                         {"stddev", summary.stddev_score},
                         {"best_point", summary.best_point}};

    if (acceptance) {
        nlohmann::json checks = nlohmann::json::array();
        for (const auto& c : acceptance->checks)
            checks.push_back({{"name", c.name},
                              {"observed", c.observed},
                              {"threshold", c.threshold},
                              {"pass", c.pass}});
        doc["acceptance"] = {{"all_pass", acceptance->all_pass}, {"checks", std::move(checks)}};
    }

    out << doc.dump(2) << '\n';
    if (!out)
        throw std::runtime_error("summary stream write failed");
}

void emit_summary_json(const SummaryTable& summary, const std::string& path,
                       const AcceptanceReport* acceptance) {
    emit_to_file(path, [&](std::ostream& out) { emit_summary_json(summary, out, acceptance); });
}

void emit_snapshot(const League& league, std::ostream& out) {
    const std::size_t dim = league.global_best_point.size();
    out << "tier,team_index";
    for (std::size_t d = 0; d < dim; ++d)
        out << ",dim_" << d;
    out << ",score\n";
    for (Tier t : {Tier::Wealthiest, Tier::Regular, Tier::Weakest}) {
        const auto& teams = league.tier(t);
        for (std::size_t i = 0; i < teams.size(); ++i) {
            out << tier_name(t) << ',' << i;
            for (double v : teams[i].values)
                out << ',' << format_double(v);
            out << ',' << format_double(teams[i].score) << '\n';
        }
    }
    if (!out)
        throw std::runtime_error("snapshot stream write failed");
}

void emit_snapshot(const League& league, const std::string& path) {
    emit_to_file(path, [&](std::ostream& out) { emit_snapshot(league, out); });
}

} // namespace slo
