// Copyright 2026 The entcap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "entcap/report.hpp"

#include <cmath>
#include <ctime>

#include "json_util.hpp"

namespace entcap {

namespace detail {

Json number(double v) {
    return std::isfinite(v) ? Json(v) : Json(nullptr);
}

Json method_json(const AveragingMethod &m) {
    Json j;
    if (std::holds_alternative<ClosedForm>(m)) {
        j["kind"] = "closed-form";
    } else if (auto q = std::get_if<Quadrature>(&m)) {
        j["kind"] = "quadrature";
        j["nodes"] = q->nodes;
        j["laguerre_nodes"] = q->laguerre_nodes;
    } else {
        const auto &mc = std::get<MonteCarlo>(m);
        j["kind"] = "monte-carlo";
        j["samples"] = mc.samples;
        j["seed"] = mc.seed;
    }
    return j;
}

AveragingMethod method_from_json(const Json &j) {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "closed-form") {
        return ClosedForm{};
    }
    if (kind == "quadrature") {
        Quadrature q;
        q.nodes = j.at("nodes").get<std::size_t>();
        q.laguerre_nodes = j.value("laguerre_nodes", q.laguerre_nodes);
        return q;
    }
    if (kind == "monte-carlo") {
        return MonteCarlo{j.at("samples").get<std::size_t>(), j.at("seed").get<std::uint64_t>()};
    }
    fail(ErrorCode::InvalidArgument, "unknown averaging method '" + kind + "'");
}

Json config_json(const ScenarioConfig &c) {
    Json j;
    j["scenario"] = scenario_name(c.id);
    j["prep_width"] = c.prep_width;
    j["interaction_width"] = c.interaction_width;
    if (c.id == ScenarioId::XyzTunable) {
        j["mean_theta_minus"] = c.mean_theta_minus.value_or(0);
        j["phi"] = c.phi.value_or(0);
    }
    j["method"] = method_json(c.method);
    if (is_untunable(c.id)) {
        j["refocus"] = {{"j_tau1", c.refocus.j_tau1()},
                        {"j_tau2", c.refocus.j_tau2()},
                        {"pulse_angle", c.refocus.pulse_angle()}};
        j["refocus_noise"] = refocus_noise_name(c.refocus_noise);
    }
    return j;
}

ScenarioConfig config_from_json(const Json &j) {
    ScenarioConfig c;
    c.id = parse_scenario(j.at("scenario").get<std::string>());
    c.prep_width = j.at("prep_width").get<double>();
    c.interaction_width = j.at("interaction_width").get<double>();
    if (j.contains("mean_theta_minus")) {
        c.mean_theta_minus = j["mean_theta_minus"].get<double>();
    }
    if (j.contains("phi")) {
        c.phi = j["phi"].get<double>();
    }
    c.method = method_from_json(j.at("method"));
    if (j.contains("refocus")) {
        const auto &r = j["refocus"];
        c.refocus = RefocusSchedule(r.at("j_tau1").get<double>(), r.at("j_tau2").get<double>(),
                                    r.at("pulse_angle").get<double>());
    }
    if (j.contains("refocus_noise")) {
        c.refocus_noise = parse_refocus_noise(j["refocus_noise"].get<std::string>());
    }
    c.validate();
    return c;
}

Json row_json(const SweepRow &row) {
    Json j;
    j["scenario"] = scenario_name(row.id);
    j["lambda"] = number(row.lambda);
    j["omega_or_capital_lambda"] = number(row.interaction_width);
    j["zbar"] = number(row.zbar);
    j["phi"] = number(row.phi);
    j["predicate_margin"] = number(row.predicate.margin);
    j["predicate_class"] = region_name(row.predicate.region);
    j["min_pt_eigenvalue"] = number(row.min_pt_eigenvalue);
    j["negativity"] = number(row.negativity);
    j["initial_entropy_bits"] = number(row.initial_entropy_bits);
    j["method"] = row.method;
    return j;
}

}  // namespace detail

namespace {

using detail::Json;
using detail::number;

std::string iso_time(std::chrono::system_clock::time_point t) {
    std::time_t tt = std::chrono::system_clock::to_time_t(t);
    std::tm tm{};
    gmtime_r(&tt, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

Json weights_json(const XyFamilyWeights &w) {
    return {{"w00", w.w00}, {"w_plus", w.w_plus}, {"w_minus", w.w_minus}};
}

}  // namespace

std::string_view version() {
    return "0.1.0";
}

std::string config_report(const ScenarioConfig &c) {
    return detail::config_json(c).dump(2);
}

std::string verdict_report(const ScenarioConfig &c, const ScenarioResult &r) {
    Json j;
    j["config"] = detail::config_json(c);
    j["min_pt_eigenvalue"] = r.verdict.min_pt_eigenvalue;
    j["negativity"] = r.verdict.negativity;
    j["entangled"] = r.verdict.entangled;
    j["indeterminate"] = r.verdict.indeterminate;
    j["tolerance"] = r.verdict.tolerance;
    j["predicate_class"] = region_name(r.predicate.region);
    j["predicate_margin"] = number(r.predicate.margin);
    j["initial_entropy_bits"] = r.initial_entropy_bits;
    j["method"] = r.method;
    if (r.seed) {
        j["seed"] = *r.seed;
    }
    j["timings_ms"] = {{"preparation", r.timings.preparation_ms},
                       {"interaction", r.timings.interaction_ms},
                       {"analysis", r.timings.analysis_ms}};
    return j.dump(2);
}

std::string boundary_report(const BoundaryReport &r) {
    Json j;
    j["scenario"] = scenario_name(r.id);
    j["axis"] = boundary_axis_name(r.axis);
    j["lo"] = r.lo;
    j["hi"] = r.hi;
    j["threshold"] = r.threshold;
    j["closed_form"] = r.closed_form ? number(*r.closed_form) : Json(nullptr);
    j["deviation"] = r.deviation ? number(*r.deviation) : Json(nullptr);
    j["iterations"] = r.iterations;
    return j.dump(2);
}

std::string validation_report(const ValidationReport &r) {
    Json j;
    j["scenario"] = r.scenario;
    j["method"] = r.method;
    j["points"] = r.points;
    j["compared"] = r.compared;
    j["skipped"] = r.skipped;
    j["disagreements"] = r.disagreements;
    j["max_disagreement_margin"] = number(r.max_disagreement_margin);
    j["min_compared_margin"] = number(r.min_compared_margin);
    if (r.max_weight_deviation) {
        j["max_weight_deviation"] = *r.max_weight_deviation;
        j["weights_expected"] = weights_json(*r.weights_expected);
        j["weights_simulated"] = weights_json(*r.weights_simulated);
    }
    j["timings_ms"] = {{"predicate", r.predicate_ms}, {"simulation", r.simulation_ms}};
    return j.dump(2);
}

std::string sweep_manifest(const SweepGrid &grid, const SweepOutput &out, OutputFormat format,
                           std::chrono::system_clock::time_point started) {
    Json j;
    j["tool"] = "entcap";
    j["version"] = version();
    j["started_utc"] = iso_time(started);
    j["config"] = detail::config_json(grid.base);
    auto axes = Json::array();
    for (const auto &axis : grid.axes) {
        axes.push_back({{"name", sweep_param_name(axis.param)},
                        {"start", axis.start},
                        {"stop", axis.stop},
                        {"step", axis.step},
                        {"count", axis.count()}});
    }
    j["grid"] = axes;
    j["points"] = out.rows;
    if (auto mc = std::get_if<MonteCarlo>(&grid.base.method)) {
        j["seed"] = mc->seed;
    } else {
        j["seed"] = nullptr;
    }
    j["output"] = {{"path", out.data_path}, {"format", output_format_name(format)}};
    j["workers"] = out.workers;
    j["timings_ms"] = {{"wall", out.timings.wall_ms},
                       {"preparation", out.timings.preparation_ms},
                       {"interaction", out.timings.interaction_ms},
                       {"analysis", out.timings.analysis_ms},
                       {"write", out.timings.write_ms}};
    return j.dump(2);
}

SweepGrid grid_from_manifest(std::string_view manifest_json) {
    Json j;
    try {
        j = Json::parse(manifest_json);
        SweepGrid grid;
        grid.base = detail::config_from_json(j.at("config"));
        for (const auto &a : j.at("grid")) {
            SweepAxis axis;
            axis.param = parse_sweep_param(a.at("name").get<std::string>());
            axis.start = a.at("start").get<double>();
            axis.stop = a.at("stop").get<double>();
            axis.step = a.at("step").get<double>();
            grid.axes.push_back(axis);
        }
        grid.validate();
        return grid;
    } catch (const nlohmann::json::exception &e) {
        fail(ErrorCode::InvalidArgument, std::string("malformed manifest: ") + e.what());
    }
}

}  // namespace entcap
