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

#include "entcap/sweep.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>

#include "entcap/report.hpp"
#include "json_util.hpp"

namespace entcap {

namespace {

struct ParamName {
    SweepParam param;
    std::string_view name;
};

constexpr ParamName kParamNames[] = {
    {SweepParam::Lambda, "lambda"},         {SweepParam::Omega, "omega"},
    {SweepParam::CapitalLambda, "capital-lambda"}, {SweepParam::ThetaMinus, "theta-minus"},
    {SweepParam::Zbar, "zbar"},             {SweepParam::Phi, "phi"},
    {SweepParam::A, "a"},                   {SweepParam::B, "b"},
};

double parse_number(std::string_view text, std::string_view what) {
    double v = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || end != text.data() + text.size() || !std::isfinite(v)) {
        fail(ErrorCode::InvalidArgument, "malformed " + std::string(what) + " '" + std::string(text) + "'");
    }
    return v;
}

bool is_xyz_only(SweepParam p) {
    return p == SweepParam::ThetaMinus || p == SweepParam::Zbar || p == SweepParam::Phi;
}

// Which ScenarioConfig field an axis drives.
int target_of(SweepParam p) {
    switch (p) {
        case SweepParam::Lambda:
        case SweepParam::A:
            return 0;
        case SweepParam::Omega:
        case SweepParam::CapitalLambda:
        case SweepParam::B:
            return 1;
        case SweepParam::ThetaMinus:
        case SweepParam::Zbar:
            return 2;
        case SweepParam::Phi:
            return 3;
    }
    return -1;
}

void assign(ScenarioConfig &c, SweepParam p, double v) {
    switch (p) {
        case SweepParam::Lambda:
            c.prep_width = v;
            break;
        case SweepParam::Omega:
        case SweepParam::CapitalLambda:
            c.interaction_width = v;
            break;
        case SweepParam::ThetaMinus:
            c.mean_theta_minus = v;
            break;
        case SweepParam::Zbar:
            c.mean_theta_minus = 0.5 * std::acos(v);
            break;
        case SweepParam::Phi:
            c.phi = v;
            break;
        case SweepParam::A:
            c.prep_width = std::sqrt(-2 * std::log(v));
            break;
        case SweepParam::B:
            c.interaction_width = std::sqrt(-0.5 * std::log(v));
            break;
    }
}

std::string format_double(double v) {
    if (std::isnan(v)) {
        return "";
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

SweepRow make_row(const ScenarioConfig &c, ScenarioResult &&result) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const bool xyz = c.id == ScenarioId::XyzTunable;
    SweepRow row;
    row.id = c.id;
    row.lambda = c.prep_width;
    row.interaction_width = c.interaction_width;
    row.zbar = xyz ? std::cos(2 * c.mean_theta_minus.value_or(0)) : nan;
    row.phi = xyz ? c.phi.value_or(0) : nan;
    row.predicate = result.predicate;
    row.min_pt_eigenvalue = result.verdict.min_pt_eigenvalue;
    row.negativity = result.verdict.negativity;
    row.initial_entropy_bits = result.initial_entropy_bits;
    row.method = std::move(result.method);
    return row;
}

// Grid value of a zbar axis, reported as given rather than through acos.
std::optional<double> zbar_at(const SweepGrid &grid, std::size_t index) {
    for (std::size_t k = grid.axes.size(); k-- > 0;) {
        const std::size_t n = grid.axes[k].count();
        if (grid.axes[k].param == SweepParam::Zbar) {
            return grid.axes[k].value(index % n);
        }
        index /= n;
    }
    return std::nullopt;
}

using Clock = std::chrono::steady_clock;

}  // namespace

std::string_view sweep_param_name(SweepParam p) {
    for (const auto &entry : kParamNames) {
        if (entry.param == p) {
            return entry.name;
        }
    }
    return "unknown";
}

SweepParam parse_sweep_param(std::string_view name) {
    for (const auto &entry : kParamNames) {
        if (entry.name == name) {
            return entry.param;
        }
    }
    fail(ErrorCode::InvalidArgument, "unknown sweep axis '" + std::string(name) + "'");
}

SweepAxis SweepAxis::parse(std::string_view text) {
    auto eq = text.find('=');
    require(eq != std::string_view::npos, "grid axis '" + std::string(text) + "' is not name=start:stop:step");
    SweepAxis axis;
    axis.param = parse_sweep_param(text.substr(0, eq));
    auto range = text.substr(eq + 1);
    auto c1 = range.find(':');
    auto c2 = c1 == std::string_view::npos ? c1 : range.find(':', c1 + 1);
    require(c2 != std::string_view::npos && range.find(':', c2 + 1) == std::string_view::npos,
            "grid axis '" + std::string(text) + "' is not name=start:stop:step");
    axis.start = parse_number(range.substr(0, c1), "grid start");
    axis.stop = parse_number(range.substr(c1 + 1, c2 - c1 - 1), "grid stop");
    axis.step = parse_number(range.substr(c2 + 1), "grid step");
    axis.validate();
    return axis;
}

void SweepAxis::validate() const {
    const std::string name(sweep_param_name(param));
    require(std::isfinite(start) && std::isfinite(stop) && std::isfinite(step), "grid axis " + name + " is not finite");
    require(step > 0, "grid axis " + name + " needs a positive step");
    require(start <= stop, "grid axis " + name + " needs start <= stop");
    if (param == SweepParam::A || param == SweepParam::B) {
        require(start > 0 && stop <= 1, "grid axis " + name + " must lie in (0, 1]");
    } else if (param == SweepParam::Zbar) {
        require(start >= -1 && stop <= 1, "grid axis zbar must lie in [-1, 1]");
    } else if (param != SweepParam::ThetaMinus && param != SweepParam::Phi) {
        require(start >= 0, "grid axis " + name + " is a width and must be non-negative");
    }
    require((stop - start) / step < static_cast<double>(kMaxSweepPoints), "grid axis " + name + " has too many points");
}

std::size_t SweepAxis::count() const {
    return static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
}

double SweepAxis::value(std::size_t i) const {
    return std::min(start + static_cast<double>(i) * step, stop);
}

std::string_view output_format_name(OutputFormat f) {
    return f == OutputFormat::Csv ? "csv" : "json";
}

OutputFormat parse_output_format(std::string_view name) {
    if (name == "csv") {
        return OutputFormat::Csv;
    }
    if (name == "json") {
        return OutputFormat::Json;
    }
    fail(ErrorCode::InvalidArgument, "unknown output format '" + std::string(name) + "'");
}

void SweepGrid::validate() const {
    require(!axes.empty(), "a sweep needs at least one grid axis");
    require(axes.size() <= kMaxSweepAxes, "a sweep takes at most 3 grid axes");
    bool used[4] = {};
    double total = 1;
    for (const auto &axis : axes) {
        axis.validate();
        int t = target_of(axis.param);
        require(!used[t], "grid axis " + std::string(sweep_param_name(axis.param)) + " duplicates another axis");
        used[t] = true;
        if (is_xyz_only(axis.param)) {
            require(base.id == ScenarioId::XyzTunable,
                    "grid axis " + std::string(sweep_param_name(axis.param)) + " only applies to xyz-tunable");
        }
        total *= static_cast<double>(axis.count());
    }
    if (total > static_cast<double>(kMaxSweepPoints)) {
        fail(ErrorCode::LimitExceeded, "grid has " + format_double(total) + " points, more than the limit of " +
                                           std::to_string(kMaxSweepPoints));
    }
    base.validate();
}

std::size_t SweepGrid::size() const {
    std::size_t n = 1;
    for (const auto &axis : axes) {
        n *= axis.count();
    }
    return n;
}

ScenarioConfig SweepGrid::point(std::size_t index) const {
    ScenarioConfig c = base;
    std::size_t rest = index;
    for (std::size_t k = axes.size(); k-- > 0;) {
        const std::size_t n = axes[k].count();
        assign(c, axes[k].param, axes[k].value(rest % n));
        rest /= n;
    }
    if (c.id == ScenarioId::XyzTunable) {
        c.mean_theta_minus = c.mean_theta_minus.value_or(0);
        c.phi = c.phi.value_or(0);
    }
    c.method = method_for_stage(base.method, index);
    return c;
}

SweepRow evaluate_point(const ScenarioConfig &c) {
    return make_row(c, run_scenario(c));
}

std::vector<SweepRow> run_sweep(const SweepGrid &grid, unsigned workers, SweepTimings *timings) {
    grid.validate();
    const auto start = Clock::now();
    const std::size_t n = grid.size();
    if (workers == 0) {
        workers = std::max(1u, std::thread::hardware_concurrency());
    }
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));

    std::vector<SweepRow> rows(n);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    std::exception_ptr error;
    std::mutex mu;
    ScenarioTimings total;

    auto work = [&] {
        ScenarioTimings local;
        try {
            for (std::size_t i = next++; i < n && !stop; i = next++) {
                auto c = grid.point(i);
                auto result = run_scenario(c);
                local.preparation_ms += result.timings.preparation_ms;
                local.interaction_ms += result.timings.interaction_ms;
                local.analysis_ms += result.timings.analysis_ms;
                rows[i] = make_row(c, std::move(result));
                if (auto z = zbar_at(grid, i)) {
                    rows[i].zbar = *z;
                }
            }
        } catch (...) {
            std::lock_guard lock(mu);
            if (!error) {
                error = std::current_exception();
            }
            stop = true;
        }
        std::lock_guard lock(mu);
        total.preparation_ms += local.preparation_ms;
        total.interaction_ms += local.interaction_ms;
        total.analysis_ms += local.analysis_ms;
    };

    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; w++) {
        pool.emplace_back(work);
    }
    work();
    for (auto &t : pool) {
        t.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
    if (timings) {
        timings->preparation_ms = total.preparation_ms;
        timings->interaction_ms = total.interaction_ms;
        timings->analysis_ms = total.analysis_ms;
        timings->wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    }
    return rows;
}

std::string_view csv_header() {
    return "scenario,lambda,omega_or_capital_lambda,zbar,phi,predicate_margin,predicate_class,min_pt_eigenvalue,"
           "negativity,initial_entropy_bits,method";
}

std::string csv_row(const SweepRow &row) {
    std::string line(scenario_name(row.id));
    for (double v : {row.lambda, row.interaction_width, row.zbar, row.phi, row.predicate.margin}) {
        line += ',';
        line += format_double(v);
    }
    line += ',';
    line += region_name(row.predicate.region);
    for (double v : {row.min_pt_eigenvalue, row.negativity, row.initial_entropy_bits}) {
        line += ',';
        line += format_double(v);
    }
    line += ',';
    line += row.method;
    return line;
}

void write_csv(std::ostream &out, const std::vector<SweepRow> &rows) {
    out << csv_header() << '\n';
    for (const auto &row : rows) {
        out << csv_row(row) << '\n';
    }
}

void write_json(std::ostream &out, const std::vector<SweepRow> &rows) {
    auto doc = nlohmann::ordered_json::array();
    for (const auto &row : rows) {
        doc.push_back(detail::row_json(row));
    }
    out << doc.dump(2) << '\n';
}

SweepOutput sweep_to_file(const SweepGrid &grid, const std::string &path, OutputFormat format, unsigned workers) {
    require(!path.empty(), "sweep output path is empty");
    const auto wall_start = std::chrono::system_clock::now();
    SweepOutput out;
    out.data_path = path;
    out.manifest_path = path + ".manifest.json";
    out.workers = workers == 0 ? std::max(1u, std::thread::hardware_concurrency()) : workers;

    // Open first so an unwritable path fails before the sweep runs.
    std::ofstream data(path, std::ios::binary | std::ios::trunc);
    if (!data) {
        fail(ErrorCode::Io, "cannot open '" + path + "' for writing");
    }
    auto rows = run_sweep(grid, out.workers, &out.timings);
    out.rows = rows.size();

    const auto write_start = Clock::now();
    if (format == OutputFormat::Csv) {
        write_csv(data, rows);
    } else {
        write_json(data, rows);
    }
    data.close();
    if (!data) {
        fail(ErrorCode::Io, "failed writing '" + path + "'");
    }
    out.timings.write_ms = std::chrono::duration<double, std::milli>(Clock::now() - write_start).count();

    std::ofstream manifest(out.manifest_path, std::ios::binary | std::ios::trunc);
    if (!manifest) {
        fail(ErrorCode::Io, "cannot open '" + out.manifest_path + "' for writing");
    }
    manifest << sweep_manifest(grid, out, format, wall_start) << '\n';
    manifest.close();
    if (!manifest) {
        fail(ErrorCode::Io, "failed writing '" + out.manifest_path + "'");
    }
    return out;
}

}  // namespace entcap
