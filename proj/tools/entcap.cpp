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

// entcap command-line tool. Links only the C interface.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "entcap/entcap.h"

namespace {

constexpr int kExitEntangled = 0;
constexpr int kExitSeparable = 1;
constexpr int kExitIndeterminate = 2;
constexpr int kExitNoSignChange = 3;
constexpr int kExitUsage = 64;
constexpr int kExitSoftware = 70;
constexpr int kExitIo = 74;

// Thrown after a failing C call; carries the process exit code.
struct CliFailure {
    int code;
};

int exit_code_for(entcap_status s) {
    switch (s) {
        case ENTCAP_ERR_INVALID_ARGUMENT:
        case ENTCAP_ERR_LIMIT:
            return kExitUsage;
        case ENTCAP_ERR_NO_SIGN_CHANGE:
            return kExitNoSignChange;
        case ENTCAP_ERR_IO:
            return kExitIo;
        default:
            return kExitSoftware;
    }
}

void check(entcap_status s) {
    if (s != ENTCAP_OK) {
        std::fprintf(stderr, "entcap: %s: %s\n", entcap_status_name(s), entcap_last_error());
        throw CliFailure{exit_code_for(s)};
    }
}

[[noreturn]] void usage(const std::string &msg) {
    std::fprintf(stderr, "entcap: %s\n", msg.c_str());
    throw CliFailure{kExitUsage};
}

struct ConfigDeleter {
    void operator()(entcap_config *c) const {
        entcap_config_destroy(c);
    }
};
using ConfigPtr = std::unique_ptr<entcap_config, ConfigDeleter>;

struct OwnedString {
    char *s = nullptr;
    ~OwnedString() {
        entcap_string_free(s);
    }
};

// Flags shared by every scenario subcommand.
struct ScenarioFlags {
    std::string scenario;
    std::optional<double> lambda;
    std::optional<double> omega;
    std::optional<double> capital_lambda;
    std::optional<double> theta_minus;
    std::optional<double> zbar;
    std::optional<double> phi;
    std::string method = "closed-form";
    std::uint64_t nodes = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 42;
    std::string refocus_noise = "pulse-angle";
    std::optional<double> tau1;
    std::optional<double> tau2;
    double pulse_angle = 3.141592653589793;
    bool json = false;

    void add_to(CLI::App *app, bool needs_widths, const std::string &default_method) {
        method = default_method;
        app->add_option("--scenario", scenario, "ising-tunable, ising-untunable, xyz-tunable, xy-family, "
                                                "ising-laplace or ising-untunable-laplace")
            ->required();
        auto *l = app->add_option("--lambda", lambda, "preparation noise width");
        auto *o = app->add_option("--omega", omega, "interaction noise width (tunable scenarios)");
        auto *cl = app->add_option("--capital-lambda", capital_lambda, "pulse noise width (untunable scenarios)");
        o->excludes(cl);
        if (needs_widths) {
            l->required();
        }
        app->add_option("--theta-minus", theta_minus, "xyz-tunable: mean of theta_x - theta_y")->excludes(
            app->add_option("--zbar", zbar, "xyz-tunable: cos(2 * mean theta minus)"));
        app->add_option("--phi", phi, "xyz-tunable: ZZ angle");
        app->add_option("--method", method, "closed-form, quadrature or monte-carlo")
            ->check(CLI::IsMember({"closed-form", "quadrature", "monte-carlo"}));
        app->add_option("--nodes", nodes, "quadrature nodes: Gauss-Hermite (odd, default 61) or, for Laplace scenarios, Gauss-Laguerre per half-line (default 64)");
        app->add_option("--samples", samples, "Monte Carlo samples");
        app->add_option("--seed", seed, "Monte Carlo seed");
        app->add_option("--refocus-noise", refocus_noise, "pulse-angle or duration")
            ->check(CLI::IsMember({"pulse-angle", "duration"}));
        app->add_option("--tau1", tau1, "J*tau1 of the refocusing schedule");
        app->add_option("--tau2", tau2, "J*tau2 of the refocusing schedule");
        app->add_option("--pulse-angle", pulse_angle, "mean refocusing pulse angle");
        app->add_flag("--json", json, "print a JSON report");
    }

    bool untunable() const {
        return scenario == "ising-untunable" || scenario == "ising-untunable-laplace";
    }

    ConfigPtr build(bool require_interaction) const {
        entcap_config *raw = nullptr;
        check(entcap_config_create(scenario.c_str(), &raw));
        ConfigPtr c(raw);
        if (untunable() && omega) {
            usage("use --capital-lambda for " + scenario);
        }
        if (!untunable() && capital_lambda) {
            usage("--capital-lambda only applies to the untunable scenarios; use --omega");
        }
        auto width = untunable() ? capital_lambda : omega;
        if (require_interaction && !width) {
            usage(std::string(untunable() ? "--capital-lambda" : "--omega") + " is required");
        }
        if (lambda) {
            check(entcap_config_set(c.get(), "lambda", *lambda));
        }
        if (width) {
            check(entcap_config_set(c.get(), "omega", *width));
        }
        if (theta_minus) {
            check(entcap_config_set(c.get(), "theta-minus", *theta_minus));
        }
        if (zbar) {
            check(entcap_config_set(c.get(), "zbar", *zbar));
        }
        if (phi) {
            check(entcap_config_set(c.get(), "phi", *phi));
        }
        std::uint64_t count = method == "quadrature" ? nodes : method == "monte-carlo" ? samples : 0;
        check(entcap_config_set_method(c.get(), method.c_str(), count, seed));
        check(entcap_config_set_refocus_noise(c.get(), refocus_noise.c_str()));
        if (tau1 || tau2) {
            if (!tau1 || !tau2) {
                usage("--tau1 and --tau2 go together");
            }
            check(entcap_config_set_refocus(c.get(), *tau1, *tau2, pulse_angle));
        } else if (pulse_angle != 3.141592653589793) {
            check(entcap_config_set_refocus(c.get(), 3 * 3.141592653589793 / 4, 3.141592653589793 / 2, pulse_angle));
        }
        return c;
    }
};

const char *region_text(entcap_region r) {
    switch (r) {
        case ENTCAP_REGION_ENTANGLED:
            return "entangled";
        case ENTCAP_REGION_SEPARABLE:
            return "separable";
        default:
            return "boundary";
    }
}

std::string output_path(const std::string &path) {
    const char *dir = std::getenv("ENTCAP_OUTPUT_DIR");
    if (!dir || !*dir || path.empty() || path.front() == '/') {
        return path;
    }
    std::string out = dir;
    if (out.back() != '/') {
        out += '/';
    }
    return out + path;
}

int run_verdict(const ScenarioFlags &f) {
    auto c = f.build(true);
    entcap_result *raw = nullptr;
    check(entcap_run(c.get(), &raw));
    std::unique_ptr<entcap_result, void (*)(entcap_result *)> result(raw, entcap_result_destroy);
    entcap_verdict_info v{};
    check(entcap_result_verdict(result.get(), &v));
    if (f.json) {
        OwnedString json;
        check(entcap_result_json(result.get(), &json.s));
        std::printf("%s\n", json.s);
    } else {
        const char *state = v.indeterminate ? "indeterminate" : v.entangled ? "entangled" : "separable";
        std::printf("%s: %s\n", f.scenario.c_str(), state);
        std::printf("  min partial-transpose eigenvalue  %.12g\n", v.min_pt_eigenvalue);
        std::printf("  negativity                        %.12g\n", v.negativity);
        std::printf("  criterion                         %s (margin %.12g)\n", region_text(v.predicate_region),
                    v.predicate_margin);
        std::printf("  initial entropy (bits)            %.12g\n", v.initial_entropy_bits);
    }
    if (v.indeterminate || v.predicate_region == ENTCAP_REGION_BOUNDARY) {
        return kExitIndeterminate;
    }
    return v.entangled ? kExitEntangled : kExitSeparable;
}

struct SweepFlags {
    std::vector<std::string> grid;
    std::string output;
    std::string format = "csv";
    unsigned workers = 0;
    std::string from_manifest;
};

int run_sweep(const ScenarioFlags &f, const SweepFlags &s) {
    const std::string path = output_path(s.output);
    entcap_sweep_info info{};
    if (!s.from_manifest.empty()) {
        check(entcap_sweep_from_manifest(s.from_manifest.c_str(), path.c_str(), s.format.c_str(), s.workers, &info));
    } else {
        if (f.scenario.empty()) {
            usage("--scenario is required");
        }
        if (s.grid.empty()) {
            usage("at least one --grid axis is required");
        }
        auto c = f.build(false);
        std::vector<const char *> axes;
        for (const auto &g : s.grid) {
            axes.push_back(g.c_str());
        }
        check(entcap_sweep(c.get(), axes.data(), axes.size(), path.c_str(), s.format.c_str(), s.workers, &info));
    }
    std::printf("wrote %zu rows to %s (manifest %s.manifest.json, %u workers, %.1f ms)\n", info.rows, path.c_str(),
                path.c_str(), info.workers, info.wall_ms);
    return 0;
}

struct BoundaryFlags {
    std::string axis = "lambda";
    double lo = 0;
    double hi = 3;
    double tolerance = 1e-6;
};

int run_boundary(const ScenarioFlags &f, const BoundaryFlags &b) {
    auto c = f.build(false);
    entcap_boundary_info info{};
    OwnedString json;
    check(entcap_boundary(c.get(), b.axis.c_str(), b.lo, b.hi, b.tolerance, &info, f.json ? &json.s : nullptr));
    if (f.json) {
        std::printf("%s\n", json.s);
        return 0;
    }
    std::printf("%s: threshold along %s = %.9f\n", f.scenario.c_str(), b.axis.c_str(), info.threshold);
    if (info.has_closed_form) {
        std::printf("  closed form %.9f, deviation %.3g\n", info.closed_form, info.deviation);
    } else {
        std::printf("  closed form: no transition in [%g, %g]\n", b.lo, b.hi);
    }
    return 0;
}

struct ValidateFlags {
    std::size_t points = 0;
    std::size_t grid_points = 20;
    double guard = 1e-3;
    std::vector<double> lambda_range{0, 3};
    std::vector<double> interaction_range{0, 3};
    std::vector<double> theta_minus_range{0, 3.141592653589793};
    std::size_t weight_samples = 1'000'000;
    double weights_lambda = 1;
    double weights_omega = 1;
    double weight_tolerance = 2e-3;
};

int run_validate(const ScenarioFlags &f, const ValidateFlags &v) {
    auto c = f.build(false);
    entcap_validate_options o;
    entcap_validate_options_default(&o);
    o.samples = v.points;
    o.grid_points = v.grid_points;
    o.seed = f.seed;
    o.guard = v.guard;
    o.prep_lo = v.lambda_range[0];
    o.prep_hi = v.lambda_range[1];
    o.interaction_lo = v.interaction_range[0];
    o.interaction_hi = v.interaction_range[1];
    o.theta_minus_lo = v.theta_minus_range[0];
    o.theta_minus_hi = v.theta_minus_range[1];
    o.weight_samples = v.weight_samples;
    o.weights_lambda = v.weights_lambda;
    o.weights_omega = v.weights_omega;
    o.weight_tolerance = v.weight_tolerance;
    entcap_validate_info info{};
    OwnedString json;
    check(entcap_validate(c.get(), &o, &info, &json.s));
    std::printf("%s\n", json.s);
    return info.disagreements == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Entanglement of noisy two-qubit exchange gates"};
    app.require_subcommand(1);
    app.set_config("--config", "", "TOML or INI file mirroring the flags; flags override it");

    ScenarioFlags verdict_flags;
    auto *verdict = app.add_subcommand("verdict", "simulate one point and test it for entanglement");
    verdict_flags.add_to(verdict, true, "closed-form");

    ScenarioFlags sweep_flags;
    SweepFlags sweep_opts;
    auto *sweep = app.add_subcommand("sweep", "evaluate a parameter grid and write CSV or JSON");
    sweep_flags.add_to(sweep, false, "closed-form");
    sweep->get_option("--scenario")->required(false);
    sweep->add_option("--grid", sweep_opts.grid, "axis as name=start:stop:step; repeat for up to 3 axes");
    sweep->add_option("--output", sweep_opts.output, "data file; relative paths honour ENTCAP_OUTPUT_DIR")
        ->required();
    sweep->add_option("--format", sweep_opts.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sweep->add_option("--workers", sweep_opts.workers, "worker threads (0 = all cores)");
    sweep->add_option("--from-manifest", sweep_opts.from_manifest, "re-run the grid recorded in a manifest");

    ScenarioFlags boundary_flags;
    BoundaryFlags boundary_opts;
    auto *boundary = app.add_subcommand("boundary", "bisect the entanglement transition");
    boundary_flags.add_to(boundary, false, "closed-form");
    boundary->add_option("--axis", boundary_opts.axis, "lambda, omega or capital-lambda");
    boundary->add_option("--lo", boundary_opts.lo, "bracket start");
    boundary->add_option("--hi", boundary_opts.hi, "bracket end");
    boundary->add_option("--tolerance", boundary_opts.tolerance, "bracket width at which to stop");

    ScenarioFlags validate_flags;
    ValidateFlags validate_opts;
    auto *validate = app.add_subcommand("validate", "compare the closed-form criterion with simulation");
    validate_flags.add_to(validate, false, "quadrature");
    validate->add_option("--points", validate_opts.points, "random points (0 = grid)");
    validate->add_option("--grid-points", validate_opts.grid_points, "grid points per axis");
    validate->add_option("--guard", validate_opts.guard, "skip points with |margin| at or below this");
    validate->add_option("--lambda-range", validate_opts.lambda_range, "lo hi")->expected(2)->delimiter(':');
    validate->add_option("--interaction-range", validate_opts.interaction_range, "lo hi")
        ->expected(2)
        ->delimiter(':');
    validate->add_option("--theta-minus-range", validate_opts.theta_minus_range, "lo hi")
        ->expected(2)
        ->delimiter(':');
    validate->add_option("--weight-samples", validate_opts.weight_samples, "xy-family Monte Carlo samples");
    validate->add_option("--weights-lambda", validate_opts.weights_lambda, "xy-family weight check lambda");
    validate->add_option("--weights-omega", validate_opts.weights_omega, "xy-family weight check omega");
    validate->add_option("--weight-tolerance", validate_opts.weight_tolerance, "xy-family weight tolerance");

    auto *version = app.add_subcommand("version", "print the library version");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (verdict->parsed()) {
            return run_verdict(verdict_flags);
        }
        if (sweep->parsed()) {
            return run_sweep(sweep_flags, sweep_opts);
        }
        if (boundary->parsed()) {
            return run_boundary(boundary_flags, boundary_opts);
        }
        if (validate->parsed()) {
            return run_validate(validate_flags, validate_opts);
        }
        if (version->parsed()) {
            std::printf("entcap %s\n", entcap_version());
            return 0;
        }
    } catch (const CliFailure &f) {
        return f.code;
    }
    return kExitUsage;
}
