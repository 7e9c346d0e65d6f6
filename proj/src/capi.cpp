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

#include "entcap/entcap.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

#include "entcap/report.hpp"
#include "entcap/scenarios.hpp"
#include "entcap/sweep.hpp"

struct entcap_config {
    entcap::ScenarioConfig config;
};

struct entcap_result {
    entcap::ScenarioConfig config;
    entcap::ScenarioResult result;
};

namespace {

thread_local std::string last_error;

entcap_status status_of(entcap::ErrorCode code) {
    switch (code) {
        case entcap::ErrorCode::InvalidArgument:
            return ENTCAP_ERR_INVALID_ARGUMENT;
        case entcap::ErrorCode::NumericalFailure:
            return ENTCAP_ERR_NUMERICAL;
        case entcap::ErrorCode::NoSignChange:
            return ENTCAP_ERR_NO_SIGN_CHANGE;
        case entcap::ErrorCode::Io:
            return ENTCAP_ERR_IO;
        case entcap::ErrorCode::LimitExceeded:
            return ENTCAP_ERR_LIMIT;
    }
    return ENTCAP_ERR_INTERNAL;
}

template <typename Body>
entcap_status guarded(Body body) {
    try {
        body();
        last_error.clear();
        return ENTCAP_OK;
    } catch (const entcap::Error &e) {
        last_error = e.what();
        return status_of(e.code());
    } catch (const std::bad_alloc &) {
        last_error = "out of memory";
        return ENTCAP_ERR_INTERNAL;
    } catch (const std::exception &e) {
        last_error = e.what();
        return ENTCAP_ERR_INTERNAL;
    }
}

void need(const void *p, const char *what) {
    entcap::require(p != nullptr, std::string(what) + " is null");
}

char *copy_string(const std::string &s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (!out) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

entcap_region region_of(entcap::Region r) {
    switch (r) {
        case entcap::Region::Entangled:
            return ENTCAP_REGION_ENTANGLED;
        case entcap::Region::Separable:
            return ENTCAP_REGION_SEPARABLE;
        case entcap::Region::Boundary:
            return ENTCAP_REGION_BOUNDARY;
    }
    return ENTCAP_REGION_BOUNDARY;
}

entcap_status criterion_out(double lambda, double width, entcap::Criterion (*f)(double, double), double *margin,
                            entcap_region *region) {
    return guarded([&] {
        auto c = f(lambda, width);
        if (margin) {
            *margin = c.margin;
        }
        if (region) {
            *region = region_of(c.region);
        }
    });
}

}  // namespace

extern "C" {

const char *entcap_version(void) {
    return entcap::version().data();
}

const char *entcap_status_name(entcap_status status) {
    switch (status) {
        case ENTCAP_OK:
            return "ok";
        case ENTCAP_ERR_INVALID_ARGUMENT:
            return "invalid argument";
        case ENTCAP_ERR_NUMERICAL:
            return "numerical failure";
        case ENTCAP_ERR_NO_SIGN_CHANGE:
            return "no sign change";
        case ENTCAP_ERR_IO:
            return "i/o error";
        case ENTCAP_ERR_LIMIT:
            return "limit exceeded";
        case ENTCAP_ERR_INTERNAL:
            return "internal error";
    }
    return "unknown status";
}

const char *entcap_last_error(void) {
    return last_error.c_str();
}

void entcap_string_free(char *s) {
    std::free(s);
}

entcap_status entcap_config_create(const char *scenario, entcap_config **out) {
    return guarded([&] {
        need(scenario, "scenario");
        need(out, "out");
        auto *c = new entcap_config;
        c->config.id = entcap::parse_scenario(scenario);
        *out = c;
    });
}

void entcap_config_destroy(entcap_config *config) {
    delete config;
}

entcap_status entcap_config_clone(const entcap_config *config, entcap_config **out) {
    return guarded([&] {
        need(config, "config");
        need(out, "out");
        *out = new entcap_config(*config);
    });
}

entcap_status entcap_config_set(entcap_config *config, const char *key, double value) {
    return guarded([&] {
        need(config, "config");
        need(key, "key");
        entcap::ScenarioConfig next = config->config;
        const std::string k = key;
        if (k == "lambda") {
            next.prep_width = value;
        } else if (k == "omega" || k == "capital-lambda") {
            next.interaction_width = value;
        } else if (k == "theta-minus") {
            next.mean_theta_minus = value;
        } else if (k == "zbar") {
            entcap::require(std::isfinite(value) && std::abs(value) <= 1, "zbar must lie in [-1, 1]");
            next.mean_theta_minus = 0.5 * std::acos(value);
        } else if (k == "phi") {
            next.phi = value;
        } else {
            entcap::fail(entcap::ErrorCode::InvalidArgument, "unknown config key '" + k + "'");
        }
        next.validate();
        config->config = next;
    });
}

entcap_status entcap_config_set_method(entcap_config *config, const char *kind, uint64_t count, uint64_t seed) {
    return guarded([&] {
        need(config, "config");
        need(kind, "kind");
        const std::string k = kind;
        entcap::AveragingMethod m;
        if (k == "closed-form") {
            m = entcap::ClosedForm{};
        } else if (k == "quadrature") {
            entcap::Quadrature q;
            if (count && entcap::uses_laplace_noise(config->config.id)) {
                q.laguerre_nodes = count;
            } else if (count) {
                q.nodes = count;
            }
            m = q;
        } else if (k == "monte-carlo") {
            entcap::MonteCarlo mc;
            if (count) {
                mc.samples = count;
            }
            mc.seed = seed;
            m = mc;
        } else {
            entcap::fail(entcap::ErrorCode::InvalidArgument, "unknown averaging method '" + k + "'");
        }
        entcap::validate_method(m);
        config->config.method = m;
    });
}

entcap_status entcap_config_set_refocus(entcap_config *config, double j_tau1, double j_tau2, double pulse_angle) {
    return guarded([&] {
        need(config, "config");
        config->config.refocus = entcap::RefocusSchedule(j_tau1, j_tau2, pulse_angle);
    });
}

entcap_status entcap_config_set_refocus_noise(entcap_config *config, const char *mode) {
    return guarded([&] {
        need(config, "config");
        need(mode, "mode");
        config->config.refocus_noise = entcap::parse_refocus_noise(mode);
    });
}

entcap_status entcap_config_to_json(const entcap_config *config, char **json) {
    return guarded([&] {
        need(config, "config");
        need(json, "json");
        *json = copy_string(entcap::config_report(config->config));
    });
}

entcap_status entcap_run(const entcap_config *config, entcap_result **out) {
    return guarded([&] {
        need(config, "config");
        need(out, "out");
        *out = new entcap_result{config->config, entcap::run_scenario(config->config)};
    });
}

void entcap_result_destroy(entcap_result *result) {
    delete result;
}

entcap_status entcap_result_verdict(const entcap_result *result, entcap_verdict_info *out) {
    return guarded([&] {
        need(result, "result");
        need(out, "out");
        const auto &r = result->result;
        out->min_pt_eigenvalue = r.verdict.min_pt_eigenvalue;
        out->negativity = r.verdict.negativity;
        out->entangled = r.verdict.entangled ? 1 : 0;
        out->indeterminate = r.verdict.indeterminate ? 1 : 0;
        out->predicate_region = region_of(r.predicate.region);
        out->predicate_margin = r.predicate.margin;
        out->initial_entropy_bits = r.initial_entropy_bits;
    });
}

entcap_status entcap_result_state(const entcap_result *result, double re[16], double im[16]) {
    return guarded([&] {
        need(result, "result");
        need(re, "re");
        need(im, "im");
        for (std::size_t r = 0; r < 4; r++) {
            for (std::size_t c = 0; c < 4; c++) {
                auto v = result->result.final_state(r, c);
                re[4 * r + c] = v.real();
                im[4 * r + c] = v.imag();
            }
        }
    });
}

entcap_status entcap_result_json(const entcap_result *result, char **json) {
    return guarded([&] {
        need(result, "result");
        need(json, "json");
        *json = copy_string(entcap::verdict_report(result->config, result->result));
    });
}

entcap_status entcap_boundary(const entcap_config *config, const char *axis, double lo, double hi, double tolerance,
                              entcap_boundary_info *out, char **json) {
    return guarded([&] {
        need(config, "config");
        need(axis, "axis");
        auto report = entcap::boundary_bisect(config->config, entcap::parse_boundary_axis(axis), lo, hi, tolerance);
        if (out) {
            out->threshold = report.threshold;
            out->has_closed_form = report.closed_form ? 1 : 0;
            out->closed_form = report.closed_form.value_or(NAN);
            out->deviation = report.deviation.value_or(NAN);
            out->iterations = report.iterations;
        }
        if (json) {
            *json = copy_string(entcap::boundary_report(report));
        }
    });
}

static void fill_sweep_info(const entcap::SweepOutput &o, entcap_sweep_info *out) {
    if (out) {
        out->rows = o.rows;
        out->workers = o.workers;
        out->wall_ms = o.timings.wall_ms;
    }
}

entcap_status entcap_sweep(const entcap_config *config, const char *const *axes, size_t n_axes, const char *path,
                           const char *format, unsigned workers, entcap_sweep_info *out) {
    return guarded([&] {
        need(config, "config");
        need(path, "path");
        need(format, "format");
        entcap::require(axes != nullptr || n_axes == 0, "axes is null");
        entcap::SweepGrid grid;
        grid.base = config->config;
        for (size_t k = 0; k < n_axes; k++) {
            need(axes[k], "axis");
            grid.axes.push_back(entcap::SweepAxis::parse(axes[k]));
        }
        fill_sweep_info(entcap::sweep_to_file(grid, path, entcap::parse_output_format(format), workers), out);
    });
}

entcap_status entcap_sweep_from_manifest(const char *manifest_path, const char *path, const char *format,
                                         unsigned workers, entcap_sweep_info *out) {
    return guarded([&] {
        need(manifest_path, "manifest_path");
        need(path, "path");
        need(format, "format");
        std::ifstream in(manifest_path, std::ios::binary);
        if (!in) {
            entcap::fail(entcap::ErrorCode::Io, std::string("cannot read manifest '") + manifest_path + "'");
        }
        std::stringstream text;
        text << in.rdbuf();
        auto grid = entcap::grid_from_manifest(text.str());
        fill_sweep_info(entcap::sweep_to_file(grid, path, entcap::parse_output_format(format), workers), out);
    });
}

void entcap_validate_options_default(entcap_validate_options *options) {
    if (!options) {
        return;
    }
    entcap::ValidationRequest r;
    options->samples = r.samples;
    options->grid_points = r.grid_points;
    options->seed = r.seed;
    options->guard = r.guard;
    options->prep_lo = r.prep_range.first;
    options->prep_hi = r.prep_range.second;
    options->interaction_lo = r.interaction_range.first;
    options->interaction_hi = r.interaction_range.second;
    options->theta_minus_lo = r.theta_minus_range.first;
    options->theta_minus_hi = r.theta_minus_range.second;
    options->weight_samples = r.weight_samples;
    options->weights_lambda = r.weights_lambda;
    options->weights_omega = r.weights_omega;
    options->weight_tolerance = r.weight_tolerance;
}

entcap_status entcap_validate(const entcap_config *config, const entcap_validate_options *options,
                              entcap_validate_info *out, char **json) {
    return guarded([&] {
        need(config, "config");
        need(options, "options");
        const auto &c = config->config;
        entcap::ValidationRequest r;
        r.id = c.id;
        r.method = c.method;
        r.samples = options->samples;
        r.grid_points = options->grid_points;
        r.seed = options->seed;
        r.guard = options->guard;
        r.prep_range = {options->prep_lo, options->prep_hi};
        r.interaction_range = {options->interaction_lo, options->interaction_hi};
        r.theta_minus_range = {options->theta_minus_lo, options->theta_minus_hi};
        r.phi = c.phi.value_or(0);
        r.weight_samples = options->weight_samples;
        r.weights_lambda = options->weights_lambda;
        r.weights_omega = options->weights_omega;
        r.weight_tolerance = options->weight_tolerance;
        r.refocus = c.refocus;
        r.refocus_noise = c.refocus_noise;
        auto report = entcap::validate(r);
        if (out) {
            out->points = report.points;
            out->compared = report.compared;
            out->skipped = report.skipped;
            out->disagreements = report.disagreements;
            out->max_disagreement_margin = report.max_disagreement_margin;
            out->has_weight_deviation = report.max_weight_deviation ? 1 : 0;
            out->max_weight_deviation = report.max_weight_deviation.value_or(NAN);
        }
        if (json) {
            *json = copy_string(entcap::validation_report(report));
        }
    });
}

entcap_status entcap_ising_gaussian(double lambda, double omega, double *margin, entcap_region *region) {
    return criterion_out(lambda, omega, entcap::ising_gaussian_entangled, margin, region);
}

entcap_status entcap_ising_lambda_max(double omega, double *out) {
    return guarded([&] {
        need(out, "out");
        *out = entcap::ising_lambda_max(omega);
    });
}

entcap_status entcap_untunable_ising(double lambda, double capital_lambda, double *margin, entcap_region *region) {
    return criterion_out(lambda, capital_lambda, entcap::untunable_ising_entangled, margin, region);
}

entcap_status entcap_xyz_tunable(double a, double b, double z, double *margin, entcap_region *region) {
    return guarded([&] {
        auto c = entcap::xyz_entangled(entcap::XyzReducedParams(a, b, z));
        if (margin) {
            *margin = c.margin;
        }
        if (region) {
            *region = region_of(c.region);
        }
    });
}

entcap_status entcap_xy_family_weights(double lambda, double omega, double weights[3]) {
    return guarded([&] {
        need(weights, "weights");
        auto w = entcap::xy_family_weights(lambda, omega);
        weights[0] = w.w00;
        weights[1] = w.w_plus;
        weights[2] = w.w_minus;
    });
}

entcap_status entcap_untunable_xyz_lhs(double mu, double eta, double delta, double *lhs) {
    return guarded([&] {
        need(lhs, "lhs");
        *lhs = entcap::untunable_xyz_lhs(entcap::UntunableXyzParams(mu, eta, delta));
    });
}

entcap_status entcap_ising_laplace(double lambda, double omega, double *margin, entcap_region *region) {
    return criterion_out(lambda, omega, entcap::ising_laplace_entangled, margin, region);
}

entcap_status entcap_laplace_lambda_bound(double omega, double *out) {
    return guarded([&] {
        need(out, "out");
        *out = entcap::laplace_lambda_bound(omega);
    });
}

}  // extern "C"
