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

#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <unistd.h>

#include "entcap/error.hpp"
#include "entcap/report.hpp"
#include "entcap/sweep.hpp"

namespace entcap {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

class TempDir {
public:
    TempDir() : path_(fs::temp_directory_path() / ("entcap-sweep-" + std::to_string(::getpid()) + "-" +
                                                   std::to_string(counter_++))) {
        fs::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path_, ec);
    }
    std::string file(const std::string &name) const { return (path_ / name).string(); }

private:
    static inline int counter_ = 0;
    fs::path path_;
};

std::string slurp(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::vector<std::string> split(const std::string &line, char sep) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, sep)) {
        out.push_back(cell);
    }
    if (!line.empty() && line.back() == sep) {
        out.emplace_back();
    }
    return out;
}

SweepGrid ising_grid(int n) {
    SweepGrid g;
    g.base.id = ScenarioId::IsingTunable;
    const double step = 3.0 / (n - 1);
    g.axes = {{SweepParam::Lambda, 0, 3, step}, {SweepParam::Omega, 0, 3, step}};
    return g;
}

TEST(SweepAxis, Parse) {
    auto a = SweepAxis::parse("lambda=0:3:0.02");
    EXPECT_EQ(a.param, SweepParam::Lambda);
    EXPECT_EQ(a.count(), 151u);
    EXPECT_DOUBLE_EQ(a.value(150), 3.0);
    EXPECT_DOUBLE_EQ(a.value(1), 0.02);
    EXPECT_EQ(SweepAxis::parse("capital-lambda=0:1:0.5").param, SweepParam::CapitalLambda);
    EXPECT_EQ(SweepAxis::parse("zbar=-1:1:0.5").count(), 5u);
    // A stop off the lattice stops at the last lattice point.
    EXPECT_EQ(SweepAxis::parse("omega=0:1:0.3").count(), 4u);
    EXPECT_EQ(SweepAxis::parse("omega=1:1:0.3").count(), 1u);
}

TEST(SweepAxis, ParseErrors) {
    for (const char *bad : {"lambda", "lambda=0:1", "lambda=0:1:0", "lambda=0:1:-1", "lambda=1:0:0.1",
                            "lambda=-1:1:0.5", "gamma=0:1:0.1", "lambda=a:1:0.1", "zbar=-2:1:0.5",
                            "a=0:1:0.5", "b=0.5:1.5:0.5", "lambda=0:1:0.1:3", "lambda=0:inf:1"}) {
        EXPECT_THROW(SweepAxis::parse(bad), Error) << bad;
    }
}

TEST(SweepParam, NamesRoundTrip) {
    for (auto p : {SweepParam::Lambda, SweepParam::Omega, SweepParam::CapitalLambda, SweepParam::ThetaMinus,
                   SweepParam::Zbar, SweepParam::Phi, SweepParam::A, SweepParam::B}) {
        EXPECT_EQ(parse_sweep_param(sweep_param_name(p)), p);
    }
    EXPECT_EQ(parse_output_format("json"), OutputFormat::Json);
    EXPECT_THROW(parse_output_format("xml"), Error);
}

TEST(SweepGrid, Validation) {
    SweepGrid g = ising_grid(3);
    EXPECT_NO_THROW(g.validate());
    EXPECT_EQ(g.size(), 9u);
    g.axes.push_back({SweepParam::Lambda, 0, 1, 0.5});
    EXPECT_THROW(g.validate(), Error);
    g = ising_grid(3);
    g.axes.push_back({SweepParam::Zbar, 0, 1, 0.5});
    EXPECT_THROW(g.validate(), Error);
    g.base.id = ScenarioId::XyzTunable;
    EXPECT_NO_THROW(g.validate());
    g.axes.push_back({SweepParam::Phi, 0, 1, 0.5});
    EXPECT_THROW(g.validate(), Error);
    g = ising_grid(3);
    g.axes.clear();
    EXPECT_THROW(g.validate(), Error);
}

TEST(SweepGrid, PointCountLimit) {
    SweepGrid g;
    g.axes = {{SweepParam::Lambda, 0, 1, 1e-4}, {SweepParam::Omega, 0, 1, 1e-3}};
    try {
        g.validate();
        FAIL() << "expected LimitExceeded";
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::LimitExceeded);
    }
}

TEST(SweepGrid, RowMajorPoints) {
    SweepGrid g = ising_grid(3);
    auto p = g.point(5);
    EXPECT_DOUBLE_EQ(p.prep_width, 1.5);
    EXPECT_DOUBLE_EQ(p.interaction_width, 3.0);
}

TEST(SweepGrid, DerivedParameters) {
    SweepGrid g;
    g.base.id = ScenarioId::XyzTunable;
    g.axes = {{SweepParam::A, 0.5, 0.5, 1}, {SweepParam::B, 0.25, 0.25, 1}, {SweepParam::Zbar, -1, 1, 1}};
    auto p = g.point(1);
    EXPECT_NEAR(std::exp(-0.5 * p.prep_width * p.prep_width), 0.5, 1e-15);
    EXPECT_NEAR(std::exp(-2 * p.interaction_width * p.interaction_width), 0.25, 1e-15);
    EXPECT_NEAR(std::cos(2 * *p.mean_theta_minus), 0, 1e-15);
    auto row = evaluate_point(g.point(2));
    EXPECT_EQ(row.zbar, 1.0);
}

TEST(SweepGrid, MonteCarloSeedsDifferPerPoint) {
    SweepGrid g = ising_grid(3);
    g.base.method = MonteCarlo{1000, 7};
    auto a = std::get<MonteCarlo>(g.point(0).method).seed;
    auto b = std::get<MonteCarlo>(g.point(1).method).seed;
    EXPECT_NE(a, b);
    EXPECT_EQ(a, std::get<MonteCarlo>(g.point(0).method).seed);
}

TEST(Sweep, RowsMatchDirectEvaluation) {
    SweepGrid g = ising_grid(7);
    auto rows = run_sweep(g, 2);
    ASSERT_EQ(rows.size(), 49u);
    for (std::size_t i = 0; i < rows.size(); i++) {
        auto r = run_scenario(g.point(i));
        EXPECT_EQ(rows[i].min_pt_eigenvalue, r.verdict.min_pt_eigenvalue);
        EXPECT_EQ(rows[i].predicate.margin, r.predicate.margin);
        EXPECT_TRUE(std::isnan(rows[i].zbar));
        EXPECT_EQ(rows[i].method, "closed-form");
    }
}

TEST(Sweep, WorkerCountDoesNotChangeOutput) {
    SweepGrid g = ising_grid(21);
    g.base.method = MonteCarlo{2000, 3};
    std::ostringstream one, four;
    write_csv(one, run_sweep(g, 1));
    write_csv(four, run_sweep(g, 4));
    EXPECT_EQ(one.str(), four.str());
}

TEST(Csv, HeaderAndRoundTrip) {
    EXPECT_EQ(csv_header(),
              "scenario,lambda,omega_or_capital_lambda,zbar,phi,predicate_margin,predicate_class,"
              "min_pt_eigenvalue,negativity,initial_entropy_bits,method");
    SweepGrid g = ising_grid(5);
    auto rows = run_sweep(g, 1);
    std::ostringstream out;
    write_csv(out, rows);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, csv_header());
    std::size_t n = 0;
    while (std::getline(in, line)) {
        auto cells = split(line, ',');
        ASSERT_EQ(cells.size(), 11u) << line;
        EXPECT_EQ(cells[0], "ising-tunable");
        EXPECT_NEAR(std::stod(cells[1]), rows[n].lambda, 1e-11);
        EXPECT_NEAR(std::stod(cells[7]), rows[n].min_pt_eigenvalue, 1e-11 * (1 + std::abs(rows[n].min_pt_eigenvalue)));
        EXPECT_EQ(cells[3], "");
        EXPECT_EQ(cells[6], region_name(rows[n].predicate.region));
        n++;
    }
    EXPECT_EQ(n, rows.size());
}

TEST(Json, RowsCarryTheCsvFields) {
    SweepGrid g;
    g.base.id = ScenarioId::XyzTunable;
    g.axes = {{SweepParam::Lambda, 0, 1, 1}, {SweepParam::Zbar, 0, 0, 1}};
    std::ostringstream out;
    write_json(out, run_sweep(g, 1));
    auto doc = json::parse(out.str());
    ASSERT_EQ(doc.size(), 2u);
    for (auto key : split(std::string(csv_header()), ',')) {
        EXPECT_TRUE(doc[0].contains(key)) << key;
    }
    EXPECT_EQ(doc[1]["zbar"].get<double>(), 0.0);
    EXPECT_EQ(doc[0]["scenario"], "xyz-tunable");
}

TEST(SweepToFile, WritesDataAndManifest) {
    TempDir dir;
    SweepGrid g = ising_grid(4);
    g.base.method = Quadrature{31};
    auto out = sweep_to_file(g, dir.file("grid.csv"), OutputFormat::Csv, 2);
    EXPECT_EQ(out.rows, 16u);
    EXPECT_EQ(out.manifest_path, dir.file("grid.csv") + ".manifest.json");
    auto manifest = json::parse(slurp(out.manifest_path));
    EXPECT_EQ(manifest["tool"], "entcap");
    EXPECT_EQ(manifest["version"], std::string(version()));
    EXPECT_EQ(manifest["points"], 16);
    EXPECT_EQ(manifest["workers"], 2);
    EXPECT_EQ(manifest["grid"].size(), 2u);
    EXPECT_EQ(manifest["grid"][0]["name"], "lambda");
    EXPECT_EQ(manifest["grid"][1]["count"], 4);
    EXPECT_TRUE(manifest["timings_ms"].contains("wall"));
    EXPECT_EQ(manifest["config"]["method"]["kind"], "quadrature");

    // Rebuilding the grid from the manifest reproduces the data byte for byte.
    auto again = grid_from_manifest(slurp(out.manifest_path));
    sweep_to_file(again, dir.file("again.csv"), OutputFormat::Csv, 1);
    EXPECT_EQ(slurp(dir.file("grid.csv")), slurp(dir.file("again.csv")));
}

TEST(SweepToFile, UnwritablePathIsIoError) {
    try {
        sweep_to_file(ising_grid(2), "/nonexistent-dir/x/out.csv", OutputFormat::Csv, 1);
        FAIL() << "expected Io";
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::Io);
    }
}

TEST(Manifest, RejectsMalformedInput) {
    EXPECT_THROW(grid_from_manifest("{"), Error);
    EXPECT_THROW(grid_from_manifest("{}"), Error);
    EXPECT_THROW(grid_from_manifest(R"({"config": {"scenario": "nope"}, "grid": []})"), Error);
}

TEST(Reports, AreJsonDocuments) {
    ScenarioConfig c;
    c.id = ScenarioId::IsingUntunable;
    c.prep_width = 0.5;
    c.interaction_width = 0.25;
    auto cfg = json::parse(config_report(c));
    EXPECT_EQ(cfg["scenario"], "ising-untunable");
    EXPECT_TRUE(cfg.contains("refocus"));
    auto v = json::parse(verdict_report(c, run_scenario(c)));
    EXPECT_TRUE(v.contains("min_pt_eigenvalue"));
    auto b = json::parse(boundary_report(boundary_bisect(ScenarioConfig{}, BoundaryAxis::PrepWidth, 0, 3)));
    EXPECT_NEAR(b["threshold"].get<double>(), 1.3277, 1e-3);
}

}  // namespace
}  // namespace entcap
