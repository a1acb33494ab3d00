// Copyright 2026 The ctdrive Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "ctdrive/config.hpp"
#include "ctdrive/io.hpp"

using namespace ctd;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("ctdrive_test_" + std::to_string(std::rand()) +
                std::to_string(std::rand()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

std::vector<std::string> split_lines(const std::string& s) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : s) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

}  // namespace

TEST_CASE("number formatting round-trips") {
    for (double v : {0.0, 1.0, -0.1, 0.9654181167598118, 31.41592653589793,
                     1e-300, 2.2250738585072014e-308}) {
        const std::string s = format_double(v);
        CHECK(std::strtod(s.c_str(), nullptr) == v);
    }
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(0.25) == "0.25");
}

TEST_CASE("frequencies are read in MHz and stored as angular rates") {
    const RunConfig cfg = parse_config(
        "command = synthesize\n"
        "scheme = square-pi\n"
        "scheme.omega0_mhz = 5\n");
    CHECK(cfg.omega0 == doctest::Approx(2.0 * M_PI * 5.0).epsilon(1e-14));
    CHECK(cfg.duration == doctest::Approx(M_PI / cfg.omega0).epsilon(1e-14));
}

TEST_CASE("parse errors carry line numbers") {
    try {
        parse_config(
            "# sweep settings\n"
            "command = scan\n"
            "scan.axis = eta\n"
            "scan.minimum = -0.2\n"
            "scan.max = 0.2\n"
            "scan.step = 0.01\n"
            "scan.min = -0.2\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.line == 4);
        CHECK(std::string(e.what()).find("scan.minimum") != std::string::npos);
        CHECK(std::string(e.what()).find("line 4") != std::string::npos);
    }

    try {
        parse_config(
            "command = scan\n"
            "scan.axis = eta\n"
            "scan.min = -0.2\n"
            "scan.max = 0.2\n"
            "scan.step = 0.01\n"
            "protocols = shape,warp\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.line == 6);
        CHECK(std::string(e.what()).find("warp") != std::string::npos);
    }

    try {
        parse_config("command = simulate\nprotocol = shape\nscheme.t0_us = -1\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.line == 3);
    }

    try {
        parse_config("command = scan\ncommand = scan\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.line == 2);
        CHECK(std::string(e.what()).find("duplicate") != std::string::npos);
    }

    // command hint conflicts are anchored at the command key
    try {
        parse_config("command = scan\nscan.axis = eta\nscan.min = 0\n"
                     "scan.max = 0.1\nscan.step = 0.05\n",
                     "figure");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.line == 1);
    }
}

TEST_CASE("manifest reflects the resolved parameters") {
    const RunConfig cfg = parse_config(
        "command = simulate\n"
        "protocol = shape\n"
        "scheme.omega0_mhz = 5\n"
        "scheme.beta_mhz = 1\n"
        "scheme.t0_us = 0.025\n");
    const std::string manifest = manifest_json(cfg, 4000);
    CHECK(manifest.find("\"tool\": \"ctdrive\"") != std::string::npos);
    CHECK(manifest.find("\"command\": \"simulate\"") != std::string::npos);
    CHECK(manifest.find("\"n_steps\": 4000") != std::string::npos);
    CHECK(manifest.find("\"config_hash\": \"fnv1a64:") != std::string::npos);
    CHECK(manifest.find("\"omega\": 5.0") != std::string::npos);
    // tau = beta * t0 = 2 pi * 0.025
    CHECK(manifest.find("\"tau\": 0.157") != std::string::npos);
    // the hash ignores the realized step count
    const std::string other = manifest_json(cfg, 8000);
    const auto hash_of = [](const std::string& m) {
        const auto pos = m.find("fnv1a64:");
        return m.substr(pos, 24);
    };
    CHECK(hash_of(manifest) == hash_of(other));
}

TEST_CASE("scan run writes the documented table") {
    TempDir dir;
    RunConfig cfg = parse_config(
        "command = scan\n"
        "scan.axis = eta\n"
        "scan.min = -0.2\n"
        "scan.max = 0.2\n"
        "scan.step = 0.01\n"
        "steps = 4000\n");
    cfg.out_dir = dir.path.string();
    std::ostringstream diag;
    REQUIRE(ctd::run(cfg, diag) == 0);
    INFO(diag.str());

    const std::string csv = slurp(dir.path / "scan.csv");
    CHECK(csv.find('\r') == std::string::npos);
    const auto lines = split_lines(csv);
    REQUIRE(lines.size() == 165);  // header + 41 grid points x 4 protocols
    CHECK(lines[0] == "perturbation,protocol,fidelity,resolution");
    CHECK(lines[1].find("-0.2,adiabatic,") == 0);
    CHECK(lines[2].find("-0.2,shape,") == 0);
    CHECK(lines[4].find("-0.2,composite-xyx,") == 0);

    CHECK(fs::exists(dir.path / "scan.manifest.json"));

    // reruns are byte-identical, independently of the worker count
    TempDir dir2;
    cfg.out_dir = dir2.path.string();
    cfg.threads = 1;
    REQUIRE(ctd::run(cfg, diag) == 0);
    CHECK(slurp(dir2.path / "scan.csv") == csv);
}

TEST_CASE("figure run emits the pinned dataset") {
    TempDir dir;
    RunConfig cfg = parse_config("command = figure\nfigure = fig5b\n");
    cfg.out_dir = dir.path.string();
    std::ostringstream diag;
    REQUIRE(ctd::run(cfg, diag) == 0);
    const std::string csv = slurp(dir.path / "fig5b.csv");
    const auto lines = split_lines(csv);
    REQUIRE(lines.size() > 10);
    CHECK(lines[0] == "t_or_T,series_name,value");
    // the last row is the terminal target population of the corrected pulse
    const std::string& last = lines.back();
    CHECK(last.find(",P3,") != std::string::npos);
    const double p3 = std::strtod(last.substr(last.rfind(',') + 1).c_str(), nullptr);
    CHECK(p3 >= 0.999);
}

TEST_CASE("synthesize run writes the auxiliary waveform") {
    TempDir dir;
    RunConfig cfg = parse_config(
        "command = synthesize\n"
        "scheme = square-pi\n"
        "scheme.omega0_mhz = 5\n");
    cfg.out_dir = dir.path.string();
    std::ostringstream diag;
    REQUIRE(ctd::run(cfg, diag) == 0);
    const auto lines = split_lines(slurp(dir.path / "synthesize.csv"));
    REQUIRE(lines.size() == 602);
    CHECK(lines[0] == "t,value,value_over_omega0");
    // a static pulse needs no auxiliary drive
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto first = lines[k].find(',');
        const auto second = lines[k].find(',', first + 1);
        CHECK(lines[k].substr(first + 1, second - first - 1) == "0");
    }
}

TEST_CASE("failed runs leave no partial output") {
    TempDir dir;
    RunConfig cfg;
    cfg.command = "figure";
    cfg.figure_id = "fig9";
    cfg.out_dir = dir.path.string();
    std::ostringstream diag;
    CHECK(ctd::run(cfg, diag) == 1);
    CHECK(diag.str().find("error:") == 0);
    CHECK(fs::is_empty(dir.path));
}
