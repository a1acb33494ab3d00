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

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ctdrive/config.hpp"

namespace {

struct Cli {
    std::string config_path;
    std::string out_dir;
    std::string protocols;
    std::string figure;
    int steps = 0;
};

void add_common(CLI::App* cmd, Cli& cli) {
    cmd->add_option("--config", cli.config_path, "configuration file (key = value)");
    cmd->add_option("--out", cli.out_dir, "output directory");
    cmd->add_option("--steps", cli.steps, "override the integration step count");
}

int dispatch(const std::string& command, const Cli& cli) {
    std::string text;
    if (!cli.config_path.empty()) {
        std::ifstream in(cli.config_path);
        if (!in) {
            std::cerr << "error: cannot read config file: " << cli.config_path << "\n";
            return 1;
        }
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        ctd::RunConfig cfg = ctd::parse_config(text, command);
        if (!cli.out_dir.empty()) cfg.out_dir = cli.out_dir;
        if (cli.steps > 0) cfg.steps = cli.steps;
        if (!cli.figure.empty()) cfg.figure_id = cli.figure;
        if (!cli.protocols.empty()) {
            cfg.protocols.clear();
            std::istringstream ps(cli.protocols);
            std::string name;
            while (std::getline(ps, name, ',')) {
                if (!name.empty()) cfg.protocols.push_back(ctd::protocol_from_name(name));
            }
        }
        if (command == "figure" && cfg.figure_id.empty()) {
            std::cerr << "error: figure id required (--figure or config key 'figure')\n";
            return 1;
        }
        return ctd::run(cfg, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"counterdiabatic driving simulator for two- and three-level atoms"};
    app.require_subcommand(1);

    Cli cli;
    std::string figure_positional;

    CLI::App* simulate = app.add_subcommand("simulate", "propagate one protocol");
    add_common(simulate, cli);

    CLI::App* scan = app.add_subcommand("scan", "robustness scan over a perturbation grid");
    add_common(scan, cli);
    scan->add_option("--protocols", cli.protocols, "comma-separated protocol list");

    CLI::App* synthesize =
        app.add_subcommand("synthesize", "tabulate the auxiliary field of a scheme");
    add_common(synthesize, cli);

    CLI::App* figure = app.add_subcommand("figure", "emit a pinned benchmark dataset");
    add_common(figure, cli);
    figure->add_option("--figure", cli.figure, "dataset id");
    figure->add_option("id", figure_positional, "dataset id (positional)");

    CLI11_PARSE(app, argc, argv);

    if (cli.figure.empty()) cli.figure = figure_positional;
    if (simulate->parsed()) return dispatch("simulate", cli);
    if (scan->parsed()) return dispatch("scan", cli);
    if (synthesize->parsed()) return dispatch("synthesize", cli);
    return dispatch("figure", cli);
}
