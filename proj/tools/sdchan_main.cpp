// SPDX-License-Identifier: Apache-2.0
//
// sdchan - semi-deterministic cluster channel simulator for positioning
// Copyright (C) 2025-2026 sdchan contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sdchan/csv.hpp"
#include "sdchan/simulation.hpp"

namespace
{

std::string read_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open scenario file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string default_out_dir()
{
    const char *env = std::getenv("SDCHAN_OUT_DIR");
    return env != nullptr && env[0] != '\0' ? env : ".";
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"sdchan - geometric-stochastic channel simulator for positioning studies"};
    app.require_subcommand(1);

    std::string scenario_path;
    std::string out_dir = default_out_dir();
    std::string out_file;
    std::uint64_t seed = 0;
    bool have_seed = false;
    int trp_id = 0;
    int snapshot = 0;
    bool with_positions = false;

    auto *cmd_simulate = app.add_subcommand("simulate", "run a scenario and write trace files");
    cmd_simulate->add_option("scenario", scenario_path, "scenario JSON file")->required();
    cmd_simulate->add_option("--out", out_dir, "output directory");
    cmd_simulate->add_option("--seed", seed, "override the scenario seed")
        ->each([&](const std::string &) { have_seed = true; });
    cmd_simulate->add_flag("--positions", with_positions, "also solve and write positions.csv");

    auto *cmd_reference =
        app.add_subcommand("reference-scenario", "print the built-in reference scenario");

    auto *cmd_validate = app.add_subcommand("validate", "parse and validate a scenario file");
    cmd_validate->add_option("scenario", scenario_path, "scenario JSON file")->required();

    auto *cmd_trace = app.add_subcommand("trace", "write the power trace of a single TRP");
    cmd_trace->add_option("scenario", scenario_path, "scenario JSON file")->required();
    cmd_trace->add_option("--trp", trp_id, "TRP id")->required();
    cmd_trace->add_option("--out", out_dir, "output directory");

    auto *cmd_cir = app.add_subcommand("cir", "dump CIR and correlation profile of one snapshot");
    cmd_cir->add_option("scenario", scenario_path, "scenario JSON file")->required();
    cmd_cir->add_option("--trp", trp_id, "TRP id")->required();
    cmd_cir->add_option("--snapshot", snapshot, "snapshot index")->required();
    cmd_cir->add_option("--out", out_dir, "output directory");

    auto *cmd_position = app.add_subcommand("position", "run all links and solve TOA positions");
    cmd_position->add_option("scenario", scenario_path, "scenario JSON file")->required();
    cmd_position->add_option("--out", out_file, "positions CSV file")->required();

    CLI11_PARSE(app, argc, argv);

    try
    {
        if (cmd_reference->parsed())
        {
            std::cout << sdchan::serialize_scenario(sdchan::reference_scenario());
            return 0;
        }

        sdchan::Scenario scenario = sdchan::parse_scenario(read_file(scenario_path));

        if (cmd_validate->parsed())
        {
            std::cout << "ok: " << scenario.trps.size() << " TRPs, " << scenario.sdcs.size()
                      << " SDCs, " << scenario.snapshot_count << " snapshots, hash "
                      << sdchan::output_header(sdchan::scenario_hash(scenario), scenario.seed)
                             .substr(2)
                      << "\n";
            return 0;
        }

        sdchan::RunOptions options;
        options.out_dir = out_dir;
        if (have_seed)
            options.seed_override = seed;

        if (cmd_simulate->parsed())
        {
            options.write_positions = with_positions;
            const auto result = sdchan::run_simulation(scenario, options);
            for (const auto &f : result.files)
                std::cout << f << "\n";
            return 0;
        }

        if (cmd_trace->parsed())
        {
            options.only_trp_id = trp_id;
            const auto result = sdchan::run_simulation(scenario, options);
            for (const auto &f : result.files)
                std::cout << f << "\n";
            return 0;
        }

        if (cmd_cir->parsed())
        {
            if (snapshot < 0 || snapshot >= scenario.snapshot_count)
                throw sdchan::config_error("snapshot index out of range");
            options.only_trp_id = trp_id;
            options.write_traces = false;
            options.cir_dumps.push_back({trp_id, snapshot});
            const auto result = sdchan::run_simulation(scenario, options);
            for (const auto &f : result.files)
                std::cout << f << "\n";
            return 0;
        }

        if (cmd_position->parsed())
        {
            options.write_traces = false;
            options.write_positions = true;
            const std::filesystem::path target(out_file);
            options.out_dir = target.has_parent_path() ? target.parent_path().string() : ".";
            const auto result = sdchan::run_simulation(scenario, options);
            // run_simulation writes positions.csv; rename to the requested file
            const std::filesystem::path written =
                std::filesystem::path(options.out_dir) / "positions.csv";
            if (written != target)
                std::filesystem::rename(written, target);
            std::cout << target.string() << "\n";
            return 0;
        }
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
