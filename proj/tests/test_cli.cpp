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
//
// End-to-end checks of the command-line surface. The binary path arrives in
// the SDCHAN_CLI environment variable.

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "sdchan/scenario.hpp"

namespace fs = std::filesystem;

namespace
{

std::string cli()
{
    const char *path = std::getenv("SDCHAN_CLI");
    REQUIRE(path != nullptr);
    return path;
}

int run(const std::string &args)
{
    const int rc = std::system((cli() + " " + args).c_str());
    return rc;
}

std::string slurp(const fs::path &p)
{
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

fs::path work_dir()
{
    const fs::path dir = fs::temp_directory_path() / "sdchan_cli_test";
    fs::create_directories(dir);
    return dir;
}

fs::path write_small_scenario()
{
    sdchan::Scenario sc = sdchan::reference_scenario();
    sc.snapshot_count = 4;
    sc.obstacle.snapshot_span = 4;
    sc.random_clusters.cluster_count = 5;
    sc.random_clusters.subpaths_per_cluster = 3;
    const fs::path file = work_dir() / "small.json";
    std::ofstream out(file);
    out << sdchan::serialize_scenario(sc);
    return file;
}

} // namespace

TEST_CASE("reference-scenario emits a parseable scenario")
{
    const fs::path out = work_dir() / "reference.json";
    REQUIRE(run("reference-scenario > " + out.string()) == 0);
    const sdchan::Scenario sc = sdchan::parse_scenario(slurp(out));
    CHECK(sc.trps.size() == 6);
    CHECK(sc.sdcs.size() == 11);
}

TEST_CASE("validate accepts the reference file and rejects a broken one")
{
    const fs::path good = write_small_scenario();
    CHECK(run("validate " + good.string()) == 0);

    const fs::path bad = work_dir() / "bad.json";
    std::ofstream(bad) << "{\"rf\": {}}";
    CHECK(run("validate " + bad.string()) != 0);

    CHECK(run("validate /nonexistent/scenario.json") != 0);
}

TEST_CASE("simulate writes one deterministic trace per TRP")
{
    const fs::path scenario = write_small_scenario();
    const fs::path out1 = work_dir() / "run1";
    const fs::path out2 = work_dir() / "run2";

    REQUIRE(run("simulate " + scenario.string() + " --out " + out1.string()) == 0);
    REQUIRE(run("simulate " + scenario.string() + " --out " + out2.string()) == 0);

    for (int trp = 1; trp <= 6; ++trp)
    {
        const std::string name = "trace_trp" + std::to_string(trp) + ".csv";
        CHECK(fs::exists(out1 / name));
        CHECK(slurp(out1 / name) == slurp(out2 / name));
    }

    const std::string trace = slurp(out1 / "trace_trp3.csv");
    CHECK(trace.rfind("# scenario_hash=", 0) == 0);
    CHECK(trace.find("snapshot,trp_id,fap_delay_ns,fap_power_db,total_power_db,los_delay_ns,"
                     "olos_flag") != std::string::npos);

    // a different seed changes the trace content
    const fs::path out3 = work_dir() / "run3";
    REQUIRE(run("simulate " + scenario.string() + " --out " + out3.string() + " --seed 9") == 0);
    CHECK(slurp(out1 / "trace_trp3.csv") != slurp(out3 / "trace_trp3.csv"));
}

TEST_CASE("cir dump writes CIR and profile files with the documented columns")
{
    const fs::path scenario = write_small_scenario();
    const fs::path out = work_dir() / "cir_out";
    REQUIRE(run("cir " + scenario.string() + " --trp 3 --snapshot 2 --out " + out.string()) == 0);

    const std::string cir = slurp(out / "cir_trp3_snap2.csv");
    CHECK(cir.find("path_id,origin,delay_ns,power_db,phase_rad,aod_az_deg,aod_el_deg,aoa_az_deg,"
                   "aoa_el_deg,fbs_x,fbs_y,fbs_z,lbs_x,lbs_y,lbs_z,blocked") != std::string::npos);
    CHECK(cir.find("los") != std::string::npos);
    CHECK(cir.find("gr") != std::string::npos);
    CHECK(cir.find("wall-north") != std::string::npos);
    CHECK(cir.find("random") != std::string::npos);

    const std::string profile = slurp(out / "profile_trp3_snap2.csv");
    CHECK(profile.find("delay_ns,re,im,mag_db") != std::string::npos);

    CHECK(run("cir " + scenario.string() + " --trp 3 --snapshot 99 --out " + out.string()) != 0);
}

TEST_CASE("trace subcommand restricts the output to one TRP")
{
    const fs::path scenario = write_small_scenario();
    const fs::path out = work_dir() / "trace_out";
    REQUIRE(run("trace " + scenario.string() + " --trp 4 --out " + out.string()) == 0);
    CHECK(fs::exists(out / "trace_trp4.csv"));
    CHECK_FALSE(fs::exists(out / "trace_trp1.csv"));
}

TEST_CASE("SDCHAN_OUT_DIR provides the default output directory")
{
    const fs::path scenario = write_small_scenario();
    const fs::path out = work_dir() / "env_out";
    fs::create_directories(out);
    const std::string cmd =
        "SDCHAN_OUT_DIR=" + out.string() + " " + cli() + " trace " + scenario.string() + " --trp 2";
    REQUIRE(std::system(cmd.c_str()) == 0);
    CHECK(fs::exists(out / "trace_trp2.csv"));
}

TEST_CASE("position subcommand writes the fix file")
{
    const fs::path scenario = write_small_scenario();
    const fs::path out = work_dir() / "fixes" / "positions_test.csv";
    fs::create_directories(out.parent_path());
    REQUIRE(run("position " + scenario.string() + " --out " + out.string()) == 0);
    const std::string text = slurp(out);
    CHECK(text.find("snapshot,est_x,est_y,est_z,true_x,true_y,true_z,error_m,residual_rms_m,"
                    "iterations,converged,olos_any") != std::string::npos);
}
