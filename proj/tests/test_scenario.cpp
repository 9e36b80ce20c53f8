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

#include <doctest.h>

#include <json.hpp>

#include "sdchan/scenario.hpp"

using namespace sdchan;

TEST_CASE("reference scenario matches the deployment description")
{
    const Scenario sc = reference_scenario();
    CHECK(sc.trps.size() == 6);
    CHECK(sc.sdcs.size() == 11);
    CHECK(sc.ground.enabled);
    CHECK(sc.rf.carrier_frequency_hz == doctest::Approx(3.75e9));
    CHECK(sc.rf.bandwidth_hz == doctest::Approx(100e6));
    CHECK(sc.hall_max.x - sc.hall_min.x == doctest::Approx(30.0));
    CHECK(sc.hall_max.y - sc.hall_min.y == doctest::Approx(45.0));
    CHECK(sc.hall_max.z - sc.hall_min.z == doctest::Approx(10.0));
    CHECK(sc.obstacle.width_m == doctest::Approx(2.0));
    CHECK(sc.obstacle.height_m == doctest::Approx(4.0));
    CHECK(sc.snapshot_count == 1000);
    CHECK(sc.ue.step.norm() == 0.0);

    int reflectors = 0, edges = 0;
    for (const auto &s : sc.sdcs)
    {
        if (s.kind() == ClusterKind::SpecularReflector)
            ++reflectors;
        if (s.kind() == ClusterKind::DiffractionEdge)
            ++edges;
    }
    CHECK(reflectors == 5);
    CHECK(edges == 6);
}

TEST_CASE("serialize-parse round trip preserves the scenario")
{
    const Scenario sc = reference_scenario();
    const std::string text = serialize_scenario(sc);
    const Scenario back = parse_scenario(text);

    CHECK(scenario_hash(back) == scenario_hash(sc));
    CHECK(back.trps.size() == sc.trps.size());
    CHECK(back.sdcs.size() == sc.sdcs.size());
    CHECK(back.seed == sc.seed);
    CHECK(back.random_clusters.delay_spread_s ==
          doctest::Approx(sc.random_clusters.delay_spread_s).epsilon(1e-12));
    CHECK(back.random_clusters.c_phi_table.at(25) ==
          doctest::Approx(sc.random_clusters.c_phi_table.at(25)));
    CHECK(serialize_scenario(back) == text);
}

TEST_CASE("validation errors name the offending key")
{
    const Scenario sc = reference_scenario();
    auto root = nlohmann::json::parse(serialize_scenario(sc));

    SUBCASE("TRP outside the hall")
    {
        root["trps"][2]["position"] = {99.0, 43.0, 8.0};
        try
        {
            parse_scenario(root.dump());
            FAIL("expected config_error");
        }
        catch (const config_error &e)
        {
            const std::string msg = e.what();
            CHECK(msg.find("trps[2]") != std::string::npos);
            CHECK(msg.find("3") != std::string::npos); // names the TRP id
        }
    }

    SUBCASE("missing seed")
    {
        root.erase("seed");
        try
        {
            parse_scenario(root.dump());
            FAIL("expected config_error");
        }
        catch (const config_error &e)
        {
            CHECK(std::string(e.what()).find("seed") != std::string::npos);
        }
    }

    SUBCASE("duplicate SDC name")
    {
        root["sdcs"][1]["name"] = root["sdcs"][0]["name"];
        CHECK_THROWS_AS(parse_scenario(root.dump()), config_error);
    }

    SUBCASE("SDC sub-path count is pinned to one")
    {
        root["sdcs"][2]["subpaths"] = 4;
        CHECK_THROWS_AS(parse_scenario(root.dump()), config_error);
    }

    SUBCASE("type mismatch names the path")
    {
        root["rf"]["bandwidth_hz"] = "wide";
        try
        {
            parse_scenario(root.dump());
            FAIL("expected config_error");
        }
        catch (const config_error &e)
        {
            CHECK(std::string(e.what()).find("rf.bandwidth_hz") != std::string::npos);
        }
    }

    SUBCASE("snapshot count must be positive")
    {
        root["snapshot_count"] = 0;
        CHECK_THROWS_AS(parse_scenario(root.dump()), config_error);
    }

    SUBCASE("invalid JSON")
    {
        CHECK_THROWS_AS(parse_scenario("{ not json"), config_error);
    }
}

TEST_CASE("scenario hash distinguishes seeds and geometry")
{
    const Scenario a = reference_scenario();
    Scenario b = a;
    b.seed = 2;
    CHECK(scenario_hash(a) != scenario_hash(b));

    Scenario c = a;
    c.ue.start.x += 0.5;
    CHECK(scenario_hash(a) != scenario_hash(c));
}
