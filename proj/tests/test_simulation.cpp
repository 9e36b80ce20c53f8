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

#include <filesystem>
#include <set>

#include "sdchan/simulation.hpp"

using namespace sdchan;

namespace
{

// Reference geometry shrunk to a handful of snapshots for unit testing.
Scenario small_scenario(int snapshots = 5)
{
    Scenario sc = reference_scenario();
    sc.snapshot_count = snapshots;
    sc.obstacle.snapshot_span = snapshots;
    sc.random_clusters.cluster_count = 6;
    sc.random_clusters.subpaths_per_cluster = 4;
    sc.random_clusters.c_phi_table.clear();
    sc.random_clusters.c_theta_table.clear();
    return sc;
}

std::set<int> path_indices(const SnapshotChannel &ch, PathOrigin origin)
{
    std::set<int> idx;
    for (const auto &p : ch.paths)
        if (p.origin == origin)
            idx.insert(p.path_index);
    return idx;
}

} // namespace

TEST_CASE("snapshot channel carries LOS, GR, SDC, and random cluster paths")
{
    const Scenario sc = small_scenario();
    const auto channels = simulate_link(sc, 2); // TRP3

    REQUIRE(channels.size() == 5);
    for (const auto &ch : channels)
    {
        CHECK(path_indices(ch, PathOrigin::Los).size() == 1);
        CHECK(path_indices(ch, PathOrigin::GroundReflection).size() == 1);

        // all five reflectors are visible from this geometry, so the SDC
        // count equals the spec count
        CHECK(path_indices(ch, PathOrigin::Sdc).size() == sc.sdcs.size());
        CHECK(path_indices(ch, PathOrigin::Random).size() ==
              static_cast<std::size_t>(sc.random_clusters.cluster_count));

        // sub-path granularity
        std::size_t random_paths = 0;
        for (const auto &p : ch.paths)
            if (p.origin == PathOrigin::Random)
                ++random_paths;
        CHECK(random_paths == static_cast<std::size_t>(sc.random_clusters.cluster_count *
                                                       sc.random_clusters.subpaths_per_cluster));
    }
}

TEST_CASE("LOS delay equals geometric distance over c0 at every snapshot")
{
    Scenario sc = small_scenario(8);
    sc.ue.step = {0.05, 0.02, 0.0}; // moving UE
    const auto channels = simulate_link(sc, 0);
    const Track track = sc.make_track();

    for (const auto &ch : channels)
    {
        for (const auto &p : ch.paths)
        {
            if (p.origin != PathOrigin::Los)
                continue;
            const double d = (track.position(ch.snapshot) - sc.trps[0].position).norm();
            CHECK(std::abs(p.delay_s - d / speed_of_light) < 1e-12 * (d / speed_of_light));
        }
    }
}

TEST_CASE("static world means identical snapshots")
{
    Scenario sc = small_scenario(4);
    sc.obstacle.end_base = sc.obstacle.start_base; // static obstacle
    const auto channels = simulate_link(sc, 1);

    for (std::size_t s = 1; s < channels.size(); ++s)
    {
        REQUIRE(channels[s].paths.size() == channels[0].paths.size());
        for (std::size_t i = 0; i < channels[s].paths.size(); ++i)
        {
            const auto &a = channels[0].paths[i];
            const auto &b = channels[s].paths[i];
            CHECK(b.delay_s == a.delay_s);
            CHECK(b.magnitude == a.magnitude);
            CHECK(b.phase_rad == a.phase_rad);
            CHECK(b.blocked == a.blocked);
        }
    }
}

TEST_CASE("random clusters are bit-identical across repeated runs")
{
    const Scenario sc = small_scenario();
    const auto a = simulate_link(sc, 3);
    const auto b = simulate_link(sc, 3);

    REQUIRE(a.size() == b.size());
    for (std::size_t s = 0; s < a.size(); ++s)
    {
        REQUIRE(a[s].paths.size() == b[s].paths.size());
        for (std::size_t i = 0; i < a[s].paths.size(); ++i)
        {
            CHECK(a[s].paths[i].delay_s == b[s].paths[i].delay_s);
            CHECK(a[s].paths[i].magnitude == b[s].paths[i].magnitude);
            CHECK(a[s].paths[i].phase_rad == b[s].paths[i].phase_rad);
        }
    }
}

TEST_CASE("random geometry differs per link, deterministic paths do not move")
{
    const Scenario sc = small_scenario();
    const auto a = simulate_link(sc, 0);
    const auto b = simulate_link(sc, 5);

    // fixed SDC world positions agree between links (shared environment)
    for (std::size_t i = 0; i < sc.sdcs.size(); ++i)
    {
        if (sc.sdcs[i].kind() != ClusterKind::SpecularReflector)
            continue;
        // reflection points differ per link, but both lie on the same plane
        const auto &plane = std::get<ReflectorPlane>(sc.sdcs[i].payload).plane;
        for (const auto *chs : {&a, &b})
            for (const auto &p : (*chs)[0].paths)
                if (p.origin == PathOrigin::Sdc && p.label == sc.sdcs[i].name)
                    CHECK(std::abs(plane.side(p.fbs)) < 1e-9);
    }

    // random FBS positions differ between the two links
    const auto &ra = a[0].paths.back();
    const auto &rb = b[0].paths.back();
    REQUIRE(ra.origin == PathOrigin::Random);
    CHECK((ra.fbs - rb.fbs).norm() > 1e-6);
}

TEST_CASE("moving UE crosses segment boundaries with cross-faded power")
{
    Scenario sc = small_scenario(120);
    sc.obstacle.snapshot_span = 120;
    sc.ue.start = {10.0, 10.0, 1.5};
    sc.ue.step = {0.04, 0.0, 0.0}; // 4.8 m track, ~1.6 m segments
    const Track track = sc.make_track();
    REQUIRE(track.segments.size() > 1);

    const auto channels = simulate_link(sc, 0);
    CHECK(channels.size() == 120);

    // inside an overlap both segments contribute random paths
    const int overlap_start = track.segments[1].start;
    const int overlap_len = track.overlaps[0];
    REQUIRE(overlap_len >= 2);
    const auto &mid = channels[overlap_start + overlap_len / 2];
    std::size_t n_random = 0;
    for (const auto &p : mid.paths)
        if (p.origin == PathOrigin::Random)
            ++n_random;
    CHECK(n_random == static_cast<std::size_t>(2 * sc.random_clusters.cluster_count *
                                               sc.random_clusters.subpaths_per_cluster));

    // first overlap snapshot is pure previous-segment (w = 0)
    const auto &first = channels[overlap_start];
    std::size_t n_first = 0;
    for (const auto &p : first.paths)
        if (p.origin == PathOrigin::Random)
            ++n_first;
    CHECK(n_first == static_cast<std::size_t>(sc.random_clusters.cluster_count *
                                              sc.random_clusters.subpaths_per_cluster));
}

TEST_CASE("run_simulation writes deterministic per-TRP traces")
{
    const Scenario sc = small_scenario();
    RunOptions options;
    options.out_dir = (std::filesystem::temp_directory_path() / "sdchan_test_run").string();

    const auto result = run_simulation(sc, options);
    CHECK(result.traces.size() == 6);
    CHECK(result.files.size() == 6);
    for (const auto &t : result.traces)
        CHECK(t.points.size() == 5);
}

TEST_CASE("LOS-dominant FAP tracks the geometric LOS delay within half a grid step")
{
    // TRP3 link with negligible random clusters and the screen parked far
    // away: every multipath component sits well below and well after the
    // direct path
    Scenario sc = small_scenario(40);
    sc.obstacle.snapshot_span = 40;
    sc.obstacle.start_base = sc.obstacle.end_base = {2.0, 8.0, 0.0};
    sc.random_clusters.k_factor_db = 40.0;
    sc.ground.enabled = false; // even a -24 dB bounce 2.7 ns out drags the apex
    const auto channels = simulate_link(sc, 2);

    TraceOptions options;
    options.profile.oversampling = sc.cir.oversampling;
    const double half_step = 0.5 / (sc.rf.bandwidth_hz * sc.cir.oversampling);
    for (const auto &ch : channels)
    {
        const auto point = trace_point(ch, sc.rf, options);
        REQUIRE(point.fap_valid);
        REQUIRE_FALSE(point.olos);
        CHECK(point.fap_delay_s >= point.los_delay_s - half_step);
        CHECK(std::abs(point.fap_delay_s - point.los_delay_s) <= half_step);
    }
}

TEST_CASE("positioning error is larger during the OLOS interval")
{
    // obstacle sweeps across the TRP3 line of sight within a short track
    Scenario sc = small_scenario(60);
    sc.obstacle.snapshot_span = 60;

    RunOptions options;
    options.out_dir = (std::filesystem::temp_directory_path() / "sdchan_test_olos").string();
    options.write_positions = true;
    const auto result = run_simulation(sc, options);

    const auto report = error_report(result.fixes);
    REQUIRE(report.olos_only.count > 0);
    REQUIRE(report.los_only.count > 0);
    CHECK(report.olos_only.median_m >= report.los_only.median_m);
}
