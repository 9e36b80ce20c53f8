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
// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Criteria 1-3 share a single reference-scenario run.

#include <algorithm>
#include <chrono>
#include <cstdarg>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "sdchan/simulation.hpp"
#include "sdchan/sos_field.hpp"

using namespace sdchan;
namespace fs = std::filesystem;

namespace
{

int g_failures = 0;

void report(int id, bool pass, const std::string &detail)
{
    std::printf("%s criterion %2d: %s\n", pass ? "PASS" : "FAIL", id, detail.c_str());
    std::fflush(stdout);
    if (!pass)
        ++g_failures;
}

std::string fmt(const char *format, ...)
{
    char buf[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof(buf), format, args);
    va_end(args);
    return buf;
}

double median(std::vector<double> values)
{
    if (values.empty())
        return 0.0;
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

// ------------------------------------------------------------ criteria 1-3

struct ReferenceRun
{
    Scenario scenario;
    PowerTrace trp3_trace;
    double runtime_s{0.0};
};

ReferenceRun run_reference()
{
    ReferenceRun run;
    run.scenario = reference_scenario();

    const auto t0 = std::chrono::steady_clock::now();
    RunOptions options;
    options.out_dir = (fs::temp_directory_path() / "sdchan_acceptance_ref").string();
    const RunResult result = run_simulation(run.scenario, options);
    run.runtime_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    for (const auto &trace : result.traces)
        if (trace.trp_id == 3)
            run.trp3_trace = trace;
    return run;
}

void criterion_1_and_2(const ReferenceRun &run)
{
    std::vector<double> fap_blocked, fap_clear, total_blocked, total_clear;
    for (const auto &p : run.trp3_trace.points)
    {
        if (!p.fap_valid)
            continue;
        (p.olos ? fap_blocked : fap_clear).push_back(p.fap_power_db);
        (p.olos ? total_blocked : total_clear).push_back(p.total_power_db);
    }

    const bool interval_ok = fap_blocked.size() >= 20 && fap_clear.size() >= 100;
    const double fap_drop = median(fap_clear) - median(fap_blocked);
    const double deepest = median(fap_clear) -
                           (fap_blocked.empty()
                                ? 0.0
                                : *std::min_element(fap_blocked.begin(), fap_blocked.end()));
    const bool pass1 = interval_ok && fap_drop >= 15.0 && fap_drop <= 25.0 &&
                       run.runtime_s < 120.0;
    report(1, pass1,
           fmt("OLOS FAP drop %.1f dB (deepest %.1f dB) over %zu blocked snapshots, "
               "reference run %.1f s",
               fap_drop, deepest, fap_blocked.size(), run.runtime_s));

    const double total_drop = median(total_clear) - median(total_blocked);
    const bool pass2 = interval_ok && total_drop >= 3.0 && total_drop <= 9.0;
    report(2, pass2, fmt("OLOS total-power drop %.2f dB", total_drop));
}

void criterion_3(const ReferenceRun &run)
{
    // Scan fully-LOS snapshots for the multipath structure: an
    // obstacle-edge path 10-40 ns after the FAP and a wall or random path
    // more than 60 ns after it.
    const Scenario &sc = run.scenario;
    TraceOptions trace_options;
    trace_options.profile.oversampling = sc.cir.oversampling;
    trace_options.fap_threshold_db = sc.cir.fap_threshold_db;

    int satisfied = 0, scanned = 0;
    LinkSimulator sim(sc, 2); // TRP3
    sim.run([&](const SnapshotChannel &ch) {
        bool olos = false;
        for (const auto &p : ch.paths)
            if (p.origin == PathOrigin::Los)
                olos = p.blocked;
        if (olos)
            return;
        ++scanned;

        const auto profile = band_limited_profile(ch, sc.rf, trace_options.profile);
        const auto fap = detect_fap(profile, trace_options.fap_threshold_db);
        if (!fap)
            return;

        bool edge_near = false, late_mpc = false;
        for (const auto &p : ch.paths)
        {
            const double after_s = p.delay_s - fap->delay_s;
            if (p.origin == PathOrigin::Sdc && p.sdc_kind == ClusterKind::DiffractionEdge &&
                after_s >= 10e-9 && after_s <= 40e-9)
                edge_near = true;
            const bool wall_or_random =
                p.origin == PathOrigin::Random ||
                (p.origin == PathOrigin::Sdc && p.sdc_kind == ClusterKind::SpecularReflector);
            if (wall_or_random && after_s > 60e-9)
                late_mpc = true;
        }
        if (edge_near && late_mpc)
            ++satisfied;
    });

    report(3, satisfied > 0,
           fmt("MPC structure present at %d of %d fully-LOS snapshots "
               "(edge path 10-40 ns after FAP, wall/random path > 60 ns after)",
               satisfied, scanned));
}

// -------------------------------------------------------------- criterion 4

void criterion_4()
{
    bool pass = true;
    std::string detail;

    const double at_zero = knife_edge_loss_db(0.0);
    pass = pass && std::abs(at_zero - 6.0) <= 0.1;

    for (double nu : {-0.78, -1.0, -5.0, -100.0})
        pass = pass && knife_edge_loss_db(nu) == 0.0;

    double prev = -1.0;
    bool monotone = true;
    for (double nu = -0.78; nu <= 5.0 + 1e-12; nu += 0.01)
    {
        const double loss = knife_edge_loss_db(nu);
        monotone = monotone && loss >= prev - 1e-12;
        prev = loss;
    }
    pass = pass && monotone;
    report(4, pass,
           fmt("knife-edge loss(0) = %.3f dB, clamp below -0.78 exact, monotone on [-0.78, 5]: %s",
               at_zero, monotone ? "yes" : "no"));
}

// -------------------------------------------------------------- criterion 5

void criterion_5()
{
    RngStream rng{0x5eca};
    int tested = 0;
    double worst = 0.0;
    while (tested < 1000)
    {
        const Vec3 center{rng.uniform(-2, 2), rng.uniform(-2, 2), 0.0};
        const RectPlane plane =
            RectPlane::make(center, {0, 0, 1}, {1, 0, 0}, 40.0, {0, 1, 0}, 40.0);
        const Vec3 tx{rng.uniform(-8, 8), rng.uniform(-8, 8), rng.uniform(0.5, 6)};
        const Vec3 rx{rng.uniform(-8, 8), rng.uniform(-8, 8), rng.uniform(0.5, 6)};
        const auto q = specular_reflection_point(tx, rx, plane);
        if (!q)
            continue;
        ++tested;

        const double image_len = (mirror_point(tx, plane) - rx).norm();

        // brute-force minimization over the plane: dense grid, refined with
        // a wide safety margin around the incumbent at every level
        double span = 12.0;
        double cx = 0.5 * (tx.x + rx.x), cy = 0.5 * (tx.y + rx.y);
        double best = 1e300, bx = cx, by = cy;
        for (int level = 0; level < 5; ++level)
        {
            const int grid = 200;
            const double step = 2.0 * span / grid;
            for (int i = 0; i <= grid; ++i)
                for (int j = 0; j <= grid; ++j)
                {
                    const Vec3 p{cx - span + step * i, cy - span + step * j, center.z};
                    const double len = (tx - p).norm() + (rx - p).norm();
                    if (len < best)
                    {
                        best = len;
                        bx = p.x;
                        by = p.y;
                    }
                }
            cx = bx;
            cy = by;
            span = 10.0 * step;
        }
        worst = std::max(worst, std::abs(best - image_len) / image_len);
    }
    report(5, worst < 1e-6,
           fmt("image-method path length vs grid minimum: worst relative error %.2e over 1000 "
               "configurations",
               worst));
}

// -------------------------------------------------------------- criterion 6

void criterion_6()
{
    RngStream rng{0xd0b};
    double worst = 0.0;
    int done = 0;
    while (done < 10000)
    {
        const Vec3 tx{rng.uniform(-10, 10), rng.uniform(-10, 10), rng.uniform(0, 5)};
        const Vec3 rx{rng.uniform(-10, 10), rng.uniform(-10, 10), rng.uniform(0, 5)};
        const Vec3 scatter{rng.uniform(-30, 30), rng.uniform(-30, 30), rng.uniform(0, 15)};
        if ((scatter - tx).norm() < 0.1 || (scatter - rx).norm() < 0.1 || (rx - tx).norm() < 0.1)
            continue;
        ++done;

        const double length = (scatter - tx).norm() + (scatter - rx).norm();
        const auto [fbs, lbs] = positions_from_angles_delay(
            tx, rx, vector_to_angles(scatter - tx), vector_to_angles(scatter - rx),
            length / speed_of_light);
        const double rebuilt = (fbs - tx).norm() + (lbs - fbs).norm() + (lbs - rx).norm();
        worst = std::max(worst, std::abs(rebuilt - length) / length);
    }

    bool rejected = false;
    try
    {
        positions_from_angles_delay({0, 0, 0}, {10, 0, 0}, {0, 0}, {pi, 0},
                                    9.0 / speed_of_light);
    }
    catch (const infeasible_delay_error &)
    {
        rejected = true;
    }

    report(6, worst < 1e-9 && rejected,
           fmt("dual-bounce length reconstruction: worst relative error %.2e over 10^4 "
               "scatterers; infeasible delay rejected: %s",
               worst, rejected ? "yes" : "no"));
}

// -------------------------------------------------------------- criterion 7

void criterion_7()
{
    const double lambda = RfConfig(3.75e9, 100e6).wavelength();
    const Vec3 lbs{20, 0, 1};
    const Vec3 rx0{0, 0, 1};
    const Vec3 step{1e-3, 0, 0}; // 1 mm per snapshot at 1 m/s -> dt = 1 ms
    const double v = 1.0;
    const double dt = step.norm() / v;

    ClusterSpec spec;
    spec.name = "target";
    spec.payload = FixedPoint{lbs};
    ObstacleState obs;
    obs.width_m = 1;
    obs.height_m = 1;
    obs.normal = {0, 1, 0};
    obs.start_base = obs.end_base = {500, 500, 0};
    obs.snapshot_span = 1;

    ResolvedPath path = *resolve_cluster(spec, {-5, 0, 1}, rx0, obs, 0);
    double prev_phase = path.phase_rad;
    double acc = 0.0;
    const int n = 100;
    for (int s = 1; s <= n; ++s)
    {
        path = update_path(path, rx0 + static_cast<double>(s) * step, lambda);
        acc += (path.phase_rad - prev_phase) / (2.0 * pi * dt);
        prev_phase = path.phase_rad;
    }
    const double rate = acc / n;
    const double expected = v / lambda;
    const double rel = std::abs(rate - expected) / expected;
    report(7, rel < 0.01,
           fmt("drifting phase rotation %.3f Hz vs v/lambda %.3f Hz (relative error %.2e)", rate,
               expected, rel));
}

// -------------------------------------------------------------- criterion 8

void criterion_8()
{
    const std::vector<Vec3> trps = {{3, 3, 8},  {27, 3, 7.5},  {2, 43, 8},
                                    {28, 43, 7.5}, {3, 22, 8.5}, {27, 22, 9}};
    const Vec3 truth{20, 30, 1.5};
    Vec3 centroid{};
    for (const auto &t : trps)
        centroid += t;
    centroid = centroid * (1.0 / trps.size());

    RangeSet exact;
    int id = 1;
    for (const auto &t : trps)
        exact.measurements.push_back({id++, t, (truth - t).norm(), false});

    const auto clean = ls_position(exact, centroid);
    const double clean_err = (clean.position - truth).norm();

    RangeSet biased = exact;
    biased.measurements[2].range_m += 3.0;
    const auto sol = ls_position(biased, centroid);

    // dense 1 cm grid over +-2 m around the truth
    auto rss = [&](double x, double y, double z) {
        double acc = 0.0;
        for (const auto &m : biased.measurements)
        {
            const double dx = x - m.trp_position.x;
            const double dy = y - m.trp_position.y;
            const double dz = z - m.trp_position.z;
            const double r = std::sqrt(dx * dx + dy * dy + dz * dz) - m.range_m;
            acc += r * r;
        }
        return acc;
    };
    Vec3 best{};
    double best_rss = 1e300;
    for (int ix = -200; ix <= 200; ++ix)
        for (int iy = -200; iy <= 200; ++iy)
            for (int iz = -200; iz <= 200; ++iz)
            {
                const double v =
                    rss(truth.x + ix * 0.01, truth.y + iy * 0.01, truth.z + iz * 0.01);
                if (v < best_rss)
                {
                    best_rss = v;
                    best = {truth.x + ix * 0.01, truth.y + iy * 0.01, truth.z + iz * 0.01};
                }
            }
    const double oracle_gap = (sol.position - best).norm();

    report(8, clean_err < 1e-6 && (sol.position - truth).norm() > 0.0 && oracle_gap < 0.02,
           fmt("noiseless error %.2e m; biased solve vs 1 cm grid oracle gap %.3f cm", clean_err,
               oracle_gap * 100.0));
}

// -------------------------------------------------------------- criterion 9

std::vector<std::string> read_lines(const fs::path &p)
{
    std::ifstream in(p, std::ios::binary);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line))
        lines.push_back(line);
    return lines;
}

std::string slurp(const fs::path &p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void criterion_9()
{
    Scenario sc = reference_scenario();
    sc.snapshot_count = 6;
    sc.obstacle.snapshot_span = 6;
    sc.random_clusters.cluster_count = 8;
    sc.random_clusters.subpaths_per_cluster = 5;

    const fs::path base = fs::temp_directory_path() / "sdchan_acceptance_det";
    fs::remove_all(base);

    RunOptions options;
    options.cir_dumps = {{3, 2}};

    options.out_dir = (base / "a").string();
    const auto run_a = run_simulation(sc, options);
    options.out_dir = (base / "b").string();
    run_simulation(sc, options);
    options.out_dir = (base / "c").string();
    options.seed_override = 999;
    run_simulation(sc, options);

    bool identical = true;
    for (const auto &file : run_a.files)
    {
        const fs::path rel = fs::path(file).filename();
        identical = identical && slurp(base / "a" / rel) == slurp(base / "b" / rel);
    }

    // across seeds: deterministic CIR rows agree, random rows differ, and
    // trace content changes
    const auto cir_a = read_lines(base / "a" / "cir_trp3_snap2.csv");
    const auto cir_c = read_lines(base / "c" / "cir_trp3_snap2.csv");
    bool deterministic_rows_equal = true;
    bool random_rows_differ = false;
    const std::size_t n = std::min(cir_a.size(), cir_c.size());
    for (std::size_t i = 2; i < n; ++i) // skip hash header and column header
    {
        const bool is_random_a = cir_a[i].find(",random,") != std::string::npos;
        const bool is_random_c = cir_c[i].find(",random,") != std::string::npos;
        if (!is_random_a && !is_random_c)
            deterministic_rows_equal = deterministic_rows_equal && cir_a[i] == cir_c[i];
        else if (is_random_a && is_random_c)
            random_rows_differ = random_rows_differ || cir_a[i] != cir_c[i];
    }
    const bool traces_differ =
        slurp(base / "a" / "trace_trp3.csv") != slurp(base / "c" / "trace_trp3.csv");

    report(9, identical && deterministic_rows_equal && random_rows_differ && traces_differ,
           fmt("same seed byte-identical: %s; across seeds deterministic rows equal: %s, random "
               "rows differ: %s",
               identical ? "yes" : "no", deterministic_rows_equal ? "yes" : "no",
               random_rows_differ ? "yes" : "no"));
}

// ------------------------------------------------------------- criterion 10

void criterion_10()
{
    const double d_corr = 10.0;
    const Vec3 a{5, 5, 1.5};
    const Vec3 b{5 + d_corr, 5, 1.5};
    const int n = 10000;

    double sum = 0.0, sum_sq = 0.0, cross = 0.0;
    for (int seed = 0; seed < n; ++seed)
    {
        const CorrelatedField field({0xf1e1dULL, static_cast<std::uint64_t>(seed)}, d_corr, 30);
        const double va = field(a);
        const double vb = field(b);
        sum += va;
        sum_sq += va * va;
        cross += va * vb;
    }
    const double mean = sum / n;
    const double stddev = std::sqrt(sum_sq / n - mean * mean);
    const double autocorr = cross / n;

    const bool pass = std::abs(mean) <= 0.05 && std::abs(stddev - 1.0) <= 0.05 &&
                      std::abs(autocorr - std::exp(-1.0)) <= 0.15;
    report(10, pass,
           fmt("field marginal mean %.3f, std %.3f; autocorrelation at d_corr %.3f (target %.3f)",
               mean, stddev, autocorr, std::exp(-1.0)));
}

} // namespace

int main()
{
    std::printf("sdchan acceptance suite\n");

    const ReferenceRun run = run_reference();
    criterion_1_and_2(run);
    criterion_3(run);
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();

    if (g_failures == 0)
        std::printf("all criteria passed\n");
    else
        std::printf("%d criteria failed\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
