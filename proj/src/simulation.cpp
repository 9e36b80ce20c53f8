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

#include "sdchan/simulation.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <sstream>

#include "sdchan/csv.hpp"

namespace sdchan
{

namespace
{

// stream-identity tags
constexpr std::uint64_t tag_clusters = 0xc1u;
constexpr std::uint64_t tag_shadowing = 0x5fu;

constexpr int ue_id = 0; // single-UE scenarios

} // namespace

LinkSimulator::LinkSimulator(const Scenario &scenario, std::size_t trp_index)
    : scenario_(scenario), trp_(scenario.trps.at(trp_index)), track_(scenario.make_track())
{
    const int n_clusters = scenario.random_clusters.cluster_count;
    shadow_fields_.reserve(n_clusters);
    for (int n = 0; n < n_clusters; ++n)
        shadow_fields_.emplace_back(
            std::initializer_list<std::uint64_t>{scenario.seed, tag_shadowing,
                                                 static_cast<std::uint64_t>(trp_.id),
                                                 static_cast<std::uint64_t>(ue_id),
                                                 static_cast<std::uint64_t>(n)},
            scenario.spatial.decorrelation_distance_m, scenario.spatial.sinusoid_count);
}

std::vector<ResolvedPath> LinkSimulator::make_segment_paths(std::size_t segment_index) const
{
    const Track::Segment &segment = track_.segments.at(segment_index);
    const Vec3 ue0 = track_.position(segment.start);
    const Vec3 tp = trp_.position;
    const double d_los = (ue0 - tp).norm();
    const auto &params = scenario_.random_clusters;

    // Spatially consistent per-cluster shadowing, evaluated at the segment
    // start position.
    std::vector<double> shadowing(params.cluster_count);
    for (int n = 0; n < params.cluster_count; ++n)
        shadowing[n] = shadow_fields_[n](ue0);

    RngStream stream{scenario_.seed, tag_clusters, static_cast<std::uint64_t>(trp_.id),
                     static_cast<std::uint64_t>(ue_id), static_cast<std::uint64_t>(segment_index)};
    RandomClusterState state =
        generate_random_clusters(params, vector_to_angles(ue0 - tp), vector_to_angles(tp - ue0),
                                 stream, shadowing);
    resolve_random_positions(state, tp, ue0, d_los);

    // Anchor the ensemble power to the direct path: the Ricean LOS share of
    // the state corresponds to the free-space amplitude 1/d.
    const double scale = 1.0 / (d_los * d_los) / state.los_power;
    const int base_index =
        2 + static_cast<int>(scenario_.sdcs.size()) +
        static_cast<int>(segment_index % 2) * params.cluster_count;

    std::vector<ResolvedPath> paths;
    paths.reserve(static_cast<std::size_t>(params.cluster_count) * params.subpaths_per_cluster);
    for (int n = 0; n < params.cluster_count; ++n)
    {
        const RandomCluster &cl = state.clusters[n];
        for (int m = 0; m < params.subpaths_per_cluster; ++m)
        {
            ResolvedPath p;
            p.trp_id = trp_.id;
            p.ue_id = ue_id;
            p.path_index = base_index + n;
            p.subpath_index = m;
            p.origin = PathOrigin::Random;
            p.label = "random";
            p.fbs = cl.fbs;
            p.lbs = cl.lbs;
            p.b = cl.fbs - tp;
            p.c = cl.lbs - cl.fbs;
            p.a = cl.lbs - ue0;
            p.departure = cl.departure;
            p.arrival = cl.arrival;
            p.generation_length = p.total_length();
            p.delay_s = p.generation_length / speed_of_light;
            p.subpath_power = scale * cl.power / params.subpaths_per_cluster;
            p.initial_phase = cl.subpath_phases[m];
            p.phase_rad = cl.subpath_phases[m];
            paths.push_back(std::move(p));
        }
    }
    return paths;
}

void LinkSimulator::run(const std::function<void(const SnapshotChannel &)> &sink)
{
    const Vec3 tp = trp_.position;
    const double lambda = scenario_.rf.wavelength();
    const auto &segments = track_.segments;

    // generation-time path sets of the currently active segments
    std::vector<std::vector<ResolvedPath>> segment_base(segments.size());

    for (int s = 0; s < track_.snapshot_count(); ++s)
    {
        const Vec3 ue = track_.position(s);

        SnapshotChannel channel;
        channel.snapshot = s;
        channel.trp_id = trp_.id;
        channel.ue_id = ue_id;

        ResolvedPath los = los_path(tp, ue);
        los.trp_id = trp_.id;
        los.ue_id = ue_id;
        los.snapshot = s;
        los.path_index = 0;
        channel.paths.push_back(std::move(los));

        if (scenario_.ground.enabled)
        {
            ResolvedPath gr = ground_reflection_path(tp, ue);
            gr.trp_id = trp_.id;
            gr.ue_id = ue_id;
            gr.snapshot = s;
            gr.path_index = 1;
            channel.paths.push_back(std::move(gr));
        }

        for (std::size_t i = 0; i < scenario_.sdcs.size(); ++i)
        {
            auto path = resolve_cluster(scenario_.sdcs[i], tp, ue, scenario_.obstacle, s);
            if (!path)
                continue;
            path->trp_id = trp_.id;
            path->ue_id = ue_id;
            path->path_index = 2 + static_cast<int>(i);
            channel.paths.push_back(std::move(*path));
        }

        for (auto &path : channel.paths)
            apply_amplitude(path, scenario_.rf, scenario_.obstacle, s, scenario_.ground);

        // random paths of the active segments, drifted to this snapshot
        std::vector<std::size_t> active;
        for (std::size_t k = 0; k < segments.size(); ++k)
            if (s >= segments[k].start && s < segments[k].start + segments[k].length)
                active.push_back(k);

        auto drifted = [&](std::size_t k) {
            if (segment_base[k].empty())
                segment_base[k] = make_segment_paths(k);
            std::vector<ResolvedPath> updated;
            updated.reserve(segment_base[k].size());
            for (const auto &base : segment_base[k])
            {
                ResolvedPath p = (s == segments[k].start) ? base : update_path(base, ue, lambda);
                p.snapshot = s;
                apply_amplitude(p, scenario_.rf, scenario_.obstacle, s, scenario_.ground);
                updated.push_back(std::move(p));
            }
            return updated;
        };

        if (active.size() > 2)
            throw config_error("track segmentation overlaps more than two segments at once");

        if (active.size() == 1)
        {
            for (auto &p : drifted(active[0]))
                channel.paths.push_back(std::move(p));
        }
        else if (active.size() == 2)
        {
            const std::size_t ka = active[0], kb = active[1];
            const int overlap = track_.overlaps.at(ka);
            const int idx = s - segments[kb].start;
            const double w =
                (overlap <= 1) ? 0.5 : static_cast<double>(idx) / (overlap - 1.0);
            for (auto &p : cross_fade(drifted(ka), drifted(kb), w))
                channel.paths.push_back(std::move(p));
        }

        // retire segments that ended before this snapshot
        for (std::size_t k = 0; k < segments.size(); ++k)
            if (!segment_base[k].empty() && segments[k].start + segments[k].length <= s)
                segment_base[k].clear();

        channel.check_invariants(scenario_.sdcs.size());
        sink(channel);
    }
}

std::vector<SnapshotChannel> simulate_link(const Scenario &scenario, std::size_t trp_index)
{
    std::vector<SnapshotChannel> out;
    out.reserve(scenario.snapshot_count);
    LinkSimulator sim(scenario, trp_index);
    sim.run([&](const SnapshotChannel &ch) { out.push_back(ch); });
    return out;
}

// ----------------------------------------------------------------- outputs

namespace
{

std::string origin_label(const ResolvedPath &p)
{
    switch (p.origin)
    {
    case PathOrigin::Los:
        return "los";
    case PathOrigin::GroundReflection:
        return "gr";
    case PathOrigin::Random:
        return "random";
    default:
        return p.label;
    }
}

double wrap_phase(double phase)
{
    double w = std::remainder(phase, 2.0 * pi);
    if (w <= -pi)
        w = pi;
    return w;
}

double amplitude_db(double magnitude) { return 20.0 * std::log10(std::max(magnitude, 1e-20)); }

void write_file(const std::filesystem::path &path, const std::string &content,
                std::vector<std::string> &files)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open output file " + path.string());
    out << content;
    if (!out)
        throw std::runtime_error("failed writing output file " + path.string());
    files.push_back(path.string());
}

std::string trace_csv(const PowerTrace &trace, const std::string &header)
{
    std::ostringstream out;
    out << header << "\n";
    out << "snapshot,trp_id,fap_delay_ns,fap_power_db,total_power_db,los_delay_ns,olos_flag\n";
    for (const auto &p : trace.points)
    {
        out << p.snapshot << ',' << trace.trp_id << ',' << format_g9(p.fap_delay_s * 1e9) << ','
            << format_g9(p.fap_power_db) << ',' << format_g9(p.total_power_db) << ','
            << format_g9(p.los_delay_s * 1e9) << ',' << (p.olos ? 1 : 0) << "\n";
    }
    return out.str();
}

std::string cir_csv(const SnapshotChannel &channel, const std::string &header)
{
    std::ostringstream out;
    out << header << "\n";
    out << "path_id,origin,delay_ns,power_db,phase_rad,aod_az_deg,aod_el_deg,aoa_az_deg,"
           "aoa_el_deg,fbs_x,fbs_y,fbs_z,lbs_x,lbs_y,lbs_z,blocked\n";
    int row = 0;
    for (const auto &p : channel.paths)
    {
        out << row++ << ',' << origin_label(p) << ',' << format_g9(p.delay_s * 1e9) << ','
            << format_g9(amplitude_db(p.magnitude)) << ',' << format_g9(wrap_phase(p.phase_rad))
            << ',' << format_g9(rad2deg(p.departure.azimuth)) << ','
            << format_g9(rad2deg(p.departure.elevation)) << ','
            << format_g9(rad2deg(p.arrival.azimuth)) << ','
            << format_g9(rad2deg(p.arrival.elevation)) << ',' << format_g9(p.fbs.x) << ','
            << format_g9(p.fbs.y) << ',' << format_g9(p.fbs.z) << ',' << format_g9(p.lbs.x) << ','
            << format_g9(p.lbs.y) << ',' << format_g9(p.lbs.z) << ',' << (p.blocked ? 1 : 0)
            << "\n";
    }
    return out.str();
}

std::string profile_csv(const CorrelationProfile &profile, const std::string &header)
{
    std::ostringstream out;
    out << header << "\n";
    out << "delay_ns,re,im,mag_db\n";
    for (std::size_t i = 0; i < profile.size(); ++i)
    {
        out << format_g9(profile.delay_at(i) * 1e9) << ',' << format_g9(profile.re[i]) << ','
            << format_g9(profile.im[i]) << ',' << format_g9(amplitude_db(profile.magnitude(i)))
            << "\n";
    }
    return out.str();
}

std::string positions_csv(const std::vector<FixRecord> &fixes, const std::string &header)
{
    std::ostringstream out;
    out << header << "\n";
    out << "snapshot,est_x,est_y,est_z,true_x,true_y,true_z,error_m,residual_rms_m,iterations,"
           "converged,olos_any\n";
    for (const auto &f : fixes)
    {
        out << f.snapshot << ',' << format_g9(f.estimate.x) << ',' << format_g9(f.estimate.y)
            << ',' << format_g9(f.estimate.z) << ',' << format_g9(f.truth.x) << ','
            << format_g9(f.truth.y) << ',' << format_g9(f.truth.z) << ',' << format_g9(f.error_m)
            << ',' << format_g9(f.residual_rms_m) << ',' << f.iterations << ','
            << (f.converged ? 1 : 0) << ',' << (f.olos_any ? 1 : 0) << "\n";
    }
    return out.str();
}

struct LinkOutput
{
    PowerTrace trace;
    std::vector<SnapshotChannel> dumps;
};

} // namespace

std::vector<FixRecord> solve_positions(const Scenario &scenario,
                                       const std::vector<PowerTrace> &traces)
{
    const Track track = scenario.make_track();

    Vec3 centroid{};
    for (const auto &t : scenario.trps)
        centroid += t.position;
    centroid = centroid * (1.0 / static_cast<double>(scenario.trps.size()));

    std::vector<FixRecord> fixes;
    fixes.reserve(scenario.snapshot_count);
    for (int s = 0; s < scenario.snapshot_count; ++s)
    {
        RangeSet ranges;
        bool olos_any = false;
        for (std::size_t li = 0; li < traces.size(); ++li)
        {
            const PowerTracePoint &pt = traces[li].points.at(s);
            if (!pt.fap_valid)
                continue;
            ranges.measurements.push_back({traces[li].trp_id,
                                           scenario.trp_by_id(traces[li].trp_id).position,
                                           pt.fap_delay_s * speed_of_light, pt.olos});
            olos_any = olos_any || pt.olos;
        }

        FixRecord fix;
        fix.snapshot = s;
        fix.truth = track.position(s);
        fix.olos_any = olos_any;
        const PositionSolution sol = ls_position(ranges, centroid);
        fix.estimate = sol.position;
        fix.error_m = (sol.position - fix.truth).norm();
        fix.residual_rms_m = sol.residual_rms_m;
        fix.iterations = sol.iterations;
        fix.converged = sol.converged;
        fixes.push_back(fix);
    }
    return fixes;
}

RunResult run_simulation(Scenario scenario, const RunOptions &options)
{
    if (options.seed_override)
        scenario.seed = *options.seed_override;
    scenario.validate();

    const std::uint64_t hash = scenario_hash(scenario);
    const std::string header = output_header(hash, scenario.seed);

    // link selection
    std::vector<std::size_t> link_indices;
    for (std::size_t i = 0; i < scenario.trps.size(); ++i)
        if (!options.only_trp_id || scenario.trps[i].id == *options.only_trp_id)
            link_indices.push_back(i);
    if (link_indices.empty())
        throw config_error("no TRP matches the requested id");

    TraceOptions trace_options;
    trace_options.profile.oversampling = scenario.cir.oversampling;
    trace_options.profile.pulse = scenario.cir.pulse;
    trace_options.profile.raised_cosine_rolloff = scenario.cir.raised_cosine_rolloff;
    trace_options.fap_threshold_db = scenario.cir.fap_threshold_db;

    auto simulate_one = [&](std::size_t trp_index) {
        LinkOutput out;
        LinkSimulator sim(scenario, trp_index);
        out.trace.trp_id = sim.trp_id();
        out.trace.ue_id = ue_id;
        out.trace.points.reserve(scenario.snapshot_count);
        sim.run([&](const SnapshotChannel &ch) {
            out.trace.points.push_back(trace_point(ch, scenario.rf, trace_options));
            for (const auto &req : options.cir_dumps)
                if (req.trp_id == ch.trp_id && req.snapshot == ch.snapshot)
                    out.dumps.push_back(ch);
        });
        return out;
    };

    // links are independent; run them concurrently and collect in order
    std::vector<std::future<LinkOutput>> futures;
    futures.reserve(link_indices.size());
    for (std::size_t idx : link_indices)
        futures.push_back(std::async(std::launch::async, simulate_one, idx));

    std::vector<LinkOutput> outputs;
    outputs.reserve(futures.size());
    for (auto &f : futures)
        outputs.push_back(f.get());

    RunResult result;
    for (auto &o : outputs)
        result.traces.push_back(o.trace);

    const std::filesystem::path out_dir =
        options.out_dir.empty() ? std::filesystem::current_path()
                                : std::filesystem::path(options.out_dir);
    std::filesystem::create_directories(out_dir);

    if (options.write_traces)
        for (const auto &o : outputs)
            write_file(out_dir / ("trace_trp" + std::to_string(o.trace.trp_id) + ".csv"),
                       trace_csv(o.trace, header), result.files);

    for (const auto &o : outputs)
    {
        for (const auto &ch : o.dumps)
        {
            const std::string stem =
                "trp" + std::to_string(ch.trp_id) + "_snap" + std::to_string(ch.snapshot);
            write_file(out_dir / ("cir_" + stem + ".csv"), cir_csv(ch, header), result.files);
            const CorrelationProfile profile =
                band_limited_profile(ch, scenario.rf, trace_options.profile);
            write_file(out_dir / ("profile_" + stem + ".csv"), profile_csv(profile, header),
                       result.files);
        }
    }

    if (options.write_positions)
    {
        if (options.only_trp_id)
            throw config_error("positions require all links; drop the --trp restriction");
        result.fixes = solve_positions(scenario, result.traces);
        write_file(out_dir / "positions.csv", positions_csv(result.fixes, header), result.files);
    }

    return result;
}

} // namespace sdchan
