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

#include "sdchan/cluster_model.hpp"

#include <algorithm>
#include <numeric>

namespace sdchan
{

ClusterKind ClusterSpec::kind() const
{
    switch (payload.index())
    {
    case 0:
        return ClusterKind::Fixed;
    case 1:
        return ClusterKind::SpecularReflector;
    case 2:
        return ClusterKind::Relative;
    default:
        return ClusterKind::DiffractionEdge;
    }
}

void ClusterSpec::validate() const
{
    if (name.empty())
        throw config_error("cluster name must not be empty");
    if (extra_loss_db < 0.0)
        throw config_error("cluster '" + name + "': extra_loss_db must be >= 0");
    if (subpath_count < 1)
        throw config_error("cluster '" + name + "': subpath_count must be >= 1");
}

void RandomClusterParams::validate() const
{
    if (cluster_count < 1)
        throw config_error("random_clusters.count must be >= 1");
    if (!(delay_spread_s > 0.0))
        throw config_error("random_clusters.delay_spread must be positive");
    if (!(delay_scaling > 1.0))
        throw config_error("random_clusters.delay_scaling must be > 1");
    if (shadowing_std_db < 0.0)
        throw config_error("random_clusters.shadowing_std_db must be >= 0");
    if (asd_deg < 0.0 || asa_deg < 0.0 || zsd_deg < 0.0 || zsa_deg < 0.0)
        throw config_error("random_clusters angular spreads must be >= 0");
    if (subpaths_per_cluster < 1)
        throw config_error("random_clusters.subpaths_per_cluster must be >= 1");
}

double RandomClusterState::total_power() const
{
    double p = los_power;
    for (const auto &c : clusters)
        p += c.power;
    return p;
}

static double table_lookup(const std::map<int, double> &table, int n)
{
    auto it = table.find(n);
    return it == table.end() ? 1.0 : it->second;
}

// Wraps an elevation produced by center + offset back into [-pi/2, pi/2].
static double fold_elevation(double el)
{
    if (el > pi / 2.0)
        return pi - el;
    if (el < -pi / 2.0)
        return -pi - el;
    return el;
}

RandomClusterState generate_random_clusters(const RandomClusterParams &params,
                                            const DirectionAngles &center_departure,
                                            const DirectionAngles &center_arrival, RngStream &rng,
                                            std::span<const double> correlated_shadowing)
{
    params.validate();
    if (!correlated_shadowing.empty() &&
        correlated_shadowing.size() != static_cast<std::size_t>(params.cluster_count))
        throw config_error("correlated shadowing vector must have one value per cluster");

    const int n_clusters = params.cluster_count;
    const double r_tau = params.delay_scaling;
    const double ds = params.delay_spread_s;

    // Exponential delay draws, sorted and shifted so the first excess delay
    // is zero.
    std::vector<double> delays(n_clusters);
    for (auto &d : delays)
        d = -r_tau * ds * std::log(rng.uniform());
    std::sort(delays.begin(), delays.end());
    const double d0 = delays.front();
    for (auto &d : delays)
        d -= d0;

    // Single-slope power profile with per-cluster shadowing.
    std::vector<double> powers(n_clusters);
    for (int n = 0; n < n_clusters; ++n)
    {
        const double zeta = correlated_shadowing.empty()
                                ? params.shadowing_std_db * rng.normal()
                                : params.shadowing_std_db * correlated_shadowing[n];
        powers[n] = std::exp(-delays[n] * (r_tau - 1.0) / (r_tau * ds)) *
                    std::pow(10.0, -zeta / 10.0);
    }
    const double power_sum = std::accumulate(powers.begin(), powers.end(), 0.0);

    const double k_linear = std::pow(10.0, params.k_factor_db / 10.0);
    const double los_share = k_linear / (k_linear + 1.0);
    const double nlos_share = 1.0 / (k_linear + 1.0);

    RandomClusterState state;
    state.los_power = los_share;
    state.clusters.resize(n_clusters);

    const double p_max = *std::max_element(powers.begin(), powers.end());
    const double c_phi = table_lookup(params.c_phi_table, n_clusters);
    const double c_theta = table_lookup(params.c_theta_table, n_clusters);

    for (int n = 0; n < n_clusters; ++n)
    {
        RandomCluster &cl = state.clusters[n];
        cl.excess_delay_s = delays[n];
        cl.power = nlos_share * powers[n] / power_sum;

        // Power-coupled angle offsets: inverse-Gaussian rule for azimuth,
        // inverse-Laplacian for zenith, each with random sign and a small
        // normal jitter, scaled by the configured constants.
        const double p_ratio = powers[n] / p_max;
        const double az_mag_deg = 2.0 * std::sqrt(-std::log(p_ratio)) / 1.4 / c_phi;
        const double zen_mag_deg = -std::log(p_ratio) / c_theta;

        const double az_dep = center_departure.azimuth +
                              deg2rad(params.asd_deg * az_mag_deg * rng.sign() +
                                      params.asd_deg / 7.0 * rng.normal());
        const double az_arr = center_arrival.azimuth +
                              deg2rad(params.asa_deg * az_mag_deg * rng.sign() +
                                      params.asa_deg / 7.0 * rng.normal());
        const double el_dep = fold_elevation(center_departure.elevation +
                                             deg2rad(params.zsd_deg * zen_mag_deg * rng.sign() +
                                                     params.zsd_deg / 7.0 * rng.normal()));
        const double el_arr = fold_elevation(center_arrival.elevation +
                                             deg2rad(params.zsa_deg * zen_mag_deg * rng.sign() +
                                                     params.zsa_deg / 7.0 * rng.normal()));
        cl.departure = DirectionAngles(az_dep, el_dep);
        cl.arrival = DirectionAngles(az_arr, el_arr);

        cl.subpath_phases.resize(params.subpaths_per_cluster);
        for (auto &ph : cl.subpath_phases)
            ph = rng.uniform(0.0, 2.0 * pi);
    }
    return state;
}

std::pair<Vec3, Vec3> positions_from_angles_delay(const Vec3 &tx, const Vec3 &rx,
                                                  const DirectionAngles &departure,
                                                  const DirectionAngles &arrival, double delay_s)
{
    const double total_length = delay_s * speed_of_light;
    const double direct = (rx - tx).norm();
    if (total_length < direct * (1.0 - 1e-12))
        throw infeasible_delay_error("path delay shorter than the direct distance allows");

    const Vec3 u_dep = angles_to_unit_vector(departure);
    const Vec3 u_arr = angles_to_unit_vector(arrival);

    // f(d) = 2d + |FBS(d) - LBS(d)| - L is nondecreasing (the middle term
    // changes at most at unit rate per endpoint), so bisection on
    // [0, L/2] is exact.
    auto excess = [&](double d) {
        const Vec3 fbs = tx + d * u_dep;
        const Vec3 lbs = rx + d * u_arr;
        return 2.0 * d + (fbs - lbs).norm() - total_length;
    };

    double lo = 0.0, hi = total_length / 2.0;
    if (excess(lo) >= 0.0)
        hi = lo;
    for (int i = 0; i < 200 && hi - lo > 1e-12; ++i)
    {
        const double mid = 0.5 * (lo + hi);
        if (excess(mid) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    const double d = 0.5 * (lo + hi);
    return {tx + d * u_dep, rx + d * u_arr};
}

void resolve_random_positions(RandomClusterState &state, const Vec3 &tx, const Vec3 &rx,
                              double los_distance)
{
    for (auto &cl : state.clusters)
    {
        const double delay = (los_distance + cl.excess_delay_s * speed_of_light) / speed_of_light;
        auto [fbs, lbs] = positions_from_angles_delay(tx, rx, cl.departure, cl.arrival, delay);
        cl.fbs = fbs;
        cl.lbs = lbs;
    }
}

// Populates the dual-bounce vectors and angles of a single-point scatterer
// path (FBS == LBS == p).
static ResolvedPath point_scatter_path(const Vec3 &trp, const Vec3 &ue, const Vec3 &p)
{
    ResolvedPath path;
    path.fbs = p;
    path.lbs = p;
    path.b = p - trp;
    path.c = Vec3{};
    path.a = p - ue;
    path.departure = vector_to_angles(path.b);
    path.arrival = vector_to_angles(path.a);
    path.delay_s = path.total_length() / speed_of_light;
    return path;
}

std::optional<ResolvedPath> resolve_cluster(const ClusterSpec &spec, const Vec3 &trp,
                                            const Vec3 &ue, const ObstacleState &obstacle,
                                            int snapshot)
{
    spec.validate();
    std::optional<ResolvedPath> path;

    if (const auto *fixed = std::get_if<FixedPoint>(&spec.payload))
    {
        path = point_scatter_path(trp, ue, fixed->position);
    }
    else if (const auto *refl = std::get_if<ReflectorPlane>(&spec.payload))
    {
        const auto q = specular_reflection_point(trp, ue, refl->plane);
        if (!q)
            return std::nullopt;
        path = point_scatter_path(trp, ue, *q);
    }
    else if (const auto *rel = std::get_if<RelativeOffset>(&spec.payload))
    {
        const Vec3 anchor = (rel->anchor == RelativeAnchor::Ue) ? ue : trp;
        path = point_scatter_path(trp, ue, anchor + rel->offset);
    }
    else
    {
        const auto &edge = std::get<EdgePoint>(spec.payload);
        path = point_scatter_path(trp, ue, obstacle.local_point_at(snapshot, edge.u, edge.z));
    }

    path->origin = PathOrigin::Sdc;
    path->sdc_kind = spec.kind();
    path->label = spec.name;
    path->extra_loss_db = spec.extra_loss_db;
    path->snapshot = snapshot;
    return path;
}

ResolvedPath los_path(const Vec3 &trp, const Vec3 &ue)
{
    ResolvedPath path = point_scatter_path(trp, ue, 0.5 * (trp + ue));
    path.origin = PathOrigin::Los;
    path.label = "los";
    return path;
}

ResolvedPath ground_reflection_path(const Vec3 &trp, const Vec3 &ue)
{
    if (trp.z <= 0.0 || ue.z <= 0.0)
        throw std::domain_error("ground reflection requires both endpoints above z = 0");
    const RectPlane ground = RectPlane::make_infinite(Vec3{0, 0, 0}, Vec3{0, 0, 1},
                                                      Vec3{1, 0, 0}, Vec3{0, 1, 0});
    const auto q = specular_reflection_point(trp, ue, ground);
    ResolvedPath path = point_scatter_path(trp, ue, *q);
    path.origin = PathOrigin::GroundReflection;
    path.label = "gr";
    return path;
}

} // namespace sdchan
