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

#ifndef SDCHAN_CLUSTER_MODEL_HPP
#define SDCHAN_CLUSTER_MODEL_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "sdchan/geometry.hpp"
#include "sdchan/propagation.hpp"
#include "sdchan/rng.hpp"

namespace sdchan
{

enum class ClusterKind
{
    Random,
    Fixed,
    SpecularReflector,
    Relative,
    DiffractionEdge
};

enum class RelativeAnchor
{
    Ue,
    Trp
};

/// Geometry payloads of the semi-deterministic cluster kinds.
struct FixedPoint
{
    Vec3 position;
};
struct ReflectorPlane
{
    RectPlane plane;
};
struct RelativeOffset
{
    RelativeAnchor anchor{RelativeAnchor::Ue};
    Vec3 offset;
};
struct EdgePoint
{
    // Screen-frame coordinates: u along the width axis, z above the base.
    double u{0.0};
    double z{0.0};
};

/// Declarative description of one semi-deterministic cluster. The payload
/// variant fixes the kind; DiffractionEdge clusters get their power from the
/// knife-edge loss, all others are extra_loss_db below free-space loss.
struct ClusterSpec
{
    std::string name;
    std::variant<FixedPoint, ReflectorPlane, RelativeOffset, EdgePoint> payload;
    double extra_loss_db{0.0};
    int subpath_count{1};

    ClusterKind kind() const;
    void validate() const;
};

enum class PathOrigin
{
    Los,
    GroundReflection,
    Sdc,
    Random
};

/// One propagation path at one snapshot: dual-bounce geometry (b: TX->FBS,
/// c: FBS->LBS, a: RX->LBS), delay, and complex amplitude. Arrival angles
/// follow the RX->LBS direction of vector a.
struct ResolvedPath
{
    int trp_id{0};
    int ue_id{0};
    int path_index{0};
    int subpath_index{0};
    int snapshot{0};

    Vec3 fbs;
    Vec3 lbs;
    Vec3 b;
    Vec3 c;
    Vec3 a;
    DirectionAngles departure;
    DirectionAngles arrival;

    double delay_s{0.0};
    double magnitude{0.0}; // linear amplitude, includes all losses
    double phase_rad{0.0};

    PathOrigin origin{PathOrigin::Random};
    ClusterKind sdc_kind{ClusterKind::Random}; // meaningful when origin == Sdc
    std::string label;                         // SDC name for origin == Sdc
    bool blocked{false};

    // bookkeeping used by amplitude evaluation and drifting
    double extra_loss_db{0.0};
    double subpath_power{0.0};    // random paths: linear power at generation
    double initial_phase{0.0};    // random paths: phase at generation
    double generation_length{0.0}; // random paths: path length at generation

    double total_length() const { return b.norm() + c.norm() + a.norm(); }
};

/// Statistical parameters of the random-cluster generator. Angular spreads
/// are in degrees; scaling-constant tables are keyed by cluster count and
/// default to 1.0 when no entry matches.
struct RandomClusterParams
{
    int cluster_count{0};
    double delay_spread_s{0.0};
    double delay_scaling{0.0};        // r_tau > 1
    double shadowing_std_db{0.0};     // per-cluster shadowing
    double k_factor_db{0.0};
    double asd_deg{0.0};
    double asa_deg{0.0};
    double zsd_deg{0.0};
    double zsa_deg{0.0};
    int subpaths_per_cluster{20};
    std::map<int, double> c_phi_table;
    std::map<int, double> c_theta_table;

    void validate() const;
};

struct RandomCluster
{
    double excess_delay_s{0.0};
    double power{0.0}; // linear, NLOS share
    DirectionAngles departure;
    DirectionAngles arrival;
    Vec3 fbs;
    Vec3 lbs;
    std::vector<double> subpath_phases;
};

/// Per-segment random cluster state. los_power + sum of cluster powers = 1;
/// the first cluster has zero excess delay.
struct RandomClusterState
{
    double los_power{0.0}; // K/(K+1) Ricean share carried by the direct path
    std::vector<RandomCluster> clusters;

    double total_power() const;
};

/// Draws delays, powers, angles, and sub-path phases for N random clusters.
/// Powers follow the single-slope exponential profile with per-cluster
/// shadowing, normalized so that together with the Ricean LOS share they
/// sum to one. correlated_shadowing optionally supplies standard-normal
/// values (one per cluster, applied after delay sorting) in place of stream
/// draws, which is how spatially consistent shadowing enters.
RandomClusterState generate_random_clusters(const RandomClusterParams &params,
                                            const DirectionAngles &center_departure,
                                            const DirectionAngles &center_arrival, RngStream &rng,
                                            std::span<const double> correlated_shadowing = {});

/// Dual-bounce inversion: places FBS on the departure ray from tx and LBS on
/// the arrival ray from rx, both at the same distance d >= 0, such that the
/// total path length equals delay * c0. Solved by bisection; throws
/// infeasible_delay_error when the delay is shorter than the direct path.
std::pair<Vec3, Vec3> positions_from_angles_delay(const Vec3 &tx, const Vec3 &rx,
                                                  const DirectionAngles &departure,
                                                  const DirectionAngles &arrival, double delay_s);

/// Fills FBS/LBS of every cluster in the state for one link.
void resolve_random_positions(RandomClusterState &state, const Vec3 &tx, const Vec3 &rx,
                              double los_distance);

/// Resolves one SDC to a concrete path at a snapshot. SpecularReflector
/// clusters return nullopt when the reflection point leaves the rectangle
/// extent. Amplitude fields are left for the propagation step.
std::optional<ResolvedPath> resolve_cluster(const ClusterSpec &spec, const Vec3 &trp,
                                            const Vec3 &ue, const ObstacleState &obstacle,
                                            int snapshot);

/// Direct path; FBS and LBS sit at the link midpoint so the dual-bounce
/// vector identities hold.
ResolvedPath los_path(const Vec3 &trp, const Vec3 &ue);

/// Specular bounce on the infinite ground plane z=0. Both endpoints must be
/// above the ground.
ResolvedPath ground_reflection_path(const Vec3 &trp, const Vec3 &ue);

} // namespace sdchan

#endif
