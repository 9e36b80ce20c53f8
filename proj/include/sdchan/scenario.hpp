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

#ifndef SDCHAN_SCENARIO_HPP
#define SDCHAN_SCENARIO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sdchan/cir_metrics.hpp"
#include "sdchan/cluster_model.hpp"
#include "sdchan/drifting.hpp"
#include "sdchan/path_gain.hpp"
#include "sdchan/propagation.hpp"

namespace sdchan
{

struct TrpConfig
{
    int id{0};
    Vec3 position;
};

struct UeTrackConfig
{
    Vec3 start;
    Vec3 step; // displacement per snapshot; zero for a static UE
};

struct SegmentationConfig
{
    double length_wavelengths{20.0};
    double overlap_fraction{0.25};
};

struct SpatialConsistencyConfig
{
    double decorrelation_distance_m{10.0};
    int sinusoid_count{30};
};

struct CirConfig
{
    int oversampling{16};
    PulseShape pulse{PulseShape::Sinc};
    double raised_cosine_rolloff{0.25};
    double fap_threshold_db{25.0};
};

/// Immutable world description: one UE, several TRPs, a moving obstacle,
/// the SDC list, and the statistical parameter blocks.
struct Scenario
{
    RfConfig rf;
    Vec3 hall_min;
    Vec3 hall_max;
    std::vector<TrpConfig> trps;
    UeTrackConfig ue;
    SegmentationConfig segmentation;
    ObstacleState obstacle;
    std::vector<ClusterSpec> sdcs;
    RandomClusterParams random_clusters;
    SpatialConsistencyConfig spatial;
    GroundReflectionConfig ground;
    CirConfig cir;
    std::uint64_t seed{0};
    int snapshot_count{1};

    void validate() const;
    Track make_track() const;
    const TrpConfig &trp_by_id(int id) const;
};

/// Parses and validates a scenario from JSON text. Error messages name the
/// offending key path.
Scenario parse_scenario(const std::string &json_text);

/// Canonical JSON form; parse(serialize(s)) round-trips.
std::string serialize_scenario(const Scenario &scenario);

/// FNV-1a hash of the canonical serialization; stamped into output headers.
std::uint64_t scenario_hash(const Scenario &scenario);

/// Built-in indoor-factory hall scenario: 30 x 45 x 10 m, six TRPs, a fixed
/// UE, and a 2 x 4 m screen moving past it over 1000 snapshots, with eleven
/// SDCs (four walls, ceiling, six obstacle edges) and ground reflection.
/// TRP coordinates and the obstacle trajectory are documented placeholders.
Scenario reference_scenario();

} // namespace sdchan

#endif
