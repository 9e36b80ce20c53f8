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

#ifndef SDCHAN_DRIFTING_HPP
#define SDCHAN_DRIFTING_HPP

#include <vector>

#include "sdchan/cluster_model.hpp"

namespace sdchan
{

/// UE trajectory sampled at snapshot instants, split into segments with
/// overlap for cross-fading. Segments cover the track contiguously; each
/// overlap is shorter than both adjacent segments.
struct Track
{
    struct Segment
    {
        int start{0};
        int length{0};
    };

    std::vector<Vec3> positions;
    double spacing_m{0.0};
    std::vector<Segment> segments;
    std::vector<int> overlaps; // overlaps[i] joins segments[i] and segments[i+1]

    const Vec3 &position(int snapshot) const { return positions.at(snapshot); }
    int snapshot_count() const { return static_cast<int>(positions.size()); }
    void validate() const;

    /// Linear track: position(s) = start + s * step. Segment length is given
    /// in meters and converted to snapshots; a static track yields a single
    /// segment.
    static Track make_linear(const Vec3 &start, const Vec3 &step, int snapshot_count,
                             double segment_length_m, double overlap_fraction);
};

/// All paths of one link at one snapshot: one LOS path, at most one ground
/// reflection, at most one path per SDC, plus random sub-paths.
struct SnapshotChannel
{
    int snapshot{0};
    int trp_id{0};
    int ue_id{0};
    std::vector<ResolvedPath> paths;

    void check_invariants(std::size_t sdc_spec_count) const;
};

/// Drifting step for paths whose scatterers stay fixed (Random and Fixed
/// kinds): recomputes the arrival vector, delay, and arrival angles for the
/// moved receiver and advances the phase by -2*pi*delta_length/lambda.
/// Throws geometry_error when the new position coincides with the LBS.
ResolvedPath update_path(const ResolvedPath &path, const Vec3 &new_rx, double wavelength_m);

/// Cross-fade of the random path sets of two overlapping segments:
/// segment-A amplitudes are scaled by sqrt(1-w), segment-B by sqrt(w).
/// Deterministic paths are merged outside this function and never faded.
std::vector<ResolvedPath> cross_fade(std::vector<ResolvedPath> segment_a,
                                     std::vector<ResolvedPath> segment_b, double w);

} // namespace sdchan

#endif
