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

#include "sdchan/drifting.hpp"

#include <algorithm>
#include <cmath>

namespace sdchan
{

void Track::validate() const
{
    if (positions.empty())
        throw config_error("track must contain at least one snapshot");
    if (segments.empty())
        throw config_error("track must contain at least one segment");
    if (overlaps.size() + 1 != segments.size())
        throw config_error("track needs exactly one overlap entry per segment boundary");

    int expected_start = 0;
    for (std::size_t i = 0; i < segments.size(); ++i)
    {
        const Segment &seg = segments[i];
        if (seg.length <= 0)
            throw config_error("track segment length must be positive");
        if (seg.start != expected_start)
            throw config_error("track segments must cover the track contiguously");
        if (i > 0)
        {
            const int ov = overlaps[i - 1];
            if (ov < 0 || ov >= std::min(segments[i - 1].length, seg.length))
                throw config_error("segment overlap must be shorter than both segments");
        }
        // the next segment starts before this one ends by the overlap amount
        const int ov_next = (i + 1 < segments.size()) ? overlaps[i] : 0;
        expected_start = seg.start + seg.length - ov_next;
    }
    if (segments.back().start + segments.back().length != snapshot_count())
        throw config_error("track segments must end at the last snapshot");
}

Track Track::make_linear(const Vec3 &start, const Vec3 &step, int snapshot_count,
                         double segment_length_m, double overlap_fraction)
{
    if (snapshot_count < 1)
        throw config_error("snapshot count must be >= 1");
    Track track;
    track.spacing_m = step.norm();
    track.positions.reserve(snapshot_count);
    for (int s = 0; s < snapshot_count; ++s)
        track.positions.push_back(start + static_cast<double>(s) * step);

    int seg_len = snapshot_count;
    if (track.spacing_m > 0.0 && segment_length_m > 0.0)
        seg_len = std::clamp(static_cast<int>(std::lround(segment_length_m / track.spacing_m)),
                             1, snapshot_count);
    int overlap = std::clamp(static_cast<int>(std::lround(seg_len * overlap_fraction)), 0,
                             seg_len - 1);

    int start_idx = 0;
    while (true)
    {
        const int remaining = snapshot_count - start_idx;
        if (remaining <= seg_len + (seg_len - overlap) - 1 || seg_len >= snapshot_count)
        {
            // absorb the tail into the final segment
            track.segments.push_back({start_idx, remaining});
            break;
        }
        track.segments.push_back({start_idx, seg_len});
        track.overlaps.push_back(overlap);
        start_idx += seg_len - overlap;
    }
    track.validate();
    return track;
}

void SnapshotChannel::check_invariants(std::size_t sdc_spec_count) const
{
    std::size_t n_los = 0, n_gr = 0, n_sdc = 0;
    for (const auto &p : paths)
    {
        if (p.origin == PathOrigin::Los)
            ++n_los;
        else if (p.origin == PathOrigin::GroundReflection)
            ++n_gr;
        else if (p.origin == PathOrigin::Sdc)
            ++n_sdc;
    }
    if (n_los != 1)
        throw geometry_error("snapshot channel must contain exactly one LOS path");
    if (n_gr > 1)
        throw geometry_error("snapshot channel may contain at most one ground reflection");
    if (n_sdc > sdc_spec_count)
        throw geometry_error("snapshot channel contains more SDC paths than SDC specs");
}

ResolvedPath update_path(const ResolvedPath &path, const Vec3 &new_rx, double wavelength_m)
{
    // zero displacement is the identity, including for the degenerate
    // zero-excess-delay cluster whose LBS sits on the receiver
    const Vec3 old_rx = path.lbs - path.a;
    if ((new_rx - old_rx).norm_sq() == 0.0)
        return path;

    ResolvedPath updated = path;
    updated.a = path.lbs - new_rx;
    const double a_len = updated.a.norm();
    if (a_len == 0.0)
        throw geometry_error("receiver position coincides with the last-bounce scatterer");

    const double old_length = path.total_length();
    const double new_length = updated.b.norm() + updated.c.norm() + a_len;
    updated.arrival = vector_to_angles(updated.a);
    updated.delay_s = new_length / speed_of_light;
    updated.phase_rad = path.phase_rad - 2.0 * pi * (new_length - old_length) / wavelength_m;
    return updated;
}

std::vector<ResolvedPath> cross_fade(std::vector<ResolvedPath> segment_a,
                                     std::vector<ResolvedPath> segment_b, double w)
{
    if (w < 0.0 || w > 1.0)
        throw std::domain_error("cross-fade weight must be in [0, 1]");
    const double scale_a = std::sqrt(1.0 - w);
    const double scale_b = std::sqrt(w);

    std::vector<ResolvedPath> merged;
    merged.reserve(segment_a.size() + segment_b.size());
    for (auto &p : segment_a)
    {
        p.magnitude *= scale_a;
        if (p.magnitude > 0.0)
            merged.push_back(std::move(p));
    }
    for (auto &p : segment_b)
    {
        p.magnitude *= scale_b;
        if (p.magnitude > 0.0)
            merged.push_back(std::move(p));
    }
    return merged;
}

} // namespace sdchan
