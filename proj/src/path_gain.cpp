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

#include "sdchan/path_gain.hpp"

#include <cmath>

namespace sdchan
{

double blockage_attenuation_db(const ResolvedPath &path, const ObstacleState &obstacle,
                               int snapshot)
{
    const RectPlane face = obstacle.face_at(snapshot);
    const Vec3 tx = path.fbs - path.b;
    const Vec3 rx = path.lbs - path.a;

    const Vec3 points[4] = {tx, path.fbs, path.lbs, rx};
    for (int i = 0; i < 3; ++i)
    {
        if ((points[i + 1] - points[i]).norm_sq() == 0.0)
            continue;
        if (segment_intersects_rect(points[i], points[i + 1], face))
            return obstacle.block_loss_db;
    }
    return 0.0;
}

void apply_amplitude(ResolvedPath &path, const RfConfig &rf, const ObstacleState &obstacle,
                     int snapshot, const GroundReflectionConfig &ground)
{
    const double length = path.total_length();
    const double lambda = rf.wavelength();

    const double block_db = blockage_attenuation_db(path, obstacle, snapshot);
    path.blocked = block_db > 0.0;

    if (path.origin == PathOrigin::Random)
    {
        // Power is anchored at generation time; drifting already advanced
        // the phase, blockage only scales the magnitude.
        path.magnitude =
            std::sqrt(path.subpath_power) * std::pow(10.0, -block_db / 20.0);
        return;
    }

    double loss_db = block_db + path.extra_loss_db;
    double phase = -2.0 * pi * length / lambda;

    if (path.origin == PathOrigin::GroundReflection)
    {
        const Vec3 tx = path.fbs - path.b;
        const double grazing = std::asin(std::min(1.0, tx.z / path.b.norm()));
        const auto refl = fresnel_reflection(grazing, ground.relative_permittivity,
                                             ground.polarization);
        loss_db -= 20.0 * std::log10(std::max(std::abs(refl), 1e-30));
        phase += std::arg(refl);
    }
    else if (path.origin == PathOrigin::Sdc && path.sdc_kind == ClusterKind::DiffractionEdge)
    {
        const Vec3 tx = path.fbs - path.b;
        const Vec3 rx = path.lbs - path.a;
        const double nu =
            edge_diffraction_nu(path.fbs, tx, rx, obstacle.face_at(snapshot), lambda);
        loss_db += knife_edge_loss_db(nu);
    }

    path.magnitude = std::pow(10.0, -loss_db / 20.0) / length;
    path.phase_rad = phase;
}

} // namespace sdchan
