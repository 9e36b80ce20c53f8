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

#ifndef SDCHAN_PATH_GAIN_HPP
#define SDCHAN_PATH_GAIN_HPP

#include "sdchan/cluster_model.hpp"
#include "sdchan/propagation.hpp"

namespace sdchan
{

struct GroundReflectionConfig
{
    bool enabled{true};
    double relative_permittivity{5.0};
    Polarization polarization{Polarization::Perpendicular};
};

/// Blockage attenuation of a path against the obstacle at one snapshot:
/// block_loss_db when one of the segments TX-FBS, FBS-LBS, LBS-RX crosses
/// the screen, 0 otherwise. Zero-length segments are skipped.
double blockage_attenuation_db(const ResolvedPath &path, const ObstacleState &obstacle,
                               int snapshot);

/// Sets magnitude, phase, and the blocked flag of a path at one snapshot.
/// Amplitudes are normalized so that 0 dB is the free-space amplitude at
/// 1 m: the direct-path magnitude is 1/length. Deterministic paths get the
/// geometric phase -2*pi*length/lambda (plus the reflection coefficient for
/// the ground bounce and the knife-edge loss for diffraction edges); random
/// paths keep their drifted phase and their generation-time power.
void apply_amplitude(ResolvedPath &path, const RfConfig &rf, const ObstacleState &obstacle,
                     int snapshot, const GroundReflectionConfig &ground);

} // namespace sdchan

#endif
