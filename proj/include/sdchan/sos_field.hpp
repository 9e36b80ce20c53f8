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

#ifndef SDCHAN_SOS_FIELD_HPP
#define SDCHAN_SOS_FIELD_HPP

#include <cstdint>
#include <vector>

#include "sdchan/geometry.hpp"

namespace sdchan
{

/// Spatially correlated standard-normal field over 3D position, realized as
/// a sum of sinusoids. Values at nearby positions are correlated with an
/// exponential autocorrelation exp(-d / decorrelation_distance); the
/// marginal over random seeds is N(0, 1). Evaluation is deterministic in
/// (seed tuple, position) and read-only after construction.
class CorrelatedField
{
  public:
    CorrelatedField(std::initializer_list<std::uint64_t> seed_key, double decorrelation_distance,
                    std::size_t sinusoid_count);

    double operator()(const Vec3 &position) const;

    double decorrelation_distance() const { return d_corr_; }
    std::size_t sinusoid_count() const { return wave_x_.size(); }

  private:
    double d_corr_;
    double amplitude_;
    // wave vectors and phases, struct-of-arrays for the evaluation loop
    std::vector<double> wave_x_, wave_y_, wave_z_, phase_;
};

} // namespace sdchan

#endif
