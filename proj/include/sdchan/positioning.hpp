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

#ifndef SDCHAN_POSITIONING_HPP
#define SDCHAN_POSITIONING_HPP

#include <span>
#include <vector>

#include "sdchan/geometry.hpp"

namespace sdchan
{

/// One TOA range observation: estimated range = FAP delay * c0.
struct RangeMeasurement
{
    int trp_id{0};
    Vec3 trp_position;
    double range_m{0.0};
    bool olos{false};
};

struct RangeSet
{
    std::vector<RangeMeasurement> measurements;
    void validate() const;
};

enum class SolveMode
{
    Free3D,     // needs >= 4 TRPs
    FixedHeight // needs >= 3 TRPs; z pinned to the initial guess
};

struct PositionSolution
{
    Vec3 position;
    double residual_rms_m{0.0};
    int iterations{0};
    bool converged{false};
};

/// Gauss-Newton minimization of sum((|p - trp_i| - r_i)^2). Stops when the
/// step falls below 1e-6 m or after 50 iterations; singular normal
/// equations raise geometry_error. Non-convergence is reported through the
/// flag, with the best iterate and its residual.
PositionSolution ls_position(const RangeSet &ranges, const Vec3 &initial_guess,
                             SolveMode mode = SolveMode::Free3D);

struct FixRecord
{
    int snapshot{0};
    Vec3 estimate;
    Vec3 truth;
    double error_m{0.0};
    double residual_rms_m{0.0};
    int iterations{0};
    bool converged{false};
    bool olos_any{false};
};

struct ErrorStats
{
    std::size_t count{0};
    double median_m{0.0};
    double p90_m{0.0};
};

struct ErrorReport
{
    ErrorStats overall;
    ErrorStats los_only;  // snapshots where no contributing link was OLOS
    ErrorStats olos_only; // snapshots with at least one OLOS link
};

ErrorReport error_report(std::span<const FixRecord> fixes);

} // namespace sdchan

#endif
