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

#ifndef SDCHAN_COMMON_HPP
#define SDCHAN_COMMON_HPP

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace sdchan
{

// Speed of light in vacuum [m/s]
inline constexpr double speed_of_light = 299792458.0;

inline constexpr double pi = std::numbers::pi;

inline constexpr double deg2rad(double deg) { return deg * pi / 180.0; }
inline constexpr double rad2deg(double rad) { return rad * 180.0 / pi; }

inline double db_to_linear_power(double db) { return std::pow(10.0, db / 10.0); }
inline double db_to_linear_amplitude(double db) { return std::pow(10.0, db / 20.0); }

// Scenario or parameter validation failure. The message names the offending key.
class config_error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

// Degenerate geometric configuration (point on mirror plane, zero-length
// arrival vector, rank-deficient solver geometry).
class geometry_error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

// Requested path delay is shorter than the direct TX-RX distance permits.
class infeasible_delay_error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

} // namespace sdchan

#endif
