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

#include "sdchan/sos_field.hpp"

#include "sdchan/rng.hpp"

namespace sdchan
{

// CDF of the radial wavenumber distribution that realizes an exponential
// autocorrelation exp(-d/L) in 3D: p(u) = (4/pi) u^2 / (1+u^2)^2 with
// u = k*L, giving F(u) = (2/pi) (atan u - u/(1+u^2)).
static double radial_cdf(double u)
{
    return (2.0 / pi) * (std::atan(u) - u / (1.0 + u * u));
}

static double sample_wavenumber(double quantile)
{
    // Invert the CDF by bisection. The tail behaves as 1 - (4/pi)/u, which
    // bounds the bracket for any quantile < 1.
    double lo = 0.0;
    double hi = 8.0 / (pi * (1.0 - quantile)) + 2.0;
    for (int i = 0; i < 200; ++i)
    {
        const double mid = 0.5 * (lo + hi);
        if (radial_cdf(mid) < quantile)
            lo = mid;
        else
            hi = mid;
        if (hi - lo < 1e-14 * (1.0 + hi))
            break;
    }
    return 0.5 * (lo + hi);
}

CorrelatedField::CorrelatedField(std::initializer_list<std::uint64_t> seed_key,
                                 double decorrelation_distance, std::size_t sinusoid_count)
    : d_corr_(decorrelation_distance)
{
    if (!(decorrelation_distance > 0.0))
        throw config_error("decorrelation distance must be positive");
    if (sinusoid_count == 0)
        throw config_error("sinusoid count must be at least 1");

    RngStream rng(seed_key);
    wave_x_.reserve(sinusoid_count);
    wave_y_.reserve(sinusoid_count);
    wave_z_.reserve(sinusoid_count);
    phase_.reserve(sinusoid_count);

    for (std::size_t i = 0; i < sinusoid_count; ++i)
    {
        const double k = sample_wavenumber(rng.uniform()) / d_corr_;
        // isotropic direction on the unit sphere
        const double cz = rng.uniform(-1.0, 1.0);
        const double sz = std::sqrt(std::max(0.0, 1.0 - cz * cz));
        const double az = rng.uniform(0.0, 2.0 * pi);
        wave_x_.push_back(k * sz * std::cos(az));
        wave_y_.push_back(k * sz * std::sin(az));
        wave_z_.push_back(k * cz);
        phase_.push_back(rng.uniform(0.0, 2.0 * pi));
    }
    amplitude_ = std::sqrt(2.0 / static_cast<double>(sinusoid_count));
}

double CorrelatedField::operator()(const Vec3 &p) const
{
    double acc = 0.0;
    const std::size_t n = wave_x_.size();
    for (std::size_t i = 0; i < n; ++i)
        acc += std::cos(wave_x_[i] * p.x + wave_y_[i] * p.y + wave_z_[i] * p.z + phase_[i]);
    return amplitude_ * acc;
}

} // namespace sdchan
