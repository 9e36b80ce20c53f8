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

#ifndef SDCHAN_KERNELS_HPP
#define SDCHAN_KERNELS_HPP

#include <cstddef>
#include <span>

namespace sdchan::kernels
{

// One pulse term of a correlation profile. Positions are expressed in grid
// units of 1/B: the profile sample i sits at x_tbl[i] = i / oversampling and
// the pulse center of a path with delay d is z = B * d.
struct PulseTerm
{
    double z;      // pulse center, units of 1/B
    double amp_re; // complex amplitude
    double amp_im;
};

// Accumulates out[i] += sum_p amp_p * sinc(x_i - z_p) with
// sinc(t) = sin(pi t)/(pi t). sin_tbl/cos_tbl hold sin(pi x_i)/cos(pi x_i)
// so the inner loop needs no trigonometry (angle-difference identity).
using accumulate_fn = void (*)(std::span<const double> x_tbl, std::span<const double> sin_tbl,
                               std::span<const double> cos_tbl, std::span<const PulseTerm> paths,
                               std::span<double> out_re, std::span<double> out_im);

// out[i] = re[i]^2 + im[i]^2
using magnitude_sq_fn = void (*)(std::span<const double> re, std::span<const double> im,
                                 std::span<double> out);

struct Backend
{
    const char *name;
    accumulate_fn accumulate_pulses;
    magnitude_sq_fn magnitudes_sq;
};

/// Scalar reference implementation; always available.
const Backend &scalar_backend();

/// AVX2+FMA implementation, or nullptr when the build target or the running
/// CPU lacks support.
const Backend *avx2_backend();

/// Preferred backend for this process. Picks AVX2 when available unless the
/// environment variable SDCHAN_FORCE_SCALAR is set to a nonempty value.
const Backend &active_backend();

} // namespace sdchan::kernels

#endif
