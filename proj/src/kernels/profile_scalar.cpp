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
//
// Scalar reference kernels. The SIMD variants must match these within
// floating-point reassociation error; the equivalence suite enforces it.

#include <cmath>

#include "sdchan/kernels.hpp"

namespace sdchan::kernels
{

namespace
{

// Below this pulse-center distance the sinc is evaluated by its Taylor
// expansion to dodge the 0/0; identical constant in the SIMD kernels.
constexpr double sinc_taylor_cutoff = 1e-9;

void accumulate_scalar(std::span<const double> x_tbl, std::span<const double> sin_tbl,
                       std::span<const double> cos_tbl, std::span<const PulseTerm> paths,
                       std::span<double> out_re, std::span<double> out_im)
{
    const std::size_t n = x_tbl.size();
    const double pi = 3.141592653589793238462643383279502884;

    for (const PulseTerm &p : paths)
    {
        const double sz = std::sin(pi * p.z);
        const double cz = std::cos(pi * p.z);
        for (std::size_t i = 0; i < n; ++i)
        {
            const double diff = x_tbl[i] - p.z;
            const double arg = pi * diff;
            // sin(pi x - pi z) via the tables; one division per sample
            const double numer = sin_tbl[i] * cz - cos_tbl[i] * sz;
            double val = numer / arg;
            if (std::abs(diff) < sinc_taylor_cutoff)
                val = 1.0 - arg * arg * (1.0 / 6.0);
            out_re[i] += p.amp_re * val;
            out_im[i] += p.amp_im * val;
        }
    }
}

void magnitudes_sq_scalar(std::span<const double> re, std::span<const double> im,
                          std::span<double> out)
{
    const std::size_t n = re.size();
    for (std::size_t i = 0; i < n; ++i)
        out[i] = re[i] * re[i] + im[i] * im[i];
}

} // namespace

const Backend &scalar_backend()
{
    static const Backend backend{"scalar", &accumulate_scalar, &magnitudes_sq_scalar};
    return backend;
}

} // namespace sdchan::kernels
