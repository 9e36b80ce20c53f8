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
// AVX2/FMA variants of the profile kernels. This translation unit is built
// with -mavx2 -mfma on x86-64 targets only; callers must gate on
// avx2_backend() which performs the runtime CPU check.

#include "sdchan/kernels.hpp"

#if defined(__AVX2__) && defined(__FMA__)

#include <cmath>
#include <immintrin.h>

namespace sdchan::kernels
{

namespace
{

constexpr double sinc_taylor_cutoff = 1e-9;

void accumulate_avx2(std::span<const double> x_tbl, std::span<const double> sin_tbl,
                     std::span<const double> cos_tbl, std::span<const PulseTerm> paths,
                     std::span<double> out_re, std::span<double> out_im)
{
    const std::size_t n = x_tbl.size();
    const std::size_t n4 = n - n % 4;
    const double pi = 3.141592653589793238462643383279502884;

    const __m256d v_pi = _mm256_set1_pd(pi);
    const __m256d v_one = _mm256_set1_pd(1.0);
    const __m256d v_sixth = _mm256_set1_pd(1.0 / 6.0);
    const __m256d v_cutoff = _mm256_set1_pd(sinc_taylor_cutoff);
    const __m256d v_absmask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));

    for (const PulseTerm &p : paths)
    {
        const double sz = std::sin(pi * p.z);
        const double cz = std::cos(pi * p.z);
        const __m256d v_z = _mm256_set1_pd(p.z);
        const __m256d v_sz = _mm256_set1_pd(sz);
        const __m256d v_cz = _mm256_set1_pd(cz);
        const __m256d v_are = _mm256_set1_pd(p.amp_re);
        const __m256d v_aim = _mm256_set1_pd(p.amp_im);

        std::size_t i = 0;
        for (; i < n4; i += 4)
        {
            const __m256d x = _mm256_loadu_pd(&x_tbl[i]);
            const __m256d st = _mm256_loadu_pd(&sin_tbl[i]);
            const __m256d ct = _mm256_loadu_pd(&cos_tbl[i]);

            const __m256d diff = _mm256_sub_pd(x, v_z);
            const __m256d arg = _mm256_mul_pd(v_pi, diff);
            const __m256d numer = _mm256_fmsub_pd(st, v_cz, _mm256_mul_pd(ct, v_sz));
            __m256d val = _mm256_div_pd(numer, arg);

            const __m256d absdiff = _mm256_and_pd(diff, v_absmask);
            const __m256d near = _mm256_cmp_pd(absdiff, v_cutoff, _CMP_LT_OQ);
            const __m256d taylor =
                _mm256_fnmadd_pd(_mm256_mul_pd(arg, arg), v_sixth, v_one);
            val = _mm256_blendv_pd(val, taylor, near);

            __m256d re = _mm256_loadu_pd(&out_re[i]);
            __m256d im = _mm256_loadu_pd(&out_im[i]);
            re = _mm256_fmadd_pd(v_are, val, re);
            im = _mm256_fmadd_pd(v_aim, val, im);
            _mm256_storeu_pd(&out_re[i], re);
            _mm256_storeu_pd(&out_im[i], im);
        }
        for (; i < n; ++i)
        {
            const double diff = x_tbl[i] - p.z;
            const double arg = pi * diff;
            const double numer = sin_tbl[i] * cz - cos_tbl[i] * sz;
            double val = numer / arg;
            if (std::abs(diff) < sinc_taylor_cutoff)
                val = 1.0 - arg * arg * (1.0 / 6.0);
            out_re[i] += p.amp_re * val;
            out_im[i] += p.amp_im * val;
        }
    }
}

void magnitudes_sq_avx2(std::span<const double> re, std::span<const double> im,
                        std::span<double> out)
{
    const std::size_t n = re.size();
    const std::size_t n4 = n - n % 4;
    std::size_t i = 0;
    for (; i < n4; i += 4)
    {
        const __m256d r = _mm256_loadu_pd(&re[i]);
        const __m256d m = _mm256_loadu_pd(&im[i]);
        _mm256_storeu_pd(&out[i], _mm256_fmadd_pd(r, r, _mm256_mul_pd(m, m)));
    }
    for (; i < n; ++i)
        out[i] = re[i] * re[i] + im[i] * im[i];
}

const Backend avx2_impl{"avx2", &accumulate_avx2, &magnitudes_sq_avx2};

} // namespace

const Backend *avx2_backend_impl() { return &avx2_impl; }

} // namespace sdchan::kernels

#else

namespace sdchan::kernels
{
const Backend *avx2_backend_impl() { return nullptr; }
} // namespace sdchan::kernels

#endif
