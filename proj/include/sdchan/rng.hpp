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

#ifndef SDCHAN_RNG_HPP
#define SDCHAN_RNG_HPP

#include <cstdint>
#include <initializer_list>

#include "sdchan/common.hpp"

namespace sdchan
{

// splitmix64 finalizer; used both for key mixing and as the generator step.
inline std::uint64_t mix64(std::uint64_t z)
{
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Deterministic random stream identified by a key tuple. Two streams built
/// from the same tuple produce bit-identical sequences, independent of any
/// other stream, which makes per-link parallel generation equal to serial.
class RngStream
{
  public:
    explicit RngStream(std::initializer_list<std::uint64_t> key)
    {
        state_ = 0x853c49e6748fea9bULL;
        for (std::uint64_t k : key)
            state_ = mix64(state_ ^ k);
    }

    std::uint64_t next_u64()
    {
        counter_ += 0x9e3779b97f4a7c15ULL;
        return mix64(state_ ^ counter_);
    }

    /// Uniform in (0, 1) - never returns 0 or 1.
    double uniform()
    {
        const std::uint64_t u = next_u64() >> 11; // 53 bits
        return (static_cast<double>(u) + 0.5) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller; pairs are cached.
    double normal()
    {
        if (have_cached_)
        {
            have_cached_ = false;
            return cached_;
        }
        const double u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        cached_ = r * std::sin(2.0 * pi * u2);
        have_cached_ = true;
        return r * std::cos(2.0 * pi * u2);
    }

    /// +1 or -1 with equal probability.
    double sign() { return (next_u64() & 1ULL) ? 1.0 : -1.0; }

  private:
    std::uint64_t state_{0};
    std::uint64_t counter_{0};
    double cached_{0.0};
    bool have_cached_{false};
};

} // namespace sdchan

#endif
