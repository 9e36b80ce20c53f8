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

#ifndef SDCHAN_CIR_METRICS_HPP
#define SDCHAN_CIR_METRICS_HPP

#include <optional>
#include <vector>

#include "sdchan/drifting.hpp"
#include "sdchan/propagation.hpp"

namespace sdchan
{

enum class PulseShape
{
    Sinc,
    RaisedCosine
};

struct ProfileOptions
{
    int oversampling{16};
    PulseShape pulse{PulseShape::Sinc};
    double raised_cosine_rolloff{0.25};
};

/// Band-limited correlator output over a uniform delay grid. The grid step
/// is 1/(B * oversampling) and the grid spans all path delays plus four
/// pulse widths.
struct CorrelationProfile
{
    std::vector<double> re;
    std::vector<double> im;
    double delay_step_s{0.0};
    int trp_id{0};
    int ue_id{0};
    int snapshot{0};
    double bandwidth_hz{0.0};
    int oversampling{0};

    std::size_t size() const { return re.size(); }
    double delay_at(std::size_t i) const { return static_cast<double>(i) * delay_step_s; }
    double magnitude(std::size_t i) const { return std::hypot(re[i], im[i]); }
};

/// Coherent sum of one band-limited pulse per path (unit-peak sinc of
/// main-lobe width 2/B, or a raised cosine). Overlapping pulses add with
/// their complex phases. Throws std::domain_error for an empty channel.
CorrelationProfile band_limited_profile(const SnapshotChannel &channel, const RfConfig &rf,
                                        const ProfileOptions &options = {});

struct FapEstimate
{
    double delay_s{0.0};
    double power_db{0.0};
    std::size_t sample_index{0};
};

/// Earliest detectable path peak of the profile magnitude: a local maximum
/// within threshold_db of the strongest sample that is neither explainable
/// as a sidelobe of a stronger peak nor a low-prominence ripple of the
/// interference floor. Delay is refined by parabolic three-point
/// interpolation. min_delay_s restricts the search start (the power trace
/// uses it to exclude non-physical pre-LOS interference). Returns nullopt
/// when the profile carries no energy.
std::optional<FapEstimate> detect_fap(const CorrelationProfile &profile,
                                      double threshold_db = 25.0, double min_delay_s = 0.0);

/// 10*log10 of the summed path powers; independent of bandwidth.
double total_power_db(const SnapshotChannel &channel);

struct PowerTracePoint
{
    int snapshot{0};
    double fap_delay_s{0.0};
    double fap_power_db{0.0};
    double total_power_db{0.0};
    double los_delay_s{0.0};
    bool olos{false};
    bool fap_valid{false};
};

/// FAP delay must respect the geometric LOS delay up to half a grid step.
struct PowerTrace
{
    int trp_id{0};
    int ue_id{0};
    std::vector<PowerTracePoint> points;
};

struct TraceOptions
{
    ProfileOptions profile;
    double fap_threshold_db{25.0};
    // optional additive white noise floor for FAP robustness testing
    std::optional<double> noise_floor_db;
    std::uint64_t noise_seed{0};
};

/// Profile synthesis + FAP detection + total power for one snapshot.
PowerTracePoint trace_point(const SnapshotChannel &channel, const RfConfig &rf,
                            const TraceOptions &options = {});

/// Convenience wrapper over a full link simulation output.
PowerTrace power_trace(const std::vector<SnapshotChannel> &channels, const RfConfig &rf,
                       const TraceOptions &options = {});

} // namespace sdchan

#endif
