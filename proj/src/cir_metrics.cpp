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

#include "sdchan/cir_metrics.hpp"

#include <algorithm>
#include <cmath>

#include "sdchan/kernels.hpp"
#include "sdchan/rng.hpp"

namespace sdchan
{

static double sinc(double t)
{
    if (std::abs(t) < 1e-9)
        return 1.0 - (pi * t) * (pi * t) / 6.0;
    return std::sin(pi * t) / (pi * t);
}

// Raised-cosine correlator pulse with symbol time 1/B; unit peak.
static double raised_cosine(double t, double rolloff)
{
    const double s = sinc(t);
    const double x = 2.0 * rolloff * t;
    const double denom = 1.0 - x * x;
    if (std::abs(denom) < 1e-9)
        return (pi / 4.0) * sinc(1.0 / (2.0 * rolloff));
    return s * std::cos(pi * rolloff * t) / denom;
}

CorrelationProfile band_limited_profile(const SnapshotChannel &channel, const RfConfig &rf,
                                        const ProfileOptions &options)
{
    if (channel.paths.empty())
        throw std::domain_error("cannot synthesize a profile from an empty path list");
    if (options.oversampling < 1)
        throw std::domain_error("oversampling must be >= 1");

    const double bandwidth = rf.bandwidth_hz;
    double max_delay = 0.0;
    for (const auto &p : channel.paths)
        max_delay = std::max(max_delay, p.delay_s);

    CorrelationProfile profile;
    profile.bandwidth_hz = bandwidth;
    profile.oversampling = options.oversampling;
    profile.delay_step_s = 1.0 / (bandwidth * options.oversampling);
    profile.trp_id = channel.trp_id;
    profile.ue_id = channel.ue_id;
    profile.snapshot = channel.snapshot;

    const double span = max_delay + 4.0 / bandwidth;
    const std::size_t n = static_cast<std::size_t>(std::floor(span / profile.delay_step_s)) + 1;
    profile.re.assign(n, 0.0);
    profile.im.assign(n, 0.0);

    if (options.pulse == PulseShape::Sinc)
    {
        // grid in units of 1/B plus the trigonometric tables the kernels use
        std::vector<double> x(n), sin_tbl(n), cos_tbl(n);
        const double inv_os = 1.0 / options.oversampling;
        for (std::size_t i = 0; i < n; ++i)
        {
            x[i] = static_cast<double>(i) * inv_os;
            sin_tbl[i] = std::sin(pi * x[i]);
            cos_tbl[i] = std::cos(pi * x[i]);
        }
        std::vector<kernels::PulseTerm> terms;
        terms.reserve(channel.paths.size());
        for (const auto &p : channel.paths)
            terms.push_back({bandwidth * p.delay_s, p.magnitude * std::cos(p.phase_rad),
                             p.magnitude * std::sin(p.phase_rad)});
        kernels::active_backend().accumulate_pulses(x, sin_tbl, cos_tbl, terms, profile.re,
                                                    profile.im);
    }
    else
    {
        for (const auto &p : channel.paths)
        {
            const double are = p.magnitude * std::cos(p.phase_rad);
            const double aim = p.magnitude * std::sin(p.phase_rad);
            for (std::size_t i = 0; i < n; ++i)
            {
                const double t = bandwidth * (profile.delay_at(i) - p.delay_s);
                const double v = raised_cosine(t, options.raised_cosine_rolloff);
                profile.re[i] += are * v;
                profile.im[i] += aim * v;
            }
        }
    }
    return profile;
}

std::optional<FapEstimate> detect_fap(const CorrelationProfile &profile, double threshold_db,
                                      double min_delay_s)
{
    const std::size_t n = profile.size();
    if (n == 0)
        return std::nullopt;
    const std::size_t first =
        min_delay_s <= 0.0
            ? 0
            : std::min<std::size_t>(n, static_cast<std::size_t>(
                                           std::ceil(min_delay_s / profile.delay_step_s)));

    std::vector<double> mag_sq(n);
    kernels::active_backend().magnitudes_sq(profile.re, profile.im, mag_sq);

    const double peak_sq = *std::max_element(mag_sq.begin(), mag_sq.end());
    if (peak_sq <= 0.0)
        return std::nullopt;
    const double floor_sq = peak_sq * std::pow(10.0, -threshold_db / 10.0);

    auto is_local_max = [&](std::size_t i) {
        const double left = (i > 0) ? mag_sq[i - 1] : -1.0;
        const double right = (i + 1 < n) ? mag_sq[i + 1] : -1.0;
        return mag_sq[i] > left && mag_sq[i] >= right;
    };

    std::vector<std::size_t> maxima;
    for (std::size_t i = 0; i < n; ++i)
        if (is_local_max(i))
            maxima.push_back(i);

    // Sidelobe guard: a candidate whose magnitude does not rise above the
    // sinc sidelobe envelope mag_j / (pi B |t_i - t_j|) of some stronger
    // peak is indistinguishable from that peak's own sidelobe and is
    // skipped; true sidelobes touch the envelope exactly. Inside a main
    // lobe (B dt < 1) any stronger peak suppresses the candidate.
    const double margin = 1.25;
    const double lobes_per_sample = 1.0 / std::max(profile.oversampling, 1);
    auto is_sidelobe_of_stronger = [&](std::size_t i) {
        for (std::size_t j : maxima)
        {
            if (mag_sq[j] <= mag_sq[i])
                continue;
            const double delta =
                std::abs(static_cast<double>(i) - static_cast<double>(j)) * lobes_per_sample;
            const double envelope = delta < 1.0 ? 1.0 : 1.0 / (pi * delta);
            if (std::sqrt(mag_sq[i]) <= margin * std::sqrt(mag_sq[j]) * envelope)
                return true;
        }
        return false;
    };

    // Prominence guard: ripples riding on the composite sidelobe floor of
    // several arrivals are only a few dB proud of their saddles, while a
    // resolvable path lobe rises well above its surroundings.
    const double min_prominence_sq = std::pow(10.0, 5.0 / 10.0);
    auto prominence_ok = [&](std::size_t i) {
        double saddle = 0.0;
        for (int dir : {-1, +1})
        {
            double lowest = mag_sq[i];
            for (std::size_t k = 1;; ++k)
            {
                const std::ptrdiff_t j = static_cast<std::ptrdiff_t>(i) + dir * k;
                if (j < 0 || j >= static_cast<std::ptrdiff_t>(n))
                    break;
                const double v = mag_sq[static_cast<std::size_t>(j)];
                if (v >= mag_sq[i])
                    break;
                lowest = std::min(lowest, v);
            }
            saddle = std::max(saddle, lowest);
        }
        return mag_sq[i] >= saddle * min_prominence_sq;
    };

    for (std::size_t i = first; i < n; ++i)
    {
        if (mag_sq[i] < floor_sq || !is_local_max(i) || is_sidelobe_of_stronger(i) ||
            !prominence_ok(i))
            continue;

        FapEstimate fap;
        fap.sample_index = i;
        double value = std::sqrt(mag_sq[i]);
        double delay = profile.delay_at(i);
        if (i > 0 && i + 1 < n)
        {
            // parabolic interpolation on the magnitude
            const double ym = std::sqrt(mag_sq[i - 1]);
            const double y0 = value;
            const double yp = std::sqrt(mag_sq[i + 1]);
            const double denom = ym - 2.0 * y0 + yp;
            if (denom < 0.0)
            {
                double shift = 0.5 * (ym - yp) / denom;
                shift = std::clamp(shift, -0.5, 0.5);
                delay += shift * profile.delay_step_s;
                value = y0 - 0.25 * (ym - yp) * shift;
            }
        }
        fap.delay_s = delay;
        fap.power_db = 20.0 * std::log10(value);
        return fap;
    }
    return std::nullopt;
}

double total_power_db(const SnapshotChannel &channel)
{
    if (channel.paths.empty())
        throw std::domain_error("cannot compute total power of an empty path list");
    double acc = 0.0;
    for (const auto &p : channel.paths)
        acc += p.magnitude * p.magnitude;
    return 10.0 * std::log10(acc);
}

PowerTracePoint trace_point(const SnapshotChannel &channel, const RfConfig &rf,
                            const TraceOptions &options)
{
    CorrelationProfile profile = band_limited_profile(channel, rf, options.profile);

    if (options.noise_floor_db)
    {
        RngStream noise{options.noise_seed, 0x6e6f697365ULL,
                        static_cast<std::uint64_t>(channel.trp_id),
                        static_cast<std::uint64_t>(channel.ue_id),
                        static_cast<std::uint64_t>(channel.snapshot)};
        const double sigma = std::pow(10.0, *options.noise_floor_db / 20.0) / std::sqrt(2.0);
        for (std::size_t i = 0; i < profile.size(); ++i)
        {
            profile.re[i] += sigma * noise.normal();
            profile.im[i] += sigma * noise.normal();
        }
    }

    PowerTracePoint point;
    point.snapshot = channel.snapshot;
    point.total_power_db = total_power_db(channel);

    for (const auto &p : channel.paths)
    {
        if (p.origin == PathOrigin::Los)
        {
            point.los_delay_s = p.delay_s;
            point.olos = p.blocked;
        }
    }

    // nothing can arrive a full pulse width before the geometric direct
    // path; interference ripples earlier than that are excluded
    const double min_delay = point.los_delay_s - 1.0 / rf.bandwidth_hz;
    if (const auto fap = detect_fap(profile, options.fap_threshold_db, min_delay))
    {
        point.fap_delay_s = fap->delay_s;
        point.fap_power_db = fap->power_db;
        point.fap_valid = true;
    }
    return point;
}

PowerTrace power_trace(const std::vector<SnapshotChannel> &channels, const RfConfig &rf,
                       const TraceOptions &options)
{
    if (channels.empty())
        throw std::domain_error("power trace requires at least one snapshot");
    PowerTrace trace;
    trace.trp_id = channels.front().trp_id;
    trace.ue_id = channels.front().ue_id;
    trace.points.reserve(channels.size());
    for (const auto &ch : channels)
        trace.points.push_back(trace_point(ch, rf, options));
    return trace;
}

} // namespace sdchan
