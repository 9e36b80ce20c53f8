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

#include "sdchan/positioning.hpp"

#include <algorithm>
#include <cmath>

namespace sdchan
{

void RangeSet::validate() const
{
    for (const auto &m : measurements)
        if (!(m.range_m > 0.0) || !std::isfinite(m.range_m))
            throw std::domain_error("TOA range measurements must be positive and finite");
}

namespace
{

// Solves the symmetric 3x3 system A x = b by the adjugate; throws on a
// numerically rank-deficient A.
Vec3 solve_sym3(const double a[3][3], const Vec3 &b)
{
    const double det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                       a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                       a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    double scale = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            scale = std::max(scale, std::abs(a[i][j]));
    if (std::abs(det) <= 1e-10 * scale * scale * scale)
        throw geometry_error("singular normal equations: degenerate TRP geometry");

    Vec3 x;
    x.x = (b.x * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
           a[0][1] * (b.y * a[2][2] - a[1][2] * b.z) +
           a[0][2] * (b.y * a[2][1] - a[1][1] * b.z)) /
          det;
    x.y = (a[0][0] * (b.y * a[2][2] - a[1][2] * b.z) - b.x * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * b.z - b.y * a[2][0])) /
          det;
    x.z = (a[0][0] * (a[1][1] * b.z - b.y * a[2][1]) - a[0][1] * (a[1][0] * b.z - b.y * a[2][0]) +
           b.x * (a[1][0] * a[2][1] - a[1][1] * a[2][0])) /
          det;
    return x;
}

double solve_sym2(const double a[3][3], const Vec3 &b, double &out_y)
{
    const double det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
    const double scale = std::max({std::abs(a[0][0]), std::abs(a[0][1]), std::abs(a[1][1])});
    if (std::abs(det) <= 1e-10 * scale * scale)
        throw geometry_error("singular normal equations: degenerate TRP geometry");
    out_y = (a[0][0] * b.y - a[1][0] * b.x) / det;
    return (b.x * a[1][1] - b.y * a[0][1]) / det;
}

} // namespace

PositionSolution ls_position(const RangeSet &ranges, const Vec3 &initial_guess, SolveMode mode)
{
    ranges.validate();
    const std::size_t n = ranges.measurements.size();
    const std::size_t minimum = (mode == SolveMode::Free3D) ? 4 : 3;
    if (n < minimum)
        throw geometry_error("underdetermined trilateration: too few TRPs for the solve mode");

    PositionSolution sol;
    sol.position = initial_guess;

    for (int iter = 1; iter <= 50; ++iter)
    {
        sol.iterations = iter;

        // normal equations J^T J delta = -J^T r with unit-vector rows
        double jtj[3][3]{};
        Vec3 jtr{};
        for (const auto &m : ranges.measurements)
        {
            Vec3 d = sol.position - m.trp_position;
            double dist = d.norm();
            if (dist < 1e-12)
            {
                // iterate sits on a TRP: pick any direction, keep the solver
                // moving
                d = Vec3{1.0, 0.0, 0.0};
                dist = 1e-12;
            }
            const Vec3 u = d * (1.0 / dist);
            const double r = dist - m.range_m;
            const double row[3] = {u.x, u.y, u.z};
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    jtj[i][j] += row[i] * row[j];
            jtr.x += u.x * r;
            jtr.y += u.y * r;
            jtr.z += u.z * r;
        }

        Vec3 step;
        if (mode == SolveMode::Free3D)
        {
            step = solve_sym3(jtj, -jtr);
        }
        else
        {
            double sy = 0.0;
            const double sx = solve_sym2(jtj, -jtr, sy);
            step = Vec3{sx, sy, 0.0};
        }

        sol.position += step;
        if (step.norm() < 1e-6)
        {
            sol.converged = true;
            break;
        }
    }

    double rss = 0.0;
    for (const auto &m : ranges.measurements)
    {
        const double r = (sol.position - m.trp_position).norm() - m.range_m;
        rss += r * r;
    }
    sol.residual_rms_m = std::sqrt(rss / static_cast<double>(n));
    return sol;
}

namespace
{

double quantile(std::vector<double> sorted, double q)
{
    if (sorted.empty())
        return 0.0;
    const double idx = q * static_cast<double>(sorted.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(std::floor(idx));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = idx - static_cast<double>(lo);
    return sorted[lo] * (1.0 - frac) + sorted[hi] * frac;
}

ErrorStats stats_of(std::vector<double> errors)
{
    ErrorStats s;
    s.count = errors.size();
    if (errors.empty())
        return s;
    std::sort(errors.begin(), errors.end());
    s.median_m = quantile(errors, 0.5);
    s.p90_m = quantile(errors, 0.9);
    return s;
}

} // namespace

ErrorReport error_report(std::span<const FixRecord> fixes)
{
    std::vector<double> all, los, olos;
    for (const auto &f : fixes)
    {
        all.push_back(f.error_m);
        (f.olos_any ? olos : los).push_back(f.error_m);
    }
    ErrorReport report;
    report.overall = stats_of(std::move(all));
    report.los_only = stats_of(std::move(los));
    report.olos_only = stats_of(std::move(olos));
    return report;
}

} // namespace sdchan
