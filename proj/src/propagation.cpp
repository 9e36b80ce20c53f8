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

#include "sdchan/propagation.hpp"

#include <algorithm>
#include <stdexcept>

namespace sdchan
{

RfConfig::RfConfig(double f_c, double bandwidth)
    : carrier_frequency_hz(f_c), bandwidth_hz(bandwidth)
{
    if (!(f_c > 0.0))
        throw config_error("carrier frequency must be positive");
    if (!(bandwidth > 0.0) || !(bandwidth < f_c))
        throw config_error("bandwidth must be positive and below the carrier frequency");
}

Vec3 ObstacleState::base_at(int snapshot) const
{
    if (snapshot_span <= 1)
        return start_base;
    const double t = static_cast<double>(snapshot) / static_cast<double>(snapshot_span - 1);
    return start_base + t * (end_base - start_base);
}

RectPlane ObstacleState::face_at(int snapshot) const
{
    const Vec3 base = base_at(snapshot);
    const Vec3 center = base + Vec3{0.0, 0.0, height_m / 2.0};
    return RectPlane::make(center, normal, width_axis(), width_m / 2.0, Vec3{0.0, 0.0, 1.0},
                           height_m / 2.0);
}

Vec3 ObstacleState::local_point_at(int snapshot, double u, double z) const
{
    return base_at(snapshot) + u * width_axis() + Vec3{0.0, 0.0, z};
}

double fspl_db(double distance_m, double carrier_frequency_hz)
{
    if (!(distance_m > 0.0))
        throw std::domain_error("FSPL distance must be positive");
    return 20.0 * std::log10(4.0 * pi * distance_m * carrier_frequency_hz / speed_of_light);
}

std::complex<double> fresnel_reflection(double grazing_angle_rad, double relative_permittivity,
                                        Polarization pol)
{
    if (!(grazing_angle_rad > 0.0) || grazing_angle_rad > pi / 2.0 + 1e-12)
        throw std::domain_error("grazing angle must be in (0, pi/2]");
    if (relative_permittivity < 1.0)
        throw std::domain_error("relative permittivity must be >= 1");

    const double s = std::sin(grazing_angle_rad);
    const double c = std::cos(grazing_angle_rad);
    const double root = std::sqrt(std::max(0.0, relative_permittivity - c * c));

    if (pol == Polarization::Perpendicular)
        return {(s - root) / (s + root), 0.0};

    // Parallel polarization: magnitude from the textbook coefficient, sign
    // fixed so that normal incidence matches the perpendicular case (shared
    // reference direction) and grazing incidence tends to -1.
    const double rp = (relative_permittivity * s - root) / (relative_permittivity * s + root);
    return {-std::abs(rp), 0.0};
}

double fresnel_parameter(double h_m, double d1_m, double d2_m, double lambda_m)
{
    if (!(d1_m > 0.0) || !(d2_m > 0.0))
        throw std::domain_error("knife-edge distances must be positive");
    if (!(lambda_m > 0.0))
        throw std::domain_error("wavelength must be positive");
    return h_m * std::sqrt(2.0 * (d1_m + d2_m) / (lambda_m * d1_m * d2_m));
}

double knife_edge_loss_db(double nu)
{
    if (!std::isfinite(nu))
        throw std::domain_error("knife-edge parameter must be finite");
    if (nu <= -0.78)
        return 0.0;
    const double t = nu - 0.1;
    return 6.9 + 20.0 * std::log10(std::sqrt(t * t + 1.0) + t);
}

double edge_diffraction_nu(const Vec3 &edge_point, const Vec3 &tx, const Vec3 &rx,
                           const RectPlane &screen, double lambda_m)
{
    const Vec3 axis = rx - tx;
    const double link_len = axis.norm();
    if (link_len == 0.0)
        throw geometry_error("degenerate link for edge diffraction");

    // Projection of the edge point onto the direct line fixes d1/d2; clamp
    // away from the endpoints so the Fresnel parameter stays defined when
    // the screen sits beside one of the terminals.
    double t = (edge_point - tx).dot(axis) / (link_len * link_len);
    t = std::clamp(t, 1e-6, 1.0 - 1e-6);
    const Vec3 foot = tx + t * axis;
    const double h = (edge_point - foot).norm();
    const double d1 = t * link_len;
    const double d2 = link_len - d1;

    const double sign = segment_intersects_rect(tx, rx, screen) ? 1.0 : -1.0;
    return fresnel_parameter(sign * h, d1, d2, lambda_m);
}

} // namespace sdchan
