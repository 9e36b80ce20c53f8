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

#ifndef SDCHAN_PROPAGATION_HPP
#define SDCHAN_PROPAGATION_HPP

#include <complex>
#include <optional>

#include "sdchan/geometry.hpp"

namespace sdchan
{

/// RF parameters of a link. Wavelength is derived from the carrier.
struct RfConfig
{
    double carrier_frequency_hz{0.0};
    double bandwidth_hz{0.0};

    RfConfig() = default;
    RfConfig(double f_c, double bandwidth);

    double wavelength() const { return speed_of_light / carrier_frequency_hz; }
};

enum class Polarization
{
    Perpendicular,
    Parallel
};

/// Moving rectangular screen. The pose interpolates linearly between the
/// start and end base-center positions over the snapshot span; the screen
/// stays vertical with a fixed horizontal normal.
struct ObstacleState
{
    double width_m{0.0};
    double height_m{0.0};
    Vec3 normal;          // horizontal unit normal of the screen plane
    Vec3 start_base;      // base-center position at snapshot 0
    Vec3 end_base;        // base-center position at the last snapshot
    int snapshot_span{1}; // number of snapshots the trajectory covers
    double block_loss_db{30.0};
    bool reflective_front{true}; // face along +normal is the metal side

    Vec3 base_at(int snapshot) const;
    Vec3 width_axis() const { return normal.cross(Vec3{0.0, 0.0, 1.0}).normalized(); }
    RectPlane face_at(int snapshot) const;

    /// World position of a point given in the screen frame: u along the
    /// width axis from the base center, z upward from the base.
    Vec3 local_point_at(int snapshot, double u, double z) const;
};

/// Free-space path loss 20*log10(4*pi*d*f_c/c0). d must be positive.
double fspl_db(double distance_m, double carrier_frequency_hz);

/// Fresnel reflection coefficient of a lossless dielectric half-space for a
/// grazing-angle ray (angle measured from the surface, in (0, pi/2]).
/// Both polarizations approach -1 at grazing incidence and agree at normal
/// incidence; the parallel coefficient carries the sign convention in which
/// the reference field directions coincide at normal incidence.
std::complex<double> fresnel_reflection(double grazing_angle_rad, double relative_permittivity,
                                        Polarization pol);

/// Dimensionless knife-edge diffraction parameter
/// nu = h * sqrt(2 (d1+d2) / (lambda d1 d2)); h is signed, negative means
/// clearance.
double fresnel_parameter(double h_m, double d1_m, double d2_m, double lambda_m);

/// Single knife-edge diffraction loss: 0 dB for nu <= -0.78, otherwise
/// 6.9 + 20*log10(sqrt((nu-0.1)^2+1) + nu - 0.1).
double knife_edge_loss_db(double nu);

/// Knife-edge parameter for an edge point between tx and rx: h is the
/// perpendicular distance from the edge to the straight tx-rx line, signed
/// positive when the direct segment is obstructed by the screen; d1/d2 are
/// measured to the projection of the edge point onto the line.
double edge_diffraction_nu(const Vec3 &edge_point, const Vec3 &tx, const Vec3 &rx,
                           const RectPlane &screen, double lambda_m);

} // namespace sdchan

#endif
