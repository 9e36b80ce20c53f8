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

#include "sdchan/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace sdchan
{

Vec3 Vec3::normalized(double eps) const
{
    const double n = norm();
    if (n <= eps)
        throw geometry_error("cannot normalize zero-length vector");
    return {x / n, y / n, z / n};
}

static double wrap_azimuth(double az)
{
    // remainder() returns a value in [-pi, pi]; fold -pi onto +pi so the
    // range is the half-open (-pi, pi].
    double a = std::remainder(az, 2.0 * pi);
    if (a <= -pi)
        a = pi;
    return a;
}

DirectionAngles::DirectionAngles(double az, double el)
{
    if (!std::isfinite(az) || !std::isfinite(el))
        throw std::domain_error("direction angles must be finite");
    if (el < -pi / 2.0 - 1e-12 || el > pi / 2.0 + 1e-12)
        throw std::domain_error("elevation outside [-pi/2, pi/2]");
    azimuth = wrap_azimuth(az);
    elevation = std::clamp(el, -pi / 2.0, pi / 2.0);
}

static void check_orthonormal(const Vec3 &n, const Vec3 &u, const Vec3 &v)
{
    constexpr double tol = 1e-9;
    if (std::abs(n.norm() - 1.0) > tol || std::abs(u.norm() - 1.0) > tol ||
        std::abs(v.norm() - 1.0) > tol)
        throw std::domain_error("plane axes must be unit length");
    if (std::abs(n.dot(u)) > tol || std::abs(n.dot(v)) > tol || std::abs(u.dot(v)) > tol)
        throw std::domain_error("plane axes must be mutually orthogonal");
}

RectPlane RectPlane::make(const Vec3 &center, const Vec3 &normal, const Vec3 &axis_u,
                          double half_u, const Vec3 &axis_v, double half_v)
{
    check_orthonormal(normal, axis_u, axis_v);
    if (!(half_u > 0.0) || !(half_v > 0.0))
        throw std::domain_error("rectangle half-extents must be positive");
    RectPlane r;
    r.center = center;
    r.normal = normal;
    r.axis_u = axis_u;
    r.axis_v = axis_v;
    r.half_u = half_u;
    r.half_v = half_v;
    r.infinite_extent = false;
    return r;
}

RectPlane RectPlane::make_infinite(const Vec3 &center, const Vec3 &normal, const Vec3 &axis_u,
                                   const Vec3 &axis_v)
{
    check_orthonormal(normal, axis_u, axis_v);
    RectPlane r;
    r.center = center;
    r.normal = normal;
    r.axis_u = axis_u;
    r.axis_v = axis_v;
    r.infinite_extent = true;
    return r;
}

Vec3 angles_to_unit_vector(const DirectionAngles &d)
{
    const double ce = std::cos(d.elevation);
    return {ce * std::cos(d.azimuth), ce * std::sin(d.azimuth), std::sin(d.elevation)};
}

DirectionAngles vector_to_angles(const Vec3 &v)
{
    const double n = v.norm();
    if (n == 0.0)
        throw std::domain_error("cannot derive direction angles from the zero vector");
    const double hxy = std::hypot(v.x, v.y);
    DirectionAngles d;
    d.azimuth = (hxy == 0.0) ? 0.0 : std::atan2(v.y, v.x); // poles pinned to azimuth 0
    if (d.azimuth <= -pi)
        d.azimuth = pi;
    d.elevation = std::atan2(v.z, hxy);
    return d;
}

Vec3 mirror_point(const Vec3 &p, const RectPlane &plane)
{
    const double s = plane.side(p);
    return p - 2.0 * s * plane.normal;
}

std::optional<Vec3> specular_reflection_point(const Vec3 &tx, const Vec3 &rx,
                                              const RectPlane &plane)
{
    constexpr double on_plane_tol = 1e-12;
    const double s_tx = plane.side(tx);
    const double s_rx = plane.side(rx);
    if (std::abs(s_tx) < on_plane_tol || std::abs(s_rx) < on_plane_tol)
        throw geometry_error("specular reflection endpoint lies on the plane");
    if (s_tx * s_rx < 0.0)
        throw std::domain_error("specular reflection endpoints on opposite sides of the plane");

    // Image construction: mirror tx, the straight image-rx segment crosses
    // the plane at the reflection point.
    const double t = s_tx / (s_tx + s_rx); // in (0, 1)
    const Vec3 image = mirror_point(tx, plane);
    const Vec3 q = image + t * (rx - image);

    const Vec3 rel = q - plane.center;
    if (!plane.contains(rel.dot(plane.axis_u), rel.dot(plane.axis_v)))
        return std::nullopt;
    return q;
}

bool segment_intersects_rect(const Vec3 &p1, const Vec3 &p2, const RectPlane &rect)
{
    const double s1 = rect.side(p1);
    const double s2 = rect.side(p2);
    // Strict sign change: coplanar segments and endpoint touches are
    // non-blocking by convention.
    if (!((s1 > 0.0 && s2 < 0.0) || (s1 < 0.0 && s2 > 0.0)))
        return false;
    const double t = s1 / (s1 - s2);
    const Vec3 q = p1 + t * (p2 - p1);
    const Vec3 rel = q - rect.center;
    return rect.contains(rel.dot(rect.axis_u), rel.dot(rect.axis_v));
}

double point_line_distance(const Vec3 &p, const Vec3 &a, const Vec3 &b)
{
    const Vec3 d = b - a;
    const double len = d.norm();
    if (len == 0.0)
        throw geometry_error("degenerate line");
    return (p - a).cross(d).norm() / len;
}

double angle_between(const Vec3 &a, const Vec3 &b)
{
    return std::atan2(a.cross(b).norm(), a.dot(b));
}

} // namespace sdchan
