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

#ifndef SDCHAN_GEOMETRY_HPP
#define SDCHAN_GEOMETRY_HPP

#include <cmath>
#include <optional>

#include "sdchan/common.hpp"

namespace sdchan
{

/// 3D vector, components in meters.
struct Vec3
{
    double x{0.0};
    double y{0.0};
    double z{0.0};

    constexpr Vec3() = default;
    constexpr Vec3(double px, double py, double pz) : x(px), y(py), z(pz) {}

    constexpr Vec3 operator+(const Vec3 &r) const { return {x + r.x, y + r.y, z + r.z}; }
    constexpr Vec3 operator-(const Vec3 &r) const { return {x - r.x, y - r.y, z - r.z}; }
    constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    constexpr Vec3 operator-() const { return {-x, -y, -z}; }
    friend constexpr Vec3 operator*(double s, const Vec3 &v) { return v * s; }

    Vec3 &operator+=(const Vec3 &r)
    {
        x += r.x, y += r.y, z += r.z;
        return *this;
    }
    Vec3 &operator-=(const Vec3 &r)
    {
        x -= r.x, y -= r.y, z -= r.z;
        return *this;
    }

    constexpr double dot(const Vec3 &r) const { return x * r.x + y * r.y + z * r.z; }
    constexpr Vec3 cross(const Vec3 &r) const
    {
        return {y * r.z - z * r.y, z * r.x - x * r.z, x * r.y - y * r.x};
    }
    double norm() const { return std::sqrt(x * x + y * y + z * z); }
    constexpr double norm_sq() const { return x * x + y * y + z * z; }

    // Throws geometry_error for vectors shorter than eps.
    Vec3 normalized(double eps = 1e-300) const;
};

/// Geographic direction: azimuth in (-pi, pi], elevation in [-pi/2, pi/2].
/// The constructor wraps the azimuth and rejects out-of-range elevations.
struct DirectionAngles
{
    double azimuth{0.0};
    double elevation{0.0};

    DirectionAngles() = default;
    DirectionAngles(double az, double el);
};

/// Finite rectangle embedded in a plane, or the whole plane when
/// infinite_extent is set. normal, axis_u, axis_v are mutually orthonormal
/// (checked to 1e-9 on construction).
struct RectPlane
{
    Vec3 center;
    Vec3 normal;
    Vec3 axis_u;
    Vec3 axis_v;
    double half_u{0.0};
    double half_v{0.0};
    bool infinite_extent{false};

    static RectPlane make(const Vec3 &center, const Vec3 &normal, const Vec3 &axis_u,
                          double half_u, const Vec3 &axis_v, double half_v);
    static RectPlane make_infinite(const Vec3 &center, const Vec3 &normal, const Vec3 &axis_u,
                                   const Vec3 &axis_v);

    /// Signed distance of p from the plane along the normal.
    double side(const Vec3 &p) const { return (p - center).dot(normal); }

    /// True when in-plane coordinates (u, v) fall within the extent.
    bool contains(double u, double v) const
    {
        return infinite_extent || (std::abs(u) <= half_u && std::abs(v) <= half_v);
    }
};

/// (cos el * cos az, cos el * sin az, sin el); unit norm.
Vec3 angles_to_unit_vector(const DirectionAngles &d);

/// Inverse of angles_to_unit_vector up to scale. Poles map to azimuth 0.
/// Throws std::domain_error for the zero vector.
DirectionAngles vector_to_angles(const Vec3 &v);

/// Reflection of p across the infinite extension of the plane.
Vec3 mirror_point(const Vec3 &p, const RectPlane &plane);

/// Image-method reflection point on the plane, or nullopt when it falls
/// outside the rectangle extent. tx and rx must lie strictly on the same
/// side; points on the plane raise geometry_error, opposite sides raise
/// std::domain_error.
std::optional<Vec3> specular_reflection_point(const Vec3 &tx, const Vec3 &rx,
                                              const RectPlane &plane);

/// True iff the open segment p1-p2 crosses the plane at a point inside the
/// rectangle extent. Coplanar segments and endpoint touches do not count.
bool segment_intersects_rect(const Vec3 &p1, const Vec3 &p2, const RectPlane &rect);

/// Perpendicular distance from point p to the infinite line through a and b.
double point_line_distance(const Vec3 &p, const Vec3 &a, const Vec3 &b);

/// Angle between two nonzero vectors, numerically robust near 0 and pi.
double angle_between(const Vec3 &a, const Vec3 &b);

} // namespace sdchan

#endif
