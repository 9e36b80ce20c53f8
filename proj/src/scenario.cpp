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

#include "sdchan/scenario.hpp"

#include <set>
#include <sstream>

#include <json.hpp>

namespace sdchan
{

using nlohmann::json;

// ---------------------------------------------------------------- validate

static bool inside_box(const Vec3 &p, const Vec3 &lo, const Vec3 &hi)
{
    return p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y && p.z >= lo.z && p.z <= hi.z;
}

void Scenario::validate() const
{
    if (snapshot_count < 1)
        throw config_error("snapshot_count: must be >= 1");
    if (!(hall_min.x < hall_max.x) || !(hall_min.y < hall_max.y) || !(hall_min.z < hall_max.z))
        throw config_error("hall: min must be strictly below max on every axis");
    RfConfig(rf.carrier_frequency_hz, rf.bandwidth_hz); // revalidate

    if (trps.empty())
        throw config_error("trps: at least one TRP is required");
    std::set<int> ids;
    for (std::size_t i = 0; i < trps.size(); ++i)
    {
        const auto &t = trps[i];
        if (!ids.insert(t.id).second)
            throw config_error("trps[" + std::to_string(i) + "].id: duplicate TRP id " +
                               std::to_string(t.id));
        if (!inside_box(t.position, hall_min, hall_max))
            throw config_error("trps[" + std::to_string(i) + "].position: TRP " +
                               std::to_string(t.id) + " lies outside the hall bounding box");
    }

    const Vec3 ue_end = ue.start + static_cast<double>(snapshot_count - 1) * ue.step;
    if (!inside_box(ue.start, hall_min, hall_max) || !inside_box(ue_end, hall_min, hall_max))
        throw config_error("ue: track leaves the hall bounding box");

    if (!(obstacle.width_m > 0.0) || !(obstacle.height_m > 0.0))
        throw config_error("obstacle: width_m and height_m must be positive");
    if (!(obstacle.block_loss_db > 0.0))
        throw config_error("obstacle.block_loss_db: must be positive");
    if (std::abs(obstacle.normal.norm() - 1.0) > 1e-9 || std::abs(obstacle.normal.z) > 1e-9)
        throw config_error("obstacle.normal: must be a horizontal unit vector");
    if (!inside_box(obstacle.start_base, hall_min, hall_max) ||
        !inside_box(obstacle.end_base, hall_min, hall_max))
        throw config_error("obstacle: trajectory leaves the hall bounding box");

    std::set<std::string> names;
    for (std::size_t i = 0; i < sdcs.size(); ++i)
    {
        sdcs[i].validate();
        if (!names.insert(sdcs[i].name).second)
            throw config_error("sdcs[" + std::to_string(i) + "].name: duplicate SDC name '" +
                               sdcs[i].name + "'");
        // SDCs are discrete specular or diffraction contributions
        if (sdcs[i].subpath_count != 1)
            throw config_error("sdcs[" + std::to_string(i) +
                               "].subpaths: semi-deterministic clusters carry exactly one sub-path");
    }

    random_clusters.validate();

    if (!(spatial.decorrelation_distance_m > 0.0))
        throw config_error("spatial_consistency.decorrelation_distance_m: must be positive");
    if (spatial.sinusoid_count < 1)
        throw config_error("spatial_consistency.sinusoid_count: must be >= 1");

    if (ground.enabled && ground.relative_permittivity < 1.0)
        throw config_error("ground_reflection.relative_permittivity: must be >= 1");

    if (cir.oversampling < 1)
        throw config_error("cir.oversampling: must be >= 1");
    if (cir.raised_cosine_rolloff <= 0.0 || cir.raised_cosine_rolloff > 1.0)
        throw config_error("cir.raised_cosine_rolloff: must be in (0, 1]");
    if (!(cir.fap_threshold_db > 0.0))
        throw config_error("cir.fap_threshold_db: must be positive");

    if (segmentation.length_wavelengths <= 0.0)
        throw config_error("segmentation.length_wavelengths: must be positive");
    if (segmentation.overlap_fraction < 0.0 || segmentation.overlap_fraction >= 1.0)
        throw config_error("segmentation.overlap_fraction: must be in [0, 1)");
}

Track Scenario::make_track() const
{
    const double seg_len_m = segmentation.length_wavelengths * rf.wavelength();
    return Track::make_linear(ue.start, ue.step, snapshot_count, seg_len_m,
                              segmentation.overlap_fraction);
}

const TrpConfig &Scenario::trp_by_id(int id) const
{
    for (const auto &t : trps)
        if (t.id == id)
            return t;
    throw config_error("unknown TRP id " + std::to_string(id));
}

// ------------------------------------------------------------------- parse

namespace
{

const json &require(const json &obj, const char *key, const std::string &path)
{
    if (!obj.is_object())
        throw config_error(path + ": expected an object");
    auto it = obj.find(key);
    if (it == obj.end())
        throw config_error(path + "." + key + ": missing required field");
    return *it;
}

double get_number(const json &obj, const char *key, const std::string &path)
{
    const json &v = require(obj, key, path);
    if (!v.is_number())
        throw config_error(path + "." + key + ": expected a number");
    return v.get<double>();
}

double get_number_or(const json &obj, const char *key, const std::string &path, double fallback)
{
    if (!obj.is_object() || !obj.contains(key))
        return fallback;
    return get_number(obj, key, path);
}

int get_int(const json &obj, const char *key, const std::string &path)
{
    const json &v = require(obj, key, path);
    if (!v.is_number_integer())
        throw config_error(path + "." + key + ": expected an integer");
    return v.get<int>();
}

int get_int_or(const json &obj, const char *key, const std::string &path, int fallback)
{
    if (!obj.is_object() || !obj.contains(key))
        return fallback;
    return get_int(obj, key, path);
}

bool get_bool_or(const json &obj, const char *key, const std::string &path, bool fallback)
{
    if (!obj.is_object() || !obj.contains(key))
        return fallback;
    const json &v = obj.at(key);
    if (!v.is_boolean())
        throw config_error(path + "." + key + ": expected a boolean");
    return v.get<bool>();
}

std::string get_string(const json &obj, const char *key, const std::string &path)
{
    const json &v = require(obj, key, path);
    if (!v.is_string())
        throw config_error(path + "." + key + ": expected a string");
    return v.get<std::string>();
}

Vec3 as_vec3(const json &v, const std::string &path)
{
    if (!v.is_array() || v.size() != 3 || !v[0].is_number() || !v[1].is_number() ||
        !v[2].is_number())
        throw config_error(path + ": expected an array of three numbers");
    return {v[0].get<double>(), v[1].get<double>(), v[2].get<double>()};
}

Vec3 get_vec3(const json &obj, const char *key, const std::string &path)
{
    return as_vec3(require(obj, key, path), path + "." + key);
}

std::map<int, double> get_table(const json &obj, const char *key, const std::string &path)
{
    std::map<int, double> table;
    if (!obj.is_object() || !obj.contains(key))
        return table;
    const json &t = obj.at(key);
    if (!t.is_object())
        throw config_error(path + "." + key + ": expected an object keyed by cluster count");
    for (auto it = t.begin(); it != t.end(); ++it)
    {
        try
        {
            table[std::stoi(it.key())] = it.value().get<double>();
        }
        catch (const std::exception &)
        {
            throw config_error(path + "." + key + "." + it.key() + ": expected integer key and numeric value");
        }
    }
    return table;
}

RectPlane parse_plane(const json &v, const std::string &path)
{
    const Vec3 center = get_vec3(v, "center", path);
    const Vec3 normal = get_vec3(v, "normal", path);
    const Vec3 axis_u = get_vec3(v, "axis_u", path);
    const Vec3 axis_v = get_vec3(v, "axis_v", path);
    const bool infinite = get_bool_or(v, "infinite", path, false);
    try
    {
        if (infinite)
            return RectPlane::make_infinite(center, normal, axis_u, axis_v);
        return RectPlane::make(center, normal, axis_u, get_number(v, "half_u", path), axis_v,
                               get_number(v, "half_v", path));
    }
    catch (const std::domain_error &e)
    {
        throw config_error(path + ": " + e.what());
    }
}

ClusterSpec parse_sdc(const json &v, const std::string &path)
{
    ClusterSpec spec;
    spec.name = get_string(v, "name", path);
    spec.extra_loss_db = get_number_or(v, "extra_loss_db", path, 0.0);
    spec.subpath_count = get_int_or(v, "subpaths", path, 1);

    const std::string kind = get_string(v, "kind", path);
    if (kind == "fixed")
        spec.payload = FixedPoint{get_vec3(v, "position", path)};
    else if (kind == "specular_reflector")
        spec.payload = ReflectorPlane{parse_plane(require(v, "plane", path), path + ".plane")};
    else if (kind == "relative")
    {
        const std::string anchor = get_string(v, "anchor", path);
        if (anchor != "ue" && anchor != "trp")
            throw config_error(path + ".anchor: expected 'ue' or 'trp'");
        spec.payload = RelativeOffset{anchor == "ue" ? RelativeAnchor::Ue : RelativeAnchor::Trp,
                                      get_vec3(v, "offset", path)};
    }
    else if (kind == "diffraction_edge")
        spec.payload = EdgePoint{get_number(v, "edge_u", path), get_number(v, "edge_z", path)};
    else
        throw config_error(path + ".kind: unknown cluster kind '" + kind + "'");
    return spec;
}

json plane_to_json(const RectPlane &p)
{
    json v;
    v["center"] = {p.center.x, p.center.y, p.center.z};
    v["normal"] = {p.normal.x, p.normal.y, p.normal.z};
    v["axis_u"] = {p.axis_u.x, p.axis_u.y, p.axis_u.z};
    v["axis_v"] = {p.axis_v.x, p.axis_v.y, p.axis_v.z};
    if (p.infinite_extent)
        v["infinite"] = true;
    else
    {
        v["half_u"] = p.half_u;
        v["half_v"] = p.half_v;
    }
    return v;
}

} // namespace

Scenario parse_scenario(const std::string &json_text)
{
    json root;
    try
    {
        root = json::parse(json_text);
    }
    catch (const json::parse_error &e)
    {
        throw config_error(std::string("scenario: invalid JSON: ") + e.what());
    }
    if (!root.is_object())
        throw config_error("scenario: top level must be an object");

    Scenario sc;

    const json &rf = require(root, "rf", "scenario");
    try
    {
        sc.rf = RfConfig(get_number(rf, "carrier_frequency_hz", "rf"),
                         get_number(rf, "bandwidth_hz", "rf"));
    }
    catch (const config_error &e)
    {
        throw config_error(std::string("rf: ") + e.what());
    }

    const json &hall = require(root, "hall", "scenario");
    sc.hall_min = get_vec3(hall, "min", "hall");
    sc.hall_max = get_vec3(hall, "max", "hall");

    const json &trps = require(root, "trps", "scenario");
    if (!trps.is_array() || trps.empty())
        throw config_error("trps: expected a non-empty array");
    for (std::size_t i = 0; i < trps.size(); ++i)
    {
        const std::string path = "trps[" + std::to_string(i) + "]";
        sc.trps.push_back(
            {get_int(trps[i], "id", path), get_vec3(trps[i], "position", path)});
    }

    const json &ue = require(root, "ue", "scenario");
    sc.ue.start = get_vec3(ue, "start", "ue");
    sc.ue.step = get_vec3(ue, "step", "ue");

    if (root.contains("segmentation"))
    {
        const json &seg = root.at("segmentation");
        sc.segmentation.length_wavelengths =
            get_number_or(seg, "length_wavelengths", "segmentation", 20.0);
        sc.segmentation.overlap_fraction =
            get_number_or(seg, "overlap_fraction", "segmentation", 0.25);
    }

    const json &obs = require(root, "obstacle", "scenario");
    sc.obstacle.width_m = get_number(obs, "width_m", "obstacle");
    sc.obstacle.height_m = get_number(obs, "height_m", "obstacle");
    sc.obstacle.normal = get_vec3(obs, "normal", "obstacle");
    sc.obstacle.start_base = get_vec3(obs, "start_base", "obstacle");
    sc.obstacle.end_base = get_vec3(obs, "end_base", "obstacle");
    sc.obstacle.block_loss_db = get_number_or(obs, "block_loss_db", "obstacle", 30.0);
    sc.obstacle.reflective_front = get_bool_or(obs, "reflective_front", "obstacle", true);

    const json &sdcs = require(root, "sdcs", "scenario");
    if (!sdcs.is_array())
        throw config_error("sdcs: expected an array");
    for (std::size_t i = 0; i < sdcs.size(); ++i)
        sc.sdcs.push_back(parse_sdc(sdcs[i], "sdcs[" + std::to_string(i) + "]"));

    const json &rc = require(root, "random_clusters", "scenario");
    sc.random_clusters.cluster_count = get_int(rc, "count", "random_clusters");
    sc.random_clusters.delay_spread_s = get_number(rc, "delay_spread_s", "random_clusters");
    sc.random_clusters.delay_scaling = get_number(rc, "delay_scaling", "random_clusters");
    sc.random_clusters.shadowing_std_db =
        get_number_or(rc, "shadowing_std_db", "random_clusters", 0.0);
    sc.random_clusters.k_factor_db = get_number(rc, "k_factor_db", "random_clusters");
    sc.random_clusters.asd_deg = get_number(rc, "asd_deg", "random_clusters");
    sc.random_clusters.asa_deg = get_number(rc, "asa_deg", "random_clusters");
    sc.random_clusters.zsd_deg = get_number(rc, "zsd_deg", "random_clusters");
    sc.random_clusters.zsa_deg = get_number(rc, "zsa_deg", "random_clusters");
    sc.random_clusters.subpaths_per_cluster =
        get_int_or(rc, "subpaths_per_cluster", "random_clusters", 20);
    sc.random_clusters.c_phi_table = get_table(rc, "c_phi_table", "random_clusters");
    sc.random_clusters.c_theta_table = get_table(rc, "c_theta_table", "random_clusters");

    if (root.contains("spatial_consistency"))
    {
        const json &sp = root.at("spatial_consistency");
        sc.spatial.decorrelation_distance_m =
            get_number(sp, "decorrelation_distance_m", "spatial_consistency");
        sc.spatial.sinusoid_count = get_int_or(sp, "sinusoid_count", "spatial_consistency", 30);
    }

    if (root.contains("ground_reflection"))
    {
        const json &gr = root.at("ground_reflection");
        sc.ground.enabled = get_bool_or(gr, "enabled", "ground_reflection", true);
        sc.ground.relative_permittivity =
            get_number_or(gr, "relative_permittivity", "ground_reflection", 5.0);
        const std::string pol =
            gr.contains("polarization") ? get_string(gr, "polarization", "ground_reflection")
                                        : "perpendicular";
        if (pol == "perpendicular")
            sc.ground.polarization = Polarization::Perpendicular;
        else if (pol == "parallel")
            sc.ground.polarization = Polarization::Parallel;
        else
            throw config_error("ground_reflection.polarization: expected 'perpendicular' or 'parallel'");
    }

    if (root.contains("cir"))
    {
        const json &cir = root.at("cir");
        sc.cir.oversampling = get_int_or(cir, "oversampling", "cir", 16);
        const std::string pulse =
            cir.contains("pulse") ? get_string(cir, "pulse", "cir") : "sinc";
        if (pulse == "sinc")
            sc.cir.pulse = PulseShape::Sinc;
        else if (pulse == "raised_cosine")
            sc.cir.pulse = PulseShape::RaisedCosine;
        else
            throw config_error("cir.pulse: expected 'sinc' or 'raised_cosine'");
        sc.cir.raised_cosine_rolloff = get_number_or(cir, "raised_cosine_rolloff", "cir", 0.25);
        sc.cir.fap_threshold_db = get_number_or(cir, "fap_threshold_db", "cir", 25.0);
    }

    const json &seed = require(root, "seed", "scenario");
    if (!seed.is_number_unsigned() && !seed.is_number_integer())
        throw config_error("seed: expected a non-negative integer");
    sc.seed = seed.get<std::uint64_t>();
    sc.snapshot_count = get_int(root, "snapshot_count", "scenario");

    const int span = std::max(1, sc.snapshot_count);
    sc.obstacle.snapshot_span = span;

    sc.validate();
    return sc;
}

std::string serialize_scenario(const Scenario &sc)
{
    json root;
    root["rf"] = {{"carrier_frequency_hz", sc.rf.carrier_frequency_hz},
                  {"bandwidth_hz", sc.rf.bandwidth_hz}};
    root["hall"] = {{"min", {sc.hall_min.x, sc.hall_min.y, sc.hall_min.z}},
                    {"max", {sc.hall_max.x, sc.hall_max.y, sc.hall_max.z}}};
    root["trps"] = json::array();
    for (const auto &t : sc.trps)
        root["trps"].push_back(
            {{"id", t.id}, {"position", {t.position.x, t.position.y, t.position.z}}});
    root["ue"] = {{"start", {sc.ue.start.x, sc.ue.start.y, sc.ue.start.z}},
                  {"step", {sc.ue.step.x, sc.ue.step.y, sc.ue.step.z}}};
    root["segmentation"] = {{"length_wavelengths", sc.segmentation.length_wavelengths},
                            {"overlap_fraction", sc.segmentation.overlap_fraction}};
    root["obstacle"] = {
        {"width_m", sc.obstacle.width_m},
        {"height_m", sc.obstacle.height_m},
        {"normal", {sc.obstacle.normal.x, sc.obstacle.normal.y, sc.obstacle.normal.z}},
        {"start_base",
         {sc.obstacle.start_base.x, sc.obstacle.start_base.y, sc.obstacle.start_base.z}},
        {"end_base", {sc.obstacle.end_base.x, sc.obstacle.end_base.y, sc.obstacle.end_base.z}},
        {"block_loss_db", sc.obstacle.block_loss_db},
        {"reflective_front", sc.obstacle.reflective_front}};

    root["sdcs"] = json::array();
    for (const auto &s : sc.sdcs)
    {
        json v;
        v["name"] = s.name;
        v["extra_loss_db"] = s.extra_loss_db;
        v["subpaths"] = s.subpath_count;
        switch (s.kind())
        {
        case ClusterKind::Fixed:
        {
            const auto &p = std::get<FixedPoint>(s.payload);
            v["kind"] = "fixed";
            v["position"] = {p.position.x, p.position.y, p.position.z};
            break;
        }
        case ClusterKind::SpecularReflector:
            v["kind"] = "specular_reflector";
            v["plane"] = plane_to_json(std::get<ReflectorPlane>(s.payload).plane);
            break;
        case ClusterKind::Relative:
        {
            const auto &p = std::get<RelativeOffset>(s.payload);
            v["kind"] = "relative";
            v["anchor"] = p.anchor == RelativeAnchor::Ue ? "ue" : "trp";
            v["offset"] = {p.offset.x, p.offset.y, p.offset.z};
            break;
        }
        default:
        {
            const auto &p = std::get<EdgePoint>(s.payload);
            v["kind"] = "diffraction_edge";
            v["edge_u"] = p.u;
            v["edge_z"] = p.z;
            break;
        }
        }
        root["sdcs"].push_back(v);
    }

    json cphi = json::object(), ctheta = json::object();
    for (const auto &[k, v] : sc.random_clusters.c_phi_table)
        cphi[std::to_string(k)] = v;
    for (const auto &[k, v] : sc.random_clusters.c_theta_table)
        ctheta[std::to_string(k)] = v;
    root["random_clusters"] = {{"count", sc.random_clusters.cluster_count},
                               {"delay_spread_s", sc.random_clusters.delay_spread_s},
                               {"delay_scaling", sc.random_clusters.delay_scaling},
                               {"shadowing_std_db", sc.random_clusters.shadowing_std_db},
                               {"k_factor_db", sc.random_clusters.k_factor_db},
                               {"asd_deg", sc.random_clusters.asd_deg},
                               {"asa_deg", sc.random_clusters.asa_deg},
                               {"zsd_deg", sc.random_clusters.zsd_deg},
                               {"zsa_deg", sc.random_clusters.zsa_deg},
                               {"subpaths_per_cluster", sc.random_clusters.subpaths_per_cluster},
                               {"c_phi_table", cphi},
                               {"c_theta_table", ctheta}};
    root["spatial_consistency"] = {
        {"decorrelation_distance_m", sc.spatial.decorrelation_distance_m},
        {"sinusoid_count", sc.spatial.sinusoid_count}};
    root["ground_reflection"] = {
        {"enabled", sc.ground.enabled},
        {"relative_permittivity", sc.ground.relative_permittivity},
        {"polarization",
         sc.ground.polarization == Polarization::Perpendicular ? "perpendicular" : "parallel"}};
    root["cir"] = {{"oversampling", sc.cir.oversampling},
                   {"pulse", sc.cir.pulse == PulseShape::Sinc ? "sinc" : "raised_cosine"},
                   {"raised_cosine_rolloff", sc.cir.raised_cosine_rolloff},
                   {"fap_threshold_db", sc.cir.fap_threshold_db}};
    root["seed"] = sc.seed;
    root["snapshot_count"] = sc.snapshot_count;
    return root.dump(2) + "\n";
}

std::uint64_t scenario_hash(const Scenario &sc)
{
    const std::string text = serialize_scenario(sc);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text)
    {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

Scenario reference_scenario()
{
    Scenario sc;
    sc.rf = RfConfig(3.75e9, 100e6);
    sc.hall_min = {0.0, 0.0, 0.0};
    sc.hall_max = {30.0, 45.0, 10.0};

    // TRP coordinates are placeholders chosen for dilution of precision;
    // heights vary so the constellation is not coplanar. TRP3 is placed so
    // that every reflector detour on its link exceeds the 10 ns pulse
    // merge window at 100 MHz.
    sc.trps = {{1, {3.0, 3.0, 8.0}},  {2, {27.0, 3.0, 7.5}}, {3, {8.0, 38.0, 4.0}},
               {4, {28.0, 43.0, 7.5}}, {5, {3.0, 22.0, 8.5}}, {6, {27.0, 22.0, 9.0}}};

    sc.ue.start = {20.0, 30.0, 1.5};
    sc.ue.step = {0.0, 0.0, 0.0};

    // The screen crosses the TRP3 line of sight around snapshots 684-789.
    sc.obstacle.width_m = 2.0;
    sc.obstacle.height_m = 4.0;
    sc.obstacle.normal = {0.0, 1.0, 0.0};
    sc.obstacle.start_base = {1.5, 33.0, 0.0};
    sc.obstacle.end_base = {20.5, 33.0, 0.0};
    sc.obstacle.block_loss_db = 30.0;
    sc.obstacle.reflective_front = true;

    const double wall_half_z = 5.0;
    auto wall = [&](const std::string &name, const Vec3 &center, const Vec3 &normal,
                    const Vec3 &axis_u, double half_u) {
        ClusterSpec spec;
        spec.name = name;
        spec.extra_loss_db = 1.5;
        spec.payload = ReflectorPlane{
            RectPlane::make(center, normal, axis_u, half_u, Vec3{0, 0, 1}, wall_half_z)};
        return spec;
    };
    sc.sdcs.push_back(wall("wall-south", {15.0, 0.0, 5.0}, {0, 1, 0}, {1, 0, 0}, 15.0));
    sc.sdcs.push_back(wall("wall-east", {30.0, 22.5, 5.0}, {-1, 0, 0}, {0, 1, 0}, 22.5));
    sc.sdcs.push_back(wall("wall-north", {15.0, 45.0, 5.0}, {0, -1, 0}, {1, 0, 0}, 15.0));
    sc.sdcs.push_back(wall("wall-west", {0.0, 22.5, 5.0}, {1, 0, 0}, {0, 1, 0}, 22.5));

    ClusterSpec ceiling;
    ceiling.name = "ceiling";
    ceiling.extra_loss_db = 14.0;
    ceiling.payload = ReflectorPlane{RectPlane::make({15.0, 22.5, 10.0}, {0, 0, -1}, {1, 0, 0},
                                                     15.0, {0, 1, 0}, 22.5)};
    sc.sdcs.push_back(ceiling);

    // Six diffraction SDCs on the obstacle boundary: the four corners plus
    // the midpoints of the two vertical edges.
    auto edge = [&](const std::string &name, double u, double z) {
        ClusterSpec spec;
        spec.name = name;
        spec.extra_loss_db = 2.5;
        spec.payload = EdgePoint{u, z};
        return spec;
    };
    sc.sdcs.push_back(edge("edge-bottom-left", -1.0, 0.0));
    sc.sdcs.push_back(edge("edge-mid-left", -1.0, 2.0));
    sc.sdcs.push_back(edge("edge-top-left", -1.0, 4.0));
    sc.sdcs.push_back(edge("edge-top-right", 1.0, 4.0));
    sc.sdcs.push_back(edge("edge-mid-right", 1.0, 2.0));
    sc.sdcs.push_back(edge("edge-bottom-right", 1.0, 0.0));

    // Statistical block in the style of the indoor-factory LOS tables.
    sc.random_clusters.cluster_count = 25;
    sc.random_clusters.delay_spread_s = 44e-9;
    sc.random_clusters.delay_scaling = 2.7;
    sc.random_clusters.shadowing_std_db = 4.0;
    sc.random_clusters.k_factor_db = 10.0;
    sc.random_clusters.asd_deg = 40.0;
    sc.random_clusters.asa_deg = 50.0;
    sc.random_clusters.zsd_deg = 6.0;
    sc.random_clusters.zsa_deg = 9.0;
    sc.random_clusters.subpaths_per_cluster = 20;
    sc.random_clusters.c_phi_table = {{25, 1.358}};
    sc.random_clusters.c_theta_table = {{25, 1.282}};

    sc.spatial.decorrelation_distance_m = 10.0;
    sc.spatial.sinusoid_count = 30;

    // Parallel (vertical) polarization: near the Brewster angle the ground
    // bounce stays well below the direct path, so the FAP reference is
    // LOS-dominated.
    sc.ground.enabled = true;
    sc.ground.relative_permittivity = 5.0;
    sc.ground.polarization = Polarization::Parallel;

    sc.cir.oversampling = 16;
    sc.cir.pulse = PulseShape::Sinc;
    sc.cir.raised_cosine_rolloff = 0.25;
    sc.cir.fap_threshold_db = 25.0;

    sc.seed = 8;
    sc.snapshot_count = 1000;
    sc.obstacle.snapshot_span = sc.snapshot_count;

    sc.validate();
    return sc;
}

} // namespace sdchan
