// SPDX-License-Identifier: Apache-2.0
//
// rdars-sim: link-level Monte-Carlo simulator for RIS, active RIS and RDARS uplinks
// Copyright (C) 2026 The rdars-sim authors
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

#include "rdars/config.hpp"

#include "rdars/errors.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <fstream>
#include <initializer_list>
#include <sstream>

namespace rdars {

using nlohmann::json;

std::string_view to_string(Figure figure)
{
    switch (figure)
    {
    case Figure::Cdf:
        return "cdf";
    case Figure::EeVsN:
        return "ee_vs_n";
    case Figure::EeVsXrs:
        return "ee_vs_xrs";
    case Figure::EeVsUe:
        return "ee_vs_ue";
    }
    return "?";
}

Figure figure_from_string(std::string_view name)
{
    for (auto f : {Figure::Cdf, Figure::EeVsN, Figure::EeVsXrs, Figure::EeVsUe})
        if (to_string(f) == name)
            return f;
    throw ValidationError("unknown figure '" + std::string(name) + "' (expected cdf, ee_vs_n, ee_vs_xrs or ee_vs_ue)");
}

std::size_t default_n_elements(Figure figure)
{
    return figure == Figure::EeVsXrs || figure == Figure::EeVsUe ? 256 : 1024;
}

SweepSpec default_sweep(Figure figure)
{
    switch (figure)
    {
    case Figure::Cdf:
        return {};
    case Figure::EeVsN:
        return {SweepVariable::NumElements, {16, 32, 64, 128, 256, 512, 1024, 2048}};
    case Figure::EeVsXrs:
        return {SweepVariable::RsHorizontalX, {20, 40, 60, 80, 100, 120, 140, 160, 180}};
    case Figure::EeVsUe:
        return {SweepVariable::BsUeDistance, {50, 100, 150, 200, 250, 300, 350, 400}};
    }
    return {};
}

namespace {

void check_keys(const json &obj, std::initializer_list<std::string_view> allowed, const std::string &context)
{
    if (!obj.is_object())
        throw ParseError(context + ": expected an object");
    for (const auto &item : obj.items())
        if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end())
            throw ParseError(context + ": unknown key '" + item.key() + "'");
}

std::string field_path(const std::string &context, std::string_view key)
{
    return context.empty() ? std::string(key) : context + "." + std::string(key);
}

template <typename T>
void read(const json &obj, std::string_view key, T &out, const std::string &context)
{
    const auto it = obj.find(key);
    if (it == obj.end() || it->is_null())
        return;
    try
    {
        out = it->template get<T>();
    }
    catch (const json::exception &e)
    {
        throw ParseError(field_path(context, key) + ": " + e.what());
    }
}

double read_number(const json &obj, std::string_view key, double fallback, const std::string &context)
{
    const auto it = obj.find(key);
    if (it == obj.end() || it->is_null())
        return fallback;
    if (!it->is_number())
        throw ParseError(field_path(context, key) + ": expected a number");
    return it->get<double>();
}

std::size_t read_count(const json &obj, std::string_view key, std::size_t fallback, const std::string &context)
{
    const auto it = obj.find(key);
    if (it == obj.end() || it->is_null())
        return fallback;
    if (!it->is_number_integer() || it->get<long long>() < 0)
        throw ParseError(field_path(context, key) + ": expected a non-negative integer");
    return it->get<std::size_t>();
}

Position3D read_position(const json &obj, std::string_view key, Position3D fallback, const std::string &context)
{
    const auto it = obj.find(key);
    if (it == obj.end() || it->is_null())
        return fallback;
    if (!it->is_array() || it->size() != 3 || !std::all_of(it->begin(), it->end(), [](const json &v) {
            return v.is_number();
        }))
        throw ParseError(field_path(context, key) + ": expected [x, y, z] in meters");
    return {(*it)[0].get<double>(), (*it)[1].get<double>(), (*it)[2].get<double>()};
}

void resolve_radio(const json &doc, RadioConfig &radio)
{
    const std::string ctx = "radio";
    check_keys(doc,
               {"carrier_frequency_ghz", "transmit_power_dbm", "bandwidth_hz", "noise_power_dbm", "noise_power_bs_dbm",
                "noise_power_rs_dbm", "rician_k_db", "shadow_fading", "links"},
               ctx);
    radio.carrier_frequency_ghz = read_number(doc, "carrier_frequency_ghz", radio.carrier_frequency_ghz, ctx);
    radio.transmit_power_dbm = read_number(doc, "transmit_power_dbm", radio.transmit_power_dbm, ctx);
    radio.bandwidth_hz = read_number(doc, "bandwidth_hz", radio.bandwidth_hz, ctx);
    const double noise = read_number(doc, "noise_power_dbm", radio.noise_power_bs_dbm, ctx);
    radio.noise_power_bs_dbm = read_number(doc, "noise_power_bs_dbm", noise, ctx);
    radio.noise_power_rs_dbm = read_number(doc, "noise_power_rs_dbm", noise, ctx);
    radio.rician_k_db = read_number(doc, "rician_k_db", radio.rician_k_db, ctx);
    read(doc, "shadow_fading", radio.shadow_fading, ctx);

    if (const auto it = doc.find("links"); it != doc.end())
    {
        const std::string lctx = "radio.links";
        check_keys(*it, {"ue_bs", "ue_rs", "rs_bs"}, lctx);
        const auto model = [&](std::string_view key, PathLossModel &out) {
            std::string name;
            read(*it, key, name, lctx);
            if (!name.empty())
                out = path_loss_model_from_string(name);
        };
        model("ue_bs", radio.links.ue_bs);
        model("ue_rs", radio.links.ue_rs);
        model("rs_bs", radio.links.rs_bs);
    }
}

void resolve_power(const json &doc, PowerConfig &power)
{
    const std::string ctx = "power";
    check_keys(doc, {"p_c_w", "p_dc_w", "p_rf_sub6_w", "p_rf_mmwave_w", "zeta", "p_out_w"}, ctx);
    power.p_c = read_number(doc, "p_c_w", power.p_c, ctx);
    power.p_dc = read_number(doc, "p_dc_w", power.p_dc, ctx);
    power.p_rf_sub6 = read_number(doc, "p_rf_sub6_w", power.p_rf_sub6, ctx);
    power.p_rf_mmwave = read_number(doc, "p_rf_mmwave_w", power.p_rf_mmwave, ctx);
    power.zeta = read_number(doc, "zeta", power.zeta, ctx);
    power.p_out = read_number(doc, "p_out_w", power.p_out, ctx);
}

SurfaceSpec make_spec(SurfaceKind kind, std::size_t n, std::size_t a, ConnectedSelection rule,
                      std::optional<double> ceiling, const std::string &context)
{
    if (a > n)
        throw ValidationError(context + ": n_connected (" + std::to_string(a) + ") exceeds n_elements (" +
                              std::to_string(n) + ")");
    if (kind != SurfaceKind::RDARS && a != 0)
        throw ValidationError(context + ": only RDARS can have connected modes");
    SurfaceSpec spec = kind == SurfaceKind::RDARS      ? SurfaceSpec::rdars(n, a, rule)
                       : kind == SurfaceKind::ActiveRIS ? SurfaceSpec::active_ris(n)
                                                        : SurfaceSpec::ris(n);
    if (kind == SurfaceKind::ActiveRIS)
        spec.amplitude_ceiling = ceiling;
    return spec;
}

SurfaceKind surface_kind_from_string(const std::string &name, const std::string &context)
{
    if (name == "RIS")
        return SurfaceKind::RIS;
    if (name == "ARIS")
        return SurfaceKind::ActiveRIS;
    if (name == "RDARS")
        return SurfaceKind::RDARS;
    throw ValidationError(context + ": unknown kind '" + name + "' (expected RIS, ARIS or RDARS)");
}

std::vector<SurfaceSpec> resolve_architectures(const json &doc, Figure figure)
{
    std::size_t n = default_n_elements(figure);
    std::vector<std::size_t> connected{1, 2, 3, 4};
    ConnectedSelection rule = ConnectedSelection::FirstIndices;
    std::optional<double> ceiling;

    if (const auto it = doc.find("surface"); it != doc.end())
    {
        const std::string ctx = "surface";
        check_keys(*it, {"n_elements", "connected_modes", "connected_selection", "active_amplitude_ceiling"}, ctx);
        n = read_count(*it, "n_elements", n, ctx);
        read(*it, "connected_modes", connected, ctx);
        std::string rule_name;
        read(*it, "connected_selection", rule_name, ctx);
        if (!rule_name.empty())
            rule = connected_selection_from_string(rule_name);
        if (const auto c = it->find("active_amplitude_ceiling"); c != it->end() && !c->is_null())
        {
            if (!c->is_number() || !(c->get<double>() > 0.0))
                throw ValidationError("surface.active_amplitude_ceiling must be a number > 0");
            ceiling = c->get<double>();
        }
    }

    std::vector<SurfaceSpec> specs;
    if (const auto it = doc.find("architectures"); it != doc.end())
    {
        if (!it->is_array())
            throw ParseError("architectures: expected an array");
        for (std::size_t i = 0; i < it->size(); ++i)
        {
            const auto &entry = (*it)[i];
            const std::string ctx = "architectures[" + std::to_string(i) + "]";
            check_keys(entry, {"kind", "n_connected", "n_elements"}, ctx);
            std::string kind;
            read(entry, "kind", kind, ctx);
            if (kind.empty())
                throw ParseError(ctx + ": missing 'kind'");
            specs.push_back(make_spec(surface_kind_from_string(kind, ctx), read_count(entry, "n_elements", n, ctx),
                                      read_count(entry, "n_connected", 0, ctx), rule, ceiling, ctx));
        }
        return specs;
    }

    specs.push_back(make_spec(SurfaceKind::RIS, n, 0, rule, ceiling, "surface"));
    specs.push_back(make_spec(SurfaceKind::ActiveRIS, n, 0, rule, ceiling, "surface"));
    for (std::size_t a : connected)
        specs.push_back(make_spec(SurfaceKind::RDARS, n, a, rule, ceiling, "surface"));
    return specs;
}

} // namespace

ExperimentConfig resolve_config(const json &doc_in, Figure figure, const ConfigOverrides &overrides)
{
    const json doc = doc_in.is_null() ? json::object() : doc_in;
    check_keys(doc,
               {"band", "seed", "n_trials", "workers", "averaging", "scene", "radio", "power", "surface",
                "architectures", "sweeps"},
               "config");

    ExperimentConfig cfg;

    Band band = Band::Sub6;
    std::string band_name;
    read(doc, "band", band_name, "");
    if (!band_name.empty())
        band = band_from_string(band_name);
    if (overrides.band)
        band = *overrides.band;
    cfg.radio = RadioConfig::for_band(band);
    if (const auto it = doc.find("radio"); it != doc.end())
        resolve_radio(*it, cfg.radio);

    if (const auto it = doc.find("scene"); it != doc.end())
    {
        check_keys(*it, {"bs", "rs", "ue"}, "scene");
        cfg.scene.bs = read_position(*it, "bs", cfg.scene.bs, "scene");
        cfg.scene.rs = read_position(*it, "rs", cfg.scene.rs, "scene");
        cfg.scene.ue = read_position(*it, "ue", cfg.scene.ue, "scene");
    }

    if (const auto it = doc.find("power"); it != doc.end())
        resolve_power(*it, cfg.power);

    cfg.architectures = resolve_architectures(doc, figure);

    if (const auto it = doc.find("seed"); it != doc.end())
    {
        if (!it->is_number_unsigned())
            throw ParseError("seed: expected an unsigned 64-bit integer");
        cfg.master_seed = it->get<std::uint64_t>();
    }
    cfg.n_trials = read_count(doc, "n_trials", cfg.n_trials, "");
    cfg.workers = static_cast<unsigned>(read_count(doc, "workers", cfg.workers, ""));
    std::string averaging;
    read(doc, "averaging", averaging, "");
    if (!averaging.empty())
        cfg.averaging = averaging_from_string(averaging);

    cfg.sweep = default_sweep(figure);
    if (const auto it = doc.find("sweeps"); it != doc.end())
    {
        check_keys(*it, {"ee_vs_n", "ee_vs_xrs", "ee_vs_ue"}, "sweeps");
        if (figure != Figure::Cdf)
            read(*it, to_string(figure), cfg.sweep.points, "sweeps");
    }

    if (overrides.seed)
        cfg.master_seed = *overrides.seed;
    if (overrides.trials)
        cfg.n_trials = *overrides.trials;
    if (overrides.workers)
        cfg.workers = *overrides.workers;

    validate(cfg);
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path &path, Figure figure, const ConfigOverrides &overrides)
{
    if (path.empty())
        return resolve_config(json::object(), figure, overrides);

    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open config file '" + path.string() + "'");
    json doc;
    try
    {
        doc = json::parse(in, nullptr, true, true);
    }
    catch (const json::parse_error &e)
    {
        throw ParseError(path.string() + ": " + e.what());
    }
    return resolve_config(doc, figure, overrides);
}

json to_json(const ExperimentConfig &cfg)
{
    const auto pos = [](const Position3D &p) { return json::array({p.x, p.y, p.z}); };
    json archs = json::array();
    for (const auto &s : cfg.architectures)
    {
        json a = {{"kind", std::string(to_string(s.kind))},
                  {"n_elements", s.n_elements},
                  {"n_connected", s.n_connected},
                  {"connected_selection", std::string(to_string(s.connected_selection))}};
        a["amplitude_ceiling"] = s.amplitude_ceiling ? json(*s.amplitude_ceiling) : json(nullptr);
        archs.push_back(std::move(a));
    }
    const auto &r = cfg.radio;
    return json{
        {"scene", {{"bs", pos(cfg.scene.bs)}, {"rs", pos(cfg.scene.rs)}, {"ue", pos(cfg.scene.ue)}}},
        {"radio",
         {{"band", std::string(to_string(r.band))},
          {"carrier_frequency_ghz", r.carrier_frequency_ghz},
          {"transmit_power_dbm", r.transmit_power_dbm},
          {"bandwidth_hz", r.bandwidth_hz},
          {"noise_power_bs_dbm", r.noise_power_bs_dbm},
          {"noise_power_rs_dbm", r.noise_power_rs_dbm},
          {"rician_k_db", r.rician_k_db},
          {"shadow_fading", r.shadow_fading},
          {"links",
           {{"ue_bs", std::string(to_string(r.links.ue_bs))},
            {"ue_rs", std::string(to_string(r.links.ue_rs))},
            {"rs_bs", std::string(to_string(r.links.rs_bs))}}}}},
        {"power",
         {{"p_c_w", cfg.power.p_c},
          {"p_dc_w", cfg.power.p_dc},
          {"p_rf_sub6_w", cfg.power.p_rf_sub6},
          {"p_rf_mmwave_w", cfg.power.p_rf_mmwave},
          {"zeta", cfg.power.zeta},
          {"p_out_w", cfg.power.p_out}}},
        {"architectures", archs},
        {"n_trials", cfg.n_trials},
        {"seed", cfg.master_seed},
        {"averaging", std::string(to_string(cfg.averaging))},
        {"sweep", {{"variable", std::string(to_string(cfg.sweep.variable))}, {"points", cfg.sweep.points}}},
    };
}

std::string config_digest(const ExperimentConfig &cfg)
{
    const std::string text = to_json(cfg).dump();
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    if (EVP_Digest(text.data(), text.size(), md.data(), &len, EVP_sha256(), nullptr) != 1)
        throw Error("SHA-256 digest failed");

    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i)
    {
        out.push_back(hex[md[i] >> 4]);
        out.push_back(hex[md[i] & 0xF]);
    }
    return out;
}

} // namespace rdars
