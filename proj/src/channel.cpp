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

#include "rdars/channel.hpp"

#include "rdars/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace rdars {

std::string_view to_string(PathLossModel model)
{
    switch (model)
    {
    case PathLossModel::UMaLOS:
        return "UMaLOS";
    case PathLossModel::UMaNLOS:
        return "UMaNLOS";
    case PathLossModel::UMiLOS:
        return "UMiLOS";
    case PathLossModel::UMiNLOS:
        return "UMiNLOS";
    }
    return "?";
}

PathLossModel path_loss_model_from_string(std::string_view name)
{
    for (auto m : {PathLossModel::UMaLOS, PathLossModel::UMaNLOS, PathLossModel::UMiLOS, PathLossModel::UMiNLOS})
        if (to_string(m) == name)
            return m;
    throw ValidationError("unknown path-loss model '" + std::string(name) +
                          "' (expected UMaLOS, UMaNLOS, UMiLOS or UMiNLOS)");
}

PathLoss path_loss_db(double distance_m, double carrier_ghz, PathLossModel model)
{
    if (!(distance_m > 0.0))
        throw NonPositiveDistance("path loss requires a positive distance, got " + std::to_string(distance_m));
    if (!(carrier_ghz > 0.0))
        throw ValidationError("path loss requires a positive carrier frequency");

    PathLoss out;
    double d = distance_m;
    if (d < kMinPathLossDistance)
    {
        d = kMinPathLossDistance;
        out.distance_clamped = true;
    }

    const double log_d = std::log10(d);
    const double log_fc = std::log10(carrier_ghz);
    const double uma_los = 28.0 + 22.0 * log_d + 20.0 * log_fc;
    const double umi_los = 32.4 + 21.0 * log_d + 20.0 * log_fc;

    switch (model)
    {
    case PathLossModel::UMaLOS:
        out.loss_db = uma_los;
        break;
    case PathLossModel::UMaNLOS:
        out.loss_db = std::max(uma_los, 13.54 + 39.08 * log_d + 20.0 * log_fc);
        break;
    case PathLossModel::UMiLOS:
        out.loss_db = umi_los;
        break;
    case PathLossModel::UMiNLOS:
        out.loss_db = std::max(umi_los, 22.4 + 35.3 * log_d + 21.3 * log_fc);
        break;
    }
    return out;
}

double shadow_fading_std_db(PathLossModel model)
{
    switch (model)
    {
    case PathLossModel::UMaLOS:
    case PathLossModel::UMiLOS:
        return 4.0;
    case PathLossModel::UMaNLOS:
        return 6.0;
    case PathLossModel::UMiNLOS:
        return 7.82;
    }
    return 0.0;
}

std::string_view to_string(Band band)
{
    return band == Band::Sub6 ? "sub6" : "mmwave";
}

Band band_from_string(std::string_view name)
{
    if (name == "sub6")
        return Band::Sub6;
    if (name == "mmwave")
        return Band::MmWave;
    throw ValidationError("unknown band '" + std::string(name) + "' (expected sub6 or mmwave)");
}

RadioConfig RadioConfig::sub6()
{
    return RadioConfig{};
}

RadioConfig RadioConfig::mmwave()
{
    RadioConfig r;
    r.band = Band::MmWave;
    r.carrier_frequency_ghz = 28.0;
    r.transmit_power_dbm = 20.0;
    r.bandwidth_hz = 500e6;
    r.noise_power_bs_dbm = -87.0;
    r.noise_power_rs_dbm = -87.0;
    return r;
}

RadioConfig RadioConfig::for_band(Band band)
{
    return band == Band::Sub6 ? sub6() : mmwave();
}

double dbm_to_watt(double dbm)
{
    return std::pow(10.0, (dbm - 30.0) / 10.0);
}

double db_to_linear(double db)
{
    return std::pow(10.0, db / 10.0);
}

double linear_to_db(double linear)
{
    return 10.0 * std::log10(linear);
}

double RadioConfig::transmit_power_w() const
{
    return dbm_to_watt(transmit_power_dbm);
}

double RadioConfig::noise_power_bs_w() const
{
    return dbm_to_watt(noise_power_bs_dbm);
}

double RadioConfig::noise_power_rs_w() const
{
    return dbm_to_watt(noise_power_rs_dbm);
}

double RadioConfig::transmit_snr() const
{
    return db_to_linear(transmit_power_dbm - noise_power_bs_dbm);
}

void validate(const RadioConfig &radio)
{
    if (!(radio.carrier_frequency_ghz > 0.0))
        throw ValidationError("radio.carrier_frequency_ghz must be > 0");
    if (!(radio.bandwidth_hz > 0.0))
        throw ValidationError("radio.bandwidth_hz must be > 0");
    for (double v : {radio.transmit_power_dbm, radio.noise_power_bs_dbm, radio.noise_power_rs_dbm, radio.rician_k_db})
        if (!std::isfinite(v))
            throw ValidationError("radio power levels and K-factor must be finite");
}

namespace {

struct RicianWeights {
    double los;
    double diffuse;
};

RicianWeights rician_weights(double k_db)
{
    const double k = db_to_linear(k_db);
    return {std::sqrt(k / (k + 1.0)), std::sqrt(1.0 / (k + 1.0))};
}

} // namespace

std::vector<std::complex<double>> draw_fading(std::size_t n, const Fading &fading, RandomStream &rng)
{
    std::vector<std::complex<double>> out(n);
    if (fading.kind == Fading::Kind::Rayleigh)
    {
        for (auto &g : out)
            g = rng.complex_normal();
        return out;
    }

    const auto w = rician_weights(fading.k_db);
    const auto los = std::polar(w.los, 2.0 * std::numbers::pi * rng.uniform());
    for (auto &g : out)
        g = los + w.diffuse * rng.complex_normal();
    return out;
}

void check_lengths(const ChannelRealization &ch)
{
    if (ch.h_ur.size() != ch.h_rb.size())
        throw LengthMismatch("h_ur has " + std::to_string(ch.h_ur.size()) + " entries but h_rb has " +
                             std::to_string(ch.h_rb.size()));
}

LinkGains link_gains(const Scene &scene, const RadioConfig &radio)
{
    const auto gain = [&](const Position3D &a, const Position3D &b, PathLossModel m, bool &clamped) {
        const auto pl = path_loss_db(distance(a, b), radio.carrier_frequency_ghz, m);
        clamped = clamped || pl.distance_clamped;
        return db_to_linear(-pl.loss_db);
    };

    LinkGains g;
    g.ue_bs = gain(scene.ue, scene.bs, radio.links.ue_bs, g.distance_clamped);
    g.ue_rs = gain(scene.ue, scene.rs, radio.links.ue_rs, g.distance_clamped);
    g.rs_bs = gain(scene.rs, scene.bs, radio.links.rs_bs, g.distance_clamped);
    return g;
}

ChannelRealization draw_channels(const Scene &scene, const RadioConfig &radio, std::size_t n_elements,
                                 RandomStream &rng)
{
    return draw_channels(link_gains(scene, radio), radio, n_elements, rng);
}

ChannelRealization draw_channels(const LinkGains &gains, const RadioConfig &radio, std::size_t n_elements,
                                 RandomStream &rng)
{
    ChannelRealization ch;
    ch.h_ub = rng.complex_normal();

    const auto w = rician_weights(radio.rician_k_db);
    const auto los = std::polar(w.los, 2.0 * std::numbers::pi * rng.uniform());

    double gain_ub = gains.ue_bs;
    double gain_ur = gains.ue_rs;
    double gain_rb = gains.rs_bs;
    if (radio.shadow_fading)
    {
        const auto shadow = [&](PathLossModel m) {
            return db_to_linear(shadow_fading_std_db(m) * rng.standard_normal());
        };
        gain_ub *= shadow(radio.links.ue_bs);
        gain_ur *= shadow(radio.links.ue_rs);
        gain_rb *= shadow(radio.links.rs_bs);
    }

    const double amp_ub = std::sqrt(gain_ub);
    const double amp_ur = std::sqrt(gain_ur);
    const double amp_rb = std::sqrt(gain_rb);

    ch.h_ub *= amp_ub;
    ch.h_ur.resize(n_elements);
    ch.h_rb.resize(n_elements);
    for (std::size_t i = 0; i < n_elements; ++i)
    {
        ch.h_ur[i] = amp_ur * rng.complex_normal();
        ch.h_rb[i] = amp_rb * (los + w.diffuse * rng.complex_normal());
    }
    return ch;
}

} // namespace rdars
