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

#pragma once

#include "rdars/geometry.hpp"
#include "rdars/random_stream.hpp"

#include <complex>
#include <cstddef>
#include <string_view>
#include <vector>

namespace rdars {

// Urban macro / micro path-loss formulas from 3GPP TR 38.901 Table 7.4.1-1.
// LOS variants use the pre-breakpoint branch (PL1) only; NLOS variants are
// max(PL_LOS, PL'_NLOS) with a 1.5 m UT height.
enum class PathLossModel { UMaLOS, UMaNLOS, UMiLOS, UMiNLOS };

std::string_view to_string(PathLossModel model);
PathLossModel path_loss_model_from_string(std::string_view name);

struct PathLoss {
    double loss_db = 0.0;
    bool distance_clamped = false; // d was below 10 m and was raised to 10 m
};

inline constexpr double kMinPathLossDistance = 10.0;

// Throws NonPositiveDistance for d <= 0 and ValidationError for fc <= 0.
PathLoss path_loss_db(double distance_m, double carrier_ghz, PathLossModel model);

// Log-normal shadowing standard deviation of the model, in dB.
double shadow_fading_std_db(PathLossModel model);

enum class Band { Sub6, MmWave };

std::string_view to_string(Band band);
Band band_from_string(std::string_view name);

struct LinkModels {
    PathLossModel ue_bs = PathLossModel::UMaNLOS;
    PathLossModel ue_rs = PathLossModel::UMaLOS;
    PathLossModel rs_bs = PathLossModel::UMaLOS;

    friend bool operator==(const LinkModels &, const LinkModels &) = default;
};

// Radio parameters at the dB/dBm boundary; the accessors return linear values.
struct RadioConfig {
    Band band = Band::Sub6;
    double carrier_frequency_ghz = 3.7;
    double transmit_power_dbm = 10.0;
    double bandwidth_hz = 20e6;
    double noise_power_bs_dbm = -100.0; // sigma_1^2
    double noise_power_rs_dbm = -100.0; // sigma_2^2
    double rician_k_db = 10.0;          // RS-BS link
    LinkModels links{};
    bool shadow_fading = false;

    static RadioConfig sub6();
    static RadioConfig mmwave();
    static RadioConfig for_band(Band band);

    double transmit_power_w() const;
    double noise_power_bs_w() const;
    double noise_power_rs_w() const;
    // P_t / sigma_BS^2
    double transmit_snr() const;

    friend bool operator==(const RadioConfig &, const RadioConfig &) = default;
};

void validate(const RadioConfig &radio);

double dbm_to_watt(double dbm);
double db_to_linear(double db);
double linear_to_db(double linear);

// Unit-mean-power small-scale fading.
struct Fading {
    enum class Kind { Rayleigh, Rician };
    Kind kind = Kind::Rayleigh;
    double k_db = 0.0;

    static Fading rayleigh() { return {}; }
    static Fading rician(double k_db) { return {Kind::Rician, k_db}; }
};

// One draw of i.i.d. gains. For Rician fading the LOS phase is drawn once per
// call and shared by all n entries.
std::vector<std::complex<double>> draw_fading(std::size_t n, const Fading &fading, RandomStream &rng);

struct ChannelRealization {
    std::complex<double> h_ub{};
    std::vector<std::complex<double>> h_ur; // UE -> RS, length N
    std::vector<std::complex<double>> h_rb; // RS -> BS, length N

    std::size_t size() const { return h_ur.size(); }
};

// Throws LengthMismatch if h_ur and h_rb differ in length.
void check_lengths(const ChannelRealization &ch);

// Deterministic large-scale power gains 10^(-PL/10) of the three links.
struct LinkGains {
    double ue_bs = 0.0;
    double ue_rs = 0.0;
    double rs_bs = 0.0;
    bool distance_clamped = false;
};

LinkGains link_gains(const Scene &scene, const RadioConfig &radio);

// Rayleigh on UE-BS and UE-RS, Rician(radio.rician_k_db) on RS-BS, each scaled
// by the square root of its path gain.
//
// Draw order is h_ub, the RS-BS LOS phase, optional shadowing terms, then the
// element pairs (h_ur[i], h_rb[i]) in index order. A realization with N
// elements is therefore a prefix of the one with N' > N from the same stream.
ChannelRealization draw_channels(const Scene &scene, const RadioConfig &radio, std::size_t n_elements,
                                 RandomStream &rng);
ChannelRealization draw_channels(const LinkGains &gains, const RadioConfig &radio, std::size_t n_elements,
                                 RandomStream &rng);

} // namespace rdars
