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

#include "rdars/channel.hpp"

#include <cstddef>

namespace rdars {

// Circuit power constants in watts.
//
// None of these are measured values; the defaults are representative figures
// for a sub-6 GHz / mmWave RF chain and per-element control and bias circuits.
struct PowerConfig {
    double p_c = 2e-5;          // per-element switching and control
    double p_dc = 5e-3;         // per-element DC bias of an active element
    double p_rf_sub6 = 0.06;    // per RF chain, sub-6 GHz
    double p_rf_mmwave = 1.0;   // per RF chain, mmWave
    double zeta = 1.0;          // inverse amplifier efficiency
    double p_out = 0.0;         // active-RIS output power, neglected by default

    double p_rf(Band band) const { return band == Band::Sub6 ? p_rf_sub6 : p_rf_mmwave; }

    friend bool operator==(const PowerConfig &, const PowerConfig &) = default;
};

void validate(const PowerConfig &cfg);

// (N - a) P_C + a P_RF. Throws ConnectedExceedsTotal if a > N.
double power_rdars(std::size_t n, std::size_t a, double p_c, double p_rf);
double power_rdars(std::size_t n, std::size_t a, const PowerConfig &cfg, Band band);

// N P_C
double power_ris(std::size_t n, const PowerConfig &cfg);

// N (P_C + P_DC) + zeta p_out
double power_active(std::size_t n, const PowerConfig &cfg);

struct EeSample {
    double ee = 0.0;          // bit/J
    double capacity = 0.0;    // bit/s
    double total_power = 0.0; // W
};

// capacity = B log2(1 + snr), ee = capacity / P. Throws ZeroPower if P == 0.
EeSample energy_efficiency(double snr_linear, double bandwidth_hz, double total_power_w);

} // namespace rdars
