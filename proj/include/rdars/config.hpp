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

#include "rdars/experiments.hpp"

#include "json.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rdars {

// One subcommand per reproduced figure.
enum class Figure { Cdf, EeVsN, EeVsXrs, EeVsUe };

std::string_view to_string(Figure figure);
Figure figure_from_string(std::string_view name);

// Command-line values that take precedence over the config file.
struct ConfigOverrides {
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;
    std::optional<Band> band;
    std::optional<unsigned> workers;
};

// Default element count for the figure (1024 for cdf, 256 for the geometry
// sweeps, 1024 as the base of the element sweep).
std::size_t default_n_elements(Figure figure);
SweepSpec default_sweep(Figure figure);

// Resolves a parsed config document. Every field is optional; missing ones
// take the band defaults. Unknown keys and invalid values throw ParseError or
// ValidationError naming the field.
//
// Schema (all keys optional):
//   band            "sub6" | "mmwave"
//   seed            unsigned 64-bit integer
//   n_trials        integer >= 1
//   workers         integer >= 0 (0 = all hardware threads)
//   averaging       "mean_of_ee" | "ee_of_mean_snr"
//   scene           { bs, rs, ue : [x, y, z] }
//   radio           { carrier_frequency_ghz, transmit_power_dbm, bandwidth_hz,
//                     noise_power_dbm, noise_power_bs_dbm, noise_power_rs_dbm,
//                     rician_k_db, shadow_fading,
//                     links { ue_bs, ue_rs, rs_bs : "UMaLOS" | "UMaNLOS" | "UMiLOS" | "UMiNLOS" } }
//   power           { p_c_w, p_dc_w, p_rf_sub6_w, p_rf_mmwave_w, zeta, p_out_w }
//   surface         { n_elements, connected_modes : [a...], connected_selection,
//                     active_amplitude_ceiling }
//   architectures   [ { kind : "RIS" | "ARIS" | "RDARS", n_connected, n_elements } ]
//   sweeps          { ee_vs_n, ee_vs_xrs, ee_vs_ue : [points...] }
ExperimentConfig resolve_config(const nlohmann::json &doc, Figure figure, const ConfigOverrides &overrides = {});

// Reads and resolves a JSON config file. An empty path resolves the defaults.
ExperimentConfig load_config(const std::filesystem::path &path, Figure figure,
                             const ConfigOverrides &overrides = {});

// Canonical form of a resolved config; keys are sorted.
nlohmann::json to_json(const ExperimentConfig &cfg);

// SHA-256 of the canonical JSON dump, hex encoded.
std::string config_digest(const ExperimentConfig &cfg);

} // namespace rdars
