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

#include "rdars/config.hpp"
#include "rdars/experiments.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace rdars {

inline constexpr const char *kToolVersion = "1.0.0";
inline constexpr const char *kSummaryCsvHeader =
    "sweep_value,architecture,mean_snr_db,mean_capacity_bps,mean_ee_bpj,total_power_w,stderr_ee";
inline constexpr const char *kCdfCsvHeader = "architecture,snr_db,cumulative_probability";
inline constexpr const char *kOutDirEnv = "RDARS_SIM_OUT_DIR";

struct RunManifest {
    std::string config_digest;
    std::string tool_version;
    std::string timestamp; // ISO-8601 UTC
    std::vector<std::filesystem::path> output_paths;
};

// Shortest round-trip decimal form.
std::string format_number(double v);

void write_summary_csv(const SweepResult &result, std::ostream &out);
void write_cdf_csv(const SweepResult &result, std::ostream &out);

// Config document in the input schema that resolves back to cfg.
nlohmann::json to_input_json(const ExperimentConfig &cfg, Figure figure);

// Runs one figure and writes into out_dir:
//   <figure>_<band>.csv            summary rows
//   <figure>_<band>_cdf.csv        empirical CDFs (cdf only)
//   <figure>_<band>_plot.py        matplotlib script reading the CSVs
//   <figure>_<band>_config.json    resolved config in the input schema
//   <figure>_<band>_manifest.json  digest, version, timestamp, outputs
// I/O failures throw Error naming the path.
RunManifest run_command(Figure figure, const std::filesystem::path &config_path,
                        const std::filesystem::path &out_dir, const ConfigOverrides &overrides = {});

} // namespace rdars
