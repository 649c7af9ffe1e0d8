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
#include "rdars/geometry.hpp"
#include "rdars/power.hpp"
#include "rdars/surfaces.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rdars {

enum class SweepVariable { None, NumElements, RsHorizontalX, BsUeDistance };

std::string_view to_string(SweepVariable v);

struct SweepSpec {
    SweepVariable variable = SweepVariable::None;
    std::vector<double> points;
};

// MeanOfEe averages per-trial B log2(1 + snr) / P. EeOfMeanSnr evaluates the
// EE formula once at the trial-averaged SNR.
enum class Averaging { MeanOfEe, EeOfMeanSnr };

std::string_view to_string(Averaging a);
Averaging averaging_from_string(std::string_view name);

struct ExperimentConfig {
    Scene scene{};
    RadioConfig radio{};
    PowerConfig power{};
    std::vector<SurfaceSpec> architectures;
    std::size_t n_trials = 30000;
    std::uint64_t master_seed = 1;
    SweepSpec sweep{};
    Averaging averaging = Averaging::MeanOfEe;
    // 0 selects std::thread::hardware_concurrency(). Results do not depend on it.
    unsigned workers = 0;
};

// Throws ValidationError or InvalidSweepPoint.
void validate(const ExperimentConfig &cfg);

struct CdfPoint {
    double value = 0.0;
    double probability = 0.0;
};

// Sorted samples with p_k = k / n, no interpolation.
std::vector<CdfPoint> empirical_cdf(std::vector<double> samples);

double median(std::vector<double> samples);

struct SweepRow {
    double sweep_value = 0.0;
    std::string architecture;
    double mean_snr_linear = 0.0;
    double mean_capacity = 0.0; // bit/s
    double mean_ee = 0.0;       // bit/J
    double total_power_w = 0.0;
    double stderr_ee = 0.0;     // standard error of the per-trial EE mean
};

struct CdfCurve {
    std::string architecture;
    std::vector<CdfPoint> points; // value is SNR in dB
    double median_snr_db = 0.0;
};

struct SweepResult {
    std::vector<SweepRow> rows; // point-major, then architecture order
    std::vector<CdfCurve> cdf;  // empty unless produced by run_cdf
};

// One trial of one architecture. The channel comes from the (master_seed,
// trial_index) stream, so every architecture sees the same draw.
std::pair<SnrSample, EeSample> run_trial(const ExperimentConfig &cfg, const SurfaceSpec &spec,
                                         std::size_t trial_index);

// n_trials samples per architecture at the configured scene; sweep is ignored.
SweepResult run_cdf(const ExperimentConfig &cfg);

// Averages over n_trials at every sweep point. With SweepVariable::None the
// configured scene is evaluated as a single point.
SweepResult run_sweep(const ExperimentConfig &cfg);

// Scene and architectures with the sweep variable set to value.
struct SweepPointSetup {
    Scene scene;
    std::vector<SurfaceSpec> architectures;
};

SweepPointSetup apply_sweep_point(const ExperimentConfig &cfg, double value);

} // namespace rdars
