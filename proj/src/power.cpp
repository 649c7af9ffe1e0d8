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

#include "rdars/power.hpp"

#include "rdars/errors.hpp"

#include <cmath>
#include <string>

namespace rdars {

void validate(const PowerConfig &cfg)
{
    for (double v : {cfg.p_c, cfg.p_dc, cfg.p_rf_sub6, cfg.p_rf_mmwave, cfg.zeta, cfg.p_out})
        if (!(v >= 0.0) || !std::isfinite(v))
            throw ValidationError("power constants must be finite and >= 0");
}

double power_rdars(std::size_t n, std::size_t a, double p_c, double p_rf)
{
    if (a > n)
        throw ConnectedExceedsTotal("connected modes (" + std::to_string(a) + ") exceed elements (" +
                                    std::to_string(n) + ")");
    return static_cast<double>(n - a) * p_c + static_cast<double>(a) * p_rf;
}

double power_rdars(std::size_t n, std::size_t a, const PowerConfig &cfg, Band band)
{
    return power_rdars(n, a, cfg.p_c, cfg.p_rf(band));
}

double power_ris(std::size_t n, const PowerConfig &cfg)
{
    return static_cast<double>(n) * cfg.p_c;
}

double power_active(std::size_t n, const PowerConfig &cfg)
{
    return static_cast<double>(n) * (cfg.p_c + cfg.p_dc) + cfg.zeta * cfg.p_out;
}

EeSample energy_efficiency(double snr_linear, double bandwidth_hz, double total_power_w)
{
    if (total_power_w == 0.0)
        throw ZeroPower("energy efficiency undefined for zero consumed power");
    if (!(total_power_w > 0.0))
        throw ValidationError("consumed power must be > 0");
    if (!(snr_linear >= 0.0))
        throw ValidationError("SNR must be >= 0");

    EeSample s;
    s.capacity = bandwidth_hz * std::log2(1.0 + snr_linear);
    s.total_power = total_power_w;
    s.ee = s.capacity / total_power_w;
    return s;
}

} // namespace rdars
