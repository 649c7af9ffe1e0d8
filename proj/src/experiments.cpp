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

#include "rdars/experiments.hpp"

#include "rdars/errors.hpp"
#include "rdars/random_stream.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>

namespace rdars {

std::string_view to_string(SweepVariable v)
{
    switch (v)
    {
    case SweepVariable::None:
        return "none";
    case SweepVariable::NumElements:
        return "num_elements";
    case SweepVariable::RsHorizontalX:
        return "rs_x";
    case SweepVariable::BsUeDistance:
        return "bs_ue_distance";
    }
    return "?";
}

std::string_view to_string(Averaging a)
{
    return a == Averaging::MeanOfEe ? "mean_of_ee" : "ee_of_mean_snr";
}

Averaging averaging_from_string(std::string_view name)
{
    if (name == "mean_of_ee")
        return Averaging::MeanOfEe;
    if (name == "ee_of_mean_snr")
        return Averaging::EeOfMeanSnr;
    throw ValidationError("unknown averaging '" + std::string(name) + "' (expected mean_of_ee or ee_of_mean_snr)");
}

namespace {

bool is_positive_integer(double v)
{
    return v >= 1.0 && std::floor(v) == v && v <= 1e9;
}

} // namespace

SweepPointSetup apply_sweep_point(const ExperimentConfig &cfg, double value)
{
    SweepPointSetup setup{cfg.scene, cfg.architectures};
    switch (cfg.sweep.variable)
    {
    case SweepVariable::None:
        break;
    case SweepVariable::NumElements: {
        if (!is_positive_integer(value))
            throw InvalidSweepPoint("element count sweep point " + std::to_string(value) +
                                    " is not a positive integer");
        const auto n = static_cast<std::size_t>(value);
        for (auto &spec : setup.architectures)
        {
            if (spec.n_connected > n)
                throw InvalidSweepPoint("sweep point N=" + std::to_string(n) + " is smaller than " + spec.label() +
                                        "'s connected modes");
            auto rebuilt = spec.kind == SurfaceKind::RDARS ? SurfaceSpec::rdars(n, spec.n_connected,
                                                                                spec.connected_selection)
                           : spec.kind == SurfaceKind::ActiveRIS ? SurfaceSpec::active_ris(n)
                                                                 : SurfaceSpec::ris(n);
            rebuilt.amplitude_ceiling = spec.amplitude_ceiling;
            spec = std::move(rebuilt);
        }
        break;
    }
    case SweepVariable::RsHorizontalX:
        setup.scene.rs.x = value;
        break;
    case SweepVariable::BsUeDistance:
        if (!(value > 0.0))
            throw InvalidSweepPoint("BS-UE distance sweep point must be > 0");
        setup.scene.ue.x = cfg.scene.bs.x + value;
        setup.scene.ue.y = cfg.scene.bs.y;
        break;
    }
    try
    {
        validate(setup.scene);
    }
    catch (const ValidationError &e)
    {
        throw InvalidSweepPoint("sweep point " + std::to_string(value) + ": " + e.what());
    }
    return setup;
}

void validate(const ExperimentConfig &cfg)
{
    validate(cfg.scene);
    validate(cfg.radio);
    validate(cfg.power);
    if (cfg.n_trials < 1)
        throw ValidationError("n_trials must be >= 1");
    if (cfg.architectures.empty())
        throw ValidationError("at least one architecture is required");
    for (const auto &spec : cfg.architectures)
        validate(spec);

    const auto &pts = cfg.sweep.points;
    if (cfg.sweep.variable != SweepVariable::None && pts.empty())
        throw InvalidSweepPoint("sweep has no points");
    for (std::size_t i = 1; i < pts.size(); ++i)
        if (!(pts[i] > pts[i - 1]))
            throw InvalidSweepPoint("sweep points must be strictly increasing");
    for (double p : pts)
        apply_sweep_point(cfg, p);
}

std::vector<CdfPoint> empirical_cdf(std::vector<double> samples)
{
    std::sort(samples.begin(), samples.end());
    const auto n = static_cast<double>(samples.size());
    std::vector<CdfPoint> out(samples.size());
    for (std::size_t k = 0; k < samples.size(); ++k)
        out[k] = {samples[k], static_cast<double>(k + 1) / n};
    if (!out.empty())
        out.back().probability = 1.0;
    return out;
}

double median(std::vector<double> samples)
{
    if (samples.empty())
        throw ValidationError("median of an empty sample");
    const std::size_t mid = samples.size() / 2;
    std::nth_element(samples.begin(), samples.begin() + static_cast<std::ptrdiff_t>(mid), samples.end());
    const double upper = samples[mid];
    if (samples.size() % 2 == 1)
        return upper;
    const double lower = *std::max_element(samples.begin(), samples.begin() + static_cast<std::ptrdiff_t>(mid));
    return 0.5 * (lower + upper);
}

namespace {

double consumed_power(const SurfaceSpec &spec, const PowerConfig &power, Band band)
{
    switch (spec.kind)
    {
    case SurfaceKind::RIS:
        return power_ris(spec.n_elements, power);
    case SurfaceKind::ActiveRIS:
        return power_active(spec.n_elements, power);
    case SurfaceKind::RDARS:
        return power_rdars(spec.n_elements, spec.n_connected, power, band);
    }
    return 0.0;
}

ChannelRealization prefix(const ChannelRealization &ch, std::size_t n)
{
    ChannelRealization out;
    out.h_ub = ch.h_ub;
    out.h_ur.assign(ch.h_ur.begin(), ch.h_ur.begin() + static_cast<std::ptrdiff_t>(n));
    out.h_rb.assign(ch.h_rb.begin(), ch.h_rb.begin() + static_cast<std::ptrdiff_t>(n));
    return out;
}

// Optimal-configuration SNR of one architecture on a shared realization.
double architecture_snr(const ChannelRealization &ch, const SurfaceSpec &spec, const RadioConfig &radio)
{
    const double gamma_bar = radio.transmit_snr();
    switch (spec.kind)
    {
    case SurfaceKind::RIS:
        return snr_ris(ch, gamma_bar).snr_linear;
    case SurfaceKind::RDARS: {
        SurfaceSpec trial_spec = spec;
        trial_spec.mode_mask = select_connected_modes(ch, spec.n_connected, spec.connected_selection);
        return snr_rdars_optimal(ch, trial_spec, gamma_bar).snr_linear;
    }
    case SurfaceKind::ActiveRIS: {
        const double p_t = radio.transmit_power_w();
        const double s1 = radio.noise_power_bs_w();
        const double s2 = radio.noise_power_rs_w();
        if (spec.amplitude_ceiling)
        {
            try
            {
                const auto refl = apply_amplitude_ceiling(active_ris_optimal_coeffs(ch, s1, s2),
                                                          *spec.amplitude_ceiling);
                return snr_active_general(ch, refl, p_t, s1, s2).snr_linear;
            }
            catch (const DegenerateChannel &)
            {
            }
        }
        return snr_active_optimal(ch, p_t, s1, s2).snr_linear;
    }
    }
    return 0.0;
}

std::size_t max_elements(const std::vector<SurfaceSpec> &specs)
{
    std::size_t n = 0;
    for (const auto &s : specs)
        n = std::max(n, s.n_elements);
    return n;
}

unsigned resolve_workers(unsigned requested, std::size_t n_trials)
{
    unsigned w = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
    return static_cast<unsigned>(std::min<std::size_t>(w, n_trials));
}

// Per-trial SNR samples, indexed [architecture][trial].
std::vector<std::vector<double>> simulate_point(const ExperimentConfig &cfg, const SweepPointSetup &setup)
{
    const auto &specs = setup.architectures;
    const auto gains = link_gains(setup.scene, cfg.radio);
    const std::size_t n_max = max_elements(specs);

    std::vector<std::vector<double>> snr(specs.size(), std::vector<double>(cfg.n_trials));

    const auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t t = begin; t < end; ++t)
        {
            RandomStream rng(cfg.master_seed, t);
            const auto ch = draw_channels(gains, cfg.radio, n_max, rng);
            for (std::size_t a = 0; a < specs.size(); ++a)
            {
                const auto &spec = specs[a];
                snr[a][t] = spec.n_elements == n_max ? architecture_snr(ch, spec, cfg.radio)
                                                     : architecture_snr(prefix(ch, spec.n_elements), spec, cfg.radio);
            }
        }
    };

    const unsigned workers = resolve_workers(cfg.workers, cfg.n_trials);
    if (workers <= 1)
    {
        work(0, cfg.n_trials);
        return snr;
    }

    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::jthread> pool;
    const std::size_t chunk = (cfg.n_trials + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w)
    {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(cfg.n_trials, begin + chunk);
        if (begin < end)
            pool.emplace_back([&, w, begin, end] {
                try
                {
                    work(begin, end);
                }
                catch (...)
                {
                    errors[w] = std::current_exception();
                }
            });
    }
    pool.clear(); // joins
    for (const auto &e : errors)
        if (e)
            std::rethrow_exception(e);
    return snr;
}

SweepRow summarize(const ExperimentConfig &cfg, const SurfaceSpec &spec, double sweep_value,
                   const std::vector<double> &snr)
{
    const double bandwidth = cfg.radio.bandwidth_hz;
    const double power = consumed_power(spec, cfg.power, cfg.radio.band);
    const auto n = static_cast<double>(snr.size());

    double sum_snr = 0.0;
    double sum_cap = 0.0;
    double sum_ee = 0.0;
    double sum_ee_sq = 0.0;
    for (double s : snr)
    {
        const auto e = energy_efficiency(s, bandwidth, power);
        sum_snr += s;
        sum_cap += e.capacity;
        sum_ee += e.ee;
        sum_ee_sq += e.ee * e.ee;
    }

    SweepRow row;
    row.sweep_value = sweep_value;
    row.architecture = spec.label();
    row.mean_snr_linear = sum_snr / n;
    row.mean_capacity = sum_cap / n;
    row.total_power_w = power;

    const double mean_ee = sum_ee / n;
    if (snr.size() > 1)
    {
        const double var = std::max(0.0, (sum_ee_sq - n * mean_ee * mean_ee) / (n - 1.0));
        row.stderr_ee = std::sqrt(var / n);
    }
    row.mean_ee = cfg.averaging == Averaging::MeanOfEe ? mean_ee
                                                       : energy_efficiency(row.mean_snr_linear, bandwidth, power).ee;
    return row;
}

} // namespace

std::pair<SnrSample, EeSample> run_trial(const ExperimentConfig &cfg, const SurfaceSpec &spec,
                                         std::size_t trial_index)
{
    validate(spec);
    RandomStream rng(cfg.master_seed, trial_index);
    const auto ch = draw_channels(cfg.scene, cfg.radio, spec.n_elements, rng);

    SnrSample snr{architecture_snr(ch, spec, cfg.radio), spec.kind, trial_index};
    const auto ee = energy_efficiency(snr.snr_linear, cfg.radio.bandwidth_hz,
                                      consumed_power(spec, cfg.power, cfg.radio.band));
    return {snr, ee};
}

SweepResult run_cdf(const ExperimentConfig &cfg)
{
    ExperimentConfig single = cfg;
    single.sweep = {};
    validate(single);

    const SweepPointSetup setup{cfg.scene, cfg.architectures};
    const auto snr = simulate_point(single, setup);

    SweepResult result;
    for (std::size_t a = 0; a < setup.architectures.size(); ++a)
    {
        const auto &spec = setup.architectures[a];
        result.rows.push_back(summarize(single, spec, static_cast<double>(spec.n_elements), snr[a]));

        CdfCurve curve;
        curve.architecture = spec.label();
        std::vector<double> db(snr[a].size());
        std::transform(snr[a].begin(), snr[a].end(), db.begin(), linear_to_db);
        curve.points = empirical_cdf(std::move(db));
        curve.median_snr_db = linear_to_db(median(snr[a]));
        result.cdf.push_back(std::move(curve));
    }
    return result;
}

SweepResult run_sweep(const ExperimentConfig &cfg)
{
    validate(cfg);

    std::vector<double> points = cfg.sweep.points;
    if (cfg.sweep.variable == SweepVariable::None)
        points = {static_cast<double>(max_elements(cfg.architectures))};

    SweepResult result;
    for (double value : points)
    {
        const auto setup = apply_sweep_point(cfg, value);
        const auto snr = simulate_point(cfg, setup);
        for (std::size_t a = 0; a < setup.architectures.size(); ++a)
            result.rows.push_back(summarize(cfg, setup.architectures[a], value, snr[a]));
    }
    return result;
}

} // namespace rdars
