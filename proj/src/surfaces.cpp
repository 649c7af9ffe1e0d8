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

#include "rdars/surfaces.hpp"

#include "rdars/errors.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <numeric>

namespace rdars {

using cd = std::complex<double>;

std::string_view to_string(SurfaceKind kind)
{
    switch (kind)
    {
    case SurfaceKind::RIS:
        return "RIS";
    case SurfaceKind::ActiveRIS:
        return "ARIS";
    case SurfaceKind::RDARS:
        return "RDARS";
    }
    return "?";
}

std::string_view to_string(ConnectedSelection rule)
{
    return rule == ConnectedSelection::FirstIndices ? "first_indices" : "largest_ue_gain";
}

ConnectedSelection connected_selection_from_string(std::string_view name)
{
    if (name == "first_indices")
        return ConnectedSelection::FirstIndices;
    if (name == "largest_ue_gain")
        return ConnectedSelection::LargestUeGain;
    throw ValidationError("unknown connected_selection '" + std::string(name) +
                          "' (expected first_indices or largest_ue_gain)");
}

SurfaceSpec SurfaceSpec::ris(std::size_t n)
{
    SurfaceSpec s;
    s.kind = SurfaceKind::RIS;
    s.n_elements = n;
    s.mode_mask.assign(n, false);
    return s;
}

SurfaceSpec SurfaceSpec::active_ris(std::size_t n)
{
    SurfaceSpec s = ris(n);
    s.kind = SurfaceKind::ActiveRIS;
    return s;
}

SurfaceSpec SurfaceSpec::rdars(std::size_t n, std::size_t a, ConnectedSelection rule)
{
    if (a > n)
        throw ConnectedExceedsTotal("RDARS with " + std::to_string(a) + " connected modes but only " +
                                    std::to_string(n) + " elements");
    SurfaceSpec s;
    s.kind = SurfaceKind::RDARS;
    s.n_elements = n;
    s.n_connected = a;
    s.connected_selection = rule;
    s.mode_mask.assign(n, false);
    std::fill_n(s.mode_mask.begin(), a, true);
    return s;
}

std::string SurfaceSpec::label() const
{
    if (kind == SurfaceKind::RDARS)
        return "RDARS a=" + std::to_string(n_connected);
    return std::string(to_string(kind));
}

void validate(const SurfaceSpec &spec)
{
    if (spec.n_connected > spec.n_elements)
        throw ValidationError("n_connected (" + std::to_string(spec.n_connected) + ") exceeds n_elements (" +
                              std::to_string(spec.n_elements) + ")");
    if (spec.mode_mask.size() != spec.n_elements)
        throw ValidationError("mode_mask length must equal n_elements");
    const auto popcount = static_cast<std::size_t>(std::count(spec.mode_mask.begin(), spec.mode_mask.end(), true));
    if (popcount != spec.n_connected)
        throw ValidationError("popcount(mode_mask) must equal n_connected");
    if (spec.kind != SurfaceKind::RDARS && spec.n_connected != 0)
        throw ValidationError(std::string(to_string(spec.kind)) + " cannot have connected elements");
    if (spec.amplitude_ceiling && !(*spec.amplitude_ceiling > 0.0))
        throw ValidationError("amplitude_ceiling must be > 0");
}

namespace {

void check_surface_lengths(const ChannelRealization &ch, const SurfaceSpec &spec)
{
    check_lengths(ch);
    if (spec.mode_mask.size() != ch.size())
        throw LengthMismatch("mode_mask has " + std::to_string(spec.mode_mask.size()) +
                             " entries but the channel has " + std::to_string(ch.size()));
}

void check_reflection_lengths(const ChannelRealization &ch, const ReflectionConfig &refl, bool need_amplitudes)
{
    if (refl.phases.size() != ch.size())
        throw LengthMismatch("reflection config has " + std::to_string(refl.phases.size()) +
                             " phases but the channel has " + std::to_string(ch.size()));
    if (need_amplitudes && refl.amplitudes.size() != ch.size())
        throw LengthMismatch("reflection config has " + std::to_string(refl.amplitudes.size()) +
                             " amplitudes but the channel has " + std::to_string(ch.size()));
}

// arg(h_UB) with the h_UB == 0 convention.
double direct_phase(const ChannelRealization &ch)
{
    return ch.h_ub == cd{} ? 0.0 : std::arg(ch.h_ub);
}

double connected_power(const ChannelRealization &ch, const std::vector<bool> &mask)
{
    double sum = 0.0;
    for (std::size_t i = 0; i < ch.size(); ++i)
        if (mask[i])
            sum += std::norm(ch.h_ur[i]);
    return sum;
}

} // namespace

SnrSample snr_rdars_general(const ChannelRealization &ch, const SurfaceSpec &spec, const ReflectionConfig &refl,
                            double gamma_bar)
{
    check_surface_lengths(ch, spec);
    check_reflection_lengths(ch, refl, false);

    cd combined = ch.h_ub;
    for (std::size_t i = 0; i < ch.size(); ++i)
        if (!spec.mode_mask[i])
            combined += std::polar(1.0, refl.phases[i]) * ch.h_rb[i] * ch.h_ur[i];

    return {gamma_bar * (std::norm(combined) + connected_power(ch, spec.mode_mask)), spec.kind, 0};
}

ReflectionConfig optimal_phases_rdars(const ChannelRealization &ch, const SurfaceSpec &spec)
{
    check_surface_lengths(ch, spec);
    const double ref = direct_phase(ch);

    ReflectionConfig refl;
    refl.phases.assign(ch.size(), 0.0);
    refl.amplitudes.assign(ch.size(), 1.0);
    for (std::size_t i = 0; i < ch.size(); ++i)
        if (!spec.mode_mask[i])
            refl.phases[i] = ref - std::arg(ch.h_rb[i] * ch.h_ur[i]);
    return refl;
}

SnrSample snr_rdars_optimal(const ChannelRealization &ch, const SurfaceSpec &spec, double gamma_bar)
{
    check_surface_lengths(ch, spec);

    double reflected = std::abs(ch.h_ub);
    double connected = 0.0;
    for (std::size_t i = 0; i < ch.size(); ++i)
    {
        if (spec.mode_mask[i])
            connected += std::norm(ch.h_ur[i]);
        else
            reflected += std::abs(ch.h_rb[i]) * std::abs(ch.h_ur[i]);
    }
    return {gamma_bar * (reflected * reflected + connected), spec.kind, 0};
}

SnrSample snr_ris(const ChannelRealization &ch, double gamma_bar)
{
    auto sample = snr_rdars_optimal(ch, SurfaceSpec::ris(ch.size()), gamma_bar);
    sample.architecture = SurfaceKind::RIS;
    return sample;
}

ReflectionConfig active_ris_optimal_coeffs(const ChannelRealization &ch, double sigma1_sq, double sigma2_sq)
{
    check_lengths(ch);
    if (!(sigma1_sq > 0.0) || !(sigma2_sq > 0.0))
        throw ValidationError("active RIS noise powers must be > 0");

    const double abs_ub = std::abs(ch.h_ub);
    if (abs_ub == 0.0)
        throw DegenerateChannel("active RIS amplitudes undefined for h_UB == 0");

    const double ref = std::arg(ch.h_ub);
    ReflectionConfig refl;
    refl.phases.resize(ch.size());
    refl.amplitudes.resize(ch.size());
    for (std::size_t i = 0; i < ch.size(); ++i)
    {
        const double abs_rb = std::abs(ch.h_rb[i]);
        if (abs_rb == 0.0)
            throw DegenerateChannel("active RIS amplitude undefined for h_RB[" + std::to_string(i) + "] == 0");
        refl.phases[i] = ref - std::arg(ch.h_ur[i] * ch.h_rb[i]);
        refl.amplitudes[i] = (sigma1_sq * std::abs(ch.h_ur[i])) / (sigma2_sq * abs_ub * abs_rb);
    }
    return refl;
}

ReflectionConfig apply_amplitude_ceiling(ReflectionConfig refl, double ceiling)
{
    for (auto &a : refl.amplitudes)
        a = std::min(a, ceiling);
    return refl;
}

SnrSample snr_active_general(const ChannelRealization &ch, const ReflectionConfig &refl, double p_t,
                             double sigma1_sq, double sigma2_sq)
{
    check_lengths(ch);
    check_reflection_lengths(ch, refl, true);

    cd combined = ch.h_ub;
    double forwarded_noise = 0.0;
    for (std::size_t i = 0; i < ch.size(); ++i)
    {
        const double alpha = refl.amplitudes[i];
        combined += std::polar(alpha, refl.phases[i]) * ch.h_rb[i] * ch.h_ur[i];
        forwarded_noise += alpha * alpha * std::norm(ch.h_rb[i]);
    }
    return {p_t * std::norm(combined) / (sigma2_sq * forwarded_noise + sigma1_sq), SurfaceKind::ActiveRIS, 0};
}

SnrSample snr_active_optimal(const ChannelRealization &ch, double gamma_bar)
{
    double ue_power = 0.0;
    for (const auto &h : ch.h_ur)
        ue_power += std::norm(h);
    return {gamma_bar * (std::norm(ch.h_ub) + ue_power), SurfaceKind::ActiveRIS, 0};
}

SnrSample snr_active_optimal(const ChannelRealization &ch, double p_t, double sigma1_sq, double sigma2_sq)
{
    if (sigma1_sq == sigma2_sq)
        return snr_active_optimal(ch, p_t / sigma1_sq);

    double ue_power = 0.0;
    for (const auto &h : ch.h_ur)
        ue_power += std::norm(h);
    return {p_t * (std::norm(ch.h_ub) / sigma1_sq + ue_power / sigma2_sq), SurfaceKind::ActiveRIS, 0};
}

std::vector<bool> select_connected_modes(const ChannelRealization &ch, std::size_t a, ConnectedSelection rule)
{
    const std::size_t n = ch.size();
    if (a > n)
        throw ConnectedExceedsTotal("cannot connect " + std::to_string(a) + " of " + std::to_string(n) +
                                    " elements");

    std::vector<bool> mask(n, false);
    if (rule == ConnectedSelection::FirstIndices)
    {
        std::fill_n(mask.begin(), a, true);
        return mask;
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    // stable ordering resolves ties to the lower index
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(a), order.end(),
                      [&](std::size_t l, std::size_t r) {
                          const double gl = std::norm(ch.h_ur[l]);
                          const double gr = std::norm(ch.h_ur[r]);
                          return gl > gr || (gl == gr && l < r);
                      });
    for (std::size_t k = 0; k < a; ++k)
        mask[order[k]] = true;
    return mask;
}

SnrSample brute_force_best_snr(const ChannelRealization &ch, const SurfaceSpec &spec, std::size_t phase_levels,
                               double gamma_bar)
{
    check_surface_lengths(ch, spec);
    if (ch.size() > kBruteForceMaxElements || phase_levels > kBruteForceMaxLevels)
        throw TooLarge("brute force limited to N <= " + std::to_string(kBruteForceMaxElements) + " and L <= " +
                       std::to_string(kBruteForceMaxLevels));
    if (phase_levels == 0)
        throw ValidationError("phase_levels must be >= 1");

    std::vector<cd> cascade;
    for (std::size_t i = 0; i < ch.size(); ++i)
        if (!spec.mode_mask[i])
            cascade.push_back(ch.h_rb[i] * ch.h_ur[i]);

    const double step = 2.0 * std::numbers::pi / static_cast<double>(phase_levels);
    std::vector<cd> rotations(phase_levels);
    for (std::size_t k = 0; k < phase_levels; ++k)
        rotations[k] = std::polar(1.0, step * static_cast<double>(k));

    const auto levels = static_cast<long>(phase_levels);
    double best = 0.0;

    // Enumerates every grid point for all but the last reflecting element. The
    // last element's best grid phase is one of the levels adjacent to the
    // continuous optimum, so checking those three is exact.
    std::function<void(std::size_t, cd)> search = [&](std::size_t depth, cd partial) {
        if (cascade.empty())
        {
            best = std::norm(partial);
            return;
        }
        if (depth + 1 == cascade.size())
        {
            const cd w = cascade[depth];
            const double target = std::arg(partial) - std::arg(w);
            const long centre = std::lround(target / step);
            for (long k = centre - 1; k <= centre + 1; ++k)
            {
                const long idx = ((k % levels) + levels) % levels;
                best = std::max(best, std::norm(partial + rotations[static_cast<std::size_t>(idx)] * w));
            }
            return;
        }
        for (std::size_t k = 0; k < phase_levels; ++k)
            search(depth + 1, partial + rotations[k] * cascade[depth]);
    };
    search(0, ch.h_ub);

    return {gamma_bar * (best + connected_power(ch, spec.mode_mask)), spec.kind, 0};
}

} // namespace rdars
