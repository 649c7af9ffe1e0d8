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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rdars {

enum class SurfaceKind { RIS, ActiveRIS, RDARS };

std::string_view to_string(SurfaceKind kind);

// How the support of the RDARS mode-indicating matrix is chosen.
enum class ConnectedSelection { FirstIndices, LargestUeGain };

std::string_view to_string(ConnectedSelection rule);
ConnectedSelection connected_selection_from_string(std::string_view name);

// mode_mask is the diagonal of A^H A: true marks an element wired to the BS
// (connected mode), false a passive reflector.
struct SurfaceSpec {
    SurfaceKind kind = SurfaceKind::RIS;
    std::size_t n_elements = 0;
    std::size_t n_connected = 0;
    std::vector<bool> mode_mask;
    ConnectedSelection connected_selection = ConnectedSelection::FirstIndices;
    // Optional per-element gain limit for active RIS; unset means the
    // unconstrained optimum.
    std::optional<double> amplitude_ceiling;

    static SurfaceSpec ris(std::size_t n);
    static SurfaceSpec active_ris(std::size_t n);
    // Mask is initialised with the first a indices connected.
    static SurfaceSpec rdars(std::size_t n, std::size_t a,
                             ConnectedSelection rule = ConnectedSelection::FirstIndices);

    // "RIS", "ARIS" or "RDARS a=<a>"
    std::string label() const;
};

// Throws ValidationError when the mask, counts and kind disagree.
void validate(const SurfaceSpec &spec);

// Per-element phases (radians) and amplitudes. Passive elements have unit
// amplitude.
struct ReflectionConfig {
    std::vector<double> phases;
    std::vector<double> amplitudes;
};

struct SnrSample {
    double snr_linear = 0.0;
    SurfaceKind architecture = SurfaceKind::RIS;
    std::size_t trial_index = 0;
};

// |h_UB + sum_{reflecting i} e^{j phase_i} h_RB_i h_UR_i|^2 + sum_{connected i} |h_UR_i|^2,
// scaled by gamma_bar. Amplitudes in refl are ignored; RIS/RDARS elements are
// unit modulus.
SnrSample snr_rdars_general(const ChannelRealization &ch, const SurfaceSpec &spec, const ReflectionConfig &refl,
                            double gamma_bar);

// Co-phases every reflecting element with the direct link. Connected elements
// get phase 0. arg(h_UB) is taken as 0 when h_UB == 0.
ReflectionConfig optimal_phases_rdars(const ChannelRealization &ch, const SurfaceSpec &spec);

// Closed form at the optimal phases:
// gamma_bar * [(|h_UB| + sum (1 - a_i)|h_RB_i||h_UR_i|)^2 + sum a_i |h_UR_i|^2]
SnrSample snr_rdars_optimal(const ChannelRealization &ch, const SurfaceSpec &spec, double gamma_bar);

// Passive RIS: snr_rdars_optimal with no connected elements.
SnrSample snr_ris(const ChannelRealization &ch, double gamma_bar);

// Unconstrained optimum of the active-RIS SNR. Phases co-phase each element
// with the direct link and
//   amplitude_i = sigma1^2 |h_UR_i| / (sigma2^2 |h_UB| |h_RB_i|).
// Throws DegenerateChannel if |h_UB| == 0 or some |h_RB_i| == 0.
ReflectionConfig active_ris_optimal_coeffs(const ChannelRealization &ch, double sigma1_sq, double sigma2_sq);

// Clamps every amplitude to at most ceiling.
ReflectionConfig apply_amplitude_ceiling(ReflectionConfig refl, double ceiling);

// P_t |h_UB + sum alpha_i e^{j phase_i} h_RB_i h_UR_i|^2 / (sigma2^2 sum alpha_i^2 |h_RB_i|^2 + sigma1^2)
SnrSample snr_active_general(const ChannelRealization &ch, const ReflectionConfig &refl, double p_t,
                             double sigma1_sq, double sigma2_sq);

// gamma_bar (|h_UB|^2 + ||h_UR||^2), valid for equal receiver and surface noise.
SnrSample snr_active_optimal(const ChannelRealization &ch, double gamma_bar);

// P_t (|h_UB|^2 / sigma1^2 + ||h_UR||^2 / sigma2^2); reduces to the overload
// above when sigma1^2 == sigma2^2.
SnrSample snr_active_optimal(const ChannelRealization &ch, double p_t, double sigma1_sq, double sigma2_sq);

// FirstIndices: 0..a-1. LargestUeGain: the a largest |h_UR_i|, ties to the
// lower index. Throws ConnectedExceedsTotal if a > N.
std::vector<bool> select_connected_modes(const ChannelRealization &ch, std::size_t a, ConnectedSelection rule);

inline constexpr std::size_t kBruteForceMaxElements = 8;
inline constexpr std::size_t kBruteForceMaxLevels = 64;

// Exact maximum of snr_rdars_general over the phase grid {2 pi k / L}^N.
// Throws TooLarge for N > 8 or L > 64.
SnrSample brute_force_best_snr(const ChannelRealization &ch, const SurfaceSpec &spec, std::size_t phase_levels,
                               double gamma_bar);

} // namespace rdars
