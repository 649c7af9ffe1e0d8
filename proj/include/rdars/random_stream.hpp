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

#include <complex>
#include <cstdint>
#include <random>

namespace rdars {

// Deterministic random stream for one Monte-Carlo trial.
//
// The engine is std::mt19937_64 seeded through std::seed_seq from the pair
// (master_seed, stream_index). Both algorithms are fully specified by the C++
// standard, and the uniform and Gaussian transforms below use only the raw
// 64-bit output, so draws are bit-identical across standard libraries.
class RandomStream {
public:
    RandomStream(std::uint64_t master_seed, std::uint64_t stream_index);

    // Uniform on [0, 1) with 53 random mantissa bits.
    double uniform();

    // Standard real Gaussian N(0, 1).
    double standard_normal();

    // Circularly-symmetric complex Gaussian CN(0, 1), E|z|^2 = 1.
    std::complex<double> complex_normal();

private:
    std::mt19937_64 engine_;
};

} // namespace rdars
