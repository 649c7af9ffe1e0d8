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

#include "rdars/random_stream.hpp"

#include <cmath>
#include <numbers>

namespace rdars {

namespace {

std::seed_seq make_seed_seq(std::uint64_t master_seed, std::uint64_t stream_index)
{
    return std::seed_seq{static_cast<std::uint32_t>(master_seed),
                         static_cast<std::uint32_t>(master_seed >> 32),
                         static_cast<std::uint32_t>(stream_index),
                         static_cast<std::uint32_t>(stream_index >> 32),
                         0x52444152u}; // stream domain tag
}

} // namespace

RandomStream::RandomStream(std::uint64_t master_seed, std::uint64_t stream_index)
{
    auto seq = make_seed_seq(master_seed, stream_index);
    engine_.seed(seq);
}

double RandomStream::uniform()
{
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RandomStream::standard_normal()
{
    return std::sqrt(2.0) * complex_normal().real();
}

std::complex<double> RandomStream::complex_normal()
{
    // |z|^2 ~ Exp(1) and arg z ~ U[0, 2pi) give CN(0, 1) directly.
    const double u = 1.0 - uniform(); // (0, 1]
    const double phase = 2.0 * std::numbers::pi * uniform();
    const double r = std::sqrt(-std::log(u));
    return {r * std::cos(phase), r * std::sin(phase)};
}

} // namespace rdars
