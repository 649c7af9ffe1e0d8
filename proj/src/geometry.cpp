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

#include "rdars/geometry.hpp"

#include "rdars/errors.hpp"

#include <cmath>

namespace rdars {

double distance(const Position3D &p, const Position3D &q)
{
    return std::hypot(p.x - q.x, p.y - q.y, p.z - q.z);
}

void validate(const Scene &scene)
{
    const auto check_height = [](const Position3D &p, const char *name) {
        if (!(p.z >= 0.0))
            throw ValidationError(std::string(name) + " height must be >= 0 (z >= 0)");
    };
    check_height(scene.bs, "bs");
    check_height(scene.rs, "rs");
    check_height(scene.ue, "ue");

    if (!(distance(scene.bs, scene.rs) > 0.0))
        throw ValidationError("bs and rs coincide (pairwise distances must be > 0)");
    if (!(distance(scene.bs, scene.ue) > 0.0))
        throw ValidationError("bs and ue coincide (pairwise distances must be > 0)");
    if (!(distance(scene.rs, scene.ue) > 0.0))
        throw ValidationError("rs and ue coincide (pairwise distances must be > 0)");
}

} // namespace rdars
