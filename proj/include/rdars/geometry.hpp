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

namespace rdars {

// Node position in meters. z is height above the ground plane.
struct Position3D {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend bool operator==(const Position3D &, const Position3D &) = default;
};

// Base station, reconfigurable surface and user equipment locations.
struct Scene {
    Position3D bs{0.0, 0.0, 10.0};
    Position3D rs{20.0, 20.0, 10.0};
    Position3D ue{200.0, 0.0, 1.5};

    friend bool operator==(const Scene &, const Scene &) = default;
};

double distance(const Position3D &p, const Position3D &q);

// Throws ValidationError if a node sits below ground or two nodes coincide.
void validate(const Scene &scene);

} // namespace rdars
