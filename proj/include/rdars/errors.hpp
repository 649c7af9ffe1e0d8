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

#include <stdexcept>
#include <string>

namespace rdars {

// All library errors derive from Error so callers can catch the family at once.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NonPositiveDistance : public Error {
public:
    using Error::Error;
};

class LengthMismatch : public Error {
public:
    using Error::Error;
};

// Active-RIS amplitudes are undefined when |h_UB| or some |h_RB_i| is zero.
class DegenerateChannel : public Error {
public:
    using Error::Error;
};

class TooLarge : public Error {
public:
    using Error::Error;
};

class ConnectedExceedsTotal : public Error {
public:
    using Error::Error;
};

class ZeroPower : public Error {
public:
    using Error::Error;
};

class InvalidSweepPoint : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

} // namespace rdars
