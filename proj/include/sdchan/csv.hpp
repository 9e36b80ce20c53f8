// SPDX-License-Identifier: Apache-2.0
//
// sdchan - semi-deterministic cluster channel simulator for positioning
// Copyright (C) 2025-2026 sdchan contributors
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

#ifndef SDCHAN_CSV_HPP
#define SDCHAN_CSV_HPP

#include <cstdint>
#include <string>

namespace sdchan
{

/// Floating-point CSV cell with 9 significant digits.
std::string format_g9(double value);

/// First line of every output file: scenario hash and seed.
std::string output_header(std::uint64_t scenario_hash, std::uint64_t seed);

} // namespace sdchan

#endif
