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

#include "sdchan/csv.hpp"

#include <cinttypes>
#include <cstdio>

namespace sdchan
{

std::string format_g9(double value)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", value);
    return buf;
}

std::string output_header(std::uint64_t scenario_hash, std::uint64_t seed)
{
    char buf[96];
    std::snprintf(buf, sizeof(buf), "# scenario_hash=%016" PRIx64 " seed=%" PRIu64, scenario_hash,
                  seed);
    return buf;
}

} // namespace sdchan
