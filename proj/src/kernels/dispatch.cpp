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

#include <cstdlib>

#include "sdchan/kernels.hpp"

namespace sdchan::kernels
{

// Defined in profile_avx2.cpp; nullptr when that TU was built without AVX2.
const Backend *avx2_backend_impl();

const Backend *avx2_backend()
{
#if defined(__x86_64__) || defined(__i386__)
    static const Backend *backend = [] {
        if (!__builtin_cpu_supports("avx2") || !__builtin_cpu_supports("fma"))
            return static_cast<const Backend *>(nullptr);
        return avx2_backend_impl();
    }();
    return backend;
#else
    return nullptr;
#endif
}

const Backend &active_backend()
{
    static const Backend *backend = [] {
        const char *force = std::getenv("SDCHAN_FORCE_SCALAR");
        if (force != nullptr && force[0] != '\0')
            return &scalar_backend();
        if (const Backend *avx2 = avx2_backend())
            return avx2;
        return &scalar_backend();
    }();
    return *backend;
}

} // namespace sdchan::kernels
