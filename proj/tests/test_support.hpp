/**************************************************************************
 * test_support.hpp
 *
 * Copyright 2026 The lchconv Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lch/field.hpp"

namespace lch::testing {

inline FieldElement random_element(const Field& f, std::mt19937_64& rng) {
    return FieldElement{static_cast<std::uint32_t>(rng() & (f.order() - 1))};
}

inline FieldElement random_nonzero(const Field& f, std::mt19937_64& rng) {
    for (;;) {
        FieldElement a = random_element(f, rng);
        if (!a.is_zero()) return a;
    }
}

inline std::vector<FieldElement> random_vector(const Field& f, std::size_t len, std::mt19937_64& rng) {
    std::vector<FieldElement> v(len);
    for (auto& x : v) x = random_element(f, rng);
    return v;
}

}  // namespace lch::testing
