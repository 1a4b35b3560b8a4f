/*
Copyright 2026 The flexmv Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <cstdint>
#include <random>

#include "flexmv/model.hpp"

namespace flexmv::testing {

struct SmallInstanceLimits {
    int max_signals = 12;
    int max_nodes = 3;
    int max_variants = 4;
    int max_hyperperiod = 8;
    int min_payload = 4;
    int max_payload = 8;
};

/// Random valid instance within `limits`. Every window is non-empty and
/// every signal belongs to at least one variant.
Instance random_small_instance(std::mt19937_64& rng, const SmallInstanceLimits& limits = {});

}  // namespace flexmv::testing
