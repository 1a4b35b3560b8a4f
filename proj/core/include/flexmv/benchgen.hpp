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
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "flexmv/model.hpp"

namespace flexmv {

class ProfileError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class ReleasePolicy { None, FirstFiveCycles };
enum class DeadlinePolicy { None, LastThirdOfPeriod, Random };

struct BenchmarkProfile {
    std::string name;
    int node_count = 3;
    int min_signals = 500;
    int max_signals = 1000;
    int payload_bits = 32;
    ReleasePolicy release = ReleasePolicy::None;
    DeadlinePolicy deadline = DeadlinePolicy::None;
    int variants = 20;
    /// Each variant draws its inclusion probability from [0, variant_prob_max].
    double variant_prob_max = 0.7;
    Microseconds cycle_us = 5000;
    int hyperperiod_cycles = 64;
    int static_slots = 75;
    Microseconds slot_us = 40;
};

/// set1..set7, 1ECU500, 1ECU1000, 1ECU3000.
const std::vector<BenchmarkProfile>& builtin_profiles();
std::optional<BenchmarkProfile> find_profile(std::string_view name);

/// Largest cycle * 2^n not above `raw`, clamped to [cycle, cycle * hyperperiod].
Microseconds resample_period(Microseconds raw, Microseconds cycle_us, int hyperperiod_cycles = 64);

/// Deterministic in (profile, seed). Throws ProfileError on profiles that
/// cannot yield a valid instance.
Instance generate_instance(const BenchmarkProfile& profile, std::uint64_t seed);

}  // namespace flexmv
