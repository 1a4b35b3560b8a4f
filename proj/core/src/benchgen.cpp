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

#include "flexmv/benchgen.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "flexmv/random.hpp"

namespace flexmv {

namespace {

constexpr Microseconds kMs = 1000;

/// Raw period classes of the SAE signal set. Sporadic signals appear with
/// their deadline as period (20 ms driver actions, 50 ms others).
struct PeriodClass {
    Microseconds raw_us;
    double weight;
    bool long_period;
};

constexpr std::array<PeriodClass, 6> kPeriodClasses{{
    {5 * kMs, 0.10, false},
    {10 * kMs, 0.10, false},
    {20 * kMs, 0.10, false},
    {50 * kMs, 0.10, true},
    {100 * kMs, 0.30, true},
    {1000 * kMs, 0.30, true},
}};

const PeriodClass& draw_period_class(Xoshiro256& rng) {
    double u = rng.uniform_real();
    for (const auto& pc : kPeriodClasses) {
        if (u < pc.weight) return pc;
        u -= pc.weight;
    }
    return kPeriodClasses.back();
}

/// Short-period signals are status bits and small values (1-4 bits);
/// long-period signals carry up to 16 bits.
int draw_length(Xoshiro256& rng, bool long_period, int payload_bits) {
    const int len = static_cast<int>(rng.uniform_int(1, long_period ? 16 : 4));
    return std::min(len, payload_bits);
}

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

void check_profile(const BenchmarkProfile& p) {
    auto fail = [&](const std::string& why) { throw ProfileError("profile '" + p.name + "': " + why); };
    if (p.node_count < 1) fail("node_count must be positive");
    if (p.min_signals < 0 || p.min_signals > p.max_signals) fail("invalid signal count range");
    if (p.payload_bits < 1 || p.payload_bits > kMaxPayloadBits) fail("payload_bits out of range");
    if (p.variants < 1) fail("at least one variant is required");
    if (!(p.variant_prob_max >= 0.0 && p.variant_prob_max <= 1.0)) fail("variant_prob_max must lie in [0, 1]");
    if (p.cycle_us <= 0) fail("cycle_us must be positive");
    if (p.hyperperiod_cycles < 1 || p.hyperperiod_cycles > kMaxHyperperiodCycles ||
        !std::has_single_bit(static_cast<unsigned>(p.hyperperiod_cycles))) {
        fail("hyperperiod_cycles must be a power of two no larger than 64");
    }
    if (p.release == ReleasePolicy::FirstFiveCycles && p.hyperperiod_cycles < 5) {
        fail("releases over five cycles need a hyperperiod of at least 8 cycles");
    }
}

}  // namespace

const std::vector<BenchmarkProfile>& builtin_profiles() {
    using R = ReleasePolicy;
    using D = DeadlinePolicy;
    static const std::vector<BenchmarkProfile> profiles = [] {
        auto make = [](std::string name, int nodes, int lo, int hi, int payload, R r, D d) {
            BenchmarkProfile p;
            p.name = std::move(name);
            p.node_count = nodes;
            p.min_signals = lo;
            p.max_signals = hi;
            p.payload_bits = payload;
            p.release = r;
            p.deadline = d;
            return p;
        };
        return std::vector<BenchmarkProfile>{
            make("set1", 3, 500, 1000, 32, R::None, D::None),
            make("set2", 3, 500, 1000, 32, R::FirstFiveCycles, D::None),
            make("set3", 3, 500, 1000, 32, R::FirstFiveCycles, D::LastThirdOfPeriod),
            make("set4", 3, 500, 1000, 32, R::FirstFiveCycles, D::None),
            make("set5", 6, 500, 700, 64, R::FirstFiveCycles, D::None),
            make("set6", 6, 800, 1000, 32, R::FirstFiveCycles, D::None),
            make("set7", 23, 850, 1000, 32, R::None, D::None),
            make("1ECU500", 1, 450, 550, 32, R::FirstFiveCycles, D::Random),
            make("1ECU1000", 1, 900, 1100, 32, R::FirstFiveCycles, D::Random),
            make("1ECU3000", 1, 2800, 3200, 128, R::FirstFiveCycles, D::Random),
        };
    }();
    return profiles;
}

std::optional<BenchmarkProfile> find_profile(std::string_view name) {
    for (const auto& p : builtin_profiles()) {
        if (p.name == name) return p;
    }
    return std::nullopt;
}

Microseconds resample_period(Microseconds raw, Microseconds cycle_us, int hyperperiod_cycles) {
    Microseconds period = cycle_us;
    const Microseconds cap = cycle_us * hyperperiod_cycles;
    while (period * 2 <= raw && period * 2 <= cap) period *= 2;
    return period;
}

Instance generate_instance(const BenchmarkProfile& profile, std::uint64_t seed) {
    check_profile(profile);
    Xoshiro256 rng(seed ^ fnv1a(profile.name));

    Instance inst;
    inst.config.cycle_us = profile.cycle_us;
    inst.config.hyperperiod_cycles = profile.hyperperiod_cycles;
    inst.config.payload_bits = profile.payload_bits;
    inst.config.static_slots = profile.static_slots;
    inst.config.slot_us = profile.slot_us;
    inst.generator = GeneratorInfo{profile.name, seed};

    const auto f = profile.cycle_us;
    const auto count = static_cast<std::size_t>(rng.uniform_int(profile.min_signals, profile.max_signals));
    inst.signals.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        Signal s;
        s.id = "S" + std::to_string(i);
        s.node = static_cast<NodeId>(rng.uniform_int(1, profile.node_count));
        const auto& pc = draw_period_class(rng);
        s.period_us = resample_period(pc.raw_us, f, profile.hyperperiod_cycles);
        s.length_bits = draw_length(rng, pc.long_period, profile.payload_bits);
        if (profile.release == ReleasePolicy::FirstFiveCycles) s.release_us = f * rng.uniform_int(0, 4);

        switch (profile.deadline) {
            case DeadlinePolicy::None:
                s.deadline_us = s.period_us;
                break;
            case DeadlinePolicy::LastThirdOfPeriod:
                s.deadline_us = rng.uniform_int((2 * s.period_us + 2) / 3, s.period_us);
                break;
            case DeadlinePolicy::Random:
                s.deadline_us = rng.uniform_int(f, s.period_us);
                break;
        }
        // at least one whole cycle
        s.deadline_us = std::max(s.deadline_us, f);
        inst.signals.push_back(std::move(s));
    }

    const auto nvar = static_cast<std::size_t>(profile.variants);
    std::vector<double> inclusion(nvar);
    for (auto& p : inclusion) p = rng.uniform_real() * profile.variant_prob_max;
    inst.variants = VariantMatrix(count, nvar);
    for (std::size_t s = 0; s < count; ++s) {
        bool any = false;
        for (std::size_t v = 0; v < nvar; ++v) {
            if (rng.bernoulli(inclusion[v])) {
                inst.variants.set(static_cast<SignalIndex>(s), static_cast<VariantIndex>(v));
                any = true;
            }
        }
        if (!any) {
            inst.variants.set(static_cast<SignalIndex>(s), static_cast<VariantIndex>(rng.uniform_int(0, profile.variants - 1)));
        }
    }

    validate_instance(inst);
    return inst;
}

}  // namespace flexmv
