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

#include "flexmv/model.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace flexmv {

namespace {

std::string quoted(const std::string& id) { return "'" + id + "'"; }

Microseconds floor_div(Microseconds a, Microseconds b) {
    Microseconds q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Microseconds ceil_div(Microseconds a, Microseconds b) { return -floor_div(-a, b); }

}  // namespace

std::vector<SignalIndex> VariantMatrix::signals_of(VariantIndex v) const {
    std::vector<SignalIndex> out;
    for (std::size_t s = 0; s < signal_count(); ++s) {
        if (uses(static_cast<SignalIndex>(s), v)) out.push_back(static_cast<SignalIndex>(s));
    }
    return out;
}

std::optional<SignalIndex> Instance::find_signal(const std::string& id) const {
    for (std::size_t i = 0; i < signals.size(); ++i) {
        if (signals[i].id == id) return static_cast<SignalIndex>(i);
    }
    return std::nullopt;
}

CycleWindow round_time_constraints(const Signal& signal, const FlexRayConfig& config) {
    const Microseconds f = config.cycle_us;
    CycleWindow w;
    w.period_cycles = static_cast<int>(signal.period_us / f);
    const Microseconds release = ceil_div(signal.release_us, f);
    Microseconds deadline = floor_div(signal.release_us + signal.deadline_us, f) - 1;
    deadline = std::min<Microseconds>(deadline, release + w.period_cycles - 1);
    deadline = std::min<Microseconds>(deadline, config.hyperperiod_cycles - 1);
    if (deadline < release) {
        throw InfeasibleSignalError(signal.id, "signal " + quoted(signal.id) +
                                                   " has an empty cycle window after rounding");
    }
    w.release_cycle = static_cast<int>(release);
    w.deadline_cycle = static_cast<int>(deadline);
    return w;
}

void validate_instance(const Instance& instance) {
    const auto& cfg = instance.config;
    if (cfg.cycle_us <= 0) throw InstanceError("cycle_us must be positive");
    if (cfg.hyperperiod_cycles < 1 || cfg.hyperperiod_cycles > kMaxHyperperiodCycles ||
        !std::has_single_bit(static_cast<unsigned>(cfg.hyperperiod_cycles))) {
        throw InstanceError("hyperperiod_cycles must be a power of two no larger than 64");
    }
    if (cfg.payload_bits < 1 || cfg.payload_bits > kMaxPayloadBits) {
        throw InstanceError("payload_bits must lie in [1, " + std::to_string(kMaxPayloadBits) + "]");
    }
    if (cfg.static_slots < 0) throw InstanceError("static_slots must be non-negative");
    if (cfg.slot_us < 0) throw InstanceError("slot_us must be non-negative");

    if (instance.variants.signal_count() != instance.signals.size()) {
        throw InstanceError("variant matrix does not cover the signal list");
    }

    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < instance.signals.size(); ++i) {
        const Signal& s = instance.signals[i];
        if (s.id.empty()) throw InstanceError("signal id must not be empty");
        if (!seen.insert(s.id).second) throw InstanceError("duplicate signal id " + quoted(s.id));
        if (s.length_bits < 1) throw InstanceError("signal " + quoted(s.id) + " has non-positive length");
        if (s.length_bits > cfg.payload_bits) {
            throw InstanceError("signal " + quoted(s.id) + " exceeds frame payload");
        }
        if (s.period_us < cfg.cycle_us || s.period_us % cfg.cycle_us != 0) {
            throw InstanceError("signal " + quoted(s.id) + " period is not a multiple of the cycle");
        }
        const auto ratio = static_cast<std::uint64_t>(s.period_us / cfg.cycle_us);
        if (!std::has_single_bit(ratio)) {
            throw InstanceError("signal " + quoted(s.id) + " period is off the cycle*2^n grid");
        }
        if (ratio > static_cast<std::uint64_t>(cfg.hyperperiod_cycles)) {
            throw InstanceError("signal " + quoted(s.id) + " period exceeds the hyperperiod");
        }
        if (s.release_us < 0) throw InstanceError("signal " + quoted(s.id) + " has a negative release");
        if (s.deadline_us <= 0) throw InstanceError("signal " + quoted(s.id) + " has a non-positive deadline");
        if (!instance.variants.in_any_variant(static_cast<SignalIndex>(i))) {
            throw InstanceError("signal " + quoted(s.id) + " belongs to no variant");
        }
    }
}

}  // namespace flexmv
