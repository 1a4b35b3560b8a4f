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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "flexmv/bit_matrix.hpp"

namespace flexmv {

using Microseconds = std::int64_t;
using NodeId = std::uint32_t;
using SignalIndex = std::uint32_t;
using VariantIndex = std::uint32_t;

/// Largest frame payload accepted (FlexRay caps the payload at 254 bytes).
inline constexpr int kMaxPayloadBits = 2032;
/// The FlexRay cycle counter is six bits wide.
inline constexpr int kMaxHyperperiodCycles = 64;

/// Raised for documents or values that violate the instance model.
class InstanceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a signal's rounded time window contains no cycle.
class InfeasibleSignalError : public std::runtime_error {
public:
    InfeasibleSignalError(std::string signal_id, const std::string& what)
        : std::runtime_error(what), signal_id_(std::move(signal_id)) {}
    const std::string& signal_id() const noexcept { return signal_id_; }

private:
    std::string signal_id_;
};

struct FlexRayConfig {
    Microseconds cycle_us = 5000;
    int hyperperiod_cycles = 64;
    int payload_bits = 32;
    /// Advisory only; the scheduler may allocate more slots than declared.
    int static_slots = 0;
    Microseconds slot_us = 0;

    friend bool operator==(const FlexRayConfig&, const FlexRayConfig&) = default;
};

struct Signal {
    std::string id;
    NodeId node = 0;
    Microseconds period_us = 0;
    int length_bits = 0;
    Microseconds release_us = 0;
    /// Maximum age at the consumer, measured from the release date.
    Microseconds deadline_us = 0;

    friend bool operator==(const Signal&, const Signal&) = default;
};

/// Binary signal x variant membership.
class VariantMatrix {
public:
    VariantMatrix() = default;
    VariantMatrix(std::size_t signal_count, std::size_t variant_count)
        : bits_(signal_count, variant_count) {}

    std::size_t signal_count() const noexcept { return bits_.rows(); }
    std::size_t variant_count() const noexcept { return bits_.cols(); }

    bool uses(SignalIndex s, VariantIndex v) const noexcept { return bits_.test(s, v); }
    void set(SignalIndex s, VariantIndex v, bool value = true) noexcept { bits_.set(s, v, value); }

    /// True if some variant uses both signals.
    bool co_occur(SignalIndex a, SignalIndex b) const noexcept { return bits_.rows_intersect(a, b); }
    bool in_any_variant(SignalIndex s) const noexcept { return bits_.row_any(s); }

    std::vector<SignalIndex> signals_of(VariantIndex v) const;

    const BitMatrix& bits() const noexcept { return bits_; }

    friend bool operator==(const VariantMatrix&, const VariantMatrix&) = default;

private:
    BitMatrix bits_;
};

/// Provenance recorded by the benchmark generator.
struct GeneratorInfo {
    std::string profile;
    std::uint64_t seed = 0;

    friend bool operator==(const GeneratorInfo&, const GeneratorInfo&) = default;
};

struct Instance {
    FlexRayConfig config;
    std::vector<Signal> signals;
    VariantMatrix variants;
    std::optional<GeneratorInfo> generator;

    std::optional<SignalIndex> find_signal(const std::string& id) const;

    friend bool operator==(const Instance&, const Instance&) = default;
};

/// Release and deadline rounded to whole communication cycles.
/// `deadline_cycle` is an inclusive bound on the cycle of the first job.
struct CycleWindow {
    int release_cycle = 0;
    int deadline_cycle = 0;
    int period_cycles = 1;

    int width() const noexcept { return deadline_cycle - release_cycle; }

    friend bool operator==(const CycleWindow&, const CycleWindow&) = default;
};

/// Rounds release up to the start of the earliest whole cycle and
/// release + deadline down to the end of the latest whole cycle. The window
/// is clipped to one period and to the hyperperiod.
/// Throws InfeasibleSignalError when no cycle remains.
CycleWindow round_time_constraints(const Signal& signal, const FlexRayConfig& config);

/// Cycle of job `k` for a signal whose first job is in `first_cycle`.
/// The hyperperiod repeats, so cycles wrap modulo the hyperperiod.
inline int job_cycle(int first_cycle, int k, int period_cycles, int hyperperiod_cycles) noexcept {
    return (first_cycle + k * period_cycles) % hyperperiod_cycles;
}

/// Number of jobs a signal has within one hyperperiod.
inline int job_count(int period_cycles, int hyperperiod_cycles) noexcept {
    return hyperperiod_cycles / period_cycles;
}

/// Checks every invariant of the model; throws InstanceError on the first
/// violation found.
void validate_instance(const Instance& instance);

}  // namespace flexmv
