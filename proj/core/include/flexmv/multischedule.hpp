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

#include <compare>
#include <optional>
#include <vector>

#include "flexmv/exclusion.hpp"
#include "flexmv/model.hpp"
#include "flexmv/schedule_document.hpp"

namespace flexmv {

/// Position of a signal's first job. Later jobs keep the slot and offset and
/// advance by the period, wrapping around the hyperperiod.
struct Placement {
    int slot = 0;
    int first_cycle = 0;
    int offset_bits = 0;

    /// Slot-major, then cycle, then offset: the candidate enumeration order.
    friend auto operator<=>(const Placement&, const Placement&) = default;
};

struct FrameEntry {
    SignalIndex signal = 0;
    int offset_bits = 0;
    int length_bits = 0;
};

/// One (cycle, slot) cell. Entries may overlap when their signals never
/// meet in a variant.
struct Multiframe {
    std::vector<FrameEntry> entries;
};

struct Slot {
    int index = 0;
    std::vector<NodeId> nodes;
    /// One multiframe per cycle of the hyperperiod.
    std::vector<Multiframe> frames;
};

/// Smallest offset >= `min_offset` that starts a run of `length_bits` bits
/// free of every resident signal conflicting with `signal`.
std::optional<int> find_suitable_offset(const Multiframe& frame, SignalIndex signal, int length_bits,
                                        const ExclusionMatrices& mems, int payload_bits,
                                        int min_offset = 0);

/// Shared schedule for all variants.
class Multischedule {
public:
    /// Rounds every signal's time constraints. Throws InfeasibleSignalError
    /// if a signal has an empty window.
    explicit Multischedule(const Instance& instance);

    const FlexRayConfig& config() const noexcept { return config_; }
    std::size_t slot_count() const noexcept { return slots_.size(); }
    const std::vector<Slot>& slots() const noexcept { return slots_; }
    std::size_t signal_count() const noexcept { return traits_.size(); }

    const CycleWindow& window(SignalIndex s) const { return traits_.at(s).window; }
    NodeId node(SignalIndex s) const { return traits_.at(s).node; }
    int length_bits(SignalIndex s) const { return traits_.at(s).length_bits; }
    const std::optional<Placement>& placement(SignalIndex s) const { return placements_.at(s); }

    /// Next candidate strictly after `after` (or the first one when empty)
    /// whose slot admits the signal's node, whose cycle lies in the window,
    /// and whose multiframe has a free run for the first job. Each
    /// multiframe yields one candidate, at its smallest suitable offset.
    std::optional<Placement> find_position_for_signal(SignalIndex signal, const ExclusionMatrices& mems,
                                                      const std::optional<Placement>& after = {}) const;

    /// True if every job of `signal` at `p` is free of conflicts.
    bool fits(SignalIndex signal, const Placement& p, const ExclusionMatrices& mems) const;

    /// First-fit placement of all jobs, allocating a new slot if nothing fits.
    Placement place_signal_to_schedule(SignalIndex signal, const ExclusionMatrices& mems);

    /// Places `signal` at `p` after checking fits(). Throws std::logic_error
    /// if it does not fit or the signal is already placed.
    void place_at(SignalIndex signal, const Placement& p, const ExclusionMatrices& mems);

    /// Appends an empty slot and returns its index.
    int allocate_slot();

private:
    struct SignalTraits {
        NodeId node = 0;
        int length_bits = 0;
        CycleWindow window;
    };

    bool node_admitted(const Slot& slot, NodeId node, const ExclusionMatrices& mems) const;
    void commit(SignalIndex signal, const Placement& p);

    FlexRayConfig config_;
    std::vector<SignalTraits> traits_;
    std::vector<std::optional<Placement>> placements_;
    std::vector<Slot> slots_;
};

/// Full multischedule as a document; placements sorted by cycle, offset
/// and input order within each slot.
ScheduleDocument to_schedule_document(const Multischedule& ms, const Instance& instance);

/// One variant's schedule: only that variant's signals, at their shared
/// positions. Every slot is reported, empty or not, so indices line up
/// across variants.
ScheduleDocument extract_native_schedule(const Multischedule& ms, const Instance& instance,
                                         VariantIndex variant);

}  // namespace flexmv
