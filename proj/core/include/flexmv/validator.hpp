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

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "flexmv/model.hpp"
#include "flexmv/schedule_document.hpp"

namespace flexmv {

/// Raised when a schedule names a signal the instance does not know.
class ScheduleReferenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Rule {
    NodeExclusivity,   ///< a variant sees two nodes in one slot
    BitOverlap,        ///< a variant sees two signals sharing frame bits
    PayloadBounds,     ///< offset + length exceeds the payload, or offset < 0
    Periodicity,       ///< not exactly one placement, or jobs off the period grid
    TimeWindow,        ///< first job outside the rounded release/deadline window
    MissingSignal,     ///< a variant's signal has no placement
    SlotNodeConflict,  ///< nodes sharing a slot co-occur in some variant
    SmemOverlap,       ///< overlapping signals co-occur in some variant
    ForeignSignal,     ///< a native schedule holds a signal its variant does not use
};

std::string_view to_string(Rule rule) noexcept;

struct Violation {
    Rule rule;
    std::string signal;
    std::string other_signal;
    std::optional<int> slot;
    std::optional<int> cycle;
    std::optional<VariantIndex> variant;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }
    bool has(Rule rule) const noexcept;
};

/// Checks a multischedule against `instance` from scratch: every variant's
/// native view is checked for rules NodeExclusivity..MissingSignal, and the
/// shared schedule for SlotNodeConflict and SmemOverlap. Exclusion
/// relations are recomputed here from the variant matrix.
/// Throws ScheduleReferenceError on unknown signal ids.
ValidationReport validate_multischedule(const ScheduleDocument& schedule, const Instance& instance);

/// Checks one variant's native schedule (`schedule.variant` must be set).
ValidationReport validate_native_schedule(const ScheduleDocument& schedule, const Instance& instance);

/// One JSON object per line.
std::string violation_to_json(const Violation& v);

}  // namespace flexmv
