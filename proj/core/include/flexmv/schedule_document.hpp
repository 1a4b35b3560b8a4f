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

namespace flexmv {

class ScheduleFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One signal's position. `cycles` lists every job cycle; when a document
/// omits it the reader derives it from first_cycle and the signal period.
struct ScheduledSignal {
    std::string signal;
    int first_cycle = 0;
    int offset_bits = 0;
    std::vector<int> cycles;

    friend bool operator==(const ScheduledSignal&, const ScheduledSignal&) = default;
};

struct ScheduleSlot {
    int index = 0;
    std::vector<NodeId> nodes;
    std::vector<ScheduledSignal> placements;

    friend bool operator==(const ScheduleSlot&, const ScheduleSlot&) = default;
};

/// Serializable form of a multischedule or of one variant's native schedule.
struct ScheduleDocument {
    FlexRayConfig config;
    std::optional<std::string> strategy;
    /// Set for native schedules.
    std::optional<VariantIndex> variant;
    std::vector<ScheduleSlot> slots;

    std::size_t slot_count() const noexcept { return slots.size(); }
    /// Finds a signal's placement and the index of the slot holding it.
    std::optional<std::pair<int, ScheduledSignal>> find(const std::string& signal_id) const;

    friend bool operator==(const ScheduleDocument&, const ScheduleDocument&) = default;
};

std::string serialize_schedule(const ScheduleDocument& doc);

/// Parses a schedule document. Job cycles missing from the document are
/// filled in from `instance` when given; otherwise they stay empty.
ScheduleDocument parse_schedule(std::string_view json_text, const Instance* instance = nullptr);

}  // namespace flexmv
