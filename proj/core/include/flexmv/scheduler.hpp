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
#include <string>
#include <string_view>
#include <vector>

#include "flexmv/exclusion.hpp"
#include "flexmv/model.hpp"
#include "flexmv/multischedule.hpp"

namespace flexmv {

/// Signal orderings fed to the first-fit placement.
enum class OrderingStrategy {
    FF,   ///< input order
    FFP,  ///< ascending period
    FFW,  ///< ascending window width
    FFL,  ///< descending length
    FFC,  ///< stable sorts: length desc, then window asc, then period asc, then node asc
};

inline constexpr OrderingStrategy kAllStrategies[] = {OrderingStrategy::FF, OrderingStrategy::FFP,
                                                      OrderingStrategy::FFW, OrderingStrategy::FFL,
                                                      OrderingStrategy::FFC};

/// Lower-case CLI name ("ff", "ffp", ...).
std::string_view to_string(OrderingStrategy s) noexcept;
std::optional<OrderingStrategy> parse_strategy(std::string_view name) noexcept;

/// Orders signal indices by `strategy`. Every sort is stable, so ties keep
/// input order. For FFC the last sort applied (node id) is the primary key.
std::vector<SignalIndex> sort_signals(const std::vector<Signal>& signals,
                                      const std::vector<CycleWindow>& windows, OrderingStrategy strategy);

struct ScheduleResult {
    Multischedule multischedule;
    OrderingStrategy strategy;
    std::size_t slot_count = 0;
    /// Exclusion matrices, sorting and placement; parsing and output excluded.
    double wall_time_s = 0.0;
    std::vector<Placement> placements;
};

/// First-fit multi-variant scheduling. Throws InfeasibleSignalError if a
/// signal's rounded window is empty.
ScheduleResult schedule(const Instance& instance, OrderingStrategy strategy);

}  // namespace flexmv
