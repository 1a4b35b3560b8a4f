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

#include "flexmv/scheduler.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

namespace flexmv {

std::string_view to_string(OrderingStrategy s) noexcept {
    switch (s) {
        case OrderingStrategy::FF: return "ff";
        case OrderingStrategy::FFP: return "ffp";
        case OrderingStrategy::FFW: return "ffw";
        case OrderingStrategy::FFL: return "ffl";
        case OrderingStrategy::FFC: return "ffc";
    }
    return "?";
}

std::optional<OrderingStrategy> parse_strategy(std::string_view name) noexcept {
    for (auto s : kAllStrategies) {
        if (to_string(s) == name) return s;
    }
    return std::nullopt;
}

std::vector<SignalIndex> sort_signals(const std::vector<Signal>& signals,
                                      const std::vector<CycleWindow>& windows, OrderingStrategy strategy) {
    std::vector<SignalIndex> order(signals.size());
    std::iota(order.begin(), order.end(), SignalIndex{0});

    auto by_period = [&](SignalIndex a, SignalIndex b) { return signals[a].period_us < signals[b].period_us; };
    auto by_window = [&](SignalIndex a, SignalIndex b) { return windows[a].width() < windows[b].width(); };
    auto by_length = [&](SignalIndex a, SignalIndex b) { return signals[a].length_bits > signals[b].length_bits; };
    auto by_node = [&](SignalIndex a, SignalIndex b) { return signals[a].node < signals[b].node; };

    switch (strategy) {
        case OrderingStrategy::FF:
            break;
        case OrderingStrategy::FFP:
            std::stable_sort(order.begin(), order.end(), by_period);
            break;
        case OrderingStrategy::FFW:
            std::stable_sort(order.begin(), order.end(), by_window);
            break;
        case OrderingStrategy::FFL:
            std::stable_sort(order.begin(), order.end(), by_length);
            break;
        case OrderingStrategy::FFC:
            std::stable_sort(order.begin(), order.end(), by_length);
            std::stable_sort(order.begin(), order.end(), by_window);
            std::stable_sort(order.begin(), order.end(), by_period);
            std::stable_sort(order.begin(), order.end(), by_node);
            break;
    }
    return order;
}

ScheduleResult schedule(const Instance& instance, OrderingStrategy strategy) {
    const auto start = std::chrono::steady_clock::now();

    const auto mems = compute_mems(instance);
    Multischedule ms(instance);
    std::vector<CycleWindow> windows;
    windows.reserve(instance.signals.size());
    for (std::size_t i = 0; i < instance.signals.size(); ++i) windows.push_back(ms.window(static_cast<SignalIndex>(i)));

    for (auto s : sort_signals(instance.signals, windows, strategy)) ms.place_signal_to_schedule(s, mems);

    const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::vector<Placement> placements;
    placements.reserve(instance.signals.size());
    for (std::size_t i = 0; i < instance.signals.size(); ++i) placements.push_back(*ms.placement(static_cast<SignalIndex>(i)));

    const auto slots = ms.slot_count();
    return ScheduleResult{std::move(ms), strategy, slots, elapsed, std::move(placements)};
}

}  // namespace flexmv
