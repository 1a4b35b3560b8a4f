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

#include "flexmv/validator.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <json.hpp>

namespace flexmv {

std::string_view to_string(Rule rule) noexcept {
    switch (rule) {
        case Rule::NodeExclusivity: return "node_exclusivity";
        case Rule::BitOverlap: return "bit_overlap";
        case Rule::PayloadBounds: return "payload_bounds";
        case Rule::Periodicity: return "periodicity";
        case Rule::TimeWindow: return "time_window";
        case Rule::MissingSignal: return "missing_signal";
        case Rule::SlotNodeConflict: return "slot_node_conflict";
        case Rule::SmemOverlap: return "smem_overlap";
        case Rule::ForeignSignal: return "foreign_signal";
    }
    return "unknown";
}

bool ValidationReport::has(Rule rule) const noexcept {
    return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.rule == rule; });
}

namespace {

struct Resolved {
    SignalIndex signal;
    int slot;
    int first_cycle;
    int offset;
    int length;
    std::vector<int> cycles;
};

class Checker {
public:
    Checker(const ScheduleDocument& doc, const Instance& inst) : inst_(inst) {
        hyper_ = inst.config.hyperperiod_cycles;
        placed_.assign(inst.signals.size(), -1);
        for (const auto& slot : doc.slots) {
            for (const auto& p : slot.placements) {
                auto idx = inst.find_signal(p.signal);
                if (!idx) throw ScheduleReferenceError("schedule references unknown signal '" + p.signal + "'");
                if (placed_[*idx] >= 0) {
                    add({Rule::Periodicity, p.signal, {}, slot.index, {}, {}, "signal placed more than once"});
                    continue;
                }
                placed_[*idx] = static_cast<int>(items_.size());
                Resolved r{*idx, slot.index, p.first_cycle, p.offset_bits, inst.signals[*idx].length_bits, p.cycles};
                if (r.cycles.empty()) r.cycles = expected_cycles(*idx, p.first_cycle);
                items_.push_back(std::move(r));
            }
        }
    }

    ValidationReport take() { return std::move(report_); }

    void check_signal_rules() {
        const auto& cfg = inst_.config;
        for (const auto& r : items_) {
            const auto& sig = inst_.signals[r.signal];
            if (r.offset < 0 || r.offset + r.length > cfg.payload_bits) {
                add({Rule::PayloadBounds, sig.id, {}, r.slot, {}, {},
                     "bits [" + std::to_string(r.offset) + ", " + std::to_string(r.offset + r.length) +
                         ") outside payload of " + std::to_string(cfg.payload_bits)});
            }
            auto got = r.cycles;
            std::sort(got.begin(), got.end());
            auto want = expected_cycles(r.signal, r.first_cycle);
            std::sort(want.begin(), want.end());
            const bool in_range = std::all_of(got.begin(), got.end(), [&](int c) { return c >= 0 && c < hyper_; });
            if (got != want || !in_range) {
                add({Rule::Periodicity, sig.id, {}, r.slot, {}, {}, "job cycles are not first_cycle + k*period"});
            }
            const auto [release, deadline] = window(sig);
            if (r.first_cycle < release || r.first_cycle > deadline) {
                add({Rule::TimeWindow, sig.id, {}, r.slot, r.first_cycle, {},
                     "first job outside cycles [" + std::to_string(release) + ", " + std::to_string(deadline) + "]"});
            }
        }
    }

    /// Rules that hold per variant's native view.
    void check_variant(VariantIndex v) {
        std::vector<const Resolved*> mine;
        for (std::size_t s = 0; s < inst_.signals.size(); ++s) {
            if (!inst_.variants.uses(static_cast<SignalIndex>(s), v)) continue;
            if (placed_[s] < 0) {
                add({Rule::MissingSignal, inst_.signals[s].id, {}, {}, {}, v, "signal used by variant is not placed"});
            } else {
                mine.push_back(&items_[placed_[s]]);
            }
        }

        std::map<int, std::set<NodeId>> slot_nodes;
        for (auto* r : mine) slot_nodes[r->slot].insert(inst_.signals[r->signal].node);
        for (const auto& [slot, nodes] : slot_nodes) {
            if (nodes.size() > 1) {
                add({Rule::NodeExclusivity, {}, {}, slot, {}, v,
                     std::to_string(nodes.size()) + " nodes transmit in one slot"});
            }
        }

        std::set<std::pair<SignalIndex, SignalIndex>> reported;
        for_each_frame_pair(mine, [&](const Resolved& a, const Resolved& b, int cycle) {
            const auto key = std::minmax(a.signal, b.signal);
            if (!reported.insert(key).second) return;
            add({Rule::BitOverlap, inst_.signals[a.signal].id, inst_.signals[b.signal].id, a.slot, cycle, v,
                 "overlapping bit ranges in one frame"});
        });
    }

    void check_shared() {
        std::vector<const Resolved*> all;
        for (const auto& r : items_) all.push_back(&r);

        std::map<int, std::set<NodeId>> slot_nodes;
        for (auto* r : all) slot_nodes[r->slot].insert(inst_.signals[r->signal].node);
        for (const auto& [slot, nodes] : slot_nodes) {
            for (auto p = nodes.begin(); p != nodes.end(); ++p) {
                for (auto q = std::next(p); q != nodes.end(); ++q) {
                    if (nodes_meet(*p, *q)) {
                        add({Rule::SlotNodeConflict, {}, {}, slot, {}, {},
                             "nodes " + std::to_string(*p) + " and " + std::to_string(*q) + " share a variant"});
                    }
                }
            }
        }

        std::set<std::pair<SignalIndex, SignalIndex>> reported;
        for_each_frame_pair(all, [&](const Resolved& a, const Resolved& b, int cycle) {
            if (!signals_meet(a.signal, b.signal)) return;
            const auto key = std::minmax(a.signal, b.signal);
            if (!reported.insert(key).second) return;
            add({Rule::SmemOverlap, inst_.signals[a.signal].id, inst_.signals[b.signal].id, a.slot, cycle, {},
                 "overlapping signals that co-occur in a variant"});
        });
    }

    void check_foreign(VariantIndex v) {
        for (const auto& r : items_) {
            if (!inst_.variants.uses(r.signal, v)) {
                add({Rule::ForeignSignal, inst_.signals[r.signal].id, {}, r.slot, {}, v, "signal not used by variant"});
            }
        }
    }

private:
    void add(Violation v) { report_.violations.push_back(std::move(v)); }

    std::vector<int> expected_cycles(SignalIndex s, int first) const {
        const auto& sig = inst_.signals[s];
        const auto period = static_cast<int>(sig.period_us / inst_.config.cycle_us);
        std::vector<int> out;
        if (period <= 0) return out;
        for (int c = first; c < first + hyper_; c += period) out.push_back(((c % hyper_) + hyper_) % hyper_);
        return out;
    }

    std::pair<int, int> window(const Signal& sig) const {
        const auto f = inst_.config.cycle_us;
        const auto period = sig.period_us / f;
        const auto release = (sig.release_us + f - 1) / f;
        auto deadline = (sig.release_us + sig.deadline_us) / f - 1;
        deadline = std::min({deadline, release + period - 1, static_cast<Microseconds>(hyper_ - 1)});
        return {static_cast<int>(release), static_cast<int>(deadline)};
    }

    bool signals_meet(SignalIndex a, SignalIndex b) const {
        if (a == b) return true;
        for (std::size_t v = 0; v < inst_.variants.variant_count(); ++v) {
            const auto vi = static_cast<VariantIndex>(v);
            if (inst_.variants.uses(a, vi) && inst_.variants.uses(b, vi)) return true;
        }
        return false;
    }

    bool nodes_meet(NodeId p, NodeId q) const {
        for (std::size_t v = 0; v < inst_.variants.variant_count(); ++v) {
            bool has_p = false, has_q = false;
            for (std::size_t s = 0; s < inst_.signals.size(); ++s) {
                if (!inst_.variants.uses(static_cast<SignalIndex>(s), static_cast<VariantIndex>(v))) continue;
                has_p = has_p || inst_.signals[s].node == p;
                has_q = has_q || inst_.signals[s].node == q;
            }
            if (has_p && has_q) return true;
        }
        return false;
    }

    /// Calls fn(a, b, cycle) for every pair of items whose bit ranges meet
    /// in the same (slot, cycle).
    template <typename Fn>
    void for_each_frame_pair(const std::vector<const Resolved*>& items, Fn fn) const {
        std::map<int, std::size_t> dense;
        for (auto* r : items) dense.emplace(r->slot, 0);
        std::size_t next = 0;
        for (auto& [slot, idx] : dense) idx = next++;
        std::vector<std::vector<const Resolved*>> frames(dense.size() * static_cast<std::size_t>(hyper_));
        for (auto* r : items) {
            const auto base = dense[r->slot] * static_cast<std::size_t>(hyper_);
            for (int c : r->cycles) {
                if (c >= 0 && c < hyper_) frames[base + static_cast<std::size_t>(c)].push_back(r);
            }
        }
        for (std::size_t f = 0; f < frames.size(); ++f) {
            const auto& list = frames[f];
            const int cycle = static_cast<int>(f % static_cast<std::size_t>(hyper_));
            for (std::size_t i = 0; i < list.size(); ++i) {
                for (std::size_t j = i + 1; j < list.size(); ++j) {
                    const auto& a = *list[i];
                    const auto& b = *list[j];
                    if (a.offset < b.offset + b.length && b.offset < a.offset + a.length) fn(a, b, cycle);
                }
            }
        }
    }

    const Instance& inst_;
    int hyper_ = 1;
    std::vector<int> placed_;
    std::vector<Resolved> items_;
    ValidationReport report_;
};

}  // namespace

ValidationReport validate_multischedule(const ScheduleDocument& schedule, const Instance& instance) {
    Checker check(schedule, instance);
    check.check_signal_rules();
    for (std::size_t v = 0; v < instance.variants.variant_count(); ++v) check.check_variant(static_cast<VariantIndex>(v));
    check.check_shared();
    return check.take();
}

ValidationReport validate_native_schedule(const ScheduleDocument& schedule, const Instance& instance) {
    if (!schedule.variant || *schedule.variant >= instance.variants.variant_count()) {
        throw ScheduleReferenceError("native schedule does not name a valid variant");
    }
    Checker check(schedule, instance);
    check.check_signal_rules();
    check.check_variant(*schedule.variant);
    check.check_foreign(*schedule.variant);
    return check.take();
}

std::string violation_to_json(const Violation& v) {
    nlohmann::json j;
    j["rule"] = to_string(v.rule);
    if (!v.signal.empty()) j["signal"] = v.signal;
    if (!v.other_signal.empty()) j["other_signal"] = v.other_signal;
    if (v.slot) j["slot"] = *v.slot;
    if (v.cycle) j["cycle"] = *v.cycle;
    if (v.variant) j["variant"] = *v.variant;
    j["detail"] = v.detail;
    return j.dump();
}

}  // namespace flexmv
