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

#include "flexmv/multischedule.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <tuple>

namespace flexmv {

namespace {

/// Conflict mask over a frame payload; a set bit is unavailable.
class FreeBits {
public:
    explicit FreeBits(int width) : width_(width), words_((width + 63) / 64) {
        std::fill_n(bits_.begin(), words_, 0);
    }

    void block(int lo, int hi) {
        hi = std::min(hi, width_);
        while (lo < hi) {
            const int w = lo / 64;
            const int b = lo % 64;
            const int n = std::min(64 - b, hi - lo);
            const std::uint64_t run = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1) << b;
            bits_[w] |= run;
            lo += n;
        }
    }

    /// First position >= `from` with a run of `len` clear bits.
    std::optional<int> first_run(int len, int from) const {
        int pos = from;
        while (pos + len <= width_) {
            const int zero = next(pos, false);
            if (zero + len > width_) return std::nullopt;
            const int one = next(zero, true);
            if (one - zero >= len) return zero;
            pos = one;
        }
        return std::nullopt;
    }

private:
    /// Index of the first bit >= `from` equal to `value`, or width.
    int next(int from, bool value) const {
        int w = from / 64;
        if (w >= words_) return width_;
        std::uint64_t word = value ? bits_[w] : ~bits_[w];
        word &= ~std::uint64_t{0} << (from % 64);
        while (true) {
            if (word) return std::min(width_, w * 64 + std::countr_zero(word));
            if (++w >= words_) return width_;
            word = value ? bits_[w] : ~bits_[w];
        }
    }

    static constexpr int kWords = (kMaxPayloadBits + 63) / 64;
    int width_;
    int words_;
    std::array<std::uint64_t, kWords> bits_;
};

bool overlaps(int a_lo, int a_len, int b_lo, int b_len) noexcept {
    return a_lo < b_lo + b_len && b_lo < a_lo + a_len;
}

}  // namespace

std::optional<int> find_suitable_offset(const Multiframe& frame, SignalIndex signal, int length_bits,
                                        const ExclusionMatrices& mems, int payload_bits, int min_offset) {
    if (length_bits > payload_bits || min_offset + length_bits > payload_bits) return std::nullopt;
    FreeBits free(payload_bits);
    for (const auto& e : frame.entries) {
        if (mems.signals_conflict(e.signal, signal)) free.block(e.offset_bits, e.offset_bits + e.length_bits);
    }
    return free.first_run(length_bits, std::max(0, min_offset));
}

Multischedule::Multischedule(const Instance& instance)
    : config_(instance.config), placements_(instance.signals.size()) {
    traits_.reserve(instance.signals.size());
    for (const auto& s : instance.signals) {
        traits_.push_back({s.node, s.length_bits, round_time_constraints(s, instance.config)});
    }
}

bool Multischedule::node_admitted(const Slot& slot, NodeId node, const ExclusionMatrices& mems) const {
    const auto row = mems.node_index(node);
    for (auto other : slot.nodes) {
        if (mems.nmem().test(row, mems.node_index(other))) return false;
    }
    return true;
}

std::optional<Placement> Multischedule::find_position_for_signal(SignalIndex signal,
                                                                 const ExclusionMatrices& mems,
                                                                 const std::optional<Placement>& after) const {
    const auto& t = traits_.at(signal);
    const int first_slot = after ? after->slot : 0;
    for (int s = first_slot; s < static_cast<int>(slots_.size()); ++s) {
        const Slot& slot = slots_[s];
        if (!node_admitted(slot, t.node, mems)) continue;
        const bool resume_slot = after && s == after->slot;
        const int first_cycle = resume_slot ? std::max(after->first_cycle + 1, t.window.release_cycle)
                                            : t.window.release_cycle;
        for (int c = first_cycle; c <= t.window.deadline_cycle; ++c) {
            if (auto off = find_suitable_offset(slot.frames[c], signal, t.length_bits, mems, config_.payload_bits)) {
                return Placement{s, c, *off};
            }
        }
    }
    return std::nullopt;
}

bool Multischedule::fits(SignalIndex signal, const Placement& p, const ExclusionMatrices& mems) const {
    const auto& t = traits_.at(signal);
    if (p.slot < 0 || p.slot >= static_cast<int>(slots_.size())) return false;
    if (p.first_cycle < t.window.release_cycle || p.first_cycle > t.window.deadline_cycle) return false;
    if (p.offset_bits < 0 || p.offset_bits + t.length_bits > config_.payload_bits) return false;
    const Slot& slot = slots_[p.slot];
    if (!node_admitted(slot, t.node, mems)) return false;
    const int hyper = config_.hyperperiod_cycles;
    for (int k = 0; k < job_count(t.window.period_cycles, hyper); ++k) {
        const auto& frame = slot.frames[job_cycle(p.first_cycle, k, t.window.period_cycles, hyper)];
        for (const auto& e : frame.entries) {
            if (overlaps(e.offset_bits, e.length_bits, p.offset_bits, t.length_bits) &&
                mems.signals_conflict(e.signal, signal)) {
                return false;
            }
        }
    }
    return true;
}

void Multischedule::commit(SignalIndex signal, const Placement& p) {
    const auto& t = traits_[signal];
    Slot& slot = slots_[p.slot];
    if (std::find(slot.nodes.begin(), slot.nodes.end(), t.node) == slot.nodes.end()) {
        slot.nodes.push_back(t.node);
    }
    const int hyper = config_.hyperperiod_cycles;
    for (int k = 0; k < job_count(t.window.period_cycles, hyper); ++k) {
        slot.frames[job_cycle(p.first_cycle, k, t.window.period_cycles, hyper)].entries.push_back(
            {signal, p.offset_bits, t.length_bits});
    }
    placements_[signal] = p;
}

Placement Multischedule::place_signal_to_schedule(SignalIndex signal, const ExclusionMatrices& mems) {
    if (placements_.at(signal)) throw std::logic_error("signal already placed");
    std::optional<Placement> cursor;
    while ((cursor = find_position_for_signal(signal, mems, cursor))) {
        if (fits(signal, *cursor, mems)) {
            commit(signal, *cursor);
            return *cursor;
        }
    }
    const Placement fresh{allocate_slot(), traits_[signal].window.release_cycle, 0};
    if (!fits(signal, fresh, mems)) throw std::logic_error("fresh slot rejected a signal");
    commit(signal, fresh);
    return fresh;
}

void Multischedule::place_at(SignalIndex signal, const Placement& p, const ExclusionMatrices& mems) {
    if (placements_.at(signal)) throw std::logic_error("signal already placed");
    if (!fits(signal, p, mems)) throw std::logic_error("placement conflicts with the schedule");
    commit(signal, p);
}

int Multischedule::allocate_slot() {
    Slot slot;
    slot.index = static_cast<int>(slots_.size());
    slot.frames.resize(static_cast<std::size_t>(config_.hyperperiod_cycles));
    slots_.push_back(std::move(slot));
    return slots_.back().index;
}

namespace {

template <typename Keep>
ScheduleDocument build_document(const Multischedule& ms, const Instance& instance, Keep keep) {
    ScheduleDocument doc;
    doc.config = ms.config();
    doc.slots.resize(ms.slot_count());
    for (std::size_t i = 0; i < ms.slot_count(); ++i) doc.slots[i].index = static_cast<int>(i);

    std::vector<std::vector<SignalIndex>> members(ms.slot_count());
    for (std::size_t s = 0; s < ms.signal_count(); ++s) {
        const auto idx = static_cast<SignalIndex>(s);
        const auto& p = ms.placement(idx);
        if (p && keep(idx)) members[p->slot].push_back(idx);
    }

    const int hyper = ms.config().hyperperiod_cycles;
    for (std::size_t i = 0; i < members.size(); ++i) {
        auto& list = members[i];
        std::sort(list.begin(), list.end(), [&](SignalIndex a, SignalIndex b) {
            const auto& pa = *ms.placement(a);
            const auto& pb = *ms.placement(b);
            return std::tie(pa.first_cycle, pa.offset_bits, a) < std::tie(pb.first_cycle, pb.offset_bits, b);
        });
        auto& slot = doc.slots[i];
        for (auto s : list) {
            const auto& p = *ms.placement(s);
            ScheduledSignal out{instance.signals[s].id, p.first_cycle, p.offset_bits, {}};
            const int period = ms.window(s).period_cycles;
            for (int k = 0; k < job_count(period, hyper); ++k) out.cycles.push_back(job_cycle(p.first_cycle, k, period, hyper));
            slot.placements.push_back(std::move(out));
            slot.nodes.push_back(ms.node(s));
        }
        std::sort(slot.nodes.begin(), slot.nodes.end());
        slot.nodes.erase(std::unique(slot.nodes.begin(), slot.nodes.end()), slot.nodes.end());
    }
    return doc;
}

}  // namespace

ScheduleDocument to_schedule_document(const Multischedule& ms, const Instance& instance) {
    return build_document(ms, instance, [](SignalIndex) { return true; });
}

ScheduleDocument extract_native_schedule(const Multischedule& ms, const Instance& instance,
                                         VariantIndex variant) {
    if (variant >= instance.variants.variant_count()) throw std::out_of_range("variant index out of range");
    auto doc = build_document(ms, instance,
                              [&](SignalIndex s) { return instance.variants.uses(s, variant); });
    doc.variant = variant;
    return doc;
}

}  // namespace flexmv
