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

#include "properties.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "flexmv/benchgen.hpp"
#include "flexmv/exclusion.hpp"
#include "flexmv/instance_io.hpp"
#include "flexmv/scheduler.hpp"
#include "flexmv/validator.hpp"
#include "oracles.hpp"
#include "random_instance.hpp"

namespace flexmv::testing {

namespace {

std::string serialized(const Instance& inst, OrderingStrategy strategy) {
    const auto result = schedule(inst, strategy);
    auto doc = to_schedule_document(result.multischedule, inst);
    doc.strategy = std::string(to_string(strategy));
    return serialize_schedule(doc);
}

ScheduledSignal take(ScheduleDocument& doc, const std::string& id) {
    for (auto& slot : doc.slots) {
        auto it = std::find_if(slot.placements.begin(), slot.placements.end(),
                               [&](const ScheduledSignal& p) { return p.signal == id; });
        if (it != slot.placements.end()) {
            ScheduledSignal out = *it;
            slot.placements.erase(it);
            return out;
        }
    }
    throw std::logic_error("no placement for " + id);
}

void put(ScheduleDocument& doc, const Instance& inst, int slot, ScheduledSignal p) {
    const auto& s = inst.signals[*inst.find_signal(p.signal)];
    p.cycles = oracle_job_cycles(p.first_cycle, static_cast<int>(s.period_us / inst.config.cycle_us),
                                 inst.config.hyperperiod_cycles);
    auto& target = doc.slots.at(static_cast<std::size_t>(slot));
    if (std::find(target.nodes.begin(), target.nodes.end(), s.node) == target.nodes.end()) {
        target.nodes.push_back(s.node);
        std::sort(target.nodes.begin(), target.nodes.end());
    }
    target.placements.push_back(std::move(p));
}

/// Moves `mover` onto `anchor`'s slot, first cycle and offset.
void stack_on(ScheduleDocument& doc, const Instance& inst, const std::string& anchor, const std::string& mover) {
    const auto [slot, a] = *doc.find(anchor);
    auto p = take(doc, mover);
    p.first_cycle = a.first_cycle;
    p.offset_bits = a.offset_bits;
    put(doc, inst, slot, std::move(p));
}

struct Fault {
    Rule rule;
    /// Mutates the document; returns false when the fault cannot be injected.
    std::function<bool(ScheduleDocument&)> inject;
};

std::vector<Fault> example_faults(const Instance& inst) {
    return {
        {Rule::NodeExclusivity,
         [&](ScheduleDocument& d) {
             auto p = take(d, "H");
             p.first_cycle = 0;
             p.offset_bits = 8;
             put(d, inst, d.find("A")->first, std::move(p));
             return true;
         }},
        {Rule::BitOverlap,
         [&](ScheduleDocument& d) {
             auto p = take(d, "C");
             p.first_cycle = 1;
             p.offset_bits = 8;
             put(d, inst, d.find("B")->first, std::move(p));
             return true;
         }},
        {Rule::PayloadBounds,
         [&](ScheduleDocument& d) {
             const int slot = d.find("B")->first;
             auto p = take(d, "B");
             p.offset_bits = 12;
             put(d, inst, slot, std::move(p));
             return true;
         }},
        {Rule::Periodicity,
         [&](ScheduleDocument& d) {
             for (auto& slot : d.slots) {
                 for (auto& p : slot.placements) {
                     if (p.signal == "A") p.cycles.pop_back();
                 }
             }
             return true;
         }},
        {Rule::TimeWindow,
         [&](ScheduleDocument& d) {
             const int slot = d.find("A")->first;
             auto p = take(d, "E");
             p.first_cycle = 0;
             p.offset_bits = 0;
             put(d, inst, slot, std::move(p));
             return true;
         }},
        {Rule::MissingSignal,
         [&](ScheduleDocument& d) {
             take(d, "D");
             return true;
         }},
    };
}

std::vector<Fault> random_faults(const Instance& inst, std::mt19937_64& rng) {
    const auto n = inst.signals.size();
    auto any_signal = [&, n] { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
    auto find_pair = [&inst, n](auto pred) -> std::optional<std::pair<std::size_t, std::size_t>> {
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                if (a != b && pred(a, b)) return std::pair{a, b};
            }
        }
        return std::nullopt;
    };
    const auto& cfg = inst.config;
    return {
        {Rule::NodeExclusivity,
         [&, find_pair](ScheduleDocument& d) {
             auto pair = find_pair([&](std::size_t a, std::size_t b) {
                 return inst.signals[a].node != inst.signals[b].node &&
                        oracle_signals_co_occur(inst, static_cast<SignalIndex>(a), static_cast<SignalIndex>(b));
             });
             if (!pair) return false;
             stack_on(d, inst, inst.signals[pair->first].id, inst.signals[pair->second].id);
             return true;
         }},
        {Rule::BitOverlap,
         [&, find_pair](ScheduleDocument& d) {
             auto pair = find_pair([&](std::size_t a, std::size_t b) {
                 return oracle_signals_co_occur(inst, static_cast<SignalIndex>(a), static_cast<SignalIndex>(b));
             });
             if (!pair) return false;
             stack_on(d, inst, inst.signals[pair->first].id, inst.signals[pair->second].id);
             return true;
         }},
        {Rule::PayloadBounds,
         [&, any_signal](ScheduleDocument& d) {
             const auto& s = inst.signals[any_signal()];
             const int slot = d.find(s.id)->first;
             auto p = take(d, s.id);
             p.offset_bits = cfg.payload_bits - s.length_bits + 1;
             put(d, inst, slot, std::move(p));
             return true;
         }},
        {Rule::Periodicity,
         [&, any_signal](ScheduleDocument& d) {
             const auto& s = inst.signals[any_signal()];
             const auto [slot, p] = *d.find(s.id);
             if (p.cycles.size() > 1) {
                 auto q = take(d, s.id);
                 q.cycles.pop_back();
                 d.slots[static_cast<std::size_t>(slot)].placements.push_back(q);
             } else {
                 d.slots[static_cast<std::size_t>(slot)].placements.push_back(p);
             }
             return true;
         }},
        {Rule::TimeWindow,
         [&, any_signal](ScheduleDocument& d) {
             const auto& s = inst.signals[any_signal()];
             const auto w = *oracle_window(s, cfg);
             int first = -1;
             if (w.deadline_cycle + 1 < cfg.hyperperiod_cycles) {
                 first = w.deadline_cycle + 1;
             } else if (w.release_cycle > 0) {
                 first = w.release_cycle - 1;
             } else {
                 return false;
             }
             const int slot = d.find(s.id)->first;
             auto p = take(d, s.id);
             p.first_cycle = first;
             put(d, inst, slot, std::move(p));
             return true;
         }},
        {Rule::MissingSignal,
         [&, any_signal](ScheduleDocument& d) {
             take(d, inst.signals[any_signal()].id);
             return true;
         }},
    };
}

}  // namespace

PropertyOutcome check_determinism(int instances, std::uint64_t seed) {
    PropertyOutcome out{"determinism", true, {}};
    std::mt19937_64 rng(seed);
    std::vector<Instance> pool;
    for (int i = 0; i < instances; ++i) pool.push_back(random_small_instance(rng));
    const auto profile = *find_profile("set2");
    const auto a = serialize_instance(generate_instance(profile, seed));
    const auto b = serialize_instance(generate_instance(profile, seed));
    if (a != b) {
        out.ok = false;
        out.detail = "generator output differs between runs";
        return out;
    }
    pool.push_back(parse_instance(a));
    for (const auto& inst : pool) {
        for (auto strategy : kAllStrategies) {
            if (serialized(inst, strategy) != serialized(inst, strategy)) {
                out.ok = false;
                out.detail = "schedule bytes differ for strategy " + std::string(to_string(strategy));
                return out;
            }
        }
    }
    out.detail = std::to_string(pool.size()) + " instances x 5 strategies";
    return out;
}

PropertyOutcome check_offset_minimality(int instances, std::uint64_t seed) {
    PropertyOutcome out{"offset_minimality", true, {}};
    std::mt19937_64 rng(seed);
    long queries = 0;
    for (int i = 0; i < instances && out.ok; ++i) {
        const auto inst = random_small_instance(rng, {12, 3, 4, 8, 4, 24});
        const auto mems = compute_mems(inst);
        const int w = inst.config.payload_bits;
        auto compare = [&](const Multiframe& frame) {
            for (std::size_t s = 0; s < inst.signals.size(); ++s) {
                const auto idx = static_cast<SignalIndex>(s);
                const int len = inst.signals[s].length_bits;
                ++queries;
                if (find_suitable_offset(frame, idx, len, mems, w) != oracle_offset(inst, frame, idx, len)) {
                    out.ok = false;
                    out.detail = "mismatch for " + inst.signals[s].id;
                    return;
                }
            }
        };
        // random residents, overlapping freely
        for (int f = 0; f < 8; ++f) {
            Multiframe frame;
            const int count = std::uniform_int_distribution<int>(0, 6)(rng);
            for (int e = 0; e < count; ++e) {
                const auto sig = std::uniform_int_distribution<std::size_t>(0, inst.signals.size() - 1)(rng);
                const int len = inst.signals[sig].length_bits;
                frame.entries.push_back(
                    {static_cast<SignalIndex>(sig), std::uniform_int_distribution<int>(0, w - len)(rng), len});
            }
            compare(frame);
        }
        const auto result = schedule(inst, OrderingStrategy::FF);
        for (const auto& slot : result.multischedule.slots()) {
            for (const auto& frame : slot.frames) compare(frame);
        }
    }
    if (out.ok) out.detail = std::to_string(queries) + " queries";
    return out;
}

PropertyOutcome check_periodic_jobs(int instances, std::uint64_t seed) {
    PropertyOutcome out{"periodic_jobs", true, {}};
    std::mt19937_64 rng(seed);
    long checked = 0;
    for (int i = 0; i < instances && out.ok; ++i) {
        const auto inst = random_small_instance(rng);
        const int h = inst.config.hyperperiod_cycles;
        for (auto strategy : kAllStrategies) {
            const auto result = schedule(inst, strategy);
            const auto& ms = result.multischedule;
            for (std::size_t s = 0; s < inst.signals.size(); ++s) {
                const auto idx = static_cast<SignalIndex>(s);
                const auto& p = ms.placement(idx);
                const int period = static_cast<int>(inst.signals[s].period_us / inst.config.cycle_us);
                auto expected = oracle_job_cycles(p->first_cycle, period, h);
                std::sort(expected.begin(), expected.end());
                std::vector<int> seen;
                for (int c = 0; c < h; ++c) {
                    for (const auto& e : ms.slots()[static_cast<std::size_t>(p->slot)].frames[c].entries) {
                        if (e.signal != idx) continue;
                        if (e.offset_bits != p->offset_bits || e.length_bits != inst.signals[s].length_bits) {
                            out.ok = false;
                        }
                        seen.push_back(c);
                    }
                }
                for (std::size_t other = 0; other < ms.slot_count(); ++other) {
                    if (static_cast<int>(other) == p->slot) continue;
                    for (const auto& frame : ms.slots()[other].frames) {
                        for (const auto& e : frame.entries) out.ok = out.ok && e.signal != idx;
                    }
                }
                if (seen != expected || static_cast<int>(seen.size()) != h / period) out.ok = false;
                ++checked;
                if (!out.ok) {
                    out.detail = inst.signals[s].id + " under " + std::string(to_string(strategy));
                    return out;
                }
            }
        }
    }
    out.detail = std::to_string(checked) + " placements";
    return out;
}

std::vector<PropertyOutcome> check_validator_single_faults(const std::filesystem::path& example_dir, int instances,
                                                           std::uint64_t seed) {
    const auto example = load_instance(example_dir / "instance.json");
    const auto reference = parse_schedule(read_text_file(example_dir / "reference_schedule.json"), &example);
    const bool reference_ok = validate_multischedule(reference, example).ok();

    struct Tally {
        int injected = 0;
        int detected = 0;
        int false_alarms = 0;
    };
    std::vector<Tally> tally(6);
    std::vector<Rule> rules;

    const auto faults = example_faults(example);
    for (std::size_t i = 0; i < faults.size(); ++i) {
        rules.push_back(faults[i].rule);
        auto doc = reference;
        faults[i].inject(doc);
        ++tally[i].injected;
        if (validate_multischedule(doc, example).has(faults[i].rule)) ++tally[i].detected;
    }

    std::mt19937_64 rng(seed);
    int clean_failures = 0;
    for (int n = 0; n < instances; ++n) {
        const auto inst = random_small_instance(rng);
        const auto result = schedule(inst, OrderingStrategy::FFP);
        const auto doc = to_schedule_document(result.multischedule, inst);
        if (!validate_multischedule(doc, inst).ok()) ++clean_failures;
        const auto mutations = random_faults(inst, rng);
        for (std::size_t i = 0; i < mutations.size(); ++i) {
            auto bad = doc;
            if (!mutations[i].inject(bad)) continue;
            ++tally[i].injected;
            if (validate_multischedule(bad, inst).has(mutations[i].rule)) ++tally[i].detected;
        }
    }

    std::vector<PropertyOutcome> out;
    for (std::size_t i = 0; i < rules.size(); ++i) {
        PropertyOutcome o;
        o.name = "validator_detects_" + std::string(to_string(rules[i]));
        o.ok = reference_ok && clean_failures == 0 && tally[i].injected > 1 && tally[i].detected == tally[i].injected;
        std::ostringstream d;
        d << tally[i].detected << "/" << tally[i].injected << " faults detected";
        if (!reference_ok) d << "; reference schedule rejected";
        if (clean_failures) d << "; " << clean_failures << " clean schedules rejected";
        o.detail = d.str();
        out.push_back(std::move(o));
    }
    return out;
}

std::vector<PropertyOutcome> run_property_suite(const std::filesystem::path& example_dir) {
    std::vector<PropertyOutcome> out;
    out.push_back(check_determinism(200, 11));
    out.push_back(check_offset_minimality(300, 12));
    out.push_back(check_periodic_jobs(300, 13));
    for (auto& o : check_validator_single_faults(example_dir, 300, 14)) out.push_back(std::move(o));
    return out;
}

}  // namespace flexmv::testing
