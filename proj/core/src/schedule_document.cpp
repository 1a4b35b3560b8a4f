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

#include "flexmv/schedule_document.hpp"

#include <json.hpp>

namespace flexmv {

using nlohmann::json;

std::optional<std::pair<int, ScheduledSignal>> ScheduleDocument::find(const std::string& signal_id) const {
    for (const auto& slot : slots) {
        for (const auto& p : slot.placements) {
            if (p.signal == signal_id) return std::make_pair(slot.index, p);
        }
    }
    return std::nullopt;
}

std::string serialize_schedule(const ScheduleDocument& doc) {
    json out;
    const auto& c = doc.config;
    out["config"] = {{"cycle_us", c.cycle_us},
                     {"hyperperiod_cycles", c.hyperperiod_cycles},
                     {"payload_bits", c.payload_bits},
                     {"static_slots", c.static_slots},
                     {"slot_us", c.slot_us}};
    if (doc.strategy) out["strategy"] = *doc.strategy;
    if (doc.variant) out["variant"] = *doc.variant;
    out["slot_count"] = doc.slots.size();
    json slots = json::array();
    for (const auto& s : doc.slots) {
        json placements = json::array();
        for (const auto& p : s.placements) {
            placements.push_back({{"signal", p.signal},
                                  {"first_cycle", p.first_cycle},
                                  {"offset_bits", p.offset_bits},
                                  {"cycles", p.cycles}});
        }
        slots.push_back({{"index", s.index}, {"nodes", s.nodes}, {"placements", std::move(placements)}});
    }
    out["slots"] = std::move(slots);
    return out.dump(2) + "\n";
}

ScheduleDocument parse_schedule(std::string_view json_text, const Instance* instance) {
    ScheduleDocument doc;
    try {
        const json in = json::parse(json_text);
        if (!in.is_object()) throw ScheduleFormatError("schedule document must be a JSON object");
        if (auto c = in.find("config"); c != in.end()) {
            doc.config.cycle_us = c->at("cycle_us").get<Microseconds>();
            doc.config.hyperperiod_cycles = c->at("hyperperiod_cycles").get<int>();
            doc.config.payload_bits = c->at("payload_bits").get<int>();
            doc.config.static_slots = c->value("static_slots", 0);
            doc.config.slot_us = c->value("slot_us", Microseconds{0});
        } else if (instance) {
            doc.config = instance->config;
        }
        if (auto s = in.find("strategy"); s != in.end() && s->is_string()) doc.strategy = s->get<std::string>();
        if (auto v = in.find("variant"); v != in.end() && v->is_number_integer()) {
            doc.variant = v->get<VariantIndex>();
        }
        const auto& slots = in.at("slots");
        if (!slots.is_array()) throw ScheduleFormatError("'slots' must be an array");
        for (const auto& js : slots) {
            ScheduleSlot slot;
            slot.index = js.at("index").get<int>();
            if (auto n = js.find("nodes"); n != js.end()) slot.nodes = n->get<std::vector<NodeId>>();
            for (const auto& jp : js.at("placements")) {
                ScheduledSignal p;
                p.signal = jp.at("signal").get<std::string>();
                p.first_cycle = jp.at("first_cycle").get<int>();
                p.offset_bits = jp.at("offset_bits").get<int>();
                if (auto cy = jp.find("cycles"); cy != jp.end()) {
                    p.cycles = cy->get<std::vector<int>>();
                } else if (instance) {
                    if (auto idx = instance->find_signal(p.signal)) {
                        const auto& sig = instance->signals[*idx];
                        const int period = static_cast<int>(sig.period_us / instance->config.cycle_us);
                        const int hyper = instance->config.hyperperiod_cycles;
                        if (period > 0 && hyper > 0) {
                            for (int k = 0; k < job_count(period, hyper); ++k) {
                                p.cycles.push_back(job_cycle(p.first_cycle, k, period, hyper));
                            }
                        }
                    }
                }
                slot.placements.push_back(std::move(p));
            }
            doc.slots.push_back(std::move(slot));
        }
    } catch (const json::exception& e) {
        throw ScheduleFormatError(std::string("malformed schedule document: ") + e.what());
    }
    return doc;
}

}  // namespace flexmv
