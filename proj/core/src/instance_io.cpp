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

#include "flexmv/instance_io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace flexmv {

using nlohmann::json;

namespace {

template <typename T>
T required(const json& obj, const char* key, const char* where) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw InstanceError(std::string("missing key '") + key + "' in " + where);
    }
    if (!it->is_number_integer() && !(std::is_same_v<T, std::string> && it->is_string())) {
        throw InstanceError(std::string("key '") + key + "' in " + where + " has the wrong type");
    }
    return it->get<T>();
}

template <typename T>
T optional_int(const json& obj, const char* key, T fallback, const char* where) {
    auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) return fallback;
    if (!it->is_number_integer()) {
        throw InstanceError(std::string("key '") + key + "' in " + where + " must be an integer");
    }
    return it->get<T>();
}

FlexRayConfig parse_config(const json& j) {
    if (!j.is_object()) throw InstanceError("'config' must be an object");
    FlexRayConfig c;
    c.cycle_us = required<Microseconds>(j, "cycle_us", "config");
    c.hyperperiod_cycles = required<int>(j, "hyperperiod_cycles", "config");
    c.payload_bits = required<int>(j, "payload_bits", "config");
    c.static_slots = optional_int<int>(j, "static_slots", 0, "config");
    c.slot_us = optional_int<Microseconds>(j, "slot_us", 0, "config");
    return c;
}

Signal parse_signal(const json& j) {
    if (!j.is_object()) throw InstanceError("each signal must be an object");
    Signal s;
    auto id = j.find("id");
    if (id == j.end() || !id->is_string()) throw InstanceError("signal 'id' must be a string");
    s.id = id->get<std::string>();
    const std::string where = "signal '" + s.id + "'";
    const auto node = required<std::int64_t>(j, "node", where.c_str());
    if (node < 0 || node > std::int64_t{UINT32_MAX}) throw InstanceError("node id out of range in " + where);
    s.node = static_cast<NodeId>(node);
    s.period_us = required<Microseconds>(j, "period_us", where.c_str());
    s.length_bits = required<int>(j, "length_bits", where.c_str());
    s.release_us = optional_int<Microseconds>(j, "release_us", 0, where.c_str());
    s.deadline_us = optional_int<Microseconds>(j, "deadline_us", s.period_us, where.c_str());
    return s;
}

}  // namespace

Instance parse_instance(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw InstanceError(std::string("malformed instance document: ") + e.what());
    }
    if (!doc.is_object()) throw InstanceError("instance document must be a JSON object");

    Instance inst;
    try {
        auto cfg = doc.find("config");
        if (cfg == doc.end()) throw InstanceError("missing key 'config'");
        inst.config = parse_config(*cfg);

        auto sigs = doc.find("signals");
        if (sigs == doc.end() || !sigs->is_array()) throw InstanceError("'signals' must be an array");
        inst.signals.reserve(sigs->size());
        for (const auto& js : *sigs) inst.signals.push_back(parse_signal(js));

        std::unordered_map<std::string, SignalIndex> index;
        for (std::size_t i = 0; i < inst.signals.size(); ++i) {
            if (!index.emplace(inst.signals[i].id, static_cast<SignalIndex>(i)).second) {
                throw InstanceError("duplicate signal id '" + inst.signals[i].id + "'");
            }
        }

        auto vars = doc.find("variants");
        if (vars == doc.end() || !vars->is_array()) throw InstanceError("'variants' must be an array");
        inst.variants = VariantMatrix(inst.signals.size(), vars->size());
        for (std::size_t v = 0; v < vars->size(); ++v) {
            const auto& members = (*vars)[v];
            if (!members.is_array()) throw InstanceError("each variant must be an array of signal ids");
            for (const auto& m : members) {
                if (!m.is_string()) throw InstanceError("variant members must be signal id strings");
                auto it = index.find(m.get<std::string>());
                if (it == index.end()) {
                    throw InstanceError("variant " + std::to_string(v) + " references unknown signal '" +
                                        m.get<std::string>() + "'");
                }
                inst.variants.set(it->second, static_cast<VariantIndex>(v));
            }
        }

        if (auto gen = doc.find("generator"); gen != doc.end() && gen->is_object()) {
            GeneratorInfo info;
            info.profile = gen->value("profile", std::string{});
            info.seed = gen->value("seed", std::uint64_t{0});
            inst.generator = info;
        }
    } catch (const json::exception& e) {
        throw InstanceError(std::string("malformed instance document: ") + e.what());
    }

    validate_instance(inst);
    return inst;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InstanceError("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Instance load_instance(const std::filesystem::path& path) { return parse_instance(read_text_file(path)); }

std::string serialize_instance(const Instance& instance) {
    json doc;
    const auto& c = instance.config;
    doc["config"] = {{"cycle_us", c.cycle_us},
                     {"hyperperiod_cycles", c.hyperperiod_cycles},
                     {"payload_bits", c.payload_bits},
                     {"static_slots", c.static_slots},
                     {"slot_us", c.slot_us}};
    json sigs = json::array();
    for (const auto& s : instance.signals) {
        sigs.push_back({{"id", s.id},
                        {"node", s.node},
                        {"period_us", s.period_us},
                        {"length_bits", s.length_bits},
                        {"release_us", s.release_us},
                        {"deadline_us", s.deadline_us}});
    }
    doc["signals"] = std::move(sigs);
    json vars = json::array();
    for (std::size_t v = 0; v < instance.variants.variant_count(); ++v) {
        json members = json::array();
        for (auto s : instance.variants.signals_of(static_cast<VariantIndex>(v))) {
            members.push_back(instance.signals[s].id);
        }
        vars.push_back(std::move(members));
    }
    doc["variants"] = std::move(vars);
    if (instance.generator) {
        doc["generator"] = {{"profile", instance.generator->profile}, {"seed", instance.generator->seed}};
    }
    return doc.dump(2) + "\n";
}

}  // namespace flexmv
