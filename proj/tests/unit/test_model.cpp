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

#include <doctest.h>

#include <bit>
#include <random>

#include "flexmv/instance_io.hpp"
#include "oracles.hpp"
#include "random_instance.hpp"

using namespace flexmv;

namespace {

const std::string kDataDir = FLEXMV_DATA_DIR;

Instance example1() { return load_instance(kDataDir + "/example1/instance.json"); }

Signal signal(Microseconds period, Microseconds release, Microseconds deadline) {
    return Signal{"x", 1, period, 8, release, deadline};
}

std::string with_signals(const std::string& signals, const std::string& variants, int payload = 16) {
    return R"({"config":{"cycle_us":5000,"hyperperiod_cycles":4,"payload_bits":)" + std::to_string(payload) +
           R"(,"static_slots":3,"slot_us":40},"signals":[)" + signals + R"(],"variants":[)" + variants + "]}";
}

}  // namespace

TEST_CASE("example 1 loads with its signal parameters") {
    const auto inst = example1();
    REQUIRE(inst.signals.size() == 8);
    CHECK(inst.variants.variant_count() == 2);
    CHECK(inst.config.payload_bits == 16);
    CHECK(inst.config.cycle_us == 5000);

    const auto& e = inst.signals[*inst.find_signal("E")];
    CHECK(e.node == 1);
    CHECK(e.period_us == 20000);
    CHECK(e.length_bits == 16);
    CHECK(e.release_us == 10000);
    CHECK(e.deadline_us == 15000);
    CHECK(inst.signals[*inst.find_signal("H")].node == 3);

    const auto in_variant = [&](const char* id, VariantIndex v) { return inst.variants.uses(*inst.find_signal(id), v); };
    CHECK(in_variant("A", 0));
    CHECK_FALSE(in_variant("A", 1));
    CHECK(in_variant("E", 1));
    CHECK_FALSE(in_variant("E", 0));
    CHECK(in_variant("B", 0));
    CHECK(in_variant("B", 1));
}

TEST_CASE("rounding") {
    FlexRayConfig cfg;
    cfg.cycle_us = 5000;
    cfg.hyperperiod_cycles = 4;
    cfg.payload_bits = 16;

    SUBCASE("A") { CHECK(round_time_constraints(signal(5000, 0, 5000), cfg) == CycleWindow{0, 0, 1}); }
    SUBCASE("E is clipped to the hyperperiod") {
        CHECK(round_time_constraints(signal(20000, 10000, 15000), cfg) == CycleWindow{2, 3, 4});
    }
    SUBCASE("clipped to one period") {
        CHECK(round_time_constraints(signal(10000, 0, 20000), cfg) == CycleWindow{0, 1, 2});
    }
    SUBCASE("unaligned release rounds up") {
        CHECK(round_time_constraints(signal(20000, 1, 19999), cfg) == CycleWindow{1, 3, 4});
    }
    SUBCASE("deadline inside the first cycle") {
        auto s = signal(5000, 0, 4999);
        CHECK_THROWS_AS(round_time_constraints(s, cfg), InfeasibleSignalError);
        try {
            round_time_constraints(s, cfg);
        } catch (const InfeasibleSignalError& e) {
            CHECK(e.signal_id() == "x");
        }
    }
}

TEST_CASE("rounding agrees with the oracle and is idempotent") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        FlexRayConfig cfg;
        cfg.cycle_us = 1000;
        cfg.hyperperiod_cycles = 1 << std::uniform_int_distribution<int>(0, 6)(rng);
        const int p = 1 << std::uniform_int_distribution<int>(0, std::countr_zero(unsigned(cfg.hyperperiod_cycles)))(rng);
        Signal s{"x", 1, p * 1000, 1, std::uniform_int_distribution<Microseconds>(0, 70'000)(rng),
                 std::uniform_int_distribution<Microseconds>(1, 70'000)(rng)};
        const auto expected = testing::oracle_window(s, cfg);
        if (!expected) {
            CHECK_THROWS_AS(round_time_constraints(s, cfg), InfeasibleSignalError);
            continue;
        }
        const auto w = round_time_constraints(s, cfg);
        REQUIRE(w == *expected);

        Signal aligned = s;
        aligned.release_us = w.release_cycle * cfg.cycle_us;
        aligned.deadline_us = (w.deadline_cycle + 1 - w.release_cycle) * cfg.cycle_us;
        CHECK(round_time_constraints(aligned, cfg) == w);

        for (int c = w.release_cycle; c <= w.deadline_cycle; ++c) {
            CHECK(job_count(w.period_cycles, cfg.hyperperiod_cycles) == cfg.hyperperiod_cycles / p);
            for (int k = 0; k < job_count(w.period_cycles, cfg.hyperperiod_cycles); ++k) {
                const int jc = job_cycle(c, k, w.period_cycles, cfg.hyperperiod_cycles);
                CHECK(jc >= 0);
                CHECK(jc < cfg.hyperperiod_cycles);
            }
        }
    }
}

TEST_CASE("load errors") {
    const std::string a = R"({"id":"A","node":1,"period_us":5000,"length_bits":8})";
    SUBCASE("empty signal list") {
        const auto inst = parse_instance(with_signals("", ""));
        CHECK(inst.signals.empty());
    }
    SUBCASE("defaults") {
        const auto inst = parse_instance(with_signals(a, R"(["A"])"));
        CHECK(inst.signals[0].release_us == 0);
        CHECK(inst.signals[0].deadline_us == 5000);
    }
    SUBCASE("signal wider than the payload") {
        const std::string wide = R"({"id":"A","node":1,"period_us":5000,"length_bits":24})";
        std::string message;
        try {
            parse_instance(with_signals(wide, R"(["A"])"));
        } catch (const InstanceError& e) {
            message = e.what();
        }
        CHECK(message.find("exceeds frame payload") != std::string::npos);
    }
    SUBCASE("duplicate id") {
        CHECK_THROWS_AS(parse_instance(with_signals(a + "," + a, R"(["A"])")), InstanceError);
    }
    SUBCASE("period off the grid") {
        const std::string bad = R"({"id":"A","node":1,"period_us":15000,"length_bits":8})";
        CHECK_THROWS_AS(parse_instance(with_signals(bad, R"(["A"])")), InstanceError);
    }
    SUBCASE("period beyond the hyperperiod") {
        const std::string bad = R"({"id":"A","node":1,"period_us":40000,"length_bits":8})";
        CHECK_THROWS_AS(parse_instance(with_signals(bad, R"(["A"])")), InstanceError);
    }
    SUBCASE("signal in no variant") {
        const std::string b = R"({"id":"B","node":1,"period_us":5000,"length_bits":8})";
        CHECK_THROWS_AS(parse_instance(with_signals(a + "," + b, R"(["A"])")), InstanceError);
    }
    SUBCASE("variant names an unknown signal") {
        CHECK_THROWS_AS(parse_instance(with_signals(a, R"(["A","Z"])")), InstanceError);
    }
    SUBCASE("malformed") {
        CHECK_THROWS_AS(parse_instance("{\"config\":"), InstanceError);
        CHECK_THROWS_AS(parse_instance("[]"), InstanceError);
    }
    SUBCASE("missing file") { CHECK_THROWS_AS(load_instance(kDataDir + "/no/such/file.json"), InstanceError); }
}

TEST_CASE("serialize then load is the identity") {
    const auto inst = example1();
    const auto text = serialize_instance(inst);
    CHECK(parse_instance(text) == inst);
    CHECK(serialize_instance(parse_instance(text)) == text);

    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        const auto r = testing::random_small_instance(rng);
        CHECK(parse_instance(serialize_instance(r)) == r);
    }
}
