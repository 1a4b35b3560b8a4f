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

#include <iostream>

#include <CLI11.hpp>

#include "cli/commands.hpp"
#include "flexmv/benchgen.hpp"

using namespace flexmv::cli;

int main(int argc, char** argv) {
    CLI::App app{"flexmv: multi-variant FlexRay static segment scheduling"};
    app.require_subcommand(1);

    GenerateOptions gen;
    auto* generate = app.add_subcommand("generate", "Generate a benchmark instance");
    generate->add_option("--profile", gen.profile, "set1..set7, 1ECU500, 1ECU1000, 1ECU3000")->required();
    generate->add_option("--seed", gen.seed, "Generator seed")->required();
    generate->add_option("--out", gen.out, "Output instance file (stdout if omitted)");

    ScheduleOptions sch;
    auto* schedule = app.add_subcommand("schedule", "Build a multischedule for an instance");
    schedule->add_option("instance,--instance", sch.instance, "Instance document")->required();
    schedule->add_option("--strategy", sch.strategy, "ff|ffp|ffw|ffl|ffc")->capture_default_str();
    schedule->add_option("--out", sch.out, "Schedule document (stdout if omitted)");
    schedule->add_option("--native-dir", sch.native_dir, "Write variant_<j>.json native schedules here");
    schedule->add_option("--stats", sch.stats, "Write the stats record here");
    schedule->add_option("--mems-dump", sch.mems_dump, "Write smem.csv and nmem.csv here");

    ValidateOptions val;
    auto* validate = app.add_subcommand("validate", "Check a schedule against its instance");
    validate->add_option("--instance", val.instance, "Instance document")->required();
    validate->add_option("--schedule", val.schedule, "Schedule or native schedule document")->required();

    BenchOptions bench;
    bench.profiles = {"set1", "set2", "set3", "set4", "set5", "set6", "set7"};
    bench.strategies = {"ff", "ffp", "ffw", "ffl", "ffc"};
    auto* bench_cmd = app.add_subcommand("bench", "Run strategies over generated benchmark sets");
    bench_cmd->add_option("--profiles", bench.profiles, "Profile names")->delimiter(',')->capture_default_str();
    bench_cmd->add_option("--strategies", bench.strategies, "Strategy names")->delimiter(',')->capture_default_str();
    bench_cmd->add_option("--repeats", bench.repeats, "Seeds per profile")->capture_default_str();
    bench_cmd->add_option("--seed-base", bench.seed_base, "First seed")->capture_default_str();
    bench_cmd->add_option("--out", bench.out, "Results CSV (stdout if omitted)");
    bench_cmd->add_option("--jobs", bench.jobs, "Parallel instances")->capture_default_str();
    bench_cmd->add_flag("!--no-validate", bench.validate, "Skip validating each schedule");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    if (*generate) return cmd_generate(gen, std::cout, std::cerr);
    if (*schedule) return cmd_schedule(sch, std::cout, std::cerr);
    if (*validate) return cmd_validate(val, std::cout, std::cerr);
    if (*bench_cmd) return cmd_bench(bench, std::cout, std::cerr);
    return kExitInput;
}
