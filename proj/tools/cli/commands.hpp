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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace flexmv::cli {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
    kExitOk = 0,
    kExitInvalid = 1,  ///< validation found violations
    kExitInput = 2,    ///< unreadable, malformed or infeasible input
};

struct GenerateOptions {
    std::string profile;
    std::uint64_t seed = 0;
    std::optional<std::filesystem::path> out;  ///< stdout when empty
};

struct ScheduleOptions {
    std::filesystem::path instance;
    std::string strategy = "ffc";
    std::optional<std::filesystem::path> out;         ///< schedule document; stdout when empty
    std::optional<std::filesystem::path> native_dir;  ///< variant_<j>.json per variant
    std::optional<std::filesystem::path> stats;       ///< stats record
    std::optional<std::filesystem::path> mems_dump;   ///< smem.csv and nmem.csv
};

struct ValidateOptions {
    std::filesystem::path instance;
    std::filesystem::path schedule;
};

struct BenchOptions {
    std::vector<std::string> profiles;
    std::vector<std::string> strategies;
    int repeats = 10;
    std::uint64_t seed_base = 0;
    std::optional<std::filesystem::path> out;  ///< CSV; stdout when empty
    int jobs = 1;
    bool validate = true;
};

int cmd_generate(const GenerateOptions& opt, std::ostream& out, std::ostream& err);
int cmd_schedule(const ScheduleOptions& opt, std::ostream& out, std::ostream& err);
int cmd_validate(const ValidateOptions& opt, std::ostream& out, std::ostream& err);

/// Writes the CSV (run rows, then one mean row per profile and strategy)
/// and prints a profiles x strategies table of mean slot counts to `out`.
int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err);

/// Header of the bench CSV.
inline constexpr const char* kBenchCsvHeader =
    "kind,profile,seed,strategy,status,slot_count,wall_time_s,signal_count,variant_count";

}  // namespace flexmv::cli
