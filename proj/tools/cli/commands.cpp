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

#include "cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "flexmv/benchgen.hpp"
#include "flexmv/exclusion.hpp"
#include "flexmv/instance_io.hpp"
#include "flexmv/multischedule.hpp"
#include "flexmv/scheduler.hpp"
#include "flexmv/validator.hpp"

namespace flexmv::cli {

namespace fs = std::filesystem;

namespace {

void write_file(const fs::path& path, const std::string& text) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write '" + path.string() + "'");
    f << text;
}

void emit(const std::optional<fs::path>& path, const std::string& text, std::ostream& out) {
    if (path) {
        write_file(*path, text);
    } else {
        out << text;
    }
}

std::string fixed(double v, int digits) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(digits) << v;
    return s.str();
}

}  // namespace

int cmd_generate(const GenerateOptions& opt, std::ostream& out, std::ostream& err) {
    const auto profile = find_profile(opt.profile);
    if (!profile) {
        err << "error: unknown profile '" << opt.profile << "'\n";
        return kExitInput;
    }
    try {
        emit(opt.out, serialize_instance(generate_instance(*profile, opt.seed)), out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitOk;
}

int cmd_schedule(const ScheduleOptions& opt, std::ostream& out, std::ostream& err) {
    const auto strategy = parse_strategy(opt.strategy);
    if (!strategy) {
        err << "error: unknown strategy '" << opt.strategy << "' (expected ff|ffp|ffw|ffl|ffc)\n";
        return kExitInput;
    }

    Instance instance;
    try {
        instance = load_instance(opt.instance);
    } catch (const InstanceError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }

    try {
        if (opt.mems_dump) {
            const auto mems = compute_mems(instance);
            write_file(*opt.mems_dump / "smem.csv", mems.smem_csv());
            write_file(*opt.mems_dump / "nmem.csv", mems.nmem_csv());
        }

        const auto result = schedule(instance, *strategy);
        auto doc = to_schedule_document(result.multischedule, instance);
        doc.strategy = std::string(to_string(*strategy));
        emit(opt.out, serialize_schedule(doc), out);

        if (opt.native_dir) {
            for (std::size_t v = 0; v < instance.variants.variant_count(); ++v) {
                auto native = extract_native_schedule(result.multischedule, instance, static_cast<VariantIndex>(v));
                native.strategy = doc.strategy;
                write_file(*opt.native_dir / ("variant_" + std::to_string(v) + ".json"), serialize_schedule(native));
            }
        }

        const bool exceeds = instance.config.static_slots > 0 &&
                             result.slot_count > static_cast<std::size_t>(instance.config.static_slots);
        nlohmann::json stats = {
            {"strategy", to_string(*strategy)},
            {"slot_count", result.slot_count},
            {"wall_time_s", std::round(result.wall_time_s * 1000.0) / 1000.0},
            {"signal_count", instance.signals.size()},
            {"variant_count", instance.variants.variant_count()},
            {"declared_static_slots", instance.config.static_slots},
            {"exceeds_declared_slots", exceeds},
        };
        if (opt.stats) write_file(*opt.stats, stats.dump(2) + "\n");
        if (opt.out) out << stats.dump() << '\n';
        if (exceeds) {
            err << "warning: " << result.slot_count << " slots allocated, more than the "
                << instance.config.static_slots << " declared static slots\n";
        }
    } catch (const InfeasibleSignalError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitOk;
}

int cmd_validate(const ValidateOptions& opt, std::ostream& out, std::ostream& err) {
    try {
        const auto instance = load_instance(opt.instance);
        const auto doc = parse_schedule(read_text_file(opt.schedule), &instance);
        const auto report =
            doc.variant ? validate_native_schedule(doc, instance) : validate_multischedule(doc, instance);
        for (const auto& v : report.violations) out << violation_to_json(v) << '\n';
        return report.ok() ? kExitOk : kExitInvalid;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }
}

namespace {

struct RunRow {
    std::string profile;
    std::uint64_t seed = 0;
    std::string strategy;
    std::string status = "ok";
    std::size_t slot_count = 0;
    double wall_time_s = 0.0;
    std::size_t signal_count = 0;
    std::size_t variant_count = 0;
};

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

/// Runs every strategy on one generated instance, filling `rows`.
void run_cell(const BenchmarkProfile& profile, std::uint64_t seed, const std::vector<OrderingStrategy>& strategies,
              bool validate, RunRow* rows) {
    Instance instance;
    std::string failure;
    try {
        instance = generate_instance(profile, seed);
    } catch (const std::exception& e) {
        failure = std::string("error: ") + e.what();
    }
    for (std::size_t i = 0; i < strategies.size(); ++i) {
        RunRow& row = rows[i];
        row.profile = profile.name;
        row.seed = seed;
        row.strategy = std::string(to_string(strategies[i]));
        if (!failure.empty()) {
            row.status = failure;
            continue;
        }
        row.signal_count = instance.signals.size();
        row.variant_count = instance.variants.variant_count();
        try {
            const auto result = schedule(instance, strategies[i]);
            row.slot_count = result.slot_count;
            row.wall_time_s = result.wall_time_s;
            if (validate) {
                const auto report = validate_multischedule(to_schedule_document(result.multischedule, instance), instance);
                if (!report.ok()) row.status = "invalid";
            }
        } catch (const std::exception& e) {
            row.status = std::string("error: ") + e.what();
        }
    }
}

}  // namespace

int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err) {
    std::vector<BenchmarkProfile> profiles;
    for (const auto& name : opt.profiles) {
        auto p = find_profile(name);
        if (!p) {
            err << "error: unknown profile '" << name << "'\n";
            return kExitInput;
        }
        profiles.push_back(*p);
    }
    std::vector<OrderingStrategy> strategies;
    for (const auto& name : opt.strategies) {
        auto s = parse_strategy(name);
        if (!s) {
            err << "error: unknown strategy '" << name << "'\n";
            return kExitInput;
        }
        strategies.push_back(*s);
    }
    if (opt.repeats < 0) {
        err << "error: repeats must be non-negative\n";
        return kExitInput;
    }

    const std::size_t cells = profiles.size() * static_cast<std::size_t>(opt.repeats);
    std::vector<RunRow> rows(cells * strategies.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t c; (c = next.fetch_add(1)) < cells;) {
            const auto& profile = profiles[c / static_cast<std::size_t>(opt.repeats)];
            const auto seed = opt.seed_base + c % static_cast<std::size_t>(opt.repeats);
            run_cell(profile, seed, strategies, opt.validate, rows.data() + c * strategies.size());
        }
    };
    {
        const int n = std::max(1, std::min<int>(opt.jobs, static_cast<int>(std::max<std::size_t>(cells, 1))));
        std::vector<std::jthread> pool;
        for (int i = 1; i < n; ++i) pool.emplace_back(worker);
        worker();
    }

    std::ostringstream csv;
    csv << kBenchCsvHeader << '\n';
    for (const auto& r : rows) {
        csv << "run," << r.profile << ',' << r.seed << ',' << r.strategy << ',' << csv_escape(r.status) << ','
            << r.slot_count << ',' << fixed(r.wall_time_s, 3) << ',' << r.signal_count << ',' << r.variant_count
            << '\n';
    }

    // means over successful runs, keyed by (profile, strategy) in input order
    std::map<std::pair<std::size_t, std::size_t>, std::vector<const RunRow*>> groups;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::size_t cell = i / strategies.size();
        groups[{cell / static_cast<std::size_t>(std::max(opt.repeats, 1)), i % strategies.size()}].push_back(&rows[i]);
    }
    std::map<std::pair<std::size_t, std::size_t>, double> mean_slots;
    bool any_failed = false;
    for (const auto& [key, list] : groups) {
        double slots = 0, time = 0, signals = 0;
        std::size_t ok = 0;
        for (auto* r : list) {
            if (r->status != "ok") {
                any_failed = true;
                continue;
            }
            slots += static_cast<double>(r->slot_count);
            time += r->wall_time_s;
            signals += static_cast<double>(r->signal_count);
            ++ok;
        }
        const double d = ok ? static_cast<double>(ok) : 1.0;
        mean_slots[key] = slots / d;
        csv << "mean," << profiles[key.first].name << ",," << to_string(strategies[key.second]) << ','
            << (ok == list.size() ? "ok" : std::to_string(list.size() - ok) + " failed") << ','
            << fixed(slots / d, 2) << ',' << fixed(time / d, 3) << ',' << fixed(signals / d, 1) << ','
            << (list.empty() ? 0 : list.front()->variant_count) << '\n';
    }

    try {
        emit(opt.out, csv.str(), out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }

    if (opt.out && !mean_slots.empty()) {
        out << std::left << std::setw(10) << "profile";
        for (auto s : strategies) out << std::right << std::setw(9) << to_string(s);
        out << '\n';
        std::vector<double> column(strategies.size(), 0.0);
        for (std::size_t p = 0; p < profiles.size(); ++p) {
            out << std::left << std::setw(10) << profiles[p].name;
            for (std::size_t s = 0; s < strategies.size(); ++s) {
                out << std::right << std::setw(9) << fixed(mean_slots[{p, s}], 2);
                column[s] += mean_slots[{p, s}];
            }
            out << '\n';
        }
        out << std::left << std::setw(10) << "average";
        for (double c : column) out << std::right << std::setw(9) << fixed(c / static_cast<double>(profiles.size()), 2);
        out << '\n';
    }
    if (any_failed) err << "warning: some runs failed; see the status column\n";
    return kExitOk;
}

}  // namespace flexmv::cli
