// sensegen CLI: generate, learn, validate, and summarize binary sensor
// event logs driven by per-period-of-day Markov chains.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sensegen/csv_io.hpp"
#include "sensegen/learn.hpp"
#include "sensegen/simulate.hpp"

namespace {

using namespace sensegen;

constexpr int kExitOk = 0;
constexpr int kExitDataError = 1;
constexpr int kExitUsageError = 2;

struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open " + path);
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write " + path);
    return out;
}

TransitionMatrix load_matrix(const std::string& path) {
    auto in = open_input(path);
    try {
        auto m = parse_matrix_csv(in);
        const auto report = validate_matrix(m);
        if (!report.ok()) {
            throw DataError(path + ": " + report.violations.front().message);
        }
        return m;
    } catch (const ParseError& e) {
        throw DataError(path + ": " + e.what());
    }
}

std::vector<AnomalySpec> load_anomalies(const std::string& path) {
    if (path.empty()) return {};
    auto in = open_input(path);
    try {
        return parse_anomalies_csv(in);
    } catch (const ParseError& e) {
        throw DataError(path + ": " + e.what());
    }
}

EventLog load_event_log(const std::string& path) {
    auto in = open_input(path);
    try {
        return parse_event_log_csv(in);
    } catch (const ParseError& e) {
        throw DataError(path + ": " + e.what());
    }
}

/// Shared simulation options; an omitted seed draws entropy and is echoed
/// to stderr so the run can be reproduced.
struct RunOptions {
    int days = 7;
    std::string start = "1970-01-01T00:00:00Z";
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::string anomalies_path;
    std::string out_path;

    void add_to(CLI::App& cmd) {
        cmd.add_option("--days", days, "number of days to generate")
            ->required()
            ->check(CLI::PositiveNumber);
        cmd.add_option("--start", start, "start timestamp (ISO-8601 UTC)")
            ->capture_default_str();
        cmd.add_option("--seed", seed, "64-bit seed for the random source")
            ->each([this](const std::string&) { seed_given = true; });
        cmd.add_option("--anomalies", anomalies_path, "anomaly windows CSV");
        cmd.add_option("--out", out_path, "output event log CSV")->required();
    }

    SimConfig to_config() {
        SimConfig cfg;
        try {
            cfg.start_time = parse_timestamp(start);
        } catch (const std::invalid_argument& e) {
            throw DataError(e.what());
        }
        cfg.days = days;
        if (!seed_given) {
            std::random_device rd;
            seed = (static_cast<std::uint64_t>(rd()) << 32) | rd();
            std::cerr << "seed: " << seed << "\n";
        }
        cfg.seed = seed;
        cfg.anomalies = load_anomalies(anomalies_path);
        return cfg;
    }
};

void run_and_write(const Generator& gen, RunOptions& opts) {
    const SimConfig cfg = opts.to_config();
    const EventLog log = simulate(gen, cfg);
    auto out = open_output(opts.out_path);
    write_event_log_csv(out, log);
}

int cmd_validate(const std::string& matrix_path) {
    auto in = open_input(matrix_path);
    TransitionMatrix m;
    try {
        m = parse_matrix_csv(in);
    } catch (const ParseError& e) {
        throw DataError(matrix_path + ": " + e.what());
    }
    const auto report = validate_matrix(m);
    if (report.ok()) {
        std::cout << "ok\n";
        return kExitOk;
    }
    for (const auto& v : report.violations) {
        std::cout << v.message << "\n";
    }
    return kExitDataError;
}

void cmd_learn(const std::string& input, int interval,
               const std::string& out_dir) {
    const EventLog log = load_event_log(input);
    Generator gen;
    try {
        gen = learn_generator(log, interval);
    } catch (const std::invalid_argument& e) {
        throw DataError(e.what());
    }

    std::filesystem::create_directories(out_dir);
    for (int p = 0; p < gen.chain_set.n_periods(); ++p) {
        auto out = open_output(out_dir + "/period_" + std::to_string(p) +
                               ".csv");
        write_matrix_csv(out, gen.chain_set.chains[static_cast<std::size_t>(p)]);
    }

    auto out = open_output(out_dir + "/durations.csv");
    out << "state,period,mean_seconds,sd_seconds,samples\n";
    for (const auto& state : gen.chain_set.states()) {
        const auto& spec = gen.specs.at(state);
        for (int p = 0; p < gen.chain_set.n_periods(); ++p) {
            const auto& stats = spec.stats_for(p);
            out << state << ',' << p << ',' << format_probability(stats.mean_s)
                << ',' << format_probability(stats.sd_s) << ','
                << stats.sample_count << '\n';
        }
    }
}

void cmd_summarize(const std::string& input) {
    const EventLog log = load_event_log(input);

    struct Acc {
        std::int64_t events = 0;
        std::int64_t total_on = 0;
        std::vector<std::int64_t> on_intervals;
        std::vector<std::int64_t> holds;
        std::int64_t last_on = -1;
    };
    std::vector<std::string> order;
    std::map<std::string, Acc> acc;

    for (std::size_t i = 0; i < log.events.size(); ++i) {
        const auto& e = log.events[i];
        if (!acc.count(e.sensor)) order.push_back(e.sensor);
        auto& a = acc[e.sensor];
        ++a.events;
        if (e.polarity == Polarity::On) {
            a.last_on = e.timestamp;
        } else if (a.last_on >= 0) {
            a.on_intervals.push_back(e.timestamp - a.last_on);
            a.total_on += e.timestamp - a.last_on;
            a.last_on = -1;
        }
        if (i + 1 < log.events.size()) {
            a.holds.push_back(log.events[i + 1].timestamp - e.timestamp);
        }
    }

    std::cout << "sensor,events,total_on_seconds,mean_on_seconds,"
                 "sd_on_seconds,mean_holding_seconds,sd_holding_seconds\n";
    for (const auto& sensor : order) {
        const auto& a = acc[sensor];
        const auto on = empirical_stats(a.on_intervals);
        const auto hold = empirical_stats(a.holds);
        std::cout << sensor << ',' << a.events << ',' << a.total_on << ','
                  << format_probability(on.mean_s) << ','
                  << format_probability(on.sd_s) << ','
                  << format_probability(hold.mean_s) << ','
                  << format_probability(hold.sd_s) << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Markov-chain synthetic binary sensor event log generator"};
    app.require_subcommand(1);

    // gen-matrix
    auto* gen_matrix = app.add_subcommand(
        "gen-matrix", "simulate from four period matrices + activities");
    std::string morning_path, afternoon_path, evening_path, night_path;
    std::string activities_path;
    RunOptions matrix_opts;
    gen_matrix->add_option("--morning", morning_path)->required();
    gen_matrix->add_option("--afternoon", afternoon_path)->required();
    gen_matrix->add_option("--evening", evening_path)->required();
    gen_matrix->add_option("--night", night_path)->required();
    gen_matrix->add_option("--activities", activities_path)->required();
    matrix_opts.add_to(*gen_matrix);

    // gen-dataset
    auto* gen_dataset = app.add_subcommand(
        "gen-dataset", "learn from a sample log, then simulate");
    std::string dataset_input;
    int dataset_interval = 0;
    RunOptions dataset_opts;
    gen_dataset->add_option("--input", dataset_input)->required();
    gen_dataset->add_option("--interval", dataset_interval,
                            "period length in hours (must divide 24)")
        ->required();
    dataset_opts.add_to(*gen_dataset);

    // learn
    auto* learn = app.add_subcommand(
        "learn", "dump learned matrices and duration stats");
    std::string learn_input, learn_out_dir;
    int learn_interval = 0;
    learn->add_option("--input", learn_input)->required();
    learn->add_option("--interval", learn_interval)->required();
    learn->add_option("--out-dir", learn_out_dir)->required();

    // validate
    auto* validate = app.add_subcommand("validate", "validate a matrix CSV");
    std::string validate_matrix_path;
    validate->add_option("--matrix", validate_matrix_path)->required();

    // summarize
    auto* summarize = app.add_subcommand(
        "summarize", "per-sensor statistics of an event log (CSV to stdout)");
    std::string summarize_input;
    summarize->add_option("--input", summarize_input)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsageError;
    }

    try {
        if (*gen_matrix) {
            std::vector<std::string> warnings;
            Generator gen;
            try {
                gen = build_matrix_generator(
                    load_matrix(morning_path), load_matrix(afternoon_path),
                    load_matrix(evening_path), load_matrix(night_path),
                    [&] {
                        auto in = open_input(activities_path);
                        try {
                            return parse_activities_csv(in);
                        } catch (const ParseError& e) {
                            throw DataError(activities_path + ": " + e.what());
                        }
                    }(),
                    &warnings);
            } catch (const std::invalid_argument& e) {
                throw DataError(e.what());
            }
            for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
            run_and_write(gen, matrix_opts);
        } else if (*gen_dataset) {
            const EventLog log = load_event_log(dataset_input);
            Generator gen;
            try {
                gen = learn_generator(log, dataset_interval);
            } catch (const std::invalid_argument& e) {
                throw DataError(e.what());
            }
            run_and_write(gen, dataset_opts);
        } else if (*learn) {
            cmd_learn(learn_input, learn_interval, learn_out_dir);
        } else if (*validate) {
            return cmd_validate(validate_matrix_path);
        } else if (*summarize) {
            cmd_summarize(summarize_input);
        }
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDataError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDataError;
    }
    return kExitOk;
}
