// Command-line front end: parse instance configs, compute thresholds, deal
// and reconstruct classical shares, and run the access-structure sweeps.
//
// Exit codes: 0 success, 2 config or schema problem, 3 cap exceeded,
// 4 consistency or soundness failure (corrupt shares included), 5 ambiguous
// reconstruction, 1 anything unexpected.
#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "agqss/analyzer.hpp"
#include "agqss/classical_ss.hpp"
#include "agqss/config.hpp"
#include "agqss/errors.hpp"
#include "agqss/report.hpp"
#include "agqss/scheme.hpp"

namespace {

using namespace agqss;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitCap = 3;
constexpr int kExitConsistency = 4;
constexpr int kExitAmbiguous = 5;

void write_output(const std::string& text, const std::string& out_path) {
    const bool needs_newline = text.empty() || text.back() != '\n';
    if (out_path.empty()) {
        std::cout << text;
        if (needs_newline) {
            std::cout << '\n';
        }
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw ConfigError("cannot write \"" + out_path + "\"");
    }
    out << text;
    if (needs_newline) {
        out << '\n';
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot read \"" + path + "\"");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

int parse_int_strict(const std::string& item, const std::string& what) {
    std::size_t consumed = 0;
    int value = 0;
    try {
        value = std::stoi(item, &consumed);
    } catch (...) {
        consumed = 0;
    }
    if (consumed == 0 || consumed != item.size()) {
        throw ConfigError(what + ": \"" + item + "\" is not an integer");
    }
    return value;
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        out.push_back(parse_int_strict(item, what));
    }
    if (out.empty()) {
        throw ConfigError(what + ": empty list");
    }
    return out;
}

struct AnalyzeArgs {
    std::string config_path;
    std::string mode;
    std::string out_path;
    std::string format = "json";
    std::uint64_t cap = 0;
    bool cap_given = false;
    bool full = false;
};

int run_analyze(const AnalyzeArgs& args) {
    config::InstanceConfig cfg = config::load_instance_config(args.config_path);
    if (args.cap_given) {
        if (args.cap == 0) {
            throw ConfigError("--cap must be positive");
        }
        cfg.caps.operator_dim = args.cap;
    }
    const qsim::Mode mode = !args.mode.empty() ? config::parse_mode(args.mode)
                                               : cfg.mode.value_or(qsim::Mode::Fast);
    const scheme::CodePair pair = config::build_pair(cfg);
    const int threads = analyzer::thread_count_from_env();
    const analyzer::AccessReport access = analyzer::classify_all(pair, mode, cfg.caps, threads);
    const analyzer::StrongReport strong =
        analyzer::strong_security_map(pair, mode, cfg.caps, threads);

    std::string text;
    if (args.format == "json") {
        text = report::analysis_report(pair, access, strong, args.full).dump(2);
    } else if (args.format == "csv") {
        text = report::analysis_csv(pair, access, strong, args.full);
    } else {
        throw ConfigError("--format must be \"json\" or \"csv\", got \"" + args.format + "\"");
    }
    write_output(text, args.out_path);

    if (!access.forbidden_threshold_sound || !access.qualified_threshold_sound ||
        !strong.bound_sound) {
        std::cerr << "soundness violation: see the counterexample lists in the report\n";
        return kExitConsistency;
    }
    return kExitOk;
}

int run_thresholds(const std::string& config_path, const std::string& format,
                   const std::string& out_path) {
    const config::InstanceConfig cfg = config::load_instance_config(config_path);
    const scheme::CodePair pair = config::build_pair(cfg);
    const scheme::Thresholds th = scheme::thresholds(pair);
    std::string text;
    if (format == "text") {
        text = report::thresholds_text(pair, th);
    } else if (format == "json") {
        text = report::thresholds_report(pair, th).dump(2);
    } else {
        throw ConfigError("--format must be \"text\" or \"json\", got \"" + format + "\"");
    }
    write_output(text, out_path);
    return kExitOk;
}

int run_deal(const std::string& config_path, const std::string& secret_text,
             std::uint64_t seed_flag, bool seed_given, const std::string& out_path) {
    config::InstanceConfig cfg = config::load_instance_config(config_path);
    if (seed_given) {
        cfg.seed = seed_flag;
    }
    const scheme::CodePair pair = config::build_pair(cfg);
    const std::vector<int> secret = parse_int_list(secret_text, "secret");
    std::mt19937_64 rng(cfg.seed);
    const std::vector<int> values = classical_ss::deal(pair, secret, rng);
    std::vector<int> all_shares(static_cast<std::size_t>(pair.n()));
    for (int j = 0; j < pair.n(); ++j) {
        all_shares[static_cast<std::size_t>(j)] = j;
    }
    write_output(report::share_file(pair, cfg.seed, all_shares, values).dump(2), out_path);
    return kExitOk;
}

int run_reconstruct(const std::string& config_path, const std::string& shares_path,
                    const std::string& subset_text, const std::string& out_path) {
    const config::InstanceConfig cfg = config::load_instance_config(config_path);
    const scheme::CodePair pair = config::build_pair(cfg);
    const report::ParsedShares parsed = report::parse_share_file(read_file(shares_path));

    const std::string expected_hash = report::instance_hash(pair);
    if (parsed.instance_hash != expected_hash) {
        throw ConfigError("share file belongs to instance " + parsed.instance_hash +
                          " but the config describes " + expected_hash);
    }

    std::vector<std::pair<int, int>> observed;  // (0-based share index, value)
    if (subset_text.empty()) {
        for (std::size_t i = 0; i < parsed.j_set.size(); ++i) {
            observed.emplace_back(parsed.j_set[i], parsed.values[i]);
        }
    } else {
        for (const int share_number : parse_int_list(subset_text, "--subset")) {
            const int index = share_number - 1;
            const auto it = std::find(parsed.j_set.begin(), parsed.j_set.end(), index);
            if (it == parsed.j_set.end()) {
                throw ConfigError("--subset: share " + std::to_string(share_number) +
                                  " is not in the share file");
            }
            const std::size_t pos = static_cast<std::size_t>(it - parsed.j_set.begin());
            observed.emplace_back(index, parsed.values[pos]);
        }
    }
    std::sort(observed.begin(), observed.end());
    std::vector<int> j_set;
    std::vector<int> values;
    for (const auto& [index, value] : observed) {
        j_set.push_back(index);
        values.push_back(value);
    }

    const classical_ss::Reconstruction result = classical_ss::reconstruct(pair, j_set, values);
    write_output(report::reconstruction_report(pair, result, j_set).dump(2), out_path);
    return result.secret.has_value() ? kExitOk : kExitAmbiguous;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum ramp secret sharing from algebraic curves over finite fields"};
    app.require_subcommand(1);

    AnalyzeArgs analyze_args;
    CLI::App* analyze =
        app.add_subcommand("analyze", "Sweep every share subset and report the access structure");
    analyze->add_option("config", analyze_args.config_path, "Instance config JSON")->required();
    analyze->add_option("--mode", analyze_args.mode, "fast | oracle | both");
    analyze->add_flag("--full", analyze_args.full, "Emit every subset row and every (I, J) pair");
    CLI::Option* cap_opt =
        analyze->add_option("--cap", analyze_args.cap, "Operator dimension cap override");
    analyze->add_option("--out", analyze_args.out_path, "Output path (default stdout)");
    analyze->add_option("--format", analyze_args.format, "json | csv");

    std::string thresholds_config;
    std::string thresholds_format = "text";
    std::string thresholds_out;
    CLI::App* thresholds =
        app.add_subcommand("thresholds", "Print the guaranteed access thresholds");
    thresholds->add_option("config", thresholds_config, "Instance config JSON")->required();
    thresholds->add_option("--format", thresholds_format, "text | json");
    thresholds->add_option("--out", thresholds_out, "Output path (default stdout)");

    std::string deal_config;
    std::string deal_secret;
    std::string deal_out;
    std::uint64_t deal_seed = 0;
    CLI::App* deal = app.add_subcommand("deal", "Deal classical shares for a secret");
    deal->add_option("config", deal_config, "Instance config JSON")->required();
    deal->add_option("secret", deal_secret, "Secret digits, comma separated")->required();
    CLI::Option* seed_opt = deal->add_option("--seed", deal_seed, "RNG seed (overrides config)");
    deal->add_option("--out", deal_out, "Output path (default stdout)");

    std::string rec_config;
    std::string rec_shares;
    std::string rec_subset;
    std::string rec_out;
    CLI::App* reconstruct =
        app.add_subcommand("reconstruct", "Reconstruct the secret from a share file");
    reconstruct->add_option("config", rec_config, "Instance config JSON")->required();
    reconstruct->add_option("shares", rec_shares, "Share file JSON")->required();
    reconstruct->add_option("--subset", rec_subset,
                            "Share numbers to use, comma separated (default all)");
    reconstruct->add_option("--out", rec_out, "Output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (analyze->parsed()) {
            analyze_args.cap_given = cap_opt->count() > 0;
            return run_analyze(analyze_args);
        }
        if (thresholds->parsed()) {
            return run_thresholds(thresholds_config, thresholds_format, thresholds_out);
        }
        if (deal->parsed()) {
            return run_deal(deal_config, deal_secret, deal_seed, seed_opt->count() > 0, deal_out);
        }
        if (reconstruct->parsed()) {
            return run_reconstruct(rec_config, rec_shares, rec_subset, rec_out);
        }
        std::cerr << "error: no subcommand selected\n";
        return kExitConfig;
    } catch (const ConfigError& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kExitConfig;
    } catch (const CapError& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kExitCap;
    } catch (const NotACodewordError& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kExitConsistency;
    } catch (const ConsistencyError& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kExitConsistency;
    } catch (const DomainError& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kExitFailure;
    }
}
