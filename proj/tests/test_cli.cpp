#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

namespace {

using nlohmann::json;

struct CmdResult {
    int exit_code = -1;
    std::string output;  // stdout only; stderr goes to its own capture file
    std::string errors;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string temp_path(const char* stem) {
    static int counter = 0;
    std::ostringstream out;
    out << "/tmp/agqss_cli_" << getpid() << '_' << counter++ << '_' << stem;
    return out.str();
}

/// Runs the installed CLI binary with the given arguments, capturing exit
/// code and both streams. env_prefix lets a test set variables for the child
/// only (e.g. "AGQSS_THREADS=3").
CmdResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const std::string out_path = temp_path("stdout");
    const std::string err_path = temp_path("stderr");
    std::string command;
    if (!env_prefix.empty()) {
        command += "env " + env_prefix + " ";
    }
    command += std::string(AGQSS_CLI_BIN) + " " + args + " > " + out_path + " 2> " + err_path;
    const int status = std::system(command.c_str());
    CmdResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.output = slurp(out_path);
    result.errors = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return result;
}

std::string config_path(const char* name) {
    return std::string(AGQSS_CONFIG_DIR) + "/" + name;
}

std::string write_temp(const char* stem, const std::string& content) {
    const std::string path = temp_path(stem);
    std::ofstream out(path);
    out << content;
    return path;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("thresholds prints the guarantee table") {
    const CmdResult rs = run_cli("thresholds " + config_path("instance_rs.json"));
    CHECK(rs.exit_code == 0);
    CHECK(rs.output.find("forbidden <= 1") != std::string::npos);
    CHECK(rs.output.find("qualified >= 2") != std::string::npos);
    CHECK(rs.output.find("instance ") == 0);

    const CmdResult wide = run_cli("thresholds " + config_path("instance_b.json"));
    CHECK(wide.exit_code == 0);
    CHECK(wide.output.find("forbidden <= 2") != std::string::npos);
    CHECK(wide.output.find("qualified >= 5") != std::string::npos);
    CHECK(wide.output.find("|J| <= k + 2") != std::string::npos);

    const CmdResult as_json =
        run_cli("thresholds " + config_path("instance_rs.json") + " --format json");
    CHECK(as_json.exit_code == 0);
    const json doc = json::parse(as_json.output);
    CHECK(doc.at("thresholds").at("forbidden") == 1);
    CHECK(doc.at("thresholds").at("qualified") == 2);
}

TEST_CASE("analyze reports the access structure and exits by soundness") {
    const CmdResult full =
        run_cli("analyze " + config_path("instance_rs.json") + " --full --mode both");
    CHECK(full.exit_code == 0);
    const json doc = json::parse(full.output);
    CHECK(doc.at("mode") == "both");
    CHECK(doc.at("classification").at("subsets").size() == 8);
    CHECK(doc.at("soundness").at("forbidden_threshold_sound") == true);
    CHECK(doc.at("soundness").at("qualified_threshold_sound") == true);
    CHECK(doc.at("soundness").at("strong_security_bound_sound") == true);

    const CmdResult hermitian =
        run_cli("analyze " + config_path("instance_a.json") + " --mode both");
    CHECK(hermitian.exit_code == 0);
    const json hdoc = json::parse(hermitian.output);
    CHECK(hdoc.at("thresholds").at("forbidden") == 1);
    CHECK(hdoc.at("thresholds").at("qualified") == 5);
    // Boundary sizes 2 through 4 of the 64 subsets.
    CHECK(hdoc.at("classification").at("subsets").size() == 50);
}

TEST_CASE("analyze runs are byte identical and thread count independent") {
    const std::string args = "analyze " + config_path("instance_a.json");
    const CmdResult one = run_cli(args);
    const CmdResult two = run_cli(args);
    const CmdResult threaded = run_cli(args, "AGQSS_THREADS=3");
    CHECK(one.exit_code == 0);
    CHECK(one.output == two.output);
    CHECK(one.output == threaded.output);
}

TEST_CASE("analyze emits csv on request") {
    const CmdResult csv =
        run_cli("analyze " + config_path("instance_rs.json") + " --format csv --full");
    CHECK(csv.exit_code == 0);
    CHECK(csv.output.find("# agqss 0.1.0\n") == 0);
    CHECK(csv.output.find("section,i_set,revealed,j_set,") != std::string::npos);
}

TEST_CASE("deal and reconstruct round trip through files") {
    const std::string shares = temp_path("shares.json");
    const std::string deal_args =
        "deal " + config_path("instance_a.json") + " 3,1 --seed 11 --out " + shares;
    const CmdResult dealt = run_cli(deal_args);
    REQUIRE(dealt.exit_code == 0);

    // Same seed, same bytes.
    const std::string shares_again = temp_path("shares_again.json");
    run_cli("deal " + config_path("instance_a.json") + " 3,1 --seed 11 --out " + shares_again);
    CHECK(slurp(shares) == slurp(shares_again));

    const json share_doc = json::parse(slurp(shares));
    CHECK(share_doc.at("format") == "agqss-shares");
    CHECK(share_doc.at("rng") == "mt19937_64");
    CHECK(share_doc.at("j_set").size() == 6);

    // A qualified subset recovers the dealt secret exactly.
    const CmdResult rec = run_cli("reconstruct " + config_path("instance_a.json") + " " + shares +
                                  " --subset 1,2,3,4,5");
    CHECK(rec.exit_code == 0);
    const json rec_doc = json::parse(rec.output);
    CHECK(rec_doc.at("unique") == true);
    CHECK(rec_doc.at("candidate_count") == 1);
    CHECK(rec_doc.at("secret") == json::parse("[3,1]"));

    // A forbidden subset is ambiguous, with its own exit code.
    const CmdResult ambiguous = run_cli("reconstruct " + config_path("instance_a.json") + " " +
                                        shares + " --subset 2");
    CHECK(ambiguous.exit_code == 5);
    const json ambiguous_doc = json::parse(ambiguous.output);
    CHECK(ambiguous_doc.at("unique") == false);
    CHECK(ambiguous_doc.at("secret").is_null());

    // The share file names its instance; a different config is rejected.
    const CmdResult mismatch =
        run_cli("reconstruct " + config_path("instance_rs.json") + " " + shares);
    CHECK(mismatch.exit_code == 2);
    CHECK(mismatch.errors.find("share file belongs to instance") != std::string::npos);

    // Tampered share values are not a codeword.
    json corrupt = share_doc;
    corrupt["values"] = json::parse("[1,0,0,0,0,0]");
    const std::string corrupt_path = write_temp("corrupt.json", corrupt.dump());
    const CmdResult bad = run_cli("reconstruct " + config_path("instance_a.json") + " " +
                                  corrupt_path);
    CHECK(bad.exit_code == 4);

    std::remove(shares.c_str());
    std::remove(shares_again.c_str());
    std::remove(corrupt_path.c_str());
}

TEST_CASE("config and cap problems use their exit codes") {
    const std::string bad_key = write_temp(
        "bad_key.json",
        R"({"field": {"p": 5, "m": 1}, "curve": {"model": "rational"},
            "u": 1, "n": 3, "L": 1, "oops": 1})");
    const CmdResult schema = run_cli("analyze " + bad_key);
    CHECK(schema.exit_code == 2);
    CHECK(schema.errors.find("unknown key \"oops\"") != std::string::npos);

    const std::string crowded = write_temp(
        "crowded.json",
        R"({"field": {"p": 2, "m": 2}, "curve": {"model": "hermitian", "q0": 2},
            "u": 4, "n": 8, "L": 2})");
    const CmdResult invalid = run_cli("thresholds " + crowded);
    CHECK(invalid.exit_code == 2);

    const CmdResult capped =
        run_cli("analyze " + config_path("instance_a.json") + " --mode oracle --cap 1000");
    CHECK(capped.exit_code == 3);
    CHECK(capped.errors.find("exceeds cap") != std::string::npos);

    const CmdResult usage = run_cli("analyze");
    CHECK(usage.exit_code == 2);

    const CmdResult help = run_cli("--help");
    CHECK(help.exit_code == 0);

    std::remove(bad_key.c_str());
    std::remove(crowded.c_str());
}

}  // TEST_SUITE
