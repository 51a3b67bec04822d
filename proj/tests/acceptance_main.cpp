// Acceptance driver: eight exact structural checks over the bundled
// instances, one verdict line each. Exits nonzero when any check fails or
// overruns its time budget.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "agqss/analyzer.hpp"
#include "agqss/classical_ss.hpp"
#include "agqss/errors.hpp"
#include "agqss/fqmat.hpp"
#include "agqss/funcfield.hpp"
#include "agqss/gf.hpp"
#include "agqss/qsim.hpp"
#include "agqss/rational.hpp"
#include "agqss/scheme.hpp"

namespace {

using namespace agqss;

funcfield::CurveModel hermitian2() {
    return funcfield::CurveModel::hermitian(gf::FieldSpec::make(2, 2), 2);
}

scheme::CodePair instance_rs() {
    auto line = funcfield::CurveModel::rational(gf::FieldSpec::make(5, 1));
    return scheme::CodePair::build_default(line, 1, 3, 1);
}

scheme::CodePair instance_a() { return scheme::CodePair::build_default(hermitian2(), 4, 6, 2); }

scheme::CodePair instance_b() { return scheme::CodePair::build_default(hermitian2(), 4, 7, 1); }

struct Check {
    bool ok = true;
    std::string detail;

    void expect(bool condition, const std::string& what) {
        if (!condition && ok) {
            ok = false;
            detail = what;
        }
    }
};

int failures = 0;

void run_criterion(int index, const char* name, double budget_seconds,
                   const std::function<void(Check&)>& body) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(check);
    } catch (const std::exception& err) {
        check.expect(false, std::string("exception: ") + err.what());
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = elapsed <= budget_seconds;
    const bool pass = check.ok && in_budget;
    std::printf("%s criterion %d: %s (%.2fs, budget %.0fs)\n", pass ? "PASS" : "FAIL", index,
                name, elapsed, budget_seconds);
    if (!check.ok) {
        std::printf("     detail: %s\n", check.detail.c_str());
    } else if (!in_budget) {
        std::printf("     detail: over time budget\n");
    }
    failures += pass ? 0 : 1;
}

/// Exact mutual information between secret and the shares in J, in units of
/// log q, from full enumeration.
Rational leakage(const scheme::CodePair& pair, const std::vector<int>& j_set) {
    return classical_ss::leakage_exact(pair, j_set);
}

int projection_gap(const scheme::CodePair& pair, const std::vector<int>& j_set) {
    return fqmat::projected_dim(pair.message_to_shares(), j_set) -
           fqmat::projected_dim(pair.inner_gen(), j_set);
}

std::vector<int> random_secret(const scheme::CodePair& pair, std::mt19937_64& rng) {
    std::vector<int> secret(static_cast<std::size_t>(pair.secret_len()));
    for (int& digit : secret) {
        digit = classical_ss::uniform_repr(rng, pair.field_ptr()->order());
    }
    return secret;
}

void criterion_curve_points(Check& check) {
    const funcfield::CurveModel curve = hermitian2();
    const std::vector<funcfield::Place> places = funcfield::rational_places(curve);
    std::size_t affine = 0;
    for (const funcfield::Place& place : places) {
        affine += place.at_infinity ? 0 : 1;
    }
    check.expect(affine == 8, "affine point count is not 8");
    check.expect(places.size() == 9, "total place count is not 9");
    check.expect(funcfield::hasse_weil_bound(curve) == 9, "Hasse-Weil value is not 9");
    check.expect(static_cast<int>(places.size()) == 1 + 4 + 1 * 4,
                 "count does not meet 1 + q + g * floor(2 sqrt(q))");
}

void criterion_function_space_dims(Check& check) {
    const funcfield::CurveModel curve = hermitian2();
    const int genus = curve.genus();
    check.expect(genus == 1, "genus is not 1");
    for (int u = 1; u <= 20; ++u) {
        const std::size_t dim = funcfield::rr_basis(curve, u).size();
        check.expect(static_cast<int>(dim) == u - genus + 1,
                     "dim at u=" + std::to_string(u) + " is " + std::to_string(dim));
    }
    const std::vector<funcfield::Monomial> basis = funcfield::rr_basis(curve, 4);
    const std::set<std::pair<int, int>> got = [&] {
        std::set<std::pair<int, int>> out;
        for (const funcfield::Monomial& mono : basis) {
            out.insert({mono.x_exp, mono.y_exp});
        }
        return out;
    }();
    const std::set<std::pair<int, int>> expected = {{0, 0}, {1, 0}, {2, 0}, {0, 1}};
    check.expect(got == expected, "u=4 basis is not {1, x, x^2, y}");
}

void criterion_instance_a_oracle(Check& check) {
    const scheme::CodePair pair = instance_a();
    const scheme::Thresholds th = scheme::thresholds(pair);
    check.expect(th.forbidden == 1 && !th.forbidden_vacuous, "forbidden threshold is not 1");
    check.expect(th.qualified == 5 && !th.qualified_vacuous, "qualified threshold is not 5");

    const int threads = analyzer::thread_count_from_env();
    const qsim::Caps caps;  // 4^6 = 4096 is exactly the default operator cap
    const analyzer::AccessReport access =
        analyzer::classify_all(pair, qsim::Mode::Both, caps, threads);
    check.expect(access.subsets.size() == 64, "subset sweep is not 64 wide");
    for (const analyzer::SubsetRecord& record : access.subsets) {
        const int size = static_cast<int>(record.j_set.size());
        check.expect(record.fast.has_value() && record.oracle.has_value(),
                     "a subset is missing a path verdict");
        check.expect(*record.fast == *record.oracle, "fast and oracle classifications differ");
        if (size <= 1) {
            check.expect(record.cls == qsim::AccessClass::Forbidden,
                         "a set of size <= 1 is not forbidden");
        }
        if (size >= 5) {
            check.expect(record.cls == qsim::AccessClass::Qualified,
                         "a set of size >= 5 is not qualified");
        }
    }
    check.expect(access.forbidden_threshold_sound && access.qualified_threshold_sound,
                 "threshold soundness flags are not all true");

    const analyzer::StrongReport strong =
        analyzer::strong_security_map(pair, qsim::Mode::Both, caps, threads);
    check.expect(strong.pairs.size() == 4 * 64, "strong sweep is not 4 x 64 wide");
    for (const analyzer::StrongRecord& record : strong.pairs) {
        check.expect(record.fast.has_value() && record.oracle.has_value(),
                     "a strong pair is missing a path verdict");
        check.expect(*record.fast == *record.oracle, "fast and oracle strong verdicts differ");
    }
}

void criterion_instance_b_wide(Check& check) {
    const scheme::CodePair pair = instance_b();
    check.expect(pair.n() == 7 && pair.field_ptr()->order() == 4,
                 "instance does not have more shares than field elements");
    const scheme::Thresholds th = scheme::thresholds(pair);
    check.expect(th.forbidden == 2, "forbidden threshold is not 2");
    check.expect(th.qualified == 5, "qualified threshold is not 5");

    const analyzer::AccessReport access = analyzer::classify_all(
        pair, qsim::Mode::Fast, qsim::Caps{}, analyzer::thread_count_from_env());
    check.expect(access.subsets.size() == 128, "subset sweep is not 128 wide");
    for (const analyzer::SubsetRecord& record : access.subsets) {
        const int size = static_cast<int>(record.j_set.size());
        if (size <= 2) {
            check.expect(record.cls == qsim::AccessClass::Forbidden,
                         "a set of size <= 2 is not forbidden");
        }
        if (size >= 5) {
            check.expect(record.cls == qsim::AccessClass::Qualified,
                         "a set of size >= 5 is not qualified");
        }
    }

    // Oracle agreement on 20 deterministically sampled subsets. The
    // qualified oracle works on the complement, so the operator cap must
    // admit dimension 4^7.
    qsim::Caps oracle_caps;
    oracle_caps.operator_dim = 16384;
    std::vector<std::size_t> order(access.subsets.size());
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(2026);
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t pick = 0; pick < 20; ++pick) {
        const analyzer::SubsetRecord& record = access.subsets[order[pick]];
        const qsim::Classification both =
            qsim::classify(pair, record.j_set, qsim::Mode::Both, oracle_caps);
        check.expect(both.cls == record.cls, "oracle spot-check disagrees with the fast sweep");
        check.expect(both.forbidden.fast.has_value() && both.forbidden.oracle.has_value(),
                     "spot-check did not run both paths");
    }
}

void criterion_two_test_equivalence(Check& check) {
    const scheme::CodePair pair = instance_rs();
    const std::vector<std::vector<int>> i_sets = analyzer::subsets_in_order(pair.secret_len());
    const std::vector<std::vector<int>> j_sets = analyzer::subsets_in_order(pair.n());
    check.expect(i_sets.size() * j_sets.size() == 16, "pair sweep is not 2 x 8 wide");
    for (const std::vector<int>& i_set : i_sets) {
        for (const std::vector<int>& j_set : j_sets) {
            const qsim::CheckOutcome outcome =
                qsim::strong_security_exact(pair, i_set, j_set, qsim::Mode::Both);
            check.expect(outcome.fast.has_value() && outcome.oracle.has_value(),
                         "a pair is missing a path verdict");
            check.expect(*outcome.fast == *outcome.oracle,
                         "projection criterion disagrees with the state oracle");
        }
    }
}

void criterion_bound_soundness(Check& check) {
    const int threads = analyzer::thread_count_from_env();
    for (const scheme::CodePair& pair : {instance_rs(), instance_a()}) {
        const analyzer::StrongReport strong =
            analyzer::strong_security_map(pair, qsim::Mode::Both, qsim::Caps{}, threads);
        check.expect(strong.bound_sound, "bound soundness flag is false");
        check.expect(strong.counterexamples.empty(), "counterexample list is not empty");
        for (const analyzer::StrongRecord& record : strong.pairs) {
            if (record.within_bound) {
                check.expect(record.oracle.has_value() && *record.oracle,
                             "a pair within the bound is not secure by the oracle");
            }
        }
    }
}

void criterion_classical_round_trip(Check& check) {
    std::mt19937_64 rng(9001);
    for (const scheme::CodePair& pair : {instance_rs(), instance_a(), instance_b()}) {
        const analyzer::AccessReport access = analyzer::classify_all(
            pair, qsim::Mode::Fast, qsim::Caps{}, analyzer::thread_count_from_env());
        const Rational full(pair.secret_len());
        std::vector<const analyzer::SubsetRecord*> qualified;
        for (const analyzer::SubsetRecord& record : access.subsets) {
            const Rational leak = leakage(pair, record.j_set);
            switch (record.cls) {
                case qsim::AccessClass::Forbidden:
                    check.expect(leak == 0, "leakage is nonzero on a forbidden set");
                    break;
                case qsim::AccessClass::Qualified:
                    check.expect(leak == full, "leakage is partial on a qualified set");
                    qualified.push_back(&record);
                    break;
                case qsim::AccessClass::Intermediate:
                    check.expect(leak > 0 && leak < full,
                                 "leakage is not strictly between 0 and L on an "
                                 "intermediate set");
                    break;
            }
            check.expect(leak == projection_gap(pair, record.j_set),
                         "leakage differs from the projected dimension gap");
        }
        for (int trial = 0; trial < 100; ++trial) {
            const std::vector<int> secret = random_secret(pair, rng);
            const std::vector<int> shares = classical_ss::deal(pair, secret, rng);
            for (const analyzer::SubsetRecord* record : qualified) {
                std::vector<int> values;
                values.reserve(record->j_set.size());
                for (const int j : record->j_set) {
                    values.push_back(shares[static_cast<std::size_t>(j)]);
                }
                const classical_ss::Reconstruction result =
                    classical_ss::reconstruct(pair, record->j_set, values);
                check.expect(result.secret.has_value() && *result.secret == secret,
                             "a qualified set failed to reconstruct the dealt secret");
            }
        }
    }
}

void criterion_decoder_synthesis(Check& check) {
    for (const scheme::CodePair& pair : {instance_rs(), instance_a()}) {
        const analyzer::AccessReport access = analyzer::classify_all(
            pair, qsim::Mode::Fast, qsim::Caps{}, analyzer::thread_count_from_env());
        for (const analyzer::SubsetRecord& record : access.subsets) {
            const std::optional<qsim::Decoder> decoder =
                qsim::synthesize_decoder(pair, record.j_set);
            const bool qualified = record.cls == qsim::AccessClass::Qualified;
            check.expect(decoder.has_value() == qualified,
                         "decoder existence does not match qualification");
            if (decoder.has_value()) {
                const int observed = static_cast<int>(record.j_set.size());
                check.expect(decoder->j_set == record.j_set, "decoder is for the wrong set");
                check.expect(decoder->secret_map.rows() == observed &&
                                 decoder->secret_map.cols() == pair.secret_len(),
                             "secret map has the wrong shape");
                check.expect(decoder->junk_map.rows() == observed &&
                                 decoder->junk_map.cols() == observed - pair.secret_len(),
                             "junk map has the wrong shape");
            }
        }
    }
}

}  // namespace

int main() {
    run_criterion(1, "hermitian curve point counts meet the Hasse-Weil value", 1.0,
                  criterion_curve_points);
    run_criterion(2, "function space dimensions match degree minus genus plus one", 1.0,
                  criterion_function_space_dims);
    run_criterion(3, "six share instance: oracle sweep and path agreement", 60.0,
                  criterion_instance_a_oracle);
    run_criterion(4, "seven share instance: more shares than field elements", 300.0,
                  criterion_instance_b_wide);
    run_criterion(5, "projection criterion equals the state oracle on all pairs", 5.0,
                  criterion_two_test_equivalence);
    run_criterion(6, "size bound always implies oracle security", 60.0,
                  criterion_bound_soundness);
    run_criterion(7, "classical round trip and exact leakage by class", 30.0,
                  criterion_classical_round_trip);
    run_criterion(8, "coherent decoder exists exactly on qualified sets", 60.0,
                  criterion_decoder_synthesis);

    if (failures > 0) {
        std::printf("%d of 8 criteria failed\n", failures);
        return 1;
    }
    std::printf("all 8 criteria passed\n");
    return 0;
}
