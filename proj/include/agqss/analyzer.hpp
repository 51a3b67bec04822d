#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "agqss/qsim.hpp"
#include "agqss/scheme.hpp"

namespace agqss::analyzer {

/// All subsets of {0, ..., n-1} ordered by size, then lexicographically by
/// index list. This is the canonical sweep and report order. n is limited to
/// 20 (DomainError beyond).
std::vector<std::vector<int>> subsets_in_order(int n);

/// Worker count for sweep parallelism: the value of AGQSS_THREADS when it is
/// a positive integer, otherwise 1.
int thread_count_from_env();

struct SubsetRecord {
    std::vector<int> j_set;
    qsim::AccessClass cls;
    /// Per-path verdicts; present when the respective path ran.
    std::optional<qsim::AccessClass> fast;
    std::optional<qsim::AccessClass> oracle;
};

struct SizeTally {
    int size = 0;
    std::uint64_t forbidden = 0;
    std::uint64_t intermediate = 0;
    std::uint64_t qualified = 0;
};

/// Exact access structure of one instance. The guaranteed thresholds are
/// checked against the sweep: every set of size <= thresholds.forbidden must
/// be forbidden and every set of size >= thresholds.qualified must be
/// qualified (a vacuous threshold imposes nothing). Violations clear the
/// corresponding soundness flag and are listed as counterexamples.
struct AccessReport {
    qsim::Mode mode = qsim::Mode::Fast;
    scheme::Thresholds thresholds{};
    std::vector<SubsetRecord> subsets;  // all 2^n, in subsets_in_order order
    std::vector<SizeTally> by_size;     // one entry per size 0..n
    bool forbidden_threshold_sound = true;
    bool qualified_threshold_sound = true;
    std::vector<std::vector<int>> forbidden_counterexamples;
    std::vector<std::vector<int>> qualified_counterexamples;
};

/// Classifies every share subset. The sweep is limited to n <= 12 (CapError
/// beyond); cap violations inside a subset check are rethrown with that
/// subset named. Results are independent of the thread count, and when
/// several subsets fail the error from the earliest one in sweep order is
/// the one reported.
AccessReport classify_all(const scheme::CodePair& pair, qsim::Mode mode,
                          const qsim::Caps& caps = qsim::Caps{}, int threads = 1);

struct StrongRecord {
    std::vector<int> i_set;  // masked secret coordinates
    std::vector<int> j_set;
    bool secure = false;
    std::optional<bool> fast;
    std::optional<bool> oracle;
    /// |J| <= revealed count + forbidden threshold: the size bound that
    /// guarantees security.
    bool within_bound = false;
};

/// Strong security of every masked coordinate set against every share
/// subset. The size bound is checked for soundness: within_bound must imply
/// secure. Secure pairs beyond the bound are expected, the bound is
/// sufficient rather than necessary.
struct StrongReport {
    qsim::Mode mode = qsim::Mode::Fast;
    scheme::Thresholds thresholds{};
    std::vector<StrongRecord> pairs;  // I outer, J inner, each size-then-lex
    bool bound_sound = true;
    std::vector<std::pair<std::vector<int>, std::vector<int>>> counterexamples;
};

StrongReport strong_security_map(const scheme::CodePair& pair, qsim::Mode mode,
                                 const qsim::Caps& caps = qsim::Caps{}, int threads = 1);

}  // namespace agqss::analyzer
