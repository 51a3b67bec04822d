#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "agqss/analyzer.hpp"
#include "agqss/classical_ss.hpp"
#include "agqss/scheme.hpp"
#include "json.hpp"

namespace agqss::report {

inline constexpr const char* kToolName = "agqss";
inline constexpr const char* kToolVersion = "0.1.0";

/// 16-hex-digit FNV-1a digest of the structural identity of an instance:
/// field, curve, degree u, and both resolved place lists. Seeds, caps, and
/// mode flags do not participate, so every run of the same scheme reports
/// the same hash regardless of how it was driven.
std::string instance_hash(const scheme::CodePair& pair);

/// Instance description block, hash included. Places are emitted as [x] for
/// the rational model and [x, y] otherwise. Share and secret indices in all
/// emitted rows are 1-based; the library API stays 0-based.
nlohmann::json instance_block(const scheme::CodePair& pair);

nlohmann::json thresholds_block(const scheme::Thresholds& th);

/// Complete analysis document. The default row selection keeps the per-size
/// tallies, the subsets whose size falls strictly between the two guaranteed
/// thresholds, every counterexample, and the strong-security table
/// aggregated per (revealed count, J). full=true lists all 2^n subsets and
/// every (I, J) pair instead.
nlohmann::json analysis_report(const scheme::CodePair& pair, const analyzer::AccessReport& access,
                               const analyzer::StrongReport& strong, bool full);

/// The same selection as one flat CSV table; leading comment lines carry the
/// tool version, instance hash, and mode.
std::string analysis_csv(const scheme::CodePair& pair, const analyzer::AccessReport& access,
                         const analyzer::StrongReport& strong, bool full);

nlohmann::json thresholds_report(const scheme::CodePair& pair, const scheme::Thresholds& th);
std::string thresholds_text(const scheme::CodePair& pair, const scheme::Thresholds& th);

/// Share file for dealt shares: 1-based indices, RNG recorded by name.
nlohmann::json share_file(const scheme::CodePair& pair, std::uint64_t seed,
                          const std::vector<int>& j_set, const std::vector<int>& values);

struct ParsedShares {
    std::string instance_hash;
    std::uint64_t seed = 0;
    std::vector<int> j_set;  // converted to 0-based
    std::vector<int> values;
};

/// Parses a share file; missing keys and malformed entries are ConfigError.
ParsedShares parse_share_file(const std::string& text);

nlohmann::json reconstruction_report(const scheme::CodePair& pair,
                                     const classical_ss::Reconstruction& result,
                                     const std::vector<int>& j_set);

std::string class_name(qsim::AccessClass cls);

}  // namespace agqss::report
