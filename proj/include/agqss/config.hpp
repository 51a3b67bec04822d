#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "agqss/funcfield.hpp"
#include "agqss/qsim.hpp"
#include "agqss/scheme.hpp"

namespace agqss::config {

/// One instance description as read from a JSON config document. Place lists
/// are optional; when absent the canonical enumeration supplies the first n
/// affine places for shares and the next L for the secret.
struct InstanceConfig {
    int p = 0;
    int m = 0;
    std::optional<std::vector<int>> modulus;
    funcfield::CurveKind kind = funcfield::CurveKind::Rational;
    int q0 = 0;  // meaningful for the hermitian model only
    int u = 0;
    int n = 0;
    int secret_len = 0;
    std::optional<std::vector<funcfield::Place>> share_places;
    std::optional<std::vector<funcfield::Place>> secret_places;
    std::uint64_t seed = 0;
    qsim::Caps caps;
    std::optional<qsim::Mode> mode;
};

/// Parses and validates one config document. Schema violations throw
/// ConfigError naming the offending field; unknown keys are rejected so
/// typos cannot silently change an instance.
InstanceConfig parse_instance_config(const std::string& text);

/// Reads and parses a config file. Unreadable files and JSON syntax errors
/// become ConfigError carrying the parser diagnostic (position included).
InstanceConfig load_instance_config(const std::string& path);

/// Builds the field, curve, and code pair the config describes. Invalid
/// schemes surface the scheme's own errors (NotInjectiveError and friends).
scheme::CodePair build_pair(const InstanceConfig& cfg);

/// "fast" | "oracle" | "both"; anything else is a ConfigError.
qsim::Mode parse_mode(const std::string& name);
std::string mode_name(qsim::Mode mode);

}  // namespace agqss::config
