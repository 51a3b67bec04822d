#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "agqss/rational.hpp"
#include "agqss/scheme.hpp"

namespace agqss::classical_ss {

/// Uniform draw from [0, q) by rejection sampling on the raw 64-bit stream.
int uniform_repr(std::mt19937_64& rng, int q);

/// Share vector of a function drawn uniformly from {h : h(secret places) =
/// secret}. The caller owns the generator and its seed.
std::vector<int> deal(const scheme::CodePair& pair, const std::vector<int>& secret,
                      std::mt19937_64& rng);

struct Reconstruction {
    /// Set when the observed shares pin down the secret uniquely.
    std::optional<std::vector<int>> secret;
    /// Number of secrets consistent with the observation (1 when unique).
    std::uint64_t candidate_count;
};

/// Reconstruct from the share values observed on the 0-based ascending
/// coordinate set j_set. Throws NotACodewordError when no share codeword
/// matches the observation.
Reconstruction reconstruct(const scheme::CodePair& pair, const std::vector<int>& j_set,
                           const std::vector<int>& values);

/// Mutual information between a uniform secret and the shares on j_set, in
/// units of log q, computed by exhaustive enumeration of the message space
/// (throws CapError past coset_cap). Every fiber count must come out a power
/// of q; anything else is a ConsistencyError.
Rational leakage_exact(const scheme::CodePair& pair, const std::vector<int>& j_set,
                       std::uint64_t coset_cap = fqmat::kDefaultCosetCap);

}  // namespace agqss::classical_ss
