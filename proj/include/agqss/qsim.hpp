#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "agqss/rational.hpp"
#include "agqss/scheme.hpp"

namespace agqss::qsim {

/// Enumeration and operator-size limits. Exceeding either throws CapError.
struct Caps {
    std::uint64_t coset = fqmat::kDefaultCosetCap;
    std::uint64_t operator_dim = 4096;
};

enum class Mode { Fast, Oracle, Both };

/// Which computation paths ran and the agreed verdict. In Both mode a
/// fast/oracle disagreement never reaches the caller: it throws
/// ConsistencyError at the check site.
struct CheckOutcome {
    std::optional<bool> fast;
    std::optional<bool> oracle;
    bool value;
};

/// Exact operator on the share subsystem J: entries are integer counts over a
/// common positive denominator, indexed by base-q packings of the J share
/// values (first listed coordinate most significant). Only nonzero counts are
/// stored.
class SubsystemOperator {
 public:
    using Key = std::pair<std::uint64_t, std::uint64_t>;

    SubsystemOperator(std::vector<int> subsystem, std::uint64_t dim, long long denominator,
                      std::map<Key, long long> counts);

    const std::vector<int>& subsystem() const { return subsystem_; }
    std::uint64_t dim() const { return dim_; }
    long long denominator() const { return denominator_; }
    const std::map<Key, long long>& counts() const { return counts_; }

    Rational entry(std::uint64_t row, std::uint64_t col) const;
    Rational trace() const;
    bool is_zero() const { return counts_.empty(); }
    /// Mathematical equality: same subsystem and entries (cross-multiplied,
    /// denominators need not match).
    bool same_operator(const SubsystemOperator& other) const;

 private:
    std::vector<int> subsystem_;
    std::uint64_t dim_;
    long long denominator_;
    std::map<Key, long long> counts_;
};

/// Reduced operator on J of the encoded |s><s'| unit: share cosets of s and
/// s' are enumerated, pairs agreeing outside J are tallied, and the result is
/// divided by the inner code size.
SubsystemOperator reduced_matrix_unit(const scheme::CodePair& pair, const std::vector<int>& s,
                                      const std::vector<int>& s_prime, const std::vector<int>& j_set,
                                      const Caps& caps = Caps{});

/// Exact positive-semidefiniteness by rational symmetric elimination. The
/// operator must be symmetric (DomainError otherwise); dimensions above 1024
/// are refused with CapError since the dense sweep is cubic.
bool is_psd(const SubsystemOperator& op);

std::vector<int> complement_subset(const std::vector<int>& j_set, int n);

/// J forbidden: the reduced state on J is one fixed operator regardless of
/// the secret. Fast path compares projected code dimensions on J and its
/// complement; oracle path sweeps all reduced matrix units (diagonal units
/// equal, off-diagonal units zero). Both paths must agree in Both mode.
CheckOutcome is_forbidden_exact(const scheme::CodePair& pair, const std::vector<int>& j_set,
                                Mode mode, const Caps& caps = Caps{});

/// J qualified: the secret is exactly recoverable from J. Equivalent to the
/// complement being forbidden; oracle operators act on the complement, so the
/// dimension cap applies to q^(n-|J|).
CheckOutcome is_qualified_exact(const scheme::CodePair& pair, const std::vector<int>& j_set,
                                Mode mode, const Caps& caps = Caps{});

/// Strong security of the masked secret coordinates I against share set J
/// when the remaining coordinates are public: J learns nothing about s_I even
/// knowing s outside I. Oracle path sums matrix units over the public part
/// with denominator |C2| * q^(kept count); fast path tests the extended pair
/// projections.
CheckOutcome strong_security_exact(const scheme::CodePair& pair, const std::vector<int>& i_set,
                                   const std::vector<int>& j_set, Mode mode,
                                   const Caps& caps = Caps{});

enum class AccessClass { Forbidden, Intermediate, Qualified };

struct Classification {
    AccessClass cls;
    CheckOutcome forbidden;
    CheckOutcome qualified;
};

/// Classifies one share set. A set reported both forbidden and qualified is
/// impossible for a nonempty secret and throws ConsistencyError.
Classification classify(const scheme::CodePair& pair, const std::vector<int>& j_set, Mode mode,
                        const Caps& caps = Caps{});

/// Basis relabeling that decodes a qualified set coherently: the invertible
/// map [secret_map | junk_map] sends the J share values to (secret, junk)
/// coordinates, and the junk plus unobserved shares carry a state independent
/// of the secret.
struct Decoder {
    std::vector<int> j_set;
    fqmat::MatrixFq secret_map;  // |J| x L
    fqmat::MatrixFq junk_map;    // |J| x (|J| - L)
};

/// Synthesizes and exactly verifies a decoder for J. Returns nullopt when J
/// is not qualified; verification failure of a synthesized decoder is a
/// ConsistencyError.
std::optional<Decoder> synthesize_decoder(const scheme::CodePair& pair,
                                          const std::vector<int>& j_set,
                                          const Caps& caps = Caps{});

}  // namespace agqss::qsim
