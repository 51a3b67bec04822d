#include "agqss/classical_ss.hpp"

#include <map>
#include <string>
#include <utility>

namespace agqss::classical_ss {

using fqmat::MatrixFq;

int uniform_repr(std::mt19937_64& rng, int q) {
    // Accept only draws below the largest multiple of q, so the residue is
    // exactly uniform.
    const std::uint64_t residue = (~0ull % q + 1) % q;  // 2^64 mod q
    for (;;) {
        const std::uint64_t x = rng();
        if (residue == 0 || x < ~0ull - residue + 1) return static_cast<int>(x % q);
    }
}

std::vector<int> deal(const scheme::CodePair& pair, const std::vector<int>& secret,
                      std::mt19937_64& rng) {
    const int q = pair.field_ptr()->order();
    const auto coset = pair.coset_of(secret);
    std::vector<int> shares = coset.offset;
    const gf::FieldSpec& f = *pair.field_ptr();
    for (int r = 0; r < coset.basis.rows(); ++r) {
        const int coeff = uniform_repr(rng, q);
        if (coeff == 0) continue;
        for (int j = 0; j < pair.n(); ++j)
            shares[j] = f.add_repr(shares[j], f.mul_repr(coeff, coset.basis.repr_at(r, j)));
    }
    return shares;
}

Reconstruction reconstruct(const scheme::CodePair& pair, const std::vector<int>& j_set,
                           const std::vector<int>& values) {
    fqmat::validate_index_subset(j_set, pair.n());
    if (values.size() != j_set.size())
        throw DomainError("observed " + std::to_string(values.size()) + " values for " +
                          std::to_string(j_set.size()) + " coordinates");
    const int q = pair.field_ptr()->order();
    for (int v : values)
        if (v < 0 || v >= q) throw DomainError("share value " + std::to_string(v) + " out of field range");

    // Coefficient vectors of all messages matching the observation.
    const MatrixFq eval_j = pair.message_to_shares().columns(j_set);
    const auto sol = fqmat::solve_affine(eval_j.transposed(), values);
    if (!sol) throw NotACodewordError("share values are inconsistent with the share code");

    // The candidate secrets form a coset; its size is q^rank of the kernel
    // directions pushed through the secret map.
    const std::vector<int> secret0 = mul_left(sol->offset, pair.message_to_secret());
    const int spread = fqmat::rank(matmul(sol->basis, pair.message_to_secret()));
    std::uint64_t count = 1;
    for (int i = 0; i < spread; ++i) count *= static_cast<std::uint64_t>(q);
    Reconstruction out{std::nullopt, count};
    if (spread == 0) out.secret = secret0;
    return out;
}

namespace {

// log_q of a positive power of q; anything else is an internal error.
int exact_log_q(std::uint64_t count, int q) {
    int k = 0;
    std::uint64_t c = count;
    while (c % q == 0) {
        c /= q;
        ++k;
    }
    if (c != 1)
        throw ConsistencyError("fiber count " + std::to_string(count) + " is not a power of " +
                               std::to_string(q));
    return k;
}

}  // namespace

Rational leakage_exact(const scheme::CodePair& pair, const std::vector<int>& j_set,
                       std::uint64_t coset_cap) {
    fqmat::validate_index_subset(j_set, pair.n());
    const int q = pair.field_ptr()->order();
    const int d = pair.message_dim();
    const std::uint64_t total = fqmat::coset_size_checked(q, d, coset_cap);

    const MatrixFq eval_j = pair.message_to_shares().columns(j_set);
    const fqmat::AffineCoset whole{std::vector<int>(d, 0),
                                   fqmat::MatrixFq::identity(pair.field_ptr(), d)};
    std::map<std::vector<int>, std::uint64_t> secret_tally;
    std::map<std::vector<int>, std::uint64_t> view_tally;
    std::map<std::pair<std::vector<int>, std::vector<int>>, std::uint64_t> joint_tally;
    for (const auto& c : fqmat::enumerate_coset(whole, coset_cap)) {
        const std::vector<int> s = mul_left(c, pair.message_to_secret());
        const std::vector<int> v = mul_left(c, eval_j);
        ++secret_tally[s];
        ++view_tally[v];
        ++joint_tally[{s, v}];
    }

    // Entropy in log_q units: sum over the support of (N/T) * (log_q T -
    // log_q N). Exactness hinges on every count being a power of q.
    const auto entropy = [&](const auto& tally) {
        Rational h = 0;
        for (const auto& [key, count] : tally) {
            (void)key;
            const int k = exact_log_q(count, q);
            h += Rational(count) / Rational(total) * Rational(d - k);
        }
        return h;
    };
    return entropy(secret_tally) + entropy(view_tally) - entropy(joint_tally);
}

}  // namespace agqss::classical_ss
