#include "agqss/qsim.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace agqss::qsim {

using fqmat::MatrixFq;
using scheme::CodePair;

namespace {

std::string subset_str(const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + "}";
}

std::uint64_t checked_pow(int q, int e, std::uint64_t cap, const std::string& what) {
    std::uint64_t v = 1;
    for (int i = 0; i < e; ++i) {
        if (v > cap / static_cast<std::uint64_t>(q))
            throw CapError(what + " " + std::to_string(q) + "^" + std::to_string(e) +
                           " exceeds cap " + std::to_string(cap));
        v *= static_cast<std::uint64_t>(q);
    }
    if (v > cap)
        throw CapError(what + " " + std::to_string(v) + " exceeds cap " + std::to_string(cap));
    return v;
}

// Advances a base-q tuple; returns false after the last one wraps to zero.
bool next_tuple(std::vector<int>& t, int q) {
    for (std::size_t i = t.size(); i-- > 0;) {
        if (++t[i] < q) return true;
        t[i] = 0;
    }
    return false;
}

void validate_secret(const CodePair& pair, const std::vector<int>& s) {
    if (static_cast<int>(s.size()) != pair.secret_len())
        throw DomainError("secret length " + std::to_string(s.size()) + ", expected " +
                          std::to_string(pair.secret_len()));
    for (int v : s)
        if (v < 0 || v >= pair.field_ptr()->order())
            throw DomainError("secret entry " + std::to_string(v) + " out of field range");
}

std::vector<int> subvector(const std::vector<int>& x, const std::vector<int>& idx) {
    std::vector<int> out;
    out.reserve(idx.size());
    for (int i : idx) out.push_back(x[i]);
    return out;
}

// Coset members grouped by their values outside J, each member reduced to its
// packed J coordinates (first J coordinate most significant).
using Buckets = std::map<std::vector<int>, std::vector<std::uint64_t>>;

Buckets bucket_coset(const CodePair& pair, const std::vector<int>& secret,
                     const std::vector<int>& j_set, const std::vector<int>& jbar,
                     const Caps& caps) {
    const int q = pair.field_ptr()->order();
    Buckets buckets;
    for (const auto& x : fqmat::enumerate_coset(pair.coset_of(secret), caps.coset)) {
        std::uint64_t packed = 0;
        for (int idx : j_set) packed = packed * q + static_cast<std::uint64_t>(x[idx]);
        buckets[subvector(x, jbar)].push_back(packed);
    }
    return buckets;
}

void accumulate_pairs(std::map<SubsystemOperator::Key, long long>& counts, const Buckets& bra,
                      const Buckets& ket) {
    for (const auto& [key, rows] : bra) {
        const auto it = ket.find(key);
        if (it == ket.end()) continue;
        for (std::uint64_t r : rows)
            for (std::uint64_t c : it->second) ++counts[{r, c}];
    }
}

CheckOutcome make_outcome(std::optional<bool> fast, std::optional<bool> oracle,
                          const std::string& what) {
    if (fast && oracle && *fast != *oracle)
        throw ConsistencyError("fast and oracle paths disagree on " + what);
    return CheckOutcome{fast, oracle, fast ? *fast : *oracle};
}

bool forbidden_fast(const CodePair& pair, const std::vector<int>& j_set,
                    const std::vector<int>& jbar) {
    const int on_j = fqmat::projected_dim(pair.message_to_shares(), j_set) -
                     fqmat::projected_dim(pair.inner_gen(), j_set);
    const int on_rest = fqmat::projected_dim(pair.message_to_shares(), jbar) -
                        fqmat::projected_dim(pair.inner_gen(), jbar);
    return on_j == 0 && on_rest == pair.secret_len();
}

// All q^L secrets with their coset buckets. Guarded by the total encoded
// family size q^message_dim.
std::vector<std::pair<std::vector<int>, Buckets>> all_secret_buckets(const CodePair& pair,
                                                                     const std::vector<int>& j_set,
                                                                     const std::vector<int>& jbar,
                                                                     const Caps& caps) {
    const int q = pair.field_ptr()->order();
    checked_pow(q, pair.message_dim(), caps.coset, "encoded family size");
    std::vector<std::pair<std::vector<int>, Buckets>> out;
    std::vector<int> s(pair.secret_len(), 0);
    do {
        out.emplace_back(s, bucket_coset(pair, s, j_set, jbar, caps));
    } while (next_tuple(s, q));
    return out;
}

bool forbidden_oracle(const CodePair& pair, const std::vector<int>& j_set,
                      const std::vector<int>& jbar, const Caps& caps) {
    const int q = pair.field_ptr()->order();
    const std::uint64_t dim = checked_pow(q, static_cast<int>(j_set.size()), caps.operator_dim,
                                          "operator dimension");
    const long long den =
        static_cast<long long>(checked_pow(q, pair.inner_dim(), caps.coset, "inner code size"));
    const auto buckets = all_secret_buckets(pair, j_set, jbar, caps);

    // Diagonal units must all be the same operator.
    std::optional<SubsystemOperator> ref;
    for (const auto& [s, b] : buckets) {
        (void)s;
        std::map<SubsystemOperator::Key, long long> counts;
        accumulate_pairs(counts, b, b);
        SubsystemOperator op(j_set, dim, den, std::move(counts));
        if (!ref) {
            ref = std::move(op);
        } else if (!ref->same_operator(op)) {
            return false;
        }
    }
    // Off-diagonal units must vanish; transposes cover the swapped order.
    for (std::size_t a = 0; a < buckets.size(); ++a) {
        for (std::size_t b = a + 1; b < buckets.size(); ++b) {
            std::map<SubsystemOperator::Key, long long> counts;
            accumulate_pairs(counts, buckets[a].second, buckets[b].second);
            if (!counts.empty()) return false;
        }
    }
    return true;
}

bool strong_fast(const CodePair& pair, const std::vector<int>& i_set,
                 const std::vector<int>& j_set, const std::vector<int>& jbar) {
    const scheme::ExtendedPair ext = extended_pair(pair, i_set);
    const int leak_j = fqmat::projected_dim(ext.c1_gen, j_set) -
                       fqmat::projected_dim(ext.c2_gen, j_set);
    std::vector<int> rest = jbar;
    for (std::size_t k = 0; k < ext.kept.size(); ++k)
        rest.push_back(pair.n() + static_cast<int>(k));
    const int recover_rest = fqmat::projected_dim(ext.c1_gen, rest) -
                             fqmat::projected_dim(ext.c2_gen, rest);
    return leak_j == 0 && recover_rest == static_cast<int>(i_set.size());
}

bool strong_oracle(const CodePair& pair, const std::vector<int>& i_set,
                   const std::vector<int>& j_set, const std::vector<int>& jbar,
                   const Caps& caps) {
    const int q = pair.field_ptr()->order();
    const int L = pair.secret_len();
    const std::uint64_t dim = checked_pow(q, static_cast<int>(j_set.size()), caps.operator_dim,
                                          "operator dimension");
    std::vector<int> kept;
    {
        std::set<int> is(i_set.begin(), i_set.end());
        for (int i = 0; i < L; ++i)
            if (!is.count(i)) kept.push_back(i);
    }
    const long long den = static_cast<long long>(checked_pow(
        q, pair.inner_dim() + static_cast<int>(kept.size()), caps.coset, "merged coset size"));
    const auto merge = [&](const std::vector<int>& sigma, const std::vector<int>& t) {
        std::vector<int> s(L, 0);
        for (std::size_t k = 0; k < i_set.size(); ++k) s[i_set[k]] = sigma[k];
        for (std::size_t k = 0; k < kept.size(); ++k) s[kept[k]] = t[k];
        return s;
    };

    // Buckets for every full secret, keyed by the secret vector.
    checked_pow(q, pair.message_dim(), caps.coset, "encoded family size");
    std::map<std::vector<int>, Buckets> cache;
    {
        std::vector<int> s(L, 0);
        do {
            cache.emplace(s, bucket_coset(pair, s, j_set, jbar, caps));
        } while (next_tuple(s, q));
    }

    // The masked part is averaged against the public part: operators sum the
    // matrix units over all public values t with the same t on both sides.
    const auto merged_counts = [&](const std::vector<int>& sigma_a, const std::vector<int>& sigma_b) {
        std::map<SubsystemOperator::Key, long long> counts;
        std::vector<int> t(kept.size(), 0);
        do {
            accumulate_pairs(counts, cache.at(merge(sigma_a, t)), cache.at(merge(sigma_b, t)));
        } while (next_tuple(t, q));
        return counts;
    };

    std::vector<std::vector<int>> sigmas;
    {
        std::vector<int> sigma(i_set.size(), 0);
        do {
            sigmas.push_back(sigma);
        } while (next_tuple(sigma, q));
    }
    std::optional<SubsystemOperator> ref;
    for (const auto& sigma : sigmas) {
        SubsystemOperator op(j_set, dim, den, merged_counts(sigma, sigma));
        if (!ref) {
            ref = std::move(op);
        } else if (!ref->same_operator(op)) {
            return false;
        }
    }
    for (std::size_t a = 0; a < sigmas.size(); ++a)
        for (std::size_t b = a + 1; b < sigmas.size(); ++b)
            if (!merged_counts(sigmas[a], sigmas[b]).empty()) return false;
    return true;
}

}  // namespace

SubsystemOperator::SubsystemOperator(std::vector<int> subsystem, std::uint64_t dim,
                                     long long denominator, std::map<Key, long long> counts)
    : subsystem_(std::move(subsystem)), dim_(dim), denominator_(denominator),
      counts_(std::move(counts)) {
    if (dim_ < 1) throw DomainError("operator dimension must be positive");
    if (denominator_ <= 0) throw DomainError("operator denominator must be positive");
    for (auto it = counts_.begin(); it != counts_.end();) {
        if (it->first.first >= dim_ || it->first.second >= dim_)
            throw DomainError("operator entry index out of range");
        it = it->second == 0 ? counts_.erase(it) : std::next(it);
    }
}

Rational SubsystemOperator::entry(std::uint64_t row, std::uint64_t col) const {
    if (row >= dim_ || col >= dim_) throw DomainError("operator entry index out of range");
    const auto it = counts_.find({row, col});
    if (it == counts_.end()) return Rational(0);
    return Rational(it->second) / Rational(denominator_);
}

Rational SubsystemOperator::trace() const {
    long long diag = 0;
    for (const auto& [key, c] : counts_)
        if (key.first == key.second) diag += c;
    return Rational(diag) / Rational(denominator_);
}

bool SubsystemOperator::same_operator(const SubsystemOperator& other) const {
    if (subsystem_ != other.subsystem_ || dim_ != other.dim_) return false;
    const auto matches = [&](const std::map<Key, long long>& a, long long da,
                             const std::map<Key, long long>& b, long long db) {
        for (const auto& [key, ca] : a) {
            const auto it = b.find(key);
            const long long cb = it == b.end() ? 0 : it->second;
            if (static_cast<__int128>(ca) * db != static_cast<__int128>(cb) * da) return false;
        }
        return true;
    };
    return matches(counts_, denominator_, other.counts_, other.denominator_) &&
           matches(other.counts_, other.denominator_, counts_, denominator_);
}

SubsystemOperator reduced_matrix_unit(const CodePair& pair, const std::vector<int>& s,
                                      const std::vector<int>& s_prime,
                                      const std::vector<int>& j_set, const Caps& caps) {
    fqmat::validate_index_subset(j_set, pair.n());
    validate_secret(pair, s);
    validate_secret(pair, s_prime);
    const int q = pair.field_ptr()->order();
    const std::uint64_t dim = checked_pow(q, static_cast<int>(j_set.size()), caps.operator_dim,
                                          "operator dimension");
    const long long den =
        static_cast<long long>(checked_pow(q, pair.inner_dim(), caps.coset, "inner code size"));
    const std::vector<int> jbar = complement_subset(j_set, pair.n());
    const Buckets bra = bucket_coset(pair, s, j_set, jbar, caps);
    std::map<SubsystemOperator::Key, long long> counts;
    if (s == s_prime) {
        accumulate_pairs(counts, bra, bra);
    } else {
        accumulate_pairs(counts, bra, bucket_coset(pair, s_prime, j_set, jbar, caps));
    }
    return SubsystemOperator(j_set, dim, den, std::move(counts));
}

bool is_psd(const SubsystemOperator& op) {
    if (op.dim() > 1024)
        throw CapError("positive-semidefiniteness sweep refused for dimension " +
                       std::to_string(op.dim()));
    const std::size_t n = static_cast<std::size_t>(op.dim());
    for (const auto& [key, c] : op.counts()) {
        const auto it = op.counts().find({key.second, key.first});
        if (it == op.counts().end() || it->second != c)
            throw DomainError("operator is not symmetric");
    }
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
    for (const auto& [key, c] : op.counts())
        m[static_cast<std::size_t>(key.first)][static_cast<std::size_t>(key.second)] = Rational(c);
    // Symmetric elimination: every pivot of the Schur complement chain must be
    // non-negative, and a zero pivot forces its whole row to vanish.
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i][i] < 0) return false;
        if (m[i][i] == 0) {
            for (std::size_t j = i + 1; j < n; ++j)
                if (m[i][j] != 0) return false;
            continue;
        }
        for (std::size_t r = i + 1; r < n; ++r) {
            if (m[r][i] == 0) continue;
            const Rational f = m[r][i] / m[i][i];
            for (std::size_t c = i; c < n; ++c) m[r][c] -= f * m[i][c];
        }
    }
    return true;
}

std::vector<int> complement_subset(const std::vector<int>& j_set, int n) {
    fqmat::validate_index_subset(j_set, n);
    std::vector<int> out;
    out.reserve(n - j_set.size());
    std::size_t p = 0;
    for (int i = 0; i < n; ++i) {
        if (p < j_set.size() && j_set[p] == i) {
            ++p;
            continue;
        }
        out.push_back(i);
    }
    return out;
}

CheckOutcome is_forbidden_exact(const CodePair& pair, const std::vector<int>& j_set, Mode mode,
                                const Caps& caps) {
    fqmat::validate_index_subset(j_set, pair.n());
    const std::vector<int> jbar = complement_subset(j_set, pair.n());
    std::optional<bool> fast, oracle;
    if (mode != Mode::Oracle) fast = forbidden_fast(pair, j_set, jbar);
    if (mode != Mode::Fast) oracle = forbidden_oracle(pair, j_set, jbar, caps);
    return make_outcome(fast, oracle, "forbidden check of " + subset_str(j_set));
}

CheckOutcome is_qualified_exact(const CodePair& pair, const std::vector<int>& j_set, Mode mode,
                                const Caps& caps) {
    // J recovers the secret exactly when its complement reveals nothing.
    fqmat::validate_index_subset(j_set, pair.n());
    const std::vector<int> jbar = complement_subset(j_set, pair.n());
    std::optional<bool> fast, oracle;
    if (mode != Mode::Oracle) fast = forbidden_fast(pair, jbar, j_set);
    if (mode != Mode::Fast) oracle = forbidden_oracle(pair, jbar, j_set, caps);
    return make_outcome(fast, oracle, "qualified check of " + subset_str(j_set));
}

CheckOutcome strong_security_exact(const CodePair& pair, const std::vector<int>& i_set,
                                   const std::vector<int>& j_set, Mode mode, const Caps& caps) {
    fqmat::validate_index_subset(i_set, pair.secret_len());
    fqmat::validate_index_subset(j_set, pair.n());
    const std::vector<int> jbar = complement_subset(j_set, pair.n());
    std::optional<bool> fast, oracle;
    if (mode != Mode::Oracle) fast = strong_fast(pair, i_set, j_set, jbar);
    if (mode != Mode::Fast) oracle = strong_oracle(pair, i_set, j_set, jbar, caps);
    return make_outcome(fast, oracle, "strong security of masked " + subset_str(i_set) +
                                          " against " + subset_str(j_set));
}

Classification classify(const CodePair& pair, const std::vector<int>& j_set, Mode mode,
                        const Caps& caps) {
    CheckOutcome forbidden = is_forbidden_exact(pair, j_set, mode, caps);
    CheckOutcome qualified = is_qualified_exact(pair, j_set, mode, caps);
    if (forbidden.value && qualified.value)
        throw ConsistencyError("share set " + subset_str(j_set) +
                               " cannot be both forbidden and qualified");
    const AccessClass cls = forbidden.value    ? AccessClass::Forbidden
                            : qualified.value ? AccessClass::Qualified
                                              : AccessClass::Intermediate;
    return Classification{cls, forbidden, qualified};
}

namespace {

// Exhaustive decoder verification: on every coset, the relabeled J shares
// must carry the secret in the first coordinates while the junk coordinates
// and the unobserved shares trace out one secret-independent set.
void verify_decoder(const CodePair& pair, const Decoder& dec, const Caps& caps) {
    const int q = pair.field_ptr()->order();
    checked_pow(q, pair.message_dim(), caps.coset, "encoded family size");
    const std::vector<int> jbar = complement_subset(dec.j_set, pair.n());
    std::optional<std::set<std::pair<std::vector<int>, std::vector<int>>>> ref;
    std::vector<int> s(pair.secret_len(), 0);
    do {
        const auto members = fqmat::enumerate_coset(pair.coset_of(s), caps.coset);
        std::set<std::pair<std::vector<int>, std::vector<int>>> omega;
        for (const auto& x : members) {
            const std::vector<int> xj = subvector(x, dec.j_set);
            if (mul_left(xj, dec.secret_map) != s)
                throw ConsistencyError("synthesized decoder misreads a coset member");
            omega.insert({mul_left(xj, dec.junk_map), subvector(x, jbar)});
        }
        if (omega.size() != members.size())
            throw ConsistencyError("synthesized decoder relabeling is not injective on a coset");
        if (!ref) {
            ref = std::move(omega);
        } else if (omega != *ref) {
            throw ConsistencyError("synthesized decoder junk state depends on the secret");
        }
    } while (next_tuple(s, q));
}

}  // namespace

std::optional<Decoder> synthesize_decoder(const CodePair& pair, const std::vector<int>& j_set,
                                          const Caps& caps) {
    fqmat::validate_index_subset(j_set, pair.n());
    const int nj = static_cast<int>(j_set.size());
    const int L = pair.secret_len();
    const int d = pair.message_dim();
    auto field = pair.field_ptr();

    // Secret map A: every message must satisfy (shares on J) * A = secret,
    // i.e. E_J * A = E_secret as matrices on message coefficients. Column
    // systems being unsolvable means J cannot even classically reconstruct.
    const MatrixFq eval_j = pair.message_to_shares().columns(j_set);
    MatrixFq a(field, nj, L);
    for (int col = 0; col < L; ++col) {
        std::vector<int> rhs(d);
        for (int r = 0; r < d; ++r) rhs[r] = pair.message_to_secret().repr_at(r, col);
        const auto sol = fqmat::solve_affine(eval_j, rhs);
        if (!sol) return std::nullopt;
        for (int r = 0; r < nj; ++r) a.set_repr(r, col, sol->offset[r]);
    }

    // Coefficient vectors whose share words vanish outside J. Secrets must be
    // reachable inside this space, otherwise erasing the complement still
    // perturbs the secret registers and no local decoder can exist.
    const std::vector<int> jbar = complement_subset(j_set, pair.n());
    const MatrixFq d_space = fqmat::kernel_basis(pair.message_to_shares().columns(jbar).transposed());
    const MatrixFq d_secrets = matmul(d_space, pair.message_to_secret());
    MatrixFq carrier_rows(field, L, nj);  // J shares of the secret representatives
    for (int i = 0; i < L; ++i) {
        std::vector<int> e(L, 0);
        e[i] = 1;
        const auto sol = fqmat::solve_affine(d_secrets.transposed(), e);
        if (!sol) return std::nullopt;
        const std::vector<int> coeff = mul_left(sol->offset, d_space);
        const std::vector<int> word = mul_left(coeff, pair.message_to_shares());
        for (int c = 0; c < nj; ++c) carrier_rows.set_repr(i, c, word[j_set[c]]);
    }

    // J shares of inner codewords supported on J alone.
    const MatrixFq inner_coeffs = matmul(fqmat::kernel_basis(d_secrets.transposed()), d_space);
    const MatrixFq inner_rows = matmul(inner_coeffs, pair.message_to_shares()).columns(j_set);
    const int k2 = inner_rows.rows();

    // Junk map B: zero on the secret carriers, a distinct junk unit on each
    // local inner direction, remaining units on a greedy completion.
    MatrixFq basis_rows = vstack(carrier_rows, inner_rows);
    if (fqmat::rank(basis_rows) != basis_rows.rows())
        throw ConsistencyError("local carrier and inner rows are not independent");
    std::vector<std::vector<int>> completion;
    for (int t = 0; t < nj && basis_rows.rows() + static_cast<int>(completion.size()) < nj; ++t) {
        std::vector<int> unit(nj, 0);
        unit[t] = 1;
        MatrixFq probe = basis_rows;
        for (const auto& row : completion) probe = vstack(probe, MatrixFq::from_rows(field, {row}));
        probe = vstack(probe, MatrixFq::from_rows(field, {unit}));
        if (fqmat::rank(probe) == probe.rows()) completion.push_back(unit);
    }
    for (const auto& row : completion)
        basis_rows = vstack(basis_rows, MatrixFq::from_rows(field, {row}));
    if (basis_rows.rows() != nj || fqmat::rank(basis_rows) != nj)
        throw ConsistencyError("relabeling basis does not span the local share space");

    const int junk_dim = nj - L;
    MatrixFq targets(field, nj, junk_dim);
    for (int j = 0; j < k2 + static_cast<int>(completion.size()); ++j)
        targets.set_repr(L + j, j, 1);
    MatrixFq b(field, nj, junk_dim);
    for (int col = 0; col < junk_dim; ++col) {
        std::vector<int> rhs(nj);
        for (int r = 0; r < nj; ++r) rhs[r] = targets.repr_at(r, col);
        const auto sol = fqmat::solve_affine(basis_rows, rhs);
        if (!sol || sol->basis.rows() != 0)
            throw ConsistencyError("relabeling basis failed to invert");
        for (int r = 0; r < nj; ++r) b.set_repr(r, col, sol->offset[r]);
    }

    if (fqmat::rank(hstack(a, b)) != nj)
        throw ConsistencyError("synthesized relabeling is not invertible");
    Decoder dec{j_set, std::move(a), std::move(b)};
    verify_decoder(pair, dec, caps);
    return dec;
}

}  // namespace agqss::qsim
