#include "agqss/scheme.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

namespace agqss::scheme {

using fqmat::AffineCoset;
using fqmat::MatrixFq;
using funcfield::CurveModel;
using funcfield::Monomial;
using funcfield::Place;

CodePair::CodePair(const CurveModel& curve)
    : curve_(curve),
      eval_p_(curve.field, 0, 0),
      eval_q_(curve.field, 0, 0),
      g2_(curve.field, 0, 0),
      secret_shift_(curve.field, 0, 0),
      kernel_coeffs_(curve.field, 0, 0),
      secret_coeffs_(curve.field, 0, 0) {}

CodePair CodePair::build(const CurveModel& curve, int u, std::vector<Place> share_places,
                         std::vector<Place> secret_places) {
    if (!curve.field) throw ConfigError("scheme requires a field");
    const int n = static_cast<int>(share_places.size());
    const int L = static_cast<int>(secret_places.size());
    if (n < 1) throw ConfigError("scheme needs at least one share place");
    if (L < 1) throw ConfigError("scheme needs at least one secret place");
    if (u < 0) throw ConfigError("pole order bound must be non-negative, got " + std::to_string(u));

    // Share and secret places must be distinct affine points of the curve;
    // the infinite place is reserved for the poles.
    const auto all_places = rational_places(curve);
    const std::set<std::pair<int, int>> on_curve = [&] {
        std::set<std::pair<int, int>> s;
        for (const Place& pl : all_places)
            if (!pl.at_infinity) s.insert({pl.x, pl.y});
        return s;
    }();
    std::set<std::pair<int, int>> used;
    for (const Place& pl : share_places) {
        if (pl.at_infinity) throw ConfigError("share places must be affine");
        if (!on_curve.count({pl.x, pl.y}))
            throw ConfigError("share place " + pl.describe() + " is not on the curve");
        if (!used.insert({pl.x, pl.y}).second)
            throw ConfigError("place " + pl.describe() + " used more than once");
    }
    for (const Place& pl : secret_places) {
        if (pl.at_infinity) throw ConfigError("secret places must be affine");
        if (!on_curve.count({pl.x, pl.y}))
            throw ConfigError("secret place " + pl.describe() + " is not on the curve");
        if (!used.insert({pl.x, pl.y}).second)
            throw ConfigError("place " + pl.describe() + " used more than once");
    }

    CodePair cp(curve);
    cp.u_ = u;
    cp.n_ = n;
    cp.secret_len_ = L;
    cp.share_places_ = std::move(share_places);
    cp.secret_places_ = std::move(secret_places);
    cp.basis_ = rr_basis(curve, u);
    cp.message_dim_ = static_cast<int>(cp.basis_.size());
    const int d = cp.message_dim_;

    cp.eval_p_ = MatrixFq(curve.field, d, n);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < n; ++j)
            cp.eval_p_.set(i, j, evaluate(curve, cp.basis_[i], cp.share_places_[j]));
    cp.eval_q_ = MatrixFq(curve.field, d, L);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < L; ++j)
            cp.eval_q_.set(i, j, evaluate(curve, cp.basis_[i], cp.secret_places_[j]));

    if (fqmat::rank(cp.eval_p_) != d)
        throw NotInjectiveError("share evaluations do not determine the function: need " +
                                std::to_string(d) + " independent share columns for pole bound " +
                                std::to_string(u));
    if (fqmat::rank(cp.eval_q_) != L)
        throw NotSurjectiveError("secret map does not reach all of F^" + std::to_string(L));

    // Inner code: functions vanishing on every secret place.
    cp.kernel_coeffs_ = fqmat::kernel_basis(cp.eval_q_.transposed());
    if (cp.kernel_coeffs_.rows() != d - L)
        throw ConsistencyError("inner coefficient space has dimension " +
                               std::to_string(cp.kernel_coeffs_.rows()) + ", expected " +
                               std::to_string(d - L));
    cp.g2_ = matmul(cp.kernel_coeffs_, cp.eval_p_);
    if (fqmat::rank(cp.g2_) != d - L)
        throw ConsistencyError("inner code lost rank under share evaluation");

    // One coefficient row per secret unit vector.
    cp.secret_coeffs_ = MatrixFq(curve.field, L, d);
    for (int i = 0; i < L; ++i) {
        std::vector<int> e(L, 0);
        e[i] = 1;
        const auto sol = fqmat::solve_affine(cp.eval_q_.transposed(), e);
        if (!sol) throw ConsistencyError("secret unit vector unreachable despite full rank");
        for (int j = 0; j < d; ++j) cp.secret_coeffs_.set_repr(i, j, sol->offset[j]);
    }
    cp.secret_shift_ = matmul(cp.secret_coeffs_, cp.eval_p_);
    if (fqmat::rank(vstack(cp.secret_shift_, cp.g2_)) != d)
        throw ConsistencyError("secret shifts and inner code do not span the share code");
    return cp;
}

CodePair CodePair::build_default(const CurveModel& curve, int u, int n, int L) {
    const auto places = rational_places(curve);
    const int affine = static_cast<int>(places.size()) - 1;
    if (n < 0 || L < 0 || n + L > affine)
        throw ConfigError("need " + std::to_string(n) + " + " + std::to_string(L) +
                          " distinct affine places but the curve has " + std::to_string(affine));
    std::vector<Place> shares(places.begin(), places.begin() + n);
    std::vector<Place> secrets(places.begin() + n, places.begin() + n + L);
    return build(curve, u, std::move(shares), std::move(secrets));
}

AffineCoset CodePair::coset_of(const std::vector<int>& secret) const {
    if (static_cast<int>(secret.size()) != secret_len_)
        throw DomainError("secret length " + std::to_string(secret.size()) + ", expected " +
                          std::to_string(secret_len_));
    for (int r : secret)
        if (r < 0 || r >= curve_.field->order())
            throw DomainError("secret entry " + std::to_string(r) + " out of field range");
    return AffineCoset{mul_left(secret, secret_shift_), g2_};
}

std::vector<int> CodePair::secret_of(const std::vector<int>& codeword) const {
    if (static_cast<int>(codeword.size()) != n_)
        throw DomainError("codeword length " + std::to_string(codeword.size()) + ", expected " +
                          std::to_string(n_));
    const auto sol = fqmat::solve_affine(eval_p_.transposed(), codeword);
    if (!sol) throw NotACodewordError("vector is not in the share code");
    if (sol->basis.rows() != 0)
        throw ConsistencyError("share code coefficients not unique despite injectivity");
    return mul_left(sol->offset, eval_q_);
}

Thresholds thresholds(const CodePair& pair) {
    const int u = pair.u();
    const int n = pair.n();
    const int L = pair.secret_len();
    const int g = pair.curve().genus();
    const int forbidden = std::min(u - L - 2 * g + 1, n - 1 - u);
    const int qualified = std::max(1 + u, n - (u - L - 2 * g + 1));
    return Thresholds{forbidden, forbidden < 0, qualified, qualified > n};
}

int strong_security_bound(const Thresholds& th, int revealed_count) {
    return revealed_count + th.forbidden;
}

ExtendedPair extended_pair(const CodePair& pair, const std::vector<int>& masked) {
    const int L = pair.secret_len();
    std::set<int> iset;
    for (int i : masked) {
        if (i < 0 || i >= L)
            throw DomainError("masked secret index " + std::to_string(i) + " out of range");
        if (!iset.insert(i).second)
            throw DomainError("masked secret index " + std::to_string(i) + " repeated");
    }
    std::vector<int> i_sorted(iset.begin(), iset.end());
    std::vector<int> kept;
    for (int i = 0; i < L; ++i)
        if (!iset.count(i)) kept.push_back(i);

    // Both codes gain the evaluations at the kept secret places as extra
    // coordinates; the inner code is additionally restricted to functions
    // vanishing on the masked places.
    const MatrixFq c1_gen = hstack(pair.message_to_shares(), pair.message_to_secret().columns(kept));
    MatrixFq c2_gen(pair.field_ptr(), 0, c1_gen.cols());
    if (i_sorted.empty()) {
        c2_gen = c1_gen;
    } else {
        const MatrixFq k_i = fqmat::kernel_basis(pair.message_to_secret().columns(i_sorted).transposed());
        c2_gen = matmul(k_i, c1_gen);
    }
    if (fqmat::rank(c1_gen) != pair.message_dim())
        throw ConsistencyError("extended share code lost rank");
    if (fqmat::rank(c2_gen) != pair.message_dim() - static_cast<int>(i_sorted.size()))
        throw ConsistencyError("extended inner code has unexpected dimension");
    return ExtendedPair{c1_gen, c2_gen, std::move(i_sorted), std::move(kept)};
}

}  // namespace agqss::scheme
