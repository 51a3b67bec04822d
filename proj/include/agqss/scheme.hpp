#pragma once

#include <cstdint>
#include <vector>

#include "agqss/errors.hpp"
#include "agqss/fqmat.hpp"
#include "agqss/funcfield.hpp"

namespace agqss::scheme {

/// A ramp secret sharing instance built from a curve: functions with pole
/// order at most u at infinity, evaluated at n share places and L secret
/// places. The share code C1 is the image of the message space on the share
/// places; the inner code C2 is the subcode of functions vanishing at every
/// secret place. Secrets live on the C2-cosets inside C1.
///
/// Build fails with NotInjectiveError when distinct functions can produce the
/// same share vector, and with NotSurjectiveError when the secret map does not
/// reach all of F^L.
class CodePair {
 public:
    static CodePair build(const funcfield::CurveModel& curve, int u,
                          std::vector<funcfield::Place> share_places,
                          std::vector<funcfield::Place> secret_places);

    /// Places taken from the canonical enumeration order: the first n affine
    /// places carry shares, the next L carry the secret.
    static CodePair build_default(const funcfield::CurveModel& curve, int u, int n, int L);

    const funcfield::CurveModel& curve() const { return curve_; }
    std::shared_ptr<const gf::FieldSpec> field_ptr() const { return curve_.field; }
    int u() const { return u_; }
    int n() const { return n_; }
    int secret_len() const { return secret_len_; }
    int message_dim() const { return message_dim_; }          // dim C1
    int inner_dim() const { return message_dim_ - secret_len_; }  // dim C2

    const std::vector<funcfield::Place>& share_places() const { return share_places_; }
    const std::vector<funcfield::Place>& secret_places() const { return secret_places_; }
    const std::vector<funcfield::Monomial>& message_basis() const { return basis_; }

    /// Message coefficients to share vector, one basis monomial per row
    /// (message_dim x n). Its row space is C1.
    const fqmat::MatrixFq& message_to_shares() const { return eval_p_; }
    /// Message coefficients to secret vector (message_dim x secret_len).
    const fqmat::MatrixFq& message_to_secret() const { return eval_q_; }
    /// Generator of the inner code C2 (inner_dim x n).
    const fqmat::MatrixFq& inner_gen() const { return g2_; }
    /// One coset representative per secret unit vector (secret_len x n):
    /// coset_of(s) has offset s * secret_shift().
    const fqmat::MatrixFq& secret_shift() const { return secret_shift_; }
    /// Coefficient-space kernel: rows c with c * message_to_secret() = 0.
    const fqmat::MatrixFq& kernel_coeffs() const { return kernel_coeffs_; }
    /// Coefficient rows c_i with c_i * message_to_secret() = e_i.
    const fqmat::MatrixFq& secret_coeffs() const { return secret_coeffs_; }

    /// The share-vector coset encoding this secret.
    fqmat::AffineCoset coset_of(const std::vector<int>& secret) const;
    /// Secret carried by a share codeword; NotACodewordError when the vector
    /// is outside C1.
    std::vector<int> secret_of(const std::vector<int>& codeword) const;

 private:
    explicit CodePair(const funcfield::CurveModel& curve);

    funcfield::CurveModel curve_;
    int u_ = 0;
    int n_ = 0;
    int secret_len_ = 0;
    int message_dim_ = 0;
    std::vector<funcfield::Place> share_places_;
    std::vector<funcfield::Place> secret_places_;
    std::vector<funcfield::Monomial> basis_;
    fqmat::MatrixFq eval_p_;
    fqmat::MatrixFq eval_q_;
    fqmat::MatrixFq g2_;
    fqmat::MatrixFq secret_shift_;
    fqmat::MatrixFq kernel_coeffs_;
    fqmat::MatrixFq secret_coeffs_;
};

/// Guaranteed access thresholds by share-set size. Sizes up to `forbidden`
/// learn nothing; sizes from `qualified` up reconstruct everything. Values are
/// reported as computed: when `forbidden` is negative or `qualified` exceeds
/// n, the respective guarantee is vacuous and the flag says so.
struct Thresholds {
    int forbidden;
    bool forbidden_vacuous;
    int qualified;
    bool qualified_vacuous;
};

Thresholds thresholds(const CodePair& pair);

/// Largest |J| for which strong security against J is guaranteed when only
/// the secret coordinates outside the masked set remain in play:
/// revealed_count + forbidden threshold.
int strong_security_bound(const Thresholds& th, int revealed_count);

/// Codes extended for partial-secret analysis of a masked coordinate set I:
/// both codes gain one column per secret coordinate outside I (ascending),
/// and the inner code additionally pins h to vanish on I. dim c1_gen rows =
/// message_dim, dim c2_gen rows = message_dim - |I|.
struct ExtendedPair {
    fqmat::MatrixFq c1_gen;
    fqmat::MatrixFq c2_gen;
    std::vector<int> masked;  // I, ascending
    std::vector<int> kept;    // complement of I, ascending
};

ExtendedPair extended_pair(const CodePair& pair, const std::vector<int>& masked);

}  // namespace agqss::scheme
