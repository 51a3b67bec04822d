#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "agqss/errors.hpp"

namespace agqss::gf {

class FieldElement;

/// Immutable description of GF(p^m), p prime, p^m <= 256, together with
/// precomputed arithmetic tables. Elements keep a pointer to their spec, so a
/// FieldSpec must outlive every element created from it; the usual way to hold
/// one is through the shared_ptr returned by make().
///
/// An element with representation r encodes the coefficient vector of its
/// residue polynomial read base p, constant term in the least significant
/// digit: r = c0 + c1*p + ... + c_{m-1}*p^{m-1}.
class FieldSpec {
 public:
    /// modulus holds m+1 coefficients in [0,p), ascending degree, monic.
    /// Throws DomainError unless p is prime, p^m <= 256 and the modulus is
    /// irreducible over GF(p) (trial division by all monic polynomials of
    /// degree <= m/2).
    FieldSpec(int p, int m, std::vector<int> modulus);

    FieldSpec(const FieldSpec&) = delete;
    FieldSpec& operator=(const FieldSpec&) = delete;

    static std::shared_ptr<const FieldSpec> make(int p, int m);
    static std::shared_ptr<const FieldSpec> make(int p, int m, std::vector<int> modulus);

    /// Fixed defaults: GF(4): x^2+x+1, GF(8): x^3+x+1, GF(9): x^2+1,
    /// GF(16): x^4+x+1. Any other (p, m) gets the first monic irreducible in
    /// ascending base-p coefficient order, so encodings stay reproducible.
    static std::vector<int> default_modulus(int p, int m);

    int p() const { return p_; }
    int m() const { return m_; }
    int order() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }

    FieldElement element(int repr) const;
    FieldElement zero() const;
    FieldElement one() const;
    /// All q elements, repr ascending.
    std::vector<FieldElement> elements() const;

    /// Structural identity: same p, m and modulus.
    bool same_field(const FieldSpec& other) const;

    std::string describe() const;  // e.g. "GF(4)"

    // Raw table arithmetic on representations. No range checks.
    int add_repr(int a, int b) const { return add_[a * q_ + b]; }
    int sub_repr(int a, int b) const { return add_[a * q_ + neg_[b]]; }
    int mul_repr(int a, int b) const { return mul_[a * q_ + b]; }
    int neg_repr(int a) const { return neg_[a]; }
    int inv_repr(int a) const;  // throws DomainError on a == 0
    int div_repr(int a, int b) const { return mul_repr(a, inv_repr(b)); }

 private:
    int p_;
    int m_;
    int q_;
    std::vector<int> modulus_;
    std::vector<std::uint8_t> add_;
    std::vector<std::uint8_t> mul_;
    std::vector<std::uint8_t> neg_;
    std::vector<std::uint8_t> inv_;
};

class FieldElement {
 public:
    FieldElement(const FieldSpec& spec, int repr);

    int repr() const { return repr_; }
    const FieldSpec& spec() const { return *spec_; }
    bool is_zero() const { return repr_ == 0; }

    FieldElement operator+(FieldElement rhs) const;
    FieldElement operator-(FieldElement rhs) const;
    FieldElement operator*(FieldElement rhs) const;
    FieldElement operator/(FieldElement rhs) const;  // throws on rhs == 0
    FieldElement operator-() const;

    FieldElement& operator+=(FieldElement rhs) { return *this = *this + rhs; }
    FieldElement& operator-=(FieldElement rhs) { return *this = *this - rhs; }
    FieldElement& operator*=(FieldElement rhs) { return *this = *this * rhs; }

    /// Elements are comparable only under the same field; mixing throws.
    bool operator==(FieldElement rhs) const;
    bool operator!=(FieldElement rhs) const { return !(*this == rhs); }

 private:
    friend class FieldSpec;
    const FieldSpec* spec_;
    int repr_;
};

/// a^e by repeated squaring; 0^0 defined as 1.
FieldElement pow(FieldElement a, unsigned long long e);

}  // namespace agqss::gf
