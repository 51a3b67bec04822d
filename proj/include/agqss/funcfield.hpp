#pragma once

#include <memory>
#include <string>
#include <vector>

#include "agqss/errors.hpp"
#include "agqss/gf.hpp"

namespace agqss::funcfield {

enum class CurveKind { Rational, Hermitian };

/// A curve over GF(q) together with its function field. Two models are
/// supported: the projective line (rational function field, genus 0) and the
/// Hermitian curve y^q0 + y = x^(q0+1) over GF(q0^2), genus q0(q0-1)/2.
struct CurveModel {
    CurveKind kind;
    int q0;  // Hermitian subfield size; 0 for the rational model
    std::shared_ptr<const gf::FieldSpec> field;

    static CurveModel rational(std::shared_ptr<const gf::FieldSpec> field);
    /// Requires field order q0^2 and q0 >= 2.
    static CurveModel hermitian(std::shared_ptr<const gf::FieldSpec> field, int q0);

    int genus() const;
    std::string describe() const;
};

/// Degree-one place: an affine point of the curve, or the unique place at
/// infinity. For the rational model the point is just x (y stays 0).
struct Place {
    bool at_infinity;
    int x;  // element representation
    int y;

    static Place infinity() { return Place{true, 0, 0}; }
    static Place affine(int x, int y) { return Place{false, x, y}; }

    bool operator==(const Place&) const = default;
    std::string describe() const;
};

/// All rational places in canonical order: affine points lexicographic by
/// (x, y) representation, then the place at infinity. Counts are cross-checked
/// (q + 1 rational, q0^3 + 1 Hermitian); a mismatch throws ConsistencyError.
std::vector<Place> rational_places(const CurveModel& curve);

/// Basis function of the pole-only function space: x^a y^b, with y absent for
/// the rational model and 0 <= b < q0 for the Hermitian one.
struct Monomial {
    int x_exp;
    int y_exp;

    bool operator==(const Monomial&) const = default;
};

/// Pole order at the infinite place: a for the rational model, q0*a + (q0+1)*b
/// for the Hermitian one.
int pole_order(const CurveModel& curve, const Monomial& mono);

/// Monomial basis of the space of functions with poles only at infinity, pole
/// order at most u, sorted by pole order. For u >= 2g - 1 the count must equal
/// u - g + 1; any other count throws ConsistencyError.
std::vector<Monomial> rr_basis(const CurveModel& curve, int u);

/// Value of the monomial at an affine place. Evaluation at infinity is not a
/// field element for these functions and throws DomainError.
gf::FieldElement evaluate(const CurveModel& curve, const Monomial& mono, const Place& place);

/// Upper bound 1 + q + g * floor(2 sqrt(q)) on the number of rational places.
int hasse_weil_bound(const CurveModel& curve);

}  // namespace agqss::funcfield
