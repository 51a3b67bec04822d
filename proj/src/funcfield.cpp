#include "agqss/funcfield.hpp"

#include <algorithm>
#include <sstream>

namespace agqss::funcfield {

CurveModel CurveModel::rational(std::shared_ptr<const gf::FieldSpec> field) {
    if (!field) throw DomainError("curve requires a field");
    return CurveModel{CurveKind::Rational, 0, std::move(field)};
}

CurveModel CurveModel::hermitian(std::shared_ptr<const gf::FieldSpec> field, int q0) {
    if (!field) throw DomainError("curve requires a field");
    if (q0 < 2) throw ConfigError("hermitian subfield size must be >= 2, got " + std::to_string(q0));
    if (static_cast<long long>(q0) * q0 != field->order())
        throw ConfigError("hermitian curve with subfield size " + std::to_string(q0) +
                          " needs field order " + std::to_string(q0 * q0) + ", got " +
                          std::to_string(field->order()));
    return CurveModel{CurveKind::Hermitian, q0, std::move(field)};
}

int CurveModel::genus() const {
    return kind == CurveKind::Rational ? 0 : q0 * (q0 - 1) / 2;
}

std::string CurveModel::describe() const {
    std::ostringstream os;
    if (kind == CurveKind::Rational) {
        os << "rational curve over " << field->describe();
    } else {
        os << "hermitian curve (q0=" << q0 << ") over " << field->describe();
    }
    return os.str();
}

std::string Place::describe() const {
    if (at_infinity) return "inf";
    std::ostringstream os;
    os << "(" << x << "," << y << ")";
    return os.str();
}

std::vector<Place> rational_places(const CurveModel& curve) {
    const gf::FieldSpec& f = *curve.field;
    std::vector<Place> out;
    if (curve.kind == CurveKind::Rational) {
        for (int a = 0; a < f.order(); ++a) out.push_back(Place::affine(a, 0));
    } else {
        // Affine points of y^q0 + y = x^(q0+1), swept lexicographically.
        const int q0 = curve.q0;
        for (int xr = 0; xr < f.order(); ++xr) {
            const gf::FieldElement xv = f.element(xr);
            const gf::FieldElement rhs = pow(xv, q0 + 1);
            for (int yr = 0; yr < f.order(); ++yr) {
                const gf::FieldElement yv = f.element(yr);
                if (pow(yv, q0) + yv == rhs) out.push_back(Place::affine(xr, yr));
            }
        }
    }
    out.push_back(Place::infinity());
    const std::size_t expect = curve.kind == CurveKind::Rational
                                   ? static_cast<std::size_t>(f.order()) + 1
                                   : static_cast<std::size_t>(curve.q0) * curve.q0 * curve.q0 + 1;
    if (out.size() != expect)
        throw ConsistencyError("rational place count " + std::to_string(out.size()) +
                               " does not match the expected " + std::to_string(expect));
    return out;
}

int pole_order(const CurveModel& curve, const Monomial& mono) {
    if (mono.x_exp < 0 || mono.y_exp < 0) throw DomainError("monomial exponents must be non-negative");
    if (curve.kind == CurveKind::Rational) {
        if (mono.y_exp != 0) throw DomainError("rational model has no y coordinate");
        return mono.x_exp;
    }
    if (mono.y_exp >= curve.q0)
        throw DomainError("hermitian basis monomials keep y-degree below q0");
    return curve.q0 * mono.x_exp + (curve.q0 + 1) * mono.y_exp;
}

std::vector<Monomial> rr_basis(const CurveModel& curve, int u) {
    if (u < 0) throw DomainError("pole order bound must be non-negative, got " + std::to_string(u));
    std::vector<Monomial> out;
    if (curve.kind == CurveKind::Rational) {
        for (int a = 0; a <= u; ++a) out.push_back(Monomial{a, 0});
    } else {
        const int q0 = curve.q0;
        for (int b = 0; b < q0; ++b)
            for (int a = 0; q0 * a + (q0 + 1) * b <= u; ++a) out.push_back(Monomial{a, b});
        std::sort(out.begin(), out.end(), [&](const Monomial& lhs, const Monomial& rhs) {
            const int lo = pole_order(curve, lhs), ro = pole_order(curve, rhs);
            return lo != ro ? lo < ro : lhs.y_exp < rhs.y_exp;
        });
    }
    const int g = curve.genus();
    if (u >= 2 * g - 1 && static_cast<int>(out.size()) != u - g + 1)
        throw ConsistencyError("function space dimension " + std::to_string(out.size()) +
                               " contradicts the expected " + std::to_string(u - g + 1) +
                               " for pole bound " + std::to_string(u));
    return out;
}

gf::FieldElement evaluate(const CurveModel& curve, const Monomial& mono, const Place& place) {
    if (place.at_infinity)
        throw DomainError("cannot evaluate at the infinite place; functions have their pole there");
    if (curve.kind == CurveKind::Rational && mono.y_exp != 0)
        throw DomainError("rational model has no y coordinate");
    const gf::FieldSpec& f = *curve.field;
    gf::FieldElement v = pow(f.element(place.x), mono.x_exp);
    if (mono.y_exp > 0) v = v * pow(f.element(place.y), mono.y_exp);
    return v;
}

int hasse_weil_bound(const CurveModel& curve) {
    const int q = curve.field->order();
    // floor(2 sqrt(q)) as the integer square root of 4q.
    int r = 0;
    while ((r + 1) * (r + 1) <= 4 * q) ++r;
    return 1 + q + curve.genus() * r;
}

}  // namespace agqss::funcfield
