#include "agqss/gf.hpp"

#include <sstream>

namespace agqss::gf {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Coefficient vector (ascending degree, values in [0, p)) from a base-p repr.
std::vector<int> unpack(int repr, int p, int len) {
    std::vector<int> c(len, 0);
    for (int i = 0; i < len && repr != 0; ++i) {
        c[i] = repr % p;
        repr /= p;
    }
    return c;
}

int pack(const std::vector<int>& c, int p) {
    int repr = 0;
    for (std::size_t i = c.size(); i-- > 0;) repr = repr * p + c[i];
    return repr;
}

int poly_degree(const std::vector<int>& c) {
    for (std::size_t i = c.size(); i-- > 0;)
        if (c[i] != 0) return static_cast<int>(i);
    return -1;
}

// Remainder of a mod b over GF(p), b nonzero. Plain schoolbook division; all
// polynomials here have degree < 2m with m <= 8, so nothing clever is needed.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b, int p) {
    const int db = poly_degree(b);
    const int lead = b[db];
    // Inverse of the leading coefficient mod p.
    int lead_inv = 1;
    for (int f = 1; f < p; ++f)
        if (lead * f % p == 1) { lead_inv = f; break; }
    for (int da = poly_degree(a); da >= db; da = poly_degree(a)) {
        const int factor = a[da] * lead_inv % p;
        const int shift = da - db;
        for (int i = 0; i <= db; ++i) {
            a[i + shift] = ((a[i + shift] - factor * b[i]) % p + p) % p;
        }
    }
    return a;
}

std::vector<int> poly_mul_mod(const std::vector<int>& a, const std::vector<int>& b,
                              const std::vector<int>& modulus, int p) {
    std::vector<int> prod(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    return poly_mod(std::move(prod), modulus, p);
}

bool poly_irreducible(const std::vector<int>& f, int p) {
    const int m = poly_degree(f);
    if (m < 1) return false;
    if (m == 1) return true;
    // Trial division by every monic polynomial of degree 1..m/2. A reducible f
    // has a monic factor in that range, so survival proves irreducibility.
    for (int d = 1; 2 * d <= m; ++d) {
        int count = 1;
        for (int i = 0; i < d; ++i) count *= p;  // p^d lower-coefficient choices
        for (int low = 0; low < count; ++low) {
            std::vector<int> g = unpack(low, p, d + 1);
            g[d] = 1;
            if (poly_degree(poly_mod(f, g, p)) < 0) return false;
        }
    }
    return true;
}

}  // namespace

FieldSpec::FieldSpec(int p, int m, std::vector<int> modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)) {
    if (!is_prime(p_)) throw DomainError("field characteristic must be prime, got " + std::to_string(p_));
    if (m_ < 1) throw DomainError("field extension degree must be >= 1, got " + std::to_string(m_));
    long long q = 1;
    for (int i = 0; i < m_; ++i) q *= p_;
    if (q > 256) throw DomainError("field order " + std::to_string(q) + " exceeds supported maximum 256");
    q_ = static_cast<int>(q);

    if (static_cast<int>(modulus_.size()) != m_ + 1)
        throw DomainError("modulus must have degree " + std::to_string(m_));
    for (int c : modulus_)
        if (c < 0 || c >= p_) throw DomainError("modulus coefficients must lie in [0, p)");
    if (modulus_[m_] != 1) throw DomainError("modulus must be monic");
    if (!poly_irreducible(modulus_, p_))
        throw DomainError("modulus is reducible over GF(" + std::to_string(p_) + ")");

    add_.resize(static_cast<std::size_t>(q_) * q_);
    mul_.resize(static_cast<std::size_t>(q_) * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    for (int a = 0; a < q_; ++a) {
        const std::vector<int> ca = unpack(a, p_, m_);
        // Addition is coefficient-wise mod p; negation likewise.
        std::vector<int> cneg(m_);
        for (int i = 0; i < m_; ++i) cneg[i] = (p_ - ca[i]) % p_;
        neg_[a] = static_cast<std::uint8_t>(pack(cneg, p_));
        for (int b = 0; b < q_; ++b) {
            std::vector<int> cb = unpack(b, p_, m_);
            std::vector<int> sum(m_);
            for (int i = 0; i < m_; ++i) sum[i] = (ca[i] + cb[i]) % p_;
            add_[a * q_ + b] = static_cast<std::uint8_t>(pack(sum, p_));
            std::vector<int> prod = poly_mul_mod(ca, cb, modulus_, p_);
            prod.resize(m_);
            const int pr = pack(prod, p_);
            mul_[a * q_ + b] = static_cast<std::uint8_t>(pr);
            if (pr == 1) inv_[a] = static_cast<std::uint8_t>(b);
        }
    }
    for (int a = 1; a < q_; ++a)
        if (inv_[a] == 0) throw ConsistencyError("nonzero element without inverse; table build broken");
}

std::shared_ptr<const FieldSpec> FieldSpec::make(int p, int m) {
    return std::make_shared<const FieldSpec>(p, m, default_modulus(p, m));
}

std::shared_ptr<const FieldSpec> FieldSpec::make(int p, int m, std::vector<int> modulus) {
    return std::make_shared<const FieldSpec>(p, m, std::move(modulus));
}

std::vector<int> FieldSpec::default_modulus(int p, int m) {
    if (!is_prime(p)) throw DomainError("field characteristic must be prime, got " + std::to_string(p));
    if (m < 1) throw DomainError("field extension degree must be >= 1, got " + std::to_string(m));
    if (m == 1) return {0, 1};  // x itself: GF(p) = GF(p)[x]/(x)
    if (p == 2 && m == 2) return {1, 1, 1};
    if (p == 2 && m == 3) return {1, 1, 0, 1};
    if (p == 3 && m == 2) return {1, 0, 1};
    if (p == 2 && m == 4) return {1, 1, 0, 0, 1};
    // First monic irreducible of degree m in ascending base-p order of the
    // lower coefficients.
    int count = 1;
    for (int i = 0; i < m; ++i) count *= p;
    for (int low = 0; low < count; ++low) {
        std::vector<int> f = unpack(low, p, m + 1);
        f[m] = 1;
        if (poly_irreducible(f, p)) return f;
    }
    throw ConsistencyError("no irreducible polynomial found; unreachable for valid p, m");
}

FieldElement FieldSpec::element(int repr) const {
    if (repr < 0 || repr >= q_)
        throw DomainError("element representation " + std::to_string(repr) + " out of range for " + describe());
    return FieldElement(*this, repr);
}

FieldElement FieldSpec::zero() const { return FieldElement(*this, 0); }
FieldElement FieldSpec::one() const { return FieldElement(*this, 1); }

std::vector<FieldElement> FieldSpec::elements() const {
    std::vector<FieldElement> out;
    out.reserve(q_);
    for (int r = 0; r < q_; ++r) out.push_back(FieldElement(*this, r));
    return out;
}

bool FieldSpec::same_field(const FieldSpec& other) const {
    return this == &other || (p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_);
}

std::string FieldSpec::describe() const {
    std::ostringstream os;
    os << "GF(" << q_ << ")";
    return os.str();
}

int FieldSpec::inv_repr(int a) const {
    if (a == 0) throw DomainError("division by zero in " + describe());
    return inv_[a];
}

FieldElement::FieldElement(const FieldSpec& spec, int repr) : spec_(&spec), repr_(repr) {}

namespace {
const FieldSpec& common_spec(const FieldElement& a, const FieldElement& b) {
    if (!a.spec().same_field(b.spec()))
        throw DomainError("mixed-field operation between " + a.spec().describe() + " and " + b.spec().describe());
    return a.spec();
}
}  // namespace

FieldElement FieldElement::operator+(FieldElement rhs) const {
    const FieldSpec& s = common_spec(*this, rhs);
    return FieldElement(s, s.add_repr(repr_, rhs.repr_));
}

FieldElement FieldElement::operator-(FieldElement rhs) const {
    const FieldSpec& s = common_spec(*this, rhs);
    return FieldElement(s, s.sub_repr(repr_, rhs.repr_));
}

FieldElement FieldElement::operator*(FieldElement rhs) const {
    const FieldSpec& s = common_spec(*this, rhs);
    return FieldElement(s, s.mul_repr(repr_, rhs.repr_));
}

FieldElement FieldElement::operator/(FieldElement rhs) const {
    const FieldSpec& s = common_spec(*this, rhs);
    return FieldElement(s, s.div_repr(repr_, rhs.repr_));
}

FieldElement FieldElement::operator-() const {
    return FieldElement(*spec_, spec_->neg_repr(repr_));
}

bool FieldElement::operator==(FieldElement rhs) const {
    common_spec(*this, rhs);
    return repr_ == rhs.repr_;
}

FieldElement pow(FieldElement a, unsigned long long e) {
    FieldElement acc = a.spec().one();
    FieldElement base = a;
    while (e > 0) {
        if (e & 1ULL) acc = acc * base;
        base = base * base;
        e >>= 1ULL;
    }
    return acc;
}

}  // namespace agqss::gf
