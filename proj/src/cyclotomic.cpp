#include "ssharp/cyclotomic.hpp"

#include <sstream>

namespace ssharp {

namespace {

// Dense univariate helpers over Q, ascending coefficients.
using Poly = std::vector<Rational>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

// Exact quotient; throws if the division leaves a remainder.
Poly poly_divexact(Poly num, const Poly& den) {
    trim(num);
    if (den.empty()) throw std::domain_error("division by zero polynomial");
    Poly out(num.size() >= den.size() ? num.size() - den.size() + 1 : 0);
    while (num.size() >= den.size() && !num.empty()) {
        Rational q = num.back() / den.back();
        size_t shift = num.size() - den.size();
        out[shift] = q;
        for (size_t j = 0; j < den.size(); ++j) num[shift + j] -= q * den[j];
        trim(num);
    }
    if (!num.empty()) throw std::domain_error("polynomial division is not exact");
    return out;
}

Poly cyclotomic_polynomial(int d) {
    // Phi_d = (t^d - 1) / prod_{e | d, e < d} Phi_e
    Poly num(static_cast<size_t>(d) + 1);
    num[0] = -1;
    num[static_cast<size_t>(d)] = 1;
    for (int e = 1; e < d; ++e) {
        if (d % e != 0) continue;
        num = poly_divexact(std::move(num), cyclotomic_polynomial(e));
    }
    return num;
}

}  // namespace

CyclotomicField::CyclotomicField(int order) : order_(order) {
    if (order < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
    modulus_ = cyclotomic_polynomial(order);
}

FieldPtr CyclotomicField::create(int order) {
    return FieldPtr(new CyclotomicField(order));
}

std::vector<Rational> CyclotomicField::reduce(std::vector<Rational> poly) const {
    const size_t deg = static_cast<size_t>(degree());
    while (true) {
        trim(poly);
        if (poly.size() <= deg) break;
        Rational lead = poly.back();
        size_t shift = poly.size() - modulus_.size();
        for (size_t j = 0; j < modulus_.size(); ++j) poly[shift + j] -= lead * modulus_[j];
    }
    poly.resize(deg);
    return poly;
}

FieldElem CyclotomicField::zero() const { return from_rational(0); }
FieldElem CyclotomicField::one() const { return from_rational(1); }

FieldElem CyclotomicField::from_rational(const Rational& r) const {
    std::vector<Rational> c(static_cast<size_t>(degree()));
    if (degree() > 0) c[0] = r;
    return FieldElem(shared_from_this(), std::move(c));
}

FieldElem CyclotomicField::generator() const {
    if (degree() == 1) {
        // zeta is the root of the linear modulus: t = -modulus[0].
        return from_rational(-modulus_[0]);
    }
    std::vector<Rational> c(static_cast<size_t>(degree()));
    c[1] = 1;
    return FieldElem(shared_from_this(), std::move(c));
}

FieldElem CyclotomicField::from_coeffs(std::vector<Rational> coeffs) const {
    return FieldElem(shared_from_this(), reduce(std::move(coeffs)));
}

FieldElem::FieldElem(FieldPtr field, std::vector<Rational> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
    c_.resize(static_cast<size_t>(field_->degree()));
}

bool FieldElem::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool FieldElem::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational FieldElem::rational_value() const {
    if (!is_rational()) throw std::domain_error("element is not rational");
    return c_.empty() ? Rational(0) : c_[0];
}

bool same_field(const FieldElem& a, const FieldElem& b) {
    return a.field() == b.field() || (a.field() && b.field() && a.field()->order() == b.field()->order());
}

namespace {
void require_same_field(const FieldElem& a, const FieldElem& b) {
    if (!same_field(a, b)) throw std::invalid_argument("field mismatch");
}
}  // namespace

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    require_same_field(a, b);
    std::vector<Rational> c = a.coeffs();
    for (size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs()[i];
    return FieldElem(a.field(), std::move(c));
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) { return a + (-b); }

FieldElem operator-(const FieldElem& a) {
    std::vector<Rational> c = a.coeffs();
    for (auto& x : c) x = -x;
    return FieldElem(a.field(), std::move(c));
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    require_same_field(a, b);
    if (a.coeffs().empty()) return a;
    std::vector<Rational> prod(2 * a.coeffs().size());
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs().size(); ++j) prod[i + j] += a.coeffs()[i] * b.coeffs()[j];
    }
    return FieldElem(a.field(), a.field()->reduce(std::move(prod)));
}

bool FieldElem::operator==(const FieldElem& rhs) const {
    if (!same_field(*this, rhs)) return false;
    return c_ == rhs.c_;
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero field element");
    // Extended Euclid in Q[t] against the modulus.
    Poly r0(field_->modulus());
    Poly r1(c_);
    trim(r1);
    Poly s0 = {};        // coefficient of this element in r0
    Poly s1 = {Rational(1)};
    while (true) {
        trim(r1);
        if (r1.empty()) throw std::domain_error("element shares a factor with the modulus");
        if (r1.size() == 1) break;
        // r0 = q*r1 + r2
        Poly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0);
        Poly rem = r0;
        while (rem.size() >= r1.size() && !rem.empty()) {
            Rational coeff = rem.back() / r1.back();
            size_t shift = rem.size() - r1.size();
            q[shift] = coeff;
            for (size_t j = 0; j < r1.size(); ++j) rem[shift + j] -= coeff * r1[j];
            trim(rem);
        }
        Poly s2 = s0;
        Poly qs1 = poly_mul(q, s1);
        s2.resize(std::max(s2.size(), qs1.size()));
        for (size_t i = 0; i < qs1.size(); ++i) s2[i] -= qs1[i];
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    Rational unit = r1[0];
    for (auto& x : s1) x /= unit;
    return FieldElem(field_, field_->reduce(std::move(s1)));
}

FieldElem FieldElem::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElem acc = field_->one();
    FieldElem base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

FieldElem FieldElem::embed_into(const FieldPtr& bigger) const {
    const int d = field_->order();
    const int D = bigger->order();
    if (D % d != 0) throw std::invalid_argument("target field order must be a multiple");
    FieldElem image = bigger->zero();
    FieldElem zeta_power = bigger->generator().pow(D / d);
    FieldElem acc = bigger->one();
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] != 0) image = image + acc * bigger->from_rational(c_[i]);
        acc = acc * zeta_power;
    }
    return image;
}

std::string FieldElem::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        os << coeff_to_string(c_[i]);
        if (i >= 1) {
            os << "*w";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

}  // namespace ssharp
