#include "ssharp/series.hpp"

#include <sstream>

namespace ssharp {

std::string coeff_to_string(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

Rational coeff_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in coefficient '" + s + "'");
    return Rational(num, den);
}

SeriesQ SeriesQ::constant(const Rational& value, int order) {
    SeriesQ s(order);
    s.c_[0] = value;
    return s;
}

SeriesQ SeriesQ::lambda_power(int k, int order) {
    SeriesQ s(order);
    if (k < 0) throw std::invalid_argument("negative lambda power");
    if (k < order) s.c_[static_cast<size_t>(k)] = 1;
    else
        s.exact_ = false;  // the monomial itself was truncated away
    return s;
}

SeriesQ SeriesQ::from_coefficients(std::vector<Rational> coeffs, int order, bool exact) {
    if (order <= 0) throw std::invalid_argument("truncation order must be positive");
    coeffs.resize(static_cast<size_t>(order));
    SeriesQ s(order);
    s.c_ = std::move(coeffs);
    s.exact_ = exact;
    return s;
}

bool SeriesQ::stored_zero() const {
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

int SeriesQ::top_degree() const {
    for (int k = order() - 1; k >= 0; --k)
        if (c_[static_cast<size_t>(k)] != 0) return k;
    return -1;
}

Valuation SeriesQ::valuation() const {
    for (int k = 0; k < order(); ++k)
        if (c_[static_cast<size_t>(k)] != 0) return Valuation::finite(k);
    if (exact_) return Valuation::infinity();
    throw PrecisionExhausted("all stored coefficients vanish at order " + std::to_string(order()) +
                             "; raise the truncation order");
}

Rational SeriesQ::leading_coefficient() const {
    Valuation v = valuation();
    if (v.is_infinite()) throw std::logic_error("leading coefficient of exact zero");
    return c_[static_cast<size_t>(v.value())];
}

namespace {
void require_same_order(const SeriesQ& a, const SeriesQ& b) {
    if (a.order() != b.order())
        throw TruncationMismatch("truncation orders differ: " + std::to_string(a.order()) + " vs " +
                                 std::to_string(b.order()));
}
}  // namespace

SeriesQ operator+(const SeriesQ& a, const SeriesQ& b) {
    require_same_order(a, b);
    std::vector<Rational> out(a.c_);
    for (int k = 0; k < b.order(); ++k) out[static_cast<size_t>(k)] += b.c_[static_cast<size_t>(k)];
    return SeriesQ::from_coefficients(std::move(out), a.order(), a.exact_ && b.exact_);
}

SeriesQ operator-(const SeriesQ& a, const SeriesQ& b) { return a + (-b); }

SeriesQ operator-(const SeriesQ& a) {
    std::vector<Rational> out(a.c_);
    for (auto& c : out) c = -c;
    return SeriesQ::from_coefficients(std::move(out), a.order(), a.exact_);
}

SeriesQ scale(const Rational& c, const SeriesQ& a) {
    if (c == 0) return SeriesQ::zero(a.order());
    std::vector<Rational> out(a.c_);
    for (auto& x : out) x *= c;
    return SeriesQ::from_coefficients(std::move(out), a.order(), a.exact_);
}

SeriesQ operator*(const SeriesQ& a, const SeriesQ& b) {
    require_same_order(a, b);
    const int n = a.order();
    // Zero times anything is exactly zero, tails included.
    if (a.exact_zero() || b.exact_zero()) return SeriesQ::zero(n);

    SeriesQ out(n);
    const int da = a.top_degree();
    const int db = b.top_degree();
    for (int i = 0; i <= da; ++i) {
        const Rational& ai = a.c_[static_cast<size_t>(i)];
        if (ai == 0) continue;
        const int jmax = std::min(db, n - 1 - i);
        for (int j = 0; j <= jmax; ++j) {
            const Rational& bj = b.c_[static_cast<size_t>(j)];
            if (bj == 0) continue;
            out.c_[static_cast<size_t>(i + j)] += ai * bj;
        }
    }
    out.exact_ = a.exact_ && b.exact_ && (da < 0 || db < 0 || da + db < n);
    return out;
}

SeriesQ SeriesQ::inverse() const {
    const int n = order();
    if (c_.empty() || c_[0] == 0) throw std::domain_error("inverse of a non-unit series");
    SeriesQ out(n);
    Rational inv0 = Rational(1) / c_[0];
    out.c_[0] = inv0;
    for (int k = 1; k < n; ++k) {
        Rational acc = 0;
        for (int j = 1; j <= k; ++j) acc += c_[static_cast<size_t>(j)] * out.c_[static_cast<size_t>(k - j)];
        out.c_[static_cast<size_t>(k)] = -inv0 * acc;
    }
    out.exact_ = false;
    return out;
}

std::string SeriesQ::to_string() const {
    if (stored_zero()) return exact_ ? "0" : "O(l^" + std::to_string(order()) + ")";
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < order(); ++k) {
        const Rational& c = c_[static_cast<size_t>(k)];
        if (c == 0) continue;
        if (!first) os << " + ";
        os << coeff_to_string(c);
        if (k > 0) os << "*l^" << k;
        first = false;
    }
    if (!exact_) os << " + O(l^" << order() << ")";
    return os.str();
}

namespace {

// Divide a by b assuming val(a) >= val(b); both are treated as exact to the
// stored order.  Used only inside the Newton iteration below.
SeriesQ shifted_divide(const SeriesQ& a, const SeriesQ& b) {
    const int n = a.order();
    int vb = 0;
    while (vb < n && b.coeff(vb) == 0) ++vb;
    if (vb == n) throw std::domain_error("division by zero series");
    std::vector<Rational> ash(static_cast<size_t>(n)), bsh(static_cast<size_t>(n));
    for (int k = vb; k < n; ++k) {
        if (k - vb < n) bsh[static_cast<size_t>(k - vb)] = b.coeff(k);
    }
    for (int k = 0; k < n; ++k) {
        if (k < vb) {
            if (a.coeff(k) != 0) throw std::domain_error("series division is not exact");
        } else {
            ash[static_cast<size_t>(k - vb)] = a.coeff(k);
        }
    }
    SeriesQ num = SeriesQ::from_coefficients(std::move(ash), n, false);
    SeriesQ den = SeriesQ::from_coefficients(std::move(bsh), n, false);
    return num * den.inverse();
}

}  // namespace

SeriesQ u_series(int order) {
    // Newton for f(v) = v^2 - lambda^2 v - lambda^2, starting from v = lambda.
    const SeriesQ lam2 = SeriesQ::lambda_power(2, order);
    SeriesQ v = SeriesQ::lambda(order);
    // Each step at least doubles the correct order; order() steps always suffice.
    for (int it = 0; it < 64; ++it) {
        SeriesQ f = v * v - lam2 * v - lam2;
        if (f.stored_zero()) break;
        SeriesQ fprime = scale(2, v) - lam2;
        v = v - shifted_divide(f, fprime);
    }
    SeriesQ u = SeriesQ::one(order) + v;
    return SeriesQ::from_coefficients(u.coefficients(), order, false);
}

LaurentU LaurentU::monomial(int exponent, const Rational& c) {
    LaurentU p;
    p.set(exponent, c);
    return p;
}

void LaurentU::set(int exponent, const Rational& c) {
    if (c == 0) coefficients.erase(exponent);
    else
        coefficients[exponent] = c;
}

LaurentU operator+(const LaurentU& a, const LaurentU& b) {
    LaurentU out = a;
    for (const auto& [e, c] : b.coefficients) {
        auto it = out.coefficients.find(e);
        Rational sum = (it == out.coefficients.end() ? Rational(0) : it->second) + c;
        out.set(e, sum);
    }
    return out;
}

LaurentU operator*(const LaurentU& a, const LaurentU& b) {
    LaurentU out;
    for (const auto& [ea, ca] : a.coefficients)
        for (const auto& [eb, cb] : b.coefficients) {
            auto it = out.coefficients.find(ea + eb);
            Rational sum = (it == out.coefficients.end() ? Rational(0) : it->second) + ca * cb;
            out.set(ea + eb, sum);
        }
    return out;
}

LaurentU operator-(const LaurentU& a) {
    LaurentU out;
    for (const auto& [e, c] : a.coefficients) out.coefficients[e] = -c;
    return out;
}

SeriesQ embed_laurent_u(const LaurentU& p, int order) {
    // A Laurent polynomial touching only u^0 embeds exactly.
    bool constant_only = true;
    for (const auto& [e, c] : p.coefficients)
        if (e != 0) constant_only = false;
    if (constant_only) {
        auto it = p.coefficients.find(0);
        return SeriesQ::constant(it == p.coefficients.end() ? Rational(0) : it->second, order);
    }

    const SeriesQ u = u_series(order);
    const SeriesQ uinv = u.inverse();
    SeriesQ acc = SeriesQ::zero(order);
    for (const auto& [e, c] : p.coefficients) {
        SeriesQ term = SeriesQ::constant(c, order);
        const SeriesQ& base = e >= 0 ? u : uinv;
        for (int k = 0; k < (e >= 0 ? e : -e); ++k) term = term * base;
        acc = acc + term;
    }
    return acc;
}

}  // namespace ssharp
