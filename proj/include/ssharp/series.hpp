#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ssharp {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Canonical coefficient string: "n" for integers, "n/d" otherwise.
std::string coeff_to_string(const Rational& r);
Rational coeff_from_string(const std::string& s);

/// Thrown when a valuation query cannot be answered at the current
/// truncation order: every stored coefficient vanishes but the value is
/// not known to be identically zero. Callers recover by raising the order.
struct PrecisionExhausted : std::runtime_error {
    explicit PrecisionExhausted(const std::string& what) : std::runtime_error(what) {}
};

struct TruncationMismatch : std::invalid_argument {
    explicit TruncationMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// lambda-adic valuation: a nonnegative integer or infinity.
class Valuation {
  public:
    static Valuation finite(int v) { return Valuation(v, false); }
    static Valuation infinity() { return Valuation(0, true); }

    bool is_infinite() const { return infinite_; }
    int value() const {
        if (infinite_) throw std::logic_error("value() of infinite valuation");
        return v_;
    }

    friend bool operator==(const Valuation& a, const Valuation& b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.v_ == b.v_);
    }
    friend bool operator<(const Valuation& a, const Valuation& b) {
        if (a.infinite_) return false;
        if (b.infinite_) return true;
        return a.v_ < b.v_;
    }

    std::string to_string() const { return infinite_ ? "inf" : std::to_string(v_); }

  private:
    Valuation(int v, bool inf) : v_(v), infinite_(inf) {}
    int v_;
    bool infinite_;
};

/// Truncated formal power series in lambda with exact rational coefficients.
///
/// A value stores the coefficients of lambda^0 .. lambda^(N-1).  Operations
/// that can drop terms of degree >= N (products of high-degree values, the
/// series u(lambda), inverses) clear the `exact` flag; while the flag is set
/// the stored polynomial is the entire value, so an all-zero exact value is
/// identically zero and has valuation infinity.  An all-zero value without
/// the flag is indistinguishable from lambda^N * (unit) and valuation()
/// raises PrecisionExhausted instead of guessing.
class SeriesQ {
  public:
    SeriesQ() = default;
    explicit SeriesQ(int order) : c_(static_cast<size_t>(order)), exact_(true) {
        if (order <= 0) throw std::invalid_argument("truncation order must be positive");
    }

    static SeriesQ zero(int order) { return SeriesQ(order); }
    static SeriesQ constant(const Rational& value, int order);
    static SeriesQ one(int order) { return constant(1, order); }
    static SeriesQ lambda(int order) { return lambda_power(1, order); }
    static SeriesQ lambda_power(int k, int order);
    static SeriesQ from_coefficients(std::vector<Rational> coeffs, int order, bool exact = true);

    int order() const { return static_cast<int>(c_.size()); }
    const Rational& coeff(int k) const { return c_.at(static_cast<size_t>(k)); }
    const std::vector<Rational>& coefficients() const { return c_; }

    bool stored_zero() const;
    bool exact_zero() const { return exact_ && stored_zero(); }
    /// True when no truncation ever dropped a term of this value.
    bool is_exact() const { return exact_; }

    Valuation valuation() const;
    Rational leading_coefficient() const;

    SeriesQ inverse() const;  ///< requires a unit (nonzero constant term)

    friend SeriesQ operator+(const SeriesQ& a, const SeriesQ& b);
    friend SeriesQ operator-(const SeriesQ& a, const SeriesQ& b);
    friend SeriesQ operator*(const SeriesQ& a, const SeriesQ& b);
    friend SeriesQ operator-(const SeriesQ& a);
    friend SeriesQ scale(const Rational& c, const SeriesQ& a);

    /// Equality of stored coefficients at equal order (flags not compared).
    bool operator==(const SeriesQ& rhs) const { return c_ == rhs.c_; }
    bool operator!=(const SeriesQ& rhs) const { return !(*this == rhs); }

    std::string to_string() const;

  private:
    int top_degree() const;  // highest nonzero stored index, -1 if none

    std::vector<Rational> c_;
    bool exact_ = true;
};

/// The power series u(lambda) with (u-1)^2 = u*lambda^2 and u-1 = +lambda + O(lambda^2),
/// found by Newton iteration on v^2 - lambda^2*v - lambda^2 for v = u-1.
SeriesQ u_series(int order);

/// Laurent polynomial in the holonomy variable u.
struct LaurentU {
    std::map<int, Rational> coefficients;  // exponent -> coefficient, no zeros stored

    static LaurentU monomial(int exponent, const Rational& c = 1);
    void set(int exponent, const Rational& c);

    friend LaurentU operator+(const LaurentU& a, const LaurentU& b);
    friend LaurentU operator*(const LaurentU& a, const LaurentU& b);
    friend LaurentU operator-(const LaurentU& a);
    bool operator==(const LaurentU&) const = default;
};

/// Substitute u -> u_series(order); negative powers use the series inverse of u.
SeriesQ embed_laurent_u(const LaurentU& p, int order);

}  // namespace ssharp
