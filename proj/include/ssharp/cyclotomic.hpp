#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ssharp/series.hpp"

namespace ssharp {

class CyclotomicField;
using FieldPtr = std::shared_ptr<const CyclotomicField>;

/// Element of Q(zeta_d), a polynomial in the generator reduced modulo the
/// d-th cyclotomic polynomial.
class FieldElem {
  public:
    FieldElem() = default;
    FieldElem(FieldPtr field, std::vector<Rational> coeffs);

    const FieldPtr& field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;       // supported on the constant term only
    Rational rational_value() const;  // requires is_rational()

    FieldElem inverse() const;  // throws std::domain_error on zero
    FieldElem pow(long e) const;

    friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator-(const FieldElem& a);
    bool operator==(const FieldElem& rhs) const;
    bool operator!=(const FieldElem& rhs) const { return !(*this == rhs); }

    std::string to_string() const;

    /// Image in Q(zeta_D) under zeta_d -> zeta_D^(D/d); requires d | D.
    FieldElem embed_into(const FieldPtr& bigger) const;

  private:
    FieldPtr field_;
    std::vector<Rational> c_;  // degree < degree of the modulus
};

/// Q(zeta_d), represented as Q[t]/Phi_d(t) with Phi_d computed exactly by
/// the recursive quotient formula.
class CyclotomicField : public std::enable_shared_from_this<CyclotomicField> {
  public:
    static FieldPtr create(int order);  // order >= 1; order 1 is plain Q

    int order() const { return order_; }
    int degree() const { return static_cast<int>(modulus_.size()) - 1; }
    const std::vector<Rational>& modulus() const { return modulus_; }  // monic, ascending

    FieldElem zero() const;
    FieldElem one() const;
    FieldElem from_rational(const Rational& r) const;
    FieldElem generator() const;  // zeta_d (equals 1 when order == 1)
    FieldElem from_coeffs(std::vector<Rational> coeffs) const;  // reduced mod Phi_d

    std::vector<Rational> reduce(std::vector<Rational> poly) const;

  private:
    explicit CyclotomicField(int order);

    int order_;
    std::vector<Rational> modulus_;
};

/// True when both elements live in the same field (pointer or order match).
bool same_field(const FieldElem& a, const FieldElem& b);

}  // namespace ssharp
