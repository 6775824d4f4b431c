#pragma once

#include <map>
#include <utility>

#include "ssharp/cyclotomic.hpp"

namespace ssharp {

enum class Var { X, Y };

/// Dense univariate polynomial over a cyclotomic field, ascending coefficients.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(FieldPtr field) : field_(std::move(field)) {}
    UniPoly(FieldPtr field, std::vector<FieldElem> coeffs);

    static UniPoly constant(const FieldElem& c);
    static UniPoly monomial(const FieldPtr& field, int degree, const FieldElem& c);

    const FieldPtr& field() const { return field_; }
    const std::vector<FieldElem>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    /// c * t^k with a single term.
    bool is_monomial() const;
    const FieldElem& leading() const;
    FieldElem coeff(int k) const;

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a);
    friend UniPoly operator*(const FieldElem& c, const UniPoly& a);
    bool operator==(const UniPoly& rhs) const;
    bool operator!=(const UniPoly& rhs) const { return !(*this == rhs); }

    UniPoly derivative() const;
    FieldElem eval(const FieldElem& x) const;
    UniPoly monic() const;

    /// Quotient and remainder; the divisor must be nonzero.
    static std::pair<UniPoly, UniPoly> divmod(const UniPoly& num, const UniPoly& den);
    /// Exact quotient; throws std::domain_error when a remainder survives.
    static UniPoly divexact(const UniPoly& num, const UniPoly& den);

    std::string to_string(const std::string& var = "t") const;

  private:
    void normalize();

    FieldPtr field_;
    std::vector<FieldElem> c_;
};

UniPoly gcd(const UniPoly& a, const UniPoly& b);  // monic gcd
bool is_squarefree(const UniPoly& p);

/// Sparse bivariate polynomial over a cyclotomic field.
class BiPoly {
  public:
    BiPoly() = default;
    explicit BiPoly(FieldPtr field) : field_(std::move(field)) {}

    static BiPoly zero(const FieldPtr& field) { return BiPoly(field); }
    static BiPoly constant(const FieldPtr& field, const FieldElem& c);
    static BiPoly monomial(const FieldPtr& field, int i, int j, const FieldElem& c);
    static BiPoly variable(const FieldPtr& field, Var v);

    const FieldPtr& field() const { return field_; }
    const std::map<std::pair<int, int>, FieldElem>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    int degree(Var v) const;        // -1 for zero
    int total_degree() const;       // -1 for zero
    FieldElem coeff(int i, int j) const;
    void set_coeff(int i, int j, const FieldElem& c);

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator-(const BiPoly& a);
    friend BiPoly operator*(const FieldElem& c, const BiPoly& a);
    bool operator==(const BiPoly& rhs) const;
    bool operator!=(const BiPoly& rhs) const { return !(*this == rhs); }

    BiPoly pow(int e) const;
    BiPoly derivative(Var v) const;
    FieldElem eval(const FieldElem& x, const FieldElem& y) const;
    UniPoly eval_x(const FieldElem& x) const;  ///< specialize x, univariate in y
    UniPoly eval_y(const FieldElem& y) const;  ///< specialize y, univariate in x

    /// Substitute x -> x + a, y -> y + b.
    BiPoly shifted(const FieldElem& a, const FieldElem& b) const;
    /// Substitute y -> y - t*x (a sheared coordinate for projections).
    BiPoly sheared_y(const FieldElem& t) const;
    /// Coefficients as univariate polynomials in the other variable,
    /// ascending in `v`.
    std::vector<UniPoly> coefficients_in(Var v) const;
    /// Image under a coefficient-wise field embedding.
    BiPoly embedded_into(const FieldPtr& bigger) const;

    std::string to_string() const;  // canonical: terms by (i,j) ascending

  private:
    FieldPtr field_;
    std::map<std::pair<int, int>, FieldElem> t_;
};

/// Sylvester resultant eliminating `eliminate`; the result is univariate in
/// the other variable.  Convention: the first deg(g) rows carry the
/// coefficients of f, the remaining deg(f) rows those of g.
UniPoly resultant(const BiPoly& f, const BiPoly& g, Var eliminate);

}  // namespace ssharp
