#include "ssharp/bipoly.hpp"

#include <algorithm>
#include <sstream>

namespace ssharp {

UniPoly::UniPoly(FieldPtr field, std::vector<FieldElem> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
    normalize();
}

void UniPoly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::constant(const FieldElem& c) {
    return UniPoly(c.field(), {c});
}

UniPoly UniPoly::monomial(const FieldPtr& field, int degree, const FieldElem& c) {
    std::vector<FieldElem> coeffs(static_cast<size_t>(degree) + 1, field->zero());
    coeffs[static_cast<size_t>(degree)] = c;
    return UniPoly(field, std::move(coeffs));
}

bool UniPoly::is_monomial() const {
    int nonzero = 0;
    for (const auto& c : c_)
        if (!c.is_zero()) ++nonzero;
    return nonzero <= 1;
}

const FieldElem& UniPoly::leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero");
    return c_.back();
}

FieldElem UniPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return field_->zero();
    return c_[static_cast<size_t>(k)];
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    const FieldPtr& f = a.field_ ? a.field_ : b.field_;
    std::vector<FieldElem> out(std::max(a.c_.size(), b.c_.size()), f->zero());
    for (size_t i = 0; i < a.c_.size(); ++i) out[i] = out[i] + a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) out[i] = out[i] + b.c_[i];
    return UniPoly(f, std::move(out));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator-(const UniPoly& a) {
    std::vector<FieldElem> out = a.c_;
    for (auto& c : out) c = -c;
    return UniPoly(a.field_, std::move(out));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    const FieldPtr& f = a.field_ ? a.field_ : b.field_;
    if (a.is_zero() || b.is_zero()) return UniPoly(f);
    std::vector<FieldElem> out(a.c_.size() + b.c_.size() - 1, f->zero());
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
        }
    }
    return UniPoly(f, std::move(out));
}

UniPoly operator*(const FieldElem& c, const UniPoly& a) {
    std::vector<FieldElem> out = a.c_;
    for (auto& x : out) x = c * x;
    return UniPoly(a.field_ ? a.field_ : c.field(), std::move(out));
}

bool UniPoly::operator==(const UniPoly& rhs) const { return c_ == rhs.c_; }

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly(field_);
    std::vector<FieldElem> out;
    out.reserve(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) out.push_back(field_->from_rational(static_cast<long>(k)) * c_[k]);
    return UniPoly(field_, std::move(out));
}

FieldElem UniPoly::eval(const FieldElem& x) const {
    FieldElem acc = x.field()->zero();
    for (size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return leading().inverse() * *this;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& num, const UniPoly& den) {
    if (den.is_zero()) throw std::domain_error("division by zero polynomial");
    const FieldPtr& f = den.field_;
    UniPoly rem = num;
    std::vector<FieldElem> q(
        num.c_.size() >= den.c_.size() ? num.c_.size() - den.c_.size() + 1 : 0, f->zero());
    FieldElem inv_lead = den.leading().inverse();
    while (!rem.is_zero() && rem.degree() >= den.degree()) {
        FieldElem coeff = rem.leading() * inv_lead;
        int shift = rem.degree() - den.degree();
        q[static_cast<size_t>(shift)] = coeff;
        rem = rem - coeff * UniPoly::monomial(f, shift, f->one()) * den;
    }
    return {UniPoly(f, std::move(q)), rem};
}

UniPoly UniPoly::divexact(const UniPoly& num, const UniPoly& den) {
    auto [q, r] = divmod(num, den);
    if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
    return q;
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << c_[k].to_string() << ")";
        if (k >= 1) {
            os << "*" << var;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        auto [q, r2] = UniPoly::divmod(r0, r1);
        (void)q;
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    return r0.is_zero() ? r0 : r0.monic();
}

bool is_squarefree(const UniPoly& p) {
    if (p.is_zero()) return false;
    if (p.degree() == 0) return true;
    return gcd(p, p.derivative()).degree() == 0;
}

BiPoly BiPoly::constant(const FieldPtr& field, const FieldElem& c) {
    BiPoly p(field);
    p.set_coeff(0, 0, c);
    return p;
}

BiPoly BiPoly::monomial(const FieldPtr& field, int i, int j, const FieldElem& c) {
    BiPoly p(field);
    p.set_coeff(i, j, c);
    return p;
}

BiPoly BiPoly::variable(const FieldPtr& field, Var v) {
    return v == Var::X ? monomial(field, 1, 0, field->one()) : monomial(field, 0, 1, field->one());
}

int BiPoly::degree(Var v) const {
    int d = -1;
    for (const auto& [ij, c] : t_) d = std::max(d, v == Var::X ? ij.first : ij.second);
    return d;
}

int BiPoly::total_degree() const {
    int d = -1;
    for (const auto& [ij, c] : t_) d = std::max(d, ij.first + ij.second);
    return d;
}

FieldElem BiPoly::coeff(int i, int j) const {
    auto it = t_.find({i, j});
    return it == t_.end() ? field_->zero() : it->second;
}

void BiPoly::set_coeff(int i, int j, const FieldElem& c) {
    if (i < 0 || j < 0) throw std::invalid_argument("negative exponent in polynomial");
    if (c.is_zero()) t_.erase({i, j});
    else
        t_[{i, j}] = c;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    BiPoly out = a;
    if (!out.field_) out.field_ = b.field_;
    for (const auto& [ij, c] : b.t_) out.set_coeff(ij.first, ij.second, out.coeff(ij.first, ij.second) + c);
    return out;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

BiPoly operator-(const BiPoly& a) {
    BiPoly out(a.field_);
    for (const auto& [ij, c] : a.t_) out.t_[ij] = -c;
    return out;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly out(a.field_ ? a.field_ : b.field_);
    for (const auto& [ia, ca] : a.t_)
        for (const auto& [ib, cb] : b.t_) {
            int i = ia.first + ib.first, j = ia.second + ib.second;
            out.set_coeff(i, j, out.coeff(i, j) + ca * cb);
        }
    return out;
}

BiPoly operator*(const FieldElem& c, const BiPoly& a) {
    BiPoly out(a.field_ ? a.field_ : c.field());
    if (c.is_zero()) return out;
    for (const auto& [ij, x] : a.t_) out.t_[ij] = c * x;
    return out;
}

bool BiPoly::operator==(const BiPoly& rhs) const { return t_ == rhs.t_; }

BiPoly BiPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative power of a polynomial");
    BiPoly acc = BiPoly::constant(field_, field_->one());
    BiPoly base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

BiPoly BiPoly::derivative(Var v) const {
    BiPoly out(field_);
    for (const auto& [ij, c] : t_) {
        int e = v == Var::X ? ij.first : ij.second;
        if (e == 0) continue;
        FieldElem scaled = field_->from_rational(e) * c;
        if (v == Var::X) out.set_coeff(ij.first - 1, ij.second, scaled);
        else
            out.set_coeff(ij.first, ij.second - 1, scaled);
    }
    return out;
}

FieldElem BiPoly::eval(const FieldElem& x, const FieldElem& y) const {
    FieldElem acc = field_->zero();
    for (const auto& [ij, c] : t_) acc = acc + c * x.pow(ij.first) * y.pow(ij.second);
    return acc;
}

UniPoly BiPoly::eval_x(const FieldElem& x) const {
    std::vector<FieldElem> out(static_cast<size_t>(std::max(degree(Var::Y), -1) + 1), field_->zero());
    for (const auto& [ij, c] : t_)
        out[static_cast<size_t>(ij.second)] = out[static_cast<size_t>(ij.second)] + c * x.pow(ij.first);
    return UniPoly(field_, std::move(out));
}

UniPoly BiPoly::eval_y(const FieldElem& y) const {
    std::vector<FieldElem> out(static_cast<size_t>(std::max(degree(Var::X), -1) + 1), field_->zero());
    for (const auto& [ij, c] : t_)
        out[static_cast<size_t>(ij.first)] = out[static_cast<size_t>(ij.first)] + c * y.pow(ij.second);
    return UniPoly(field_, std::move(out));
}

BiPoly BiPoly::shifted(const FieldElem& a, const FieldElem& b) const {
    const BiPoly xs = BiPoly::variable(field_, Var::X) + BiPoly::constant(field_, a);
    const BiPoly ys = BiPoly::variable(field_, Var::Y) + BiPoly::constant(field_, b);
    BiPoly out(field_);
    for (const auto& [ij, c] : t_) out = out + c * (xs.pow(ij.first) * ys.pow(ij.second));
    return out;
}

BiPoly BiPoly::sheared_y(const FieldElem& t) const {
    // y -> y - t*x
    const BiPoly ys = BiPoly::variable(field_, Var::Y) - t * BiPoly::variable(field_, Var::X);
    BiPoly out(field_);
    for (const auto& [ij, c] : t_)
        out = out + c * (BiPoly::monomial(field_, ij.first, 0, field_->one()) * ys.pow(ij.second));
    return out;
}

std::vector<UniPoly> BiPoly::coefficients_in(Var v) const {
    const int d = degree(v);
    std::vector<UniPoly> out(static_cast<size_t>(d + 1), UniPoly(field_));
    const int other_deg = degree(v == Var::X ? Var::Y : Var::X);
    std::vector<std::vector<FieldElem>> buf(
        static_cast<size_t>(d + 1),
        std::vector<FieldElem>(static_cast<size_t>(other_deg + 1), field_->zero()));
    for (const auto& [ij, c] : t_) {
        int main = v == Var::X ? ij.first : ij.second;
        int other = v == Var::X ? ij.second : ij.first;
        buf[static_cast<size_t>(main)][static_cast<size_t>(other)] = c;
    }
    for (int k = 0; k <= d; ++k) out[static_cast<size_t>(k)] = UniPoly(field_, std::move(buf[static_cast<size_t>(k)]));
    return out;
}

BiPoly BiPoly::embedded_into(const FieldPtr& bigger) const {
    BiPoly out(bigger);
    for (const auto& [ij, c] : t_) out.set_coeff(ij.first, ij.second, c.embed_into(bigger));
    return out;
}

std::string BiPoly::to_string() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [ij, c] : t_) {
        if (!first) os << " + ";
        bool printed = false;
        if (c.is_rational() && c.rational_value() == 1 && (ij.first > 0 || ij.second > 0)) {
            // coefficient 1 is implicit
        } else if (c.is_rational()) {
            os << coeff_to_string(c.rational_value());
            printed = true;
        } else {
            os << "(" << c.to_string() << ")";
            printed = true;
        }
        if (ij.first > 0) {
            if (printed) os << "*";
            os << "x";
            if (ij.first > 1) os << "^" << ij.first;
            printed = true;
        }
        if (ij.second > 0) {
            if (printed) os << "*";
            os << "y";
            if (ij.second > 1) os << "^" << ij.second;
        }
        first = false;
    }
    return os.str();
}

namespace {

// Fraction-free Bareiss determinant over the polynomial ring F[t].
UniPoly bareiss_determinant(std::vector<std::vector<UniPoly>> m, const FieldPtr& field) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return UniPoly::constant(field->one());
    UniPoly prev = UniPoly::constant(field->one());
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[static_cast<size_t>(k)][static_cast<size_t>(k)].is_zero()) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r)
                if (!m[static_cast<size_t>(r)][static_cast<size_t>(k)].is_zero()) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0) return UniPoly(field);  // singular
            std::swap(m[static_cast<size_t>(k)], m[static_cast<size_t>(swap_row)]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                UniPoly num = m[static_cast<size_t>(i)][static_cast<size_t>(j)] * m[static_cast<size_t>(k)][static_cast<size_t>(k)] -
                              m[static_cast<size_t>(i)][static_cast<size_t>(k)] * m[static_cast<size_t>(k)][static_cast<size_t>(j)];
                m[static_cast<size_t>(i)][static_cast<size_t>(j)] = UniPoly::divexact(num, prev);
            }
        prev = m[static_cast<size_t>(k)][static_cast<size_t>(k)];
        for (int i = k + 1; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(k)] = UniPoly(field);
    }
    UniPoly det = m[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)];
    return sign < 0 ? -det : det;
}

}  // namespace

UniPoly resultant(const BiPoly& f, const BiPoly& g, Var eliminate) {
    if (f.is_zero() || g.is_zero()) throw std::domain_error("resultant of the zero polynomial");
    const FieldPtr& field = f.field() ? f.field() : g.field();
    const int m = f.degree(eliminate);
    const int n = g.degree(eliminate);
    std::vector<UniPoly> fc = f.coefficients_in(eliminate);
    std::vector<UniPoly> gc = g.coefficients_in(eliminate);

    if (m == 0 && n == 0) return UniPoly::constant(field->one());
    if (m == 0) {
        UniPoly acc = UniPoly::constant(field->one());
        for (int k = 0; k < n; ++k) acc = acc * fc[0];
        return acc;  // Res(c, g) = c^deg(g)
    }
    if (n == 0) {
        UniPoly acc = UniPoly::constant(field->one());
        for (int k = 0; k < m; ++k) acc = acc * gc[0];
        return acc;
    }

    const int size = m + n;
    std::vector<std::vector<UniPoly>> syl(static_cast<size_t>(size),
                                          std::vector<UniPoly>(static_cast<size_t>(size), UniPoly(field)));
    // First n rows: coefficients of f, descending, shifted right per row.
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) syl[static_cast<size_t>(r)][static_cast<size_t>(r + k)] = fc[static_cast<size_t>(m - k)];
    // Remaining m rows: coefficients of g.
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) syl[static_cast<size_t>(n + r)][static_cast<size_t>(r + k)] = gc[static_cast<size_t>(n - k)];
    return bareiss_determinant(std::move(syl), field);
}

}  // namespace ssharp
