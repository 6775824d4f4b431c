#include "ssharp/module_map.hpp"

#include <nlohmann/json.hpp>

namespace ssharp {

BasisIndex::BasisIndex(std::vector<int> s) : signs(std::move(s)) {
    for (int v : signs)
        if (v != 1 && v != -1) throw std::invalid_argument("basis index signs must be +1 or -1");
}

BasisIndex BasisIndex::from_string(const std::string& s) {
    std::vector<int> signs;
    signs.reserve(s.size());
    for (char ch : s) {
        if (ch == '+') signs.push_back(1);
        else if (ch == '-') signs.push_back(-1);
        else
            throw std::invalid_argument(std::string("bad basis index character '") + ch + "'");
    }
    return BasisIndex(std::move(signs));
}

BasisIndex BasisIndex::from_ordinal(int ordinal, int length) {
    if (ordinal < 0 || ordinal >= (1 << length)) throw std::out_of_range("basis ordinal out of range");
    std::vector<int> signs(static_cast<size_t>(length));
    for (int k = 0; k < length; ++k) {
        int bit = (ordinal >> (length - 1 - k)) & 1;
        signs[static_cast<size_t>(k)] = bit ? -1 : 1;
    }
    return BasisIndex(std::move(signs));
}

int BasisIndex::ordinal() const {
    int o = 0;
    for (int v : signs) o = (o << 1) | (v == -1 ? 1 : 0);
    return o;
}

int BasisIndex::n_minus() const {
    int n = 0;
    for (int v : signs) n += (v == -1) ? 1 : 0;
    return n;
}

BasisIndex BasisIndex::flipped(int component) const {
    BasisIndex out = *this;
    out.signs.at(static_cast<size_t>(component)) *= -1;
    return out;
}

std::string BasisIndex::str() const {
    std::string s;
    s.reserve(signs.size());
    for (int v : signs) s.push_back(v == 1 ? '+' : '-');
    return s;
}

ModuleMap::ModuleMap(int source_exp, int target_exp, int order)
    : source_exp_(source_exp), target_exp_(target_exp), order_(order) {
    if (source_exp < 0 || target_exp < 0) throw std::invalid_argument("negative rank exponent");
    if (source_exp > 16 || target_exp > 16) throw std::invalid_argument("rank exponent too large");
    e_.assign(static_cast<size_t>(source_rank()) * static_cast<size_t>(target_rank()), SeriesQ::zero(order));
}

ModuleMap ModuleMap::identity(int exp, int order) {
    ModuleMap m(exp, exp, order);
    for (int i = 0; i < m.source_rank(); ++i) m.entry(i, i) = SeriesQ::one(order);
    return m;
}

Valuation ModuleMap::column_valuation(int col) const {
    bool all_exact_zero = true;
    bool exhausted = false;
    Valuation best = Valuation::infinity();
    for (int r = 0; r < target_rank(); ++r) {
        const SeriesQ& x = entry(r, col);
        if (x.exact_zero()) continue;
        all_exact_zero = false;
        if (x.stored_zero()) {
            exhausted = true;  // true valuation >= order, invisible here
            continue;
        }
        Valuation v = x.valuation();
        if (v < best) best = v;
    }
    if (all_exact_zero) return Valuation::infinity();
    if (!best.is_infinite()) return best;  // a finite entry dominates any hidden tail
    if (exhausted)
        throw PrecisionExhausted("column valuation exceeds truncation order " + std::to_string(order_));
    return best;
}

int ModuleMap::column_support(int col) const {
    int n = 0;
    for (int r = 0; r < target_rank(); ++r)
        if (!entry(r, col).exact_zero() && !entry(r, col).stored_zero()) ++n;
    return n;
}

ModuleMap operator*(const ModuleMap& a, const ModuleMap& b) {
    if (a.source_exponent() != b.target_exponent())
        throw std::invalid_argument("composition rank mismatch");
    if (a.order() != b.order()) throw TruncationMismatch("composition truncation order mismatch");
    ModuleMap out(b.source_exponent(), a.target_exponent(), a.order());
    for (int r = 0; r < out.target_rank(); ++r)
        for (int k = 0; k < a.source_rank(); ++k) {
            const SeriesQ& ark = a.entry(r, k);
            if (ark.exact_zero()) continue;
            for (int c = 0; c < out.source_rank(); ++c) {
                const SeriesQ& bkc = b.entry(k, c);
                if (bkc.exact_zero()) continue;
                out.entry(r, c) = out.entry(r, c) + ark * bkc;
            }
        }
    return out;
}

ModuleMap tensor(const ModuleMap& a, const ModuleMap& b) {
    if (a.order() != b.order()) throw TruncationMismatch("tensor truncation order mismatch");
    ModuleMap out(a.source_exponent() + b.source_exponent(), a.target_exponent() + b.target_exponent(),
                  a.order());
    for (int ra = 0; ra < a.target_rank(); ++ra)
        for (int ca = 0; ca < a.source_rank(); ++ca) {
            const SeriesQ& x = a.entry(ra, ca);
            if (x.exact_zero()) continue;
            for (int rb = 0; rb < b.target_rank(); ++rb)
                for (int cb = 0; cb < b.source_rank(); ++cb) {
                    const SeriesQ& y = b.entry(rb, cb);
                    if (y.exact_zero()) continue;
                    out.entry(ra * b.target_rank() + rb, ca * b.source_rank() + cb) = x * y;
                }
        }
    return out;
}

ModuleMap scale(const SeriesQ& s, const ModuleMap& m) {
    ModuleMap out = m;
    for (int r = 0; r < m.target_rank(); ++r)
        for (int c = 0; c < m.source_rank(); ++c) {
            if (out.entry(r, c).exact_zero()) continue;
            out.entry(r, c) = s * out.entry(r, c);
        }
    return out;
}

ModuleMap scale(const Rational& c, const ModuleMap& m) {
    return scale(SeriesQ::constant(c, m.order()), m);
}

bool ModuleMap::operator==(const ModuleMap& rhs) const {
    return source_exp_ == rhs.source_exp_ && target_exp_ == rhs.target_exp_ && order_ == rhs.order_ &&
           e_ == rhs.e_;
}

nlohmann::json ModuleMap::to_json() const {
    nlohmann::ordered_json j;
    j["source_exp"] = source_exp_;
    j["target_exp"] = target_exp_;
    j["truncation_order"] = order_;
    j["basis_order"] = "+<-";  // lexicographic with +1 before -1
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int r = 0; r < target_rank(); ++r) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int c = 0; c < source_rank(); ++c) {
            nlohmann::ordered_json cell = nlohmann::ordered_json::array();
            const SeriesQ& x = entry(r, c);
            if (!x.exact_zero()) {
                int top = x.order() - 1;
                while (top >= 0 && x.coeff(top) == 0) --top;
                for (int k = 0; k <= top; ++k) cell.push_back(coeff_to_string(x.coeff(k)));
            }
            row.push_back(std::move(cell));
        }
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
}

ModuleMap ModuleMap::from_json(const nlohmann::json& j) {
    int order = j.value("truncation_order", 24);
    ModuleMap m(j.at("source_exp").get<int>(), j.at("target_exp").get<int>(), order);
    const auto& rows = j.at("entries");
    for (int r = 0; r < m.target_rank(); ++r)
        for (int c = 0; c < m.source_rank(); ++c) {
            const auto& cell = rows.at(static_cast<size_t>(r)).at(static_cast<size_t>(c));
            std::vector<Rational> coeffs;
            for (const auto& s : cell) coeffs.push_back(coeff_from_string(s.get<std::string>()));
            if (!coeffs.empty()) m.entry(r, c) = SeriesQ::from_coefficients(std::move(coeffs), order);
        }
    return m;
}

ModuleMap component_permutation_map(const std::vector<int>& perm, int order) {
    const int l = static_cast<int>(perm.size());
    ModuleMap m(l, l, order);
    for (int c = 0; c < (1 << l); ++c) {
        BasisIndex src = BasisIndex::from_ordinal(c, l);
        std::vector<int> signs(static_cast<size_t>(l));
        for (int i = 0; i < l; ++i) signs[static_cast<size_t>(i)] = src.signs[static_cast<size_t>(perm[static_cast<size_t>(i)])];
        m.entry(BasisIndex(signs).ordinal(), c) = SeriesQ::one(order);
    }
    return m;
}

ModuleMap torus_map(int order) {
    ModuleMap m(1, 1, order);
    m.entry(1, 0) = SeriesQ::constant(2, order);                       // u+ -> 2u-
    m.entry(0, 1) = scale(2, SeriesQ::lambda_power(2, order));         // u- -> 2*lambda^2*u+
    return m;
}

ModuleMap merge_map(int order) {
    ModuleMap m(2, 1, order);
    m.entry(0, 0) = SeriesQ::one(order);                        // u+ . u+ = u+
    m.entry(1, 1) = SeriesQ::one(order);                        // u+ . u- = u-
    m.entry(1, 2) = SeriesQ::one(order);                        // u- . u+ = u-
    m.entry(0, 3) = SeriesQ::lambda_power(2, order);            // u- . u- = lambda^2 u+
    return m;
}

ModuleMap split_map(int order) {
    ModuleMap m(1, 2, order);
    m.entry(1, 0) = SeriesQ::one(order);                        // u+ -> u+ (x) u-
    m.entry(2, 0) = SeriesQ::one(order);                        //        + u- (x) u+
    m.entry(3, 1) = SeriesQ::one(order);                        // u- -> u- (x) u-
    m.entry(0, 1) = SeriesQ::lambda_power(2, order);            //        + lambda^2 u+ (x) u+
    return m;
}

ModuleMap birth_map(int order) {
    ModuleMap m(0, 1, order);
    m.entry(0, 0) = SeriesQ::one(order);  // 1 -> u+
    return m;
}

ModuleMap death_map(int order) {
    ModuleMap m(1, 0, order);
    m.entry(0, 1) = SeriesQ::one(order);  // u+ -> 0, u- -> 1
    return m;
}

SeriesQ twist_scalar(TwistSign sign, int order) {
    if (sign == TwistSign::Negative) return SeriesQ::one(order);
    LaurentU p;  // 1 - u^2
    p.set(0, 1);
    p.set(2, -1);
    return embed_laurent_u(p, order);
}

SeriesQ finger_scalar(int order) { return twist_scalar(TwistSign::Positive, order); }

}  // namespace ssharp
