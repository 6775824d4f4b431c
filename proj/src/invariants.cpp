#include "ssharp/invariants.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

#include <nlohmann/json.hpp>

namespace ssharp {

namespace {

struct PresentationAnalysis {
    TopologyLedger ledger;
    ScaledInducedMap map;
};

PresentationAnalysis analyze(const CobordismPresentation& pres, int order) {
    return {validate(pres), induced_map_scaled(pres, order)};
}

// Largest k with column = lambda^k * v.  For a knot target the image must be
// a multiple of a single generator (the mod-2 grading of the calculus forces
// this); a violation is a modeling bug, not an input error.
int column_m(const PresentationAnalysis& a, int col) {
    Valuation v = a.map.column_valuation(col);
    if (v.is_infinite())
        throw InvariantUndefined("generator maps to zero; no lambda power can be extracted");
    if (a.map.base.target_exponent() == 1 && a.map.base.column_support(col) != 1)
        throw std::logic_error("internal: knot-target image is not a multiple of a single generator");
    return v.value();
}

SharpPair s_pm_from(const PresentationAnalysis& a) {
    if (a.ledger.source_components != 1)
        throw NotConnected("s_pm needs a presentation starting at the unknot");
    if (!a.ledger.connected) throw NotConnected("presentation is not connected");
    const int g = a.ledger.total_genus;
    const int p = a.ledger.positive_double_points;
    const int m_plus = column_m(a, 0);
    const int m_minus = column_m(a, 1);
    if (g % 2 == 0) return {g + p - m_plus, g + p - m_minus};
    return {g + p - m_minus + 1, g + p - m_plus - 1};
}

int s_I_from(const PresentationAnalysis& a, const BasisIndex& I) {
    if (!a.ledger.component_preserving)
        throw NotComponentPreserving("s_I needs a component-preserving presentation");
    const int l = a.ledger.source_components;
    if (I.length() != l) throw std::invalid_argument("basis index length mismatch");
    BasisIndex J = I;
    int bookkeeping = 0;
    for (int k = 0; k < l; ++k) {
        const int gk = a.ledger.component_genus[static_cast<size_t>(k)];
        bookkeeping += 2 * (gk / 2);
        if (gk % 2 != 0) {
            J = J.flipped(k);
            if (I.signs[static_cast<size_t>(k)] == 1) bookkeeping += 2;
        }
    }
    const int m = column_m(a, J.ordinal());
    return bookkeeping + a.ledger.positive_double_points - m;
}

}  // namespace

SharpPair s_sharp_pm(const CobordismPresentation& pres, int order) {
    return s_pm_from(analyze(pres, order));
}

int s_sharp_I(const CobordismPresentation& pres, const BasisIndex& I, int order) {
    return s_I_from(analyze(pres, order), I);
}

std::map<std::string, int> s_sharp_I_table(const CobordismPresentation& pres, int order) {
    PresentationAnalysis a = analyze(pres, order);
    std::map<std::string, int> table;
    const int l = pres.source_components;
    for (int o = 0; o < (1 << l); ++o) {
        BasisIndex I = BasisIndex::from_ordinal(o, l);
        table[I.str()] = s_I_from(a, I);
    }
    return table;
}

int s_sharp_total(const CobordismPresentation& pres, int order) {
    SharpPair pm = s_sharp_pm(pres, order);
    return pm.s_plus + pm.s_minus;
}

bool check_difference_bounds(const CobordismPresentation& pres, int order) {
    SharpPair pm = s_sharp_pm(pres, order);
    const int d = pm.s_plus - pm.s_minus;
    return 0 <= d && d <= 2;
}

int closed_form_torus_link(int m, int n, int d, const BasisIndex& I) {
    if (m <= 1 || n <= 1 || d < 1) throw std::invalid_argument("need m, n > 1 and d >= 1");
    if (std::gcd(m, n) != 1) throw std::invalid_argument("m and n must be coprime");
    if (I.length() != d) throw std::invalid_argument("index length must equal d");
    const int h = (m - 1) * (n - 1) / 2;
    const int crossings = m * n * d * (d - 1) / 2;
    const int n_minus = I.n_minus();
    if (h % 2 == 0) return d * h + crossings - n_minus;
    return d * h + d + crossings - 3 * n_minus;
}

DifferenceMatrix difference_matrix_from_m(int m_plus, int m_minus, int order) {
    // From the two composite routes through the genus-1 self-cobordism:
    // lower-left exponent a = m- - m+, upper-right b = 2 + m+ - m-.
    DifferenceMatrix out;
    out.difference = m_minus - m_plus;
    if (out.difference < 0 || out.difference > 2)
        throw std::logic_error("internal: lambda-count difference outside [0,2]");
    out.lower_left_exponent = out.difference;
    out.upper_right_exponent = 2 - out.difference;
    out.pattern = ModuleMap(1, 1, order);
    out.pattern.entry(1, 0) = SeriesQ::lambda_power(out.lower_left_exponent, order);
    out.pattern.entry(0, 1) = SeriesQ::lambda_power(out.upper_right_exponent, order);
    return out;
}

DifferenceMatrix difference_matrix(const CobordismPresentation& pres, int order) {
    PresentationAnalysis a = analyze(pres, order);
    SharpPair pm = s_pm_from(a);
    const int diff = pm.s_plus - pm.s_minus;
    // Reconstruct even-genus lambda counts realizing this difference.
    return difference_matrix_from_m(0, diff, order);
}

bool check_inequality_component(const CobordismPresentation& pre_l1, const CobordismPresentation& cob,
                                int order) {
    PresentationAnalysis base = analyze(pre_l1, order);
    if (!base.ledger.component_preserving)
        throw NotComponentPreserving("reference presentation must be component-preserving");
    TopologyLedger cob_ledger = validate(cob);
    if (!cob_ledger.component_preserving)
        throw NotComponentPreserving("cobordism must be component-preserving");
    PresentationAnalysis composite = analyze(compose(pre_l1, cob), order);

    const int l = pre_l1.source_components;
    // Genus of the cobordism piece sitting over unlink component k.
    std::vector<int> genus_over(static_cast<size_t>(l));
    for (int k = 0; k < l; ++k) {
        int l1_comp = base.ledger.component_map[static_cast<size_t>(k)];
        genus_over[static_cast<size_t>(k)] = cob_ledger.component_genus[static_cast<size_t>(l1_comp)];
    }

    for (int o = 0; o < (1 << l); ++o) {
        BasisIndex I = BasisIndex::from_ordinal(o, l);
        BasisIndex flipped = I;
        int rhs = cob_ledger.positive_double_points;
        for (int k = 0; k < l; ++k) {
            const int gk = genus_over[static_cast<size_t>(k)];
            rhs += 2 * (gk / 2);
            if (gk % 2 != 0) {
                flipped = flipped.flipped(k);
                if (I.signs[static_cast<size_t>(k)] == 1) rhs += 2;
            }
        }
        const int lhs = s_I_from(composite, I) - s_I_from(base, flipped);
        if (lhs > rhs) return false;
    }
    return true;
}

bool check_inequality_total(const CobordismPresentation& pre_l1, const CobordismPresentation& cob,
                            int order) {
    PresentationAnalysis base = analyze(pre_l1, order);
    TopologyLedger cob_ledger = validate(cob);
    if (!cob_ledger.all_pieces_touch_source)
        throw std::invalid_argument("every piece of the cobordism must touch the first link");
    PresentationAnalysis composite = analyze(compose(pre_l1, cob), order);

    SharpPair s1 = s_pm_from(base);
    SharpPair s2 = s_pm_from(composite);
    const int lhs = (s2.s_plus + s2.s_minus) - (s1.s_plus + s1.s_minus);
    const int rhs = 2 * cob_ledger.positive_double_points - cob_ledger.total_euler +
                    (cob_ledger.source_components - cob_ledger.target_components);
    return lhs <= rhs;
}

int ValuationConstraintSystem::add_unknown(const std::string& name) {
    int idx = unknown_index(name);
    if (idx >= 0) return idx;
    unknowns.push_back(name);
    return static_cast<int>(unknowns.size()) - 1;
}

int ValuationConstraintSystem::unknown_index(const std::string& name) const {
    auto it = std::find(unknowns.begin(), unknowns.end(), name);
    return it == unknowns.end() ? -1 : static_cast<int>(it - unknowns.begin());
}

void ValuationConstraintSystem::add_constraint(std::vector<std::pair<std::string, long>> terms, Rel rel,
                                               long rhs) {
    LinearConstraint c;
    c.rel = rel;
    c.rhs = rhs;
    for (auto& [name, coeff] : terms) {
        int idx = unknown_index(name);
        if (idx < 0) throw std::invalid_argument("constraint references undeclared unknown '" + name + "'");
        c.terms.emplace_back(idx, coeff);
    }
    constraints.push_back(std::move(c));
}

void ValuationConstraintSystem::add_min_zero(std::vector<std::string> names) {
    std::vector<int> group;
    for (const auto& name : names) {
        int idx = unknown_index(name);
        if (idx < 0) throw std::invalid_argument("axiom references undeclared unknown '" + name + "'");
        group.push_back(idx);
    }
    min_zero_groups.push_back(std::move(group));
}

nlohmann::json ValuationConstraintSystem::to_json() const {
    nlohmann::ordered_json j;
    j["unknowns"] = unknowns;
    j["bound"] = bound;
    nlohmann::ordered_json cs = nlohmann::ordered_json::array();
    for (const auto& c : constraints) {
        nlohmann::ordered_json jc;
        nlohmann::ordered_json terms;
        for (const auto& [idx, coeff] : c.terms) terms[unknowns[static_cast<size_t>(idx)]] = coeff;
        jc["terms"] = std::move(terms);
        jc["rel"] = c.rel == Rel::Eq ? "==" : (c.rel == Rel::Le ? "<=" : ">=");
        jc["rhs"] = c.rhs;
        cs.push_back(std::move(jc));
    }
    j["constraints"] = std::move(cs);
    nlohmann::ordered_json groups = nlohmann::ordered_json::array();
    for (const auto& g : min_zero_groups) {
        nlohmann::ordered_json names = nlohmann::ordered_json::array();
        for (int idx : g) names.push_back(unknowns[static_cast<size_t>(idx)]);
        groups.push_back(std::move(names));
    }
    j["min_zero"] = std::move(groups);
    return j;
}

ValuationConstraintSystem ValuationConstraintSystem::from_json(const nlohmann::json& j) {
    ValuationConstraintSystem sys;
    for (const auto& name : j.at("unknowns")) sys.add_unknown(name.get<std::string>());
    sys.bound = j.value("bound", 8L);
    if (j.contains("constraints"))
        for (const auto& jc : j.at("constraints")) {
            std::vector<std::pair<std::string, long>> terms;
            for (const auto& [name, coeff] : jc.at("terms").items())
                terms.emplace_back(name, coeff.get<long>());
            const std::string rel = jc.at("rel").get<std::string>();
            Rel r = rel == "==" ? Rel::Eq : (rel == "<=" ? Rel::Le : (rel == ">=" ? Rel::Ge : throw std::invalid_argument("bad relation '" + rel + "'")));
            sys.add_constraint(std::move(terms), r, jc.at("rhs").get<long>());
        }
    if (j.contains("min_zero"))
        for (const auto& group : j.at("min_zero")) {
            std::vector<std::string> names;
            for (const auto& name : group) names.push_back(name.get<std::string>());
            sys.add_min_zero(std::move(names));
        }
    return sys;
}

Deduction deduce_valuations(const ValuationConstraintSystem& sys) {
    const int k = static_cast<int>(sys.unknowns.size());
    if (k > 8) throw std::invalid_argument("too many unknowns for exhaustive search");
    if (sys.bound < 0) throw std::invalid_argument("bound must be nonnegative");
    double space = 1;
    for (int i = 0; i < k; ++i) space *= static_cast<double>(sys.bound + 1);
    if (space > 2e8) throw std::invalid_argument("search space too large; lower the bound");

    std::vector<long> point(static_cast<size_t>(k), 0);
    auto satisfies = [&]() {
        for (const auto& c : sys.constraints) {
            long lhs = 0;
            for (const auto& [idx, coeff] : c.terms) lhs += coeff * point[static_cast<size_t>(idx)];
            switch (c.rel) {
                case ValuationConstraintSystem::Rel::Eq:
                    if (lhs != c.rhs) return false;
                    break;
                case ValuationConstraintSystem::Rel::Le:
                    if (lhs > c.rhs) return false;
                    break;
                case ValuationConstraintSystem::Rel::Ge:
                    if (lhs < c.rhs) return false;
                    break;
            }
        }
        for (const auto& group : sys.min_zero_groups) {
            long mn = LONG_MAX;
            for (int idx : group) mn = std::min(mn, point[static_cast<size_t>(idx)]);
            if (mn != 0) return false;
        }
        return true;
    };

    long solutions = 0;
    std::vector<long> first;
    std::vector<std::pair<long, long>> ranges(static_cast<size_t>(k), {LONG_MAX, LONG_MIN});
    while (true) {
        if (satisfies()) {
            ++solutions;
            if (first.empty()) first = point;
            for (int i = 0; i < k; ++i) {
                ranges[static_cast<size_t>(i)].first = std::min(ranges[static_cast<size_t>(i)].first, point[static_cast<size_t>(i)]);
                ranges[static_cast<size_t>(i)].second = std::max(ranges[static_cast<size_t>(i)].second, point[static_cast<size_t>(i)]);
            }
        }
        int pos = k - 1;
        while (pos >= 0 && point[static_cast<size_t>(pos)] == sys.bound) {
            point[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++point[static_cast<size_t>(pos)];
        if (k == 0) break;
    }

    if (solutions == 0) throw InconsistentSystem("no assignment satisfies the system");
    Deduction out;
    if (solutions == 1) {
        out.kind = Deduction::Kind::Unique;
        out.assignment = std::move(first);
        for (int i = 0; i < k; ++i)
            out.ranges.emplace_back(out.assignment[static_cast<size_t>(i)], out.assignment[static_cast<size_t>(i)]);
    } else {
        out.kind = Deduction::Kind::Underdetermined;
        out.ranges = std::move(ranges);
    }
    return out;
}

nlohmann::json Deduction::to_json(const ValuationConstraintSystem& sys) const {
    nlohmann::ordered_json j;
    j["kind"] = kind == Kind::Unique ? "unique" : "underdetermined";
    if (kind == Kind::Unique) {
        nlohmann::ordered_json a;
        for (size_t i = 0; i < sys.unknowns.size(); ++i) a[sys.unknowns[i]] = assignment[i];
        j["assignment"] = std::move(a);
    } else {
        nlohmann::ordered_json r;
        for (size_t i = 0; i < sys.unknowns.size(); ++i)
            r[sys.unknowns[i]] = nlohmann::ordered_json::array({ranges[i].first, ranges[i].second});
        j["ranges"] = std::move(r);
    }
    return j;
}

ValuationConstraintSystem one_node_curve_system() {
    // Compare (genus-1 block) o (immersed curve) against (positive twist) o
    // (smoothed curve): equal genus profile and double points force equal
    // maps, and neither curve map is divisible by lambda.
    ValuationConstraintSystem sys;
    sys.bound = 6;
    sys.add_unknown("m_plus_immersed");
    sys.add_unknown("m_minus_immersed");
    sys.add_unknown("m_plus_smoothed");
    sys.add_unknown("m_minus_smoothed");
    sys.add_constraint({{"m_minus_immersed", 1}, {"m_plus_smoothed", -1}}, ValuationConstraintSystem::Rel::Eq, 1);
    sys.add_constraint({{"m_plus_immersed", 1}, {"m_minus_smoothed", -1}}, ValuationConstraintSystem::Rel::Eq, -1);
    sys.add_min_zero({"m_plus_immersed", "m_minus_immersed"});
    sys.add_min_zero({"m_plus_smoothed", "m_minus_smoothed"});
    return sys;
}

ValuationConstraintSystem quasipositive_composite_system() {
    // Birth, split off the one-node torus-knot curve, then merge: the
    // composite is itself a one-node curve for the connected sum, so its
    // lambda counts are 0 and 1; the merge contributes unknown nonnegative
    // extras t+ and t-.
    ValuationConstraintSystem sys;
    sys.bound = 4;
    sys.add_unknown("m_plus");
    sys.add_unknown("m_minus");
    sys.add_unknown("t_plus");
    sys.add_unknown("t_minus");
    sys.add_constraint({{"m_plus", 1}, {"t_plus", 1}}, ValuationConstraintSystem::Rel::Eq, 0);
    sys.add_constraint({{"m_minus", 1}, {"t_minus", 1}}, ValuationConstraintSystem::Rel::Eq, 1);
    return sys;
}

PlusMinusIntervals quasipositive_bounds(int genus) {
    if (genus < 0) throw std::invalid_argument("genus must be nonnegative");
    Deduction d = deduce_valuations(quasipositive_composite_system());
    ValuationConstraintSystem sys = quasipositive_composite_system();
    auto range_of = [&](const std::string& name) {
        return d.ranges[static_cast<size_t>(sys.unknown_index(name))];
    };
    auto [mp_lo, mp_hi] = range_of("m_plus");
    auto [mm_lo, mm_hi] = range_of("m_minus");

    PlusMinusIntervals out;
    if (genus % 2 == 0) {
        out.s_plus = {static_cast<int>(genus - mp_hi), static_cast<int>(genus - mp_lo)};
        out.s_minus = {static_cast<int>(genus - mm_hi), static_cast<int>(genus - mm_lo)};
    } else {
        out.s_plus = {static_cast<int>(genus + 1 - mm_hi), static_cast<int>(genus + 1 - mm_lo)};
        out.s_minus = {static_cast<int>(genus - 1 - mp_hi), static_cast<int>(genus - 1 - mp_lo)};
    }
    return out;
}

SharpPair switching_crossings(int switched_negative, int switched_positive) {
    if (switched_negative < 0 || switched_positive < 0)
        throw std::invalid_argument("crossing counts must be nonnegative");
    // The composite unknot-to-unknot cobordism has no genus and no positive
    // double points, so its map has no lambda factors; monotonicity then
    // pins both counts of the first half to zero.
    ValuationConstraintSystem sys;
    sys.bound = 4;
    sys.add_unknown("m_plus");
    sys.add_unknown("m_minus");
    sys.add_constraint({{"m_plus", 1}}, ValuationConstraintSystem::Rel::Le, 0);
    sys.add_constraint({{"m_minus", 1}}, ValuationConstraintSystem::Rel::Le, 0);
    Deduction d = deduce_valuations(sys);
    if (d.kind != Deduction::Kind::Unique) throw std::logic_error("internal: switching system not unique");
    return {static_cast<int>(-d.assignment[0]), static_cast<int>(-d.assignment[1])};
}

int CurveCertificate::total_nodes() const {
    return std::accumulate(per_component_nodes.begin(), per_component_nodes.end(), inter_component_nodes);
}

nlohmann::json CurveCertificate::to_json() const {
    nlohmann::ordered_json j;
    j["family"] = family;
    j["components"] = components;
    j["per_component_genus"] = per_component_genus;
    j["per_component_nodes"] = per_component_nodes;
    j["inter_component_nodes"] = inter_component_nodes;
    nlohmann::ordered_json params;
    for (const auto& [key, value] : parameters) params[key] = value;
    j["parameters"] = std::move(params);
    j["irreducible_in_ball_trusted"] = irreducible_in_ball_trusted;
    return j;
}

CurveCertificate CurveCertificate::from_json(const nlohmann::json& j) {
    CurveCertificate c;
    c.family = j.at("family").get<std::string>();
    c.components = j.at("components").get<int>();
    c.per_component_genus = j.at("per_component_genus").get<std::vector<int>>();
    c.per_component_nodes = j.at("per_component_nodes").get<std::vector<int>>();
    c.inter_component_nodes = j.at("inter_component_nodes").get<int>();
    if (j.contains("parameters"))
        for (const auto& [key, value] : j.at("parameters").items()) c.parameters[key] = value.get<std::string>();
    c.irreducible_in_ball_trusted = j.value("irreducible_in_ball_trusted", true);
    return c;
}

namespace {

int parameter_int(const CurveCertificate& cert, const std::string& key) {
    auto it = cert.parameters.find(key);
    if (it == cert.parameters.end())
        throw std::invalid_argument("certificate is missing parameter '" + key + "'");
    return std::stoi(it->second);
}

InvariantReport knot_report(const CurveCertificate& cert) {
    if (cert.components != 1 || cert.per_component_genus.size() != 1 ||
        cert.per_component_nodes.size() != 1)
        throw std::invalid_argument("knot certificate must have one component");
    if (cert.per_component_nodes[0] != 1)
        throw std::invalid_argument("knot pipeline needs exactly one node");

    Deduction d = deduce_valuations(one_node_curve_system());
    if (d.kind != Deduction::Kind::Unique) throw std::logic_error("internal: one-node system not unique");
    const int m_plus = static_cast<int>(d.assignment[0]);
    const int m_minus = static_cast<int>(d.assignment[1]);

    const int g = cert.per_component_genus[0];
    const int p = 1;
    InvariantReport rep;
    rep.pm_defined = true;
    if (g % 2 == 0) {
        rep.s_plus = g + p - m_plus;
        rep.s_minus = g + p - m_minus;
    } else {
        rep.s_plus = g + p - m_minus + 1;
        rep.s_minus = g + p - m_plus - 1;
    }
    rep.s_total = rep.s_plus + rep.s_minus;
    rep.s_I = {{"+", rep.s_plus}, {"-", rep.s_minus}};

    CobordismPresentation model(1, {});
    for (int k = 0; k < g; ++k) model.moves.push_back(Move::add_genus(0));
    model.moves.push_back(Move::positive_twist(0));
    rep.presentation = model;
    rep.ledger = validate(model);
    return rep;
}

InvariantReport family_report(const CurveCertificate& cert) {
    const int d = cert.components;
    if (static_cast<int>(cert.per_component_genus.size()) != d ||
        static_cast<int>(cert.per_component_nodes.size()) != d)
        throw std::invalid_argument("family certificate has inconsistent component data");
    const int m = parameter_int(cert, "m");
    const int n = parameter_int(cert, "n");

    InvariantReport rep;
    rep.pm_defined = true;
    // Index-by-index values from the smoothing comparisons: u_I picks up one
    // lambda per minus entry, and odd smooth genus adds the bookkeeping term
    // for each plus entry.
    for (int o = 0; o < (1 << d); ++o) {
        BasisIndex I = BasisIndex::from_ordinal(o, d);
        int value = cert.inter_component_nodes - I.n_minus();
        for (int k = 0; k < d; ++k) {
            const int smooth_genus =
                cert.per_component_genus[static_cast<size_t>(k)] + cert.per_component_nodes[static_cast<size_t>(k)];
            value += 2 * (smooth_genus / 2);
            if (smooth_genus % 2 != 0 && I.signs[static_cast<size_t>(k)] == 1) value += 2;
        }
        rep.s_I[I.str()] = value;
    }

    // Connected invariants of the link via its one-node connected curve.
    const int md = m * d, nd = n * d;
    const int connected_genus = ((md - 1) * (nd - 1) + 1 - d) / 2;
    rep.s_plus = connected_genus;
    rep.s_minus = connected_genus - 1;
    rep.s_total = rep.s_plus + rep.s_minus;

    CobordismPresentation model(d, {});
    for (int k = 0; k < d; ++k) {
        for (int g = 0; g < cert.per_component_genus[static_cast<size_t>(k)]; ++g)
            model.moves.push_back(Move::add_genus(k));
        for (int t = 0; t < cert.per_component_nodes[static_cast<size_t>(k)]; ++t)
            model.moves.push_back(Move::positive_twist(k));
    }
    for (int t = 0; t < cert.inter_component_nodes; ++t) model.moves.push_back(Move::positive_twist(0));
    rep.presentation = model;
    rep.ledger = validate(model);
    return rep;
}

}  // namespace

InvariantReport curve_invariants(const CurveCertificate& cert) {
    if (cert.family == "torus_knot" || cert.family == "connected_sum") return knot_report(cert);
    if (cert.family == "torus_link_family") return family_report(cert);
    throw std::invalid_argument("unknown certificate family '" + cert.family + "'");
}

InvariantReport presentation_invariants(const CobordismPresentation& pres, int order) {
    PresentationAnalysis a = analyze(pres, order);
    InvariantReport rep;
    rep.presentation = pres;
    rep.ledger = a.ledger;
    bool any = false;
    if (a.ledger.source_components == 1 && a.ledger.connected) {
        SharpPair pm = s_pm_from(a);
        rep.pm_defined = true;
        rep.s_plus = pm.s_plus;
        rep.s_minus = pm.s_minus;
        rep.s_total = pm.s_plus + pm.s_minus;
        any = true;
    }
    if (a.ledger.component_preserving) {
        const int l = pres.source_components;
        for (int o = 0; o < (1 << l); ++o) {
            BasisIndex I = BasisIndex::from_ordinal(o, l);
            rep.s_I[I.str()] = s_I_from(a, I);
        }
        any = true;
    }
    if (!any)
        throw std::invalid_argument(
            "presentation is neither connected from the unknot nor component-preserving; no invariant is defined");
    return rep;
}

nlohmann::json InvariantReport::to_json() const {
    nlohmann::ordered_json j;
    if (pm_defined) {
        j["s_plus"] = s_plus;
        j["s_minus"] = s_minus;
        j["s_total"] = s_total;
    }
    if (!s_I.empty()) {
        nlohmann::ordered_json table;
        const int l = static_cast<int>(s_I.begin()->first.size());
        for (int o = 0; o < (1 << l); ++o) {
            std::string key = BasisIndex::from_ordinal(o, l).str();
            table[key] = s_I.at(key);
        }
        j["s_I"] = std::move(table);
    }
    j["presentation"] = presentation.to_json();
    j["ledger"] = ledger.to_json();
    return j;
}

}  // namespace ssharp
