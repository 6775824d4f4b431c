#include "ssharp/cobordism.hpp"

#include <algorithm>
#include <numeric>

#include <nlohmann/json.hpp>

namespace ssharp {

std::string move_kind_name(MoveKind k) {
    switch (k) {
        case MoveKind::Birth: return "Birth";
        case MoveKind::Death: return "Death";
        case MoveKind::Merge: return "Merge";
        case MoveKind::Split: return "Split";
        case MoveKind::AddGenus: return "AddGenus";
        case MoveKind::PositiveTwist: return "PositiveTwist";
        case MoveKind::NegativeTwist: return "NegativeTwist";
        case MoveKind::FingerMove: return "FingerMove";
    }
    throw std::logic_error("unreachable move kind");
}

MoveKind move_kind_from_name(const std::string& name) {
    if (name == "Birth") return MoveKind::Birth;
    if (name == "Death") return MoveKind::Death;
    if (name == "Merge") return MoveKind::Merge;
    if (name == "Split") return MoveKind::Split;
    if (name == "AddGenus") return MoveKind::AddGenus;
    if (name == "PositiveTwist") return MoveKind::PositiveTwist;
    if (name == "NegativeTwist") return MoveKind::NegativeTwist;
    if (name == "FingerMove") return MoveKind::FingerMove;
    throw IllFormedPresentation("unknown move kind '" + name + "'");
}

nlohmann::json CobordismPresentation::to_json() const {
    nlohmann::ordered_json j;
    j["source_components"] = source_components;
    nlohmann::ordered_json ms = nlohmann::ordered_json::array();
    for (const Move& m : moves) {
        nlohmann::ordered_json jm;
        jm["kind"] = move_kind_name(m.kind);
        if (m.kind == MoveKind::Merge) {
            jm["a"] = m.a;
            jm["b"] = m.b;
        } else if (m.kind != MoveKind::Birth) {
            jm["c"] = m.a;
        }
        ms.push_back(std::move(jm));
    }
    j["moves"] = std::move(ms);
    return j;
}

CobordismPresentation CobordismPresentation::from_json(const nlohmann::json& j) {
    CobordismPresentation pres;
    pres.source_components = j.at("source_components").get<int>();
    for (const auto& jm : j.at("moves")) {
        MoveKind kind = move_kind_from_name(jm.at("kind").get<std::string>());
        Move m{kind};
        if (kind == MoveKind::Merge) {
            m.a = jm.at("a").get<int>();
            m.b = jm.at("b").get<int>();
        } else if (kind != MoveKind::Birth) {
            m.a = jm.at("c").get<int>();
        }
        pres.moves.push_back(m);
    }
    return pres;
}

namespace {

// Union-find over surface pieces created during the replay.
struct PieceForest {
    std::vector<int> parent;
    std::vector<int> euler;
    std::vector<std::vector<int>> sources;

    int make(int e, std::vector<int> src = {}) {
        parent.push_back(static_cast<int>(parent.size()));
        euler.push_back(e);
        sources.push_back(std::move(src));
        return static_cast<int>(parent.size()) - 1;
    }

    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }

    // Joins the pieces of a and b and applies the handle's Euler cost.
    int unite(int a, int b, int euler_delta) {
        int ra = find(a), rb = find(b);
        if (ra == rb) {
            euler[static_cast<size_t>(ra)] += euler_delta;
            return ra;
        }
        parent[static_cast<size_t>(rb)] = ra;
        euler[static_cast<size_t>(ra)] += euler[static_cast<size_t>(rb)] + euler_delta;
        auto& sa = sources[static_cast<size_t>(ra)];
        auto& sb = sources[static_cast<size_t>(rb)];
        sa.insert(sa.end(), sb.begin(), sb.end());
        sb.clear();
        return ra;
    }
};

struct ReplayState {
    PieceForest forest;
    std::vector<int> circle_piece;  // current circle index -> piece id
    int positive = 0;
    int negative = 0;

    explicit ReplayState(int l) {
        for (int k = 0; k < l; ++k) {
            int p = forest.make(0, {k});
            circle_piece.push_back(p);
        }
    }

    int components() const { return static_cast<int>(circle_piece.size()); }

    void check_index(int c, const char* ctx) const {
        if (c < 0 || c >= components())
            throw IllFormedPresentation(std::string(ctx) + ": component index " + std::to_string(c) +
                                        " out of range for " + std::to_string(components()) +
                                        " components");
    }

    void apply(const Move& m) {
        switch (m.kind) {
            case MoveKind::Birth:
                circle_piece.push_back(forest.make(+1));
                break;
            case MoveKind::Death: {
                check_index(m.a, "Death");
                int root = forest.find(circle_piece[static_cast<size_t>(m.a)]);
                forest.euler[static_cast<size_t>(root)] += 1;
                circle_piece.erase(circle_piece.begin() + m.a);
                break;
            }
            case MoveKind::Merge: {
                check_index(m.a, "Merge");
                check_index(m.b, "Merge");
                if (m.a == m.b) throw IllFormedPresentation("Merge needs two distinct components");
                int lo = std::min(m.a, m.b), hi = std::max(m.a, m.b);
                int united = forest.unite(circle_piece[static_cast<size_t>(lo)],
                                          circle_piece[static_cast<size_t>(hi)], -1);
                circle_piece[static_cast<size_t>(lo)] = united;
                circle_piece.erase(circle_piece.begin() + hi);
                break;
            }
            case MoveKind::Split: {
                check_index(m.a, "Split");
                int piece = circle_piece[static_cast<size_t>(m.a)];
                forest.euler[static_cast<size_t>(forest.find(piece))] -= 1;
                circle_piece.insert(circle_piece.begin() + m.a + 1, piece);
                break;
            }
            case MoveKind::AddGenus:
                check_index(m.a, "AddGenus");
                forest.euler[static_cast<size_t>(forest.find(circle_piece[static_cast<size_t>(m.a)]))] -= 2;
                break;
            case MoveKind::PositiveTwist:
                check_index(m.a, "PositiveTwist");
                ++positive;
                break;
            case MoveKind::NegativeTwist:
                check_index(m.a, "NegativeTwist");
                ++negative;
                break;
            case MoveKind::FingerMove:
                check_index(m.a, "FingerMove");
                ++positive;
                ++negative;
                break;
        }
    }
};

}  // namespace

TopologyLedger validate(const CobordismPresentation& pres) {
    if (pres.source_components < 0) throw IllFormedPresentation("negative source component count");
    ReplayState st(pres.source_components);
    for (const Move& m : pres.moves) st.apply(m);

    TopologyLedger led;
    led.source_components = pres.source_components;
    led.target_components = st.components();
    led.positive_double_points = st.positive;
    led.negative_double_points = st.negative;

    // Collect root pieces in creation order.
    std::vector<int> roots;
    for (int id = 0; id < static_cast<int>(st.forest.parent.size()); ++id) {
        int r = st.forest.find(id);
        if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    }
    for (int r : roots) {
        PieceSummary piece;
        piece.euler = st.forest.euler[static_cast<size_t>(r)];
        piece.source_circles = st.forest.sources[static_cast<size_t>(r)];
        std::sort(piece.source_circles.begin(), piece.source_circles.end());
        for (int c = 0; c < st.components(); ++c)
            if (st.forest.find(st.circle_piece[static_cast<size_t>(c)]) == r) piece.target_circles.push_back(c);
        int boundary = static_cast<int>(piece.source_circles.size() + piece.target_circles.size());
        if (piece.source_circles.size() == 1 && piece.target_circles.size() == 1) {
            int two_g = 2 - piece.euler - boundary;
            if (two_g < 0 || two_g % 2 != 0) throw std::logic_error("inconsistent Euler bookkeeping");
            piece.genus = two_g / 2;
        }
        led.total_euler += piece.euler;
        led.pieces.push_back(std::move(piece));
    }

    led.connected = led.pieces.size() == 1;
    led.all_pieces_touch_source = std::all_of(led.pieces.begin(), led.pieces.end(),
                                              [](const PieceSummary& p) { return !p.source_circles.empty(); });
    led.component_preserving =
        static_cast<int>(led.pieces.size()) == pres.source_components &&
        led.target_components == pres.source_components &&
        std::all_of(led.pieces.begin(), led.pieces.end(), [](const PieceSummary& p) {
            return p.source_circles.size() == 1 && p.target_circles.size() == 1;
        });

    if (led.connected) {
        int boundary = led.source_components + led.target_components;
        int two_g = 2 - led.total_euler - boundary;
        if (two_g < 0 || two_g % 2 != 0) throw std::logic_error("inconsistent Euler bookkeeping");
        led.total_genus = two_g / 2;
    }
    if (led.component_preserving) {
        led.component_map.assign(static_cast<size_t>(pres.source_components), -1);
        led.component_genus.assign(static_cast<size_t>(pres.source_components), 0);
        for (const PieceSummary& p : led.pieces) {
            led.component_map[static_cast<size_t>(p.source_circles[0])] = p.target_circles[0];
            led.component_genus[static_cast<size_t>(p.source_circles[0])] = p.genus;
        }
    }
    return led;
}

nlohmann::json TopologyLedger::to_json() const {
    nlohmann::ordered_json j;
    j["source_components"] = source_components;
    j["target_components"] = target_components;
    j["positive_double_points"] = positive_double_points;
    j["negative_double_points"] = negative_double_points;
    j["euler_characteristic"] = total_euler;
    j["connected"] = connected;
    j["component_preserving"] = component_preserving;
    if (connected) j["genus"] = total_genus;
    if (component_preserving) {
        j["component_map"] = component_map;
        j["component_genus"] = component_genus;
    }
    return j;
}

namespace {

ModuleMap birth_matrix(int l, int order) {
    ModuleMap m(l, l + 1, order);
    for (int c = 0; c < (1 << l); ++c) m.entry(c * 2, c) = SeriesQ::one(order);
    return m;
}

ModuleMap death_matrix(int l, int comp, int order) {
    ModuleMap m(l, l - 1, order);
    for (int c = 0; c < (1 << l); ++c) {
        BasisIndex I = BasisIndex::from_ordinal(c, l);
        if (I.signs[static_cast<size_t>(comp)] == 1) continue;  // u+ dies to zero
        std::vector<int> signs = I.signs;
        signs.erase(signs.begin() + comp);
        m.entry(BasisIndex(signs).ordinal(), c) = SeriesQ::one(order);
    }
    return m;
}

ModuleMap merge_matrix(int l, int ca, int cb, int order) {
    const int lo = std::min(ca, cb), hi = std::max(ca, cb);
    ModuleMap m(l, l - 1, order);
    for (int c = 0; c < (1 << l); ++c) {
        BasisIndex I = BasisIndex::from_ordinal(c, l);
        int sa = I.signs[static_cast<size_t>(lo)];
        int sb = I.signs[static_cast<size_t>(hi)];
        std::vector<int> signs = I.signs;
        signs.erase(signs.begin() + hi);
        if (sa == 1 && sb == 1) {
            signs[static_cast<size_t>(lo)] = 1;
            m.entry(BasisIndex(signs).ordinal(), c) = SeriesQ::one(order);
        } else if (sa == -1 && sb == -1) {
            signs[static_cast<size_t>(lo)] = 1;
            m.entry(BasisIndex(signs).ordinal(), c) = SeriesQ::lambda_power(2, order);
        } else {
            signs[static_cast<size_t>(lo)] = -1;
            m.entry(BasisIndex(signs).ordinal(), c) = SeriesQ::one(order);
        }
    }
    return m;
}

ModuleMap split_matrix(int l, int comp, int order) {
    ModuleMap m(l, l + 1, order);
    for (int c = 0; c < (1 << l); ++c) {
        BasisIndex I = BasisIndex::from_ordinal(c, l);
        std::vector<int> base = I.signs;
        base.insert(base.begin() + comp + 1, 0);
        auto with = [&](int s1, int s2) {
            std::vector<int> signs = base;
            signs[static_cast<size_t>(comp)] = s1;
            signs[static_cast<size_t>(comp) + 1] = s2;
            return BasisIndex(signs).ordinal();
        };
        if (I.signs[static_cast<size_t>(comp)] == 1) {
            m.entry(with(1, -1), c) = SeriesQ::one(order);
            m.entry(with(-1, 1), c) = SeriesQ::one(order);
        } else {
            m.entry(with(-1, -1), c) = SeriesQ::one(order);
            m.entry(with(1, 1), c) = SeriesQ::lambda_power(2, order);
        }
    }
    return m;
}

ModuleMap genus_matrix(int l, int comp, int order) {
    ModuleMap m(l, l, order);
    for (int c = 0; c < (1 << l); ++c) {
        BasisIndex I = BasisIndex::from_ordinal(c, l);
        int flipped = I.flipped(comp).ordinal();
        if (I.signs[static_cast<size_t>(comp)] == 1) m.entry(flipped, c) = SeriesQ::constant(2, order);
        else
            m.entry(flipped, c) = scale(2, SeriesQ::lambda_power(2, order));
    }
    return m;
}

}  // namespace

ScaledInducedMap induced_map_scaled(const CobordismPresentation& pres, int order) {
    validate(pres);  // index checks; throws on ill-formed input
    ScaledInducedMap out{ModuleMap::identity(pres.source_components, order), 0};
    int l = pres.source_components;
    for (const Move& m : pres.moves) {
        switch (m.kind) {
            case MoveKind::Birth:
                out.base = birth_matrix(l, order) * out.base;
                ++l;
                break;
            case MoveKind::Death:
                out.base = death_matrix(l, m.a, order) * out.base;
                --l;
                break;
            case MoveKind::Merge:
                out.base = merge_matrix(l, m.a, m.b, order) * out.base;
                --l;
                break;
            case MoveKind::Split:
                out.base = split_matrix(l, m.a, order) * out.base;
                ++l;
                break;
            case MoveKind::AddGenus:
                out.base = genus_matrix(l, m.a, order) * out.base;
                break;
            case MoveKind::PositiveTwist:
            case MoveKind::FingerMove:
                ++out.twist_count;
                break;
            case MoveKind::NegativeTwist:
                break;  // scalar one
        }
    }
    return out;
}

ModuleMap ScaledInducedMap::materialize() const {
    if (twist_count == 0) return base;
    SeriesQ s = twist_scalar(TwistSign::Positive, base.order());
    SeriesQ acc = SeriesQ::one(base.order());
    for (int k = 0; k < twist_count; ++k) acc = acc * s;
    return scale(acc, base);
}

Valuation ScaledInducedMap::column_valuation(int col) const {
    Valuation v = base.column_valuation(col);
    if (v.is_infinite()) return v;
    return Valuation::finite(v.value() + twist_count);
}

ModuleMap induced_map(const CobordismPresentation& pres, int order) {
    return induced_map_scaled(pres, order).materialize();
}

CobordismPresentation compose(const CobordismPresentation& a, const CobordismPresentation& b) {
    TopologyLedger la = validate(a);
    if (la.target_components != b.source_components)
        throw ComponentCountMismatch("cannot compose: first ends with " +
                                     std::to_string(la.target_components) + " components, second starts with " +
                                     std::to_string(b.source_components));
    CobordismPresentation out = a;
    out.moves.insert(out.moves.end(), b.moves.begin(), b.moves.end());
    return out;
}

namespace {

// Tracks where each factor's local components live in the combined list.
struct UnionTracker {
    std::vector<int>* own;
    std::vector<int>* other;
    int* combined_count;

    void shift_above(int threshold, int delta) const {
        for (int& e : *own)
            if (e > threshold) e += delta;
        for (int& e : *other)
            if (e > threshold) e += delta;
    }

    Move translate_and_apply(const Move& m) {
        auto& mine = *own;
        switch (m.kind) {
            case MoveKind::Birth: {
                mine.push_back(*combined_count);
                ++*combined_count;
                return Move::birth();
            }
            case MoveKind::Death: {
                int cc = mine.at(static_cast<size_t>(m.a));
                mine.erase(mine.begin() + m.a);
                shift_above(cc, -1);
                --*combined_count;
                return Move::death(cc);
            }
            case MoveKind::Merge: {
                int ca = mine.at(static_cast<size_t>(m.a));
                int cb = mine.at(static_cast<size_t>(m.b));
                int lo = std::min(ca, cb), hi = std::max(ca, cb);
                int keep_local = std::min(m.a, m.b), drop_local = std::max(m.a, m.b);
                mine[static_cast<size_t>(keep_local)] = lo;
                mine.erase(mine.begin() + drop_local);
                shift_above(hi, -1);
                --*combined_count;
                return Move::merge(ca, cb);
            }
            case MoveKind::Split: {
                int cc = mine.at(static_cast<size_t>(m.a));
                shift_above(cc, +1);
                mine.insert(mine.begin() + m.a + 1, cc + 1);
                ++*combined_count;
                return Move::split(cc);
            }
            default: {
                Move out = m;
                out.a = mine.at(static_cast<size_t>(m.a));
                return out;
            }
        }
    }
};

}  // namespace

DisjointUnion disjoint_union(const CobordismPresentation& a, const CobordismPresentation& b) {
    validate(a);
    validate(b);
    DisjointUnion out;
    out.presentation.source_components = a.source_components + b.source_components;
    out.left_final.resize(static_cast<size_t>(a.source_components));
    std::iota(out.left_final.begin(), out.left_final.end(), 0);
    out.right_final.resize(static_cast<size_t>(b.source_components));
    std::iota(out.right_final.begin(), out.right_final.end(), a.source_components);

    int combined = a.source_components + b.source_components;
    UnionTracker left{&out.left_final, &out.right_final, &combined};
    for (const Move& m : a.moves) out.presentation.moves.push_back(left.translate_and_apply(m));
    UnionTracker right{&out.right_final, &out.left_final, &combined};
    for (const Move& m : b.moves) out.presentation.moves.push_back(right.translate_and_apply(m));
    return out;
}

}  // namespace ssharp
