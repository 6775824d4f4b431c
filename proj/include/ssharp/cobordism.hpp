#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ssharp/module_map.hpp"

namespace ssharp {

struct IllFormedPresentation : std::invalid_argument {
    explicit IllFormedPresentation(const std::string& what) : std::invalid_argument(what) {}
};

struct ComponentCountMismatch : IllFormedPresentation {
    explicit ComponentCountMismatch(const std::string& what) : IllFormedPresentation(what) {}
};

enum class MoveKind { Birth, Death, Merge, Split, AddGenus, PositiveTwist, NegativeTwist, FingerMove };

std::string move_kind_name(MoveKind k);
MoveKind move_kind_from_name(const std::string& name);

/// One elementary surface move.  Component arguments index the current
/// component list at the point of application; merges remove the higher
/// index, splits insert the new component directly after `a`.
struct Move {
    MoveKind kind;
    int a = -1;
    int b = -1;

    static Move birth() { return {MoveKind::Birth}; }
    static Move death(int c) { return {MoveKind::Death, c}; }
    static Move merge(int c1, int c2) { return {MoveKind::Merge, c1, c2}; }
    static Move split(int c) { return {MoveKind::Split, c}; }
    static Move add_genus(int c) { return {MoveKind::AddGenus, c}; }
    static Move positive_twist(int c) { return {MoveKind::PositiveTwist, c}; }
    static Move negative_twist(int c) { return {MoveKind::NegativeTwist, c}; }
    static Move finger(int c) { return {MoveKind::FingerMove, c}; }

    bool operator==(const Move&) const = default;
};

struct CobordismPresentation {
    int source_components = 1;
    std::vector<Move> moves;

    CobordismPresentation() = default;
    CobordismPresentation(int l, std::vector<Move> ms) : source_components(l), moves(std::move(ms)) {}

    nlohmann::json to_json() const;
    static CobordismPresentation from_json(const nlohmann::json& j);

    bool operator==(const CobordismPresentation&) const = default;
};

/// One connected piece of the replayed surface.
struct PieceSummary {
    int euler = 0;
    std::vector<int> source_circles;  // indices into the source link
    std::vector<int> target_circles;  // indices into the final link
    int genus = -1;                   // set when the piece has exactly one source and one target circle
};

struct TopologyLedger {
    int source_components = 0;
    int target_components = 0;
    int positive_double_points = 0;
    int negative_double_points = 0;
    int total_euler = 0;
    std::vector<PieceSummary> pieces;

    bool connected = false;             // a single piece
    bool component_preserving = false;  // pieces biject source and target circles
    bool all_pieces_touch_source = false;

    int total_genus = -1;              // when connected
    std::vector<int> component_map;    // source component -> target component (component-preserving)
    std::vector<int> component_genus;  // per source component (component-preserving)

    nlohmann::json to_json() const;
};

/// Replays the moves, checking indices and building the topology ledger.
TopologyLedger validate(const CobordismPresentation& pres);

/// Composite of the elementary maps, twist scalars included.
ModuleMap induced_map(const CobordismPresentation& pres, int order);

/// The same composite with the twist scalars kept symbolic: the full map is
/// twist_scalar(+)^twist_count * base.  Since the scalar has valuation 1,
/// column valuations of the full map are those of `base` plus twist_count.
struct ScaledInducedMap {
    ModuleMap base;
    int twist_count = 0;

    ModuleMap materialize() const;
    Valuation column_valuation(int col) const;
};

ScaledInducedMap induced_map_scaled(const CobordismPresentation& pres, int order);

/// Concatenation; requires target components of `a` to equal source
/// components of `b`.  induced_map of the result is induced_map(b) after
/// induced_map(a).
CobordismPresentation compose(const CobordismPresentation& a, const CobordismPresentation& b);

/// Side-by-side union with left components first.  Births append at the end
/// of the combined list, so the final combined component order is recorded:
/// left_final[i] / right_final[i] give the combined index of each factor's
/// i-th final component.
struct DisjointUnion {
    CobordismPresentation presentation;
    std::vector<int> left_final;
    std::vector<int> right_final;
};

DisjointUnion disjoint_union(const CobordismPresentation& a, const CobordismPresentation& b);

}  // namespace ssharp
