#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ssharp/certificate.hpp"
#include "ssharp/cobordism.hpp"

namespace ssharp {

struct NotConnected : std::invalid_argument {
    explicit NotConnected(const std::string& what) : std::invalid_argument(what) {}
};

struct NotComponentPreserving : std::invalid_argument {
    explicit NotComponentPreserving(const std::string& what) : std::invalid_argument(what) {}
};

/// A generator maps to exactly zero, so no power of lambda can be extracted.
struct InvariantUndefined : std::runtime_error {
    explicit InvariantUndefined(const std::string& what) : std::runtime_error(what) {}
};

struct InconsistentSystem : std::runtime_error {
    explicit InconsistentSystem(const std::string& what) : std::runtime_error(what) {}
};

constexpr int kDefaultOrder = 24;

struct SharpPair {
    int s_plus = 0;
    int s_minus = 0;
    bool operator==(const SharpPair&) const = default;
};

/// s_plus/s_minus from a connected presentation starting at the unknot.
SharpPair s_sharp_pm(const CobordismPresentation& pres, int order = kDefaultOrder);

/// The 2^l-indexed invariant from a component-preserving presentation.
int s_sharp_I(const CobordismPresentation& pres, const BasisIndex& I, int order = kDefaultOrder);
std::map<std::string, int> s_sharp_I_table(const CobordismPresentation& pres, int order = kDefaultOrder);

int s_sharp_total(const CobordismPresentation& pres, int order = kDefaultOrder);
bool check_difference_bounds(const CobordismPresentation& pres, int order = kDefaultOrder);

/// Closed form for the d-component torus link built on the (m,n) pattern;
/// n(I) counts the -1 entries of I.  Branches on the parity of (m-1)(n-1)/2.
int closed_form_torus_link(int m, int n, int d, const BasisIndex& I);

/// Trichotomy of the genus-1 self-cobordism: its matrix pattern is
/// [[0, lambda^b], [lambda^a, 0]] with a = difference, b = 2 - difference.
struct DifferenceMatrix {
    int difference = 0;          // s_plus - s_minus, in {0,1,2}
    int lower_left_exponent = 0; // a
    int upper_right_exponent = 0;// b
    ModuleMap pattern;
};

DifferenceMatrix difference_matrix(const CobordismPresentation& pres, int order = kDefaultOrder);
DifferenceMatrix difference_matrix_from_m(int m_plus, int m_minus, int order = kDefaultOrder);

/// Component-preserving cobordism inequality: for every index I,
///   s_I(L2) - s_{flip(I)}(L1) <= sum_k 2*(floor(g_k/2) + c_k(I)) + p.
bool check_inequality_component(const CobordismPresentation& pre_l1, const CobordismPresentation& cob,
                                int order = kDefaultOrder);

/// Total inequality: s(L2) - s(L1) <= 2p - chi + (#L1 - #L2); requires every
/// piece of the cobordism to touch L1.
bool check_inequality_total(const CobordismPresentation& pre_l1, const CobordismPresentation& cob,
                            int order = kDefaultOrder);

/// Small integer unknowns with linear constraints and min(...)=0 axioms;
/// models the composite-comparison proofs.
struct ValuationConstraintSystem {
    enum class Rel { Eq, Le, Ge };
    struct LinearConstraint {
        std::vector<std::pair<int, long>> terms;  // (unknown index, coefficient)
        Rel rel = Rel::Eq;
        long rhs = 0;
    };

    std::vector<std::string> unknowns;
    std::vector<LinearConstraint> constraints;
    std::vector<std::vector<int>> min_zero_groups;
    long bound = 8;  // inclusive upper bound for every unknown

    int add_unknown(const std::string& name);
    int unknown_index(const std::string& name) const;  // -1 when absent
    void add_constraint(std::vector<std::pair<std::string, long>> terms, Rel rel, long rhs);
    void add_min_zero(std::vector<std::string> names);

    nlohmann::json to_json() const;
    static ValuationConstraintSystem from_json(const nlohmann::json& j);
};

struct Deduction {
    enum class Kind { Unique, Underdetermined };
    Kind kind = Kind::Unique;
    std::vector<long> assignment;               // when unique
    std::vector<std::pair<long, long>> ranges;  // per-unknown [min,max] over solutions

    nlohmann::json to_json(const ValuationConstraintSystem& sys) const;
};

/// Bounded exhaustive search; throws InconsistentSystem when nothing solves.
Deduction deduce_valuations(const ValuationConstraintSystem& sys);

/// The composite-comparison system for a curve embedded except for one node:
/// unknowns m+^1, m-^1 (immersed curve) and m+^2, m-^2 (smoothed curve).
ValuationConstraintSystem one_node_curve_system();

/// The quasi-positive composite system: unknowns m+, m- of the embedded curve
/// and the nonnegative merge contributions t+, t-.
ValuationConstraintSystem quasipositive_composite_system();

struct InvariantInterval {
    int lower = 0;
    int upper = 0;
    bool contains(int v) const { return lower <= v && v <= upper; }
    bool operator==(const InvariantInterval&) const = default;
};

struct PlusMinusIntervals {
    InvariantInterval s_plus;
    InvariantInterval s_minus;
};

/// Exact values and intervals for a quasi-positive knot of 4-ball genus g,
/// derived by running the deduction on the composite system.
PlusMinusIntervals quasipositive_bounds(int genus);

/// Unknotting by switching a set of negative crossings and, separately, a set
/// of positive crossings forces both invariants to vanish.  The counts are
/// the caller's data; the conclusion does not depend on them.
SharpPair switching_crossings(int switched_negative, int switched_positive);

struct InvariantReport {
    bool pm_defined = false;
    int s_plus = 0;
    int s_minus = 0;
    int s_total = 0;
    std::map<std::string, int> s_I;  // keys "+-..." in component order; empty when undefined
    CobordismPresentation presentation;  // immersed model the values refer to
    TopologyLedger ledger;

    nlohmann::json to_json() const;
};

/// Invariants from a curve certificate: the lambda counts come from the
/// one-node deduction (knots) or the per-component smoothing comparisons
/// (torus link family), never from replaying the model presentation.
InvariantReport curve_invariants(const CurveCertificate& cert);

/// Report for a presentation: s_plus/minus/total when connected from the
/// unknot, the s_I table when component-preserving.
InvariantReport presentation_invariants(const CobordismPresentation& pres, int order = kDefaultOrder);

}  // namespace ssharp
