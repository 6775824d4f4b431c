#pragma once

#include <optional>

#include <nlohmann/json_fwd.hpp>

#include "ssharp/bipoly.hpp"
#include "ssharp/certificate.hpp"

namespace ssharp {

struct InfiniteLocus : std::runtime_error {
    explicit InfiniteLocus(const std::string& what) : std::runtime_error(what) {}
};

struct CertificationFailed : std::runtime_error {
    explicit CertificationFailed(const std::string& what) : std::runtime_error(what) {}
};

struct GenericityViolated : std::runtime_error {
    explicit GenericityViolated(const std::string& what) : std::runtime_error(what) {}
};

struct CountMismatch : std::runtime_error {
    explicit CountMismatch(const std::string& what) : std::runtime_error(what) {}
};

/// One singular point of a curve.  Coordinates are exact field elements when
/// the elimination lands in the coefficient field; otherwise y is in the
/// field and x is a root of `x_defining` certified inside `x_interval`.
struct SingularPointReport {
    enum class Location { FieldPoint, AlgebraicX };
    Location kind = Location::FieldPoint;
    FieldElem x;
    FieldElem y;
    UniPoly x_defining;                    // AlgebraicX only
    std::pair<Rational, Rational> x_interval{0, 0};  // AlgebraicX only
    bool is_node = false;
    FieldElem tangent_cone_discriminant;   // FieldPoint only; zero iff repeated tangent

    nlohmann::json to_json() const;
};

struct SingularAnalysisOptions {
    int max_bisections = 128;  // certified-interval refinement budget
};

/// True iff the singular locus is finite (no repeated curve component).
bool finite_singular_locus(const BiPoly& p);

/// All singular points of the curve p = 0.  The exact tier handles loci that
/// triangularize to monomials (everything at the origin) over any coefficient
/// field; the certified-interval tier handles rational-y candidates over Q,
/// isolating algebraic x-coordinates with Sturm sequences and classifying
/// nodes only when an interval separates the discriminant from zero.
/// Throws InfiniteLocus or CertificationFailed.
std::vector<SingularPointReport> singular_points(const BiPoly& p, const SingularAnalysisOptions& opts = {});

/// (x - r_1)...(x - r_n)(x - y) + eps0 over Q.
BiPoly construct_rudolph(const std::vector<Rational>& roots, const Rational& eps0);

/// P(x,y)*(x - a)^p + (y - b)^q, optionally scaled by 1/(-a)^p.
BiPoly construct_connected_sum(const BiPoly& P, int p, int q, const Rational& a, const Rational& b,
                               bool normalize = false);

/// P + eps*x*y.
BiPoly perturb_node(const BiPoly& P, const FieldElem& eps);
/// P + z*x^2.
BiPoly perturb_global(const BiPoly& P, const FieldElem& z);

/// The d-component family prod_i ((x-a_i)^m - w^i y^n - eps_i (x-a_i) y)
/// over Q(zeta_d), with its factors retained for structured analysis.
struct TorusLinkFamily {
    int m = 2, n = 3, d = 1;
    std::vector<Rational> offsets;  // a_i
    std::vector<Rational> eps;      // eps_i
    FieldPtr field;                 // Q(zeta_d)
    std::vector<BiPoly> factors;
    BiPoly product;
};

TorusLinkFamily construct_family_torus_link(int m, int n, int d, std::vector<Rational> offsets,
                                            std::vector<Rational> eps);

struct PairIntersectionData {
    int i = 0, j = 0;
    std::vector<FieldElem> closed_form_x;  // in Q(zeta_{m*d}), one per root eta
    bool closed_form_verified = false;     // resultant of the unperturbed pair factors as prod (x - x_t)^n
    int transverse_count = 0;              // certified count for the perturbed pair
};

struct FamilyAnalysis {
    std::vector<SingularPointReport> component_nodes;  // one per factor, at (a_i, 0)
    std::vector<PairIntersectionData> pairs;
    int inter_component_nodes = 0;
    bool all_nodes = true;
};

/// Exact analysis of the family: per-factor lone-node checks, closed-form
/// pairwise intersections in the extension field, certified transversality
/// counts for the perturbed pairs, cross-pair disjointness.
FamilyAnalysis analyze_family(const TorusLinkFamily& family);

/// Certificate for the family; throws CountMismatch when the computed
/// singular data contradicts the family formulas.
CurveCertificate certificate(const TorusLinkFamily& family);

/// Certificate for the (p,q) torus knot via the one-node model x^p - y^q - eps*x*y.
CurveCertificate torus_knot_certificate(int p, int q, const Rational& eps = 1);

/// Certificate for the connected sum of a certified knot with T_{p,q}.
CurveCertificate connected_sum_certificate(const CurveCertificate& knot, int p, int q);

}  // namespace ssharp
