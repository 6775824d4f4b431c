#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace ssharp {

/// Certified singularity and genus data extracted from an exact plane curve.
///
/// Node counts come from exact computation; the per-component genus of the
/// structured families is carried as family-level data (it is the Milnor
/// fiber genus, which is not recomputed here).  `per_component_genus` is the
/// genus of the immersed representative, nodes included as separate data, so
/// a knot certificate with one node resolves to a smooth surface of genus
/// per_component_genus[0] + 1.
struct CurveCertificate {
    std::string family;  // "torus_knot", "torus_link_family", "connected_sum"
    int components = 1;
    std::vector<int> per_component_genus;
    std::vector<int> per_component_nodes;
    int inter_component_nodes = 0;
    std::map<std::string, std::string> parameters;
    bool irreducible_in_ball_trusted = true;

    int total_nodes() const;

    nlohmann::json to_json() const;
    static CurveCertificate from_json(const nlohmann::json& j);
};

}  // namespace ssharp
