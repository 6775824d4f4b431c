#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ssharp/series.hpp"

namespace ssharp {

/// Sign vector in {+1,-1}^l indexing the generators u_I of a rank-2^l module.
/// Ordinals enumerate sign vectors lexicographically with +1 < -1, so for
/// l = 2 the order is (+,+), (+,-), (-,+), (-,-).
struct BasisIndex {
    std::vector<int> signs;  // entries +1 or -1

    BasisIndex() = default;
    explicit BasisIndex(std::vector<int> s);
    static BasisIndex from_string(const std::string& s);   // e.g. "+-+"
    static BasisIndex from_ordinal(int ordinal, int length);

    int length() const { return static_cast<int>(signs.size()); }
    int ordinal() const;
    int n_minus() const;  // number of -1 entries
    BasisIndex flipped(int component) const;
    std::string str() const;

    bool operator==(const BasisIndex&) const = default;
};

/// Matrix over SeriesQ between free modules of ranks 2^l1 -> 2^l2, rows and
/// columns indexed by BasisIndex ordinals.  Column c holds the image of the
/// c-th source generator.
class ModuleMap {
  public:
    ModuleMap() = default;
    ModuleMap(int source_exp, int target_exp, int order);

    static ModuleMap identity(int exp, int order);

    int source_exponent() const { return source_exp_; }
    int target_exponent() const { return target_exp_; }
    int source_rank() const { return 1 << source_exp_; }
    int target_rank() const { return 1 << target_exp_; }
    int order() const { return order_; }

    const SeriesQ& entry(int row, int col) const { return e_[index(row, col)]; }
    SeriesQ& entry(int row, int col) { return e_[index(row, col)]; }

    /// Largest k with column = lambda^k * (something), i.e. the minimum entry
    /// valuation; infinity when the column is exactly zero.
    Valuation column_valuation(int col) const;
    /// Number of entries in the column that are not exactly zero (stored-zero
    /// inexact entries count as zero here only if some other entry is finite).
    int column_support(int col) const;

    friend ModuleMap operator*(const ModuleMap& a, const ModuleMap& b);  // a after b
    friend ModuleMap tensor(const ModuleMap& a, const ModuleMap& b);
    friend ModuleMap scale(const SeriesQ& s, const ModuleMap& m);
    friend ModuleMap scale(const Rational& c, const ModuleMap& m);

    bool operator==(const ModuleMap& rhs) const;
    bool operator!=(const ModuleMap& rhs) const { return !(*this == rhs); }

    nlohmann::json to_json() const;
    static ModuleMap from_json(const nlohmann::json& j);

  private:
    size_t index(int row, int col) const {
        return static_cast<size_t>(row) * static_cast<size_t>(source_rank()) + static_cast<size_t>(col);
    }

    int source_exp_ = 0;
    int target_exp_ = 0;
    int order_ = 0;
    std::vector<SeriesQ> e_;  // row-major, exact zeros by default
};

/// Reindexing by a permutation of components: target component i is source
/// component perm[i].  A permutation matrix on the sign-vector basis.
ModuleMap component_permutation_map(const std::vector<int>& perm, int order);

enum class TwistSign { Positive, Negative };

ModuleMap torus_map(int order);   ///< genus-1 block: u+ -> 2u-, u- -> 2*lambda^2*u+
ModuleMap merge_map(int order);   ///< multiplication, rank 4 -> 2
ModuleMap split_map(int order);   ///< comultiplication, rank 2 -> 4
ModuleMap birth_map(int order);   ///< unit, rank 1 -> 2
ModuleMap death_map(int order);   ///< counit, rank 2 -> 1
SeriesQ twist_scalar(TwistSign sign, int order);
SeriesQ finger_scalar(int order);  ///< same scalar as a positive twist

}  // namespace ssharp
