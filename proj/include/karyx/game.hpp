#pragma once

#include <vector>

#include "karyx/lattice.hpp"

namespace karyx {

/// What to do with a value table whose origin entry v(0_N) is nonzero.
enum class OriginPolicy {
  Strict,     ///< reject the table
  Normalize,  ///< shift every entry by -v(0_N)
};

/// A k-ary (multichoice) game: v : {0,...,k}^n -> R with v(0_N) = 0.
/// Dense table in flat order, immutable after construction. Monotonicity is
/// deliberately not required.
class KAryGame {
 public:
  KAryGame(LatticeShape shape, std::vector<double> values,
           OriginPolicy policy = OriginPolicy::Strict);

  const LatticeShape& shape() const { return shape_; }
  const std::vector<double>& values() const { return values_; }

  double operator[](std::size_t flat) const { return values_[flat]; }
  double at(const LatticePoint& x) const {
    return values_[flat_index(x, shape_)];
  }
  /// v(k_N), the value at the top point.
  double top_value() const { return values_.back(); }

 private:
  LatticeShape shape_;
  std::vector<double> values_;
};

// Games of a fixed shape form a vector space.
KAryGame operator+(const KAryGame& a, const KAryGame& b);
KAryGame operator-(const KAryGame& a, const KAryGame& b);
KAryGame operator*(double scalar, const KAryGame& v);

/// Moebius transform coefficients of a game, same dense layout. The origin
/// coefficient is always 0 (forced by v(0_N) = 0).
class MoebiusTable {
 public:
  MoebiusTable(LatticeShape shape, std::vector<double> coeffs);

  const LatticeShape& shape() const { return shape_; }
  const std::vector<double>& coeffs() const { return coeffs_; }
  double operator[](std::size_t flat) const { return coeffs_[flat]; }
  double at(const LatticePoint& x) const {
    return coeffs_[flat_index(x, shape_)];
  }

 private:
  LatticeShape shape_;
  std::vector<double> coeffs_;
};

/// Unanimity game u_x: 1 on the up-set of x, 0 elsewhere. Requires x != 0_N.
KAryGame unanimity(const LatticeShape& shape, const LatticePoint& threshold);

/// Dirac game: 1 exactly at the given point, 0 elsewhere. Requires x != 0_N.
KAryGame dirac(const LatticeShape& shape, const LatticePoint& location);

/// Moebius transform, computed as n one-dimensional backward-difference
/// passes (one per axis). Exact on integer-valued tables.
MoebiusTable moebius(const KAryGame& v);

/// Inverse of moebius: v(x) = sum of coefficients over the down-set of x,
/// computed as n one-dimensional prefix-sum passes.
KAryGame zeta(const MoebiusTable& m);

/// Relabels attributes: result(sigma(x)) = v(x) where sigma(x) places x_i at
/// position sigma[i]. sigma must be a permutation of {0,...,n-1}.
KAryGame permute(const KAryGame& v, const std::vector<int>& sigma);

/// One additive term of a GAI decomposition: a table over the sub-lattice of
/// the listed attributes (first listed attribute most significant).
struct GaiTerm {
  std::vector<int> attrs;      // 0-based, no duplicates, nonempty
  std::vector<double> table;   // (k+1)^attrs.size() entries
};

/// v(x) = sum over terms of table_S(x_S).
struct GaiModel {
  LatticeShape shape;
  std::vector<GaiTerm> terms;
};

/// Raw GAI sum at one point, no origin shift. Assumes a validated model.
double gai_value(const GaiModel& model, const LatticePoint& x);

/// Dense game from a GAI model; the sum is shifted by its own value at 0_N so
/// the origin lands at 0. Validates the model.
KAryGame from_gai(const GaiModel& model);

/// Lifts a table over a heterogeneous lattice x_i in {0,...,tops[i]} to the
/// common top k = max(tops) by duplicating each attribute's top level: levels
/// above tops[i] read the value at tops[i]. The full-range difference
/// v(x_{-i},k) - v(x_{-i},0) of the original attribute range is preserved.
KAryGame pad_to_common_k(const std::vector<int>& per_attribute_tops,
                         const std::vector<double>& values,
                         OriginPolicy policy = OriginPolicy::Strict);

}  // namespace karyx
