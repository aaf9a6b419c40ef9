#pragma once

#include <vector>

#include "karyx/game.hpp"

namespace karyx {

/// One real per attribute, internally 0-based.
using ImportanceVector = std::vector<double>;

/// Strictly increasing positive weights w_1 < ... < w_k for the action levels
/// 1..k. Level 0 carries weight 0 by convention (w_0 = 0): the literature
/// declares weights for actions 1..k only, and the zero level contributes
/// nothing to a point's weight total.
class WeightScheme {
 public:
  explicit WeightScheme(std::vector<double> weights);

  /// w_j = j for j = 1..k.
  static WeightScheme linear(int k);

  int k() const { return static_cast<int>(weights_.size()); }
  const std::vector<double>& weights() const { return weights_; }

  /// Weight of a level in 0..k; level 0 returns 0.
  double level(int j) const;

 private:
  std::vector<double> weights_;
};

/// Per-attribute, per-level values phi_{ij} for i in 1..n, j in 1..k.
/// Level 0 carries no share.
class BiIndexTable {
 public:
  BiIndexTable(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }

  /// attribute 0-based, level 1-based (1..k).
  double at(int attribute, int level) const;
  double& at(int attribute, int level);

  double row_sum(int attribute) const;
  std::vector<double> row_sums() const;
  double total() const;

 private:
  int n_;
  int k_;
  std::vector<double> cells_;  // attribute-major, k entries per attribute
};

/// Exact combinatorial coefficient (n-s-1)! k! / (n+k-s)! of the importance
/// index, for a slice point with support size s and kernel size kk
/// (0 <= kk <= s <= n-1). Computed with exact integer factorials as an exact
/// rational, converted to double once.
double importance_coefficient(int n, int support, int kernel);

/// Classical Shapley coefficient (n-s-1)! s! / n!, same exact arithmetic.
double shapley_coefficient(int n, int subset_size);

/// The importance index: for each attribute, the weighted sum over all
/// opposite-coordinate profiles x_{-i} of the full-range difference
/// v(x_{-i}, k) - v(x_{-i}, 0), with importance_coefficient weights.
/// Deterministic summation in ascending flat order of each slice.
ImportanceVector importance(const KAryGame& v);

/// Classical Shapley value of a k=1 game (a cooperative TU game), computed by
/// direct subset enumeration. Throws std::domain_error when k != 1.
ImportanceVector shapley_classical(const KAryGame& v);

/// Cell decomposition route: the sum over unit cells x in {0,...,k-1}^n of
/// the classical Shapley value of the local game
/// mu_x(S) = v((x+1)_S, x_{-S}) - v(x). Agrees with importance(v); kept as an
/// independently-computed cross-check.
ImportanceVector importance_by_cells(const KAryGame& v);

/// Diagonal total variation: sum over all x with every x_j < k of
/// v(x+1) - v(x). Equals the sum of the importance index over attributes.
double sum_identity_rhs(const KAryGame& v);

/// Grabisch-Lange value: like importance but summing over the vertices of
/// L_{-i} only, with classical Shapley coefficients
/// (n-k(x_{-i})-1)! k(x_{-i})! / n!. Satisfies classical efficiency.
ImportanceVector grabisch_lange(const KAryGame& v);

/// How hsiao_raghavan treats Moebius mass on points with a zero coordinate.
enum class ZeroLevelPolicy {
  ZeroWeight,  ///< w_0 = 0: zero levels contribute nothing to the weight total
  Reject,      ///< throw std::domain_error on any such point with mass
};

/// Hsiao-Raghavan weighted value: phi_{ij}(v) = sum over x != 0 with x_i = j
/// of m^v(x) * w_j / (sum_l w_{x_l}). Requires exactly k weights.
BiIndexTable hsiao_raghavan(const KAryGame& v, const WeightScheme& w,
                            ZeroLevelPolicy policy = ZeroLevelPolicy::ZeroWeight);

/// Peters-Zank value: phi_{ij}(v) = sum over x with x_i = j of m^v(x) / s(x).
BiIndexTable peters_zank(const KAryGame& v);

}  // namespace karyx
