#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "karyx/indices.hpp"

namespace karyx {

/// A value under study: any map from games of a fixed shape to one real per
/// attribute.
using IndexFunctional = std::function<ImportanceVector(const KAryGame&)>;

/// Outcome of one randomized or exhaustive axiom check.
struct AxiomReport {
  std::string axiom;
  bool passed = false;
  double worst_violation = 0.0;
  double tolerance = 0.0;
  int trials = 0;
  std::uint64_t seed = 0;
  std::string note;                  // trial details, or why a check was skipped
  std::vector<KAryGame> witnesses;   // offending game(s); empty on pass
};

struct HarnessConfig {
  LatticeShape shape;
  int trials = 200;
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
};

/// Independent uniform values in [-1,1] at every non-origin point, origin
/// pinned to 0. Non-monotone by construction. The draw depends only on the
/// generator state, not on platform distribution details.
KAryGame random_game(const LatticeShape& shape, std::mt19937_64& rng);

/// v with attribute `axis` made null: every level reads the level-0 slice.
KAryGame with_null_attribute(const KAryGame& v, int axis);

/// phi(v + alpha*w) == phi(v) + alpha*phi(w) on random pairs; the first trial
/// pins alpha = 0.
AxiomReport check_linearity(const IndexFunctional& phi, const HarnessConfig& cfg);

/// phi_i(v) == 0 whenever attribute i is null for v. Attributes are nulled in
/// round-robin across trials.
AxiomReport check_null(const IndexFunctional& phi, const HarnessConfig& cfg);

/// phi_{sigma(i)}(sigma o v) == phi_i(v) for random permutations.
AxiomReport check_symmetry(const IndexFunctional& phi, const HarnessConfig& cfg);

/// The partner game whose increments along `axis` are v's cyclically shifted
/// by one level: w(x_{-i},l) - w(x_{-i},l-1) = v(x_{-i},l+1) - v(x_{-i},l)
/// for l = 1..k-1, w(x_{-i},k) - w(x_{-i},k-1) = v(x_{-i},1) - v(x_{-i},0),
/// and w(x_{-i},0) = 0. Requires k >= 2 (no interior levels otherwise).
KAryGame invariance_partner(const KAryGame& v, int axis);

/// phi_i(v) == phi_i(invariance_partner(v, i)) for every attribute of random
/// games.
AxiomReport check_invariance(const IndexFunctional& phi, const HarnessConfig& cfg);

/// The three-case target for the summed index of a Dirac game: +1 when the
/// kernel is nonempty and the support is full, -1 when the kernel is empty
/// and the support is not full, 0 otherwise.
int dirac_efficiency_expected(const LatticePoint& y, const LatticeShape& shape);

/// Exhaustive over all y != 0_N: the sum of phi(dirac_y) matches the
/// three-case target.
AxiomReport check_efficiency_dirac(const IndexFunctional& phi,
                                   const LatticeShape& shape, double tolerance);

/// phi(v) == importance_by_cells(v) on random games.
AxiomReport check_cells_oracle(const IndexFunctional& phi,
                               const HarnessConfig& cfg);

/// By linearity the index is determined by its values on the Dirac basis.
/// Returns the table phi(dirac_y) for every flat index y (zeros at the
/// origin). Guarded to oracle scale n <= 3, k <= 2.
std::vector<ImportanceVector> brute_force_index_from_axioms(
    const LatticeShape& shape);

/// Basis reconstruction sum_y v(y) * table[y].
ImportanceVector reconstruct_from_dirac_table(
    const std::vector<ImportanceVector>& table, const KAryGame& v);

// Deliberately broken functionals, one per axiom, to guard the checkers
// against passing vacuously.
namespace negative_controls {
IndexFunctional nonlinear();        // (v(k_N)^2, 0, ...)
IndexFunctional ignores_null();     // all ones
IndexFunctional attribute_biased(); // (i+1) * v(k_N)
IndexFunctional first_increment();  // sum of v(x_{-i},1) - v(x_{-i},0)
}  // namespace negative_controls

}  // namespace karyx
