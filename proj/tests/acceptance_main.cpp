// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Tolerances are pinned here, next to each check.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "karyx/axioms.hpp"
#include "karyx/indices.hpp"

using namespace karyx;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& label, bool ok,
            const std::string& detail) {
  std::printf("[%s] criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", criterion,
              label.c_str(), detail.c_str());
  if (!ok) ++g_failures;
}

double max_abs_diff(const ImportanceVector& a, const ImportanceVector& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

std::string fmt(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.3g", x);
  return buffer;
}

// The shared random corpus: 200 games per shape, fixed per-shape seeds.
std::vector<KAryGame> corpus(const LatticeShape& shape) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(1000 + 10 * shape.n() +
                                                 shape.k()));
  std::vector<KAryGame> games;
  games.reserve(200);
  for (int t = 0; t < 200; ++t) games.push_back(random_game(shape, rng));
  return games;
}

const std::vector<std::pair<int, int>> kCorpusShapes = {
    {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 3}, {4, 1}, {4, 2}, {4, 3}};

void criterion_1_motivating_fixture() {
  const LatticeShape shape(3, 2);
  const KAryGame game = dirac(shape, {2, 1, 1});
  ImportanceVector phi = importance(game);  // warm caches before timing
  const auto start = std::chrono::steady_clock::now();
  phi = importance(game);
  const double elapsed = ms_since(start);

  const bool exact = phi.size() == 3 && phi[0] == 1.0 && phi[1] == 0.0 &&
                     phi[2] == 0.0;
  const bool fast = elapsed < 1.0;
  report(1, "importance(dirac_{(2,1,1)}) == (1,0,0) exactly", exact && fast,
         "got (" + fmt(phi[0]) + "," + fmt(phi[1]) + "," + fmt(phi[2]) +
             "), " + fmt(elapsed) + " ms < 1 ms");
}

void criterion_2_efficiency_case_table() {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int n : {2, 3}) {
    for (int k : {1, 2, 3}) {
      const LatticeShape shape(n, k);
      LatticePoint y(static_cast<std::size_t>(n), 0);
      while (advance_point(y, shape)) {
        const ImportanceVector phi = importance(dirac(shape, y));
        double sum = 0.0;
        for (double p : phi) sum += p;
        worst = std::max(
            worst, std::abs(sum - dirac_efficiency_expected(y, shape)));
      }
    }
  }
  const double elapsed = ms_since(start);
  report(2, "sum of importance over dirac games follows the +1/-1/0 cases",
         worst <= 1e-12 && elapsed < 1000.0,
         "worst |error| " + fmt(worst) + " <= 1e-12, " + fmt(elapsed) +
             " ms < 1 s");
}

void criteria_3_4_random_corpus() {
  const auto start = std::chrono::steady_clock::now();
  double worst_oracle = 0.0;
  double worst_sum_identity = 0.0;
  for (const auto& [n, k] : kCorpusShapes) {
    const LatticeShape shape(n, k);
    for (const KAryGame& v : corpus(shape)) {
      const ImportanceVector phi = importance(v);

      worst_oracle =
          std::max(worst_oracle, max_abs_diff(phi, importance_by_cells(v)));

      double total = 0.0;
      for (double p : phi) total += p;
      worst_sum_identity =
          std::max(worst_sum_identity, std::abs(total - sum_identity_rhs(v)));
    }
  }
  const double elapsed = ms_since(start);
  report(3,
         "importance == cell-decomposition oracle on 200 games x 9 shapes",
         worst_oracle <= 1e-9 && elapsed < 30000.0,
         "max |error| " + fmt(worst_oracle) + " <= 1e-9, " + fmt(elapsed) +
             " ms < 30 s");
  report(4, "sum of importances == diagonal variation on the same corpus",
         worst_sum_identity <= 1e-9,
         "max |error| " + fmt(worst_sum_identity) + " <= 1e-9");
}

void criterion_8_rival_efficiency() {
  double worst_pz = 0.0, worst_hr = 0.0, worst_gl = 0.0;
  for (const auto& [n, k] : kCorpusShapes) {
    const LatticeShape shape(n, k);
    const WeightScheme weights = WeightScheme::linear(k);
    for (const KAryGame& v : corpus(shape)) {
      const double top = v.top_value();
      worst_pz = std::max(worst_pz, std::abs(peters_zank(v).total() - top));
      worst_hr = std::max(worst_hr,
                          std::abs(hsiao_raghavan(v, weights).total() - top));
      double gl_total = 0.0;
      for (double p : grabisch_lange(v)) gl_total += p;
      worst_gl = std::max(worst_gl, std::abs(gl_total - top));
    }
  }
  report(8,
         "peters-zank, hsiao-raghavan (w_j = j), grabisch-lange all sum to "
         "v(k_N) on the same corpus",
         worst_pz <= 1e-9 && worst_hr <= 1e-9 && worst_gl <= 1e-9,
         "max |error| pz " + fmt(worst_pz) + ", hr " + fmt(worst_hr) +
             ", gl " + fmt(worst_gl) + " <= 1e-9");
}

void criterion_5_classical_collapse() {
  double worst = 0.0;
  for (int n = 1; n <= 6; ++n) {
    const LatticeShape shape(n, 1);
    std::mt19937_64 rng(static_cast<std::uint64_t>(500 + n));
    for (int t = 0; t < 200; ++t) {
      const KAryGame mu = random_game(shape, rng);
      const ImportanceVector reference = shapley_classical(mu);
      worst = std::max(worst, max_abs_diff(importance(mu), reference));
      worst = std::max(worst, max_abs_diff(importance_by_cells(mu), reference));
      worst = std::max(worst, max_abs_diff(grabisch_lange(mu), reference));
    }
  }
  report(5,
         "importance, cells, grabisch-lange all equal the Shapley value at "
         "k=1 (200 games, n <= 6)",
         worst <= 1e-12, "max |error| " + fmt(worst) + " <= 1e-12");
}

void criterion_6_axiom_suite() {
  const IndexFunctional paper = [](const KAryGame& v) { return importance(v); };
  bool all_passed = true;
  double worst = 0.0;
  for (const auto& [n, k] : kCorpusShapes) {
    const HarnessConfig cfg{LatticeShape(n, k), 200,
                            static_cast<std::uint64_t>(7000 + 10 * n + k),
                            1e-9};
    for (const AxiomReport& r :
         {check_linearity(paper, cfg), check_null(paper, cfg),
          check_symmetry(paper, cfg), check_invariance(paper, cfg),
          check_efficiency_dirac(paper, cfg.shape, 1e-9)}) {
      all_passed = all_passed && r.passed;
      worst = std::max(worst, r.worst_violation);
    }
  }
  report(6, "axiom suite (L, N, S, I, E) passes on 200 trials x 9 shapes",
         all_passed, "worst violation " + fmt(worst) + " <= 1e-9");

  const HarnessConfig cfg{LatticeShape(3, 2), 200, 99, 1e-9};
  const bool controls_fail =
      !check_linearity(negative_controls::nonlinear(), cfg).passed &&
      !check_null(negative_controls::ignores_null(), cfg).passed &&
      !check_symmetry(negative_controls::attribute_biased(), cfg).passed &&
      !check_invariance(negative_controls::first_increment(), cfg).passed &&
      !check_efficiency_dirac([](const KAryGame& v) { return grabisch_lange(v); },
                              cfg.shape, 1e-9)
           .passed;
  report(6, "every checker rejects its negative-control functional",
         controls_fail, "all five controls fail as intended");
}

void criterion_7_moebius_machinery() {
  // Round trip zeta(moebius(v)) == v.
  double worst_round_trip = 0.0;
  for (const auto& [n, k] : kCorpusShapes) {
    const LatticeShape shape(n, k);
    std::mt19937_64 rng(static_cast<std::uint64_t>(300 + 10 * n + k));
    for (int t = 0; t < 50; ++t) {
      const KAryGame v = random_game(shape, rng);
      const KAryGame back = zeta(moebius(v));
      for (std::size_t i = 0; i < shape.table_size(); ++i) {
        worst_round_trip = std::max(worst_round_trip, std::abs(back[i] - v[i]));
      }
    }
  }

  // moebius(u_x) is the indicator of x for every threshold.
  bool indicators_ok = true;
  for (int n = 1; n <= 3; ++n) {
    for (int k = 1; k <= 3; ++k) {
      const LatticeShape shape(n, k);
      for (std::size_t idx = 1; idx < shape.table_size(); ++idx) {
        const MoebiusTable m =
            moebius(unanimity(shape, point_from_index(idx, shape)));
        for (std::size_t j = 0; j < shape.table_size(); ++j) {
          indicators_ok =
              indicators_ok && (m[j] == ((j == idx) ? 1.0 : 0.0));
        }
      }
    }
  }

  // Dimension-wise passes equal the direct alternating double sum, exactly,
  // on integer-valued games.
  bool direct_ok = true;
  for (int n = 1; n <= 3; ++n) {
    for (int k = 1; k <= 2; ++k) {
      const LatticeShape shape(n, k);
      std::mt19937_64 rng(static_cast<std::uint64_t>(40 + 10 * n + k));
      for (int t = 0; t < 20; ++t) {
        std::vector<double> values(shape.table_size());
        values[0] = 0.0;
        for (std::size_t i = 1; i < values.size(); ++i) {
          values[i] = static_cast<double>(static_cast<int>(rng() % 17) - 8);
        }
        const KAryGame v(shape, values);
        const MoebiusTable m = moebius(v);
        LatticePoint x(static_cast<std::size_t>(n), 0);
        std::size_t idx = 0;
        do {
          // Direct evaluation of the closed form at x.
          double direct = 0.0;
          LatticePoint y = x;
          std::vector<int> drop(static_cast<std::size_t>(n), 0);
          while (true) {
            bool valid = true;
            int total_drop = 0;
            for (int i = 0; i < n; ++i) {
              const auto ii = static_cast<std::size_t>(i);
              if (drop[ii] > x[ii]) valid = false;
              y[ii] = x[ii] - drop[ii];
              total_drop += drop[ii];
            }
            if (valid) {
              direct += ((total_drop % 2) ? -1.0 : 1.0) * v.at(y);
            }
            int p = n - 1;
            for (; p >= 0; --p) {
              auto& d = drop[static_cast<std::size_t>(p)];
              if (d == 0) {
                d = 1;
                break;
              }
              d = 0;
            }
            if (p < 0) break;
          }
          direct_ok = direct_ok && (m[idx] == direct);
          ++idx;
        } while (advance_point(x, shape));
      }
    }
  }

  report(7, "Moebius machinery: round trip, unanimity indicators, direct sum",
         worst_round_trip <= 1e-12 && indicators_ok && direct_ok,
         "round trip " + fmt(worst_round_trip) +
             " <= 1e-12; indicators exact; direct double sum exact");
}

void criterion_9_hand_fixtures() {
  const ImportanceVector u11 =
      importance(unanimity(LatticeShape(2, 2), {1, 1}));
  const bool u11_ok = u11[0] == 1.5 && u11[1] == 1.5;

  const ImportanceVector gl =
      grabisch_lange(dirac(LatticeShape(3, 2), {2, 1, 1}));
  const bool gl_ok = gl[0] == 0.0 && gl[1] == 0.0 && gl[2] == 0.0;

  const KAryGame u210 = unanimity(LatticeShape(3, 2), {2, 1, 0});
  const BiIndexTable hr = hsiao_raghavan(u210, WeightScheme({1, 2}));
  const bool hr_ok = hr.at(0, 2) == 2.0 / 3.0 && hr.at(1, 1) == 1.0 / 3.0 &&
                     hr.total() == 1.0 && hr.at(0, 1) == 0.0 &&
                     hr.at(2, 1) == 0.0 && hr.at(2, 2) == 0.0;

  const BiIndexTable pz = peters_zank(u210);
  const bool pz_ok = pz.at(0, 2) == 0.5 && pz.at(1, 1) == 0.5 &&
                     pz.total() == 1.0 && pz.at(0, 1) == 0.0 &&
                     pz.at(2, 1) == 0.0 && pz.at(2, 2) == 0.0;

  report(9,
         "hand fixtures: u_{(1,1)} -> (3/2,3/2); gl(dirac) -> 0; "
         "hr -> (2/3,1/3); pz -> (1/2,1/2)",
         u11_ok && gl_ok && hr_ok && pz_ok,
         std::string("u11 ") + (u11_ok ? "ok" : "BAD") + ", gl " +
             (gl_ok ? "ok" : "BAD") + ", hr " + (hr_ok ? "ok" : "BAD") +
             ", pz " + (pz_ok ? "ok" : "BAD"));
}

}  // namespace

int main() {
  criterion_1_motivating_fixture();
  criterion_2_efficiency_case_table();
  criteria_3_4_random_corpus();
  criterion_5_classical_collapse();
  criterion_6_axiom_suite();
  criterion_7_moebius_machinery();
  criterion_8_rival_efficiency();
  criterion_9_hand_fixtures();

  if (g_failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance check(s) FAILED\n", g_failures);
  return 1;
}
