#include "karyx/game.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace karyx {

namespace {

void require_same_shape(const LatticeShape& a, const LatticeShape& b,
                        const char* what) {
  if (!(a == b)) {
    throw std::invalid_argument(std::string(what) + ": shape mismatch");
  }
}

void require_finite(const std::vector<double>& values, const char* what) {
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument(std::string(what) + ": non-finite entry");
    }
  }
}

}  // namespace

KAryGame::KAryGame(LatticeShape shape, std::vector<double> values,
                   OriginPolicy policy)
    : shape_(std::move(shape)), values_(std::move(values)) {
  if (values_.size() != shape_.table_size()) {
    throw std::invalid_argument(
        "KAryGame: table has " + std::to_string(values_.size()) +
        " entries, expected " + std::to_string(shape_.table_size()));
  }
  require_finite(values_, "KAryGame");
  if (values_.front() != 0.0) {
    if (policy == OriginPolicy::Strict) {
      throw std::invalid_argument(
          "KAryGame: v(0_N) = " + std::to_string(values_.front()) +
          ", games must vanish at the origin (use normalize mode to shift)");
    }
    const double origin = values_.front();
    for (double& v : values_) v -= origin;
    values_.front() = 0.0;
  }
}

KAryGame operator+(const KAryGame& a, const KAryGame& b) {
  require_same_shape(a.shape(), b.shape(), "game sum");
  std::vector<double> out = a.values();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return KAryGame(a.shape(), std::move(out));
}

KAryGame operator-(const KAryGame& a, const KAryGame& b) {
  require_same_shape(a.shape(), b.shape(), "game difference");
  std::vector<double> out = a.values();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return KAryGame(a.shape(), std::move(out));
}

KAryGame operator*(double scalar, const KAryGame& v) {
  std::vector<double> out = v.values();
  for (double& x : out) x *= scalar;
  out.front() = 0.0;  // scalar * 0 may be -0
  return KAryGame(v.shape(), std::move(out));
}

MoebiusTable::MoebiusTable(LatticeShape shape, std::vector<double> coeffs)
    : shape_(std::move(shape)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != shape_.table_size()) {
    throw std::invalid_argument("MoebiusTable: wrong table length");
  }
  require_finite(coeffs_, "MoebiusTable");
  if (coeffs_.front() != 0.0) {
    throw std::invalid_argument(
        "MoebiusTable: coefficient at 0_N must be 0 (v(0_N) = 0 forces it)");
  }
}

namespace {

LatticePoint checked_nonzero_point(const LatticeShape& shape,
                                   const LatticePoint& x, const char* what) {
  if (flat_index(x, shape) == 0) {
    throw std::invalid_argument(std::string(what) +
                                ": the origin 0_N is not allowed");
  }
  return x;
}

}  // namespace

KAryGame unanimity(const LatticeShape& shape, const LatticePoint& threshold) {
  checked_nonzero_point(shape, threshold, "unanimity");
  std::vector<double> values(shape.table_size(), 0.0);
  LatticePoint y(static_cast<std::size_t>(shape.n()), 0);
  std::size_t idx = 0;
  do {
    values[idx] = componentwise_leq(threshold, y) ? 1.0 : 0.0;
    ++idx;
  } while (advance_point(y, shape));
  return KAryGame(shape, std::move(values));
}

KAryGame dirac(const LatticeShape& shape, const LatticePoint& location) {
  checked_nonzero_point(shape, location, "dirac");
  std::vector<double> values(shape.table_size(), 0.0);
  values[flat_index(location, shape)] = 1.0;
  return KAryGame(shape, std::move(values));
}

namespace {

// In-place one-dimensional pass along every fiber of one axis.
template <typename Fiber>
void for_each_fiber(const LatticeShape& shape, int axis, std::vector<double>& t,
                    Fiber&& fiber) {
  const std::size_t st = shape.stride(axis);
  const std::size_t block = st * (static_cast<std::size_t>(shape.k()) + 1);
  for (std::size_t b = 0; b < t.size(); b += block) {
    for (std::size_t off = 0; off < st; ++off) {
      fiber(&t[b + off], st);
    }
  }
}

}  // namespace

MoebiusTable moebius(const KAryGame& v) {
  const LatticeShape& shape = v.shape();
  std::vector<double> t = v.values();
  const int k = shape.k();
  for (int axis = 0; axis < shape.n(); ++axis) {
    for_each_fiber(shape, axis, t, [k](double* f, std::size_t st) {
      for (int l = k; l >= 1; --l) {
        f[static_cast<std::size_t>(l) * st] -=
            f[static_cast<std::size_t>(l - 1) * st];
      }
    });
  }
  return MoebiusTable(shape, std::move(t));
}

KAryGame zeta(const MoebiusTable& m) {
  const LatticeShape& shape = m.shape();
  std::vector<double> t = m.coeffs();
  const int k = shape.k();
  for (int axis = 0; axis < shape.n(); ++axis) {
    for_each_fiber(shape, axis, t, [k](double* f, std::size_t st) {
      for (int l = 1; l <= k; ++l) {
        f[static_cast<std::size_t>(l) * st] +=
            f[static_cast<std::size_t>(l - 1) * st];
      }
    });
  }
  return KAryGame(shape, std::move(t));
}

KAryGame permute(const KAryGame& v, const std::vector<int>& sigma) {
  const LatticeShape& shape = v.shape();
  const auto n = static_cast<std::size_t>(shape.n());
  if (sigma.size() != n) {
    throw std::invalid_argument("permute: permutation has wrong length");
  }
  std::vector<bool> seen(n, false);
  for (int s : sigma) {
    if (s < 0 || s >= shape.n() || seen[static_cast<std::size_t>(s)]) {
      throw std::invalid_argument("permute: not a permutation of the attributes");
    }
    seen[static_cast<std::size_t>(s)] = true;
  }
  std::vector<double> out(shape.table_size(), 0.0);
  LatticePoint x(n, 0);
  LatticePoint image(n, 0);
  std::size_t idx = 0;
  do {
    for (std::size_t i = 0; i < n; ++i) {
      image[static_cast<std::size_t>(sigma[i])] = x[i];
    }
    out[flat_index(image, shape)] = v[idx];
    ++idx;
  } while (advance_point(x, shape));
  return KAryGame(shape, std::move(out));
}

namespace {

void validate_gai(const GaiModel& model) {
  const int n = model.shape.n();
  const auto radix = static_cast<std::size_t>(model.shape.k()) + 1;
  for (const GaiTerm& term : model.terms) {
    if (term.attrs.empty()) {
      throw std::invalid_argument("GaiModel: term with empty attribute set");
    }
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::size_t expected = 1;
    for (int a : term.attrs) {
      if (a < 0 || a >= n) {
        throw std::invalid_argument("GaiModel: term attribute out of range");
      }
      if (seen[static_cast<std::size_t>(a)]) {
        throw std::invalid_argument("GaiModel: duplicate attribute in term");
      }
      seen[static_cast<std::size_t>(a)] = true;
      expected *= radix;
    }
    if (term.table.size() != expected) {
      throw std::invalid_argument(
          "GaiModel: term table has " + std::to_string(term.table.size()) +
          " entries, expected " + std::to_string(expected));
    }
    require_finite(term.table, "GaiModel");
  }
}

}  // namespace

double gai_value(const GaiModel& model, const LatticePoint& x) {
  const auto radix = static_cast<std::size_t>(model.shape.k()) + 1;
  double total = 0.0;
  for (const GaiTerm& term : model.terms) {
    std::size_t sub = 0;
    for (int a : term.attrs) {
      sub = sub * radix + static_cast<std::size_t>(x[static_cast<std::size_t>(a)]);
    }
    total += term.table[sub];
  }
  return total;
}

KAryGame from_gai(const GaiModel& model) {
  validate_gai(model);
  std::vector<double> values(model.shape.table_size(), 0.0);
  LatticePoint x(static_cast<std::size_t>(model.shape.n()), 0);
  std::size_t idx = 0;
  do {
    values[idx] = gai_value(model, x);
    ++idx;
  } while (advance_point(x, model.shape));
  return KAryGame(model.shape, std::move(values), OriginPolicy::Normalize);
}

KAryGame pad_to_common_k(const std::vector<int>& per_attribute_tops,
                         const std::vector<double>& values,
                         OriginPolicy policy) {
  if (per_attribute_tops.empty()) {
    throw std::invalid_argument("pad_to_common_k: no attributes");
  }
  int common = 0;
  std::size_t expected = 1;
  for (int top : per_attribute_tops) {
    if (top < 1) {
      throw std::invalid_argument("pad_to_common_k: per-attribute top must be >= 1");
    }
    if (top > common) common = top;
    expected *= static_cast<std::size_t>(top) + 1;
  }
  if (values.size() != expected) {
    throw std::invalid_argument(
        "pad_to_common_k: table has " + std::to_string(values.size()) +
        " entries, expected " + std::to_string(expected));
  }
  require_finite(values, "pad_to_common_k");

  const LatticeShape shape(static_cast<int>(per_attribute_tops.size()), common);
  std::vector<double> out(shape.table_size(), 0.0);
  LatticePoint x(per_attribute_tops.size(), 0);
  std::size_t idx = 0;
  do {
    std::size_t src = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const int top = per_attribute_tops[i];
      const int level = x[i] < top ? x[i] : top;  // duplicate the top level
      src = src * (static_cast<std::size_t>(top) + 1) +
            static_cast<std::size_t>(level);
    }
    out[idx] = values[src];
    ++idx;
  } while (advance_point(x, shape));
  return KAryGame(shape, std::move(out), policy);
}

}  // namespace karyx
