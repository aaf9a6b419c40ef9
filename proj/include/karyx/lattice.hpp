#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace karyx {

/// A point of the lattice L = {0,...,k}^n, stored as its n coordinates.
using LatticePoint = std::vector<int>;

/// Shape of the finite lattice L = {0,...,k}^n: n attributes sharing a common
/// top level k. Dense tables are indexed in mixed-radix order with attribute 1
/// most significant; stride(axis) is the flat distance between consecutive
/// levels of that axis.
class LatticeShape {
 public:
  LatticeShape(int attribute_count, int top_level);

  int n() const { return n_; }
  int k() const { return k_; }

  /// Total number of lattice points, (k+1)^n. Sizes every dense table.
  std::size_t table_size() const { return table_size_; }

  /// Number of points of L_{-i}, (k+1)^(n-1).
  std::size_t slice_size() const {
    return table_size_ / (static_cast<std::size_t>(k_) + 1);
  }

  /// (k+1)^(n-1-axis); axis is 0-based.
  std::size_t stride(int axis) const;

  friend bool operator==(const LatticeShape&, const LatticeShape&) = default;

 private:
  int n_;
  int k_;
  std::size_t table_size_;
  std::vector<std::size_t> strides_;
};

/// Mixed-radix rank of x, attribute 1 most significant. Inverse of
/// point_from_index. Throws std::out_of_range on a coordinate outside [0,k].
std::size_t flat_index(const LatticePoint& x, const LatticeShape& shape);

/// Point with the given flat rank. Throws std::out_of_range past table_size().
LatticePoint point_from_index(std::size_t index, const LatticeShape& shape);

/// Advances x to its flat-order successor; returns false (and leaves x at the
/// top point) when x was already the last point.
bool advance_point(LatticePoint& x, const LatticeShape& shape);

/// S(x): 0-based indices of the attributes with x_i > 0.
std::vector<int> support(const LatticePoint& x);
int support_size(const LatticePoint& x);

/// K(x): 0-based indices of the attributes with x_i = k.
std::vector<int> kernel(const LatticePoint& x, const LatticeShape& shape);
int kernel_size(const LatticePoint& x, const LatticeShape& shape);

/// Componentwise a <= b.
bool componentwise_leq(const LatticePoint& a, const LatticePoint& b);

/// x + 1_axis. Throws std::invalid_argument when x has no successor along
/// axis (x_axis = k).
LatticePoint bump(const LatticePoint& x, int axis, const LatticeShape& shape);

/// (x_{-axis}, level_axis): x with one coordinate replaced.
LatticePoint with_coord(const LatticePoint& x, int axis, int level);

/// x + 1 on every axis. Throws std::invalid_argument unless x_j < k for all j.
LatticePoint bump_all(const LatticePoint& x, const LatticeShape& shape);

/// The 2^dim points with every coordinate in {0, k}, in ascending flat order.
class VertexRange {
 public:
  VertexRange(int dim, int top_level);

  class iterator {
   public:
    using value_type = LatticePoint;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator(std::uint64_t mask, int dim, int top_level)
        : mask_(mask), dim_(dim), k_(top_level) {}

    LatticePoint operator*() const;
    iterator& operator++() {
      ++mask_;
      return *this;
    }
    bool operator==(const iterator& other) const { return mask_ == other.mask_; }
    bool operator!=(const iterator& other) const { return mask_ != other.mask_; }

   private:
    std::uint64_t mask_;
    int dim_;
    int k_;
  };

  iterator begin() const { return iterator(0, dim_, k_); }
  iterator end() const { return iterator(size(), dim_, k_); }
  std::size_t size() const { return std::uint64_t{1} << dim_; }

 private:
  int dim_;
  int k_;
};

/// Gamma(L): all 2^n vertices of the lattice.
VertexRange vertices(const LatticeShape& shape);

/// Gamma(L_{-axis}): the 2^(n-1) vertices of the reduced lattice, yielded as
/// (n-1)-coordinate points.
VertexRange vertices_minus_i(const LatticeShape& shape, int axis);

/// One element of L_{-i} together with the descriptors every index formula
/// consumes: s(x_{-i}), k(x_{-i}), and the flat index of (x_{-i}, 0_i) in the
/// full lattice. Level l of the dropped axis sits at base_index + l*stride(i).
struct SlicePoint {
  LatticePoint reduced;
  int support_size = 0;
  int kernel_size = 0;
  std::size_t base_index = 0;
};

/// Enumerates all (k+1)^(n-1) points of L_{-axis} in ascending flat order of
/// the reduced lattice. Single-consumer forward iteration.
class SliceRange {
 public:
  SliceRange(LatticeShape shape, int axis);

  class iterator {
   public:
    using value_type = SlicePoint;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator(const LatticeShape& shape, int axis, std::size_t count);

    const SlicePoint& operator*() const { return current_; }
    const SlicePoint* operator->() const { return &current_; }
    iterator& operator++();
    bool operator==(const iterator& other) const { return count_ == other.count_; }
    bool operator!=(const iterator& other) const { return count_ != other.count_; }

   private:
    void refresh_tags();

    LatticeShape shape_;
    int axis_;
    std::size_t count_;
    std::size_t total_;
    SlicePoint current_;
  };

  iterator begin() const { return iterator(shape_, axis_, 0); }
  iterator end() const { return iterator(shape_, axis_, shape_.slice_size()); }
  std::size_t size() const { return shape_.slice_size(); }

 private:
  LatticeShape shape_;
  int axis_;
};

SliceRange enumerate_slice(const LatticeShape& shape, int axis);

}  // namespace karyx
