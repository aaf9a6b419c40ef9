#include "karyx/lattice.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace karyx {

LatticeShape::LatticeShape(int attribute_count, int top_level)
    : n_(attribute_count), k_(top_level) {
  if (n_ < 1) {
    throw std::invalid_argument("LatticeShape: attribute count must be >= 1");
  }
  if (k_ < 1) {
    throw std::invalid_argument("LatticeShape: top level must be >= 1");
  }
  const auto radix = static_cast<std::size_t>(k_) + 1;
  strides_.assign(static_cast<std::size_t>(n_), 1);
  table_size_ = 1;
  for (int i = n_ - 1; i >= 0; --i) {
    strides_[static_cast<std::size_t>(i)] = table_size_;
    if (table_size_ > std::numeric_limits<std::size_t>::max() / radix) {
      throw std::invalid_argument("LatticeShape: lattice too large to index");
    }
    table_size_ *= radix;
  }
}

std::size_t LatticeShape::stride(int axis) const {
  if (axis < 0 || axis >= n_) {
    throw std::out_of_range("LatticeShape::stride: axis out of range");
  }
  return strides_[static_cast<std::size_t>(axis)];
}

std::size_t flat_index(const LatticePoint& x, const LatticeShape& shape) {
  if (static_cast<int>(x.size()) != shape.n()) {
    throw std::invalid_argument("flat_index: point has wrong dimension");
  }
  std::size_t index = 0;
  for (int i = 0; i < shape.n(); ++i) {
    if (x[static_cast<std::size_t>(i)] < 0 ||
        x[static_cast<std::size_t>(i)] > shape.k()) {
      throw std::out_of_range("flat_index: coordinate " + std::to_string(i + 1) +
                              " outside [0," + std::to_string(shape.k()) + "]");
    }
    index += static_cast<std::size_t>(x[static_cast<std::size_t>(i)]) *
             shape.stride(i);
  }
  return index;
}

LatticePoint point_from_index(std::size_t index, const LatticeShape& shape) {
  if (index >= shape.table_size()) {
    throw std::out_of_range("point_from_index: index past table size");
  }
  LatticePoint x(static_cast<std::size_t>(shape.n()), 0);
  for (int i = 0; i < shape.n(); ++i) {
    const std::size_t st = shape.stride(i);
    x[static_cast<std::size_t>(i)] = static_cast<int>(index / st);
    index %= st;
  }
  return x;
}

bool advance_point(LatticePoint& x, const LatticeShape& shape) {
  for (int i = shape.n() - 1; i >= 0; --i) {
    auto& c = x[static_cast<std::size_t>(i)];
    if (c < shape.k()) {
      ++c;
      return true;
    }
    c = 0;
  }
  // Wrapped around: restore the top point.
  x.assign(static_cast<std::size_t>(shape.n()), shape.k());
  return false;
}

std::vector<int> support(const LatticePoint& x) {
  std::vector<int> result;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > 0) result.push_back(static_cast<int>(i));
  }
  return result;
}

int support_size(const LatticePoint& x) {
  int count = 0;
  for (int c : x) count += (c > 0) ? 1 : 0;
  return count;
}

std::vector<int> kernel(const LatticePoint& x, const LatticeShape& shape) {
  std::vector<int> result;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == shape.k()) result.push_back(static_cast<int>(i));
  }
  return result;
}

int kernel_size(const LatticePoint& x, const LatticeShape& shape) {
  int count = 0;
  for (int c : x) count += (c == shape.k()) ? 1 : 0;
  return count;
}

bool componentwise_leq(const LatticePoint& a, const LatticePoint& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("componentwise_leq: dimension mismatch");
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

LatticePoint bump(const LatticePoint& x, int axis, const LatticeShape& shape) {
  if (axis < 0 || axis >= static_cast<int>(x.size())) {
    throw std::out_of_range("bump: axis out of range");
  }
  if (x[static_cast<std::size_t>(axis)] >= shape.k()) {
    throw std::invalid_argument("bump: no successor along axis " +
                                std::to_string(axis + 1));
  }
  LatticePoint result = x;
  ++result[static_cast<std::size_t>(axis)];
  return result;
}

LatticePoint with_coord(const LatticePoint& x, int axis, int level) {
  if (axis < 0 || axis >= static_cast<int>(x.size())) {
    throw std::out_of_range("with_coord: axis out of range");
  }
  LatticePoint result = x;
  result[static_cast<std::size_t>(axis)] = level;
  return result;
}

LatticePoint bump_all(const LatticePoint& x, const LatticeShape& shape) {
  LatticePoint result = x;
  for (auto& c : result) {
    if (c >= shape.k()) {
      throw std::invalid_argument("bump_all: a coordinate is already at the top");
    }
    ++c;
  }
  return result;
}

LatticePoint VertexRange::iterator::operator*() const {
  LatticePoint p(static_cast<std::size_t>(dim_), 0);
  for (int i = 0; i < dim_; ++i) {
    if (mask_ & (std::uint64_t{1} << (dim_ - 1 - i))) {
      p[static_cast<std::size_t>(i)] = k_;
    }
  }
  return p;
}

VertexRange::VertexRange(int dim, int top_level) : dim_(dim), k_(top_level) {
  if (dim_ < 0 || dim_ > 62) {
    throw std::invalid_argument("VertexRange: dimension out of range");
  }
  if (k_ < 1) {
    throw std::invalid_argument("VertexRange: top level must be >= 1");
  }
}

VertexRange vertices(const LatticeShape& shape) {
  return VertexRange(shape.n(), shape.k());
}

VertexRange vertices_minus_i(const LatticeShape& shape, int axis) {
  if (axis < 0 || axis >= shape.n()) {
    throw std::out_of_range("vertices_minus_i: axis out of range");
  }
  return VertexRange(shape.n() - 1, shape.k());
}

SliceRange::iterator::iterator(const LatticeShape& shape, int axis,
                               std::size_t count)
    : shape_(shape), axis_(axis), count_(count), total_(shape.slice_size()) {
  current_.reduced.assign(static_cast<std::size_t>(shape_.n() - 1), 0);
  current_.base_index = 0;
  refresh_tags();
}

void SliceRange::iterator::refresh_tags() {
  current_.support_size = support_size(current_.reduced);
  current_.kernel_size = 0;
  for (int c : current_.reduced) {
    current_.kernel_size += (c == shape_.k()) ? 1 : 0;
  }
}

SliceRange::iterator& SliceRange::iterator::operator++() {
  ++count_;
  if (count_ >= total_) return *this;
  auto& r = current_.reduced;
  for (int p = static_cast<int>(r.size()) - 1; p >= 0; --p) {
    const int attr = (p < axis_) ? p : p + 1;
    auto& c = r[static_cast<std::size_t>(p)];
    if (c < shape_.k()) {
      ++c;
      current_.base_index += shape_.stride(attr);
      refresh_tags();
      return *this;
    }
    current_.base_index -=
        static_cast<std::size_t>(shape_.k()) * shape_.stride(attr);
    c = 0;
  }
  return *this;  // unreachable while count_ < total_
}

SliceRange::SliceRange(LatticeShape shape, int axis)
    : shape_(std::move(shape)), axis_(axis) {
  if (axis_ < 0 || axis_ >= shape_.n()) {
    throw std::out_of_range("SliceRange: axis out of range");
  }
}

SliceRange enumerate_slice(const LatticeShape& shape, int axis) {
  return SliceRange(shape, axis);
}

}  // namespace karyx
