#pragma once

#include <cstddef>
#include <vector>

namespace graphicable {

/// Dense n x n matrix addressed with 1-based (row, column) indices, the same
/// subscripts used for vertices and generators everywhere in this library.
template <class T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n, const T& fill = T{}) : n_(n), data_(n * n, fill) {}

  std::size_t size() const noexcept { return n_; }

  T& operator()(std::size_t row, std::size_t col) { return data_[(row - 1) * n_ + (col - 1)]; }
  const T& operator()(std::size_t row, std::size_t col) const {
    return data_[(row - 1) * n_ + (col - 1)];
  }

  /// Row-major storage, row 1 first.
  const std::vector<T>& data() const noexcept { return data_; }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

}  // namespace graphicable
