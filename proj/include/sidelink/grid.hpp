// Copyright 2026 The sidelink-match Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SIDELINK_GRID_HPP
#define SIDELINK_GRID_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace sidelink {

// Dense row-major 2-D array. Weight matrices here are small but hot
// (the assignment solver scans rows in its inner loop), so storage is a
// single contiguous buffer.
template <typename T>
class Grid {
 public:
  Grid() : rows_(0), cols_(0) {}

  Grid(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  // Construct from nested braces: Grid<double>{{1, 2}, {3, 4}}.
  Grid(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_)
        throw std::invalid_argument("Grid: ragged initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  std::span<const T> flat() const { return {data_.data(), data_.size()}; }
  std::span<T> flat() { return {data_.data(), data_.size()}; }

  bool operator==(const Grid&) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<T> data_;
};

using Matrix = Grid<double>;

}  // namespace sidelink

#endif  // SIDELINK_GRID_HPP
