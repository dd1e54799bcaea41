#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "pdt/lottery.hpp"
#include "pdt/rational.hpp"

namespace pdt {

/// For a finite family, every proper mixture alpha*x + (1-alpha)*y,
/// alpha in (0,1), that is itself a family member. Indices refer to the
/// family span the index was built from.
class MixtureIndex {
 public:
  struct Point {
    Rational alpha;
    std::size_t result;
  };

  explicit MixtureIndex(std::span<const Lottery> family);

  /// Members h = alpha*family[x] + (1-alpha)*family[y]; empty when x == y.
  const std::vector<Point>& between(std::size_t x, std::size_t y) const { return table_[x * size_ + y]; }
  bool has_mixtures(std::size_t x, std::size_t y) const { return !between(x, y).empty(); }
  std::size_t size() const noexcept { return size_; }

 private:
  std::size_t size_;
  std::vector<std::vector<Point>> table_;
};

}  // namespace pdt
