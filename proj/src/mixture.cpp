#include "pdt/mixture.hpp"

namespace pdt {

MixtureIndex::MixtureIndex(std::span<const Lottery> family)
    : size_(family.size()), table_(family.size() * family.size()) {
  for (std::size_t x = 0; x < size_; ++x) {
    for (std::size_t y = 0; y < size_; ++y) {
      if (x == y || family[x] == family[y]) continue;
      for (std::size_t h = 0; h < size_; ++h) {
        if (auto alpha = decompose(family[h], family[x], family[y])) {
          table_[x * size_ + y].push_back({std::move(*alpha), h});
        }
      }
    }
  }
}

}  // namespace pdt
