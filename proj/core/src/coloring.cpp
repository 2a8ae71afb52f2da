#include "tglab/coloring.hpp"

#include <unordered_map>

#include "tglab/errors.hpp"

namespace tglab {

Partition Partition::from_colors(const std::vector<ColorId>& colors) {
  Partition p;
  p.class_of_.reserve(colors.size());
  std::unordered_map<ColorId, int> dense;
  for (ColorId c : colors) {
    auto [it, inserted] = dense.try_emplace(c, static_cast<int>(dense.size()));
    p.class_of_.push_back(it->second);
  }
  p.num_classes_ = static_cast<int>(dense.size());
  return p;
}

std::vector<std::vector<int>> Partition::groups() const {
  std::vector<std::vector<int>> out(num_classes_);
  for (int i = 0; i < size(); ++i) out[class_of_[i]].push_back(i);
  return out;
}

bool refines(const Partition& fine, const Partition& coarse) {
  if (fine.size() != coarse.size()) {
    throw InvalidInputError("refines: partitions cover different node sets");
  }
  std::unordered_map<int, int> image;
  for (int i = 0; i < fine.size(); ++i) {
    auto [it, inserted] = image.try_emplace(fine.class_of(i), coarse.class_of(i));
    if (!inserted && it->second != coarse.class_of(i)) return false;
  }
  return true;
}

}  // namespace tglab
