#ifndef TGLAB_COLORING_HPP_
#define TGLAB_COLORING_HPP_

#include <cstdint>
#include <vector>

#include "tglab/interner.hpp"

namespace tglab {

// Final node colors of one refinement run. Colors are only comparable to
// colors carrying the same session id.
struct Coloring {
  std::uint64_t session_id = 0;
  int iterations = 0;  // refinement rounds performed
  std::vector<ColorId> colors;
};

// Node equivalence classes with dense class ids normalized to first-seen
// order, so equal partitions compare equal regardless of the session that
// produced them.
class Partition {
 public:
  Partition() = default;
  static Partition from_colors(const std::vector<ColorId>& colors);
  static Partition from_coloring(const Coloring& c) { return from_colors(c.colors); }

  int size() const { return static_cast<int>(class_of_.size()); }
  int num_classes() const { return num_classes_; }
  int class_of(int i) const { return class_of_[i]; }
  const std::vector<int>& classes() const { return class_of_; }
  std::vector<std::vector<int>> groups() const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.class_of_ == b.class_of_;
  }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

 private:
  std::vector<int> class_of_;
  int num_classes_ = 0;
};

// True when every class of fine is contained in a class of coarse. Both
// partitions must cover the same number of nodes.
bool refines(const Partition& fine, const Partition& coarse);

}  // namespace tglab

#endif  // TGLAB_COLORING_HPP_
