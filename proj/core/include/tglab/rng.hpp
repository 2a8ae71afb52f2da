#ifndef TGLAB_RNG_HPP_
#define TGLAB_RNG_HPP_

#include <cstdint>
#include <random>
#include <vector>

namespace tglab {

// mt19937_64 plus fully specified draw helpers. The standard pins down the
// engine's output sequence but not the distribution adaptors, so all draws go
// through these helpers to keep generated artifacts identical across standard
// library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Unbiased draw from [0, n) by rejection.
  std::uint64_t index(std::uint64_t n);

  // Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return unit() < p; }

  // Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[index(i)]);
    }
  }

 private:
  std::mt19937_64 eng_;
};

inline std::uint64_t Rng::index(std::uint64_t n) {
  const std::uint64_t limit = n * (UINT64_MAX / n);
  std::uint64_t r;
  do {
    r = eng_();
  } while (r >= limit);
  return r % n;
}

}  // namespace tglab

#endif  // TGLAB_RNG_HPP_
