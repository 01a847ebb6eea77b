#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

namespace berge {

std::uint64_t splitmix64(std::uint64_t x);

// Independent stream seed for item `index` of a seeded run.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  return splitmix64(base ^ splitmix64(index + 0x9e3779b97f4a7c15ULL));
}

// Seeded generator with a fully specified output sequence: the engine is
// mt19937_64 and bounded draws use rejection instead of the
// implementation-defined std distributions, so runs are reproducible across
// standard libraries.
class Rng {
 public:
  static constexpr std::string_view kAlgorithm =
      "mt19937_64 seeded with splitmix64(seed); bounded ints by rejection; "
      "unit doubles from the top 53 bits";

  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % bound;
  }
  int below(int bound) { return static_cast<int>(below(static_cast<std::uint64_t>(bound))); }

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(below(static_cast<std::uint64_t>(i)));
      std::swap(v[i - 1], v[j]);
    }
  }

  // k distinct values from [0, n), sorted.
  std::vector<int> sample(int n, int k);

 private:
  std::mt19937_64 engine_;
};

}  // namespace berge
