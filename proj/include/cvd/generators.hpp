#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cvd/graph.hpp"

namespace cvd {

/// Seeded generator whose output does not depend on the standard library's
/// distribution implementations.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, 1) with 53 bits of precision.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  /// Uniform in [0, bound). `bound` must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1)); }
  bool chance(double p) { return uniform() < p; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

private:
  std::mt19937_64 engine_;
};

struct GeneratorSpec {
  std::string name;  // gnp | planted-chordal-plus-noise | long-clique-path | flower
  std::uint64_t seed = 1;
  int n = 10;
  double p = 0.3;
  int k = 1;
  int holes = 2;     // planted: number of noise vertices
  int bags = 10;     // long-clique-path
  int bagsize = 4;   // long-clique-path
  int extra = 0;     // long-clique-path: vertices attached across the path
  int petals = 4;    // flower
};

struct Generated {
  AnnotatedInstance instance;
  std::vector<std::string> comments;
};

/// Throws DomainError for an unknown generator name or bad parameters.
Generated generate(const GeneratorSpec& spec);

const std::vector<std::string>& generator_names();

Graph gnp(int n, double p, Rng& rng);

/// Intersection graph of random subtrees of a random tree; always chordal.
Graph random_chordal(int n, Rng& rng, int tree_nodes = 0);

}  // namespace cvd
