#pragma once

// Seeded generators for property tests. Each property runs over a fixed
// number of cases; a failure reports the case seed so it can be replayed.

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "graphicable/algebra.hpp"
#include "oracles/oracles.hpp"

namespace gen {

inline constexpr std::uint64_t kBaseSeed = 0x5eed'0f'9a'7b1cULL;

class Source {
 public:
  explicit Source(std::uint64_t seed) : rng_(seed) {}

  std::size_t size(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }
  bool coin(double p) { return std::bernoulli_distribution(p)(rng_); }
  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

  /// Erdos-Renyi G(n, p).
  oracle::Adj gnp(std::size_t n, double p) {
    oracle::Adj a = oracle::empty(n);
    for (std::size_t u = 1; u <= n; ++u)
      for (std::size_t v = u + 1; v <= n; ++v)
        if (coin(p)) oracle::add_edge(a, u, v);
    return a;
  }

  oracle::Adj small_graph(std::size_t max_n = 9) { return gnp(size(1, max_n), size(1, 9) / 10.0); }

  /// Random simple cubic graph on n (even) vertices via the pairing model,
  /// resampled until simple.
  oracle::Adj cubic(std::size_t n) {
    for (;;) {
      std::vector<std::size_t> points;
      for (std::size_t v = 1; v <= n; ++v) points.insert(points.end(), 3, v);
      std::shuffle(points.begin(), points.end(), rng_);
      oracle::Adj a = oracle::empty(n);
      bool simple = true;
      for (std::size_t k = 0; k < points.size() && simple; k += 2) {
        const std::size_t u = points[k], v = points[k + 1];
        if (u == v || a[u - 1][v - 1]) simple = false;
        else oracle::add_edge(a, u, v);
      }
      if (simple) return a;
    }
  }

  /// Rational with numerator in [-range, range] and denominator in [1, 4].
  graphicable::Rational rational(std::int64_t range) {
    return graphicable::Rational(integer(-range, range), integer(1, 4));
  }

  graphicable::AlgebraElement element(std::size_t dim, std::int64_t range) {
    graphicable::AlgebraElement x(dim);
    for (std::size_t i = 1; i <= dim; ++i) x[i] = rational(range);
    return x;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Runs `property(source)` for `cases` derived seeds.
template <class F>
void for_all(const char* name, std::size_t cases, F&& property) {
  for (std::size_t c = 0; c < cases; ++c) {
    const std::uint64_t seed = kBaseSeed + 0x9e3779b97f4a7c15ULL * (c + 1);
    SCOPED_TRACE(std::string(name) + " case " + std::to_string(c) + " seed " + std::to_string(seed));
    Source source(seed);
    property(source);
    if (::testing::Test::HasFatalFailure()) return;
  }
}

}  // namespace gen
