#pragma once

#include <cstdint>
#include <vector>

#include "kset/generate.hpp"
#include "kset/geom.hpp"
#include "kset/instance.hpp"

namespace kset::testing {

inline Rat random_rat(Rng& rng, std::int64_t range = 50, std::int64_t max_den = 7) {
  Rat r(static_cast<long>(rng.uniform(-range, range)), static_cast<unsigned long>(rng.uniform(1, max_den)));
  r.canonicalize();
  return r;
}

inline Point random_point(Rng& rng, std::int64_t range = 50, std::int64_t max_den = 7) {
  return Point{random_rat(rng, range, max_den), random_rat(rng, range, max_den)};
}

/// Worked instance A(0,0) B(4,0) C(2,3) D(1,1).
inline Instance q4() {
  return Instance({Point{0, 0}, Point{4, 0}, Point{2, 3}, Point{1, 1}});
}

enum : int { A = 0, B = 1, C = 2, D = 3 };

inline Point pt(long x, long y) { return Point{Rat(x), Rat(y)}; }

inline Point ptq(const char* x, const char* y) { return Point{Rat(x), Rat(y)}; }

/// Instances with n drawn from [lo, hi], seeded by index.
inline std::vector<Instance> random_instances(std::size_t count, int lo, int hi, std::uint64_t seed,
                                              std::int64_t range = 1000) {
  Rng rng(seed);
  std::vector<Instance> out;
  while (out.size() < count) {
    const int n = static_cast<int>(rng.uniform(lo, hi));
    out.push_back(generate_instance(GenSpec{Shape::Uniform, n, range, rng.next()}));
  }
  return out;
}

}  // namespace kset::testing
