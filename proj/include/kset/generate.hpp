#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

#include "kset/instance.hpp"

namespace kset {

enum class Shape { Uniform, Parabola, GridJitter };

const char* to_string(Shape shape);
std::optional<Shape> parse_shape(std::string_view name);

struct GenSpec {
  Shape shape = Shape::Uniform;
  int n = 10;
  std::int64_t range = 1000;  // coordinates drawn from [-range, range]
  std::uint64_t seed = 0;
};

class RetriesExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Platform-independent RNG: mt19937_64 with its own range reduction, since
/// the standard distributions are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next();
  /// Uniform on [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

/// Integer-coordinate instance in general position, deterministic per seed.
/// Points that would share an x or create a collinear triple are redrawn;
/// throws RetriesExhausted after the retry budget.
Instance generate_instance(const GenSpec& spec);

}  // namespace kset
