#include "kset/generate.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace kset {

const char* to_string(Shape shape) {
  switch (shape) {
    case Shape::Uniform:
      return "uniform";
    case Shape::Parabola:
      return "parabola";
    case Shape::GridJitter:
      return "grid-jitter";
  }
  return "uniform";
}

std::optional<Shape> parse_shape(std::string_view name) {
  if (name == "uniform") return Shape::Uniform;
  if (name == "parabola") return Shape::Parabola;
  if (name == "grid-jitter") return Shape::GridJitter;
  return std::nullopt;
}

Rng::Rng(std::uint64_t seed) : engine_(seed) {}

std::uint64_t Rng::next() { return engine_(); }

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());  // full 64-bit range
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t r;
  do {
    r = next();
  } while (r >= limit);
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + r % span);
}

namespace {

Rat whole(std::int64_t v) { return Rat(static_cast<long>(v)); }

bool fits(const std::vector<Point>& pts, const Point& c) {
  for (const auto& p : pts)
    if (p.x == c.x) return false;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (orient(pts[i], pts[j], c) == 0) return false;
  return true;
}

Point draw(Shape shape, Rng& rng, std::int64_t range, std::size_t slot, std::int64_t grid) {
  switch (shape) {
    case Shape::Parabola: {
      const std::int64_t x = rng.uniform(-range, range);
      return Point{whole(x), whole(x) * whole(x)};
    }
    case Shape::GridJitter: {
      // slot-th cell of a grid x grid lattice over [-range, range]^2
      const std::int64_t cell = std::max<std::int64_t>(1, 2 * range / grid);
      const std::int64_t col = static_cast<std::int64_t>(slot) % grid;
      const std::int64_t row = static_cast<std::int64_t>(slot) / grid;
      const std::int64_t jitter = std::max<std::int64_t>(1, cell / 4);
      const std::int64_t x = -range + col * cell + cell / 2 + rng.uniform(-jitter, jitter);
      const std::int64_t y = -range + row * cell + cell / 2 + rng.uniform(-jitter, jitter);
      return Point{whole(x), whole(y)};
    }
    case Shape::Uniform:
    default: {
      const std::int64_t x = rng.uniform(-range, range);
      const std::int64_t y = rng.uniform(-range, range);
      return Point{whole(x), whole(y)};
    }
  }
}

}  // namespace

Instance generate_instance(const GenSpec& spec) {
  if (spec.n < 2) throw std::invalid_argument("generate_instance needs n >= 2");
  if (spec.range < 1) throw std::invalid_argument("generate_instance needs range >= 1");
  Rng rng(spec.seed);
  const auto grid = static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<double>(spec.n))));
  const int budget = 1000;
  std::vector<Point> pts;
  pts.reserve(spec.n);
  for (int slot = 0; slot < spec.n; ++slot) {
    int tries = 0;
    for (;;) {
      Point c = draw(spec.shape, rng, spec.range, static_cast<std::size_t>(slot), grid);
      if (fits(pts, c)) {
        pts.push_back(std::move(c));
        break;
      }
      if (++tries >= budget)
        throw RetriesExhausted("could not place point " + std::to_string(slot) + " of " + std::to_string(spec.n) +
                               " in general position after " + std::to_string(budget) + " draws");
    }
  }
  return Instance(std::move(pts));
}

}  // namespace kset
