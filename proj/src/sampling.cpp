#include "tristoch/sampling.hpp"

#include <stdexcept>

namespace tristoch {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t kDyadicDen = 1ULL << kDyadicBits;

Rational dyadic(std::uint64_t num) { return Rational(num, kDyadicDen); }

// uniform numerator in [0, 2^30] (both endpoints reachable)
std::uint64_t draw_num(std::mt19937_64& eng) { return eng() % (kDyadicDen + 1); }

bool coin(std::mt19937_64& eng) { return (eng() >> 63) != 0; }

// (sub, diag) uniform on the closed triangle sub, diag >= 0, sub + diag <= 1
std::pair<Rational, Rational> triangle_draw(std::mt19937_64& eng) {
  std::uint64_t u = draw_num(eng);
  std::uint64_t v = draw_num(eng);
  if (u + v > kDyadicDen) {
    u = kDyadicDen - u;
    v = kDyadicDen - v;
  }
  return {dyadic(u), dyadic(v)};
}

// snap x to 0 or to its upper face with probability 1/2 each side
void maybe_snap(std::mt19937_64& eng, Rational& x, const Rational& face) {
  if (!coin(eng)) return;
  x = coin(eng) ? face : Rational(0);
}

std::size_t triangle_count(unsigned r) {
  return static_cast<std::size_t>(r + 1) * (r + 2) / 2;
}

// lattice point `l` of {(i,j) : i+j <= r}, enumerated i-major
std::pair<unsigned, unsigned> triangle_point(unsigned r, std::size_t l) {
  for (unsigned i = 0; i <= r; ++i) {
    const std::size_t row = r - i + 1;
    if (l < row) return {i, static_cast<unsigned>(l)};
    l -= row;
  }
  throw std::logic_error("triangle lattice index out of range");
}

std::vector<Rational> grid_row_params(std::size_t n, unsigned resolution, std::uint64_t index) {
  if (resolution == 0) throw std::invalid_argument("grid sampler requires a resolution");
  const std::size_t total = grid_point_count(n, resolution);
  if (index >= total) throw std::invalid_argument("grid index out of range");
  const unsigned r = resolution;
  const std::size_t axis = r + 1;
  const std::size_t tri = triangle_count(r);

  std::vector<Rational> rp;
  rp.reserve(2 * n - 2);
  std::uint64_t rem = index;
  rp.push_back(Rational(rem % axis, r));
  rem /= axis;
  for (std::size_t row = 1; row + 1 < n; ++row) {
    auto [i, j] = triangle_point(r, rem % tri);
    rem /= tri;
    rp.push_back(Rational(i, r));
    rp.push_back(Rational(j, r));
  }
  rp.push_back(Rational(rem % axis, r));
  return rp;
}

}  // namespace

std::mt19937_64 sample_engine(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(splitmix64(splitmix64(seed) ^ splitmix64(index + 1)));
}

std::size_t grid_point_count(std::size_t n, unsigned resolution) {
  if (n < 2) throw std::invalid_argument("chain dimension must be at least 2");
  if (resolution == 0) throw std::invalid_argument("grid sampler requires a resolution");
  std::size_t total = (resolution + 1ULL) * (resolution + 1ULL);
  for (std::size_t row = 1; row + 1 < n; ++row) total *= triangle_count(resolution);
  return total;
}

std::vector<Rational> sample_row_params(std::size_t n, SamplerKind kind, std::uint64_t seed,
                                        std::uint64_t index, unsigned resolution) {
  if (n < 2) throw std::invalid_argument("chain dimension must be at least 2");
  if (kind == SamplerKind::grid) return grid_row_params(n, resolution, index);

  auto eng = sample_engine(seed, index);
  std::vector<Rational> rp;
  rp.reserve(2 * n - 2);

  rp.push_back(dyadic(draw_num(eng)));
  if (kind == SamplerKind::boundary_biased) maybe_snap(eng, rp.back(), Rational(1));
  for (std::size_t row = 1; row + 1 < n; ++row) {
    auto [b, g] = triangle_draw(eng);
    if (kind == SamplerKind::boundary_biased) {
      maybe_snap(eng, b, Rational(1) - g);
      maybe_snap(eng, g, Rational(1) - b);
    }
    rp.push_back(b);
    rp.push_back(g);
  }
  rp.push_back(dyadic(draw_num(eng)));
  if (kind == SamplerKind::boundary_biased) maybe_snap(eng, rp.back(), Rational(1));
  return rp;
}

Params<Rational> sample_params(SamplerKind kind, std::uint64_t seed, std::uint64_t index,
                               unsigned resolution) {
  return params_from_row(sample_row_params(4, kind, seed, index, resolution));
}

}  // namespace tristoch
