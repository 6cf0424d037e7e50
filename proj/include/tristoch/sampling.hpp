#ifndef TRISTOCH_SAMPLING_HPP
#define TRISTOCH_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "tristoch/model.hpp"

namespace tristoch {

enum class SamplerKind { uniform, boundary_biased, grid };

// Values are dyadic k/2^30: exact as rationals and exactly representable as
// doubles, so both numeric modes see identical samples.
inline constexpr unsigned kDyadicBits = 30;

// Deterministic per-sample engine; streams for different (seed, index) pairs
// are independent.
std::mt19937_64 sample_engine(std::uint64_t seed, std::uint64_t index);

// Number of lattice points of the feasible polytope at the given per-parameter
// resolution (diagonal parameters take resolution+1 values, coupled row pairs
// range over the triangle sub+diag <= 1).
std::size_t grid_point_count(std::size_t n, unsigned resolution);

// Chain parameters (see from_row_params) for sample `index`:
//   uniform          -- dyadic draws, row pairs uniform on their triangle
//   boundary_biased  -- uniform draws, then each parameter snaps with
//                       probability 1/2 to an exact boundary (0 or its
//                       constraint face)
//   grid             -- lattice point `index` (requires resolution; ignores seed)
std::vector<Rational> sample_row_params(std::size_t n, SamplerKind kind, std::uint64_t seed,
                                        std::uint64_t index, unsigned resolution = 0);

// n = 4 convenience view.
Params<Rational> sample_params(SamplerKind kind, std::uint64_t seed, std::uint64_t index,
                               unsigned resolution = 0);

}  // namespace tristoch

#endif
