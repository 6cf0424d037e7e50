#ifndef TRISTOCH_EIGEN_HPP
#define TRISTOCH_EIGEN_HPP

#include <vector>

#include "tristoch/inertia.hpp"
#include "tristoch/model.hpp"
#include "tristoch/symmetrize.hpp"

namespace tristoch {

inline constexpr double kMinEigenTol = 1e-14;

struct Spectrum {
  std::vector<double> eigenvalues;  // sorted descending
  double abs_tolerance = 0.0;       // half-width of each isolating interval
  std::vector<IndexRange> blocks;   // unreduced blocks used
};

// Full spectrum by Sturm-count bisection: split into unreduced blocks, bracket
// each block in its Gershgorin interval, isolate the k-th smallest eigenvalue
// until the interval width drops below 2*tol. Deterministic; repeated
// eigenvalues come out as repeated values.
Spectrum eigenvalues(const SymTridiag& s, double tol);

double lambda2(const Params<double>& p, double tol);
double lambda2(const Params<Rational>& p, double tol);

// 1 - lambda2 (mixing-rate summary for the associated chain).
double spectral_gap(const Params<double>& p, double tol);
double spectral_gap(const Params<Rational>& p, double tol);

}  // namespace tristoch

#endif
