#ifndef TRISTOCH_PERTURB_HPP
#define TRISTOCH_PERTURB_HPP

#include <stdexcept>
#include <vector>

#include "tristoch/model.hpp"

namespace tristoch {

enum class Scheme { mix, genericize };

template <typename T>
struct PerturbationTrace {
  Params<T> original;
  Params<T> perturbed;
  T epsilon{};
  Scheme scheme = Scheme::mix;
  // genericize only: the four exact minors of the perturbed chain, all nonzero
  std::vector<Rational> certificates;
};

// Convex mix with the lazy uniform step: every coupling of the result is at
// least eps/2, so the output is irreducible; entries move by at most eps.
template <typename T>
PerturbationTrace<T> mix(const Params<T>& p, const T& eps) {
  if (!(eps > T(0)) || !(eps < T(1))) throw std::invalid_argument("epsilon must lie in (0,1)");
  check_params(p);
  const T w = T(1) - eps;
  const T half = eps / T(2);
  PerturbationTrace<T> trace;
  trace.original = p;
  trace.epsilon = eps;
  trace.scheme = Scheme::mix;
  trace.perturbed = Params<T>{w * p.alpha + half, w * p.beta + half, w * p.gamma,
                              w * p.delta + half, w * p.phi,         w * p.kappa + half};
  return trace;
}

// Nudges (alpha, gamma, phi, kappa) within eps_n = 1/(n+1) of the input --
// beta and delta stay fixed -- so that all four leading minors of the
// symmetrized chain are nonzero, certified exactly. Requires an irreducible
// input; each step avoids the single root of an affine function, testing the
// original value first and otherwise halving toward an interval midpoint.
PerturbationTrace<Rational> genericize(const Params<Rational>& p, unsigned n);

}  // namespace tristoch

#endif
