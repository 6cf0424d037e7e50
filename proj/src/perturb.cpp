#include "tristoch/perturb.hpp"

#include <functional>

#include "tristoch/inertia.hpp"

namespace tristoch {

namespace {

// A point of (lo, hi) with f != 0, preferring `original` when it already lies
// inside and avoids the root. f is affine with at most one root, so at most
// one midpoint can land on it.
Rational choose_avoiding(const Rational& lo, const Rational& hi, const Rational& original,
                         const std::function<Rational(const Rational&)>& f) {
  if (original > lo && original < hi && f(original) != 0) return original;
  Rational a = lo;
  Rational x = (lo + hi) / 2;
  while (f(x) == 0) x = (a + x) / 2;
  return x;
}

Rational min_r(const Rational& a, const Rational& b) { return a < b ? a : b; }
Rational max_r(const Rational& a, const Rational& b) { return a > b ? a : b; }

}  // namespace

PerturbationTrace<Rational> genericize(const Params<Rational>& p, unsigned n) {
  if (n == 0) throw std::invalid_argument("genericize index n must be positive");
  check_params(p);
  if (!is_irreducible(from_params(p)))
    throw std::invalid_argument("genericize requires an irreducible chain (mix first)");

  const Rational eps(1, static_cast<unsigned long>(n) + 1);
  const Rational one(1);

  Params<Rational> q = p;

  // alpha: keep when positive, else eps_n (distance exactly eps_n in that case)
  q.alpha = (p.alpha > 0) ? p.alpha : eps;
  const Rational d1 = q.alpha;

  // gamma in (0, 1-beta) within eps of the original, avoiding the root of
  // F2(x) = alpha*x - (1-alpha)*beta
  auto f2 = [&](const Rational& x) { return q.alpha * x - (one - q.alpha) * p.beta; };
  q.gamma = choose_avoiding(max_r(Rational(0), p.gamma - eps), min_r(one - p.beta, p.gamma + eps),
                            p.gamma, f2);
  const Rational d2 = f2(q.gamma);

  // phi in (0, 1-delta), avoiding the root of F3(x) = D2*x - r2^2*D1
  const Rational r2sq = (one - p.beta - q.gamma) * p.delta;
  auto f3 = [&](const Rational& x) { return d2 * x - r2sq * d1; };
  q.phi = choose_avoiding(max_r(Rational(0), p.phi - eps), min_r(one - p.delta, p.phi + eps),
                          p.phi, f3);
  const Rational d3 = f3(q.phi);

  // kappa in (0, 1), avoiding the root of F4(x) = x*D3 - (1-delta-phi)(1-x)*D2
  const Rational r3c = one - p.delta - q.phi;
  auto f4 = [&](const Rational& x) { return x * d3 - r3c * (one - x) * d2; };
  q.kappa =
      choose_avoiding(max_r(Rational(0), p.kappa - eps), min_r(one, p.kappa + eps), p.kappa, f4);
  const Rational d4 = f4(q.kappa);

  PerturbationTrace<Rational> trace;
  trace.original = p;
  trace.perturbed = q;
  trace.epsilon = eps;
  trace.scheme = Scheme::genericize;
  trace.certificates = {d1, d2, d3, d4};

  // the incremental F values are exactly the minors of the output chain
  auto seq = minor_sequence(from_params(q), Rational(0));
  for (std::size_t k = 1; k <= 4; ++k) {
    if (seq.values[k] != trace.certificates[k - 1] || seq.values[k] == 0)
      throw std::logic_error("genericize certificate mismatch");
  }
  return trace;
}

}  // namespace tristoch
