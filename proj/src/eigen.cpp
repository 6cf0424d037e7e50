#include "tristoch/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace tristoch {

namespace {

int count_below_range(const std::vector<double>& diag, const std::vector<double>& off2,
                      std::size_t b, std::size_t e, double x) {
  constexpr double omega = 1e-300;
  int count = 0;
  double q = 1.0;
  for (std::size_t k = b; k < e; ++k) {
    double p = diag[k] - x;
    if (k > b) p -= off2[k - 1] / q;
    if (p == 0.0) p = -omega;
    if (p < 0.0) ++count;
    q = p;
  }
  return count;
}

}  // namespace

Spectrum eigenvalues(const SymTridiag& s, double tol) {
  if (!(tol >= kMinEigenTol))
    throw std::invalid_argument("eigenvalue tolerance below 1e-14 is not supported");

  Spectrum spec;
  spec.abs_tolerance = tol;
  spec.eigenvalues.reserve(s.n);

  double maxmag = 0.0;
  for (double d : s.diag) maxmag = std::max(maxmag, std::fabs(d));
  for (double o : s.off) maxmag = std::max(maxmag, std::fabs(o));
  const double split_tol = kSplitTolFactor * maxmag;

  const std::vector<double> off2 = off_squared(s);

  std::size_t start = 0;
  for (std::size_t i = 0; i + 1 <= s.n; ++i) {
    const bool cut = (i + 1 == s.n) || (off2[i] <= split_tol);
    if (!cut) continue;
    spec.blocks.push_back({start, i + 1});
    start = i + 1;
  }

  for (const IndexRange& blk : spec.blocks) {
    const std::size_t m = blk.end - blk.begin;
    if (m == 1) {
      spec.eigenvalues.push_back(s.diag[blk.begin]);
      continue;
    }
    // Gershgorin bracket for the block
    double lo = s.diag[blk.begin];
    double hi = lo;
    for (std::size_t i = blk.begin; i < blk.end; ++i) {
      double r = 0.0;
      if (i > blk.begin) r += std::fabs(s.off[i - 1]);
      if (i + 1 < blk.end) r += std::fabs(s.off[i]);
      lo = std::min(lo, s.diag[i] - r);
      hi = std::max(hi, s.diag[i] + r);
    }
    const double pad =
        static_cast<double>(m) * 4e-16 * std::max({1.0, std::fabs(lo), std::fabs(hi)});
    lo -= pad;
    hi += pad;

    for (std::size_t k = 0; k < m; ++k) {
      double a = lo;
      double b = hi;
      for (int iter = 0; iter < 200 && (b - a) >= 2.0 * tol; ++iter) {
        const double mid = 0.5 * (a + b);
        if (mid <= a || mid >= b) break;  // interval no longer splittable
        if (count_below_range(s.diag, off2, blk.begin, blk.end, mid) <=
            static_cast<int>(k))
          a = mid;
        else
          b = mid;
      }
      spec.eigenvalues.push_back(0.5 * (a + b));
    }
  }

  std::sort(spec.eigenvalues.begin(), spec.eigenvalues.end(), std::greater<double>());
  return spec;
}

double lambda2(const Params<double>& p, double tol) {
  return eigenvalues(symmetrize(from_params(p)), tol).eigenvalues[1];
}

double lambda2(const Params<Rational>& p, double tol) {
  return eigenvalues(symmetrize(from_params(p)), tol).eigenvalues[1];
}

double spectral_gap(const Params<double>& p, double tol) { return 1.0 - lambda2(p, tol); }

double spectral_gap(const Params<Rational>& p, double tol) { return 1.0 - lambda2(p, tol); }

}  // namespace tristoch
