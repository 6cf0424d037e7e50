#ifndef TRISTOCH_SYMMETRIZE_HPP
#define TRISTOCH_SYMMETRIZE_HPP

#include <cmath>
#include <vector>

#include "tristoch/model.hpp"

namespace tristoch {

// Symmetric tridiagonal matrix; off[i] = sqrt(super[i]*sub[i]) >= 0 when it
// comes from a stochastic chain. Spectrum-equal to the source matrix: the
// determinant recurrence sees the off-diagonals only through their squares,
// so equality holds for reducible chains as well.
struct SymTridiag {
  std::size_t n = 0;
  std::vector<double> diag;
  std::vector<double> off;
};

// Coupling products super[i]*sub[i]; exact in rational mode (no square roots).
// This is the form the minor recurrences consume.
template <typename T>
std::vector<T> off_squared(const Tridiag<T>& m) {
  std::vector<T> out;
  out.reserve(m.n ? m.n - 1 : 0);
  for (std::size_t i = 0; i + 1 < m.n; ++i) out.push_back(m.super[i] * m.sub[i]);
  return out;
}

inline SymTridiag symmetrize(const Tridiag<double>& m) {
  SymTridiag s;
  s.n = m.n;
  s.diag = m.diag;
  s.off.reserve(m.n ? m.n - 1 : 0);
  for (std::size_t i = 0; i + 1 < m.n; ++i) s.off.push_back(std::sqrt(m.super[i] * m.sub[i]));
  return s;
}

// Rational input: products are formed exactly, then rounded once for the sqrt.
inline SymTridiag symmetrize(const Tridiag<Rational>& m) {
  SymTridiag s;
  s.n = m.n;
  s.diag.reserve(m.n);
  for (const auto& x : m.diag) s.diag.push_back(to_double(x));
  s.off.reserve(m.n ? m.n - 1 : 0);
  for (std::size_t i = 0; i + 1 < m.n; ++i)
    s.off.push_back(std::sqrt(to_double(m.super[i] * m.sub[i])));
  return s;
}

inline std::vector<double> off_squared(const SymTridiag& s) {
  std::vector<double> out;
  out.reserve(s.off.size());
  for (double x : s.off) out.push_back(x * x);
  return out;
}

// Coefficients of p(x) = det(xI - M), monic, ascending order, for the
// tridiagonal matrix defined by (diag, off2). Three-term recurrence on
// leading principal minors of (M - xI), sign-adjusted to the monic form.
template <typename T>
std::vector<T> char_poly(const std::vector<T>& diag, const std::vector<T>& off2) {
  const std::size_t n = diag.size();
  std::vector<T> prev{T(1)};  // degree-0 minor polynomial
  if (n == 0) return prev;
  std::vector<T> cur{diag[0], T(-1)};
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<T> next(k + 2, T(0));
    // (diag[k] - x) * cur
    for (std::size_t i = 0; i < cur.size(); ++i) {
      next[i] += diag[k] * cur[i];
      next[i + 1] -= cur[i];
    }
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= off2[k - 1] * prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  if (n % 2 != 0)
    for (auto& c : cur) c = -c;
  return cur;
}

template <typename T>
std::vector<T> char_poly(const Tridiag<T>& m) {
  return char_poly(m.diag, off_squared(m));
}

// det(M - xI) evaluated at a point via the same recurrence (residual checks).
template <typename T>
T char_poly_eval(const std::vector<T>& diag, const std::vector<T>& off2, const T& x) {
  T prev(1);
  if (diag.empty()) return prev;
  T cur = diag[0] - x;
  for (std::size_t k = 1; k < diag.size(); ++k) {
    T next = (diag[k] - x) * cur - off2[k - 1] * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace tristoch

#endif
