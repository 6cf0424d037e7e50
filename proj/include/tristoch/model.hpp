#ifndef TRISTOCH_MODEL_HPP
#define TRISTOCH_MODEL_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "tristoch/rational.hpp"

namespace tristoch {

// Float-mode row sums may deviate from 1 by this relative amount.
inline constexpr double kRowSumRelTol = 1e-15;
// Float-mode block splitting: a coupling product super[i]*sub[i] at or below
// kSplitTolFactor * max-band-magnitude is treated as vanishing.
inline constexpr double kSplitTolFactor = 1e-14;

// Row-transition probabilities of the 4x4 tridiagonal stochastic family
//
//   [ alpha  1-alpha      0            0     ]
//   [ beta   gamma    1-beta-gamma     0     ]
//   [ 0      delta    phi          1-delta-phi ]
//   [ 0      0        1-kappa      kappa    ]
//
// Constraints: every parameter in [0,1], beta+gamma <= 1, delta+phi <= 1.
// Boundary values are allowed.
template <typename T>
struct Params {
  T alpha{};
  T beta{};
  T gamma{};
  T delta{};
  T phi{};
  T kappa{};
};

// n x n tridiagonal row-stochastic matrix stored as three bands.
// sub[i] is entry (i+1, i); super[i] is entry (i, i+1).
template <typename T>
struct Tridiag {
  std::size_t n = 0;
  std::vector<T> diag;
  std::vector<T> super;
  std::vector<T> sub;
};

struct Violation {
  std::string location;
  std::string message;
};

struct IndexRange {
  std::size_t begin = 0;
  std::size_t end = 0;  // half-open [begin, end)
  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

namespace detail {
inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}
inline double abs_val(double x) { return std::fabs(x); }
inline Rational abs_val(const Rational& x) { return x < 0 ? Rational(-x) : x; }
}  // namespace detail

// Names every violated parameter inequality; empty means admissible.
template <typename T>
std::vector<std::string> param_violations(const Params<T>& p) {
  std::vector<std::string> v;
  auto check_range = [&v](const T& x, const char* name) {
    if (!(x >= T(0))) v.push_back(std::string(name) + " is negative");
    if (!(x <= T(1))) v.push_back(std::string(name) + " exceeds 1");
  };
  check_range(p.alpha, "alpha");
  check_range(p.beta, "beta");
  check_range(p.gamma, "gamma");
  check_range(p.delta, "delta");
  check_range(p.phi, "phi");
  check_range(p.kappa, "kappa");
  if (!(p.beta + p.gamma <= T(1))) v.push_back("beta+gamma exceeds 1");
  if (!(p.delta + p.phi <= T(1))) v.push_back("delta+phi exceeds 1");
  return v;
}

template <typename T>
void check_params(const Params<T>& p) {
  auto v = param_violations(p);
  if (!v.empty()) throw std::invalid_argument(detail::join(v, "; "));
}

template <typename T>
Tridiag<T> from_params(const Params<T>& p) {
  check_params(p);
  Tridiag<T> m;
  m.n = 4;
  m.diag = {p.alpha, p.gamma, p.phi, p.kappa};
  // grouping keeps the entries nonnegative whenever the pair sums pass the check
  m.super = {T(1) - p.alpha, T(1) - (p.beta + p.gamma), T(1) - (p.delta + p.phi)};
  m.sub = {p.beta, p.delta, T(1) - p.kappa};
  return m;
}

// General-n chain parameters, ordered (first_diag, [sub_i, diag_i]..., last_diag),
// length 2n-2; the n = 4 case coincides with (alpha, beta, gamma, delta, phi, kappa).
template <typename T>
Tridiag<T> from_row_params(std::size_t n, const std::vector<T>& rp) {
  if (n < 2) throw std::invalid_argument("chain dimension must be at least 2");
  if (rp.size() != 2 * n - 2)
    throw std::invalid_argument("expected " + std::to_string(2 * n - 2) + " row parameters, got " +
                                std::to_string(rp.size()));
  std::vector<std::string> v;
  auto check_range = [&v](const T& x, const std::string& name) {
    if (!(x >= T(0))) v.push_back(name + " is negative");
    if (!(x <= T(1))) v.push_back(name + " exceeds 1");
  };
  check_range(rp.front(), "row 0 diag");
  check_range(rp.back(), "row " + std::to_string(n - 1) + " diag");
  for (std::size_t r = 1; r + 1 < n; ++r) {
    const T& b = rp[2 * r - 1];
    const T& g = rp[2 * r];
    check_range(b, "row " + std::to_string(r) + " sub");
    check_range(g, "row " + std::to_string(r) + " diag");
    if (!(b + g <= T(1))) v.push_back("row " + std::to_string(r) + " sub+diag exceeds 1");
  }
  if (!v.empty()) throw std::invalid_argument(detail::join(v, "; "));

  Tridiag<T> m;
  m.n = n;
  m.diag.resize(n);
  m.super.resize(n - 1);
  m.sub.resize(n - 1);
  m.diag[0] = rp.front();
  m.super[0] = T(1) - rp.front();
  for (std::size_t r = 1; r + 1 < n; ++r) {
    const T& b = rp[2 * r - 1];
    const T& g = rp[2 * r];
    m.sub[r - 1] = b;
    m.diag[r] = g;
    m.super[r] = T(1) - (b + g);
  }
  m.diag[n - 1] = rp.back();
  m.sub[n - 2] = T(1) - rp.back();
  return m;
}

template <typename T>
std::vector<T> to_row_params(const Params<T>& p) {
  return {p.alpha, p.beta, p.gamma, p.delta, p.phi, p.kappa};
}

template <typename T>
Params<T> params_from_row(const std::vector<T>& rp) {
  if (rp.size() != 6) throw std::invalid_argument("expected 6 row parameters");
  return Params<T>{rp[0], rp[1], rp[2], rp[3], rp[4], rp[5]};
}

template <typename T>
T max_band_magnitude(const Tridiag<T>& m) {
  T mx(0);
  for (const auto& x : m.diag) mx = std::max(mx, detail::abs_val(x));
  for (const auto& x : m.super) mx = std::max(mx, detail::abs_val(x));
  for (const auto& x : m.sub) mx = std::max(mx, detail::abs_val(x));
  return mx;
}

// Report-style validation: every violated invariant with its location.
template <typename T>
std::vector<Violation> validate(const Tridiag<T>& m) {
  std::vector<Violation> report;
  if (m.n == 0 || m.diag.size() != m.n || m.super.size() + 1 != m.n || m.sub.size() + 1 != m.n) {
    report.push_back({"shape", "band lengths inconsistent with dimension"});
    return report;
  }
  auto idx = [](std::size_t i, std::size_t j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  };
  for (std::size_t i = 0; i < m.n; ++i)
    if (!(m.diag[i] >= T(0))) report.push_back({idx(i, i), "negative entry"});
  for (std::size_t i = 0; i + 1 < m.n; ++i) {
    if (!(m.super[i] >= T(0))) report.push_back({idx(i, i + 1), "negative entry"});
    if (!(m.sub[i] >= T(0))) report.push_back({idx(i + 1, i), "negative entry"});
  }
  for (std::size_t i = 0; i < m.n; ++i) {
    T s = m.diag[i];
    if (i > 0) s += m.sub[i - 1];
    if (i + 1 < m.n) s += m.super[i];
    bool ok;
    if constexpr (std::is_same_v<T, double>) {
      ok = std::fabs(s - 1.0) <= kRowSumRelTol * std::max(1.0, std::fabs(s));
    } else {
      ok = (s == T(1));
    }
    if (!ok) report.push_back({"row " + std::to_string(i), "row sum differs from 1"});
  }
  return report;
}

// Strict positivity of every coupling entry (the chain is then a single
// communicating class).
template <typename T>
bool is_irreducible(const Tridiag<T>& m) {
  for (std::size_t i = 0; i + 1 < m.n; ++i)
    if (!(m.super[i] > T(0)) || !(m.sub[i] > T(0))) return false;
  return true;
}

// Maximal consecutive index blocks between vanishing coupling products.
// Exact mode splits at super[i]*sub[i] == 0; float mode at products within
// the split tolerance.
template <typename T>
std::vector<IndexRange> irreducible_blocks(const Tridiag<T>& m) {
  T tol(0);
  if constexpr (std::is_same_v<T, double>) tol = kSplitTolFactor * max_band_magnitude(m);
  std::vector<IndexRange> blocks;
  std::size_t start = 0;
  for (std::size_t i = 0; i + 1 < m.n; ++i) {
    if (m.super[i] * m.sub[i] <= tol) {
      blocks.push_back({start, i + 1});
      start = i + 1;
    }
  }
  blocks.push_back({start, m.n});
  return blocks;
}

inline Params<double> to_double(const Params<Rational>& p) {
  return {to_double(p.alpha), to_double(p.beta), to_double(p.gamma),
          to_double(p.delta), to_double(p.phi),  to_double(p.kappa)};
}

inline Tridiag<double> to_double(const Tridiag<Rational>& m) {
  Tridiag<double> out;
  out.n = m.n;
  out.diag.reserve(m.n);
  out.super.reserve(m.n ? m.n - 1 : 0);
  out.sub.reserve(m.n ? m.n - 1 : 0);
  for (const auto& x : m.diag) out.diag.push_back(to_double(x));
  for (const auto& x : m.super) out.super.push_back(to_double(x));
  for (const auto& x : m.sub) out.sub.push_back(to_double(x));
  return out;
}

}  // namespace tristoch

#endif
