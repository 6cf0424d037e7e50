#include "oracle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace oracle {

using tristoch::sign_of;

Poly normalize(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(i));
  return normalize(std::move(d));
}

Rational eval(const Poly& p, const Rational& x) {
  Rational acc(0);
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

Poly rem(Poly a, const Poly& b) {
  a = normalize(std::move(a));
  if (b.empty()) throw std::invalid_argument("polynomial division by zero");
  while (a.size() >= b.size() && !a.empty()) {
    const Rational q = a.back() / b.back();
    const std::size_t off = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= q * b[i];
    a = normalize(std::move(a));
  }
  return a;
}

Poly divide_exact(const Poly& a_in, const Poly& b) {
  Poly a = normalize(a_in);
  if (b.empty()) throw std::invalid_argument("polynomial division by zero");
  if (a.empty()) return {};
  if (a.size() < b.size()) throw std::invalid_argument("inexact polynomial division");
  Poly q(a.size() - b.size() + 1, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    const Rational c = a.back() / b.back();
    const std::size_t off = a.size() - b.size();
    q[off] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= c * b[i];
    a = normalize(std::move(a));
  }
  if (!a.empty()) throw std::invalid_argument("inexact polynomial division");
  return normalize(std::move(q));
}

Poly gcd(Poly a, Poly b) {
  a = normalize(std::move(a));
  b = normalize(std::move(b));
  while (!b.empty()) {
    Poly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() != 1) {
    const Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

Poly square_free(const Poly& p) {
  const Poly g = gcd(p, derivative(p));
  if (g.size() <= 1) return normalize(p);
  return divide_exact(p, g);
}

std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain;
  chain.push_back(normalize(p));
  chain.push_back(derivative(p));
  while (!chain.back().empty() && chain.back().size() > 1) {
    Poly r = rem(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  return chain;
}

namespace {
int count_variations(const std::vector<int>& signs) {
  int v = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}
}  // namespace

int variations_at(const std::vector<Poly>& chain, const Rational& x) {
  std::vector<int> signs;
  for (const auto& q : chain) signs.push_back(q.empty() ? 0 : sign_of(eval(q, x)));
  return count_variations(signs);
}

int variations_at_neg_inf(const std::vector<Poly>& chain) {
  std::vector<int> signs;
  for (const auto& q : chain) {
    if (q.empty()) {
      signs.push_back(0);
      continue;
    }
    int s = sign_of(q.back());
    if ((q.size() - 1) % 2 != 0) s = -s;  // odd degree flips at -inf
    signs.push_back(s);
  }
  return count_variations(signs);
}

Rational root_bound(const Poly& p_in) {
  const Poly p = normalize(p_in);
  if (p.size() <= 1) return Rational(1);
  Rational mx(0);
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    Rational a = p[i] / p.back();
    if (a < 0) a = -a;
    mx = std::max(mx, a);
  }
  return mx + 1;
}

int distinct_roots_in(const Poly& p, const Rational& a, const Rational& b) {
  if (eval(p, a) == 0 || eval(p, b) == 0)
    throw std::invalid_argument("interval endpoint is a root");
  const auto chain = sturm_chain(p);
  return variations_at(chain, a) - variations_at(chain, b);
}

int roots_below(const Poly& p_in, const Rational& x) {
  int total = 0;
  Poly layer = normalize(p_in);
  while (layer.size() > 1) {
    // deflate the endpoint if it is a root of this layer
    Poly q = layer;
    while (q.size() > 1 && eval(q, x) == 0) q = divide_exact(q, Poly{-x, Rational(1)});
    if (q.size() > 1) {
      const Rational lo = -root_bound(q);
      total += distinct_roots_in(q, lo, x);
    }
    layer = gcd(layer, derivative(layer));
  }
  return total;
}

Poly char_poly_dense(const tristoch::Tridiag<Rational>& m) {
  const std::size_t n = m.n;
  using Mat = std::vector<std::vector<Rational>>;
  Mat a(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) a[i][i] = m.diag[i];
  for (std::size_t i = 0; i + 1 < n; ++i) {
    a[i][i + 1] = m.super[i];
    a[i + 1][i] = m.sub[i];
  }

  auto matmul = [&](const Mat& x, const Mat& y) {
    Mat z(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        if (x[i][k] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) z[i][j] += x[i][k] * y[k][j];
      }
    return z;
  };
  auto trace = [&](const Mat& x) {
    Rational t(0);
    for (std::size_t i = 0; i < n; ++i) t += x[i][i];
    return t;
  };

  Poly coeffs(n + 1, Rational(0));
  coeffs[n] = 1;
  Mat mk = a;
  for (std::size_t k = 1; k <= n; ++k) {
    const Rational c = -trace(mk) / Rational(k);
    coeffs[n - k] = c;
    if (k == n) break;
    for (std::size_t i = 0; i < n; ++i) mk[i][i] += c;
    mk = matmul(a, mk);
  }
  return coeffs;
}

int negative_eigenvalue_count(const tristoch::Tridiag<Rational>& m) {
  return roots_below(char_poly_dense(m), Rational(0));
}

std::vector<RootInterval> isolate_roots(const Poly& p) {
  const Poly q = square_free(p);
  if (q.size() <= 1) return {};
  const auto chain = sturm_chain(q);
  const Rational bound = root_bound(q);

  // gcd tower for multiplicities
  std::vector<Poly> tower;
  Poly layer = normalize(p);
  while (layer.size() > 1) {
    tower.push_back(layer);
    layer = gcd(layer, derivative(layer));
  }
  std::vector<std::vector<Poly>> tower_chains;
  for (const auto& t : tower) tower_chains.push_back(sturm_chain(t));

  std::vector<RootInterval> out;
  std::function<void(Rational, Rational, int, int)> recurse = [&](Rational a, Rational b, int va,
                                                                  int vb) {
    const int count = va - vb;
    if (count <= 0) return;
    if (count == 1) {
      int mult = 0;
      for (const auto& tc : tower_chains) {
        // endpoints of the isolating interval are never roots of q, but may
        // be roots of deeper layers only at the isolated root itself, which
        // stays strictly inside; variations are safe to take here
        mult += variations_at(tc, a) - variations_at(tc, b) >= 1 ? 1 : 0;
      }
      out.push_back({a, b, std::max(mult, 1)});
      return;
    }
    Rational mid = (a + b) / 2;
    Rational offset = (b - a) / 1024;
    while (eval(q, mid) == 0) {
      mid += offset;  // probe hit a root exactly; nudge, keeping exactness
      offset /= 2;
    }
    const int vm = variations_at(chain, mid);
    recurse(a, mid, va, vm);
    recurse(mid, b, vm, vb);
  };
  recurse(-bound, bound, variations_at(chain, -bound), variations_at(chain, bound));
  std::sort(out.begin(), out.end(),
            [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
  return out;
}

std::vector<double> eigenvalues(const tristoch::Tridiag<Rational>& m, double tol) {
  const Poly p = char_poly_dense(m);
  const Poly q = square_free(p);
  auto roots = isolate_roots(p);
  const Rational rtol = tristoch::rational_from_double(tol);

  std::vector<double> out;
  for (auto& r : roots) {
    Rational a = r.lo;
    Rational b = r.hi;
    int sa = sign_of(eval(q, a));
    while (b - a > rtol) {
      Rational mid = (a + b) / 2;
      const int sm = sign_of(eval(q, mid));
      if (sm == 0) {
        a = mid;
        b = mid;
        break;
      }
      if (sm == sa)
        a = mid;
      else
        b = mid;
    }
    const double val = tristoch::to_double((a + b) / 2);
    for (int i = 0; i < r.multiplicity; ++i) out.push_back(val);
  }
  std::sort(out.begin(), out.end(), std::greater<double>());
  return out;
}

}  // namespace oracle
