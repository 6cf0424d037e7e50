#include "tristoch/inertia.hpp"

namespace tristoch {

int count_below(const std::vector<double>& diag, const std::vector<double>& off2, double x) {
  constexpr double omega = 1e-300;
  int count = 0;
  double q = 1.0;
  for (std::size_t k = 0; k < diag.size(); ++k) {
    double p = diag[k] - x;
    if (k >= 1) p -= off2[k - 1] / q;
    if (p == 0.0) p = -omega;
    if (p < 0.0) ++count;
    q = p;
  }
  return count;
}

int count_below_unreduced(const std::vector<Rational>& diag, const std::vector<Rational>& off2,
                          const Rational& x) {
  int changes = 0;
  int prev_eff = 1;          // effective sign of D_{k-1}
  bool prev_zero = false;    // D_{k-1} vanished exactly
  Rational dm2(1);
  Rational dm1(1);
  for (std::size_t k = 0; k < diag.size(); ++k) {
    Rational cur = (diag[k] - x) * dm1;
    if (k >= 1) cur -= off2[k - 1] * dm2;
    int s = sign_of(cur);
    if (s == 0) {
      if (prev_zero)
        throw std::logic_error(
            "structural degeneracy: two consecutive zero minors (input is not an unreduced "
            "block; split at vanishing couplings first)");
      s = -prev_eff;
      prev_zero = true;
    } else {
      prev_zero = false;
    }
    if (s != prev_eff) ++changes;
    prev_eff = s;
    dm2 = std::move(dm1);
    dm1 = std::move(cur);
  }
  return changes;
}

int count_below(const std::vector<Rational>& diag, const std::vector<Rational>& off2,
                const Rational& x) {
  int total = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= off2.size(); ++i) {
    if (i == off2.size() || off2[i] == 0) {
      std::vector<Rational> bd(diag.begin() + start, diag.begin() + i + 1);
      std::vector<Rational> bo;
      if (i > start) bo.assign(off2.begin() + start, off2.begin() + i);
      total += count_below_unreduced(bd, bo, x);
      start = i + 1;
    }
  }
  return total;
}

bool verify_sign_lemma(const Params<Rational>& p) {
  auto seq = minor_sequence(from_params(p), Rational(0)).values;
  const Rational& d2 = seq[2];
  const Rational& d3 = seq[3];
  const Rational& d4 = seq[4];
  bool first = !(d2 <= 0) || (d3 <= 0);
  bool second = !((d3 <= 0) && (d2 >= 0)) || (d4 <= 0);
  return first && second;
}

bool at_most_two_negative(const Params<double>& p) {
  return count_below(from_params(p), 0.0) <= 2;
}

bool at_most_two_negative(const Params<Rational>& p) {
  return count_below(from_params(p), Rational(0)) <= 2;
}

}  // namespace tristoch
