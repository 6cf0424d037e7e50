#ifndef TRISTOCH_INERTIA_HPP
#define TRISTOCH_INERTIA_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "tristoch/model.hpp"
#include "tristoch/symmetrize.hpp"

namespace tristoch {

// Leading principal minors D_0..D_n of (M - shift*I), D_0 = 1, via
//   D_k = (diag[k-1] - shift) D_{k-1} - off2[k-2] D_{k-2}.
// generic is true iff no D_k vanishes for k >= 1.
template <typename T>
struct MinorSequence {
  std::vector<T> values;
  T shift{};
  bool generic = true;
};

template <typename T>
MinorSequence<T> minor_sequence(const std::vector<T>& diag, const std::vector<T>& off2,
                                const T& shift) {
  MinorSequence<T> seq;
  seq.shift = shift;
  seq.values.reserve(diag.size() + 1);
  seq.values.push_back(T(1));
  for (std::size_t k = 0; k < diag.size(); ++k) {
    T d = (diag[k] - shift) * seq.values[k];
    if (k >= 1) d -= off2[k - 1] * seq.values[k - 1];
    if (sign_of(d) == 0) seq.generic = false;
    seq.values.push_back(std::move(d));
  }
  return seq;
}

template <typename T>
MinorSequence<T> minor_sequence(const Tridiag<T>& m, const T& shift) {
  return minor_sequence(m.diag, off_squared(m), shift);
}

inline MinorSequence<double> minor_sequence(const SymTridiag& s, double shift) {
  return minor_sequence(s.diag, off_squared(s), shift);
}

// Sign changes along a fully nonvanishing minor sequence; by the Law of
// Inertia this equals the number of eigenvalues below the shift.
template <typename T>
int sign_changes(const MinorSequence<T>& seq) {
  if (!seq.generic)
    throw std::domain_error(
        "non-generic minor sequence: a minor vanishes; genericize or use count_below");
  int changes = 0;
  int prev = 1;
  for (std::size_t k = 1; k < seq.values.size(); ++k) {
    int s = sign_of(seq.values[k]);
    if (s != prev) ++changes;
    prev = s;
  }
  return changes;
}

template <typename T>
struct InertiaReport {
  MinorSequence<T> minors;
  std::optional<int> sign_change_count;  // absent when non-generic
  std::optional<int> negative_count;     // equals sign changes when generic, else indeterminate
};

template <typename T>
InertiaReport<T> inertia_report(const Tridiag<T>& m, const T& shift) {
  InertiaReport<T> rep;
  rep.minors = minor_sequence(m, shift);
  if (rep.minors.generic) {
    rep.sign_change_count = sign_changes(rep.minors);
    rep.negative_count = rep.sign_change_count;
  }
  return rep;
}

// -- float route: LDL pivot counting ---------------------------------------

// Number of eigenvalues of the symmetric tridiagonal (diag, off2) strictly
// below x, by counting negative pivots of the shifted factorization. A zero
// pivot is replaced by -omega (counted negative), which biases the count
// upward at exact eigenvalues: count(x) = #{lambda <= x} there.
int count_below(const std::vector<double>& diag, const std::vector<double>& off2, double x);

inline int count_below(const SymTridiag& s, double x) {
  return count_below(s.diag, off_squared(s), x);
}

inline int count_below(const Tridiag<double>& m, double x) {
  return count_below(m.diag, off_squared(m), x);
}

// -- exact route: minor sign changes ---------------------------------------

// Exact count for an unreduced block (every off2 entry nonzero). A single
// vanishing minor takes the sign opposite to its predecessor, matching the
// float route's bias; two consecutive zeros cannot occur for an unreduced
// block and raise a structural-degeneracy error.
int count_below_unreduced(const std::vector<Rational>& diag, const std::vector<Rational>& off2,
                          const Rational& x);

// Exact count for a general matrix: splits at vanishing coupling products,
// then sums the per-block counts.
int count_below(const std::vector<Rational>& diag, const std::vector<Rational>& off2,
                const Rational& x);

inline int count_below(const Tridiag<Rational>& m, const Rational& x) {
  return count_below(m.diag, off_squared(m), x);
}

// -- family-level checks ----------------------------------------------------

// Exact check of the minor sign implications at shift 0:
// D2 <= 0 implies D3 <= 0, and (D3 <= 0 and D2 >= 0) implies D4 <= 0.
bool verify_sign_lemma(const Params<Rational>& p);

// count_below(S, 0) <= 2, i.e. at most two negative eigenvalues.
bool at_most_two_negative(const Params<double>& p);
bool at_most_two_negative(const Params<Rational>& p);

}  // namespace tristoch

#endif
