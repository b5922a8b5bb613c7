#pragma once

// Linear combinations of coordinate sequences with prescribed zeros, and a
// verifier for the sandwich bounds such combinations satisfy on ordered
// pseudo-geometric sequences.

#include <string>
#include <utility>
#include <vector>

#include "tverberg/core_arith.hpp"
#include "tverberg/sequences.hpp"

namespace tverberg {

/// b = sum_t alpha_t a^(t).
inline std::vector<Scalar> combine_rows(const PointSequence& a, const std::vector<Scalar>& alpha) {
  if (alpha.size() != a.dim()) throw DimensionError("coefficient count must equal the dimension");
  std::vector<Scalar> b(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t t = 0; t < a.dim(); ++t) b[i] += alpha[t] * a(t, i);
  return b;
}

/// The unique alpha with b_j = 0 at every zero position and b_k = value
/// at the normalization index k. Throws SingularSystemError when the
/// positions do not determine alpha.
inline std::vector<Scalar> solve_prescribed_zeros(const PointSequence& a, const std::vector<int>& zeros,
                                                  std::pair<int, Scalar> normalization) {
  const std::size_t d = a.dim();
  if (zeros.size() + 1 != d) throw DimensionError("need exactly d-1 zero positions");
  for (std::size_t x = 0; x < zeros.size(); ++x) {
    if (zeros[x] < 0 || static_cast<std::size_t>(zeros[x]) >= a.size()) throw InputError("zero position out of range");
    if (x > 0 && zeros[x] <= zeros[x - 1]) throw InputError("zero positions must increase");
    if (zeros[x] == normalization.first) throw InputError("normalization index coincides with a zero");
  }
  if (normalization.first < 0 || static_cast<std::size_t>(normalization.first) >= a.size())
    throw InputError("normalization index out of range");
  DenseMatrix m(d, d);
  std::vector<Scalar> rhs(d);
  for (std::size_t x = 0; x < zeros.size(); ++x)
    for (std::size_t t = 0; t < d; ++t) m(x, t) = a(t, static_cast<std::size_t>(zeros[x]));
  for (std::size_t t = 0; t < d; ++t) m(d - 1, t) = a(t, static_cast<std::size_t>(normalization.first));
  rhs[d - 1] = normalization.second;
  try {
    return solve_linear(m, rhs);
  } catch (const SingularSystemError&) {
    throw SingularSystemError("prescribed zeros give a degenerate system");
  }
}

struct PLinesViolation {
  enum class Kind { alpha_sign, unexpected_zero, sign_change, no_flip_at_zero, lower_bound, middle_bound, upper_bound };
  Kind kind;
  int index;  // sequence index, or coefficient index for alpha_sign
  std::string detail;
};

struct PLinesReport {
  std::vector<PLinesViolation> violations;
  std::size_t checked_indices = 0;
  bool ok() const { return violations.empty(); }
};

/// Checks, for b = sum alpha_t a^(t) with zeros at j_1 < ... < j_{d-1}:
///  - the alpha_t are nonzero and alternate in sign;
///  - b vanishes exactly at the zero positions, keeps its sign between
///    consecutive zeros and flips sign across each zero;
///  - for each t and every i with j_{t-1} + D < i < j_t - D,
///      (1 - 2 q^-D) |alpha_t a^t_i| < |alpha_t a^t_i| - |alpha_{t-1} a^{t-1}_i| - |alpha_{t+1} a^{t+1}_i|
///                                  <= |b_i| < |alpha_t a^t_i|
///    (coordinates numbered 1..d, j_0 = -inf, j_d = +inf). The middle step
///    is the triangle inequality; it is an equality whenever t-1 and t+1
///    are the only other coordinates, so it cannot be strict in general.
inline PLinesReport check_p_lines_bounds(const PointSequence& a, const Scalar& q, const std::vector<Scalar>& alpha,
                                         const std::vector<int>& zeros, long D) {
  if (q <= 3) throw InputError("p-lines bounds need q > 3");
  if (D <= 0) throw InputError("D must be positive");
  const std::size_t d = a.dim();
  if (alpha.size() != d || zeros.size() + 1 != d) throw DimensionError("alpha/zero count mismatch");
  PLinesReport rep;
  using Kind = PLinesViolation::Kind;

  for (std::size_t t = 0; t < d; ++t) {
    if (alpha[t] == 0 || (t > 0 && sgn(alpha[t]) == sgn(alpha[t - 1])))
      rep.violations.push_back({Kind::alpha_sign, static_cast<int>(t), "coefficients do not alternate"});
  }

  const auto b = combine_rows(a, alpha);
  std::vector<bool> is_zero(a.size(), false);
  for (int j : zeros) is_zero.at(static_cast<std::size_t>(j)) = true;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!is_zero[i] && b[i] == 0) rep.violations.push_back({Kind::unexpected_zero, static_cast<int>(i), "b vanishes"});
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    if (is_zero[i] || is_zero[i + 1]) continue;
    if (b[i] != 0 && b[i + 1] != 0 && sgn(b[i]) != sgn(b[i + 1]))
      rep.violations.push_back({Kind::sign_change, static_cast<int>(i), "sign changes away from a zero"});
  }
  for (int j : zeros) {
    const auto uj = static_cast<std::size_t>(j);
    if (b[uj] != 0) rep.violations.push_back({Kind::unexpected_zero, j, "prescribed zero is not a zero"});
    if (uj > 0 && uj + 1 < a.size() && !is_zero[uj - 1] && !is_zero[uj + 1] && sgn(b[uj - 1]) == sgn(b[uj + 1]))
      rep.violations.push_back({Kind::no_flip_at_zero, j, "no sign flip across zero"});
  }

  const Scalar shrink = 1 - 2 / power(q, D);
  const long n = static_cast<long>(a.size());
  for (std::size_t t = 0; t < d; ++t) {
    // 1-based coordinate t+1 lives between zeros t-1 and t (0-based list)
    const long lo = t == 0 ? -D - 1 : zeros[t - 1];
    const long hi = t + 1 == d ? n + D : zeros[t];
    for (long i = std::max(0L, lo + D + 1); i < std::min(n, hi - D); ++i) {
      const auto ui = static_cast<std::size_t>(i);
      const Scalar main = abs(alpha[t] * a(t, ui));
      Scalar side = 0;
      if (t > 0) side += abs(alpha[t - 1] * a(t - 1, ui));
      if (t + 1 < d) side += abs(alpha[t + 1] * a(t + 1, ui));
      const Scalar middle = main - side;
      const Scalar bi = abs(b[ui]);
      ++rep.checked_indices;
      if (!(shrink * main < middle))
        rep.violations.push_back({Kind::lower_bound, static_cast<int>(i), "(1-2q^-D)|main| >= |main|-|sides|"});
      if (!(middle <= bi)) rep.violations.push_back({Kind::middle_bound, static_cast<int>(i), "|main|-|sides| > |b_i|"});
      if (!(bi < main)) rep.violations.push_back({Kind::upper_bound, static_cast<int>(i), "|b_i| >= |main|"});
    }
  }
  return rep;
}

}  // namespace tverberg
