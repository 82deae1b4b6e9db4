#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace immex {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline BigInt floor_rational(const Rational& r) {
  BigInt q = numerator(r) / denominator(r);
  if (r < 0 && q * denominator(r) != numerator(r)) --q;
  return q;
}

/// The exact bound sequence beta_1, beta_2, ... and the companion f(alpha).
/// All comparisons the extractor makes go through this table; no floating
/// point is involved anywhere.
class BetaTable {
 public:
  explicit BetaTable(int max_index = 64);

  /// beta_1 = 1, beta_2 = 5/2, beta_3 = 9/2, beta_4 = 27/4, and for i >= 5
  /// beta_i = (9/4)(i-1) - sum_{j=6}^{i+1} 1/(2j). Extends lazily past
  /// max_index.
  const Rational& beta(int i) const;

  /// f(3) = f(4) = 9/4, f(alpha) = 9/4 + sum_{i=6}^{alpha+1} 1/(2i) for
  /// alpha >= 5. Satisfies beta(alpha) = (9/4)alpha - f(alpha).
  Rational f_of_alpha(int alpha) const;

  /// True iff beta_i >= beta_s + beta_t + (2i-1)/i for every integer split
  /// s+t = i with 2 <= s <= t <= i-2.
  bool check_superadditivity(int i) const;

  /// True iff set_size >= (beta_{alpha-s}/beta_alpha) * n, exactly.
  bool passes_threshold(long set_size, long n, int alpha, int s) const;

 private:
  void extend(int i) const;
  mutable std::vector<Rational> values_;  // values_[i-1] = beta_i
};

}  // namespace immex
