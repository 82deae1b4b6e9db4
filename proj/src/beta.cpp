#include "immex/beta.hpp"

#include <stdexcept>

namespace immex {

namespace {

Rational beta_value(int i) {
  switch (i) {
    case 1: return Rational(1);
    case 2: return Rational(5, 2);
    case 3: return Rational(9, 2);
    case 4: return Rational(27, 4);
    default: {
      Rational v = Rational(9, 4) * (i - 1);
      for (int j = 6; j <= i + 1; ++j) v -= Rational(1, 2 * j);
      return v;
    }
  }
}

}  // namespace

BetaTable::BetaTable(int max_index) {
  if (max_index < 1) throw std::invalid_argument("max_index must be positive");
  extend(max_index);
}

void BetaTable::extend(int i) const {
  for (int k = static_cast<int>(values_.size()) + 1; k <= i; ++k)
    values_.push_back(beta_value(k));
}

const Rational& BetaTable::beta(int i) const {
  if (i < 1) throw std::invalid_argument("beta index must be positive");
  extend(i);
  return values_[i - 1];
}

Rational BetaTable::f_of_alpha(int alpha) const {
  if (alpha < 3) throw std::invalid_argument("f(alpha) requires alpha >= 3");
  Rational v(9, 4);
  for (int i = 6; i <= alpha + 1; ++i) v += Rational(1, 2 * i);
  return v;
}

bool BetaTable::check_superadditivity(int i) const {
  if (i < 4) throw std::invalid_argument("superadditivity check requires i >= 4");
  for (int s = 2; s <= i - 2; ++s) {
    int t = i - s;
    if (s > t) break;
    if (beta(i) < beta(s) + beta(t) + Rational(2 * i - 1, i)) return false;
  }
  return true;
}

bool BetaTable::passes_threshold(long set_size, long n, int alpha, int s) const {
  if (s < 1 || s > alpha - 1) throw std::invalid_argument("invalid |S|");
  // set_size >= (beta_{alpha-s}/beta_alpha) n, by cross-multiplication.
  return Rational(set_size) * beta(alpha) >= beta(alpha - s) * Rational(n);
}

}  // namespace immex
