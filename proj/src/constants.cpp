#include <stdexcept>

#include "flowroots/audits.hpp"

namespace flowroots {

IntPoly xi_cubic(int k) {
  switch (k) {
    case 3: return IntPoly{-7, 10, -5, 1};
    case 4: return IntPoly{-6, 8, -4, 1};
    case 5: return IntPoly{-9, 13, -6, 1};
    default: throw std::invalid_argument("no cubic for k = " + std::to_string(k));
  }
}

XiTable compute_xi_table(const Rational& tol) {
  XiTable t;
  const Rational one(1), two(2);
  t.xi3 = isolate_root_of_cubic(xi_cubic(3), one, two, tol);
  t.xi4 = isolate_root_of_cubic(xi_cubic(4), one, two, tol);
  t.xi5 = isolate_root_of_cubic(xi_cubic(5), one, two, tol);
  return t;
}

const XiTable& default_xi_table() {
  static const XiTable table = compute_xi_table(Rational(1, Integer("1000000000000000")));
  return table;
}

Interval XiTable::enclosure(int k) const {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  if (k <= 2) return {Rational(2), Rational(2)};
  if (k == 3) return xi3;
  if (k == 4) return xi4;
  if (k == 5) return xi5;
  throw std::invalid_argument("only the lower bound 32/27 is known for k >= 6");
}

int mu(const Rational& x) { return x > 0 ? 1 : 0; }

Integer ceiling(const Rational& x) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return fl + mu(x - Rational(fl));
}

std::optional<int> nroot_table_value(int k) {
  static const int table[] = {9, 11, 14, 14, 16, 19, 21, 24};
  if (k < 3 || k > 10) return std::nullopt;
  return table[k - 3];
}

int nroot_formula(int k) {
  if (k < 3) throw std::invalid_argument("nroot needs k >= 3");
  const Rational numer(2 * k - 1);
  if (k >= 6) {
    const Rational bound = numer / (Rational(2) - Rational(32, 27));
    return static_cast<int>(ceiling(bound).get_si());
  }
  // (2k - 1) / (2 - xi) is increasing in xi; refine until both ends of the
  // enclosure give the same ceiling.
  Rational tol(1, 1000000);
  for (int attempt = 0; attempt < 8; ++attempt) {
    const Interval xi = isolate_root_of_cubic(xi_cubic(k), Rational(1), Rational(2), tol);
    const Integer lo = ceiling(numer / (Rational(2) - xi.lo));
    const Integer hi = ceiling(numer / (Rational(2) - xi.hi));
    if (lo == hi) return static_cast<int>(hi.get_si());
    tol /= 1000000;
  }
  throw std::runtime_error("could not certify nroot ceiling");
}

int nroot(int k) {
  if (k < 3) throw std::invalid_argument("nroot needs k >= 3");
  if (auto v = nroot_table_value(k)) return *v;
  return nroot_formula(k);
}

}  // namespace flowroots
