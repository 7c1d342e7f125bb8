#include "flowroots/polyalg.hpp"

#include <algorithm>
#include <sstream>

namespace flowroots {

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, int degree) {
  std::vector<Integer> cs(static_cast<std::size_t>(degree) + 1, 0);
  cs.back() = c;
  return IntPoly(std::move(cs));
}

IntPoly IntPoly::linear_factor(const Integer& root) { return IntPoly(std::vector<Integer>{-root, 1}); }

IntPoly IntPoly::falling_factorial(int k) {
  IntPoly out = constant(1);
  for (int i = 0; i < k; ++i) out *= linear_factor(i);
  return out;
}

Integer IntPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

const Integer& IntPoly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Integer> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(d));
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive() const {
  if (is_zero()) return {};
  Integer g = content();
  if (leading() < 0) g = -g;
  std::vector<Integer> cs = coeffs_;
  for (auto& c : cs) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(cs));
}

Integer IntPoly::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int IntPoly::sign_at(const Rational& x) const {
  if (is_zero()) return 0;
  // sum c_i num^i den^(d-i), den > 0
  const Integer& num = x.get_num();
  const Integer& den = x.get_den();
  Integer acc = 0;
  Integer den_pow = 1;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * num + *it * den_pow;
    den_pow *= den;
  }
  return sgn(acc);
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Integer> out(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      mpz_addmul(out[i + j].get_mpz_t(), coeffs_[i].get_mpz_t(), o.coeffs_[j].get_mpz_t());
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

IntPoly IntPoly::operator-() const {
  IntPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::string IntPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Integer& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

IntPoly power(const IntPoly& p, int e) {
  IntPoly out = IntPoly::constant(1);
  for (int i = 0; i < e; ++i) out *= p;
  return out;
}

IntPoly poly_arith(const IntPoly& p, const IntPoly& q, ArithOp op) {
  switch (op) {
    case ArithOp::add:
      return p + q;
    case ArithOp::sub:
      return p - q;
    case ArithOp::mul:
      return p * q;
  }
  throw std::invalid_argument("unknown polynomial operation");
}

IntPoly exact_divide(const IntPoly& p, const IntPoly& q) {
  if (q.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  if (p.is_zero()) return {};
  if (p.degree() < q.degree()) throw InexactDivision("nonzero remainder: divisor degree exceeds dividend");
  std::vector<Integer> rem = p.coeffs();
  const int dq = q.degree();
  const Integer& lq = q.leading();
  std::vector<Integer> quot(static_cast<std::size_t>(p.degree() - dq) + 1, 0);
  for (int k = p.degree() - dq; k >= 0; --k) {
    Integer& top = rem[static_cast<std::size_t>(k + dq)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lq.get_mpz_t()))
      throw InexactDivision("quotient has non-integral coefficients");
    Integer c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lq.get_mpz_t());
    quot[static_cast<std::size_t>(k)] = c;
    for (int j = 0; j <= dq; ++j)
      mpz_submul(rem[static_cast<std::size_t>(k + j)].get_mpz_t(), c.get_mpz_t(),
                 q.coeffs()[static_cast<std::size_t>(j)].get_mpz_t());
  }
  for (const auto& r : rem)
    if (r != 0) throw InexactDivision("nonzero remainder");
  return IntPoly(std::move(quot));
}

IntPoly positive_pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("pseudo-remainder by zero");
  std::vector<Integer> r = a.coeffs();
  const int db = b.degree();
  const Integer lb = abs(b.leading());
  const int sb = sgn(b.leading());
  while (!r.empty() && static_cast<int>(r.size()) - 1 >= db) {
    const int shift = static_cast<int>(r.size()) - 1 - db;
    const Integer lr = r.back();
    // r <- |lb| r - sgn(lb) lr x^shift b
    for (auto& c : r) c *= lb;
    for (int j = 0; j <= db; ++j) {
      Integer t = lr * b.coeffs()[static_cast<std::size_t>(j)];
      if (sb > 0) r[static_cast<std::size_t>(shift + j)] -= t;
      else r[static_cast<std::size_t>(shift + j)] += t;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    // Strip content to keep coefficients small; positive factor only.
    Integer g = 0;
    for (const auto& c : r) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g > 1)
      for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
  return IntPoly(std::move(r));
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly x = a.primitive();
  IntPoly y = b.primitive();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = positive_pseudo_remainder(x, y).primitive();
    x = std::move(y);
    y = std::move(r);
  }
  if (x.degree() == 0) return IntPoly::constant(1);
  return x;
}

IntPoly squarefree_part(const IntPoly& p) {
  if (p.degree() <= 0) return p.primitive();
  return exact_divide(p.primitive(), gcd(p, p.derivative()));
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p) {
  std::vector<std::pair<IntPoly, int>> out;
  if (p.degree() <= 0) return out;
  const IntPoly a = p.primitive();
  const IntPoly da = a.derivative();
  const IntPoly g = gcd(a, da);
  IntPoly c = exact_divide(a, g);
  IntPoly d = exact_divide(da, g) - c.derivative();
  for (int i = 1; c.degree() > 0; ++i) {
    IntPoly f = gcd(c, d);
    c = exact_divide(c, f);
    d = exact_divide(d, f) - c.derivative();
    if (f.degree() > 0) out.emplace_back(std::move(f), i);
  }
  return out;
}

std::vector<IntPoly> sturm_chain(const IntPoly& p) {
  std::vector<IntPoly> chain;
  if (p.is_zero()) return chain;
  chain.push_back(p);
  IntPoly d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(std::move(d));
  while (true) {
    IntPoly r = -positive_pseudo_remainder(chain[chain.size() - 2], chain.back());
    if (r.is_zero()) break;
    Integer g = r.content();
    if (g > 1) r = exact_divide(r, IntPoly::constant(g));
    chain.push_back(std::move(r));
  }
  return chain;
}

namespace {

int variations(const std::vector<int>& signs) {
  int count = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int variations_at(const std::vector<IntPoly>& chain, const Rational& x) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& q : chain) signs.push_back(q.sign_at(x));
  return variations(signs);
}

int variations_at_infinity(const std::vector<IntPoly>& chain, bool negative) {
  std::vector<int> signs;
  for (const auto& q : chain) {
    int s = sgn(q.leading());
    if (negative && q.degree() % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return variations(signs);
}

}  // namespace

int sturm_count(const IntPoly& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw std::invalid_argument("sturm_count of the zero polynomial");
  if (!(a < b)) throw std::invalid_argument("sturm_count needs a < b");
  const auto chain = sturm_chain(squarefree_part(p));
  return variations_at(chain, a) - variations_at(chain, b);
}

int sturm_count_all(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("sturm_count of the zero polynomial");
  const auto chain = sturm_chain(squarefree_part(p));
  return variations_at_infinity(chain, true) - variations_at_infinity(chain, false);
}

Integer root_bound(const IntPoly& p) {
  // Fujiwara: 2 max |a_{d-i}/a_d|^{1/i}, with the constant term halved.
  // Search the smallest power of two B satisfying each term, then +1.
  const int d = p.degree();
  if (d <= 0) return 1;
  const Integer lead = abs(p.leading());
  auto ok = [&](const Integer& b) {
    Integer bpow = 1;
    Integer two_pow = 1;
    for (int i = 1; i <= d; ++i) {
      bpow *= b;
      two_pow *= 2;
      Integer lhs = abs(p.coeff(d - i)) * two_pow;
      Integer rhs = bpow * lead;
      if (i == d) rhs *= 2;
      if (lhs > rhs) return false;
    }
    return true;
  };
  Integer b = 1;
  while (!ok(b)) b *= 2;
  // Binary search the smallest valid value in (b/2, b].
  Integer lo = b / 2, hi = b;
  while (hi - lo > 1) {
    Integer mid = (lo + hi) / 2;
    if (ok(mid)) hi = mid;
    else lo = mid;
  }
  return hi + 1;
}

namespace {

// A point of (a, b) that is not a root of p.
Rational split_point(const IntPoly& p, const Rational& a, const Rational& b) {
  for (int den = 2;; ++den) {
    for (int num = den / 2; num >= 1; --num) {
      for (int side = 0; side < 2; ++side) {
        const int k = side == 0 ? num : den - num;
        Rational t = a + (b - a) * ratio(k, den);
        if (p.sign_at(t) != 0) return t;
      }
    }
  }
}

}  // namespace

std::vector<Interval> isolate_real_roots(const IntPoly& f) {
  std::vector<Interval> out;
  if (f.degree() <= 0) return out;
  const auto chain = sturm_chain(f);
  const Rational bound(root_bound(f));
  struct Pending {
    Rational lo, hi;
    int vlo, vhi;
  };
  std::vector<Pending> stack;
  const Rational lo0 = -bound;
  stack.push_back({lo0, bound, variations_at(chain, lo0), variations_at(chain, bound)});
  while (!stack.empty()) {
    Pending cur = stack.back();
    stack.pop_back();
    const int count = cur.vlo - cur.vhi;
    if (count == 0) continue;
    if (count == 1) {
      out.push_back({cur.lo, cur.hi});
      continue;
    }
    const Rational mid = split_point(f, cur.lo, cur.hi);
    const int vmid = variations_at(chain, mid);
    stack.push_back({mid, cur.hi, vmid, cur.vhi});
    stack.push_back({cur.lo, mid, cur.vlo, vmid});
  }
  std::sort(out.begin(), out.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  return out;
}

Interval refine_root(const IntPoly& f, Interval iv, const Rational& tol) {
  if (iv.is_point()) return iv;
  const int s_lo = f.sign_at(iv.lo);
  while (iv.width() > tol) {
    Rational mid = (iv.lo + iv.hi) / 2;
    const int s = f.sign_at(mid);
    if (s == 0) return {mid, mid};
    if (s == s_lo) iv.lo = mid;
    else iv.hi = mid;
  }
  return iv;
}

std::vector<std::pair<Integer, int>> integer_roots(const IntPoly& p) {
  std::vector<std::pair<Integer, int>> out;
  if (p.degree() <= 0) return out;
  IntPoly q = p.primitive();
  int zero_mult = 0;
  while (q.coeff(0) == 0) {
    q = IntPoly(std::vector<Integer>(q.coeffs().begin() + 1, q.coeffs().end()));
    ++zero_mult;
  }
  if (zero_mult > 0) out.emplace_back(0, zero_mult);
  if (q.degree() <= 0) return out;

  const IntPoly sf = squarefree_part(q);
  const Integer c0 = abs(sf.coeff(0));
  std::vector<Integer> candidates;
  const Integer bound = root_bound(sf);
  const Integer limit = bound < c0 ? bound : c0;
  if (limit <= 1000000) {
    for (Integer d = 1; d <= limit; ++d) {
      if (!mpz_divisible_p(c0.get_mpz_t(), d.get_mpz_t())) continue;
      if (sf.evaluate(d) == 0) candidates.push_back(d);
      if (sf.evaluate(-d) == 0) candidates.push_back(-d);
    }
  } else {
    // Huge bound: isolate the real roots and test the integers near each.
    for (Interval iv : isolate_real_roots(sf)) {
      iv = refine_root(sf, iv, Rational(1, 2));
      Integer lo;
      mpz_fdiv_q(lo.get_mpz_t(), iv.lo.get_num_mpz_t(), iv.lo.get_den_mpz_t());
      for (Integer d = lo; Rational(d) <= iv.hi; ++d)
        if (d != 0 && iv.contains(Rational(d)) && sf.evaluate(d) == 0) candidates.push_back(d);
    }
  }
  for (const Integer& d : candidates) {
    const IntPoly lin = IntPoly::linear_factor(d);
    int mult = 0;
    while (q.degree() >= 1 && q.evaluate(d) == 0) {
      q = exact_divide(q, lin);
      ++mult;
    }
    out.emplace_back(d, mult);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int RootProfile::multiplicity_of(const Integer& value) const {
  for (const auto& [v, m] : integer_roots)
    if (v == value) return m;
  return 0;
}

int RootProfile::integer_root_total() const {
  int total = 0;
  for (const auto& r : integer_roots) total += r.second;
  return total;
}

RootProfile root_profile(const IntPoly& p, const Rational& tol) {
  if (p.is_zero()) throw std::invalid_argument("root profile of the zero polynomial");
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  RootProfile prof;
  prof.degree = p.degree();
  prof.integer_roots = integer_roots(p);
  prof.real_root_count = prof.integer_root_total();
  for (const auto& [v, m] : prof.integer_roots)
    if (v > 2) prof.count_above_2 += m;

  const Rational one(1), two(2);
  std::vector<std::pair<IntPoly, RootInterval>> in_window;
  for (auto [f, mult] : squarefree_decomposition(p)) {
    for (const auto& [v, m] : prof.integer_roots) {
      (void)m;
      if (f.evaluate(v) == 0) f = exact_divide(f, IntPoly::linear_factor(v));
    }
    if (f.degree() <= 0) continue;
    for (Interval iv : isolate_real_roots(f)) {
      // Make sure 1 and 2 are not interior points.
      while ((iv.lo < one && one < iv.hi) || (iv.lo < two && two < iv.hi))
        iv = refine_root(f, iv, iv.width() / 2);
      RootInterval ri{iv, mult};
      prof.real_root_count += mult;
      if (iv.lo >= one && iv.hi <= two && !(iv.is_point() && (iv.lo == one || iv.lo == two))) {
        in_window.emplace_back(f, ri);
      } else {
        if (iv.lo >= two && !(iv.is_point() && iv.lo == two)) prof.count_above_2 += mult;
        ri.interval = refine_root(f, iv, tol);
        prof.isolating_intervals.push_back(ri);
      }
    }
  }

  int window_mult = 0;
  for (const auto& w : in_window) window_mult += w.second.multiplicity;
  prof.count_in_1_2 = window_mult;
  Rational lo_sum = 0, hi_sum = 0;
  if (window_mult > 0) {
    const Rational each = tol / window_mult;
    for (auto& [f, ri] : in_window) {
      ri.interval = refine_root(f, ri.interval, each);
      lo_sum += ri.multiplicity * (two - ri.interval.hi);
      hi_sum += ri.multiplicity * (two - ri.interval.lo);
      prof.isolating_intervals.push_back(ri);
    }
  }
  prof.omega = {lo_sum, hi_sum};
  std::sort(prof.isolating_intervals.begin(), prof.isolating_intervals.end(),
            [](const RootInterval& a, const RootInterval& b) { return a.interval.lo < b.interval.lo; });
  prof.real_rooted = prof.real_root_count == prof.degree;
  return prof;
}

Interval isolate_unique_root(const IntPoly& p, const Rational& lo, const Rational& hi, const Rational& tol) {
  if (!(lo < hi)) throw std::invalid_argument("empty search window");
  int count = sturm_count(p, lo, hi);
  const bool hi_is_root = p.sign_at(hi) == 0;
  if (hi_is_root) --count;
  if (count != 1) {
    throw std::invalid_argument("expected exactly one root in the window, found " + std::to_string(count));
  }
  const IntPoly f = squarefree_part(p);
  if (f.sign_at(lo) == 0) {
    // Step off the left endpoint without passing the interior root.
    const auto chain = sturm_chain(f);
    Rational left = hi;
    while (true) {
      Rational mid = (lo + left) / 2;
      if (f.sign_at(mid) != 0 && variations_at(chain, lo) - variations_at(chain, mid) == 0) {
        left = mid;
        break;
      }
      left = mid;
    }
    return isolate_unique_root(p, left, hi, tol);
  }
  Rational right = hi;
  if (hi_is_root) {
    const auto chain = sturm_chain(f);
    Rational r = lo;
    while (true) {
      Rational mid = (r + hi) / 2;
      if (f.sign_at(mid) != 0 && variations_at(chain, mid) - variations_at(chain, hi) == 1) {
        right = mid;
        break;
      }
      r = mid;
    }
  }
  return refine_root(f, {lo, right}, tol);
}

bool newton_check(const IntPoly& p) {
  const int n = p.degree();
  if (n < 2) return true;
  auto binom = [](int a, int b) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
  };
  for (int i = 1; i < n; ++i) {
    // (a_i / C(n,i))^2 >= (a_{i-1} / C(n,i-1)) (a_{i+1} / C(n,i+1))
    const Integer lhs = p.coeff(i) * p.coeff(i) * binom(n, i - 1) * binom(n, i + 1);
    const Integer rhs = p.coeff(i - 1) * p.coeff(i + 1) * binom(n, i) * binom(n, i);
    if (lhs < rhs) return false;
  }
  return true;
}

Rational parse_rational(const std::string& text) {
  std::string t = text;
  t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char c) { return std::isspace(c); }), t.end());
  if (t.empty()) throw std::invalid_argument("empty rational");
  const auto e = t.find_first_of("eE");
  if (t.find('/') != std::string::npos) {
    Rational r;
    if (r.set_str(t, 10) != 0) throw std::invalid_argument("malformed rational: " + text);
    r.canonicalize();
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    return r;
  }
  // Decimal with optional exponent, e.g. 1e-9 or 0.001.
  std::string mantissa = e == std::string::npos ? t : t.substr(0, e);
  long exponent = 0;
  if (e != std::string::npos) {
    try {
      exponent = std::stol(t.substr(e + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed number: " + text);
    }
  }
  const auto dot = mantissa.find('.');
  if (dot != std::string::npos) {
    exponent -= static_cast<long>(mantissa.size() - dot - 1);
    mantissa.erase(dot, 1);
  }
  Integer m;
  if (mantissa.empty() || m.set_str(mantissa, 10) != 0) throw std::invalid_argument("malformed number: " + text);
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  Rational r = exponent < 0 ? Rational(m, scale) : Rational(m * scale);
  r.canonicalize();
  return r;
}

std::string format_decimal(const Rational& x, int digits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Rational scaled = x * scale;
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  const bool neg = q < 0;
  std::string s = Integer(abs(q)).get_str();
  if (digits > 0) {
    if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits) - s.size() + 1, '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  return (neg ? "-" : "") + s;
}

}  // namespace flowroots
