#include <doctest.h>

#include <map>
#include <random>

#include "flowroots/polyalg.hpp"

using namespace flowroots;

namespace {

IntPoly from_roots(const std::vector<long>& roots) {
  IntPoly p = IntPoly::constant(1);
  for (long r : roots) p *= IntPoly::linear_factor(r);
  return p;
}

// (q x - p)
IntPoly rational_factor(long p, long q) { return IntPoly{-p, q}; }

}  // namespace

TEST_CASE("canonical form drops trailing zeros") {
  const IntPoly p{1, 2, 0, 0};
  CHECK(p.degree() == 1);
  CHECK(IntPoly{0, 0}.is_zero());
  CHECK(IntPoly().degree() == -1);
}

TEST_CASE("arithmetic agrees with pointwise evaluation") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> c(-20, 20);
  for (int t = 0; t < 100; ++t) {
    IntPoly a{c(rng), c(rng), c(rng), c(rng)};
    IntPoly b{c(rng), c(rng), c(rng)};
    for (long x = -3; x <= 3; ++x) {
      const Integer X(x);
      CHECK((a + b).evaluate(X) == a.evaluate(X) + b.evaluate(X));
      CHECK((a - b).evaluate(X) == a.evaluate(X) - b.evaluate(X));
      CHECK((a * b).evaluate(X) == a.evaluate(X) * b.evaluate(X));
      CHECK(poly_arith(a, b, ArithOp::mul) == a * b);
    }
  }
}

TEST_CASE("exact division recovers factors and rejects remainders") {
  const IntPoly a{-6, 11, -6, 1};
  CHECK(exact_divide(a, IntPoly{-1, 1}) == IntPoly{6, -5, 1});
  CHECK_THROWS_AS(exact_divide(a, IntPoly{-5, 1}), InexactDivision);
  CHECK_THROWS_AS(exact_divide(IntPoly{1, 1}, IntPoly{0, 2}), InexactDivision);
  CHECK(power(IntPoly{-1, 1}, 3) == IntPoly{-1, 3, -3, 1});
}

TEST_CASE("gcd of products with a shared factor") {
  const IntPoly shared = from_roots({2, 5});
  const IntPoly a = shared * IntPoly{1, 0, 1};
  const IntPoly b = shared * from_roots({-3});
  CHECK(gcd(a, b) == shared);
  CHECK(gcd(IntPoly{3, 3}, IntPoly{6, 6}) == IntPoly{1, 1});
}

TEST_CASE("squarefree decomposition reassembles the input") {
  const IntPoly p = power(from_roots({1}), 3) * power(from_roots({2}), 2) * from_roots({5});
  const auto parts = squarefree_decomposition(p);
  IntPoly back = IntPoly::constant(1);
  for (const auto& [f, i] : parts) back *= power(f, i);
  CHECK(back == p);
  CHECK(squarefree_part(p) == from_roots({1, 2, 5}));
}

TEST_CASE("Sturm counts on half-open intervals") {
  const IntPoly p = from_roots({1, 2, 3});
  CHECK(sturm_count(p, Rational(1), Rational(3)) == 2);   // (1, 3] holds 2 and 3
  CHECK(sturm_count(p, Rational(0), Rational(1)) == 1);
  CHECK(sturm_count(p, Rational(3), Rational(10)) == 0);
  CHECK(sturm_count_all(IntPoly{1, 0, 1}) == 0);
  CHECK(sturm_count_all(IntPoly{-2, 0, 1}) == 2);
}

TEST_CASE("Sturm counts match planted rational roots") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> num(-30, 30), den(1, 7);
  for (int t = 0; t < 60; ++t) {
    IntPoly p = IntPoly::constant(1);
    std::vector<Rational> roots;
    const int d = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < d; ++i) {
      const long a = num(rng), b = den(rng);
      p *= rational_factor(a, b);
      roots.push_back(ratio(a, b));
    }
    const Rational lo = ratio(num(rng), den(rng));
    const Rational hi = lo + ratio(1 + static_cast<long>(rng() % 20), 3);
    std::vector<Rational> distinct = roots;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    int want = 0;
    for (const auto& r : distinct) want += (lo < r && r <= hi);
    CHECK(sturm_count(p, lo, hi) == want);
  }
}

TEST_CASE("root bound encloses every planted root") {
  const IntPoly p = from_roots({-40, 3, 17});
  CHECK(root_bound(p) > 40);
}

TEST_CASE("isolation and refinement") {
  const IntPoly p{-2, 0, 1};  // +-sqrt(2)
  const auto ivs = isolate_real_roots(p);
  REQUIRE(ivs.size() == 2);
  const Interval r = refine_root(p, ivs[1], Rational(1, 1000000));
  CHECK(r.width() <= Rational(1, 1000000));
  CHECK(r.lo * r.lo < 2);
  CHECK(r.hi * r.hi > 2);
  CHECK_THROWS_AS(isolate_unique_root(from_roots({1, 2}), Rational(0), Rational(3), Rational(1, 100)),
                  std::invalid_argument);
}

TEST_CASE("integer roots with multiplicities") {
  const IntPoly p = power(from_roots({0}), 2) * power(from_roots({-3}), 2) * from_roots({7}) * IntPoly{1, 0, 1};
  const auto roots = integer_roots(p);
  REQUIRE(roots.size() == 3);
  CHECK(roots[0] == std::pair<Integer, int>{-3, 2});
  CHECK(roots[1] == std::pair<Integer, int>{0, 2});
  CHECK(roots[2] == std::pair<Integer, int>{7, 1});
}

TEST_CASE("root profile of a chromatic-style polynomial") {
  // x(x-1)...(x-5)(x^2 - 7x + 11): roots (7 +- sqrt 5)/2 in (2,3) and (4,5).
  const IntPoly p = IntPoly::falling_factorial(6) * IntPoly{11, -7, 1};
  const RootProfile prof = root_profile(p, Rational(1, 1000000));
  CHECK(prof.real_rooted);
  CHECK(prof.integer_root_total() == 6);
  REQUIRE(prof.isolating_intervals.size() == 2);
  CHECK(prof.isolating_intervals[0].interval.lo >= 2);
  CHECK(prof.isolating_intervals[0].interval.hi <= 3);
  CHECK(prof.isolating_intervals[1].interval.lo >= 4);
  CHECK(prof.isolating_intervals[1].interval.hi <= 5);
  CHECK(prof.count_in_1_2 == 0);
}

TEST_CASE("omega of planted roots") {
  // Roots 3/2 (twice) and 5/4: omega = 1/2 + 1/2 + 3/4.
  const IntPoly p = power(rational_factor(3, 2), 2) * rational_factor(5, 4) * from_roots({1, 2});
  const RootProfile prof = root_profile(p, Rational(1, 1000));
  CHECK(prof.count_in_1_2 == 3);
  CHECK(prof.omega.contains(ratio(7, 4)));
  CHECK(prof.omega.width() <= Rational(1, 1000));
  CHECK(!root_profile(IntPoly{1, 0, 1}, Rational(1, 10)).real_rooted);
}

TEST_CASE("Newton inequalities hold for real-rooted input") {
  CHECK(newton_check(from_roots({1, 2, 3, 3, 7})));
  CHECK(!newton_check(IntPoly{1, 0, 1}));
}

TEST_CASE("rational parsing and decimal formatting") {
  CHECK(parse_rational("3/6") == ratio(1, 2));
  CHECK(parse_rational("1e-6") == ratio(1, 1000000));
  CHECK(parse_rational("-0.25") == ratio(-1, 4));
  CHECK_THROWS(parse_rational("abc"));
  CHECK(format_decimal(ratio(1, 3), 4) == "0.3333");
  CHECK(format_decimal(ratio(-5, 2), 1) == "-2.5");
}

TEST_CASE("named polynomial examples") {
  CHECK(poly_arith(IntPoly{-1, 1}, IntPoly{-2, 1}, ArithOp::mul) == IntPoly{2, -3, 1});
  CHECK(poly_arith(IntPoly{2, -3, 1}, IntPoly(), ArithOp::add) == IntPoly{2, -3, 1});
  CHECK(poly_arith(IntPoly{2, -3, 1}, IntPoly{2, -3, 1}, ArithOp::sub).is_zero());
  CHECK(exact_divide(power(IntPoly{-1, 1}, 2) * IntPoly{-2, 1}, IntPoly{2, -3, 1}) == IntPoly{-1, 1});
  CHECK_THROWS_AS(exact_divide(IntPoly{2, -3, 1}, IntPoly{-3, 1}), InexactDivision);

  const IntPoly q{11, -7, 1};
  CHECK(sturm_count(q, Rational(1), Rational(2)) == 0);
  CHECK(sturm_count(q, Rational(2), Rational(5)) == 2);
  CHECK(sturm_count(power(IntPoly{-1, 1}, 2) * IntPoly{-2, 1}, Rational(0), Rational(3)) == 2);

  const RootProfile k4 = root_profile(IntPoly{-6, 11, -6, 1}, Rational(1, 1000));
  CHECK(k4.integer_roots.size() == 3);
  CHECK(k4.count_in_1_2 == 0);
  CHECK(k4.omega.contains(Rational(0)));
  CHECK(!root_profile(IntPoly{10, -5, 1}, Rational(1, 1000)).real_rooted);
  const RootProfile cube = root_profile(power(IntPoly{-1, 1}, 3), Rational(1, 1000));
  CHECK(cube.multiplicity_of(1) == 3);
  CHECK(cube.real_root_count == 3);
  CHECK(cube.real_rooted);
  CHECK(newton_check(power(IntPoly{-1, 1}, 10)));
}

TEST_CASE("random products of linear factors") {
  std::mt19937 rng(47);
  std::uniform_int_distribution<long> root(-5, 5);
  for (int t = 0; t < 200; ++t) {
    const int d = 1 + static_cast<int>(rng() % 8);
    std::map<long, int> want;
    IntPoly p = IntPoly::constant(1);
    for (int i = 0; i < d; ++i) {
      const long a = root(rng);
      want[a]++;
      p *= IntPoly::linear_factor(a);
    }
    const RootProfile prof = root_profile(p, Rational(1, 1000));
    CHECK(prof.real_rooted);
    std::map<long, int> got;
    for (const auto& [v, m] : prof.integer_roots) got[v.get_si()] = m;
    CHECK(got == want);
    CHECK(newton_check(p));

    // A conjugate pair removes two real roots.
    const IntPoly with_pair = p * IntPoly{1 + static_cast<long>(rng() % 5), 0, 1};
    const RootProfile pp = root_profile(with_pair, Rational(1, 1000));
    CHECK(!pp.real_rooted);
    CHECK(pp.real_root_count == with_pair.degree() - 2);
  }
}

TEST_CASE("Sturm counts are additive and division undoes multiplication") {
  std::mt19937 rng(53);
  std::uniform_int_distribution<long> c(-9, 9);
  for (int t = 0; t < 100; ++t) {
    IntPoly p{c(rng), c(rng), c(rng), c(rng), 1};
    IntPoly q{c(rng), c(rng), 1 + static_cast<long>(rng() % 3)};
    CHECK(exact_divide(poly_arith(p, q, ArithOp::mul), q) == p);
    std::vector<Rational> cuts;
    while (cuts.size() < 3) {
      const Rational x = ratio(c(rng) * 7 + static_cast<long>(rng() % 7), 7);
      if (p.sign_at(x) != 0 && std::find(cuts.begin(), cuts.end(), x) == cuts.end()) cuts.push_back(x);
    }
    std::sort(cuts.begin(), cuts.end());
    CHECK(sturm_count(p, cuts[0], cuts[1]) + sturm_count(p, cuts[1], cuts[2]) == sturm_count(p, cuts[0], cuts[2]));
  }
}

TEST_CASE("omega enclosures shrink with the tolerance") {
  const IntPoly p = IntPoly{-2, 0, 1} * IntPoly{-3, 0, 1} * IntPoly{-7, 5};
  Rational prev = -1;
  for (int e = 1; e <= 8; ++e) {
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(e));
    const RootProfile prof = root_profile(p, ratio(1, scale));
    if (prev >= 0) CHECK(prof.omega.width() * 2 <= prev);
    prev = prof.omega.width();
  }
}

TEST_CASE("cubic roots") {
  const Interval xi3 = isolate_root_of_cubic(IntPoly{-7, 10, -5, 1}, Rational(1), Rational(2), ratio(1, 1000000));
  CHECK(xi3.lo > ratio(1430, 1000));
  CHECK(xi3.hi < ratio(1431, 1000));
  CHECK_THROWS_AS(isolate_root_of_cubic(IntPoly{-6, 11, -6, 1}, Rational(0), Rational(4), ratio(1, 10)),
                  std::invalid_argument);
  CHECK_THROWS_AS(isolate_root_of_cubic(IntPoly{-6, 11, -6, 1}, Rational(4), Rational(5), ratio(1, 10)),
                  std::invalid_argument);
}
