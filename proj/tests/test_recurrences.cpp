#include <cmath>

#include "doctest.h"
#include "test_support.hpp"

using namespace tridet;
using namespace tridet::testing;

namespace {

TridiagonalMatrix spd5() { return make_matrix({4, 5, 5, 5, 5}, {2, 2, 2, 2}, {2, 2, 2, 2}); }
TridiagonalMatrix ex31() { return make_matrix({1, 1, 2, -1}, {1, -1, 1}, {1, 1, -3}); }

}  // namespace

TEST_SUITE("pivot_sequence") {
  TEST_CASE("symmetric 5x5 has constant pivots") {
    const auto ps = pivot_sequence(spd5());
    CHECK(ps.c == std::vector<double>{4, 4, 4, 4, 4});
    CHECK_FALSE(ps.break_index);
  }

  TEST_CASE("vanishing second pivot is reported") {
    const auto ps = pivot_sequence(ex31());
    REQUIRE(ps.c.size() == 2);
    CHECK(ps.c[0] == 1);
    CHECK(ps.c[1] == 0);
    CHECK(ps.break_index == 2u);
  }

  TEST_CASE("zero superdiagonal decouples") {
    const auto ps = pivot_sequence(make_matrix({2, 2}, {0}, {9}));
    CHECK(ps.c == std::vector<double>{2, 2});
    CHECK_FALSE(ps.break_index);
  }

  TEST_CASE("c_1 = d_1 and zero d_1 breaks at 1") {
    const auto ps = pivot_sequence(make_matrix({0, 3, 4}, {1, 1}, {1, 1}));
    CHECK(ps.c == std::vector<double>{0});
    CHECK(ps.break_index == 1u);
  }

  TEST_CASE("a vanishing last pivot is stored but is not a break") {
    const auto ps = pivot_sequence(make_matrix({1, 1}, {1}, {1}));
    CHECK(ps.c == std::vector<double>{1, 0});
    CHECK_FALSE(ps.break_index);
  }

  TEST_CASE("entries before the break satisfy the pivot recurrence") {
    Rng rng(21);
    for (int t = 0; t < 300; ++t) {
      const std::size_t n = uniform_size(rng, 1, 30);
      const auto m = random_int_matrix(rng, n, -3, 3);
      const auto ps = pivot_sequence(m);
      const auto exact = pivot_sequence(to_rational(m));
      REQUIRE(ps.break_index == exact.break_index);
      REQUIRE(ps.c.size() == exact.c.size());
      CHECK(ps.c[0] == m.diag()[0]);
      for (std::size_t i = 0; i < ps.c.size(); ++i) {
        // Each float pivot is the correctly rounded exact pivot or within an ulp.
        const double ref = exact.c[i].get_d();
        CHECK(std::fabs(ps.c[i] - ref) <= 1e-15 * std::fabs(ref));
      }
      if (exact.break_index) {
        CHECK(exact.c.back() == 0);
        for (std::size_t i = 0; i + 1 < exact.c.size(); ++i) CHECK(exact.c[i] != 0);
      }
    }
  }

  TEST_CASE("absolute and relative zero tests") {
    // c_2 = fl(1/3) - 1/3 is a rounding residue, not an exact zero.
    const auto m = make_matrix({3, 1.0 / 3.0, 5}, {1, 1}, {1, 1});
    CHECK_FALSE(pivot_sequence(m).break_index);
    CHECK(pivot_sequence(m, ZeroTest::absolute(1e-12)).break_index == 2u);
    CHECK(pivot_sequence(m, ZeroTest::relative()).break_index == 2u);
    CHECK_FALSE(pivot_sequence(m, ZeroTest::absolute(1e-30)).break_index);

    CHECK(ZeroTest::absolute(0).kind() == ZeroTest::Kind::Exact);
    CHECK(ZeroTest::relative().tolerance() == kDefaultRelativeZeroTol);
    CHECK_THROWS(ZeroTest::absolute(-1));
    CHECK_THROWS(ZeroTest::relative(NAN));
  }
}

TEST_SUITE("det_two_term") {
  TEST_CASE("examples") {
    CHECK(det_two_term(gen_example(Family::Ex32, 9)).scalar() == 10);
    CHECK(det_two_term(make_matrix({5}, {}, {})).scalar() == 5);
    CHECK(det_two_term(gen_example(Family::Ex34, 5)).scalar() == 45);
    CHECK(det_two_term(spd5()).algorithm == Algorithm::TwoTerm);
  }

  TEST_CASE("zero interior pivot names the index") {
    try {
      det_two_term(ex31());
      FAIL("expected ZeroPivotError");
    } catch (const ZeroPivotError& e) {
      CHECK(e.index() == 2);
    }
    CHECK_THROWS_AS(det_two_term(to_rational(ex31())), ZeroPivotError);
    CHECK_THROWS_AS(det_two_term(make_matrix({0, 1}, {1}, {1})), ZeroPivotError);
  }

  TEST_CASE("vanishing last pivot gives zero") {
    CHECK(det_two_term(make_matrix({1, 1}, {1}, {1})).scalar() == 0);
    CHECK(det_two_term(gen_example(Family::Ex34, 6)).scalar() == 0);
  }
}

TEST_SUITE("det_three_term") {
  TEST_CASE("examples") {
    CHECK(det_three_term(ex31()).scalar() == -1);
    CHECK(det_three_term(gen_example(Family::Ex33, 4)).scalar() == -1);
    CHECK(det_three_term(make_matrix({5}, {}, {})).scalar() == 5);
    CHECK(det_three_term(make_matrix({3, 4}, {2}, {5})).scalar() == 2);
  }

  TEST_CASE("random 6x6 integer matrices match the dense oracle exactly") {
    Rng rng(31);
    for (int t = 0; t < 200; ++t) {
      const auto m = random_int_matrix(rng, 6, -3, 3);
      const Rational ref = exact_dense(m);
      CHECK(Rational(det_three_term(m).scalar()) == ref);
      CHECK(det_three_term(to_rational(m)).value == ref);
    }
  }

  TEST_CASE("plain overflow is reported") {
    const auto m = gen_example(Family::Ex34, 1001);
    CHECK_THROWS_AS(det_three_term(m), OverflowError);
    CHECK_THROWS_AS(det_hybrid(m), OverflowError);
    CHECK_THROWS_AS(det_two_term(m), OverflowError);
    CHECK_NOTHROW(det_hybrid_scaled(m));
  }
}

TEST_SUITE("det_hybrid") {
  TEST_CASE("switch at the vanishing pivot") {
    const auto r = det_hybrid(ex31());
    CHECK(r.scalar() == -1);
    CHECK(r.algorithm == Algorithm::Hybrid);
    CHECK(r.pivot_break == 2u);
    CHECK(r.steps.pivot_updates == 1);
    CHECK(r.steps.three_term_steps == 2);

    const auto f = principal_minors(ex31());
    CHECK(f.value(0) == 1);
    CHECK(f.value(1) == 1);
    CHECK(f.value(2) == 0);
    CHECK(f.value(3) == 1);
    CHECK(f.value(4) == -1);
  }

  TEST_CASE("no break on the constant family") {
    const auto r = det_hybrid(gen_example(Family::Ex32, 9));
    CHECK(r.scalar() == 10);
    CHECK_FALSE(r.pivot_break);
    const auto f = principal_minors(gen_example(Family::Ex32, 9));
    for (std::size_t m = 1; m <= 9; ++m) CHECK(f.value(m) == m + 1);
  }

  TEST_CASE("all-ones family at n = 7") { CHECK(det_hybrid(gen_example(Family::Ex33, 7)).scalar() == 1); }

  TEST_CASE("orders 1 and 2") {
    CHECK(det_hybrid(make_matrix({-4}, {}, {})).scalar() == -4);
    CHECK(det_hybrid(make_matrix({3, 4}, {2}, {5})).scalar() == 2);
    CHECK(det_hybrid(make_matrix({0, 4}, {2}, {5})).scalar() == -10);
    CHECK(det_hybrid(make_matrix({0, 4}, {2}, {5})).pivot_break == 1u);
  }

  TEST_CASE("never switches back after a break") {
    // Pivot 2 vanishes, later minors are all nonzero.
    const auto m = make_matrix({1, 1, 3, 3, 3, 3}, {1, 1, 1, 1, 1}, {1, 1, 1, 1, 1});
    const auto r = det_hybrid(m);
    CHECK(r.pivot_break == 2u);
    CHECK(r.steps.pivot_updates == 1);
    CHECK(r.steps.three_term_steps == 4);
    CHECK(r.scalar() == det_three_term(m).scalar());
  }

  TEST_CASE("relative zero test switches on a rounding residue") {
    const auto m = make_matrix({3, 1.0 / 3.0, 5, 2}, {1, 1, 1}, {1, 1, 1});
    CHECK_FALSE(det_hybrid(m).pivot_break);
    const auto r = det_hybrid(m, ZeroTest::relative());
    CHECK(r.pivot_break == 2u);
    CHECK(rel_close(r.scalar(), det_three_term(m).scalar(), 1e-12));
  }

  TEST_CASE("early break: no vanishing pivot means n-1 pivot updates") {
    Rng rng(41);
    for (int t = 0; t < 200; ++t) {
      const std::size_t n = uniform_size(rng, 1, 200);
      const auto m = random_well_conditioned(rng, n);
      const auto r = det_hybrid(m);
      CHECK_FALSE(r.pivot_break);
      CHECK(r.steps.pivot_updates == n - 1);
      CHECK(r.steps.three_term_steps == 0);
    }
  }

  TEST_CASE("every kernel does n-1 steps") {
    Rng rng(42);
    for (int t = 0; t < 300; ++t) {
      const std::size_t n = uniform_size(rng, 1, 60);
      const auto m = random_zero_pivot_matrix(rng, n, -3, 3).matrix;
      CHECK(det_three_term(m).steps.total() == n - 1);
      CHECK(det_hybrid(m).steps.total() == n - 1);
      CHECK(det_hybrid_scaled(m).steps.total() == n - 1);
      CHECK(det_hybrid(to_rational(m)).steps.total() == n - 1);
      if (!pivot_sequence(m).break_index) {
        CHECK(det_two_term(m).steps.total() == n - 1);
      }
    }
  }

  TEST_CASE("hybrid equals three-term on the zero-pivot families") {
    for (Family fam : {Family::Ex33, Family::Ex35}) {
      for (std::size_t n = 2; n <= 2000; ++n) {
        const auto m = gen_example(fam, n);
        const double h = det_hybrid(m).scalar();
        const double t = det_three_term(m).scalar();
        REQUIRE(h == t);
      }
      for (std::size_t n = 2; n <= 300; n += 7) {
        const auto m = to_rational(gen_example(fam, n));
        REQUIRE(det_hybrid(m).value == det_three_term(m).value);
      }
    }
  }
}

TEST_SUITE("agreement") {
  TEST_CASE("kernels agree on well-conditioned matrices") {
    Rng rng(51);
    for (int t = 0; t < 1000; ++t) {
      const std::size_t n = uniform_size(rng, 1, 200);
      const auto m = random_well_conditioned(rng, n);
      const double h = det_hybrid(m).scalar();
      REQUIRE(rel_close(det_two_term(m).scalar(), h, 1e-9));
      REQUIRE(rel_close(det_three_term(m).scalar(), h, 1e-9));
      REQUIRE(rel_close(det_hybrid_scaled(m).scalar(), h, 1e-9));
    }
  }

  TEST_CASE("exact kernels agree exactly") {
    Rng rng(52);
    for (int t = 0; t < 500; ++t) {
      const std::size_t n = uniform_size(rng, 1, 40);
      const auto m = to_rational(random_zero_pivot_matrix(rng, n, -5, 5).matrix);
      const Rational three = det_three_term(m).value;
      REQUIRE(det_hybrid(m).value == three);
      if (!pivot_sequence(m).break_index) REQUIRE(det_two_term(m).value == three);
      REQUIRE(principal_minors(m).back() == three);
    }
  }

  TEST_CASE("all kernels match the dense oracle for n <= 10") {
    Rng rng(53);
    for (int t = 0; t < 1000; ++t) {
      const std::size_t n = uniform_size(rng, 1, 10);
      const auto m = random_zero_pivot_matrix(rng, n, -5, 5).matrix;
      const auto q = to_rational(m);
      const Rational ref = exact_dense(m);
      REQUIRE(det_three_term(q).value == ref);
      REQUIRE(det_hybrid(q).value == ref);
      REQUIRE(det_detgtri(q).value == ref);
      const bool defined = !pivot_sequence(q).break_index;
      if (defined) REQUIRE(det_two_term(q).value == ref);

      // Integer determinants: the tolerance scale is floored at 1.
      const double fref = ref.get_d();
      REQUIRE(rel_close_floor(det_three_term(m).scalar(), fref, 1e-9));
      REQUIRE(rel_close_floor(det_hybrid(m).scalar(), fref, 1e-9));
      REQUIRE(rel_close_floor(det_hybrid_scaled(m).scalar(), fref, 1e-9));
      if (defined) REQUIRE(rel_close_floor(det_two_term(m).scalar(), fref, 1e-9));
    }
  }
}

TEST_SUITE("det_hybrid_scaled") {
  TEST_CASE("constant family at n = 1e5") {
    const auto v = det_hybrid_scaled(gen_example(Family::Ex32, 100000)).signed_log();
    CHECK(v.sign() == 1);
    CHECK(std::fabs(v.logmag() - std::log(100001.0)) <= 1e-12 * std::log(100001.0));
  }

  TEST_CASE("singular 2x2") {
    const auto r = det_hybrid_scaled(make_matrix({0, 0}, {1}, {0}));
    CHECK(r.is_scaled());
    CHECK(r.signed_log().sign() == 0);
  }

  TEST_CASE("alternating family at n = 25 matches the closed form") {
    const auto v = det_hybrid_scaled(gen_example(Family::Ex34, 25)).signed_log();
    const auto ref = signed_log(closed_form_det(Family::Ex34, 25));
    CHECK(v.sign() == 1);
    CHECK(log_close(v, ref, 1e-12));
  }

  TEST_CASE("large orders stay finite") {
    for (std::size_t n : {1001u, 5001u, 20001u}) {
      const auto v = det_hybrid_scaled(gen_example(Family::Ex34, n)).signed_log();
      CHECK(log_close(v, signed_log(closed_form_det(Family::Ex34, n)), 1e-9));
    }
    const auto z = det_hybrid_scaled(gen_example(Family::Ex34, 5000)).signed_log();
    CHECK(z.sign() == 0);
  }

  TEST_CASE("sign matches the exact oracle on random integer matrices") {
    Rng rng(61);
    for (int t = 0; t < 1000; ++t) {
      const std::size_t n = uniform_size(rng, 1, 50);
      const auto m = random_int_matrix(rng, n, -5, 5);
      REQUIRE(det_hybrid_scaled(m).signed_log().sign() == sign_of(exact_dense(m)));
    }
  }

  TEST_CASE("sign on near-singular integer matrices with forced zero pivots") {
    Rng rng(62);
    for (int t = 0; t < 1000; ++t) {
      const std::size_t n = uniform_size(rng, 2, 50);
      const auto m = random_zero_pivot_matrix(rng, n, -2, 2).matrix;
      REQUIRE(det_hybrid_scaled(m).signed_log().sign() == sign_of(exact_dense(m)));
    }
  }

  TEST_CASE("scaled minors agree with plain minors") {
    const auto m = gen_example(Family::Ex35, 40);
    const auto plain = principal_minors(m);
    const auto scaled = principal_minors(m, ArithmeticMode::Scaled);
    for (std::size_t i = 0; i <= 40; ++i) {
      CHECK(scaled.signed_log(i).sign() == plain.signed_log(i).sign());
      CHECK(rel_close_floor(scaled.value(i), plain.value(i), 1e-12));
    }
    CHECK_THROWS_AS(principal_minors(gen_example(Family::Ex34, 1001)), OverflowError);
  }
}
