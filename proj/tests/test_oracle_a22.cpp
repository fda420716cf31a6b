#include "doctest.h"

#include "rank2km/oracle_a22.hpp"
#include "rank2km/root_sums.hpp"

using namespace rank2km;
using namespace rank2km::oracle;

namespace {

const CartanData kH41(4, 1);

LoopElement t(std::int64_t m, int b, long c = 1) {
  return LoopElement::term(m, b, SqrtTwoScalar(c));
}

}  // namespace

TEST_CASE("sqrt2 scalars") {
  const SqrtTwoScalar r2 = SqrtTwoScalar::sqrt2();
  CHECK(r2 * r2 == SqrtTwoScalar(2));
  const SqrtTwoScalar u(Rational(3, 2), Rational(-1));
  CHECK((u / u) == SqrtTwoScalar(1));
  CHECK(((u * r2) / r2) == u);
  CHECK((u - u).is_zero());
  CHECK_THROWS_AS(u / SqrtTwoScalar(0), Error);
  CHECK(SqrtTwoScalar(Rational(10, 5)) == SqrtTwoScalar(2));
}

TEST_CASE("sl3 table") {
  Sl3Row h1{};
  h1[H1] = 1;
  CHECK(sl3_bracket(E1, F1) == h1);
  Sl3Row me{};
  me[Etheta] = -1;
  CHECK(sl3_bracket(E1, E2) == me);
  CHECK(sl3_bracket(E1, F2) == Sl3Row{});
  Sl3Row ft{};
  ft[Ftheta] = 1;
  CHECK(sl3_bracket(F1, F2) == ft);
  Sl3Row h2{};
  h2[H2] = 1;
  CHECK(sl3_bracket(E2, F2) == h2);
  for (int i : {E1, E2}) {
    Sl3Row m2{};
    m2[i] = -2;
    CHECK(sl3_bracket(i, i == E1 ? H1 : H2) == m2);
  }
  // (H1+H2, H1+H2) = 2
  CHECK(trace_form(H1, H1) + 2 * trace_form(H1, H2) + trace_form(H2, H2) == 2);
  for (int i = 0; i < kBasisSize; ++i)
    for (int j = 0; j < kBasisSize; ++j) {
      CHECK(trace_form(i, j) == trace_form(j, i));
      Sl3Row a = sl3_bracket(i, j), b = sl3_bracket(j, i);
      for (int k = 0; k < kBasisSize; ++k) CHECK(a[k] == -b[k]);
    }
}

TEST_CASE("loop bracket basics") {
  const LoopElement u = t(1, Etheta), v = t(-1, Ftheta);
  // [E_theta, F_theta]_0 = [-E13, -E31] = E11 - E33 = H1 + H2
  LoopElement expect = t(0, H1) + t(0, H2);
  expect += LoopElement::central(SqrtTwoScalar(trace_form(Etheta, Ftheta)));
  CHECK(bracket(u, v) == expect);
  CHECK(trace_form(Etheta, Ftheta) == 1);
  CHECK(bracket(u, u).is_zero());
  CHECK(bracket(t(0, H1), t(0, H2)).is_zero());
  CHECK(bracket(LoopElement::central(), u).is_zero());
}

TEST_CASE("root vectors and coroots") {
  const SqrtTwoScalar r2 = SqrtTwoScalar::sqrt2();
  CHECK(root_vector({Family::SU, 0}) ==
        LoopElement::term(0, E1, r2) + LoopElement::term(0, E2, r2));
  CHECK(root_vector({Family::LU, 0}) == t(1, Etheta));
  CHECK(bracket(root_vector({Family::SU, 0}), root_vector({Family::SU, 1})) ==
        SqrtTwoScalar(4) * root_vector({Family::LU, 0}));

  // Weights agree with the lattice coordinates.
  for (const RealRoot& r : real_roots_in_window(10)) {
    RootVector w;
    REQUIRE(homogeneous_weight(root_vector(r), w));
    CHECK(w == coords(kH41, r));
  }
  // Coroots act on x_alpha_j by the Cartan matrix.
  const RealRoot simple[2] = {{Family::LL, 0}, {Family::SU, 0}};
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      const LoopElement x = root_vector(simple[j - 1]);
      CHECK(bracket(coroot(i), x) == SqrtTwoScalar(kH41.cartan(i, j)) * x);
    }
}

TEST_CASE("x_alpha with x_-alpha gives the coroot") {
  for (const RealRoot& r : real_roots_in_window(10)) {
    const OracleResult o = oracle_n(r, negate(r));
    REQUIRE(o.tag == OracleResult::Tag::Coroot);
    CHECK(o.coroot == coroot_coords(kH41, r));
  }
  const OracleResult o = oracle_n({Family::SU, 0}, {Family::SL, -1});
  CHECK(o.coroot == CorootCoords{0, 1});
  CHECK(o.value == coroot(2));
}

TEST_CASE("oracle_n examples") {
  const OracleResult a = oracle_n({Family::SU, 0}, {Family::SU, 1});
  CHECK(a.tag == OracleResult::Tag::RealVector);
  CHECK(a.n == 4);
  CHECK(a.root == RealRoot{Family::LU, 0});

  // (SL0, SU0): weight alpha_1 + 2 alpha_2, value 2t(H2 - H1).
  const OracleResult b = oracle_n({Family::SL, 0}, {Family::SU, 0});
  CHECK(b.tag == OracleResult::Tag::ImaginarySpace);
  CHECK(b.weight == RootVector(1L, 2L));
  CHECK(b.value == t(1, H2, 2) + t(1, H1, -2));
}

TEST_CASE("chevalley involution") {
  for (const RealRoot& r : real_roots_in_window(8)) {
    CHECK(chevalley_involution(root_vector(r)) == -root_vector(negate(r)));
    CHECK(chevalley_involution(chevalley_involution(root_vector(r))) == root_vector(r));
  }
  CHECK(chevalley_involution(coroot(1)) == -coroot(1));
  CHECK(chevalley_involution(coroot(2)) == -coroot(2));
  // omega is an automorphism
  const auto roots = real_roots_in_window(4);
  for (const RealRoot& x : roots)
    for (const RealRoot& y : roots) {
      const LoopElement u = root_vector(x), v = root_vector(y);
      CHECK(chevalley_involution(bracket(u, v)) ==
            bracket(chevalley_involution(u), chevalley_involution(v)));
    }
}

TEST_CASE("jacobi identity, window 8") {
  const JacobiReport rep = jacobi_check(8);
  CHECK(rep.triples >= 10000);
  CHECK(rep.ok());
  for (const auto& s : rep.samples) MESSAGE(s);
}

TEST_CASE("weight additivity and magnitudes") {
  const auto roots = real_roots_in_window(10);
  for (const RealRoot& x : roots) {
    for (const RealRoot& y : roots) {
      const OracleResult o = oracle_n(x, y);  // throws on inhomogeneity
      if (o.tag != OracleResult::Tag::RealVector) continue;
      const bool short_short = !x.in_alpha1_orbit() && !y.in_alpha1_orbit();
      CHECK(abs(o.n) == (short_short ? 4 : 1));
      CHECK(abs(o.n) == root_string(kH41, x, y).p + 1);
      // x_-g = -omega(x_g) forces n(-x,-y) = -n(x,y).
      CHECK(oracle_n(negate(x), negate(y)).n == -o.n);
      CHECK(oracle_n(y, x).n == -o.n);
    }
  }
}

TEST_CASE("loop signs follow (-1)^r") {
  for (std::int64_t r = -10; r <= 10; ++r) {
    for (std::int64_t s = -10; s <= 10; ++s) {
      if ((r + s) % 2 == 0) continue;
      const long expect = (r % 2 == 0) ? 4 : -4;
      for (Family f : {Family::SU, Family::SL}) {
        const OracleResult o = oracle_n({f, r}, {f, s});
        REQUIRE(o.tag == OracleResult::Tag::RealVector);
        CHECK(o.n == expect);
      }
    }
  }
  for (std::int64_t i = -10; i <= 10; ++i)
    for (std::int64_t j = -10; j <= 10; ++j) {
      const long expect = (i % 2 == 0) ? -1 : 1;
      CHECK(oracle_n({Family::SL, i}, {Family::LU, j}).n == expect);
      CHECK(oracle_n({Family::SU, i}, {Family::LL, j}).n == expect);
    }
}

TEST_CASE("rescaled bases") {
  const auto roots = real_roots_in_window(8);
  auto real_pairs = [&] {
    std::vector<std::pair<RealRoot, RealRoot>> out;
    for (const RealRoot& x : roots)
      for (const RealRoot& y : roots)
        if (sum_class(kH41, x, y).is_real()) out.emplace_back(x, y);
    return out;
  }();
  const RescaledBasis id({});
  for (const auto& [x, y] : real_pairs) CHECK(id.n(x, y) == oracle_n(x, y).n);

  SUBCASE("flipping every short vector changes nothing") {
    std::map<RealRoot, int> rho;
    for (std::int64_t j = 0; j <= 30; ++j) {
      rho[{Family::SU, j}] = 1;
      rho[{Family::SL, j}] = 1;
    }
    const RescaledBasis rb(rho);
    for (const auto& [x, y] : real_pairs) CHECK(rb.n(x, y) == oracle_n(x, y).n);
  }
  SUBCASE("flipping LL1 touches exactly the brackets involving +-LL1") {
    const RealRoot ll1{Family::LL, 1};
    const RescaledBasis rb({{ll1, 1}});
    for (const auto& [x, y] : real_pairs) {
      const RealRoot s = oracle_n(x, y).root;
      auto hit = [&](const RealRoot& r) { return r == ll1 || r == negate(ll1); };
      const bool touched = hit(x) || hit(y) || hit(s);
      CHECK((rb.n(x, y) != oracle_n(x, y).n) == touched);
    }
    CHECK(rb.vector(negate(ll1)) == -root_vector(negate(ll1)));
  }
}
