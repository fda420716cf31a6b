#include "doctest.h"

#include "rank2km/root_sums.hpp"

#include <random>
#include <set>

using namespace rank2km;

namespace {

using Pair = std::pair<RealRoot, RealRoot>;

std::set<Pair> pairs_from_triples(const std::vector<RealTriple>& ts) {
  std::set<Pair> out;
  for (const RealTriple& t : ts) {
    const RealRoot m[3] = {t.alpha, t.beta, t.gamma};
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k)
        if (i != k) out.insert({m[i], m[k]});
  }
  return out;
}

RealRoot random_root(std::mt19937_64& rng, int window) {
  return {kFamilies[rng() % 4],
          static_cast<std::int64_t>(rng() % (2 * window + 1)) - window};
}

}  // namespace

TEST_CASE("sum_class examples") {
  CartanData cd(5, 1);
  CHECK(sum_class(cd, {Family::SU, 0}, {Family::LL, 0}) ==
        RootClass::real({Family::SL, 0}));
  for (Family f : kFamilies)
    for (int j = -5; j <= 5; ++j)
      CHECK(sum_class(cd, {f, j}, negate({f, j})).tag == RootClass::Tag::Zero);
}

TEST_CASE("no real sums when a, b > 1") {
  for (auto [a, b] : std::vector<std::pair<long, long>>{
           {2, 2}, {3, 2}, {2, 3}, {5, 5}, {7, 3}}) {
    CartanData cd(a, b);
    CHECK(real_sum_pairs(cd, 15).empty());
    CHECK(triples(cd, -5, 5).empty());
  }
}

TEST_CASE("sums with simple roots match a scan") {
  for (long a : {5L, 6L, 9L}) {
    CartanData cd(a, 1);
    for (int i : {1, 2})
      for (int sign : {1, -1}) {
        const RootVector simple = i == 1 ? RootVector::alpha1() : RootVector::alpha2();
        std::set<RealRoot> scanned;
        for (Family f : kFamilies)
          for (int j = 0; j <= 20; ++j) {
            const RootVector v = coords(cd, {f, j});
            if (classify(cd, sign > 0 ? v + simple : v - simple).is_real())
              scanned.insert({f, j});
          }
        const auto got = sums_with_simple(cd, i, sign);
        CHECK(std::set<RealRoot>(got.begin(), got.end()) == scanned);
      }
  }
  CartanData cd(5, 1);
  CHECK(coords(cd, {Family::SU, 1}) == RootVector(1L, 4L));
  CHECK(coords(cd, {Family::LU, 0}) == RootVector(1L, 5L));
  CHECK_THROWS_AS(sums_with_simple(CartanData(4, 1), 1, 1), Error);
}

TEST_CASE("triple examples") {
  CHECK(triples(CartanData(2, 2), -3, 3).empty());
  const auto t5 = triples(CartanData(5, 1), 0, 0);
  CHECK(t5.front() == RealTriple{{Family::SU, 0}, {Family::SU, 1}, {Family::LL, -1}});
  const auto t4 = triples(CartanData(4, 1), 0, 1);
  CHECK(std::find(t4.begin(), t4.end(),
                  RealTriple{{Family::SU, 0}, {Family::SU, 3},
                             negate({Family::LU, 1})}) != t4.end());
}

TEST_CASE("triples sum to zero") {
  for (auto [a, b] : std::vector<std::pair<long, long>>{
           {5, 1}, {6, 1}, {4, 1}, {1, 5}, {1, 4}}) {
    CartanData cd(a, b);
    for (const RealTriple& t : triples(cd, -6, 6))
      CHECK((coords(cd, t.alpha) + coords(cd, t.beta) + coords(cd, t.gamma))
                .is_zero());
  }
}

TEST_CASE("window scan equals the predicted triples") {
  for (auto [a, b] : std::vector<std::pair<long, long>>{
           {5, 1}, {6, 1}, {9, 1}, {4, 1}, {1, 5}, {1, 4}}) {
    CartanData cd(a, b);
    const auto scanned = real_sum_pairs(cd, 15);
    const std::set<Pair> found(scanned.begin(), scanned.end());
    CHECK(found.size() == scanned.size());
    const auto predicted = predicted_sum_pairs(cd, 15);
    CHECK(found == std::set<Pair>(predicted.begin(), predicted.end()));
    // Triples entirely inside the window contribute all six orderings.
    for (const Pair& p : pairs_from_triples(triples_in_window(cd, 15)))
      CHECK(found.count(p) == 1);
    CHECK(!found.empty());
  }
}

TEST_CASE("root string examples") {
  CartanData h51(5, 1);
  CHECK(root_string(h51, {Family::SU, 0}, {Family::SU, 1}) == RootString{4, 1});
  CHECK(root_string(CartanData(4, 1), {Family::SU, 0}, {Family::SU, 1}).p == 3);
  CHECK(root_string(h51, {Family::SU, 0}, {Family::LL, -1}).p == 0);
  CHECK_THROWS_AS(root_string(h51, {Family::SU, 0}, {Family::SU, 0}), Error);
  CHECK_THROWS_AS(root_string(h51, {Family::SU, 0}, {Family::SL, -1}), Error);
}

TEST_CASE("root strings: p - q, unbrokenness, equivariance") {
  std::mt19937_64 rng(13);
  for (auto [a, b] : std::vector<std::pair<long, long>>{
           {5, 1}, {4, 1}, {2, 2}, {3, 2}, {7, 3}, {5, 5}}) {
    CartanData cd(a, b);
    int done = 0;
    while (done < 200) {
      const RealRoot al = random_root(rng, 10), be = random_root(rng, 10);
      if (be == al || be == negate(al)) continue;
      ++done;
      const RootString s = root_string(cd, al, be);
      CHECK(s.p - s.q == pairing(cd, coords(cd, be), al));
      if (s.p + s.q > 200) continue;
      for (Integer k = -s.p; k <= s.q; ++k)
        CHECK(classify(cd, coords(cd, be) + k * coords(cd, al)).is_root());
    }
    for (int t = 0; t < 50; ++t) {
      RealRoot al = random_root(rng, 6), be = random_root(rng, 6);
      if (be == al || be == negate(al)) continue;
      const RootString s = root_string(cd, al, be);
      const int len = static_cast<int>(rng() % 9);
      for (int i = 0; i < len; ++i) {
        const RealRoot mirror = rng() % 2 ? RealRoot{Family::LL, 0}
                                          : RealRoot{Family::SU, 0};
        al = reflect_in(mirror, al);
        be = reflect_in(mirror, be);
      }
      CHECK(root_string(cd, al, be) == s);
    }
  }
}

TEST_CASE("sum length rule") {
  CartanData h51(5, 1);
  CHECK(sum_length_rule(h51, {Family::SU, 0}, {Family::SU, 1}) == SumLength::SumLong);
  CHECK(sum_length_rule(h51, {Family::SU, 0}, {Family::LL, 0}) == SumLength::SumShort);
  CHECK(sum_length_rule(h51, {Family::LL, 0}, {Family::LU, 0}) == SumLength::SumNotReal);
  for (auto [a, b] : std::vector<std::pair<long, long>>{{5, 1}, {6, 1}, {4, 1}}) {
    CartanData cd(a, b);
    for (const auto& [al, be] : real_sum_pairs(cd, 12)) {
      const RootClass s = sum_class(cd, al, be);
      const SumLength rule = sum_length_rule(cd, al, be);
      CHECK(rule != SumLength::SumNotReal);
      CHECK((rule == SumLength::SumLong) == is_long(cd, s.root));
    }
  }
}
