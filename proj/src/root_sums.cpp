#include "rank2km/root_sums.hpp"

#include <algorithm>

namespace rank2km {
namespace {

std::int64_t string_bound(const CartanData& cd) {
  return 2 * std::max(cd.a(), cd.b()) + 4;
}

std::vector<RealTriple> mirrored(std::vector<RealTriple> ts) {
  for (RealTriple& t : ts) {
    t.alpha = mirror_root(t.alpha);
    t.beta = mirror_root(t.beta);
    t.gamma = mirror_root(t.gamma);
  }
  return ts;
}

std::int64_t max_abs_index(const RealTriple& t) {
  return std::max({std::abs(t.alpha.j), std::abs(t.beta.j), std::abs(t.gamma.j)});
}

}  // namespace

const char* sum_length_name(SumLength s) {
  switch (s) {
    case SumLength::SumLong: return "long";
    case SumLength::SumShort: return "short";
    case SumLength::SumNotReal: return "not_real";
  }
  return "?";
}

RealRoot mirror_root(const RealRoot& r) {
  switch (r.family) {
    case Family::LL: return {Family::SU, r.j};
    case Family::LU: return {Family::SL, r.j};
    case Family::SU: return {Family::LL, r.j};
    case Family::SL: return {Family::LU, r.j};
  }
  fail(ErrorCode::Invariant, "bad family");
}

RootClass sum_class(const CartanData& cd, const RealRoot& alpha,
                    const RealRoot& beta) {
  return classify(cd, coords(cd, alpha) + coords(cd, beta));
}

std::vector<RealRoot> sums_with_simple(const CartanData& cd, int i, int sign) {
  if (cd.b() != 1 || cd.a() <= 4)
    fail(ErrorCode::Unsupported, "sums with simple roots need H(a,1), a > 4");
  require(i == 1 || i == 2, "simple root index must be 1 or 2");
  require(sign == 1 || sign == -1, "sign must be +1 or -1");
  if (i == 1)
    return sign > 0 ? std::vector<RealRoot>{{Family::SU, 0}}    // alpha_2
                    : std::vector<RealRoot>{{Family::SL, 0}};   // alpha_1 + alpha_2
  // alpha_1 and alpha_1 + (a-1) alpha_2; then alpha_1 + alpha_2, alpha_1 + a alpha_2
  return sign > 0 ? std::vector<RealRoot>{{Family::LL, 0}, {Family::SU, 1}}
                  : std::vector<RealRoot>{{Family::SL, 0}, {Family::LU, 0}};
}

std::vector<RealTriple> triples(const CartanData& cd, std::int64_t lo,
                                std::int64_t hi) {
  std::vector<RealTriple> out;
  if (cd.a() == 1 && cd.b() >= 4)
    return mirrored(triples(CartanData(cd.b(), 1), lo, hi));
  if (cd.b() != 1) return out;
  if (cd.a() > 4) {
    for (std::int64_t j = lo; j <= hi; ++j) {
      out.push_back({{Family::SU, j}, {Family::SU, j + 1},
                     negate({Family::LU, j})});
      out.push_back({{Family::SL, j}, {Family::SL, j + 1},
                     negate({Family::LL, j + 1})});
    }
    return out;
  }
  for (std::int64_t k = lo; k <= hi; ++k)
    for (std::int64_t j = lo; j <= k; ++j) {
      out.push_back({{Family::SU, j}, {Family::SU, 2 * k + 1 - j},
                     negate({Family::LU, k})});
      out.push_back({{Family::SL, j}, {Family::SL, 2 * k + 1 - j},
                     negate({Family::LL, k + 1})});
    }
  return out;
}

std::vector<RealTriple> triples_in_window(const CartanData& cd,
                                          std::int64_t window) {
  require(window >= 0, "window must be nonnegative");
  std::vector<RealTriple> out;
  if (cd.a() == 1 && cd.b() >= 4)
    return mirrored(triples_in_window(CartanData(cd.b(), 1), window));
  if (cd.b() != 1) return out;
  if (cd.a() > 4) {
    for (const RealTriple& t : triples(cd, -window - 2, window + 1))
      if (max_abs_index(t) <= window) out.push_back(t);
    return out;
  }
  // j ranges over the window directly; k is pinned by the long member.
  for (std::int64_t k = -window - 2; k <= window + 1; ++k)
    for (std::int64_t j = -window; j <= k; ++j)
      for (const RealTriple& t :
           {RealTriple{{Family::SU, j}, {Family::SU, 2 * k + 1 - j},
                       negate({Family::LU, k})},
            RealTriple{{Family::SL, j}, {Family::SL, 2 * k + 1 - j},
                       negate({Family::LL, k + 1})}})
        if (max_abs_index(t) <= window) out.push_back(t);
  return out;
}

std::vector<std::pair<RealRoot, RealRoot>> real_sum_pairs(const CartanData& cd,
                                                          std::int64_t window) {
  const std::vector<RealRoot> roots = real_roots_in_window(window);
  std::vector<RootVector> vecs;
  vecs.reserve(roots.size());
  for (const RealRoot& r : roots) vecs.push_back(coords(cd, r));
  std::vector<std::pair<RealRoot, RealRoot>> out;
  RootVector sum;
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t k = 0; k < roots.size(); ++k) {
      sum.x = vecs[i].x + vecs[k].x;
      sum.y = vecs[i].y + vecs[k].y;
      if (classify(cd, sum).is_real()) out.emplace_back(roots[i], roots[k]);
    }
  return out;
}

std::vector<std::pair<RealRoot, RealRoot>> predicted_sum_pairs(
    const CartanData& cd, std::int64_t window) {
  // The third member of a triple has index at most about 3x the others.
  std::vector<std::pair<RealRoot, RealRoot>> out;
  for (const RealTriple& t : triples_in_window(cd, 3 * window + 4)) {
    const RealRoot m[3] = {t.alpha, t.beta, t.gamma};
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k)
        if (i != k && std::abs(m[i].j) <= window && std::abs(m[k].j) <= window)
          out.emplace_back(m[i], m[k]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

RootString root_string(const CartanData& cd, const RealRoot& alpha,
                       const RealRoot& beta) {
  require(beta != alpha && beta != negate(alpha),
          "root string needs beta != +-alpha");
  const RootVector a = coords(cd, alpha);
  const RootVector b = coords(cd, beta);
  const Integer m = pairing(cd, b, alpha);
  const std::int64_t bound = string_bound(cd);
  // Steps from b in direction dir (+-1) before leaving the root set.
  auto scan = [&](int dir) {
    RootVector v = b;
    for (std::int64_t k = 1; k <= bound + 1; ++k) {
      v = dir > 0 ? v + a : v - a;
      if (!classify(cd, v).is_root()) return k - 1;
    }
    fail(ErrorCode::Invariant, "root string through " + to_string(beta) +
                                   " in direction " + to_string(alpha) +
                                   " exceeds the scan bound");
  };
  RootString s;
  if (sgn(m) >= 0) {
    s.q = scan(+1);
    s.p = s.q + m;
  } else {
    s.p = scan(-1);
    s.q = s.p - m;
  }
  // The far end must be a root and the next step beyond it must not be.
  const Integer far = sgn(m) >= 0 ? Integer(-s.p) : s.q;
  const Integer step = sgn(m) >= 0 ? Integer(-1) : Integer(1);
  ensure(classify(cd, b + far * a).is_root() &&
             !classify(cd, b + (far + step) * a).is_root(),
         "root string through " + to_string(beta) + " is not symmetric");
  return s;
}

SumLength sum_length_rule(const CartanData& cd, const RealRoot& alpha,
                          const RealRoot& beta) {
  if (!sum_class(cd, alpha, beta).is_real()) return SumLength::SumNotReal;
  const bool sa = is_short(cd, alpha);
  const bool sb = is_short(cd, beta);
  if (sa && sb) return SumLength::SumLong;
  if (sa || sb) return SumLength::SumShort;
  return SumLength::SumNotReal;
}

}  // namespace rank2km
