#include "rank2km/subsystems.hpp"

#include "rank2km/root_sums.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace rank2km {
namespace {

constexpr std::int64_t kMaxGeneratorIndex = std::int64_t{1} << 60;

std::int64_t floor_mod(std::int64_t x, std::int64_t m) {
  const std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

// Long orbit index l sits at 2l, short index s at -2s-1. Every reflection
// then acts as P -> 2M - P, so the orbit of a position set G is g + DZ with
// D the gcd of the differences.
std::int64_t position(const RealRoot& r) {
  require(std::abs(r.j) < kMaxGeneratorIndex, "generator index too large");
  const std::int64_t i = orbit_index(r);
  return r.in_alpha1_orbit() ? 2 * i : -2 * i - 1;
}

std::vector<std::vector<Integer>> cartan_of(const CartanData& cd,
                                            const std::vector<RealRoot>& basis) {
  std::vector<std::vector<Integer>> m(basis.size(),
                                      std::vector<Integer>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j)
      m[i][j] = pairing(cd, coords(cd, basis[j]), basis[i]);
  return m;
}

std::vector<std::vector<Rational>> gram_of(const CartanData& cd,
                                           const std::vector<RealRoot>& basis) {
  std::vector<std::vector<Rational>> m(basis.size(),
                                       std::vector<Rational>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j)
      m[i][j] = inner_product(cd, coords(cd, basis[i]), coords(cd, basis[j]));
  return m;
}

SubsystemDescriptor from_sets(const CartanData& cd, const IndexSets& sets) {
  SubsystemDescriptor s;
  s.sets = sets;
  const ArithSet& L = sets.long_set;
  const ArithSet& S = sets.short_set;
  if (!L.empty && !S.empty) {
    ensure(L.d == S.d && L.d % 2 == 1, "mixed index sets need equal odd moduli");
    s.shape = Shape::II_LS;
    s.d = (L.d - 1) / 2;
    s.r = L.r > s.d ? L.r - L.d : L.r;
    ensure(floor_mod(s.d - s.r, L.d) == S.r, "mixed residues out of step");
    s.simple_roots = {{Family::LL, s.r}, {Family::SU, s.d - s.r}};
  } else if (!L.empty) {
    s.r = L.r;
    s.d = L.d;
    if (L.d == 0) {
      s.shape = Shape::I_L;
      s.simple_roots = {{Family::LL, s.r}};
    } else {
      s.shape = Shape::II_L;
      s.simple_roots = {{Family::LL, s.r}, {Family::LU, s.d - s.r - 1}};
    }
  } else {
    ensure(!S.empty, "empty subsystem");
    s.r = S.r;
    s.d = S.d;
    if (S.d == 0) {
      s.shape = Shape::I_S;
      s.simple_roots = {{Family::SU, s.r}};
    } else {
      s.shape = Shape::II_S;
      s.simple_roots = {{Family::SU, s.r}, {Family::SL, s.d - s.r - 1}};
    }
  }
  s.cartan = cartan_of(cd, s.simple_roots);
  s.inner_product = gram_of(cd, s.simple_roots);
  return s;
}

}  // namespace

bool ArithSet::contains(std::int64_t j) const {
  if (empty) return false;
  if (d == 0) return j == r;
  return floor_mod(j - r, d) == 0;
}

const char* shape_name(Shape s) {
  switch (s) {
    case Shape::I_L: return "I_L";
    case Shape::I_S: return "I_S";
    case Shape::II_L: return "II_L";
    case Shape::II_S: return "II_S";
    case Shape::II_LS: return "II_LS";
  }
  return "?";
}

std::int64_t orbit_index(const RealRoot& r) {
  return r.family == Family::LL || r.family == Family::SU ? r.j : -r.j - 1;
}

bool subsystem_contains(const SubsystemDescriptor& s, const RealRoot& r) {
  const ArithSet& set = r.in_alpha1_orbit() ? s.sets.long_set : s.sets.short_set;
  return set.contains(orbit_index(r));
}

std::vector<RealRoot> subsystem_roots(const SubsystemDescriptor& s,
                                      std::int64_t window) {
  std::vector<RealRoot> out;
  for (const RealRoot& r : real_roots_in_window(window))
    if (subsystem_contains(s, r)) out.push_back(r);
  std::sort(out.begin(), out.end());
  return out;
}

Integer delta_d(const CartanData& cd, std::int64_t d) {
  require(d >= 1, "delta_d needs d >= 1");
  return eta(cd, d) - eta(cd, d - 1);
}

Integer eps_d(const CartanData& cd, std::int64_t d) {
  require(d >= 0, "eps_d needs d >= 0");
  return gamma(cd, d + 1) - gamma(cd, d);
}

Rational inner_product(const CartanData& cd, const RootVector& u,
                       const RootVector& v) {
  const Integer scaled = 2 * cd.a() * u.x * v.x - cd.ab() * (u.x * v.y + u.y * v.x) +
                         2 * cd.b() * u.y * v.y;
  Rational r(scaled, Integer(cd.b()));
  r.canonicalize();
  return r;
}

IndexSets index_sets(const CartanData&, const std::vector<RealRoot>& gens) {
  require(!gens.empty(), "generator set must be nonempty");
  std::vector<std::int64_t> pos;
  pos.reserve(gens.size());
  for (const RealRoot& g : gens) pos.push_back(position(g));
  const std::int64_t g0 = pos.front();
  std::int64_t D = 0;
  for (std::int64_t p : pos) D = std::gcd(D, p - g0 < 0 ? g0 - p : p - g0);

  IndexSets out;
  if (D == 0) {
    if (g0 % 2 == 0)
      out.long_set = ArithSet::arith(g0 / 2, 0);
    else
      out.short_set = ArithSet::arith((-g0 - 1) / 2, 0);
  } else if (D % 2 == 0) {
    const std::int64_t d = D / 2;
    if (floor_mod(g0, 2) == 0)
      out.long_set = ArithSet::arith(floor_mod(g0 / 2, d), d);
    else
      out.short_set = ArithSet::arith(floor_mod((-g0 - 1) / 2, d), d);
  } else {
    // Positions of both parities: solve 2l = g0 and -2s-1 = g0 modulo D.
    const __int128 half = (D + 1) / 2;
    const std::int64_t l = static_cast<std::int64_t>(
        (static_cast<__int128>(floor_mod(g0, D)) * half) % D);
    const std::int64_t s = static_cast<std::int64_t>(
        (static_cast<__int128>(floor_mod(-g0 - 1, D)) * half) % D);
    out.long_set = ArithSet::arith(l, D);
    out.short_set = ArithSet::arith(s, D);
  }
  return out;
}

SubsystemDescriptor phi_subsystem(const CartanData& cd,
                                  const std::vector<RealRoot>& gens) {
  return from_sets(cd, index_sets(cd, gens));
}

SubsystemDescriptor delta_re_subsystem(const CartanData& cd,
                                       const std::vector<RealRoot>& gens) {
  if (cd.a() < cd.b()) {
    std::vector<RealRoot> swapped;
    for (const RealRoot& g : gens) swapped.push_back(mirror_root(g));
    const SubsystemDescriptor m =
        delta_re_subsystem(CartanData(cd.b(), cd.a()), swapped);
    std::vector<RealRoot> basis;
    for (const RealRoot& r : m.simple_roots) basis.push_back(mirror_root(r));
    return phi_subsystem(cd, basis);
  }
  SubsystemDescriptor phi = phi_subsystem(cd, gens);
  if (phi.shape != Shape::II_S || cd.b() != 1) return phi;
  if (cd.a() > 4 && phi.d == 1)
    // All short roots already span the whole root lattice.
    return phi_subsystem(cd, {{Family::LL, 0}, {Family::SU, 0}});
  if (cd.a() == 4 && phi.d % 2 == 1) {
    const std::int64_t e = (phi.d - 1) / 2;
    std::int64_t s = floor_mod(e - phi.r, phi.d);
    if (s > e) s -= phi.d;
    return phi_subsystem(cd, {{Family::LL, s}, {Family::SU, e - s}});
  }
  return phi;
}

std::vector<RealRoot> phi_closure_oracle(const CartanData&,
                                         const std::vector<RealRoot>& gens,
                                         std::int64_t bound) {
  require(!gens.empty(), "generator set must be nonempty");
  for (const RealRoot& g : gens)
    require(std::abs(g.j) <= bound, "closure bound below a generator index");
  std::set<RealRoot> found(gens.begin(), gens.end());
  std::vector<RealRoot> list(found.begin(), found.end());
  std::vector<RealRoot> work = list;
  auto add = [&](const RealRoot& r) {
    if (std::abs(r.j) <= bound && found.insert(r).second) {
      list.push_back(r);
      work.push_back(r);
    }
  };
  while (!work.empty()) {
    const RealRoot n = work.back();
    work.pop_back();
    const std::size_t known = list.size();
    for (std::size_t i = 0; i < known; ++i) {
      const RealRoot m = list[i];
      add(reflect_in(n, m));
      add(reflect_in(m, n));
    }
  }
  return {found.begin(), found.end()};
}

Lattice2::Lattice2(const std::vector<RootVector>& gens) {
  // Row one collects the gcd of the first coordinates; everything with first
  // coordinate zero folds into h22.
  Integer r1x = 0, r1y = 0;
  for (const RootVector& v : gens) {
    if (sgn(v.x) == 0) {
      h22_ = gcd(h22_, v.y);
      continue;
    }
    if (sgn(r1x) == 0) {
      r1x = v.x;
      r1y = v.y;
      continue;
    }
    Integer g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), r1x.get_mpz_t(),
               v.x.get_mpz_t());
    const Integer nx = s * r1x + t * v.x;
    const Integer ny = s * r1y + t * v.y;
    // Kernel combination has first coordinate zero.
    const Integer ky = (v.x / g) * r1y - (r1x / g) * v.y;
    h22_ = gcd(h22_, ky);
    r1x = nx;
    r1y = ny;
  }
  if (sgn(r1x) < 0) {
    r1x = -r1x;
    r1y = -r1y;
  }
  h11_ = r1x;
  h12_ = sgn(h22_) != 0 ? Integer(r1y % h22_) : r1y;
}

bool Lattice2::contains(const RootVector& v) const {
  if (sgn(h11_) == 0) return sgn(v.x) == 0 && divides(h22_, v.y);
  if (!divides(h11_, v.x)) return false;
  const Integer t = v.x / h11_;
  return divides(h22_, v.y - t * h12_);
}

bool delta_re_membership_oracle(const CartanData& cd,
                                const std::vector<RealRoot>& gens,
                                const RealRoot& candidate) {
  std::vector<RootVector> vecs;
  for (const RealRoot& g : gens) vecs.push_back(coords(cd, g));
  return Lattice2(vecs).contains(coords(cd, candidate));
}

bool DivisibilityReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const IdentityCheck& c) { return c.failed == 0; });
}

DivisibilityReport divisibility_suite(const CartanData& cd, std::int64_t d_max,
                                      std::int64_t j_max) {
  require(d_max >= 0 && j_max >= 0, "bounds must be nonnegative");
  // Tables over the full index range any identity touches.
  const std::int64_t lo = -j_max - 2 * d_max - 3;
  const std::int64_t hi = j_max + 2 * d_max + 3;
  std::vector<Integer> g, e;
  for (std::int64_t k = lo; k <= hi; ++k) {
    g.push_back(gamma(cd, k));
    e.push_back(eta(cd, k));
  }
  auto G = [&](std::int64_t k) -> const Integer& { return g[k - lo]; };
  auto E = [&](std::int64_t k) -> const Integer& { return e[k - lo]; };
  // Defined for every integer, not only small d.
  auto dl = [&](std::int64_t k) { return Integer(E(k) - E(k - 1)); };
  auto ep = [&](std::int64_t k) { return Integer(G(k + 1) - G(k)); };
  auto in_class = [](std::int64_t j, std::int64_t r, std::int64_t m) {
    return m == 0 ? j == r : floor_mod(j - r, m) == 0;
  };

  DivisibilityReport rep;
  auto check = [&](std::size_t idx, bool ok) {
    ++rep.checks[idx].checked;
    if (!ok) ++rep.checks[idx].failed;
  };
  rep.checks = {
      {"gamma_d*delta_(j-d) = gamma_j - gamma_(j-2d)"},
      {"eta_d*eps_(j-d-1) = gamma_j - gamma_(j-2d-1)"},
      {"eta_d*delta_(j-d) = eta_j - eta_(j-2d-1)"},
      {"ab*gamma_d*eps_(j-d) = eta_j - eta_(j-2d)"},
      {"gcd(a,eta_j) = gcd(b,eta_j) = 1"},
      {"gamma_d | gamma_j iff j in dZ"},
      {"eta_d | gamma_j iff j in (2d+1)Z"},
      {"eta_d | eta_j iff j in d+(2d+1)Z"},
      {"gamma_d | eta_j iff d = 1 (ab > 4)"},
      {"gamma_d | eta_j iff d = 2e+1, j in e+(2e+1)Z (ab = 4)"},
  };
  const Integer A(cd.a()), B(cd.b());
  for (std::int64_t j = -j_max; j <= j_max; ++j) {
    check(4, gcd(A, E(j)) == 1 && gcd(B, E(j)) == 1);
    for (std::int64_t d = 0; d <= d_max; ++d) {
      check(0, G(d) * dl(j - d) == G(j) - G(j - 2 * d));
      check(1, E(d) * ep(j - d - 1) == G(j) - G(j - 2 * d - 1));
      check(2, E(d) * dl(j - d) == E(j) - E(j - 2 * d - 1));
      check(3, cd.ab() * G(d) * ep(j - d) == E(j) - E(j - 2 * d));
      check(5, divides(G(d), G(j)) == in_class(j, 0, d));
      check(6, divides(E(d), G(j)) == in_class(j, 0, 2 * d + 1));
      check(7, divides(E(d), E(j)) == in_class(j, d, 2 * d + 1));
      if (cd.ab() > 4) {
        check(8, divides(G(d), E(j)) == (d == 1));
      } else {
        const bool odd = d % 2 == 1;
        check(9, divides(G(d), E(j)) == (odd && in_class(j, (d - 1) / 2, d)));
      }
    }
  }
  return rep;
}

std::vector<SubsystemDescriptor> infinite_family(const CartanData& cd,
                                                 FamilyKind kind,
                                                 std::int64_t count) {
  if (cd.kind() != CartanKind::Hyperbolic)
    fail(ErrorCode::Unsupported, "infinite families need a hyperbolic system");
  require(count >= 0, "count must be nonnegative");
  if (kind == FamilyKind::NonSymmetric)
    require(cd.a() != cd.b(), "non-symmetric families need a != b");
  std::vector<SubsystemDescriptor> out;
  for (std::int64_t d = 1; d <= count; ++d) {
    if (kind == FamilyKind::Symmetric)
      out.push_back(phi_subsystem(cd, {{Family::SU, 0}, {Family::SL, d - 1}}));
    else
      out.push_back(phi_subsystem(cd, {{Family::LL, 0}, {Family::SU, d}}));
  }
  return out;
}

}  // namespace rank2km
