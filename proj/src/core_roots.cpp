#include "rank2km/core_roots.hpp"

#include <limits>
#include <utility>

namespace rank2km {
namespace {

constexpr std::int64_t kMaxIndex = std::int64_t{1} << 62;

void check_index(std::int64_t j) {
  require(j > -kMaxIndex && j < kMaxIndex, "root index out of range");
}

// (U_n, U_{n+1}) of the Lucas sequence U(P, 1), n >= 0, by fast doubling:
//   U_{2k} = U_k (2 U_{k+1} - P U_k),  U_{2k+1} = U_{k+1}^2 - U_k^2.
std::pair<Integer, Integer> lucas_pair(long p, std::uint64_t n) {
  Integer u = 0;
  Integer v = 1;
  int top = 63;
  while (top >= 0 && ((n >> top) & 1U) == 0) --top;
  for (int bit = top; bit >= 0; --bit) {
    Integer even = u * (2 * v - p * u);
    Integer odd = v * v - u * u;
    if ((n >> bit) & 1U) {
      u = odd;
      v = p * odd - even;
    } else {
      u = std::move(even);
      v = std::move(odd);
    }
  }
  return {std::move(u), std::move(v)};
}

// (gamma_j, gamma_{j+1}) for any j, using gamma_{-j} = -gamma_j.
std::pair<Integer, Integer> gamma_pair(const CartanData& cd, std::int64_t j) {
  check_index(j);
  const long p = cd.ab() - 2;
  if (j >= 0) return lucas_pair(p, static_cast<std::uint64_t>(j));
  auto [lo, hi] = lucas_pair(p, static_cast<std::uint64_t>(-j - 1));
  return {-hi, -lo};
}

// Smallest j >= 0 with eta_j >= value (value >= 1); eta is strictly
// increasing on j >= 0 whenever ab >= 4.
std::int64_t eta_lower_bound(const CartanData& cd, const Integer& value) {
  std::int64_t hi = 1;
  while (eta(cd, hi) < value) hi *= 2;
  std::int64_t lo = 0;
  while (lo < hi) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (eta(cd, mid) < value)
      lo = mid + 1;
    else
      hi = mid;
  }
  return lo;
}

// Matches a positive vector (x, y >= 0, nonzero) against the positive parts
// of the four sequences.
std::optional<RealRoot> match_positive(const CartanData& cd, const Integer& x,
                                       const Integer& y, bool try_alpha1_orbit,
                                       bool try_alpha2_orbit) {
  if (try_alpha1_orbit && sgn(x) > 0) {
    const std::int64_t j = eta_lower_bound(cd, x);
    auto [g0, g1] = gamma_pair(cd, j);
    if (g0 + g1 == x) {
      if (y == cd.a() * g0) return RealRoot{Family::LL, j};
      if (y == cd.a() * g1) return RealRoot{Family::LU, j};
    }
  }
  if (try_alpha2_orbit && sgn(y) > 0) {
    const std::int64_t j = eta_lower_bound(cd, y);
    auto [g0, g1] = gamma_pair(cd, j);
    if (g0 + g1 == y) {
      if (x == cd.b() * g0) return RealRoot{Family::SU, j};
      if (x == cd.b() * g1) return RealRoot{Family::SL, j};
    }
  }
  return std::nullopt;
}

struct OrbitForm {
  bool alpha1_orbit;
  std::int64_t index;
  int sign;
};

OrbitForm orbit_form(const RealRoot& r) {
  switch (r.family) {
    case Family::LL: return {true, r.j, +1};
    case Family::LU: return {true, -r.j - 1, -1};
    case Family::SU: return {false, r.j, +1};
    case Family::SL: return {false, -r.j - 1, -1};
  }
  fail(ErrorCode::Invariant, "bad family");
}

RealRoot from_orbit_form(const OrbitForm& o) {
  if (o.alpha1_orbit)
    return o.sign > 0 ? RealRoot{Family::LL, o.index}
                      : RealRoot{Family::LU, -o.index - 1};
  return o.sign > 0 ? RealRoot{Family::SU, o.index}
                    : RealRoot{Family::SL, -o.index - 1};
}

}  // namespace

CartanData::CartanData(long a, long b) : a_(a), b_(b) {
  require(a >= 1 && b >= 1, "Cartan parameters a, b must be positive");
  require(a <= (1L << 20) && b <= (1L << 20), "Cartan parameters too large");
  require(a * b >= 4, "H(a,b) with ab < 4 is of finite type (need ab >= 4)");
  kind_ = a * b == 4 ? CartanKind::Affine : CartanKind::Hyperbolic;
}

long CartanData::cartan(int i, int j) const {
  require(i >= 1 && i <= 2 && j >= 1 && j <= 2, "Cartan index out of range");
  if (i == j) return 2;
  return i == 1 ? -b_ : -a_;
}

long CartanData::scaled_form(int i, int j) const {
  require(i >= 1 && i <= 2 && j >= 1 && j <= 2, "form index out of range");
  if (i == 1 && j == 1) return 2 * a_;
  if (i == 2 && j == 2) return 2 * b_;
  return -a_ * b_;
}

const char* family_name(Family f) {
  switch (f) {
    case Family::LL: return "LL";
    case Family::LU: return "LU";
    case Family::SU: return "SU";
    case Family::SL: return "SL";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : kFamilies)
    if (name == family_name(f)) return f;
  return std::nullopt;
}

std::string to_string(const RealRoot& r) {
  return std::string(family_name(r.family)) + ":" + std::to_string(r.j);
}

RealRoot parse_root(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos)
    fail(ErrorCode::Parse, "root spec must look like FAMILY:j, got '" +
                               std::string(spec) + "'");
  const auto fam = parse_family(spec.substr(0, colon));
  if (!fam)
    fail(ErrorCode::Parse,
         "unknown root family in '" + std::string(spec) + "'");
  const Integer j = parse_integer(std::string(spec.substr(colon + 1)));
  if (!j.fits_slong_p() || abs(j) >= kMaxIndex)
    fail(ErrorCode::Parse, "root index out of range in '" + std::string(spec) + "'");
  return {*fam, static_cast<std::int64_t>(j.get_si())};
}

bool is_long(const CartanData& cd, const RealRoot& r) {
  return cd.symmetric() || r.in_alpha1_orbit();
}

bool is_short(const CartanData& cd, const RealRoot& r) {
  return !is_long(cd, r);
}

const char* tag_name(RootClass::Tag t) {
  switch (t) {
    case RootClass::Tag::Real: return "real";
    case RootClass::Tag::Imaginary: return "imaginary";
    case RootClass::Tag::NotARoot: return "not_a_root";
    case RootClass::Tag::Zero: return "zero";
  }
  return "?";
}

GrowthEstimates growth_estimates(const CartanData& cd) {
  if (cd.kind() != CartanKind::Hyperbolic)
    fail(ErrorCode::Unsupported, "growth estimates need ab > 4");
  const mpf_class x(cd.ab(), kGrowthPrecisionBits);
  const mpf_class root(sqrt(mpf_class(x * (x - 4), kGrowthPrecisionBits)),
                       kGrowthPrecisionBits);
  GrowthEstimates g{mpf_class(0, kGrowthPrecisionBits),
                    mpf_class(0, kGrowthPrecisionBits),
                    mpf_class(0, kGrowthPrecisionBits),
                    mpf_class(0, kGrowthPrecisionBits)};
  g.psi_plus = ((x - 2) + root) / 2;
  g.psi_minus = ((x - 2) - root) / 2;
  g.lambda = g.psi_plus / (g.psi_plus - 1);
  g.mu = 1 / root;
  return g;
}

Integer gamma(const CartanData& cd, std::int64_t j) {
  return gamma_pair(cd, j).first;
}

Integer eta(const CartanData& cd, std::int64_t j) {
  // eta_j = gamma_j + gamma_{j+1}
  auto [g0, g1] = gamma_pair(cd, j);
  return g0 + g1;
}

RootVector coords(const CartanData& cd, const RealRoot& r) {
  auto [g0, g1] = gamma_pair(cd, r.j);
  Integer e = g0 + g1;
  switch (r.family) {
    case Family::LL: return {std::move(e), cd.a() * g0};
    case Family::LU: return {std::move(e), cd.a() * g1};
    case Family::SU: return {cd.b() * g0, std::move(e)};
    case Family::SL: return {cd.b() * g1, std::move(e)};
  }
  fail(ErrorCode::Invariant, "bad family");
}

Integer q_form(const CartanData& cd, const RootVector& v) {
  return cd.a() * v.x * v.x - cd.ab() * v.x * v.y + cd.b() * v.y * v.y;
}

Rational norm2(const CartanData& cd, const RootVector& v) {
  Rational r(2 * q_form(cd, v), Integer(cd.b()));
  r.canonicalize();
  return r;
}

RootClass classify(const CartanData& cd, const RootVector& v) {
  const int sx = sgn(v.x);
  const int sy = sgn(v.y);
  if (sx == 0 && sy == 0) return RootClass::zero();

  long q_small = 0;
  bool q_is_a = false;
  bool q_is_b = false;
  constexpr long kFast = 1L << 30;
  if (v.x.fits_slong_p() && v.y.fits_slong_p() && std::abs(v.x.get_si()) < kFast &&
      std::abs(v.y.get_si()) < kFast) {
    const __int128 x = v.x.get_si();
    const __int128 y = v.y.get_si();
    const __int128 q = cd.a() * x * x - static_cast<__int128>(cd.ab()) * x * y +
                       cd.b() * y * y;
    if (q <= 0) return RootClass::imaginary();
    q_is_a = q == cd.a();
    q_is_b = q == cd.b();
    q_small = 1;
  }
  if (q_small == 0) {
    const Integer q = q_form(cd, v);
    if (sgn(q) <= 0) return RootClass::imaginary();
    q_is_a = q == cd.a();
    q_is_b = q == cd.b();
  }
  if (!q_is_a && !q_is_b) return RootClass::not_a_root();

  // Real roots are positive or negative; mixed signs never qualify.
  if (sx >= 0 && sy >= 0) {
    if (auto r = match_positive(cd, v.x, v.y, q_is_a, q_is_b))
      return RootClass::real(*r);
    return RootClass::not_a_root();
  }
  if (sx <= 0 && sy <= 0) {
    if (auto r = match_positive(cd, -v.x, -v.y, q_is_a, q_is_b))
      return RootClass::real(negate(*r));
    return RootClass::not_a_root();
  }
  return RootClass::not_a_root();
}

RealRoot negate(const RealRoot& r) {
  switch (r.family) {
    case Family::LL: return {Family::LU, -r.j - 1};
    case Family::LU: return {Family::LL, -r.j - 1};
    case Family::SU: return {Family::SL, -r.j - 1};
    case Family::SL: return {Family::SU, -r.j - 1};
  }
  fail(ErrorCode::Invariant, "bad family");
}

RootVector weyl_act(const CartanData& cd, const WeylWord& w,
                    const RootVector& v) {
  RootVector out = v;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    if (*it == 1) {
      out.x = cd.b() * out.y - out.x;
    } else if (*it == 2) {
      out.y = cd.a() * out.x - out.y;
    } else {
      fail(ErrorCode::InvalidArgument, "Weyl word letters must be 1 or 2");
    }
  }
  return out;
}

RealRoot reflect_in(const RealRoot& mirror, const RealRoot& r) {
  const OrbitForm m = orbit_form(mirror);
  const OrbitForm v = orbit_form(r);
  const std::int64_t k = m.index;
  const std::int64_t j = v.index;
  std::int64_t image;
  if (m.alpha1_orbit == v.alpha1_orbit)
    image = 2 * k - j;       // w_k X_j = -X_{2k-j}
  else
    image = -2 * k - j - 1;  // w_k Y_j = -Y_{-2k-j-1}
  return from_orbit_form({v.alpha1_orbit, image, -v.sign});
}

RootVector reflect_vector(const CartanData& cd, const RealRoot& mirror,
                          const RootVector& v) {
  return v - pairing(cd, v, mirror) * coords(cd, mirror);
}

Integer pairing(const CartanData& cd, const RootVector& beta,
                const RealRoot& alpha) {
  const RootVector al = coords(cd, alpha);
  const Integer bilinear = 2 * cd.a() * beta.x * al.x -
                           cd.ab() * (beta.x * al.y + beta.y * al.x) +
                           2 * cd.b() * beta.y * al.y;
  return exact_div(bilinear, q_form(cd, al), "pairing");
}

CorootCoords coroot_coords(const CartanData& cd, const RealRoot& r) {
  auto [g0, g1] = gamma_pair(cd, r.j);
  Integer e = g0 + g1;
  switch (r.family) {
    case Family::LL: return {std::move(e), cd.b() * g0};
    case Family::LU: return {std::move(e), cd.b() * g1};
    case Family::SU: return {cd.a() * g0, std::move(e)};
    case Family::SL: return {cd.a() * g1, std::move(e)};
  }
  fail(ErrorCode::Invariant, "bad family");
}

std::int64_t root_order_key(const CartanData& cd, const RealRoot& r) {
  if (cd.b() != 1 || cd.a() < 4)
    fail(ErrorCode::Unsupported, "root order is defined for H(a,1), a >= 4");
  require(r.positive(), "root order key needs a positive root");
  const std::int64_t j = r.j;
  if (cd.a() > 4) {
    // SU0 < LL0 < SL0 < SU1 < SL1 < LU0 < LL1 < SU2 < SL2 < LU1 < LL2 < ...
    switch (r.family) {
      case Family::SU: return j == 0 ? 0 : 4 * j - 1;
      case Family::LL: return j == 0 ? 1 : 4 * j + 2;
      case Family::SL: return j == 0 ? 2 : 4 * j;
      case Family::LU: return 4 * j + 5;
    }
  } else {
    // SU0 < SU1 < LL0 < SL0 < SL1 < LU0 < SU2 < LL1 < SL2 < SU3 < SL3 < LU1
    //     < SU4 < LL2 < SL4 < ...
    switch (r.family) {
      case Family::SU: return j == 1 ? 1 : 3 * j;
      case Family::LL: return j == 0 ? 2 : 6 * j + 1;
      case Family::SL:
        if (j == 0) return 3;
        return j % 2 == 1 ? 3 * j + 1 : 3 * j + 2;
      case Family::LU: return 6 * j + 5;
    }
  }
  fail(ErrorCode::Invariant, "bad family");
}

std::vector<RealRoot> real_roots_in_window(std::int64_t window) {
  require(window >= 0, "window must be nonnegative");
  std::vector<RealRoot> out;
  out.reserve(static_cast<std::size_t>(4 * (2 * window + 1)));
  for (Family f : kFamilies)
    for (std::int64_t j = -window; j <= window; ++j) out.push_back({f, j});
  return out;
}

}  // namespace rank2km
