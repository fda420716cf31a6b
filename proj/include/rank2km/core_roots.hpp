#pragma once

// Root lattice arithmetic for the rank 2 generalized Cartan matrix
//
//     H(a,b) = | 2  -b |
//              | -a  2 |,   ab >= 4.
//
// Real roots are enumerated by four W-orbit sequences (LL, LU, SU, SL)
// indexed by j in Z; the LL/LU roots form the orbit of alpha_1 and the SU/SL
// roots the orbit of alpha_2. Coordinates are expressed through the Lucas-type
// sequences gamma_j and eta_j, which grow exponentially in the hyperbolic case,
// so every lattice quantity is an arbitrary-precision integer.

#include "rank2km/types.hpp"

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rank2km {

enum class CartanKind { Affine, Hyperbolic };

class CartanData {
 public:
  // Throws InvalidArgument unless a, b >= 1 and ab >= 4.
  CartanData(long a, long b);

  long a() const noexcept { return a_; }
  long b() const noexcept { return b_; }
  long ab() const noexcept { return a_ * b_; }
  CartanKind kind() const noexcept { return kind_; }
  bool symmetric() const noexcept { return a_ == b_; }

  // Generalized Cartan matrix entry a_ij (1-based), A = [[2,-b],[-a,2]].
  long cartan(int i, int j) const;

  // b times the symmetrization B = [[2a/b, -a], [-a, 2]], which is integral.
  long scaled_form(int i, int j) const;

  bool operator==(const CartanData&) const = default;

 private:
  long a_;
  long b_;
  CartanKind kind_;
};

struct RootVector {
  Integer x;  // coefficient of alpha_1
  Integer y;  // coefficient of alpha_2

  RootVector() = default;
  RootVector(Integer x_, Integer y_) : x(std::move(x_)), y(std::move(y_)) {}
  RootVector(long x_, long y_) : x(x_), y(y_) {}

  static RootVector alpha1() { return {1L, 0L}; }
  static RootVector alpha2() { return {0L, 1L}; }

  bool is_zero() const { return sgn(x) == 0 && sgn(y) == 0; }

  friend RootVector operator+(const RootVector& u, const RootVector& v) {
    return {u.x + v.x, u.y + v.y};
  }
  friend RootVector operator-(const RootVector& u, const RootVector& v) {
    return {u.x - v.x, u.y - v.y};
  }
  friend RootVector operator-(const RootVector& u) { return {-u.x, -u.y}; }
  friend RootVector operator*(const Integer& k, const RootVector& v) {
    return {k * v.x, k * v.y};
  }
  friend bool operator==(const RootVector& u, const RootVector& v) {
    return u.x == v.x && u.y == v.y;
  }
};

enum class Family { LL, LU, SU, SL };

inline constexpr Family kFamilies[] = {Family::LL, Family::LU, Family::SU,
                                       Family::SL};

const char* family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

struct RealRoot {
  Family family = Family::LL;
  std::int64_t j = 0;

  bool positive() const { return j >= 0; }
  // Orbit of alpha_1 (LL, LU) as opposed to the orbit of alpha_2 (SU, SL).
  bool in_alpha1_orbit() const {
    return family == Family::LL || family == Family::LU;
  }

  auto operator<=>(const RealRoot&) const = default;
};

// "FAMILY:j", e.g. "SU:-3".
std::string to_string(const RealRoot& r);
RealRoot parse_root(std::string_view spec);  // throws ErrorCode::Parse

// Long/short labels. Families LL/LU are long and SU/SL short when a != b; for
// a == b every root counts as long.
bool is_long(const CartanData& cd, const RealRoot& r);
bool is_short(const CartanData& cd, const RealRoot& r);

struct RootClass {
  enum class Tag { Real, Imaginary, NotARoot, Zero };

  Tag tag = Tag::NotARoot;
  RealRoot root{};  // meaningful only for Tag::Real

  static RootClass real(RealRoot r) { return {Tag::Real, r}; }
  static RootClass imaginary() { return {Tag::Imaginary, {}}; }
  static RootClass not_a_root() { return {Tag::NotARoot, {}}; }
  static RootClass zero() { return {Tag::Zero, {}}; }

  bool is_real() const { return tag == Tag::Real; }
  bool is_root() const { return tag == Tag::Real || tag == Tag::Imaginary; }

  friend bool operator==(const RootClass& l, const RootClass& r) {
    return l.tag == r.tag && (l.tag != Tag::Real || l.root == r.root);
  }
};

const char* tag_name(RootClass::Tag t);

struct WeylWord {
  std::vector<int> letters;  // each letter is 1 (w_1) or 2 (w_2)
};

// psi_+/- are the characteristic roots of X_j = (ab-2)X_{j-1} - X_{j-2};
// lambda = psi_+/(psi_+ - 1) and mu = 1/sqrt(ab(ab-4)). Computed with
// kGrowthPrecisionBits of binary precision; the bound checks at j = 40 compare
// numbers whose gap is ~psi_minus^j, which needs far more than 30 digits.
inline constexpr unsigned kGrowthPrecisionBits = 1024;

struct GrowthEstimates {
  mpf_class psi_plus;
  mpf_class psi_minus;
  mpf_class lambda;
  mpf_class mu;
};

// Throws Unsupported for the affine case ab = 4.
GrowthEstimates growth_estimates(const CartanData& cd);

Integer gamma(const CartanData& cd, std::int64_t j);
Integer eta(const CartanData& cd, std::int64_t j);

RootVector coords(const CartanData& cd, const RealRoot& r);

// Q(x,y) = a x^2 - ab xy + b y^2, i.e. (b/2)|v|^2. Q = a on the alpha_1 orbit,
// Q = b on the alpha_2 orbit.
Integer q_form(const CartanData& cd, const RootVector& v);

// Exact squared length |v|^2 = 2 Q(v) / b.
Rational norm2(const CartanData& cd, const RootVector& v);

RootClass classify(const CartanData& cd, const RootVector& v);

RealRoot negate(const RealRoot& r);

RootVector weyl_act(const CartanData& cd, const WeylWord& w,
                    const RootVector& v);

// Reflection of r in the hyperplane of `mirror`, by closed-form index
// arithmetic on the four sequences.
RealRoot reflect_in(const RealRoot& mirror, const RealRoot& r);

// Reflection of an arbitrary lattice vector: v - <v, alpha^vee> alpha.
RootVector reflect_vector(const CartanData& cd, const RealRoot& mirror,
                          const RootVector& v);

// <beta, alpha^vee> = 2(beta, alpha)/(alpha, alpha).
Integer pairing(const CartanData& cd, const RootVector& beta,
                const RealRoot& alpha);

struct CorootCoords {
  Integer c1;  // coefficient of alpha_1^vee
  Integer c2;  // coefficient of alpha_2^vee
  friend bool operator==(const CorootCoords&, const CorootCoords&) = default;
};

CorootCoords coroot_coords(const CartanData& cd, const RealRoot& r);

// Position of a positive real root in the addition-respecting order used to
// define special pairs. Defined for H(a,1) with a >= 4 only.
std::int64_t root_order_key(const CartanData& cd, const RealRoot& r);

// All real roots (every family) with |j| <= window.
std::vector<RealRoot> real_roots_in_window(std::int64_t window);

}  // namespace rank2km
