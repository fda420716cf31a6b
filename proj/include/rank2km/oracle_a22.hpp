#pragma once

// Brute-force model of the twisted affine algebra of type H(4,1), realized
// inside the centrally extended loop algebra C[t,t^-1] (x) sl_3 (+) Cc.
// Used as ground truth for structure constants; never consulted by the
// production code paths.

#include "rank2km/core_roots.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace rank2km::oracle {

// p + q sqrt(2), exact.
struct SqrtTwoScalar {
  Rational p = 0;
  Rational q = 0;

  SqrtTwoScalar() = default;
  SqrtTwoScalar(Rational p_, Rational q_ = 0);
  SqrtTwoScalar(long p_) : SqrtTwoScalar(Rational(p_)) {}

  static SqrtTwoScalar sqrt2() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return sgn(p) == 0 && sgn(q) == 0; }
  bool is_rational() const { return sgn(q) == 0; }

  friend SqrtTwoScalar operator+(const SqrtTwoScalar& u, const SqrtTwoScalar& v);
  friend SqrtTwoScalar operator-(const SqrtTwoScalar& u, const SqrtTwoScalar& v);
  friend SqrtTwoScalar operator-(const SqrtTwoScalar& u);
  friend SqrtTwoScalar operator*(const SqrtTwoScalar& u, const SqrtTwoScalar& v);
  // Throws InvalidArgument on division by zero.
  friend SqrtTwoScalar operator/(const SqrtTwoScalar& u, const SqrtTwoScalar& v);
  friend bool operator==(const SqrtTwoScalar& u, const SqrtTwoScalar& v);
};

std::string to_string(const SqrtTwoScalar& s);

// sl_3 basis, 0-based: E1, E2, Etheta, F1, F2, Ftheta, H1, H2.
enum Basis : int { E1 = 0, E2, Etheta, F1, F2, Ftheta, H1, H2 };
inline constexpr int kBasisSize = 8;
const char* basis_name(int i);

using Sl3Row = std::array<long, kBasisSize>;

// Coefficients of [X_i, X_j]_0 in the basis.
Sl3Row sl3_bracket(int i, int j);
// Trace form (X_i, X_j)_0.
long trace_form(int i, int j);

class LoopElement {
 public:
  using Key = std::pair<std::int64_t, int>;  // (power of t, basis index)

  LoopElement() = default;
  static LoopElement term(std::int64_t power, int basis,
                          const SqrtTwoScalar& coeff = SqrtTwoScalar(1));
  static LoopElement central(const SqrtTwoScalar& coeff = SqrtTwoScalar(1));

  const std::map<Key, SqrtTwoScalar>& terms() const { return terms_; }
  const SqrtTwoScalar& central_coeff() const { return central_; }
  bool is_zero() const { return terms_.empty() && central_.is_zero(); }

  void add(const Key& k, const SqrtTwoScalar& c);
  void add_central(const SqrtTwoScalar& c);

  LoopElement& operator+=(const LoopElement& o);
  friend LoopElement operator+(LoopElement u, const LoopElement& v) {
    u += v;
    return u;
  }
  friend LoopElement operator-(const LoopElement& u);
  friend LoopElement operator-(LoopElement u, const LoopElement& v) {
    u += -v;
    return u;
  }
  friend LoopElement operator*(const SqrtTwoScalar& s, const LoopElement& u);
  friend bool operator==(const LoopElement&, const LoopElement&);

 private:
  std::map<Key, SqrtTwoScalar> terms_;
  SqrtTwoScalar central_;
};

std::string to_string(const LoopElement& u);

// [t^m X + lc, t^n Y + mc] = t^{m+n}[X,Y]_0 + m delta_{m+n,0} (X,Y)_0 c.
LoopElement bracket(const LoopElement& u, const LoopElement& v);

// Chevalley involution: t^m X -> t^-m (-X^T), c -> -c.
LoopElement chevalley_involution(const LoopElement& u);

// Root vector x_r. The F-side short vectors carry the sign (-1)^{r+1} in front
// of F2 so that [x_alpha, x_-alpha] = alpha^vee holds.
LoopElement root_vector(const RealRoot& r);

// alpha_1^vee = -(H1+H2) + c, alpha_2^vee = 2(H1+H2).
LoopElement coroot(int i);

// Weight (coefficient of alpha_1, alpha_2) of a homogeneous term.
RootVector term_weight(const LoopElement::Key& k);
// Returns true and sets w when every term (and c, at weight 0) has one weight.
bool homogeneous_weight(const LoopElement& u, RootVector& w);

struct OracleResult {
  enum class Tag { Zero, RealVector, Coroot, ImaginarySpace };
  Tag tag = Tag::Zero;
  Integer n = 0;
  RealRoot root{};
  CorootCoords coroot{};
  RootVector weight{};
  LoopElement value;  // the raw bracket
};

const char* oracle_tag_name(OracleResult::Tag t);

// Brackets two root vectors and projects onto the known basis; throws
// Invariant when the result does not decompose.
OracleResult oracle_n(const RealRoot& alpha, const RealRoot& beta);

struct JacobiReport {
  std::uint64_t triples = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> samples;  // first few failures
  bool ok() const { return failures == 0; }
};

// All unordered triples (with repetition) of root vectors with |j| <= window
// together with both coroots and c.
JacobiReport jacobi_check(std::int64_t window);

// Rescaled basis: x_gamma and x_-gamma are both multiplied by (-1)^rho(gamma)
// for positive gamma; rho missing from the map counts as 0.
class RescaledBasis {
 public:
  explicit RescaledBasis(std::map<RealRoot, int> rho);
  int factor(const RealRoot& r) const;  // +-1
  LoopElement vector(const RealRoot& r) const;
  // n for [xbar_alpha, xbar_beta] = n xbar_{alpha+beta}; alpha+beta real.
  Integer n(const RealRoot& alpha, const RealRoot& beta) const;

 private:
  std::map<RealRoot, int> rho_;
};

}  // namespace rank2km::oracle
