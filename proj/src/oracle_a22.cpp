#include "rank2km/oracle_a22.hpp"

#include "rank2km/root_sums.hpp"

#include <sstream>

namespace rank2km::oracle {

namespace {

Rational canon(Rational r) {
  r.canonicalize();
  return r;
}

using Mat = std::array<std::array<long, 3>, 3>;

Mat unit(int i, int j, long s = 1) {
  Mat m{};
  m[i][j] = s;
  return m;
}

Mat basis_matrix(int b) {
  switch (b) {
    case E1: return unit(0, 1);
    case E2: return unit(1, 2);
    case Etheta: return unit(0, 2, -1);
    case F1: return unit(1, 0);
    case F2: return unit(2, 1);
    case Ftheta: return unit(2, 0, -1);
    case H1: {
      Mat m{};
      m[0][0] = 1;
      m[1][1] = -1;
      return m;
    }
    case H2: {
      Mat m{};
      m[1][1] = 1;
      m[2][2] = -1;
      return m;
    }
  }
  fail(ErrorCode::InvalidArgument, "sl3 basis index out of range");
}

Mat mul(const Mat& x, const Mat& y) {
  Mat r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r[i][j] += x[i][k] * y[k][j];
  return r;
}

Sl3Row decompose(const Mat& m) {
  ensure(m[0][0] + m[1][1] + m[2][2] == 0, "sl3: matrix not trace free");
  Sl3Row row{};
  row[E1] = m[0][1];
  row[E2] = m[1][2];
  row[Etheta] = -m[0][2];
  row[F1] = m[1][0];
  row[F2] = m[2][1];
  row[Ftheta] = -m[2][0];
  row[H1] = m[0][0];
  row[H2] = -m[2][2];
  return row;
}

struct Tables {
  std::array<std::array<Sl3Row, kBasisSize>, kBasisSize> bracket{};
  std::array<std::array<long, kBasisSize>, kBasisSize> form{};
  std::array<int, kBasisSize> transpose{};
  std::array<long, kBasisSize> eig{};  // ad(H1+H2) eigenvalue

  Tables() {
    for (int i = 0; i < kBasisSize; ++i) {
      for (int j = 0; j < kBasisSize; ++j) {
        Mat x = basis_matrix(i), y = basis_matrix(j);
        Mat xy = mul(x, y), yx = mul(y, x), c{};
        for (int r = 0; r < 3; ++r)
          for (int s = 0; s < 3; ++s) c[r][s] = xy[r][s] - yx[r][s];
        bracket[i][j] = decompose(c);
        form[i][j] = xy[0][0] + xy[1][1] + xy[2][2];
      }
    }
    transpose = {F1, F2, Ftheta, E1, E2, Etheta, H1, H2};
    eig = {1, 1, 2, -1, -1, -2, 0, 0};
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

}  // namespace

SqrtTwoScalar::SqrtTwoScalar(Rational p_, Rational q_)
    : p(canon(std::move(p_))), q(canon(std::move(q_))) {}

SqrtTwoScalar operator+(const SqrtTwoScalar& u, const SqrtTwoScalar& v) {
  return {u.p + v.p, u.q + v.q};
}
SqrtTwoScalar operator-(const SqrtTwoScalar& u, const SqrtTwoScalar& v) {
  return {u.p - v.p, u.q - v.q};
}
SqrtTwoScalar operator-(const SqrtTwoScalar& u) { return {-u.p, -u.q}; }
SqrtTwoScalar operator*(const SqrtTwoScalar& u, const SqrtTwoScalar& v) {
  return {u.p * v.p + 2 * u.q * v.q, u.p * v.q + u.q * v.p};
}
SqrtTwoScalar operator/(const SqrtTwoScalar& u, const SqrtTwoScalar& v) {
  Rational norm = v.p * v.p - 2 * v.q * v.q;  // nonzero unless v = 0
  require(sgn(norm) != 0, "SqrtTwoScalar: division by zero");
  SqrtTwoScalar w = u * SqrtTwoScalar(v.p, -v.q);
  return {w.p / norm, w.q / norm};
}
bool operator==(const SqrtTwoScalar& u, const SqrtTwoScalar& v) {
  return u.p == v.p && u.q == v.q;
}

std::string to_string(const SqrtTwoScalar& s) {
  if (s.is_rational()) return rank2km::to_string(s.p);
  std::string out;
  if (sgn(s.p) != 0) out = rank2km::to_string(s.p) + (sgn(s.q) > 0 ? "+" : "");
  return out + rank2km::to_string(s.q) + "*sqrt2";
}

const char* basis_name(int i) {
  static const char* names[] = {"E1", "E2", "Etheta", "F1",
                                "F2", "Ftheta", "H1", "H2"};
  require(i >= 0 && i < kBasisSize, "sl3 basis index out of range");
  return names[i];
}

Sl3Row sl3_bracket(int i, int j) {
  require(i >= 0 && i < kBasisSize && j >= 0 && j < kBasisSize,
          "sl3 basis index out of range");
  return tables().bracket[i][j];
}

long trace_form(int i, int j) {
  require(i >= 0 && i < kBasisSize && j >= 0 && j < kBasisSize,
          "sl3 basis index out of range");
  return tables().form[i][j];
}

LoopElement LoopElement::term(std::int64_t power, int basis,
                              const SqrtTwoScalar& coeff) {
  require(basis >= 0 && basis < kBasisSize, "sl3 basis index out of range");
  LoopElement u;
  u.add({power, basis}, coeff);
  return u;
}

LoopElement LoopElement::central(const SqrtTwoScalar& coeff) {
  LoopElement u;
  u.central_ = coeff;
  return u;
}

void LoopElement::add(const Key& k, const SqrtTwoScalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

void LoopElement::add_central(const SqrtTwoScalar& c) { central_ = central_ + c; }

LoopElement& LoopElement::operator+=(const LoopElement& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  add_central(o.central_);
  return *this;
}

LoopElement operator-(const LoopElement& u) { return SqrtTwoScalar(-1) * u; }

LoopElement operator*(const SqrtTwoScalar& s, const LoopElement& u) {
  LoopElement r;
  if (s.is_zero()) return r;
  for (const auto& [k, c] : u.terms_) r.terms_.emplace(k, s * c);
  r.central_ = s * u.central_;
  return r;
}

bool operator==(const LoopElement& u, const LoopElement& v) {
  return u.terms_ == v.terms_ && u.central_ == v.central_;
}

std::string to_string(const LoopElement& u) {
  if (u.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : u.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(c) << ")t^" << k.first << "*" << basis_name(k.second);
  }
  if (!u.central_coeff().is_zero()) {
    if (!first) os << " + ";
    os << "(" << to_string(u.central_coeff()) << ")c";
  }
  return os.str();
}

LoopElement bracket(const LoopElement& u, const LoopElement& v) {
  const Tables& tb = tables();
  LoopElement r;
  for (const auto& [ku, cu] : u.terms()) {
    for (const auto& [kv, cv] : v.terms()) {
      const SqrtTwoScalar c = cu * cv;
      const std::int64_t m = ku.first + kv.first;
      const Sl3Row& row = tb.bracket[ku.second][kv.second];
      for (int b = 0; b < kBasisSize; ++b)
        if (row[b] != 0) r.add({m, b}, SqrtTwoScalar(row[b]) * c);
      if (m == 0 && ku.first != 0) {
        const long f = tb.form[ku.second][kv.second];
        if (f != 0) r.add_central(SqrtTwoScalar(ku.first * f) * c);
      }
    }
  }
  return r;
}

LoopElement chevalley_involution(const LoopElement& u) {
  const Tables& tb = tables();
  LoopElement r;
  for (const auto& [k, c] : u.terms()) r.add({-k.first, tb.transpose[k.second]}, -c);
  r.add_central(-u.central_coeff());
  return r;
}

LoopElement root_vector(const RealRoot& r) {
  const std::int64_t j = r.j;
  const long sign = (j % 2 == 0) ? 1 : -1;  // (-1)^j
  const SqrtTwoScalar s2 = SqrtTwoScalar::sqrt2();
  switch (r.family) {
    case Family::SU:
      return LoopElement::term(j, E1, s2) +
             LoopElement::term(j, E2, SqrtTwoScalar(sign) * s2);
    case Family::SL:
      return LoopElement::term(j + 1, F1, s2) +
             LoopElement::term(j + 1, F2, SqrtTwoScalar(-sign) * s2);
    case Family::LU: return LoopElement::term(2 * j + 1, Etheta);
    case Family::LL: return LoopElement::term(2 * j + 1, Ftheta);
  }
  fail(ErrorCode::InvalidArgument, "unknown family");
}

LoopElement coroot(int i) {
  require(i == 1 || i == 2, "coroot index must be 1 or 2");
  LoopElement h = LoopElement::term(0, H1) + LoopElement::term(0, H2);
  if (i == 1) return -h + LoopElement::central();
  return SqrtTwoScalar(2) * h;
}

RootVector term_weight(const LoopElement::Key& k) {
  return {Integer(k.first), Integer(2 * k.first + tables().eig[k.second])};
}

bool homogeneous_weight(const LoopElement& u, RootVector& w) {
  bool have = false;
  auto take = [&](const RootVector& v) {
    if (!have) {
      w = v;
      have = true;
      return true;
    }
    return w == v;
  };
  for (const auto& [k, c] : u.terms())
    if (!take(term_weight(k))) return false;
  if (!u.central_coeff().is_zero() && !take(RootVector(0L, 0L))) return false;
  if (!have) w = RootVector(0L, 0L);
  return true;
}

const char* oracle_tag_name(OracleResult::Tag t) {
  switch (t) {
    case OracleResult::Tag::Zero: return "zero";
    case OracleResult::Tag::RealVector: return "real";
    case OracleResult::Tag::Coroot: return "coroot";
    case OracleResult::Tag::ImaginarySpace: return "imaginary_space";
  }
  return "?";
}

namespace {

Integer as_integer(const SqrtTwoScalar& s, const std::string& what) {
  ensure(s.is_rational() && s.p.get_den() == 1, what + ": non-integral " + to_string(s));
  return s.p.get_num();
}

}  // namespace

OracleResult oracle_n(const RealRoot& alpha, const RealRoot& beta) {
  static const CartanData cd(4, 1);
  OracleResult res;
  res.value = bracket(root_vector(alpha), root_vector(beta));
  const RootVector sum = coords(cd, alpha) + coords(cd, beta);
  res.weight = sum;
  const std::string ctx = "oracle_n(" + to_string(alpha) + "," + to_string(beta) + ")";

  RootVector w;
  ensure(homogeneous_weight(res.value, w), ctx + ": inhomogeneous bracket");
  ensure(res.value.is_zero() || w == sum, ctx + ": weight is not additive");

  const RootClass cls = classify(cd, sum);
  switch (cls.tag) {
    case RootClass::Tag::Zero: {
      // c1 alpha_1^vee + c2 alpha_2^vee = c1 c + (2 c2 - c1)(H1 + H2)
      const SqrtTwoScalar c1 = res.value.central_coeff();
      SqrtTwoScalar h;
      for (const auto& [k, c] : res.value.terms()) {
        ensure(k.first == 0 && (k.second == H1 || k.second == H2),
               ctx + ": not in the Cartan subalgebra");
        h = c;
      }
      LoopElement check = c1 * coroot(1);
      const SqrtTwoScalar c2 = (h + c1) / SqrtTwoScalar(2);
      check += c2 * coroot(2);
      ensure(check == res.value, ctx + ": not a combination of coroots");
      res.tag = OracleResult::Tag::Coroot;
      res.coroot = {as_integer(c1, ctx), as_integer(c2, ctx)};
      return res;
    }
    case RootClass::Tag::Real: {
      res.root = cls.root;
      const LoopElement target = root_vector(cls.root);
      if (res.value.is_zero()) {
        res.tag = OracleResult::Tag::Zero;
        return res;
      }
      const auto& [k0, c0] = *target.terms().begin();
      auto it = res.value.terms().find(k0);
      ensure(it != res.value.terms().end(), ctx + ": not proportional to the root vector");
      const SqrtTwoScalar n = it->second / c0;
      ensure(n * target == res.value, ctx + ": not proportional to the root vector");
      res.tag = OracleResult::Tag::RealVector;
      res.n = as_integer(n, ctx);
      return res;
    }
    case RootClass::Tag::Imaginary:
      res.tag = OracleResult::Tag::ImaginarySpace;
      return res;
    case RootClass::Tag::NotARoot:
      ensure(res.value.is_zero(), ctx + ": nonzero bracket at a non-root weight");
      res.tag = OracleResult::Tag::Zero;
      return res;
  }
  return res;
}

JacobiReport jacobi_check(std::int64_t window) {
  require(window >= 0, "jacobi_check: window must be nonnegative");
  std::vector<LoopElement> elems;
  std::vector<std::string> names;
  for (const RealRoot& r : real_roots_in_window(window)) {
    elems.push_back(root_vector(r));
    names.push_back(to_string(r));
  }
  elems.push_back(coroot(1));
  names.push_back("coroot1");
  elems.push_back(coroot(2));
  names.push_back("coroot2");
  elems.push_back(LoopElement::central());
  names.push_back("c");

  const std::size_t n = elems.size();
  std::vector<std::vector<LoopElement>> pair(n, std::vector<LoopElement>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) pair[i][j] = bracket(elems[i], elems[j]);

  JacobiReport rep;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      for (std::size_t k = j; k < n; ++k) {
        ++rep.triples;
        LoopElement s = bracket(pair[i][j], elems[k]);
        s += bracket(pair[j][k], elems[i]);
        s += bracket(pair[k][i], elems[j]);
        if (!s.is_zero()) {
          ++rep.failures;
          if (rep.samples.size() < 5)
            rep.samples.push_back(names[i] + "," + names[j] + "," + names[k] +
                                  " -> " + to_string(s));
        }
      }
    }
  }
  return rep;
}

RescaledBasis::RescaledBasis(std::map<RealRoot, int> rho) : rho_(std::move(rho)) {
  for (const auto& [r, v] : rho_) {
    require(r.positive(), "rescaled_basis: rho is defined on positive roots");
    require(v == 0 || v == 1, "rescaled_basis: rho values are 0 or 1");
  }
}

int RescaledBasis::factor(const RealRoot& r) const {
  const RealRoot pos = r.positive() ? r : negate(r);
  auto it = rho_.find(pos);
  return (it != rho_.end() && it->second == 1) ? -1 : 1;
}

LoopElement RescaledBasis::vector(const RealRoot& r) const {
  return SqrtTwoScalar(factor(r)) * root_vector(r);
}

Integer RescaledBasis::n(const RealRoot& alpha, const RealRoot& beta) const {
  const OracleResult o = oracle_n(alpha, beta);
  require(o.tag == OracleResult::Tag::RealVector || o.tag == OracleResult::Tag::Zero,
          "RescaledBasis::n: sum is not a real root");
  if (o.tag == OracleResult::Tag::Zero) return 0;
  return o.n * factor(alpha) * factor(beta) * factor(o.root);
}

}  // namespace rank2km::oracle
