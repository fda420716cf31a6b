#include "rank2km/structure_constants.hpp"

#include "json.hpp"

#include <algorithm>
#include <set>

namespace rank2km {

namespace {

// Which sign system applies, after mirroring a=1 to b=1.
enum class Regime { None, Ha1, H41 };

struct Setup {
  Regime regime = Regime::None;
  bool mirrored = false;
  long a = 0;  // the entry that is not 1
};

Setup setup_for(const CartanData& cd) {
  Setup s;
  if (cd.b() == 1 && cd.a() >= 4) {
    s.a = cd.a();
  } else if (cd.a() == 1 && cd.b() >= 4) {
    s.a = cd.b();
    s.mirrored = true;
  } else {
    return s;
  }
  s.regime = s.a == 4 ? Regime::H41 : Regime::Ha1;
  return s;
}

RealRoot to_std(const Setup& s, const RealRoot& r) {
  return s.mirrored ? mirror_root(r) : r;
}

bool is_h41_decomposable(const RealRoot& r) {
  if (!r.positive()) return false;
  if (r.family == Family::LL && r.j == 0) return false;
  if (r.family == Family::SU && r.j <= 1) return false;
  return true;
}

std::int64_t parse_index(const std::string& text, const std::string& key) {
  try {
    const Integer v = parse_integer(text);
    if (!v.fits_slong_p()) fail(ErrorCode::Parse, "sign key index too large: " + key);
    return v.get_si();
  } catch (const Error&) {
    fail(ErrorCode::Parse, "malformed sign key '" + key + "'");
  }
}

int sgn_int(const Integer& v) { return sgn(v) < 0 ? -1 : 1; }

// ---------- H(a,1), a > 4 ----------

// sigma_j = n_{SU_j, SU_j+1} / a, expressed through one input.
struct SigmaInput {
  int fixed;
  std::string key;
};

SigmaInput sigma_input(std::int64_t j) {
  if (j >= 0) return {1, "U:" + std::to_string(j)};
  if (j == -1) return {1, "UL"};
  // -SU_j = SL_-j-1 and -SU_j+1 = SL_-j-2, so
  // n(SU_j, SU_j+1) = -n(SL_-j-1, SL_-j-2) = n(SL_-j-2, SL_-j-1).
  return {1, "L:" + std::to_string(-j - 2)};
}

// n_{alpha,beta} = coeff * sigma_j for the real sum alpha + beta (standard
// orientation, b = 1). Within the triple (A,B,C) = (SU_j, SU_j+1, LL_-j-1):
// n_AB = a sigma, n_BC = n_CA = sigma; reversed pairs negate, and the
// negated triple {SL_-j-1, SL_-j-2, LU_j} carries n_{-x,-y} = -n_{x,y}
// (apply the Chevalley involution, x_-g = -omega(x_g)).
std::pair<long, std::int64_t> ha1_coeff(long a, RealRoot alpha, RealRoot beta) {
  auto in_upper = [](const RealRoot& r) {
    return r.family == Family::SU || r.family == Family::LL;
  };
  long flip = 1;
  if (!in_upper(alpha) && !in_upper(beta)) {
    alpha = negate(alpha);
    beta = negate(beta);
    flip = -1;
  }
  // Locate j from whichever member is known.
  std::int64_t j = 0;
  bool found = false;
  for (const RealRoot& r : {alpha, beta}) {
    if (r.family == Family::LL) {
      j = -r.j - 1;
      found = true;
      break;
    }
  }
  if (!found) {
    ensure(alpha.family == Family::SU && beta.family == Family::SU,
           "ha1: pair is not in an upper triple");
    j = std::min(alpha.j, beta.j);
  }
  const RealRoot A{Family::SU, j}, B{Family::SU, j + 1}, C{Family::LL, -j - 1};
  if (alpha == A && beta == B) return {flip * a, j};
  if (alpha == B && beta == A) return {-flip * a, j};
  if (alpha == B && beta == C) return {flip, j};
  if (alpha == C && beta == B) return {-flip, j};
  if (alpha == C && beta == A) return {flip, j};
  if (alpha == A && beta == C) return {-flip, j};
  fail(ErrorCode::Invariant,
       "ha1: pair " + to_string(alpha) + "," + to_string(beta) + " not in its triple");
}

// ---------- H(4,1) ----------
//
// Rescaled model: n = r(alpha) r(beta) r(alpha+beta) n_ref with n_ref the
// loop-algebra constant and r(-g) = r(g). The r are fixed so that every
// extraspecial pair carries its input sign relative to n_ref:
//   r(LL0) = r(SU0) = r(SU1) = 1,
//   r(LU_k)     = r(SU_2k+1) s(LU_k)
//   r(LL_k+1)   = r(SL0) r(SL_2k+1) s(LL_k+1)
//   r(SL_2k)    = r(LL_k) s(SL_2k),   r(SL_2k+1) = r(LL_k) s(SL_2k+1)
//   r(SU_2k+2)  = r(SL0) r(LU_k) s(SU_2k+2)
//   r(SU_2k+3)  = r(SL1) r(LU_k) s(SU_2k+3).
// n_ref is stated for brackets written as (SU_i, LL_j), (SL_i, LU_j) and
// (SB_r, SB_s) with r < s. The root order puts some of these the other way
// round; those pairs are negated.

long h41_ref(const RealRoot& alpha, const RealRoot& beta) {
  auto short_root = [](const RealRoot& r) {
    return r.family == Family::SU || r.family == Family::SL;
  };
  auto parity_sign = [](std::int64_t i) { return (i % 2 == 0) ? 1L : -1L; };
  if (short_root(alpha) && short_root(beta)) {
    ensure(alpha.family == beta.family, "h41: short pair from different families");
    return 4 * parity_sign(alpha.j);
  }
  if (alpha.family == Family::SU && beta.family == Family::LL)
    return -parity_sign(alpha.j);
  if (alpha.family == Family::LL && beta.family == Family::SU)
    return parity_sign(beta.j);
  if (alpha.family == Family::SL && beta.family == Family::LU)
    return -parity_sign(alpha.j);
  if (alpha.family == Family::LU && beta.family == Family::SL)
    return parity_sign(beta.j);
  fail(ErrorCode::Invariant,
       "h41: no loop constant for " + to_string(alpha) + "," + to_string(beta));
}

bool is(const RealRoot& k, Family f, std::int64_t j) {
  return k.family == f && k.j == j;
}

// Multiplicity mod 2 of input `key` in r(LL_k).
int par_ll(std::int64_t k, const RealRoot& key) {
  if (is(key, Family::SL, 0)) return static_cast<int>(k & 1);
  if (key.family == Family::SL && key.j % 2 == 1 && key.j <= 2 * k - 1) return 1;
  if (key.family == Family::LL && key.j >= 1 && key.j <= k) return 1;
  return 0;
}

// ... in r(SU_2k+1), k >= 0.
int par_su_odd(std::int64_t k, const RealRoot& key) {
  if (is(key, Family::SL, 1)) return static_cast<int>(k & 1);
  if (key.family == Family::LU && key.j <= k - 1) return 1;
  if (key.family == Family::SU && key.j % 2 == 1 && key.j >= 3 && key.j <= 2 * k + 1)
    return 1;
  return 0;
}

int par_r(const RealRoot& g, const RealRoot& key) {
  const RealRoot p = g.positive() ? g : negate(g);
  const std::int64_t j = p.j;
  switch (p.family) {
    case Family::LL: return par_ll(j, key);
    case Family::LU: return par_su_odd(j, key) ^ (key == p ? 1 : 0);
    case Family::SL: return par_ll(j / 2, key) ^ (key == p ? 1 : 0);
    case Family::SU:
      if (j <= 1) return 0;
      if (j % 2 == 1) return par_su_odd((j - 1) / 2, key);
      return (is(key, Family::SL, 0) ? 1 : 0) ^
             par_r({Family::LU, (j - 2) / 2}, key) ^ (key == p ? 1 : 0);
  }
  return 0;
}

int h41_r(const SignAssignment& signs, const RealRoot& g) {
  int r = 1;
  for (const RealRoot& k : signs.flipped_roots())
    if (par_r(g, k)) r = -r;
  return r;
}

std::int64_t max_index(std::initializer_list<RealRoot> rs) {
  std::int64_t m = 0;
  for (const RealRoot& r : rs) m = std::max(m, r.j >= 0 ? r.j : -r.j - 1);
  return m;
}

void check_variant(const CartanData& cd, const SignAssignment& signs) {
  const SignVariant want = SignAssignment::variant_for(cd);
  require(signs.variant() == want,
          std::string("sign assignment of type ") + sign_variant_name(signs.variant()) +
              " does not fit H(" + std::to_string(cd.a()) + "," +
              std::to_string(cd.b()) + "), which needs " + sign_variant_name(want));
}

// n for a real sum, standard orientation.
Integer real_n(const Setup& s, const SignAssignment& signs, const RealRoot& alpha,
               const RealRoot& beta, const RealRoot& sum) {
  if (s.regime == Regime::Ha1) {
    const auto [coeff, j] = ha1_coeff(s.a, alpha, beta);
    const SigmaInput in = sigma_input(j);
    return Integer(coeff * in.fixed * signs.get(in.key));
  }
  ensure(s.regime == Regime::H41, "real sum in a Cartan type without real sums");
  return Integer(h41_ref(alpha, beta) * h41_r(signs, alpha) * h41_r(signs, beta) *
                 h41_r(signs, sum));
}

}  // namespace

const char* sign_variant_name(SignVariant v) {
  switch (v) {
    case SignVariant::Trivial: return "Trivial";
    case SignVariant::Ha1: return "Ha1";
    case SignVariant::H41: return "H41";
  }
  return "?";
}

SignVariant SignAssignment::variant_for(const CartanData& cd) {
  switch (setup_for(cd).regime) {
    case Regime::Ha1: return SignVariant::Ha1;
    case Regime::H41: return SignVariant::H41;
    case Regime::None: return SignVariant::Trivial;
  }
  return SignVariant::Trivial;
}

SignAssignment SignAssignment::defaults_for(const CartanData& cd) {
  return SignAssignment(variant_for(cd));
}

std::string SignAssignment::canonical_key(const std::string& key) const {
  switch (variant_) {
    case SignVariant::Trivial:
      fail(ErrorCode::Parse, "a Trivial sign assignment has no inputs (key '" + key + "')");
    case SignVariant::Ha1: {
      if (key == "UL") return key;
      if (key.size() > 2 && (key[0] == 'U' || key[0] == 'L') && key[1] == ':') {
        const std::int64_t j = parse_index(key.substr(2), key);
        if (j < 0) fail(ErrorCode::Parse, "sign key index must be >= 0: " + key);
        return std::string(1, key[0]) + ":" + std::to_string(j);
      }
      fail(ErrorCode::Parse, "malformed Ha1 sign key '" + key + "'");
    }
    case SignVariant::H41: {
      const RealRoot r = parse_root(key);
      if (!is_h41_decomposable(r))
        fail(ErrorCode::Parse, "'" + key + "' is not a decomposable positive root");
      return to_string(r);
    }
  }
  fail(ErrorCode::Parse, "bad variant");
}

void SignAssignment::set(const std::string& key, int sign) {
  require(sign == 1 || sign == -1, "sign must be +1 or -1");
  const std::string k = canonical_key(key);
  if (sign < 0)
    overrides_[k] = -1;
  else
    overrides_.erase(k);
  if (variant_ == SignVariant::H41) {
    flipped_roots_.clear();
    for (const auto& [key_, v] : overrides_) flipped_roots_.push_back(parse_root(key_));
  }
}

int SignAssignment::get(const std::string& key) const {
  auto it = overrides_.find(key);
  return it == overrides_.end() ? 1 : it->second;
}

std::string SignAssignment::to_json() const {
  nlohmann::json j;
  j["type"] = sign_variant_name(variant_);
  j["overrides"] = nlohmann::json::array();
  for (const auto& [k, v] : overrides_)
    j["overrides"].push_back({{"key", k}, {"sign", v}});
  return j.dump();
}

SignAssignment SignAssignment::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::Parse, std::string("sign file is not JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
    fail(ErrorCode::Parse, "sign file needs a string \"type\"");
  const std::string type = j["type"];
  SignAssignment s;
  if (type == "Trivial")
    s.variant_ = SignVariant::Trivial;
  else if (type == "Ha1")
    s.variant_ = SignVariant::Ha1;
  else if (type == "H41")
    s.variant_ = SignVariant::H41;
  else
    fail(ErrorCode::Parse, "unknown sign assignment type '" + type + "'");
  if (!j.contains("overrides")) return s;
  if (!j["overrides"].is_array()) fail(ErrorCode::Parse, "\"overrides\" must be an array");
  for (const auto& o : j["overrides"]) {
    if (!o.is_object() || !o.contains("key") || !o["key"].is_string() ||
        !o.contains("sign") || !o["sign"].is_number_integer())
      fail(ErrorCode::Parse, "override entries need a string key and an integer sign");
    const long v = o["sign"];
    if (v != 1 && v != -1) fail(ErrorCode::Parse, "override sign must be 1 or -1");
    s.set(o["key"].get<std::string>(), static_cast<int>(v));
  }
  return s;
}

std::string h41_key(const RealRoot& decomposable) {
  require(is_h41_decomposable(decomposable),
          to_string(decomposable) + " is not decomposable in H(4,1)");
  return to_string(decomposable);
}

const char* commutator_tag_name(CommutatorResult::Tag t) {
  switch (t) {
    case CommutatorResult::Tag::Zero: return "zero";
    case CommutatorResult::Tag::RealVector: return "real";
    case CommutatorResult::Tag::Coroot: return "coroot";
    case CommutatorResult::Tag::ImaginarySpace: return "imaginary_space";
  }
  return "?";
}

SpecialPair extraspecial_pair(const CartanData& cd, const RealRoot& g) {
  const Setup s = setup_for(cd);
  require(s.regime != Regime::None, "no real sums in this Cartan type");
  const RealRoot r = to_std(s, g);
  require(r.positive(), "extraspecial_pair needs a positive root");
  SpecialPair p;
  p.extraspecial = true;
  const std::int64_t j = r.j;
  auto set = [&](Family f1, std::int64_t j1, Family f2, std::int64_t j2) {
    p.alpha = {f1, j1};
    p.beta = {f2, j2};
  };
  if (s.regime == Regime::Ha1) {
    if (r.family == Family::SL && j == 0)
      set(Family::SU, 0, Family::LL, 0);
    else if (r.family == Family::LU)
      set(Family::SU, j, Family::SU, j + 1);
    else if (r.family == Family::LL && j >= 1)
      set(Family::SL, j - 1, Family::SL, j);
    else
      fail(ErrorCode::InvalidArgument, to_string(g) + " is not decomposable");
  } else {
    require(is_h41_decomposable(r), to_string(g) + " is not decomposable");
    switch (r.family) {
      case Family::LU: set(Family::SU, 0, Family::SU, 2 * j + 1); break;
      case Family::LL: set(Family::SL, 0, Family::SL, 2 * j - 1); break;
      case Family::SL: set(Family::SU, j % 2, Family::LL, j / 2); break;
      case Family::SU: set(Family::SL, j % 2, Family::LU, (j - 2) / 2); break;
    }
  }
  p.alpha = to_std(s, p.alpha);
  p.beta = to_std(s, p.beta);
  return p;
}

std::vector<RealRoot> decomposables(const CartanData& cd, std::int64_t window) {
  require(window >= 0, "window must be nonnegative");
  const Setup s = setup_for(cd);
  std::vector<RealRoot> out;
  if (s.regime == Regime::None) return out;
  for (Family f : kFamilies) {
    for (std::int64_t j = 0; j <= window; ++j) {
      const RealRoot r{f, j};
      const bool dec = s.regime == Regime::H41
                           ? is_h41_decomposable(r)
                           : (r.family == Family::SL && j == 0) || r.family == Family::LU ||
                                 (r.family == Family::LL && j >= 1);
      if (dec) out.push_back(to_std(s, r));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SpecialPair> special_pairs(const CartanData& cd, std::int64_t window) {
  require(window >= 0, "window must be nonnegative");
  const Setup s = setup_for(cd);
  std::vector<SpecialPair> out;
  if (s.regime == Regime::None) return out;
  const CartanData std_cd(s.a, 1);
  std::vector<RealRoot> pos;
  for (Family f : kFamilies)
    for (std::int64_t j = 0; j <= window; ++j) pos.push_back({f, j});
  for (const RealRoot& x : pos) {
    for (const RealRoot& y : pos) {
      if (root_order_key(std_cd, x) >= root_order_key(std_cd, y)) continue;
      const RootClass c = sum_class(std_cd, x, y);
      if (!c.is_real()) continue;
      ensure(c.root.positive(), "positive roots with a negative sum");
      SpecialPair p{to_std(s, x), to_std(s, y), false};
      const SpecialPair e = extraspecial_pair(cd, to_std(s, c.root));
      p.extraspecial = e.alpha == p.alpha && e.beta == p.beta;
      out.push_back(p);
    }
  }
  std::sort(out.begin(), out.end(), [&](const SpecialPair& l, const SpecialPair& r) {
    auto key = [&](const SpecialPair& p) {
      return std::make_pair(root_order_key(std_cd, to_std(s, p.alpha)),
                            root_order_key(std_cd, to_std(s, p.beta)));
    };
    return key(l) < key(r);
  });
  return out;
}

CommutatorResult n_value(const CartanData& cd, const SignAssignment& signs,
                         const RealRoot& alpha, const RealRoot& beta) {
  check_variant(cd, signs);
  CommutatorResult res;
  res.weight = coords(cd, alpha) + coords(cd, beta);
  const RootClass c = classify(cd, res.weight);
  switch (c.tag) {
    case RootClass::Tag::Zero:
      res.tag = CommutatorResult::Tag::Coroot;
      res.coroot = coroot_coords(cd, alpha);
      return res;
    case RootClass::Tag::Imaginary:
      res.tag = CommutatorResult::Tag::ImaginarySpace;
      return res;
    case RootClass::Tag::NotARoot:
      res.tag = CommutatorResult::Tag::Zero;
      return res;
    case RootClass::Tag::Real: break;
  }
  const Setup s = setup_for(cd);
  res.tag = CommutatorResult::Tag::RealVector;
  res.root = c.root;
  res.n = real_n(s, signs, to_std(s, alpha), to_std(s, beta), to_std(s, c.root));
  return res;
}

int sign_of(const CartanData& cd, const SignAssignment& signs, const RealRoot& alpha,
            const RealRoot& beta) {
  const CommutatorResult r = n_value(cd, signs, alpha, beta);
  require(r.tag == CommutatorResult::Tag::RealVector,
          "sign_of: " + to_string(alpha) + " + " + to_string(beta) + " is not a real root");
  const RootString st = root_string(cd, alpha, beta);
  const Integer mag = st.p + 1;
  ensure(abs(r.n) == mag, "sign_of: |n| != p+1 for " + to_string(alpha) + "," +
                              to_string(beta));
  return sgn_int(r.n);
}

SignDependency sign_dependency(const CartanData& cd, const RealRoot& alpha,
                               const RealRoot& beta) {
  const RootClass c = sum_class(cd, alpha, beta);
  require(c.is_real(), "sign_dependency: sum is not a real root");
  const Setup s = setup_for(cd);
  ensure(s.regime != Regime::None, "real sum in a Cartan type without real sums");
  const RealRoot a = to_std(s, alpha), b = to_std(s, beta), g = to_std(s, c.root);
  SignDependency dep;
  if (s.regime == Regime::Ha1) {
    const auto [coeff, j] = ha1_coeff(s.a, a, b);
    const SigmaInput in = sigma_input(j);
    dep.fixed = (coeff < 0 ? -1 : 1) * in.fixed;
    dep.inputs = {in.key};
    return dep;
  }
  dep.fixed = h41_ref(a, b) < 0 ? -1 : 1;
  // Inputs live on decomposable roots with index at most about twice ours.
  const std::int64_t m = 2 * max_index({a, b, g}) + 4;
  for (Family f : kFamilies) {
    for (std::int64_t j = 0; j <= m; ++j) {
      const RealRoot key{f, j};
      if (!is_h41_decomposable(key)) continue;
      if (par_r(a, key) ^ par_r(b, key) ^ par_r(g, key))
        dep.inputs.push_back(to_string(key));
    }
  }
  std::sort(dep.inputs.begin(), dep.inputs.end());
  return dep;
}

ConsistencyReport consistency_relations(const CartanData& cd, const SignAssignment& signs,
                                        std::int64_t window) {
  require(window >= 0, "window must be nonnegative");
  ConsistencyReport rep;
  const std::vector<RealRoot> roots = real_roots_in_window(window);
  auto n = [&](const RealRoot& x, const RealRoot& y) -> Integer {
    const CommutatorResult r = n_value(cd, signs, x, y);
    return r.tag == CommutatorResult::Tag::RealVector ? r.n : Integer(0);
  };
  auto note = [&](const std::string& v) {
    if (rep.violations.size() < 50) rep.violations.push_back(v);
  };

  std::map<RealRoot, std::set<RealRoot>> partners;
  for (const RealRoot& x : roots) {
    for (const RealRoot& y : roots) {
      const RootClass c = sum_class(cd, x, y);
      if (!c.is_real()) continue;
      partners[x].insert(y);
      const Integer nxy = n(x, y);
      ++rep.antisymmetry_checks;
      if (n(y, x) != -nxy || n(negate(x), negate(y)) != -nxy)
        note("antisymmetry/negation: " + to_string(x) + "," + to_string(y));
      ++rep.magnitude_checks;
      if (abs(nxy) != root_string(cd, x, y).p + 1)
        note("|n| != p+1: " + to_string(x) + "," + to_string(y));
    }
  }

  for (const RealTriple& t : triples_in_window(cd, window)) {
    ++rep.triple_checks;
    const Rational la = norm2(cd, coords(cd, t.alpha));
    const Rational lb = norm2(cd, coords(cd, t.beta));
    const Rational lg = norm2(cd, coords(cd, t.gamma));
    const Rational r1 = Rational(n(t.alpha, t.beta)) / lg;
    const Rational r2 = Rational(n(t.beta, t.gamma)) / la;
    const Rational r3 = Rational(n(t.gamma, t.alpha)) / lb;
    if (r1 != r2 || r2 != r3)
      note("triple ratio: " + to_string(t.alpha) + "," + to_string(t.beta) + "," +
           to_string(t.gamma));
  }

  // Quadruples: alpha+beta, alpha+gamma, beta+gamma real forces every
  // pairwise sum real (alpha+delta = -(beta+gamma) etc.).
  for (const auto& [x, px] : partners) {
    for (const RealRoot& y : px) {
      if (!(x < y)) continue;
      for (const RealRoot& z : px) {
        if (!(y < z) || !partners[y].count(z)) continue;
        const RootVector dv = -(coords(cd, x) + coords(cd, y) + coords(cd, z));
        const RootClass dc = classify(cd, dv);
        if (!dc.is_real()) continue;
        const RealRoot w = dc.root;
        if (std::max(w.j, -w.j) > window) continue;
        ++rep.quadruple_checks;
        auto len = [&](const RealRoot& p, const RealRoot& q) {
          return norm2(cd, coords(cd, p) + coords(cd, q));
        };
        const Rational total = Rational(n(x, y) * n(z, w)) / len(x, y) +
                               Rational(n(y, z) * n(x, w)) / len(y, z) +
                               Rational(n(z, x) * n(y, w)) / len(z, x);
        if (sgn(total) != 0)
          note("quadruple: " + to_string(x) + "," + to_string(y) + "," + to_string(z) +
               "," + to_string(w));
      }
    }
  }
  return rep;
}

std::vector<SignAlias> h41_aliases(const SignAssignment& signs, std::int64_t k_max) {
  require(signs.variant() == SignVariant::H41, "aliases are defined for H(4,1)");
  const CartanData cd(4, 1);
  std::vector<SignAlias> out;
  auto add = [&](const std::string& name, RealRoot x, RealRoot y, int factor) {
    out.push_back({name, x, y, factor * sign_of(cd, signs, x, y)});
  };
  for (std::int64_t k = 0; k <= k_max; ++k) {
    const std::string ks = std::to_string(k);
    add("U0," + ks, {Family::SU, 0}, {Family::SU, 2 * k + 1}, 1);
    add("L0," + ks, {Family::SL, 0}, {Family::SL, 2 * k + 1}, 1);
    if (k >= 1) {
      add("U1," + ks, {Family::SU, 1}, {Family::SU, 2 * k}, -1);
      add("L1," + ks, {Family::SL, 1}, {Family::SL, 2 * k}, -1);
    }
    if (k >= 2) {
      add("U2," + ks, {Family::SU, 2}, {Family::SU, 2 * k - 1}, 1);
      add("L2," + ks, {Family::SL, 2}, {Family::SL, 2 * k - 1}, 1);
    }
  }
  return out;
}

}  // namespace rank2km
