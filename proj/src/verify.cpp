#include "rank2km/verify.hpp"

#include "rank2km/oracle_a22.hpp"
#include "rank2km/subsystems.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>

namespace rank2km {

void CheckResult::record(bool ok, const std::string& what) {
  ++checked;
  if (ok) return;
  ++failed;
  if (samples.size() < 5) samples.push_back(what);
}

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.failed == 0; });
}

namespace {

// deque: add() hands out references that must survive later additions.
using Checks = std::deque<CheckResult>;

CheckResult& add(Checks& out, const char* suite, const char* name) {
  out.push_back({suite, name, 0, 0, {}});
  return out.back();
}

// Coordinates from the Weyl-word description of each family, independent of
// the gamma/eta closed forms.
RootVector word_coords(const CartanData& cd, const RealRoot& r) {
  const std::int64_t n = r.j >= 0 ? r.j : -r.j;
  WeylWord w;
  auto push_pair = [&](int first, int second, std::int64_t times) {
    for (std::int64_t i = 0; i < times; ++i) {
      w.letters.push_back(first);
      w.letters.push_back(second);
    }
  };
  // For negative j use the negation map on the positive index of the partner.
  if (r.j < 0) return -word_coords(cd, negate(r));
  switch (r.family) {
    case Family::LL:
      push_pair(1, 2, n);
      return weyl_act(cd, w, RootVector::alpha1());
    case Family::LU:
      push_pair(2, 1, n);
      w.letters.push_back(2);
      return weyl_act(cd, w, RootVector::alpha1());
    case Family::SU:
      push_pair(2, 1, n);
      return weyl_act(cd, w, RootVector::alpha2());
    case Family::SL:
      push_pair(1, 2, n);
      w.letters.push_back(1);
      return weyl_act(cd, w, RootVector::alpha2());
  }
  return {};
}

void core_suite(const CartanData& cd, std::int64_t window, Checks& out) {
  const auto roots = real_roots_in_window(window);
  {
    CheckResult& c = add(out, "core", "classify_roundtrip");
    for (const RealRoot& r : roots) {
      const RootClass k = classify(cd, coords(cd, r));
      c.record(k.is_real() && k.root == r, to_string(r));
    }
  }
  {
    CheckResult& c = add(out, "core", "weyl_word_coords");
    for (const RealRoot& r : roots)
      c.record(word_coords(cd, r) == coords(cd, r), to_string(r));
  }
  {
    CheckResult& c = add(out, "core", "negation");
    for (const RealRoot& r : roots)
      c.record(coords(cd, negate(r)) == -coords(cd, r) && negate(negate(r)) == r,
               to_string(r));
  }
  {
    CheckResult& c = add(out, "core", "q_form_values");
    for (const RealRoot& r : roots) {
      const long want = r.in_alpha1_orbit() ? cd.a() : cd.b();
      c.record(q_form(cd, coords(cd, r)) == want, to_string(r));
    }
  }
  {
    CheckResult& c = add(out, "core", "reflect_in");
    const auto small = real_roots_in_window(std::min<std::int64_t>(window, 6));
    for (const RealRoot& m : small)
      for (const RealRoot& r : small)
        c.record(coords(cd, reflect_in(m, r)) == reflect_vector(cd, m, coords(cd, r)),
                 to_string(m) + "|" + to_string(r));
  }
  {
    // Real => Q in {a,b}; Q <= 0 <=> imaginary (for nonzero vectors).
    CheckResult& c = add(out, "core", "classify_box");
    const long box = 4 * window + 8;
    for (long x = -box; x <= box; ++x)
      for (long y = -box; y <= box; ++y) {
        const RootVector v(x, y);
        const RootClass k = classify(cd, v);
        const Integer q = q_form(cd, v);
        bool ok = true;
        if (k.is_real()) ok = (q == cd.a() || q == cd.b()) && coords(cd, k.root) == v;
        if (!v.is_zero()) ok = ok && ((sgn(q) <= 0) == (k.tag == RootClass::Tag::Imaginary));
        c.record(ok, "(" + std::to_string(x) + "," + std::to_string(y) + ")");
      }
  }
  {
    CheckResult& c = add(out, "core", "gamma_recurrence");
    const Integer P = cd.ab() - 2;
    for (std::int64_t j = -window; j <= window; ++j)
      c.record(gamma(cd, j + 1) == P * gamma(cd, j) - gamma(cd, j - 1),
               "j=" + std::to_string(j));
  }
  if (cd.b() == 1 && cd.a() >= 4) {
    CheckResult& c = add(out, "core", "order_respects_addition");
    std::vector<RealRoot> pos;
    for (Family f : kFamilies)
      for (std::int64_t j = 0; j <= window; ++j) pos.push_back({f, j});
    for (const RealRoot& x : pos)
      for (const RealRoot& y : pos) {
        const RootClass s = sum_class(cd, x, y);
        if (!s.is_real()) continue;
        const auto ks = root_order_key(cd, s.root);
        c.record(root_order_key(cd, x) < ks && root_order_key(cd, y) < ks,
                 to_string(x) + "+" + to_string(y));
      }
  }
}

void sums_suite(const CartanData& cd, std::int64_t window, Checks& out) {
  const auto brute = real_sum_pairs(cd, window);
  {
    CheckResult& c = add(out, "sums", "window_equivalence");
    const auto predicted = predicted_sum_pairs(cd, window);
    const std::set<std::pair<RealRoot, RealRoot>> a(brute.begin(), brute.end()),
        b(predicted.begin(), predicted.end());
    for (const auto& p : a)
      c.record(b.count(p) > 0, "missing " + to_string(p.first) + "," + to_string(p.second));
    for (const auto& p : b)
      c.record(a.count(p) > 0, "extra " + to_string(p.first) + "," + to_string(p.second));
  }
  {
    CheckResult& c = add(out, "sums", "triples_sum_zero");
    for (const RealTriple& t : triples_in_window(cd, window))
      c.record((coords(cd, t.alpha) + coords(cd, t.beta) + coords(cd, t.gamma)).is_zero(),
               to_string(t.alpha) + "," + to_string(t.beta) + "," + to_string(t.gamma));
  }
  {
    CheckResult& c = add(out, "sums", "string_p_minus_q");
    for (const auto& [x, y] : brute) {
      const RootString s = root_string(cd, x, y);
      c.record(s.p - s.q == pairing(cd, coords(cd, y), x),
               to_string(x) + "," + to_string(y));
    }
  }
  {
    CheckResult& c = add(out, "sums", "sum_length_rule");
    for (const auto& [x, y] : brute) {
      const RootClass s = sum_class(cd, x, y);
      const SumLength rule = sum_length_rule(cd, x, y);
      c.record(rule != SumLength::SumNotReal &&
                   (rule == SumLength::SumLong) == is_long(cd, s.root),
               to_string(x) + "," + to_string(y));
    }
  }
  if (cd.a() > 1 && cd.b() > 1) {
    CheckResult& c = add(out, "sums", "no_real_sums");
    c.record(brute.empty(), std::to_string(brute.size()) + " real sums");
  }
}

void subsystems_suite(const CartanData& cd, std::int64_t window, Checks& out) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(cd.a() * 1000 + cd.b()));
  const std::int64_t gmax = std::max<std::int64_t>(1, std::min<std::int64_t>(window, 6));
  auto random_gens = [&] {
    const int n = 1 + static_cast<int>(rng() % 4);
    std::vector<RealRoot> g;
    for (int i = 0; i < n; ++i)
      g.push_back({kFamilies[rng() % 4],
                   static_cast<std::int64_t>(rng() % (2 * gmax + 1)) - gmax});
    return g;
  };
  const auto roots = real_roots_in_window(window);
  CheckResult& phi = add(out, "subsystems", "phi_vs_closure_oracle");
  CheckResult& del = add(out, "subsystems", "delta_vs_lattice_oracle");
  for (int t = 0; t < 50; ++t) {
    auto gens = random_gens();
    if (t == 0) gens = {{Family::SU, 0}, {Family::SL, 0}};
    if (t == 1) gens = {{Family::SU, 0}, {Family::SL, 2}};
    std::string label;
    for (const RealRoot& g : gens) label += to_string(g) + " ";
    phi.record(phi_closure_oracle(cd, gens, window) ==
                   subsystem_roots(phi_subsystem(cd, gens), window),
               label);
    const SubsystemDescriptor d = delta_re_subsystem(cd, gens);
    std::vector<RootVector> vecs;
    for (const RealRoot& g : gens) vecs.push_back(coords(cd, g));
    const Lattice2 lat(vecs);
    bool ok = true;
    for (const RealRoot& r : roots)
      ok = ok && lat.contains(coords(cd, r)) == subsystem_contains(d, r);
    del.record(ok, label);
  }
  for (const IdentityCheck& ic : divisibility_suite(cd, 6, window).checks) {
    CheckResult& c = add(out, "subsystems", "divisibility");
    c.name = "divisibility:" + ic.name;
    c.checked = static_cast<std::uint64_t>(ic.checked);
    c.failed = static_cast<std::uint64_t>(ic.failed);
  }
}

void signs_suite(const CartanData& cd, const SignAssignment& signs, std::int64_t window,
                 Checks& out) {
  const ConsistencyReport rep = consistency_relations(cd, signs, window);
  auto fill = [&](const char* name, std::uint64_t n, const std::string& tag) {
    CheckResult& c = add(out, "signs", name);
    c.checked = n;
    for (const std::string& v : rep.violations)
      if (v.rfind(tag, 0) == 0) {
        ++c.failed;
        if (c.samples.size() < 5) c.samples.push_back(v);
      }
  };
  fill("antisymmetry_negation", rep.antisymmetry_checks, "antisymmetry");
  fill("magnitude_p_plus_1", rep.magnitude_checks, "|n|");
  fill("triple_ratio", rep.triple_checks, "triple");
  fill("quadruple", rep.quadruple_checks, "quadruple");
  if (signs.variant() == SignVariant::Trivial) return;

  CheckResult& echo = add(out, "signs", "extraspecial_inputs");
  const SignAssignment ref = SignAssignment::defaults_for(cd);
  for (const RealRoot& g : decomposables(cd, window)) {
    const SpecialPair e = extraspecial_pair(cd, g);
    const SignDependency dep = sign_dependency(cd, e.alpha, e.beta);
    echo.record(dep.inputs.size() == 1 &&
                    sign_of(cd, signs, e.alpha, e.beta) ==
                        sign_of(cd, ref, e.alpha, e.beta) * signs.get(dep.inputs[0]),
                to_string(g));
  }
  CheckResult& dep = add(out, "signs", "sign_dependency");
  for (const auto& [x, y] : real_sum_pairs(cd, window)) {
    const SignDependency d = sign_dependency(cd, x, y);
    int v = d.fixed;
    for (const auto& k : d.inputs) v *= signs.get(k);
    dep.record(v == sign_of(cd, signs, x, y), to_string(x) + "," + to_string(y));
  }
}

void oracle_suite(const CartanData& cd, std::int64_t window, Checks& out) {
  using namespace oracle;
  {
    const JacobiReport j = jacobi_check(window);
    CheckResult& c = add(out, "oracle", "jacobi");
    c.checked = j.triples;
    c.failed = j.failures;
    c.samples = j.samples;
  }
  const auto roots = real_roots_in_window(window);
  const SignAssignment ref = SignAssignment::defaults_for(cd);
  CheckResult& match = add(out, "oracle", "n_value_matches_oracle");
  CheckResult& coroots = add(out, "oracle", "coroot_relation");
  CheckResult& chev = add(out, "oracle", "chevalley_involution");
  CheckResult& loop = add(out, "oracle", "loop_sign_pattern");
  for (const RealRoot& x : roots) {
    chev.record(chevalley_involution(root_vector(x)) == -root_vector(negate(x)), to_string(x));
    const OracleResult neg = oracle_n(x, negate(x));
    coroots.record(neg.tag == OracleResult::Tag::Coroot && neg.coroot == coroot_coords(cd, x),
                   to_string(x));
    for (const RealRoot& y : roots) {
      const CommutatorResult n = n_value(cd, ref, x, y);
      const OracleResult o = oracle_n(x, y);
      bool ok = std::string(commutator_tag_name(n.tag)) == oracle_tag_name(o.tag);
      if (ok && n.tag == CommutatorResult::Tag::RealVector) ok = n.n == o.n && n.root == o.root;
      if (ok && n.tag == CommutatorResult::Tag::Coroot) ok = n.coroot == o.coroot;
      match.record(ok, to_string(x) + "," + to_string(y));
      const bool short_pair = !x.in_alpha1_orbit() && x.family == y.family;
      if (short_pair && (x.j + y.j) % 2 != 0)
        loop.record(o.n == (x.j % 2 == 0 ? 4 : -4), to_string(x) + "," + to_string(y));
    }
  }
}

}  // namespace

VerifyReport run_verify(const CartanData& cd, const std::string& suite,
                        std::int64_t window, const SignAssignment& signs) {
  require(window >= 0, "verify: window must be nonnegative");
  const bool all = suite == "all";
  require(all || std::find_if(std::begin(kSuites), std::end(kSuites), [&](const char* s) {
                   return suite == s;
                 }) != std::end(kSuites),
          "unknown suite '" + suite + "'");
  const bool is_h41 = cd.a() == 4 && cd.b() == 1;
  if (suite == "oracle" && !is_h41)
    fail(ErrorCode::Unsupported, "the oracle suite needs (a,b) = (4,1)");
  if (suite == "signs" || all) require(signs.variant() == SignAssignment::variant_for(cd),
                                       "sign assignment does not fit this Cartan matrix");

  VerifyReport rep;
  rep.suite = suite;
  rep.window = window;
  Checks checks;
  if (all || suite == "core") core_suite(cd, window, checks);
  if (all || suite == "sums") sums_suite(cd, window, checks);
  if (all || suite == "subsystems") subsystems_suite(cd, window, checks);
  if (all || suite == "signs") signs_suite(cd, signs, window, checks);
  if (all || suite == "oracle") {
    if (is_h41)
      oracle_suite(cd, window, checks);
    else
      rep.skipped.push_back("oracle");
  }
  rep.checks.assign(std::make_move_iterator(checks.begin()),
                    std::make_move_iterator(checks.end()));
  return rep;
}

}  // namespace rank2km
