#include "rank2km/records.hpp"

#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace rank2km::records {

namespace {

using nlohmann::json;

const Integer kTwo53 = Integer(1) << 53;

json big(const Integer& v) {
  if (abs(v) <= kTwo53) return json(v.get_si());
  return json(to_string(v));
}

json big(const Rational& v) {
  Rational c = v;
  c.canonicalize();
  if (c.get_den() == 1) return big(Integer(c.get_num()));
  return json(to_string(c));
}

json header(const char* schema, const CartanData& cd) {
  return json{{"schema", schema}, {"a", cd.a()}, {"b", cd.b()}};
}

json root_fields(const CartanData& cd, const RealRoot& r) {
  const RootVector v = coords(cd, r);
  return json{{"family", family_name(r.family)},
              {"j", r.j},
              {"x", to_string(v.x)},
              {"y", to_string(v.y)},
              {"length", is_long(cd, r) ? "long" : "short"},
              {"q", to_string(q_form(cd, v))}};
}

template <class F>
void for_roots(std::int64_t max_index, std::optional<Family> family, F&& f) {
  require(max_index >= 0, "max-index must be nonnegative");
  for (Family fam : kFamilies) {
    if (family && *family != fam) continue;
    for (std::int64_t j = -max_index; j <= max_index; ++j) f(RealRoot{fam, j});
  }
}

json arith_json(const ArithSet& s) {
  return json{{"empty", s.empty}, {"r", s.r}, {"d", s.d}};
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

std::string roots_jsonl(const CartanData& cd, std::int64_t max_index,
                        std::optional<Family> family) {
  std::string out;
  for_roots(max_index, family, [&](const RealRoot& r) {
    json j = header(kRootSchema, cd);
    j.update(root_fields(cd, r));
    out += j.dump() + "\n";
  });
  return out;
}

std::string roots_csv(const CartanData& cd, std::int64_t max_index,
                      std::optional<Family> family) {
  std::string out = "a,b,family,j,x,y,length,q\n";
  for_roots(max_index, family, [&](const RealRoot& r) {
    const RootVector v = coords(cd, r);
    out += std::to_string(cd.a()) + "," + std::to_string(cd.b()) + "," +
           family_name(r.family) + "," + std::to_string(r.j) + "," + to_string(v.x) + "," +
           to_string(v.y) + "," + (is_long(cd, r) ? "long" : "short") + "," +
           to_string(q_form(cd, v)) + "\n";
  });
  return out;
}

std::string classify_json(const CartanData& cd, const RootVector& v) {
  const RootClass c = classify(cd, v);
  json j = header(kClassifySchema, cd);
  j["x"] = to_string(v.x);
  j["y"] = to_string(v.y);
  j["q"] = to_string(q_form(cd, v));
  switch (c.tag) {
    case RootClass::Tag::Real:
      j["class"] = "real";
      j["family"] = family_name(c.root.family);
      j["j"] = c.root.j;
      j["root"] = to_string(c.root);
      j["length"] = is_long(cd, c.root) ? "long" : "short";
      break;
    case RootClass::Tag::Imaginary: j["class"] = "imaginary"; break;
    case RootClass::Tag::NotARoot: j["class"] = "not_a_root"; break;
    case RootClass::Tag::Zero: j["class"] = "zero"; break;
  }
  return j.dump();
}

std::string commutator_json(const CartanData& cd, const SignAssignment& signs,
                            const RealRoot& alpha, const RealRoot& beta) {
  const CommutatorResult r = n_value(cd, signs, alpha, beta);
  json j = header(kCommutatorSchema, cd);
  j["alpha"] = to_string(alpha);
  j["beta"] = to_string(beta);
  j["result"] = commutator_tag_name(r.tag);
  j["weight"] = json{{"x", to_string(r.weight.x)}, {"y", to_string(r.weight.y)}};
  switch (r.tag) {
    case CommutatorResult::Tag::RealVector: {
      j["n"] = big(r.n);
      j["root"] = to_string(r.root);
      const RootString s = root_string(cd, alpha, beta);
      j["p"] = big(s.p);
      j["sign"] = sgn(r.n) < 0 ? -1 : 1;
      break;
    }
    case CommutatorResult::Tag::Coroot:
      j["coroot"] = json{{"c1", big(r.coroot.c1)}, {"c2", big(r.coroot.c2)}};
      break;
    default: break;
  }
  return j.dump();
}

std::string subsystem_json(const CartanData& cd, const std::vector<RealRoot>& gens,
                           const std::string& mode) {
  require(!gens.empty(), "generator list is empty");
  require(mode == "phi" || mode == "delta", "mode must be phi or delta");
  const SubsystemDescriptor s =
      mode == "phi" ? phi_subsystem(cd, gens) : delta_re_subsystem(cd, gens);
  json j = header(kSubsystemSchema, cd);
  j["mode"] = mode;
  j["generators"] = json::array();
  for (const RealRoot& g : gens) j["generators"].push_back(to_string(g));
  j["shape"] = shape_name(s.shape);
  j["r"] = s.r;
  j["d"] = s.d;
  j["long_set"] = arith_json(s.sets.long_set);
  j["short_set"] = arith_json(s.sets.short_set);
  j["simple_roots"] = json::array();
  for (const RealRoot& r : s.simple_roots) j["simple_roots"].push_back(to_string(r));
  j["cartan"] = json::array();
  for (const auto& row : s.cartan) {
    json jr = json::array();
    for (const Integer& v : row) jr.push_back(big(v));
    j["cartan"].push_back(jr);
  }
  j["inner_product"] = json::array();
  for (const auto& row : s.inner_product) {
    json jr = json::array();
    for (const Rational& v : row) jr.push_back(big(v));
    j["inner_product"].push_back(jr);
  }
  return j.dump();
}

std::string verify_json(const CartanData& cd, const VerifyReport& rep) {
  json j = header(kVerifySchema, cd);
  j["suite"] = rep.suite;
  j["window"] = rep.window;
  j["passed"] = rep.passed();
  j["skipped"] = rep.skipped;
  j["checks"] = json::array();
  std::uint64_t total = 0, failed = 0;
  for (const CheckResult& c : rep.checks) {
    j["checks"].push_back(json{{"suite", c.suite},
                               {"name", c.name},
                               {"checked", c.checked},
                               {"failed", c.failed},
                               {"samples", c.samples}});
    total += c.checked;
    failed += c.failed;
  }
  j["total_checked"] = total;
  j["total_failed"] = failed;
  return j.dump();
}

std::string plot_data_csv(const CartanData& cd, std::int64_t max_index,
                          std::int64_t samples) {
  require(max_index >= 0, "max-index must be nonnegative");
  require(samples >= 0, "hyperbola-samples must be nonnegative");
  std::ostringstream os;
  os << "x,y,kind\n";
  Integer extent = 1;
  for (const RealRoot& r : real_roots_in_window(max_index)) {
    const RootVector v = coords(cd, r);
    os << to_string(v.x) << "," << to_string(v.y) << ","
       << (is_long(cd, r) ? "long_root" : "short_root") << "\n";
    const Integer ax = abs(v.x), ay = abs(v.y);
    if (ax > extent) extent = ax;
    if (ay > extent) extent = ay;
  }
  // Imaginary roots in the same box, capped so the scan stays small.
  const long box = extent > 200 ? 200L : extent.get_si();
  for (long x = -box; x <= box; ++x)
    for (long y = -box; y <= box; ++y) {
      if (x == 0 && y == 0) continue;
      if (sgn(q_form(cd, RootVector(x, y))) <= 0) os << x << "," << y << ",imaginary_root\n";
    }
  // Q(x,y) = c  <=>  b y^2 - ab x y + (a x^2 - c) = 0; both branches.
  const double a = static_cast<double>(cd.a()), b = static_cast<double>(cd.b());
  const double X = extent.get_d();
  auto curve = [&](double c, const char* kind) {
    const std::int64_t per_branch = (samples + 1) / 2;
    for (std::int64_t i = 0; i < per_branch; ++i) {
      const double x = per_branch == 1 ? 0.0 : -X + 2 * X * i / (per_branch - 1);
      const double disc = a * a * b * b * x * x - 4 * b * (a * x * x - c);
      const double root = std::sqrt(std::max(0.0, disc));
      os << fmt(x) << "," << fmt((a * b * x + root) / (2 * b)) << "," << kind << "\n";
      if (2 * i + 1 < samples)
        os << fmt(x) << "," << fmt((a * b * x - root) / (2 * b)) << "," << kind << "\n";
    }
  };
  curve(a, "long_curve");
  curve(b, "short_curve");
  return os.str();
}

std::vector<RealRoot> parse_root_list(const std::string& text) {
  std::vector<RealRoot> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) fail(ErrorCode::Parse, "empty root spec in list");
    out.push_back(parse_root(item.substr(first, last - first + 1)));
  }
  return out;
}

}  // namespace rank2km::records
