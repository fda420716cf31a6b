// rank2km: command-line front end over the C API.
//
// Exit codes: 0 success, 1 a verification check failed, 2 usage or input error
// (and 3 for internal failures, which should not happen).

#include "rank2km/rank2km.h"

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct SystemDeleter {
  void operator()(rk2_system* s) const { rk2_system_free(s); }
};
struct SignsDeleter {
  void operator()(rk2_signs* s) const { rk2_signs_free(s); }
};
using SystemPtr = std::unique_ptr<rk2_system, SystemDeleter>;
using SignsPtr = std::unique_ptr<rk2_signs, SignsDeleter>;

// Thrown to unwind with a status already reported on stderr.
struct Abort {
  int code;
};

int exit_code(rk2_status s) {
  switch (s) {
    case RK2_OK: return kExitOk;
    case RK2_INVALID_ARGUMENT:
    case RK2_UNSUPPORTED:
    case RK2_PARSE: return kExitUsage;
    default: return kExitInternal;
  }
}

void check(rk2_status s) {
  if (s == RK2_OK) return;
  std::cerr << "rank2km: " << rk2_status_name(s) << ": " << rk2_last_error() << "\n";
  throw Abort{exit_code(s)};
}

void emit(char* text, bool newline) {
  std::fputs(text, stdout);
  if (newline) std::fputc('\n', stdout);
  rk2_string_free(text);
}

struct Common {
  long a = 0;
  long b = 0;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--a", c.a, "Cartan matrix entry a (H = [[2,-b],[-a,2]])")->required();
  cmd->add_option("--b", c.b, "Cartan matrix entry b")->required();
}

SystemPtr make_system(const Common& c) {
  rk2_system* sys = nullptr;
  check(rk2_system_new(c.a, c.b, &sys));
  return SystemPtr(sys);
}

SignsPtr load_signs(const rk2_system* sys, const std::string& path) {
  rk2_signs* s = nullptr;
  if (path.empty()) {
    check(rk2_signs_default(sys, &s));
    return SignsPtr(s);
  }
  std::ifstream in(path);
  if (!in) {
    std::cerr << "rank2km: cannot read sign file '" << path << "'\n";
    throw Abort{kExitUsage};
  }
  std::ostringstream text;
  text << in.rdbuf();
  check(rk2_signs_from_json(sys, text.str().c_str(), &s));
  return SignsPtr(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Roots, commutators and subsystems of rank 2 Kac-Moody algebras H(a,b)"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(rk2_version()));

  Common roots_c, cls_c, com_c, sub_c, ver_c, plot_c;

  auto* roots = app.add_subcommand("roots", "List real roots with |j| <= max-index");
  add_common(roots, roots_c);
  std::int64_t roots_max = 0;
  std::string roots_family, roots_format = "json";
  roots->add_option("--max-index", roots_max, "Largest |j|")->required();
  roots->add_option("--family", roots_family, "Restrict to one family")
      ->check(CLI::IsMember({"LL", "LU", "SU", "SL"}));
  roots->add_option("--format", roots_format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* cls = app.add_subcommand("classify", "Classify the lattice vector x alpha_1 + y alpha_2");
  add_common(cls, cls_c);
  std::string cls_x, cls_y;
  cls->add_option("--x", cls_x, "Coefficient of alpha_1 (any size)")->required();
  cls->add_option("--y", cls_y, "Coefficient of alpha_2 (any size)")->required();

  auto* com = app.add_subcommand("commutator", "Structure constant of [x_alpha, x_beta]");
  add_common(com, com_c);
  std::string com_alpha, com_beta, com_signs;
  com->add_option("--alpha", com_alpha, "Root spec FAMILY:j")->required();
  com->add_option("--beta", com_beta, "Root spec FAMILY:j")->required();
  com->add_option("--signs", com_signs, "Sign assignment JSON file (default all +1)");

  auto* sub = app.add_subcommand("subsystem", "Reflection subsystem generated by real roots");
  add_common(sub, sub_c);
  std::string sub_gens, sub_mode = "phi";
  sub->add_option("--generators", sub_gens, "Comma separated root specs")->required();
  sub->add_option("--mode", sub_mode, "phi: Weyl closure, delta: lattice closure")
      ->check(CLI::IsMember({"phi", "delta"}));

  auto* ver = app.add_subcommand("verify", "Run self-verification suites");
  add_common(ver, ver_c);
  std::string ver_suite = "all", ver_signs;
  std::int64_t ver_window = 10;
  ver->add_option("--suite", ver_suite, "core, sums, subsystems, signs, oracle or all")
      ->check(CLI::IsMember({"core", "sums", "subsystems", "signs", "oracle", "all"}));
  ver->add_option("--window", ver_window, "Index window");
  ver->add_option("--signs", ver_signs, "Sign assignment JSON file (default all +1)");

  auto* plot = app.add_subcommand("plot-data", "CSV points and conics for plotting");
  add_common(plot, plot_c);
  std::int64_t plot_max = 3, plot_samples = 200;
  plot->add_option("--max-index", plot_max, "Largest |j| of plotted real roots");
  plot->add_option("--hyperbola-samples", plot_samples, "Points per conic");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    char* out = nullptr;
    if (*roots) {
      const SystemPtr sys = make_system(roots_c);
      check(rk2_roots(sys.get(), roots_max, roots_family.empty() ? nullptr : roots_family.c_str(),
                      roots_format == "csv" ? RK2_FORMAT_CSV : RK2_FORMAT_JSON, &out));
      emit(out, false);
    } else if (*cls) {
      const SystemPtr sys = make_system(cls_c);
      check(rk2_classify_json(sys.get(), cls_x.c_str(), cls_y.c_str(), &out));
      emit(out, true);
    } else if (*com) {
      const SystemPtr sys = make_system(com_c);
      const SignsPtr signs = load_signs(sys.get(), com_signs);
      check(rk2_commutator_json(sys.get(), signs.get(), com_alpha.c_str(), com_beta.c_str(),
                                &out));
      emit(out, true);
    } else if (*sub) {
      const SystemPtr sys = make_system(sub_c);
      check(rk2_subsystem_json(sys.get(), sub_gens.c_str(), sub_mode.c_str(), &out));
      emit(out, true);
    } else if (*ver) {
      const SystemPtr sys = make_system(ver_c);
      const SignsPtr signs = load_signs(sys.get(), ver_signs);
      int passed = 0;
      check(rk2_verify_json(sys.get(), ver_suite.c_str(), ver_window, signs.get(), &passed,
                            &out));
      emit(out, true);
      if (!passed) {
        std::cerr << "rank2km: verification failed\n";
        return kExitVerifyFailed;
      }
    } else if (*plot) {
      const SystemPtr sys = make_system(plot_c);
      check(rk2_plot_data_csv(sys.get(), plot_max, plot_samples, &out));
      emit(out, false);
    }
  } catch (const Abort& a) {
    return a.code;
  }
  return std::fflush(stdout) == 0 ? kExitOk : kExitInternal;
}
