#include "rank2km/rank2km.h"

#include "rank2km/records.hpp"

#include <cstdlib>
#include <cstring>
#include <new>

struct rk2_system {
  rank2km::CartanData cd;
};

struct rk2_signs {
  rank2km::SignAssignment signs;
};

namespace {

thread_local std::string g_last_error;

rk2_status code_of(rank2km::ErrorCode c) {
  switch (c) {
    case rank2km::ErrorCode::InvalidArgument: return RK2_INVALID_ARGUMENT;
    case rank2km::ErrorCode::Unsupported: return RK2_UNSUPPORTED;
    case rank2km::ErrorCode::Parse: return RK2_PARSE;
    case rank2km::ErrorCode::Invariant: return RK2_INVARIANT;
  }
  return RK2_INTERNAL;
}

// Runs f, translating exceptions into status codes.
template <class F>
rk2_status guarded(F&& f) {
  g_last_error.clear();
  try {
    f();
    return RK2_OK;
  } catch (const rank2km::Error& e) {
    g_last_error = e.what();
    return code_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
  } catch (const std::exception& e) {
    g_last_error = e.what();
  } catch (...) {
    g_last_error = "unknown error";
  }
  return RK2_INTERNAL;
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void need(const void* p, const char* what) {
  if (!p) rank2km::fail(rank2km::ErrorCode::InvalidArgument, std::string(what) + " is NULL");
}

const rank2km::SignAssignment& signs_or_default(const rk2_system* sys, const rk2_signs* s,
                                                rank2km::SignAssignment& scratch) {
  if (s) return s->signs;
  scratch = rank2km::SignAssignment::defaults_for(sys->cd);
  return scratch;
}

}  // namespace

extern "C" {

const char* rk2_version(void) { return "1.0.0"; }

const char* rk2_last_error(void) { return g_last_error.c_str(); }

const char* rk2_status_name(rk2_status s) {
  switch (s) {
    case RK2_OK: return "ok";
    case RK2_INVALID_ARGUMENT: return "invalid_argument";
    case RK2_UNSUPPORTED: return "unsupported";
    case RK2_PARSE: return "parse";
    case RK2_INVARIANT: return "invariant";
    case RK2_INTERNAL: return "internal";
  }
  return "unknown";
}

void rk2_string_free(char* s) { std::free(s); }

rk2_status rk2_system_new(long a, long b, rk2_system** out) {
  return guarded([&] {
    need(out, "out");
    *out = nullptr;
    *out = new rk2_system{rank2km::CartanData(a, b)};
  });
}

void rk2_system_free(rk2_system* sys) { delete sys; }

rk2_status rk2_signs_default(const rk2_system* sys, rk2_signs** out) {
  return guarded([&] {
    need(sys, "system");
    need(out, "out");
    *out = new rk2_signs{rank2km::SignAssignment::defaults_for(sys->cd)};
  });
}

rk2_status rk2_signs_from_json(const rk2_system* sys, const char* json, rk2_signs** out) {
  return guarded([&] {
    need(sys, "system");
    need(json, "json");
    need(out, "out");
    *out = nullptr;
    rank2km::SignAssignment s = rank2km::SignAssignment::from_json(json);
    const auto want = rank2km::SignAssignment::variant_for(sys->cd);
    if (s.variant() != want)
      rank2km::fail(rank2km::ErrorCode::InvalidArgument,
                    std::string("sign assignment type '") +
                        rank2km::sign_variant_name(s.variant()) + "' does not fit H(" +
                        std::to_string(sys->cd.a()) + "," + std::to_string(sys->cd.b()) +
                        "), expected '" + rank2km::sign_variant_name(want) + "'");
    *out = new rk2_signs{std::move(s)};
  });
}

rk2_status rk2_signs_to_json(const rk2_signs* signs, char** out) {
  return guarded([&] {
    need(signs, "signs");
    need(out, "out");
    *out = dup(signs->signs.to_json());
  });
}

void rk2_signs_free(rk2_signs* signs) { delete signs; }

rk2_status rk2_roots(const rk2_system* sys, int64_t max_index, const char* family,
                     rk2_format format, char** out) {
  return guarded([&] {
    need(sys, "system");
    need(out, "out");
    std::optional<rank2km::Family> fam;
    if (family) {
      fam = rank2km::parse_family(family);
      if (!fam)
        rank2km::fail(rank2km::ErrorCode::Parse, std::string("unknown family '") + family + "'");
    }
    if (format == RK2_FORMAT_CSV)
      *out = dup(rank2km::records::roots_csv(sys->cd, max_index, fam));
    else if (format == RK2_FORMAT_JSON)
      *out = dup(rank2km::records::roots_jsonl(sys->cd, max_index, fam));
    else
      rank2km::fail(rank2km::ErrorCode::InvalidArgument, "unknown output format");
  });
}

rk2_status rk2_classify_json(const rk2_system* sys, const char* x, const char* y, char** out) {
  return guarded([&] {
    need(sys, "system");
    need(x, "x");
    need(y, "y");
    need(out, "out");
    const rank2km::RootVector v(rank2km::parse_integer(x), rank2km::parse_integer(y));
    *out = dup(rank2km::records::classify_json(sys->cd, v));
  });
}

rk2_status rk2_commutator_json(const rk2_system* sys, const rk2_signs* signs, const char* alpha,
                               const char* beta, char** out) {
  return guarded([&] {
    need(sys, "system");
    need(alpha, "alpha");
    need(beta, "beta");
    need(out, "out");
    rank2km::SignAssignment scratch;
    *out = dup(rank2km::records::commutator_json(sys->cd, signs_or_default(sys, signs, scratch),
                                                 rank2km::parse_root(alpha),
                                                 rank2km::parse_root(beta)));
  });
}

rk2_status rk2_subsystem_json(const rk2_system* sys, const char* generators, const char* mode,
                              char** out) {
  return guarded([&] {
    need(sys, "system");
    need(generators, "generators");
    need(out, "out");
    *out = dup(rank2km::records::subsystem_json(
        sys->cd, rank2km::records::parse_root_list(generators), mode ? mode : "phi"));
  });
}

rk2_status rk2_verify_json(const rk2_system* sys, const char* suite, int64_t window,
                           const rk2_signs* signs, int* passed, char** out) {
  return guarded([&] {
    need(sys, "system");
    need(suite, "suite");
    need(out, "out");
    rank2km::SignAssignment scratch;
    const rank2km::VerifyReport rep =
        rank2km::run_verify(sys->cd, suite, window, signs_or_default(sys, signs, scratch));
    *out = dup(rank2km::records::verify_json(sys->cd, rep));
    if (passed) *passed = rep.passed() ? 1 : 0;
  });
}

rk2_status rk2_plot_data_csv(const rk2_system* sys, int64_t max_index, int64_t curve_samples,
                             char** out) {
  return guarded([&] {
    need(sys, "system");
    need(out, "out");
    *out = dup(rank2km::records::plot_data_csv(sys->cd, max_index, curve_samples));
  });
}

}  // extern "C"
