#include "fellrep.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

#include "fellrep/approx.hpp"
#include "fellrep/envelope.hpp"
#include "fellrep/error.hpp"
#include "fellrep/fixtures.hpp"
#include "fellrep/verify.hpp"

struct fr_rep {
  fellrep::RepPtr rep;
  std::string input_hash;
};

namespace {

thread_local std::string g_last_error;

fr_status status_of(const fellrep::Error& e) {
  switch (e.kind()) {
    case fellrep::ErrorKind::input:
      return FR_FAIL;
    case fellrep::ErrorKind::parse:
      return FR_PARSE_ERROR;
    case fellrep::ErrorKind::resource:
      return FR_RESOURCE_ERROR;
  }
  return FR_INTERNAL_ERROR;
}

template <typename F>
fr_status guarded(F&& f) {
  try {
    return f();
  } catch (const fellrep::Error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return FR_RESOURCE_ERROR;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return FR_INTERNAL_ERROR;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int resolve_dim_cap() {
  const char* env = std::getenv("FELL_DIM_CAP");
  if (!env || !*env) return fellrep::kDefaultDimCap;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (!end || *end != '\0' || v < 1)
    fellrep::throw_parse("FELL_DIM_CAP must be a positive integer");
  return static_cast<int>(v);
}

fr_status make_rep(const std::string& json_text, fr_rep** out) {
  return guarded([&]() {
    const auto env = fellrep::parse_envelope(json_text);
    auto rep = fellrep::rep_from_envelope(env, resolve_dim_cap());
    *out = new fr_rep{std::move(rep), fellrep::fnv1a_hex(json_text)};
    return FR_OK;
  });
}

}  // namespace

extern "C" {

const char* fr_version(void) { return fellrep::tool_version(); }

const char* fr_last_error(void) { return g_last_error.c_str(); }

void fr_string_free(char* s) { std::free(s); }

fr_status fr_rep_load_file(const char* path, fr_rep** out) {
  if (!path || !out) return FR_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded([&]() {
    std::ifstream in(path, std::ios::binary);
    if (!in) fellrep::throw_input(std::string("cannot open '") + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return make_rep(ss.str(), out);
  });
}

fr_status fr_rep_load_json(const char* json_text, fr_rep** out) {
  if (!json_text || !out) return FR_INVALID_ARGUMENT;
  *out = nullptr;
  return make_rep(json_text, out);
}

void fr_rep_free(fr_rep* rep) { delete rep; }

int fr_rep_dim(const fr_rep* rep) { return rep ? rep->rep->dim() : 0; }

int fr_rep_generator_count(const fr_rep* rep) {
  return rep ? rep->rep->alphabet().size() : 0;
}

fr_status fr_verify_json(const fr_rep* rep, int depth, double atol, double rtol,
                         char** out_json, int* out_all_passed) {
  if (!rep || !out_json) return FR_INVALID_ARGUMENT;
  *out_json = nullptr;
  return guarded([&]() {
    fellrep::VerifyOptions options;
    options.depth = depth;
    options.tol = rep->rep->tolerance();
    if (atol >= 0) options.tol.atol = atol;
    if (rtol >= 0) options.tol.rtol = rtol;
    const fellrep::Report report = fellrep::run_verify(rep->rep, options);
    *out_json = dup_string(fellrep::report_to_json(report, rep->input_hash));
    if (out_all_passed) *out_all_passed = report.all_passed() ? 1 : 0;
    return FR_OK;
  });
}

fr_status fr_converge_csv(const fr_rep* rep, const char* word, int nmax,
                          char** out_csv) {
  if (!rep || !word || !out_csv) return FR_INVALID_ARGUMENT;
  *out_csv = nullptr;
  return guarded([&]() {
    if (nmax < 1) fellrep::throw_input("nmax must be >= 1");
    const fellrep::Word t = fellrep::parse_word(rep->rep->alphabet(), word);
    const auto mn = fellrep::pos_neg_decompose(t);
    if (!mn)
      fellrep::throw_input(
          "sigma(t) = 0: t is not of the form mu.nu^-1 with positive mu, nu");
    const int halves = std::max(mn->first.length(), mn->second.length());
    fellrep::ProjectionFamily pf(rep->rep, nmax + std::max(halves, 1));
    std::vector<int> n_range;
    for (int n = 1; n <= nmax; ++n) n_range.push_back(n);
    const auto rows = fellrep::convergence_study(pf, t, n_range);
    *out_csv = dup_string(fellrep::convergence_csv(rows));
    return FR_OK;
  });
}

fr_status fr_fixture_json(const char* kind, int gens, int depth,
                          const int* admissible, unsigned long long seed,
                          int dim, char** out_json) {
  if (!kind || !out_json) return FR_INVALID_ARGUMENT;
  *out_json = nullptr;
  return guarded([&]() {
    const int cap = resolve_dim_cap();
    if (gens < 1) fellrep::throw_input("gens must be >= 1");
    fellrep::FixtureSpec spec;
    spec.m = gens;
    spec.depth = depth;
    spec.seed = seed;
    spec.dim = dim;
    const std::string k = kind;
    if (k == "tree") {
      spec.kind = fellrep::FixtureSpec::Kind::tree;
    } else if (k == "ck") {
      if (!admissible) {
        g_last_error = "ck fixture needs an admissible matrix";
        return FR_INVALID_ARGUMENT;
      }
      spec.kind = fellrep::FixtureSpec::Kind::ck;
      spec.admissible.resize(gens, gens);
      for (int r = 0; r < gens; ++r)
        for (int c = 0; c < gens; ++c)
          spec.admissible(r, c) = admissible[r * gens + c];
    } else if (k == "parity") {
      spec.kind = fellrep::FixtureSpec::Kind::parity;
    } else if (k == "delta") {
      spec.kind = fellrep::FixtureSpec::Kind::delta;
    } else if (k == "random") {
      spec.kind = fellrep::FixtureSpec::Kind::random;
      if (dim > cap)
        fellrep::throw_resource("dimension " + std::to_string(dim) +
                                " exceeds cap " + std::to_string(cap));
    } else {
      fellrep::throw_parse("unknown fixture kind '" + k + "'");
    }
    const auto rep = fellrep::make_fixture(spec, cap);
    const auto env = fellrep::envelope_from_rep(*rep);
    *out_json = dup_string(fellrep::serialize_envelope(env));
    return FR_OK;
  });
}

fr_status fr_fiber_json(const fr_rep* rep, const char* word, int r_depth,
                        char** out_json) {
  if (!rep || !word || !out_json) return FR_INVALID_ARGUMENT;
  *out_json = nullptr;
  return guarded([&]() {
    const fellrep::Word t = fellrep::parse_word(rep->rep->alphabet(), word);
    const int d = r_depth < 0 ? fellrep::default_r_depth(t) : r_depth;
    const fellrep::FiberBasis fb = fellrep::fiber(*rep->rep, t, d);
    *out_json =
        dup_string(fellrep::fiber_report_to_json(fb, rep->rep->alphabet()));
    return FR_OK;
  });
}

fr_status fr_evaluate(const fr_rep* rep, const char* word, double* out_reim) {
  if (!rep || !word || !out_reim) return FR_INVALID_ARGUMENT;
  return guarded([&]() {
    const fellrep::Word t = fellrep::parse_word(rep->rep->alphabet(), word);
    const fellrep::DenseMatrix d = fellrep::to_dense(rep->rep->evaluate(t));
    std::size_t k = 0;
    for (Eigen::Index r = 0; r < d.rows(); ++r)
      for (Eigen::Index c = 0; c < d.cols(); ++c) {
        out_reim[k++] = d(r, c).real();
        out_reim[k++] = d(r, c).imag();
      }
    return FR_OK;
  });
}

}  // extern "C"
