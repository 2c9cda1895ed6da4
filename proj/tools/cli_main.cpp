// Command-line front end.  Links only against the public C API; all parsing
// of representation files and all math stays behind that boundary.

#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fellrep.h"

namespace {

int exit_code_for(fr_status st) {
  switch (st) {
    case FR_OK:
      return 0;
    case FR_PARSE_ERROR:
      return 2;
    case FR_RESOURCE_ERROR:
      return 3;
    default:
      return 1;
  }
}

int fail_with(fr_status st) {
  std::fprintf(stderr, "error: %s\n", fr_last_error());
  return exit_code_for(st);
}

int emit(const char* text, const std::string& out_path) {
  if (out_path.empty()) {
    std::fputs(text, stdout);
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::fprintf(stderr, "error: cannot write '%s'\n", out_path.c_str());
    return 1;
  }
  out << text;
  return 0;
}

struct RepHandle {
  fr_rep* rep = nullptr;
  ~RepHandle() { fr_rep_free(rep); }
};

struct StringHandle {
  char* s = nullptr;
  ~StringHandle() { fr_string_free(s); }
};

// --matrix accepts "I<n>" for the n-by-n identity, an inline JSON array of
// rows, or a path to a file holding one.
bool parse_admissible(const std::string& spec, std::vector<int>& flat,
                      int& size) {
  if (spec.size() >= 2 && spec[0] == 'I') {
    char* end = nullptr;
    const long n = std::strtol(spec.c_str() + 1, &end, 10);
    if (end && *end == '\0' && n >= 1) {
      size = static_cast<int>(n);
      flat.assign(static_cast<std::size_t>(n) * n, 0);
      for (long i = 0; i < n; ++i) flat[static_cast<std::size_t>(i) * n + i] = 1;
      return true;
    }
    return false;
  }
  std::string text = spec;
  if (!spec.empty() && spec[0] != '[') {
    std::ifstream in(spec, std::ios::binary);
    if (!in) return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_array() || j.empty()) return false;
  size = static_cast<int>(j.size());
  flat.clear();
  for (const auto& row : j) {
    if (!row.is_array() || static_cast<int>(row.size()) != size) return false;
    for (const auto& v : row) {
      if (!v.is_number_integer()) return false;
      flat.push_back(v.get<int>());
    }
  }
  return true;
}

int run_fixture(const std::string& kind, int gens, int depth,
                const std::string& matrix, unsigned long long seed, int dim,
                const std::string& out_path, bool depth_given,
                bool gens_given) {
  if (depth < 0) depth = (kind == "parity" || kind == "delta") ? 6 : 2;
  (void)depth_given;

  std::vector<int> flat;
  const int* admissible = nullptr;
  if (kind == "ck") {
    if (matrix.empty()) {
      std::fprintf(stderr, "error: ck fixture needs --matrix\n");
      return 2;
    }
    int size = 0;
    if (!parse_admissible(matrix, flat, size)) {
      std::fprintf(stderr, "error: cannot parse --matrix '%s'\n",
                   matrix.c_str());
      return 2;
    }
    if (gens_given && gens != size) {
      std::fprintf(stderr,
                   "error: --gens %d contradicts %dx%d --matrix\n", gens, size,
                   size);
      return 2;
    }
    gens = size;
    admissible = flat.data();
  }

  StringHandle json;
  const fr_status st =
      fr_fixture_json(kind.c_str(), gens, depth, admissible, seed, dim, &json.s);
  if (st != FR_OK) return fail_with(st);
  return emit(json.s, out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"partial representations of free groups: fixtures, "
               "verification, averaging-scheme experiments"};
  app.require_subcommand(1);

  std::string rep_path, word, out_path, matrix, kind;
  int depth = 3;
  int nmax = 8;
  int gens = 2;
  int dim = 4;
  unsigned long long seed = 0;
  double atol = -1.0, rtol = -1.0;

  auto* verify = app.add_subcommand("verify", "run the full check suite");
  verify->add_option("--rep", rep_path, "representation file")->required();
  verify->add_option("--depth", depth, "max word length checked (default 3)");
  verify->add_option("--atol", atol, "absolute tolerance");
  verify->add_option("--rtol", rtol, "relative tolerance");
  verify->add_option("--out", out_path, "write the JSON report here");

  auto* converge = app.add_subcommand(
      "converge", "error table of the averaging scheme for one word");
  converge->add_option("--rep", rep_path, "representation file")->required();
  converge->add_option("--word", word, "target word, e.g. x.y^-1")->required();
  converge->add_option("--nmax", nmax, "levels 1..nmax (default 8)");
  converge->add_option("--out", out_path, "write the CSV here");

  auto* fixture =
      app.add_subcommand("fixture", "emit a canonical representation file");
  fixture
      ->add_option("kind", kind, "tree | ck | parity | delta | random")
      ->required();
  fixture->add_option("--gens", gens, "generator count (default 2)");
  int fdepth = -1;
  fixture->add_option("--depth", fdepth,
                      "truncation depth (default 2; horizon 6 for the "
                      "one-dimensional tables)");
  fixture->add_option("--matrix", matrix,
                      "ck admissibility: I<n>, inline JSON rows, or a file");
  fixture->add_option("--seed", seed, "random fixture seed");
  fixture->add_option("--dim", dim, "random fixture dimension (default 4)");
  fixture->add_option("--out", out_path, "write the envelope here");

  auto* fiber = app.add_subcommand("fiber", "rank report for one fiber");
  fiber->add_option("--rep", rep_path, "representation file")->required();
  fiber->add_option("--word", word, "grading word")->required();
  int r_depth = -1;
  fiber->add_option("--depth", r_depth,
                    "projection word bound (default 2|word|+2)");
  fiber->add_option("--out", out_path, "write the JSON report here");

  auto* random =
      app.add_subcommand("random", "emit a seeded random generator family");
  random->add_option("--gens", gens, "generator count (default 2)");
  random->add_option("--dim", dim, "dimension (default 4)");
  random->add_option("--seed", seed, "seed");
  random->add_option("--out", out_path, "write the envelope here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (verify->parsed()) {
    RepHandle rep;
    fr_status st = fr_rep_load_file(rep_path.c_str(), &rep.rep);
    if (st != FR_OK) return fail_with(st);
    StringHandle json;
    int all_passed = 0;
    st = fr_verify_json(rep.rep, depth, atol, rtol, &json.s, &all_passed);
    if (st != FR_OK) return fail_with(st);
    const int rc = emit(json.s, out_path);
    if (rc != 0) return rc;
    return all_passed ? 0 : 1;
  }

  if (converge->parsed()) {
    RepHandle rep;
    fr_status st = fr_rep_load_file(rep_path.c_str(), &rep.rep);
    if (st != FR_OK) return fail_with(st);
    StringHandle csv;
    st = fr_converge_csv(rep.rep, word.c_str(), nmax, &csv.s);
    if (st != FR_OK) return fail_with(st);
    return emit(csv.s, out_path);
  }

  if (fixture->parsed()) {
    return run_fixture(kind, gens, fdepth, matrix, seed, dim, out_path,
                       fixture->count("--depth") > 0,
                       fixture->count("--gens") > 0);
  }

  if (fiber->parsed()) {
    RepHandle rep;
    fr_status st = fr_rep_load_file(rep_path.c_str(), &rep.rep);
    if (st != FR_OK) return fail_with(st);
    StringHandle json;
    st = fr_fiber_json(rep.rep, word.c_str(), r_depth, &json.s);
    if (st != FR_OK) return fail_with(st);
    return emit(json.s, out_path);
  }

  if (random->parsed()) {
    return run_fixture("random", gens, 2, "", seed, dim, out_path, false,
                       random->count("--gens") > 0);
  }

  return 0;
}
