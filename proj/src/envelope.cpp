#include "fellrep/envelope.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fellrep/error.hpp"

namespace fellrep {

namespace {

using nlohmann::json;

std::vector<std::array<double, 2>> flatten(const Operator& a) {
  const DenseMatrix d = to_dense(a);
  std::vector<std::array<double, 2>> out;
  out.reserve(static_cast<std::size_t>(d.size()));
  for (Eigen::Index r = 0; r < d.rows(); ++r)
    for (Eigen::Index c = 0; c < d.cols(); ++c)
      out.push_back({d(r, c).real(), d(r, c).imag()});
  return out;
}

Operator unflatten(const std::vector<std::array<double, 2>>& flat, int dim) {
  DenseMatrix d(dim, dim);
  std::size_t k = 0;
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c, ++k) d(r, c) = Complex(flat[k][0], flat[k][1]);
  return to_sparse(d);
}

std::vector<std::array<double, 2>> parse_matrix(const json& j,
                                                const std::string& where) {
  if (!j.is_array()) throw_parse("matrix '" + where + "' must be an array");
  std::vector<std::array<double, 2>> out;
  out.reserve(j.size());
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
        !entry[1].is_number())
      throw_parse("matrix '" + where + "' entries must be [re, im] pairs");
    out.push_back({entry[0].get<double>(), entry[1].get<double>()});
  }
  return out;
}

json matrix_to_json(const std::vector<std::array<double, 2>>& flat) {
  json out = json::array();
  for (const auto& [re, im] : flat) out.push_back(json::array({re, im}));
  return out;
}

}  // namespace

RepEnvelope parse_envelope(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw_parse(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw_parse("envelope must be a JSON object");

  RepEnvelope env;
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw_parse("envelope needs an integer 'dim'");
  env.dim = j["dim"].get<int>();
  if (env.dim < 1) throw_parse("'dim' must be >= 1");

  if (!j.contains("generators") || !j["generators"].is_array() ||
      j["generators"].empty())
    throw_parse("envelope needs a nonempty 'generators' list");
  for (const auto& g : j["generators"]) {
    if (!g.is_string()) throw_parse("generator labels must be strings");
    env.generators.push_back(g.get<std::string>());
  }

  std::string mode = "generators";
  if (j.contains("mode")) {
    if (!j["mode"].is_string()) throw_parse("'mode' must be a string");
    mode = j["mode"].get<std::string>();
  }
  if (mode == "generators") {
    env.mode = RepEnvelope::Mode::generators;
  } else if (mode == "full-table") {
    env.mode = RepEnvelope::Mode::full_table;
  } else {
    throw_parse("'mode' must be \"generators\" or \"full-table\"");
  }

  const std::size_t expect = static_cast<std::size_t>(env.dim) *
                             static_cast<std::size_t>(env.dim);
  if (env.mode == RepEnvelope::Mode::generators) {
    if (!j.contains("matrices") || !j["matrices"].is_object())
      throw_parse("generators mode needs a 'matrices' object");
    for (const auto& [label, mat] : j["matrices"].items()) {
      auto flat = parse_matrix(mat, label);
      if (flat.size() != expect)
        throw_parse("matrix '" + label + "' must have dim*dim entries");
      env.matrices.emplace(label, std::move(flat));
    }
    for (const auto& g : env.generators)
      if (!env.matrices.count(g)) throw_parse("missing matrix for '" + g + "'");
    if (env.matrices.size() != env.generators.size())
      throw_parse("'matrices' labels must match 'generators'");
  } else {
    if (!j.contains("table") || !j["table"].is_object())
      throw_parse("full-table mode needs a 'table' object");
    for (const auto& [word, mat] : j["table"].items()) {
      auto flat = parse_matrix(mat, word.empty() ? "<empty>" : word);
      if (flat.size() != expect)
        throw_parse("table entry '" + word + "' must have dim*dim entries");
      env.table.emplace(word, std::move(flat));
    }
    if (env.table.empty()) throw_parse("'table' must not be empty");
  }

  if (j.contains("tolerance")) {
    const auto& t = j["tolerance"];
    if (!t.is_object() || !t.contains("atol") || !t.contains("rtol") ||
        !t["atol"].is_number() || !t["rtol"].is_number())
      throw_parse("'tolerance' must carry numeric atol and rtol");
    Tolerance tol;
    tol.atol = t["atol"].get<double>();
    tol.rtol = t["rtol"].get<double>();
    env.tolerance = tol;
  }
  return env;
}

RepEnvelope load_envelope(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw_input("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_envelope(ss.str());
}

std::string serialize_envelope(const RepEnvelope& env) {
  json j;
  j["dim"] = env.dim;
  j["generators"] = env.generators;
  j["mode"] =
      env.mode == RepEnvelope::Mode::generators ? "generators" : "full-table";
  if (env.mode == RepEnvelope::Mode::generators) {
    json m = json::object();
    for (const auto& [label, flat] : env.matrices) m[label] = matrix_to_json(flat);
    j["matrices"] = m;
  } else {
    json t = json::object();
    for (const auto& [word, flat] : env.table) t[word] = matrix_to_json(flat);
    j["table"] = t;
  }
  if (env.tolerance) {
    j["tolerance"] = {{"atol", env.tolerance->atol}, {"rtol", env.tolerance->rtol}};
  }
  return j.dump(2) + "\n";
}

std::shared_ptr<PartialRep> rep_from_envelope(const RepEnvelope& env, int dim_cap) {
  if (env.dim > dim_cap)
    throw_resource("dimension " + std::to_string(env.dim) + " exceeds cap " +
                   std::to_string(dim_cap));
  Alphabet alphabet(env.generators);
  const Tolerance tol = env.tolerance.value_or(Tolerance{});
  if (env.mode == RepEnvelope::Mode::generators) {
    std::vector<Operator> images;
    images.reserve(env.generators.size());
    for (const auto& g : env.generators)
      images.push_back(unflatten(env.matrices.at(g), env.dim));
    return PartialRep::from_family(GeneratorFamily(alphabet, std::move(images)),
                                   tol);
  }
  std::vector<std::pair<Word, Operator>> table;
  table.reserve(env.table.size());
  for (const auto& [word_str, flat] : env.table)
    table.emplace_back(parse_word(alphabet, word_str), unflatten(flat, env.dim));
  return PartialRep::from_table(std::move(alphabet), env.dim, std::move(table),
                                tol);
}

RepEnvelope envelope_from_family(const GeneratorFamily& family) {
  RepEnvelope env;
  env.dim = family.dim();
  env.mode = RepEnvelope::Mode::generators;
  for (int i = 0; i < family.alphabet().size(); ++i) {
    env.generators.push_back(family.alphabet().label(i));
    env.matrices.emplace(family.alphabet().label(i), flatten(family.image(i)));
  }
  return env;
}

RepEnvelope envelope_from_rep(const PartialRep& rep) {
  if (rep.mode() == PartialRep::Mode::generators)
    return envelope_from_family(rep.family());
  if (rep.table_horizon() < 0)
    throw_input("table representation has no complete horizon to emit");
  RepEnvelope env;
  env.dim = rep.dim();
  env.mode = RepEnvelope::Mode::full_table;
  for (int i = 0; i < rep.alphabet().size(); ++i)
    env.generators.push_back(rep.alphabet().label(i));
  for (const Word& w :
       enumerate_reduced(rep.alphabet().size(), rep.table_horizon()))
    env.table.emplace(format_word(rep.alphabet(), w), flatten(rep.evaluate(w)));
  return env;
}

const char* tool_version() { return "0.1.0"; }

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string report_to_json(const Report& report, const std::string& input_hash) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    json jc;
    jc["name"] = c.name;
    jc["passed"] = c.passed;
    jc["residual"] = c.residual;
    jc["tolerance"] = c.tolerance;
    if (!c.witness.empty()) jc["witness"] = c.witness;
    checks.push_back(jc);
  }
  json j;
  j["checks"] = checks;
  j["summary"] = {
      {"passed", static_cast<int>(report.checks.size()) - report.failed_count()},
      {"failed", report.failed_count()},
      {"all_passed", report.all_passed()}};
  j["provenance"] = {{"input_hash", input_hash},
                     {"tool_version", tool_version()}};
  return j.dump(2) + "\n";
}

std::string fiber_report_to_json(const FiberBasis& fb, const Alphabet& alphabet) {
  json j;
  j["word"] = format_word(alphabet, fb.word);
  j["rank"] = fb.rank();
  j["stabilized"] = fb.stabilized;
  j["residual_max"] = fb.residual_max;
  return j.dump(2) + "\n";
}

}  // namespace fellrep
