#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fellrep/bundle.hpp"
#include "fellrep/fixtures.hpp"
#include "fellrep/prep.hpp"

namespace fellrep {

// On-disk representation format.  Matrices are flat row-major arrays of
// [re, im] pairs so the file round-trips IEEE doubles exactly and stays
// readable from any language.
struct RepEnvelope {
  enum class Mode { generators, full_table };

  int dim = 0;
  std::vector<std::string> generators;
  Mode mode = Mode::generators;
  std::map<std::string, std::vector<std::array<double, 2>>> matrices;
  std::optional<Tolerance> tolerance;
  std::map<std::string, std::vector<std::array<double, 2>>> table;
};

// Schema violations and malformed JSON both surface as parse errors.
RepEnvelope parse_envelope(const std::string& json_text);
RepEnvelope load_envelope(const std::string& path);
std::string serialize_envelope(const RepEnvelope& env);

std::shared_ptr<PartialRep> rep_from_envelope(const RepEnvelope& env,
                                              int dim_cap = kDefaultDimCap);
RepEnvelope envelope_from_family(const GeneratorFamily& family);
RepEnvelope envelope_from_rep(const PartialRep& rep);

const char* tool_version();

// FNV-1a over the raw input bytes; stamped into reports as provenance.
std::string fnv1a_hex(const std::string& bytes);

// CheckReport serialization: checks in order, pass/fail summary, provenance.
std::string report_to_json(const Report& report, const std::string& input_hash);

std::string fiber_report_to_json(const FiberBasis& fb, const Alphabet& alphabet);

}  // namespace fellrep
