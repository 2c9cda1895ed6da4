#pragma once

#include "fellrep/approx.hpp"
#include "fellrep/bundle.hpp"
#include "fellrep/prep.hpp"

namespace fellrep {

struct VerifyOptions {
  int depth = 3;
  Tolerance tol;
  // Bundle containments are sampled on short words; their target fibers get
  // enlarged internally, so 2 is both cheap and honest.
  int bundle_word_length = 2;
  int bundle_r_depth = 2;
  std::size_t product_cap = 20000;
};

// The full suite, in a fixed order: family validation, the defining axioms,
// orthogonality, semi-saturation, the eight projection identities, the two
// summation lemmas for n up to depth, and the bundle grading laws on short
// words.  For full-table inputs the depth is clamped so that no check ever
// asks for a word beyond the stored horizon.
Report run_verify(const RepPtr& rep, const VerifyOptions& options);

}  // namespace fellrep
