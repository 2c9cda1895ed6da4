#pragma once

#include <cstdint>
#include <memory>

#include <Eigen/Dense>

#include "fellrep/prep.hpp"

namespace fellrep {

inline constexpr int kDefaultDimCap = 4096;

// Shift on the positive-word basis: basis vectors are positive words of
// length <= depth, sigma(x_i) e_w = e_{x_i w} when that still fits, else 0.
// Prepending (not appending) makes sigma(x) sigma(y) = sigma(xy) exact for
// positive words.
GeneratorFamily tree_rep(int m, int depth, int dim_cap = kDefaultDimCap);

// Same shift restricted to admissible words: x_i w is a basis vector only if
// admissible(i, head(w)) = 1.  A finite-depth stand-in for subshift-type
// representations; entries must be 0/1 and no row may be all zero.
GeneratorFamily ck_rep(const Eigen::MatrixXi& admissible, int depth,
                       int dim_cap = kDefaultDimCap);

// One-dimensional full tables on all reduced words up to the horizon.
// parity: sigma(t) = 1 when |t| is even.  Satisfies the axioms but not
// semi-saturation (sigma(x) sigma(y) = 0 while sigma(xy) = 1).
// delta: sigma(t) = 1 only at the empty word; satisfies everything.
std::shared_ptr<PartialRep> parity_rep(int num_generators = 2, int horizon = 6);
std::shared_ptr<PartialRep> delta_rep(int num_generators = 2, int horizon = 6);

// Seeded generator images that are exact partial isometries (random matrix,
// singular values snapped: the largest ceil(dim/2) become 1, the rest 0) but
// carry no further structure.  Range projections of distinct images almost
// never commute, so family validation usually rejects these; that rejection
// path is the point.
GeneratorFamily random_family(int dim, int m, std::uint64_t seed);

struct FixtureSpec {
  enum class Kind { tree, ck, parity, delta, random };
  Kind kind = Kind::tree;
  int m = 2;
  int depth = 2;
  Eigen::MatrixXi admissible;    // ck only
  std::uint64_t seed = 0;        // random only
  int dim = 4;                   // random only
};

std::shared_ptr<PartialRep> make_fixture(const FixtureSpec& spec,
                                         int dim_cap = kDefaultDimCap);

}  // namespace fellrep
