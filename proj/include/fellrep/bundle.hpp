#pragma once

#include <span>
#include <vector>

#include "fellrep/prep.hpp"
#include "fellrep/section.hpp"

namespace fellrep {

// Residual threshold for admitting a new direction into a fiber basis;
// separates genuine rank from rounding noise at the dimensions we run at.
inline constexpr double kFiberThreshold = 1e-8;

// Hilbert-Schmidt-orthonormal basis of the subspace spanned by products
// e(r_1) ... e(r_k) s(t) with every |r_i| <= r_depth.  Built by closing the
// span under left multiplication by the (deduplicated) range projections, so
// on exit no generator takes the span anywhere new; `stabilized` certifies
// that the closure loop genuinely ran to completion and `residual_max` is the
// largest rejected residual seen.
struct FiberBasis {
  Word word;
  int dim = 0;
  int r_depth = 0;
  std::vector<Operator> basis;
  bool stabilized = false;
  double residual_max = 0.0;

  int rank() const { return static_cast<int>(basis.size()); }
};

// Enough room for every projection word a product of two fiber elements can
// drag in; fibers at this depth absorb such products on valid reps.
int default_r_depth(const Word& t);

FiberBasis fiber(const PartialRep& rep, const Word& t, int r_depth);
FiberBasis fiber(const PartialRep& rep, const Word& t);

// Hilbert-Schmidt distance from op to the span of an orthonormal list.
double span_residual(const Operator& op, const std::vector<Operator>& basis);

// Greedy orthonormalization of an arbitrary generating list.
std::vector<Operator> orthonormal_span(const std::vector<Operator>& gens,
                                       double threshold = kFiberThreshold);

// Grading laws: products of fibers land in the product fiber, adjoints in the
// inverse fiber.  Target fibers are built with enlarged r_depth (see
// default_r_depth) so truncation cannot fake a failure.
Report check_bundle_axioms(const PartialRep& rep, std::span<const Word> words,
                           int r_depth, const Tolerance& tol);

// For length-additive pairs the containment sharpens to span equality.
Report check_bundle_semisaturated(const PartialRep& rep,
                                  std::span<const std::pair<Word, Word>> pairs,
                                  int r_depth, const Tolerance& tol);

// Distinct generators have fibers with orthogonal ranges.
Report check_bundle_orthogonal(const PartialRep& rep, const Tolerance& tol);

// E E* E stays inside span(E).
bool is_tro(const FiberBasis& e, const Tolerance& tol);

// u* E and E* E span the same subspace, likewise u E* and E E*.
bool tro_associated(const Operator& u, const FiberBasis& e, const Tolerance& tol);

// Additionally the range of u u* equals the joint column space of E.
bool tro_strictly_associated(const Operator& u, const FiberBasis& e,
                             const Tolerance& tol);

}  // namespace fellrep
