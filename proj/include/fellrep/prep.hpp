#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "fellrep/linop.hpp"
#include "fellrep/report.hpp"
#include "fellrep/word.hpp"

namespace fellrep {

// Generator labels together with one operator image per generator, all square
// of one dimension.  Whether the images actually generate a partial
// representation is decided by validate_family, not by construction.
class GeneratorFamily {
public:
  GeneratorFamily(Alphabet alphabet, std::vector<Operator> images);

  const Alphabet& alphabet() const { return alphabet_; }
  int dim() const { return dim_; }
  const Operator& image(int i) const { return images_[static_cast<std::size_t>(i)]; }

private:
  Alphabet alphabet_;
  std::vector<Operator> images_;
  int dim_;
};

struct ValidationOptions {
  int max_product_length = 2;
  Tolerance tol;
  // Distinct products explored are capped; hitting the cap marks the report
  // truncated rather than silently passing.
  std::size_t product_cap = 20000;
};

// Finite slice of the product-semigroup conditions: every product of at most
// max_product_length factors drawn from the images and their adjoints must be
// a partial isometry, and all their range projections must pairwise commute.
// Only these two conditions are checked; they imply the partial-representation
// axioms for words inside the checked length.
struct ValidationReport {
  Report report;
  int checked_length = 0;
  std::size_t products_explored = 0;
  bool truncated = false;

  bool accepted() const { return report.all_passed() && !truncated; }
};

ValidationReport validate_family(const GeneratorFamily& family,
                                 const ValidationOptions& options);

// Evaluates words to operators.  Two modes, kept distinct on purpose:
// generator mode folds images left to right along the reduced word (so the
// identities that follow from a valid family hold by construction), while
// table mode stores an explicit word -> operator map and makes no promise at
// all — it exists so that assignments which merely restrict to the same
// generator images can be told apart by the checks.
class PartialRep {
public:
  enum class Mode { generators, table };

  static std::shared_ptr<PartialRep> from_family(GeneratorFamily family,
                                                 Tolerance tol = {});
  static std::shared_ptr<PartialRep> from_table(
      Alphabet alphabet, int dim, std::vector<std::pair<Word, Operator>> table,
      Tolerance tol = {});

  Mode mode() const { return mode_; }
  int dim() const { return dim_; }
  const Alphabet& alphabet() const { return alphabet_; }
  const Tolerance& tolerance() const { return tol_; }
  const GeneratorFamily& family() const;

  // Largest L such that every reduced word of length <= L is in the table;
  // -1 in generator mode (no horizon).
  int table_horizon() const { return table_horizon_; }

  // Image of a reduced word.  Generator mode: memoized left-to-right product,
  // so results are bitwise independent of call order; safe under concurrent
  // callers.  Table mode: lookup, missing words are an input error.
  const Operator& evaluate(const Word& w) const;

  // Range projection e(t) = evaluate(t) evaluate(t)^*; memoized.
  const Operator& range_projection(const Word& t) const;

  const std::optional<ValidationReport>& validation() const { return validation_; }
  void attach_validation(ValidationReport v) { validation_ = std::move(v); }

private:
  PartialRep() = default;

  const Operator& evaluate_locked(const Word& w) const;

  Mode mode_ = Mode::generators;
  Alphabet alphabet_{std::vector<std::string>{"x"}};
  int dim_ = 1;
  Tolerance tol_;
  std::optional<GeneratorFamily> family_;
  std::vector<Operator> letter_images_;  // generator mode: [img0, adj0, img1, adj1, ...]
  int table_horizon_ = -1;
  std::optional<ValidationReport> validation_;

  mutable std::mutex mutex_;
  mutable std::unordered_map<Word, Operator, WordHash> image_memo_;
  mutable std::unordered_map<Word, Operator, WordHash> range_memo_;
};

using RepPtr = std::shared_ptr<const PartialRep>;

// For all ordered pairs (t, s) from the list, the three defining residuals:
//   composition       s(t) s(s) s(s^-1)  =  s(ts) s(s^-1)
//   adjoint           s(t^-1)            =  s(t)^*
//   projection-shift  s(t) e(s)          =  e(ts) s(t)
Report check_axioms(const PartialRep& rep, std::span<const Word> words,
                    const Tolerance& tol);

// Images of distinct generators have orthogonal ranges: s(x)^* s(y) = 0.
CheckResult orthogonality_check(const PartialRep& rep, const Tolerance& tol);
bool is_orthogonal(const PartialRep& rep, const Tolerance& tol);

// s(t) s(s) = s(ts) over sampled pairs whose lengths add; pairs that cancel
// are skipped (vacuously fine).
CheckResult semisaturation_check(const PartialRep& rep,
                                 std::span<const std::pair<Word, Word>> pairs,
                                 const Tolerance& tol);
bool is_semisaturated(const PartialRep& rep,
                      std::span<const std::pair<Word, Word>> pairs,
                      const Tolerance& tol);

// On an orthogonal semi-saturated rep, words that do not split as a positive
// times an inverse-positive part must evaluate to zero.
Report check_posneg_vanishing(const PartialRep& rep, std::span<const Word> words,
                              const Tolerance& tol);

// Distinct positive words of equal length k have s(a)^* s(b) = 0.
Report check_positive_orthogonality(const PartialRep& rep, int k,
                                    const Tolerance& tol);

}  // namespace fellrep
