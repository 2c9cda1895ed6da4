#include "fellrep/verify.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "fellrep/error.hpp"

namespace fellrep {

Report run_verify(const RepPtr& rep, const VerifyOptions& options) {
  if (!rep) throw_input("verify needs a representation");
  if (options.depth < 1) throw_input("verify needs depth >= 1");

  int depth = options.depth;
  if (rep->mode() == PartialRep::Mode::table) {
    // Axiom and shift checks form products of two depth-length words.
    const int usable = rep->table_horizon() / 2;
    if (usable < 1)
      throw_input("table horizon too small to verify anything");
    depth = std::min(depth, usable);
  }

  const Tolerance tol = options.tol;
  const int m = rep->alphabet().size();
  Report out;

  // Family validation over the product semigroup slice.
  {
    std::vector<Operator> images;
    images.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
      images.push_back(rep->evaluate(Word::positive(std::array{i})));
    GeneratorFamily family(rep->alphabet(), std::move(images));
    ValidationOptions vopt;
    vopt.max_product_length = 2 * depth;
    vopt.tol = tol;
    vopt.product_cap = options.product_cap;
    ValidationReport vr = validate_family(family, vopt);
    for (auto& c : vr.report.checks) out.add(std::move(c));
    CheckResult complete;
    complete.name = "product-exploration-complete";
    complete.passed = !vr.truncated;
    complete.residual = vr.truncated ? 1.0 : 0.0;
    complete.tolerance = 0.0;
    complete.witness = "explored " + std::to_string(vr.products_explored) +
                       " distinct products of length <= " +
                       std::to_string(vr.checked_length);
    out.add(std::move(complete));
  }

  const auto words = enumerate_reduced(m, depth);

  for (auto& c : check_axioms(*rep, words, tol).checks) out.add(std::move(c));
  out.add(orthogonality_check(*rep, tol));

  {
    // Distinct-generator pairs lead the sample: on a failure the reported
    // witness is then the canonical one, not whichever pair enumerates first.
    std::vector<std::pair<Word, Word>> pairs;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (i != j)
          pairs.emplace_back(Word::positive(std::array{i}),
                             Word::positive(std::array{j}));
    for (const Word& t : words)
      for (const Word& s : words)
        if (lengths_add(t, s)) pairs.emplace_back(t, s);
    out.add(semisaturation_check(*rep, pairs, tol));
  }

  ProjectionFamily pf(rep, depth);
  for (auto& c : projection_relations_report(pf, tol).checks)
    out.add(std::move(c));

  {
    WorstCase sum_b("b-sums-to-identity");
    WorstCase sum_a("a-squares-sum-to-identity");
    for (int n = 1; n <= depth; ++n) {
      const CheckResult b = sum_b_check(pf, n, tol);
      sum_b.observe(b.residual, b.tolerance, b.witness);
      const CheckResult a = sum_a_check(pf, n, tol);
      sum_a.observe(a.residual, a.tolerance, a.witness);
    }
    out.add(sum_b.result());
    out.add(sum_a.result());
  }

  {
    std::vector<Word> short_words;
    const int len = std::min(options.bundle_word_length, depth);
    for (const Word& w : enumerate_reduced(m, len)) short_words.push_back(w);
    for (auto& c :
         check_bundle_axioms(*rep, short_words, options.bundle_r_depth, tol)
             .checks)
      out.add(std::move(c));
  }

  return out;
}

}  // namespace fellrep
