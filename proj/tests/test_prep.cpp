#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <utility>
#include <vector>

#include "fellrep/error.hpp"
#include "fellrep/fixtures.hpp"
#include "fellrep/prep.hpp"

using namespace fellrep;

namespace {

RepPtr tree(int m, int depth) {
  return PartialRep::from_family(tree_rep(m, depth));
}

Word w(const RepPtr& rep, const char* text) {
  return parse_word(rep->alphabet(), text);
}

std::vector<std::pair<Word, Word>> additive_pairs(const RepPtr& rep,
                                                  int max_len) {
  std::vector<std::pair<Word, Word>> out;
  const auto words = enumerate_reduced(rep->alphabet().size(), max_len);
  for (const Word& a : words)
    for (const Word& b : words)
      if (lengths_add(a, b)) out.emplace_back(a, b);
  return out;
}

}  // namespace

TEST_CASE("generator family rejects malformed image lists") {
  const Alphabet ab = Alphabet::standard(2);
  Operator rect(2, 3);
  rect.makeCompressed();
  CHECK_THROWS_AS(GeneratorFamily(ab, {identity_op(2), rect}), Error);
  CHECK_THROWS_AS(GeneratorFamily(ab, {identity_op(2), identity_op(3)}), Error);
  CHECK_THROWS_AS(GeneratorFamily(ab, {identity_op(2)}), Error);
}

TEST_CASE("family validation accepts the shift family") {
  const auto report = validate_family(tree_rep(2, 3), ValidationOptions{});
  CHECK(report.accepted());
  CHECK(report.checked_length == 2);
  CHECK(report.products_explored > 0);
  CHECK(!report.truncated);
  CHECK(report.report.max_residual() <= 1e-12);
}

TEST_CASE("family validation rejects a non-isometry") {
  const Alphabet ab = Alphabet::standard(2);
  const Operator big = Complex(2.0, 0.0) * identity_op(3);
  GeneratorFamily fam(ab, {big, zero_op(3)});
  const auto report = validate_family(fam, ValidationOptions{});
  CHECK(!report.accepted());
  bool found = false;
  for (const auto& c : report.report.checks)
    if (c.name == "products-are-partial-isometries" && !c.passed) {
      found = true;
      CHECK(!c.witness.empty());
    }
  CHECK(found);
}

TEST_CASE("family validation rejects unstructured partial isometries") {
  // Exact partial isometries whose range projections do not commute.
  const auto report = validate_family(random_family(4, 2, 7), ValidationOptions{});
  CHECK(!report.accepted());
  CHECK(report.report.failed_count() > 0);
}

TEST_CASE("family validation reports truncation at the cap") {
  ValidationOptions opt;
  opt.product_cap = 3;
  const auto report = validate_family(tree_rep(2, 3), opt);
  CHECK(report.truncated);
  CHECK(!report.accepted());
}

TEST_CASE("evaluation composes along length-additive products") {
  const auto rep = tree(2, 3);
  const Operator lhs = rep->evaluate(w(rep, "x.y"));
  const Operator rhs =
      prune_zeros(rep->evaluate(w(rep, "x")) * rep->evaluate(w(rep, "y")));
  CHECK(value_key(lhs) == value_key(rhs));

  const Operator& sx = rep->evaluate(w(rep, "x"));
  const Operator back = prune_zeros(Operator(sx * adjoint(sx) * sx - sx));
  CHECK(frobenius_norm(back) == 0.0);

  CHECK(value_key(rep->evaluate(Word())) == value_key(identity_op(rep->dim())));
}

TEST_CASE("evaluation is memoized") {
  const auto rep = tree(2, 3);
  const Operator* first = &rep->evaluate(w(rep, "x.y.x"));
  const Operator* second = &rep->evaluate(w(rep, "x.y.x"));
  CHECK(first == second);
  const Operator* e1 = &rep->range_projection(w(rep, "x"));
  const Operator* e2 = &rep->range_projection(w(rep, "x"));
  CHECK(e1 == e2);
}

TEST_CASE("defining axioms hold on the shift representation") {
  const auto rep = tree(2, 3);
  const auto words = enumerate_reduced(2, 2);
  const Report report = check_axioms(*rep, words, rep->tolerance());
  CHECK(report.all_passed());
  CHECK(report.max_residual() <= 1e-12);
  REQUIRE(report.checks.size() == 3);
  CHECK(report.checks[0].name == "composition");
  CHECK(report.checks[1].name == "adjoint");
  CHECK(report.checks[2].name == "projection-shift");
}

TEST_CASE("generator ranges are orthogonal on the shift representation") {
  const auto rep = tree(3, 2);
  CHECK(is_orthogonal(*rep, rep->tolerance()));
  const CheckResult r = orthogonality_check(*rep, rep->tolerance());
  CHECK(r.name == "generator-ranges-orthogonal");
  CHECK(r.passed);
}

TEST_CASE("semi-saturation holds on the shift, fails on the parity table") {
  const auto rep = tree(2, 4);
  const auto pairs = additive_pairs(rep, 2);
  CHECK(is_semisaturated(*rep, pairs, rep->tolerance()));

  const auto parity = parity_rep(2, 6);
  const auto ppairs = additive_pairs(parity, 2);
  const CheckResult r = semisaturation_check(*parity, ppairs, parity->tolerance());
  CHECK(r.name == "semi-saturated");
  CHECK(!r.passed);
  CHECK(!r.witness.empty());
  CHECK(r.residual == doctest::Approx(1.0));

  // The witness tracks the caller's pair order: probing the canonical pair
  // first reports it.
  const std::vector<std::pair<Word, Word>> canonical{
      {w(parity, "x"), w(parity, "y")}};
  const CheckResult rc =
      semisaturation_check(*parity, canonical, parity->tolerance());
  CHECK(!rc.passed);
  CHECK(rc.witness == "(x, y)");
}

TEST_CASE("parity satisfies the axioms even though it is not semi-saturated") {
  const auto parity = parity_rep(2, 6);
  const auto words = enumerate_reduced(2, 2);
  const Report report = check_axioms(*parity, words, parity->tolerance());
  CHECK(report.all_passed());
}

TEST_CASE("delta table passes every check it is offered") {
  const auto delta = delta_rep(2, 6);
  const auto words = enumerate_reduced(2, 2);
  CHECK(check_axioms(*delta, words, delta->tolerance()).all_passed());
  CHECK(is_orthogonal(*delta, delta->tolerance()));
  CHECK(is_semisaturated(*delta, additive_pairs(delta, 2), delta->tolerance()));
}

TEST_CASE("words outside the positive-negative form evaluate to zero") {
  const auto rep = tree(2, 4);
  const auto words = enumerate_reduced(2, 3);
  const Report report = check_posneg_vanishing(*rep, words, rep->tolerance());
  CHECK(report.all_passed());

  CHECK(frobenius_norm(rep->evaluate(w(rep, "x^-1.y"))) == 0.0);
  CHECK(frobenius_norm(rep->evaluate(w(rep, "y^-1.x.x"))) == 0.0);
}

TEST_CASE("distinct positive words of one length have orthogonal ranges") {
  const auto rep = tree(2, 4);
  for (int k = 1; k <= 3; ++k) {
    const Report report = check_positive_orthogonality(*rep, k, rep->tolerance());
    CHECK(report.all_passed());
  }
}

TEST_CASE("table mode bookkeeping") {
  const auto parity = parity_rep(2, 4);
  CHECK(parity->mode() == PartialRep::Mode::table);
  CHECK(parity->table_horizon() == 4);
  CHECK(parity->dim() == 1);

  // Inside the horizon: lookups succeed; outside: input error.
  CHECK(frobenius_norm(parity->evaluate(w(parity, "x.y"))) == doctest::Approx(1.0));
  CHECK_THROWS_AS(parity->evaluate(w(parity, "x.y.x.y.x")), Error);
}

TEST_CASE("table construction rejects duplicates and dimension mismatches") {
  const Alphabet ab = Alphabet::standard(2);
  const Word x = parse_word(ab, "x");
  std::vector<std::pair<Word, Operator>> dup{{x, zero_op(1)}, {x, zero_op(1)}};
  CHECK_THROWS_AS(PartialRep::from_table(ab, 1, std::move(dup)), Error);

  std::vector<std::pair<Word, Operator>> bad{{Word(), identity_op(2)}};
  CHECK_THROWS_AS(PartialRep::from_table(ab, 1, std::move(bad)), Error);
}
