#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include <Eigen/Dense>

#include "fellrep/error.hpp"
#include "fellrep/fixtures.hpp"

using namespace fellrep;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::input;
}

}  // namespace

TEST_CASE("tree fixture dimensions count the truncated tree") {
  CHECK(tree_rep(2, 2).dim() == 7);    // 1 + 2 + 4
  CHECK(tree_rep(3, 2).dim() == 13);   // 1 + 3 + 9
  CHECK(tree_rep(1, 5).dim() == 6);
}

TEST_CASE("tree images are partial isometries composing additively") {
  const GeneratorFamily fam = tree_rep(2, 3);
  const Tolerance tol;
  for (int i = 0; i < 2; ++i) {
    const Operator& u = fam.image(i);
    CHECK(is_partial_isometry(u, tol));
    CHECK(frobenius_norm(Operator(u * adjoint(u) * u - u)) == 0.0);
  }
  // Prepending means sigma(x) sigma(y) = sigma(xy) holds on the nose.
  const auto rep = PartialRep::from_family(tree_rep(2, 3));
  const Word xy = parse_word(rep->alphabet(), "x.y");
  CHECK(value_key(rep->evaluate(xy)) ==
        value_key(prune_zeros(fam.image(0) * fam.image(1))));
}

TEST_CASE("tree fixture honors the dimension cap") {
  CHECK(kind_of([] { tree_rep(2, 12); }) == ErrorKind::resource);
  CHECK_NOTHROW(tree_rep(2, 5, 100));
  CHECK(kind_of([] { tree_rep(2, 5, 10); }) == ErrorKind::resource);
  CHECK(kind_of([] { tree_rep(0, 2); }) == ErrorKind::input);
  CHECK(kind_of([] { tree_rep(2, 0); }) == ErrorKind::input);
}

TEST_CASE("subshift fixture counts admissible words") {
  Eigen::MatrixXi swap(2, 2);
  swap << 0, 1, 1, 0;
  // Only alternating words survive: two per positive length.
  CHECK(ck_rep(swap, 2).dim() == 5);
  CHECK(ck_rep(swap, 6).dim() == 13);

  Eigen::MatrixXi full = Eigen::MatrixXi::Ones(2, 2);
  CHECK(ck_rep(full, 2).dim() == tree_rep(2, 2).dim());

  CHECK(ck_rep(Eigen::MatrixXi::Identity(2, 2), 2).dim() == 5);
}

TEST_CASE("subshift fixture validates its matrix") {
  Eigen::MatrixXi bad(2, 2);
  bad << 0, 2, 1, 0;
  CHECK(kind_of([&] { ck_rep(bad, 2); }) == ErrorKind::input);

  Eigen::MatrixXi zero_row(2, 2);
  zero_row << 0, 0, 1, 0;
  CHECK(kind_of([&] { ck_rep(zero_row, 2); }) == ErrorKind::input);

  CHECK(kind_of([] { ck_rep(Eigen::MatrixXi::Ones(2, 3), 2); }) ==
        ErrorKind::input);
}

TEST_CASE("subshift family passes validation") {
  Eigen::MatrixXi swap(2, 2);
  swap << 0, 1, 1, 0;
  CHECK(validate_family(ck_rep(swap, 4), ValidationOptions{}).accepted());
}

TEST_CASE("scalar tables: parity and point mass") {
  const auto parity = parity_rep(2, 4);
  CHECK(parity->dim() == 1);
  CHECK(parity->table_horizon() == 4);
  const Alphabet& ab = parity->alphabet();
  CHECK(frobenius_norm(parity->evaluate(parse_word(ab, "x"))) == 0.0);
  CHECK(frobenius_norm(parity->evaluate(parse_word(ab, "x.y"))) ==
        doctest::Approx(1.0));
  CHECK(frobenius_norm(parity->evaluate(Word())) == doctest::Approx(1.0));

  const auto delta = delta_rep(2, 4);
  CHECK(frobenius_norm(delta->evaluate(Word())) == doctest::Approx(1.0));
  CHECK(frobenius_norm(delta->evaluate(parse_word(ab, "x"))) == 0.0);
  CHECK(frobenius_norm(delta->evaluate(parse_word(ab, "x.y"))) == 0.0);
}

TEST_CASE("random families are exact partial isometries, reproducibly") {
  const GeneratorFamily a = random_family(5, 2, 99);
  const GeneratorFamily b = random_family(5, 2, 99);
  const GeneratorFamily c = random_family(5, 2, 100);
  const Tolerance tol;
  bool all_same = true;
  bool any_diff = false;
  for (int i = 0; i < 2; ++i) {
    CHECK(is_partial_isometry(a.image(i), tol));
    const double res = spectral_norm(
        a.image(i) * adjoint(a.image(i)) * a.image(i) - a.image(i));
    CHECK(res <= 1e-12);
    all_same = all_same && value_key(a.image(i)) == value_key(b.image(i));
    any_diff = any_diff || value_key(a.image(i)) != value_key(c.image(i));
  }
  CHECK(all_same);
  CHECK(any_diff);
}

TEST_CASE("fixture dispatch covers every kind") {
  FixtureSpec spec;
  spec.kind = FixtureSpec::Kind::tree;
  spec.m = 2;
  spec.depth = 2;
  auto rep = make_fixture(spec);
  CHECK(rep->dim() == 7);
  CHECK(rep->mode() == PartialRep::Mode::generators);

  spec.kind = FixtureSpec::Kind::ck;
  spec.admissible = Eigen::MatrixXi::Ones(2, 2);
  CHECK(make_fixture(spec)->dim() == 7);

  spec.kind = FixtureSpec::Kind::parity;
  spec.depth = 4;
  auto parity = make_fixture(spec);
  CHECK(parity->mode() == PartialRep::Mode::table);
  CHECK(parity->table_horizon() == 4);

  spec.kind = FixtureSpec::Kind::delta;
  CHECK(make_fixture(spec)->dim() == 1);

  spec.kind = FixtureSpec::Kind::random;
  spec.dim = 4;
  spec.seed = 3;
  CHECK(make_fixture(spec)->dim() == 4);
}

TEST_CASE("fixture dispatch respects the cap parameter") {
  FixtureSpec spec;
  spec.kind = FixtureSpec::Kind::tree;
  spec.m = 2;
  spec.depth = 4;
  CHECK(kind_of([&] { make_fixture(spec, 10); }) == ErrorKind::resource);
}
