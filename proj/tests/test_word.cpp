#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <set>
#include <vector>

#include "fellrep/error.hpp"
#include "fellrep/word.hpp"

using namespace fellrep;

namespace {

const Alphabet kAb2 = Alphabet::standard(2);
const Alphabet kAb3 = Alphabet::standard(3);

Word w(const char* text) { return parse_word(kAb3, text); }

}  // namespace

TEST_CASE("reduction cancels adjacent inverse pairs") {
  const std::array<Letter, 2> pair{Letter{0, +1}, Letter{0, -1}};
  CHECK(Word::reduce(pair).empty());

  // Cancellation cascades inward: x y y^-1 x^-1 collapses fully.
  const std::array<Letter, 4> nest{Letter{0, +1}, Letter{1, +1}, Letter{1, -1},
                                   Letter{0, -1}};
  CHECK(Word::reduce(nest).empty());

  const std::array<Letter, 3> mixed{Letter{0, +1}, Letter{1, +1}, Letter{1, +1}};
  const Word r = Word::reduce(mixed);
  CHECK(r.length() == 3);
  CHECK(Word::reduce(r.letters()) == r);  // idempotent
}

TEST_CASE("reduction rejects out-of-range letters when told the rank") {
  const std::array<Letter, 1> bad{Letter{2, +1}};
  CHECK_THROWS_AS(Word::reduce(bad, 2), Error);
  CHECK_NOTHROW(Word::reduce(bad, 3));
  try {
    Word::reduce(bad, 2);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::input);
  }
}

TEST_CASE("multiplication reduces at the junction only") {
  CHECK(mul(w("x.y"), w("y^-1")) == w("x"));
  CHECK(mul(w("x.y"), w("y^-1.x^-1")).empty());
  CHECK(mul(w(""), w("z")) == w("z"));
  CHECK(mul(w("z"), w("")) == w("z"));

  // Associativity over a small sample.
  const std::vector<Word> sample = enumerate_reduced(2, 2);
  for (const Word& a : sample)
    for (const Word& b : sample)
      for (const Word& c : sample)
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
}

TEST_CASE("inverse reverses and flips") {
  CHECK(inv(w("x.y")) == w("y^-1.x^-1"));
  CHECK(inv(w("")).empty());
  for (const Word& a : enumerate_reduced(3, 3)) {
    CHECK(mul(a, inv(a)).empty());
    CHECK(inv(inv(a)) == a);
  }
}

TEST_CASE("lengths_add detects cancellation-free products") {
  CHECK(lengths_add(w("x"), w("y")));
  CHECK(!lengths_add(w("x"), w("x^-1")));
  CHECK(lengths_add(w(""), w("x")));
  for (const Word& a : enumerate_reduced(2, 2))
    for (const Word& b : enumerate_reduced(2, 2))
      CHECK(lengths_add(a, b) == (mul(a, b).length() == a.length() + b.length()));
}

TEST_CASE("positivity") {
  CHECK(is_positive(w("")));
  CHECK(is_positive(w("x.y.x")));
  CHECK(!is_positive(w("x^-1")));
  CHECK(!is_positive(w("x.y^-1")));
}

TEST_CASE("positive enumeration is complete and lexicographic") {
  const auto words = enumerate_positive(2, 3);
  CHECK(words.size() == 8);
  CHECK(words.front() == w("x.x.x"));
  CHECK(words.back() == w("y.y.y"));
  for (std::size_t i = 0; i + 1 < words.size(); ++i)
    CHECK(shortlex_less(words[i], words[i + 1]));
  for (const Word& a : words) {
    CHECK(a.length() == 3);
    CHECK(is_positive(a));
  }
  CHECK(enumerate_positive(3, 0).size() == 1);
}

TEST_CASE("reduced enumeration counts match the free group") {
  // 1 + 2m + 2m(2m-1) + ... words of length <= L.
  const auto words = enumerate_reduced(2, 2);
  CHECK(words.size() == 1 + 4 + 4 * 3);
  CHECK(words.front().empty());
  std::set<std::string> seen;
  for (const Word& a : words) seen.insert(format_word(kAb2, a));
  CHECK(seen.size() == words.size());
  for (std::size_t i = 0; i + 1 < words.size(); ++i)
    CHECK(shortlex_less(words[i], words[i + 1]));

  const auto deeper = enumerate_reduced(3, 3);
  CHECK(deeper.size() == 1 + 6 + 6 * 5 + 6 * 5 * 5);
}

TEST_CASE("positive-negative splitting") {
  const auto split = pos_neg_decompose(w("x.y.z^-1"));
  REQUIRE(split.has_value());
  CHECK(split->first == w("x.y"));
  CHECK(split->second == w("z"));

  const auto trivial = pos_neg_decompose(w(""));
  REQUIRE(trivial.has_value());
  CHECK(trivial->first.empty());
  CHECK(trivial->second.empty());

  const auto pos = pos_neg_decompose(w("x.y"));
  REQUIRE(pos.has_value());
  CHECK(pos->second.empty());

  const auto neg = pos_neg_decompose(w("y^-1.x^-1"));
  REQUIRE(neg.has_value());
  CHECK(neg->first.empty());
  CHECK(neg->second == w("x.y"));

  CHECK(!pos_neg_decompose(w("x^-1.y")).has_value());
  CHECK(!pos_neg_decompose(w("x.y^-1.x")).has_value());

  // Round trip: mu * nu^-1 recovers the word and the lengths add.
  for (const Word& a : enumerate_reduced(2, 3)) {
    const auto d = pos_neg_decompose(a);
    if (!d) continue;
    CHECK(mul(d->first, inv(d->second)) == a);
    CHECK(d->first.length() + d->second.length() == a.length());
  }
}

TEST_CASE("shortlex order") {
  CHECK(shortlex_less(w(""), w("x")));
  CHECK(shortlex_less(w("x"), w("x^-1")));
  CHECK(shortlex_less(w("x^-1"), w("y")));
  CHECK(shortlex_less(w("y^-1"), w("x.x")));
  CHECK(!shortlex_less(w("x"), w("x")));
  // Total: exactly one of <, ==, > holds.
  for (const Word& a : enumerate_reduced(2, 2))
    for (const Word& b : enumerate_reduced(2, 2)) {
      const int rel = (a == b) + shortlex_less(a, b) + shortlex_less(b, a);
      CHECK(rel == 1);
    }
}

TEST_CASE("hash respects equality") {
  WordHash h;
  CHECK(h(w("x.y")) == h(mul(w("x"), w("y"))));
  CHECK(h(w("")) == h(mul(w("x"), w("x^-1"))));
}

TEST_CASE("standard alphabet labels") {
  const Alphabet ab = Alphabet::standard(6);
  CHECK(ab.label(0) == "x");
  CHECK(ab.label(1) == "y");
  CHECK(ab.label(2) == "z");
  CHECK(ab.label(3) == "w");
  CHECK(ab.label(4) == "g4");
  CHECK(ab.label(5) == "g5");
  CHECK(ab.index_of("z") == 2);
  CHECK(!ab.index_of("q").has_value());
}

TEST_CASE("alphabet rejects bad label sets") {
  CHECK_THROWS_AS(Alphabet(std::vector<std::string>{}), Error);
  CHECK_THROWS_AS(Alphabet({"x", "x"}), Error);
  CHECK_THROWS_AS(Alphabet({"x", ""}), Error);
}

TEST_CASE("parse and format round trip") {
  CHECK(parse_word(kAb2, "").empty());
  CHECK(format_word(kAb2, Word()) == "");
  CHECK(format_word(kAb3, w("x.y^-1.z")) == "x.y^-1.z");
  for (const Word& a : enumerate_reduced(3, 3))
    CHECK(parse_word(kAb3, format_word(kAb3, a)) == a);
}

TEST_CASE("parse input is reduced") {
  CHECK(parse_word(kAb2, "x.x^-1").empty());
  CHECK(parse_word(kAb2, "x.y.y^-1") == parse_word(kAb2, "x"));
}

TEST_CASE("parse rejects malformed words") {
  for (const char* bad : {"q", "x..y", ".x", "x.", "x^2", "x^-1^-1", "x ^-1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_word(kAb2, bad), Error);
    try {
      parse_word(kAb2, bad);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::parse);
    }
  }
}
