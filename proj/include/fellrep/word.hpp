#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fellrep {

// One letter of a free-group word: a 0-based generator index and a sign.
// {i, +1} is the generator itself, {i, -1} its inverse.
struct Letter {
  int index = 0;
  int sign = +1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

inline Letter inverse(Letter l) { return {l.index, -l.sign}; }

// Reduced word in the free group on finitely many generators.  The default
// constructed word is the identity.  Instances are always reduced: no letter
// is adjacent to its own inverse.  Immutable value type.
class Word {
public:
  Word() = default;

  // Cancels adjacent inverse pairs until none remain.  Idempotent.  When
  // num_generators is given, letters with out-of-range indices are rejected.
  static Word reduce(std::span<const Letter> letters, int num_generators = -1);

  // Positive word from generator indices, e.g. {0,1} -> x.y.
  static Word positive(std::span<const int> indices);

  const std::vector<Letter>& letters() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }

  friend bool operator==(const Word&, const Word&) = default;

private:
  explicit Word(std::vector<Letter> reduced) : letters_(std::move(reduced)) {}

  std::vector<Letter> letters_;

  friend Word mul(const Word&, const Word&);
  friend Word inv(const Word&);
};

// Concatenation followed by reduction; since both inputs are reduced, all
// cancellation happens at the junction.
Word mul(const Word& t, const Word& s);
Word inv(const Word& t);
inline int length(const Word& t) { return t.length(); }

// True iff no cancellation occurs in t*s, i.e. |ts| = |t| + |s|.
bool lengths_add(const Word& t, const Word& s);

// True iff every sign is +1; the identity counts as positive.
bool is_positive(const Word& t);

// All m^k positive words of length k, in lexicographic order of their index
// sequences.  The order is part of the contract (deterministic sums/reports).
std::vector<Word> enumerate_positive(int num_generators, int k);

// All reduced words of length <= max_length, shortest first, lexicographic
// within a length (letter order x < x^-1 < y < y^-1 < ...).
std::vector<Word> enumerate_reduced(int num_generators, int max_length);

// Splits t as mu * inv(nu) with mu, nu positive and |t| = |mu| + |nu|.
// Present exactly when the sign pattern of t is +...+-...-; unique then.
std::optional<std::pair<Word, Word>> pos_neg_decompose(const Word& t);

// Total order: by length, then letterwise with x < x^-1 < y < y^-1 < ...
bool shortlex_less(const Word& a, const Word& b);

struct ShortlexLess {
  bool operator()(const Word& a, const Word& b) const {
    return shortlex_less(a, b);
  }
};

struct WordHash {
  std::size_t operator()(const Word& w) const;
};

// Generator labels; defines the word syntax for parsing and formatting.
class Alphabet {
public:
  explicit Alphabet(std::vector<std::string> labels);

  // x, y, z, w, then g4, g5, ...
  static Alphabet standard(int num_generators);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> index_of(std::string_view label) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.labels_ == b.labels_;
  }

private:
  std::vector<std::string> labels_;
};

// Dot-separated labels with optional ^-1 suffix: "x.y^-1".  "" is the
// identity.  Unknown labels or malformed tokens raise a parse error.
Word parse_word(const Alphabet& alphabet, std::string_view text);
std::string format_word(const Alphabet& alphabet, const Word& w);

}  // namespace fellrep
