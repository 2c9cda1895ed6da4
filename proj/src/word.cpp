#include "fellrep/word.hpp"

#include <algorithm>
#include <functional>

#include "fellrep/error.hpp"

namespace fellrep {

Word Word::reduce(std::span<const Letter> letters, int num_generators) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (const Letter& l : letters) {
    if (l.index < 0 || (num_generators >= 0 && l.index >= num_generators))
      throw_input("letter index " + std::to_string(l.index) +
                  " outside the generator set");
    if (l.sign != +1 && l.sign != -1)
      throw_input("letter sign must be +1 or -1");
    if (!out.empty() && out.back() == inverse(l))
      out.pop_back();
    else
      out.push_back(l);
  }
  return Word(std::move(out));
}

Word Word::positive(std::span<const int> indices) {
  std::vector<Letter> letters;
  letters.reserve(indices.size());
  for (int i : indices) letters.push_back({i, +1});
  return reduce(letters);
}

Word mul(const Word& t, const Word& s) {
  // Both inputs are reduced, so only the junction can cancel.
  const auto& a = t.letters_;
  const auto& b = s.letters_;
  std::size_t i = a.size(), j = 0;
  while (i > 0 && j < b.size() && a[i - 1] == inverse(b[j])) {
    --i;
    ++j;
  }
  std::vector<Letter> out;
  out.reserve(i + (b.size() - j));
  out.insert(out.end(), a.begin(), a.begin() + static_cast<std::ptrdiff_t>(i));
  out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(j), b.end());
  return Word(std::move(out));
}

Word inv(const Word& t) {
  std::vector<Letter> out(t.letters_.rbegin(), t.letters_.rend());
  for (Letter& l : out) l.sign = -l.sign;
  return Word(std::move(out));
}

bool lengths_add(const Word& t, const Word& s) {
  return mul(t, s).length() == t.length() + s.length();
}

bool is_positive(const Word& t) {
  return std::all_of(t.letters().begin(), t.letters().end(),
                     [](const Letter& l) { return l.sign == +1; });
}

std::vector<Word> enumerate_positive(int num_generators, int k) {
  if (num_generators < 1) throw_input("need at least one generator");
  if (k < 0) throw_input("word length must be nonnegative");
  std::vector<Word> out;
  std::vector<int> idx(static_cast<std::size_t>(k), 0);
  // Odometer over index sequences, most significant digit first.
  while (true) {
    out.push_back(Word::positive(idx));
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == num_generators - 1) {
      idx[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
  }
  return out;
}

namespace {

// Letter order used by shortlex and enumeration: x < x^-1 < y < y^-1 < ...
int letter_rank(const Letter& l) { return 2 * l.index + (l.sign < 0 ? 1 : 0); }

}  // namespace

std::vector<Word> enumerate_reduced(int num_generators, int max_length) {
  if (num_generators < 1) throw_input("need at least one generator");
  if (max_length < 0) throw_input("word length must be nonnegative");
  std::vector<Letter> all;
  for (int i = 0; i < num_generators; ++i) {
    all.push_back({i, +1});
    all.push_back({i, -1});
  }
  std::vector<Word> out{Word{}};
  std::size_t level_begin = 0;
  for (int len = 1; len <= max_length; ++len) {
    std::size_t level_end = out.size();
    for (std::size_t w = level_begin; w < level_end; ++w) {
      for (const Letter& l : all) {
        const Word& base = out[w];
        if (!base.empty() && base.letters().back() == inverse(l)) continue;
        std::vector<Letter> letters = base.letters();
        letters.push_back(l);
        out.push_back(Word::reduce(letters));
      }
    }
    level_begin = level_end;
  }
  return out;
}

std::optional<std::pair<Word, Word>> pos_neg_decompose(const Word& t) {
  const auto& ls = t.letters();
  std::size_t split = 0;
  while (split < ls.size() && ls[split].sign == +1) ++split;
  for (std::size_t i = split; i < ls.size(); ++i)
    if (ls[i].sign == +1) return std::nullopt;
  std::vector<Letter> mu(ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(split));
  // The tail is nu^-1; nu itself is the reversed tail with signs flipped.
  std::vector<Letter> nu(ls.rbegin(), ls.rend() - static_cast<std::ptrdiff_t>(split));
  for (Letter& l : nu) l.sign = +1;
  return std::make_pair(Word::reduce(mu), Word::reduce(nu));
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  const auto& x = a.letters();
  const auto& y = b.letters();
  for (std::size_t i = 0; i < x.size(); ++i) {
    int ra = letter_rank(x[i]), rb = letter_rank(y[i]);
    if (ra != rb) return ra < rb;
  }
  return false;
}

std::size_t WordHash::operator()(const Word& w) const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (const Letter& l : w.letters()) {
    h ^= static_cast<std::size_t>(letter_rank(l)) + 0x9e3779b97f4a7c15ull +
         (h << 6) + (h >> 2);
  }
  return h;
}

Alphabet::Alphabet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw_input("alphabet needs at least one label");
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) throw_input("generator labels must be nonempty");
    for (std::size_t j = i + 1; j < labels_.size(); ++j)
      if (labels_[i] == labels_[j])
        throw_input("duplicate generator label '" + labels_[i] + "'");
  }
}

Alphabet Alphabet::standard(int num_generators) {
  if (num_generators < 1) throw_input("need at least one generator");
  static const char* kShort[] = {"x", "y", "z", "w"};
  std::vector<std::string> labels;
  for (int i = 0; i < num_generators; ++i)
    labels.push_back(i < 4 ? kShort[i] : "g" + std::to_string(i));
  return Alphabet(std::move(labels));
}

std::optional<int> Alphabet::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<int>(i);
  return std::nullopt;
}

Word parse_word(const Alphabet& alphabet, std::string_view text) {
  if (text.empty()) return Word{};
  std::vector<Letter> letters;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t dot = text.find('.', pos);
    std::string_view token =
        text.substr(pos, dot == std::string_view::npos ? text.size() - pos : dot - pos);
    int sign = +1;
    if (token.size() >= 3 && token.substr(token.size() - 3) == "^-1") {
      sign = -1;
      token.remove_suffix(3);
    }
    auto idx = alphabet.index_of(token);
    if (!idx)
      throw_parse("unknown generator '" + std::string(token) + "' in word \"" +
                  std::string(text) + "\"");
    letters.push_back({*idx, sign});
    if (dot == std::string_view::npos) break;
    pos = dot + 1;
  }
  return Word::reduce(letters, alphabet.size());
}

std::string format_word(const Alphabet& alphabet, const Word& w) {
  std::string out;
  for (const Letter& l : w.letters()) {
    if (!out.empty()) out += '.';
    out += alphabet.label(l.index);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

}  // namespace fellrep
