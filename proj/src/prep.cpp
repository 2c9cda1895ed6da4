#include "fellrep/prep.hpp"

#include <array>
#include <cstring>
#include <string>
#include <unordered_set>
#include <utility>

#include "fellrep/error.hpp"

namespace fellrep {

namespace {

// Letter codes for products: 2i is the i-th generator image, 2i+1 its adjoint.
std::string format_codes(const Alphabet& alphabet, const std::vector<int>& codes) {
  std::string out;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    if (i) out += '.';
    out += alphabet.label(codes[i] / 2);
    if (codes[i] % 2) out += "^-1";
  }
  return out;
}

std::string pair_witness(const std::string& a, const std::string& b) {
  return "(" + a + ", " + b + ")";
}

std::string pair_witness(const Alphabet& alphabet, const Word& t, const Word& s) {
  return pair_witness(format_word(alphabet, t), format_word(alphabet, s));
}

// Per-word operator norms recur constantly in the checks; cache them.
class NormCache {
public:
  explicit NormCache(const PartialRep& rep) : rep_(rep) {}

  double operator()(const Word& w) {
    auto it = cache_.find(w);
    if (it != cache_.end()) return it->second;
    double n = spectral_norm(rep_.evaluate(w));
    cache_.emplace(w, n);
    return n;
  }

private:
  const PartialRep& rep_;
  std::unordered_map<Word, double, WordHash> cache_;
};

}  // namespace

GeneratorFamily::GeneratorFamily(Alphabet alphabet, std::vector<Operator> images)
    : alphabet_(std::move(alphabet)), images_(std::move(images)) {
  if (images_.size() != static_cast<std::size_t>(alphabet_.size()))
    throw_input("generator family needs one image per label");
  if (images_.empty()) throw_input("generator family is empty");
  dim_ = static_cast<int>(images_[0].rows());
  if (dim_ <= 0) throw_input("generator images must be nonempty square matrices");
  for (auto& a : images_) {
    if (a.rows() != dim_ || a.cols() != dim_)
      throw_input("generator images must all be square of one dimension");
    a = prune_zeros(a);
  }
}

ValidationReport validate_family(const GeneratorFamily& family,
                                 const ValidationOptions& options) {
  if (options.max_product_length < 1)
    throw_input("validation needs max_product_length >= 1");

  const int m = family.alphabet().size();
  std::vector<Operator> letters;
  letters.reserve(static_cast<std::size_t>(2 * m));
  for (int i = 0; i < m; ++i) {
    letters.push_back(family.image(i));
    letters.push_back(prune_zeros(adjoint(family.image(i))));
  }

  struct Node {
    std::vector<int> codes;
    Operator op;
  };

  ValidationReport out;
  out.checked_length = options.max_product_length;

  std::unordered_set<std::string> seen;
  std::vector<Node> distinct;
  std::vector<Node> level;
  for (int c = 0; c < 2 * m; ++c) {
    Node n{{c}, letters[static_cast<std::size_t>(c)]};
    if (seen.insert(value_key(n.op)).second) {
      distinct.push_back(n);
      level.push_back(std::move(n));
    }
  }

  for (int len = 2; len <= options.max_product_length && !out.truncated; ++len) {
    std::vector<Node> next;
    for (const Node& node : level) {
      for (int c = 0; c < 2 * m && !out.truncated; ++c) {
        Operator prod = node.op * letters[static_cast<std::size_t>(c)];
        prod = prune_zeros(prod);
        if (!seen.insert(value_key(prod)).second) continue;
        Node n{node.codes, std::move(prod)};
        n.codes.push_back(c);
        if (distinct.size() >= options.product_cap) {
          out.truncated = true;
          break;
        }
        distinct.push_back(n);
        next.push_back(std::move(n));
      }
      if (out.truncated) break;
    }
    level = std::move(next);
    if (level.empty()) break;
  }
  out.products_explored = distinct.size();

  // Every distinct product must be a partial isometry.
  WorstCase pi("products-are-partial-isometries");
  for (const Node& node : distinct) {
    const Operator adj = adjoint(node.op);
    const double nw = spectral_norm(node.op);
    const double res = spectral_norm(node.op * adj * node.op - node.op);
    pi.observe(res, options.tol.effective(nw * nw * nw),
               format_codes(family.alphabet(), node.codes));
  }
  out.report.add(pi.result());

  // Their range projections must commute with one another.
  struct Proj {
    std::string label;
    Operator op;
    double norm;
  };
  std::unordered_set<std::string> proj_seen;
  std::vector<Proj> projs;
  for (const Node& node : distinct) {
    Operator p = prune_zeros(node.op * adjoint(node.op));
    if (!proj_seen.insert(value_key(p)).second) continue;
    double np = spectral_norm(p);
    projs.push_back({format_codes(family.alphabet(), node.codes), std::move(p), np});
  }
  WorstCase comm("range-projections-commute");
  for (std::size_t i = 0; i < projs.size(); ++i) {
    for (std::size_t j = i + 1; j < projs.size(); ++j) {
      const double res =
          spectral_norm(projs[i].op * projs[j].op - projs[j].op * projs[i].op);
      comm.observe(res, options.tol.effective(projs[i].norm * projs[j].norm),
                   pair_witness(projs[i].label, projs[j].label));
    }
  }
  out.report.add(comm.result());
  return out;
}

std::shared_ptr<PartialRep> PartialRep::from_family(GeneratorFamily family,
                                                    Tolerance tol) {
  auto rep = std::shared_ptr<PartialRep>(new PartialRep);
  rep->mode_ = Mode::generators;
  rep->alphabet_ = family.alphabet();
  rep->dim_ = family.dim();
  rep->tol_ = tol;
  const int m = family.alphabet().size();
  rep->letter_images_.reserve(static_cast<std::size_t>(2 * m));
  for (int i = 0; i < m; ++i) {
    rep->letter_images_.push_back(family.image(i));
    rep->letter_images_.push_back(prune_zeros(adjoint(family.image(i))));
  }
  rep->family_ = std::move(family);
  return rep;
}

std::shared_ptr<PartialRep> PartialRep::from_table(
    Alphabet alphabet, int dim, std::vector<std::pair<Word, Operator>> table,
    Tolerance tol) {
  if (dim <= 0) throw_input("table representation needs dim >= 1");
  auto rep = std::shared_ptr<PartialRep>(new PartialRep);
  rep->mode_ = Mode::table;
  rep->alphabet_ = std::move(alphabet);
  rep->dim_ = dim;
  rep->tol_ = tol;
  for (auto& [w, op] : table) {
    if (op.rows() != dim || op.cols() != dim)
      throw_input("table entry '" + format_word(rep->alphabet_, w) +
                  "' has wrong dimensions");
    if (!rep->image_memo_.emplace(w, prune_zeros(op)).second)
      throw_input("table defines '" + format_word(rep->alphabet_, w) + "' twice");
  }
  // Horizon: largest L with every reduced word of length <= L present.
  int horizon = -1;
  if (rep->image_memo_.count(Word{})) {
    horizon = 0;
    for (;;) {
      bool complete = true;
      for (const Word& w : enumerate_reduced(rep->alphabet_.size(), horizon + 1)) {
        if (w.length() == horizon + 1 && !rep->image_memo_.count(w)) {
          complete = false;
          break;
        }
      }
      if (!complete) break;
      ++horizon;
    }
  }
  rep->table_horizon_ = horizon;
  return rep;
}

const GeneratorFamily& PartialRep::family() const {
  if (!family_) throw_input("table representation has no generator family");
  return *family_;
}

const Operator& PartialRep::evaluate(const Word& w) const {
  std::lock_guard<std::mutex> lock(mutex_);
  return evaluate_locked(w);
}

const Operator& PartialRep::evaluate_locked(const Word& w) const {
  auto it = image_memo_.find(w);
  if (it != image_memo_.end()) return it->second;
  if (mode_ == Mode::table)
    throw_input("word '" + format_word(alphabet_, w) +
                "' is outside the table horizon");
  if (w.empty())
    return image_memo_.emplace(Word{}, identity_op(dim_)).first->second;

  // Fold along the fixed prefix chain of the reduced word, so the memoized
  // value never depends on which words were asked for first.
  const auto& letters = w.letters();
  Word prefix = Word::reduce(std::span(letters.data(), letters.size() - 1));
  const Operator& head = evaluate_locked(prefix);
  const Letter last = letters.back();
  const std::size_t code =
      static_cast<std::size_t>(2 * last.index + (last.sign < 0 ? 1 : 0));
  Operator img = prune_zeros(head * letter_images_[code]);
  return image_memo_.emplace(w, std::move(img)).first->second;
}

const Operator& PartialRep::range_projection(const Word& t) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = range_memo_.find(t);
  if (it != range_memo_.end()) return it->second;
  const Operator& u = evaluate_locked(t);
  Operator e = prune_zeros(u * adjoint(u));
  return range_memo_.emplace(t, std::move(e)).first->second;
}

Report check_axioms(const PartialRep& rep, std::span<const Word> words,
                    const Tolerance& tol) {
  NormCache norm(rep);
  WorstCase composition("composition");
  WorstCase adjoints("adjoint");
  WorstCase shift("projection-shift");

  for (const Word& t : words) {
    const double nt = norm(t);
    adjoints.observe(spectral_norm(rep.evaluate(inv(t)) - adjoint(rep.evaluate(t))),
                     tol.effective(nt), format_word(rep.alphabet(), t));
    for (const Word& s : words) {
      const double ns = norm(s);
      const Word si = inv(s);
      const Word ts = mul(t, s);
      const Operator lhs = rep.evaluate(t) * rep.evaluate(s) * rep.evaluate(si);
      const Operator rhs = rep.evaluate(ts) * rep.evaluate(si);
      composition.observe(spectral_norm(lhs - rhs),
                          tol.effective(nt * ns * norm(si)),
                          pair_witness(rep.alphabet(), t, s));
      const Operator sl = rep.evaluate(t) * rep.range_projection(s);
      const Operator sr = rep.range_projection(ts) * rep.evaluate(t);
      shift.observe(spectral_norm(sl - sr), tol.effective(nt * ns * ns),
                    pair_witness(rep.alphabet(), t, s));
    }
  }

  Report out;
  out.add(composition.result());
  out.add(adjoints.result());
  out.add(shift.result());
  return out;
}

CheckResult orthogonality_check(const PartialRep& rep, const Tolerance& tol) {
  NormCache norm(rep);
  WorstCase wc("generator-ranges-orthogonal");
  const int m = rep.alphabet().size();
  for (int i = 0; i < m; ++i) {
    const Word xi = Word::positive(std::array{i});
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      const Word xj = Word::positive(std::array{j});
      const double res =
          spectral_norm(adjoint(rep.evaluate(xi)) * rep.evaluate(xj));
      wc.observe(res, tol.effective(norm(xi) * norm(xj)),
                 pair_witness(rep.alphabet(), xi, xj));
    }
  }
  return wc.result();
}

bool is_orthogonal(const PartialRep& rep, const Tolerance& tol) {
  return orthogonality_check(rep, tol).passed;
}

CheckResult semisaturation_check(const PartialRep& rep,
                                 std::span<const std::pair<Word, Word>> pairs,
                                 const Tolerance& tol) {
  NormCache norm(rep);
  WorstCase wc("semi-saturated");
  for (const auto& [t, s] : pairs) {
    if (!lengths_add(t, s)) continue;
    const double res =
        spectral_norm(rep.evaluate(t) * rep.evaluate(s) - rep.evaluate(mul(t, s)));
    wc.observe(res, tol.effective(norm(t) * norm(s)),
               pair_witness(rep.alphabet(), t, s));
  }
  return wc.result();
}

bool is_semisaturated(const PartialRep& rep,
                      std::span<const std::pair<Word, Word>> pairs,
                      const Tolerance& tol) {
  return semisaturation_check(rep, pairs, tol).passed;
}

Report check_posneg_vanishing(const PartialRep& rep, std::span<const Word> words,
                              const Tolerance& tol) {
  Report out;
  // The vanishing statement needs orthogonal ranges to hold; surface that
  // precondition in the same report instead of assuming it.
  out.add(orthogonality_check(rep, tol));

  WorstCase wc("non-posneg-words-vanish");
  for (const Word& t : words) {
    if (pos_neg_decompose(t)) continue;
    wc.observe(spectral_norm(rep.evaluate(t)), tol.effective(1.0),
               format_word(rep.alphabet(), t));
  }
  out.add(wc.result());
  return out;
}

Report check_positive_orthogonality(const PartialRep& rep, int k,
                                    const Tolerance& tol) {
  if (k < 1) throw_input("positive orthogonality needs word length k >= 1");
  NormCache norm(rep);
  const auto words = enumerate_positive(rep.alphabet().size(), k);
  WorstCase wc("positive-words-orthogonal-ranges");
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      const double res =
          spectral_norm(adjoint(rep.evaluate(words[i])) * rep.evaluate(words[j]));
      wc.observe(res, tol.effective(norm(words[i]) * norm(words[j])),
                 pair_witness(rep.alphabet(), words[i], words[j]));
    }
  }
  Report out;
  out.add(wc.result());
  return out;
}

}  // namespace fellrep
