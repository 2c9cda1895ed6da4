#pragma once

#include <map>
#include <vector>

#include "fellrep/linop.hpp"
#include "fellrep/word.hpp"

namespace fellrep {

// Finitely supported assignment of operators (one shared dimension) to group
// elements.  Exact-zero values are dropped on insertion, so support() lists
// only genuinely nonzero words.  Iteration order is shortlex, which keeps
// every sum over a section deterministic.
class Section {
public:
  explicit Section(int dim);

  int dim() const { return dim_; }

  // Stores value at w; an exactly-zero value erases the entry instead.
  void set(const Word& w, Operator value);

  // nullptr when w is outside the support.
  const Operator* find(const Word& w) const;

  const std::map<Word, Operator, ShortlexLess>& values() const { return values_; }
  std::vector<Word> support() const;
  std::size_t size() const { return values_.size(); }

private:
  int dim_;
  std::map<Word, Operator, ShortlexLess> values_;
};

// Convolution (f g)(t) = sum_s f(s) g(s^-1 t), over the finite supports.
Section section_convolve(const Section& f, const Section& g);

// Involution f*(t) = f(t^-1)^*.
Section section_star(const Section& f);

// Sum over the support of the operator norm of each value.
double section_l1_norm(const Section& f);

// Coefficient at the identity word; zero operator when absent.
Operator conditional_expectation(const Section& f);

}  // namespace fellrep
