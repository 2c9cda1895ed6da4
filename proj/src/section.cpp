#include "fellrep/section.hpp"

#include "fellrep/error.hpp"

namespace fellrep {

Section::Section(int dim) : dim_(dim) {
  if (dim < 1) throw_input("section dimension must be positive");
}

void Section::set(const Word& w, Operator value) {
  if (value.rows() != dim_ || value.cols() != dim_)
    throw_input("section value has wrong dimension");
  value = prune_zeros(std::move(value));
  if (value.nonZeros() == 0) {
    values_.erase(w);
    return;
  }
  values_.insert_or_assign(w, std::move(value));
}

const Operator* Section::find(const Word& w) const {
  auto it = values_.find(w);
  return it == values_.end() ? nullptr : &it->second;
}

std::vector<Word> Section::support() const {
  std::vector<Word> out;
  out.reserve(values_.size());
  for (const auto& [w, v] : values_) out.push_back(w);
  return out;
}

Section section_convolve(const Section& f, const Section& g) {
  if (f.dim() != g.dim()) throw_input("convolution needs matching dimensions");
  std::map<Word, Operator, ShortlexLess> acc;
  for (const auto& [s, fs] : f.values()) {
    for (const auto& [u, gu] : g.values()) {
      Word t = mul(s, u);
      Operator term = fs * gu;
      auto it = acc.find(t);
      if (it == acc.end())
        acc.emplace(t, std::move(term));
      else
        it->second += term;
    }
  }
  Section out(f.dim());
  for (auto& [t, v] : acc) out.set(t, std::move(v));
  return out;
}

Section section_star(const Section& f) {
  Section out(f.dim());
  for (const auto& [t, v] : f.values()) out.set(inv(t), adjoint(v));
  return out;
}

double section_l1_norm(const Section& f) {
  double sum = 0.0;
  for (const auto& [t, v] : f.values()) sum += spectral_norm(v);
  return sum;
}

Operator conditional_expectation(const Section& f) {
  const Operator* unit = f.find(Word{});
  return unit ? *unit : zero_op(f.dim());
}

}  // namespace fellrep
