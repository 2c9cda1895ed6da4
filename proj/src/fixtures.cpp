#include "fellrep/fixtures.hpp"

#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "fellrep/error.hpp"

namespace fellrep {

namespace {

using Triplet = Eigen::Triplet<Complex>;

// Shared scaffolding for tree and ck: enumerate the basis level by level
// (lexicographic within each level), then realize each generator as the
// prepend map on that basis.
struct WordBasis {
  std::vector<Word> words;
  std::unordered_map<Word, int, WordHash> index;

  void add(const Word& w) {
    index.emplace(w, static_cast<int>(words.size()));
    words.push_back(w);
  }
};

GeneratorFamily shift_family(int m, const WordBasis& basis, int depth) {
  const int dim = static_cast<int>(basis.words.size());
  std::vector<Operator> images;
  images.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    std::vector<Triplet> trips;
    for (const Word& w : basis.words) {
      if (w.length() >= depth) continue;
      const Word shifted = mul(Word::positive(std::array{i}), w);
      auto it = basis.index.find(shifted);
      if (it == basis.index.end()) continue;
      trips.emplace_back(it->second, basis.index.at(w), Complex(1.0, 0.0));
    }
    Operator u(dim, dim);
    u.setFromTriplets(trips.begin(), trips.end());
    u.makeCompressed();
    images.push_back(std::move(u));
  }
  return GeneratorFamily(Alphabet::standard(m), std::move(images));
}

}  // namespace

GeneratorFamily tree_rep(int m, int depth, int dim_cap) {
  if (m < 1 || depth < 1) throw_input("tree fixture needs m >= 1 and depth >= 1");
  WordBasis basis;
  basis.add(Word{});
  std::vector<Word> level{Word{}};
  for (int k = 1; k <= depth; ++k) {
    std::vector<Word> next;
    for (int i = 0; i < m; ++i) {
      for (const Word& w : level) {
        Word nw = mul(Word::positive(std::array{i}), w);
        if (basis.words.size() >= static_cast<std::size_t>(dim_cap))
          throw_resource("tree fixture dimension exceeds cap " +
                         std::to_string(dim_cap));
        basis.add(nw);
        next.push_back(std::move(nw));
      }
    }
    level = std::move(next);
  }
  return shift_family(m, basis, depth);
}

GeneratorFamily ck_rep(const Eigen::MatrixXi& admissible, int depth, int dim_cap) {
  const int m = static_cast<int>(admissible.rows());
  if (m < 1 || admissible.cols() != m)
    throw_input("admissibility matrix must be square and nonempty");
  if (depth < 1) throw_input("ck fixture needs depth >= 1");
  for (int i = 0; i < m; ++i) {
    bool has_one = false;
    for (int j = 0; j < m; ++j) {
      if (admissible(i, j) != 0 && admissible(i, j) != 1)
        throw_input("admissibility entries must be 0 or 1");
      has_one = has_one || admissible(i, j) == 1;
    }
    if (!has_one)
      throw_input("admissibility row " + std::to_string(i) + " is all zero");
  }

  WordBasis basis;
  basis.add(Word{});
  std::vector<Word> level{Word{}};
  for (int k = 1; k <= depth; ++k) {
    std::vector<Word> next;
    for (int i = 0; i < m; ++i) {
      for (const Word& w : level) {
        if (!w.empty() && admissible(i, w.letters().front().index) != 1) continue;
        Word nw = mul(Word::positive(std::array{i}), w);
        if (basis.words.size() >= static_cast<std::size_t>(dim_cap))
          throw_resource("ck fixture dimension exceeds cap " +
                         std::to_string(dim_cap));
        basis.add(nw);
        next.push_back(std::move(nw));
      }
    }
    level = std::move(next);
  }
  return shift_family(m, basis, depth);
}

namespace {

std::shared_ptr<PartialRep> scalar_table(int num_generators, int horizon,
                                         bool (*value)(const Word&)) {
  if (num_generators < 1 || horizon < 1)
    throw_input("scalar table needs num_generators >= 1 and horizon >= 1");
  std::vector<std::pair<Word, Operator>> table;
  for (const Word& w : enumerate_reduced(num_generators, horizon)) {
    Operator a(1, 1);
    if (value(w)) a.insert(0, 0) = Complex(1.0, 0.0);
    a.makeCompressed();
    table.emplace_back(w, std::move(a));
  }
  return PartialRep::from_table(Alphabet::standard(num_generators), 1,
                                std::move(table));
}

}  // namespace

std::shared_ptr<PartialRep> parity_rep(int num_generators, int horizon) {
  return scalar_table(num_generators, horizon,
                      [](const Word& w) { return w.length() % 2 == 0; });
}

std::shared_ptr<PartialRep> delta_rep(int num_generators, int horizon) {
  return scalar_table(num_generators, horizon,
                      [](const Word& w) { return w.empty(); });
}

GeneratorFamily random_family(int dim, int m, std::uint64_t seed) {
  if (dim < 1 || m < 1) throw_input("random family needs dim >= 1 and m >= 1");
  std::mt19937_64 rng(seed);
  // Hand-rolled Box-Muller keeps the stream identical across standard
  // libraries; std::normal_distribution does not promise that.
  auto uniform = [&rng]() {
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
  };
  auto normal = [&]() {
    const double u = uniform();
    const double v = uniform();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(6.283185307179586 * v);
  };

  std::vector<Operator> images;
  images.reserve(static_cast<std::size_t>(m));
  const int rank = (dim + 1) / 2;
  for (int g = 0; g < m; ++g) {
    DenseMatrix a(dim, dim);
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) a(r, c) = Complex(normal(), normal());
    Eigen::JacobiSVD<DenseMatrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    DenseMatrix u = svd.matrixU().leftCols(rank) * svd.matrixV().leftCols(rank).adjoint();
    images.push_back(to_sparse(u));
  }
  return GeneratorFamily(Alphabet::standard(m), std::move(images));
}

std::shared_ptr<PartialRep> make_fixture(const FixtureSpec& spec, int dim_cap) {
  switch (spec.kind) {
    case FixtureSpec::Kind::tree:
      return PartialRep::from_family(tree_rep(spec.m, spec.depth, dim_cap));
    case FixtureSpec::Kind::ck:
      return PartialRep::from_family(ck_rep(spec.admissible, spec.depth, dim_cap));
    case FixtureSpec::Kind::parity:
      return parity_rep(spec.m, spec.depth);
    case FixtureSpec::Kind::delta:
      return delta_rep(spec.m, spec.depth);
    case FixtureSpec::Kind::random:
      return PartialRep::from_family(random_family(spec.dim, spec.m, spec.seed));
  }
  throw_input("unknown fixture kind");
}

}  // namespace fellrep
