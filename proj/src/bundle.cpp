#include "fellrep/bundle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <unordered_set>

#include "fellrep/error.hpp"

namespace fellrep {

namespace {

// One projection sweep; run twice before measuring, the usual cure for
// cancellation when a candidate is nearly inside the span.
void project_out(Operator& c, const std::vector<Operator>& basis) {
  for (const Operator& b : basis) c -= hs_inner(b, c) * b;
}

// Distinct range projections for all words up to r_depth, identity dropped
// (it never moves a span).
std::vector<Operator> range_generators(const PartialRep& rep, int r_depth) {
  std::vector<Operator> out;
  std::unordered_set<std::string> seen;
  seen.insert(value_key(identity_op(rep.dim())));
  for (const Word& r : enumerate_reduced(rep.alphabet().size(), r_depth)) {
    const Operator& e = rep.range_projection(r);
    if (e.nonZeros() == 0) continue;
    if (!seen.insert(value_key(e)).second) continue;
    out.push_back(e);
  }
  return out;
}

std::string fiber_pair_witness(const Alphabet& alphabet, const Word& t,
                               const Word& s) {
  return "(" + format_word(alphabet, t) + ", " + format_word(alphabet, s) + ")";
}

// Fibers recur heavily in the bundle checks; build each (word, depth) once.
class FiberCache {
public:
  explicit FiberCache(const PartialRep& rep) : rep_(rep) {}

  const FiberBasis& get(const Word& t, int r_depth) {
    auto key = std::make_pair(t, r_depth);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(key, fiber(rep_, t, r_depth)).first->second;
  }

private:
  struct KeyLess {
    bool operator()(const std::pair<Word, int>& a,
                    const std::pair<Word, int>& b) const {
      if (a.second != b.second) return a.second < b.second;
      return shortlex_less(a.first, b.first);
    }
  };
  const PartialRep& rep_;
  std::map<std::pair<Word, int>, FiberBasis, KeyLess> cache_;
};

}  // namespace

int default_r_depth(const Word& t) { return 2 * t.length() + 2; }

FiberBasis fiber(const PartialRep& rep, const Word& t, int r_depth) {
  if (r_depth < 0) throw_input("fiber needs r_depth >= 0");
  FiberBasis out;
  out.word = t;
  out.dim = rep.dim();
  out.r_depth = r_depth;
  out.stabilized = true;

  const Operator& st = rep.evaluate(t);
  const double nst = frobenius_norm(st);
  if (nst == 0.0) return out;
  out.basis.push_back(prune_zeros(st / Complex(nst, 0.0)));

  const auto gens = range_generators(rep, r_depth);
  for (std::size_t i = 0; i < out.basis.size(); ++i) {
    if (out.basis.size() > static_cast<std::size_t>(out.dim) *
                               static_cast<std::size_t>(out.dim)) {
      out.stabilized = false;  // cannot happen for genuine spans; bail out
      break;
    }
    for (const Operator& e : gens) {
      Operator cand = e * out.basis[i];
      if (cand.nonZeros() == 0) continue;
      project_out(cand, out.basis);
      project_out(cand, out.basis);
      const double res = frobenius_norm(cand);
      if (res > kFiberThreshold) {
        out.basis.push_back(prune_zeros(cand / Complex(res, 0.0)));
      } else {
        out.residual_max = std::max(out.residual_max, res);
      }
    }
  }
  return out;
}

FiberBasis fiber(const PartialRep& rep, const Word& t) {
  return fiber(rep, t, default_r_depth(t));
}

double span_residual(const Operator& op, const std::vector<Operator>& basis) {
  Operator c = op;
  project_out(c, basis);
  project_out(c, basis);
  return frobenius_norm(c);
}

std::vector<Operator> orthonormal_span(const std::vector<Operator>& gens,
                                       double threshold) {
  std::vector<Operator> basis;
  for (const Operator& g : gens) {
    Operator c = g;
    project_out(c, basis);
    project_out(c, basis);
    const double res = frobenius_norm(c);
    if (res > threshold) basis.push_back(prune_zeros(c / Complex(res, 0.0)));
  }
  return basis;
}

Report check_bundle_axioms(const PartialRep& rep, std::span<const Word> words,
                           int r_depth, const Tolerance& tol) {
  FiberCache cache(rep);
  int max_len = 0;
  for (const Word& w : words) max_len = std::max(max_len, w.length());
  const int target_depth = r_depth + max_len;

  WorstCase products("fiber-products-in-product-fiber");
  WorstCase adjoints("fiber-adjoints-in-inverse-fiber");
  for (const Word& t : words) {
    const FiberBasis& bt = cache.get(t, r_depth);
    const FiberBasis& bti = cache.get(inv(t), target_depth);
    for (const Operator& u : bt.basis) {
      const Operator ua = adjoint(u);
      adjoints.observe(span_residual(ua, bti.basis),
                       tol.effective(frobenius_norm(ua)),
                       format_word(rep.alphabet(), t));
    }
    for (const Word& s : words) {
      const FiberBasis& bs = cache.get(s, r_depth);
      const FiberBasis& bts = cache.get(mul(t, s), target_depth);
      for (const Operator& u : bt.basis) {
        for (const Operator& v : bs.basis) {
          Operator uv = prune_zeros(u * v);
          if (uv.nonZeros() == 0) continue;
          products.observe(span_residual(uv, bts.basis),
                           tol.effective(frobenius_norm(uv)),
                           fiber_pair_witness(rep.alphabet(), t, s));
        }
      }
    }
  }
  Report out;
  out.add(products.result());
  out.add(adjoints.result());
  return out;
}

Report check_bundle_semisaturated(const PartialRep& rep,
                                  std::span<const std::pair<Word, Word>> pairs,
                                  int r_depth, const Tolerance& tol) {
  FiberCache cache(rep);
  WorstCase forward("fiber-products-inside-product-fiber");
  WorstCase backward("product-fiber-inside-fiber-products");
  for (const auto& [t, s] : pairs) {
    if (!lengths_add(t, s)) continue;
    const FiberBasis& bt = cache.get(t, r_depth);
    const FiberBasis& bs = cache.get(s, r_depth);
    const Word ts = mul(t, s);
    const FiberBasis& target = cache.get(ts, r_depth + t.length());
    const std::string wit = fiber_pair_witness(rep.alphabet(), t, s);

    std::vector<Operator> prods;
    prods.reserve(bt.basis.size() * bs.basis.size());
    for (const Operator& u : bt.basis)
      for (const Operator& v : bs.basis) {
        Operator uv = prune_zeros(u * v);
        if (uv.nonZeros() != 0) prods.push_back(std::move(uv));
      }
    for (const Operator& p : prods)
      forward.observe(span_residual(p, target.basis),
                      tol.effective(frobenius_norm(p)), wit);

    const auto prod_span = orthonormal_span(prods);
    for (const Operator& b : cache.get(ts, r_depth).basis)
      backward.observe(span_residual(b, prod_span), tol.effective(1.0), wit);
  }
  Report out;
  out.add(forward.result());
  out.add(backward.result());
  return out;
}

Report check_bundle_orthogonal(const PartialRep& rep, const Tolerance& tol) {
  FiberCache cache(rep);
  const int m = rep.alphabet().size();
  const int depth = default_r_depth(Word::positive(std::array{0}));
  WorstCase wc("fiber-ranges-orthogonal");
  for (int i = 0; i < m; ++i) {
    const Word xi = Word::positive(std::array{i});
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      const Word xj = Word::positive(std::array{j});
      for (const Operator& u : cache.get(xi, depth).basis)
        for (const Operator& v : cache.get(xj, depth).basis)
          wc.observe(spectral_norm(adjoint(u) * v), tol.effective(1.0),
                     fiber_pair_witness(rep.alphabet(), xi, xj));
    }
  }
  Report out;
  out.add(wc.result());
  return out;
}

bool is_tro(const FiberBasis& e, const Tolerance& tol) {
  for (const Operator& a : e.basis) {
    for (const Operator& b : e.basis) {
      const Operator ab = a * adjoint(b);
      for (const Operator& c : e.basis) {
        const Operator abc = ab * c;
        if (span_residual(abc, e.basis) >
            tol.effective(std::max(frobenius_norm(abc), 1.0)))
          return false;
      }
    }
  }
  return true;
}

namespace {

bool spans_equal(const std::vector<Operator>& lhs,
                 const std::vector<Operator>& rhs, const Tolerance& tol) {
  const auto sl = orthonormal_span(lhs);
  const auto sr = orthonormal_span(rhs);
  for (const Operator& a : lhs)
    if (span_residual(a, sr) > tol.effective(std::max(frobenius_norm(a), 1.0)))
      return false;
  for (const Operator& b : rhs)
    if (span_residual(b, sl) > tol.effective(std::max(frobenius_norm(b), 1.0)))
      return false;
  return true;
}

// Orthonormal column-space basis with a fixed rank threshold.
DenseMatrix column_space(const DenseMatrix& a, double threshold) {
  if (a.cols() == 0) return DenseMatrix(a.rows(), 0);
  Eigen::ColPivHouseholderQR<DenseMatrix> qr(a);
  qr.setThreshold(threshold);
  const Eigen::Index rank = qr.rank();
  DenseMatrix q = qr.householderQ() * DenseMatrix::Identity(a.rows(), rank);
  return q;
}

}  // namespace

bool tro_associated(const Operator& u, const FiberBasis& e, const Tolerance& tol) {
  std::vector<Operator> ue, ee_init, eu, ee_final;
  const Operator ua = adjoint(u);
  for (const Operator& b : e.basis) {
    ue.push_back(prune_zeros(ua * b));
    eu.push_back(prune_zeros(u * adjoint(b)));
    for (const Operator& c : e.basis) {
      ee_init.push_back(prune_zeros(adjoint(b) * c));
      ee_final.push_back(prune_zeros(b * adjoint(c)));
    }
  }
  return spans_equal(ue, ee_init, tol) && spans_equal(eu, ee_final, tol);
}

bool tro_strictly_associated(const Operator& u, const FiberBasis& e,
                             const Tolerance& tol) {
  if (!tro_associated(u, e, tol)) return false;

  const DenseMatrix p = to_dense(prune_zeros(u * adjoint(u)));
  DenseMatrix stack(e.dim, static_cast<Eigen::Index>(e.basis.size()) * e.dim);
  for (std::size_t i = 0; i < e.basis.size(); ++i)
    stack.middleCols(static_cast<Eigen::Index>(i) * e.dim, e.dim) =
        to_dense(e.basis[i]);

  const DenseMatrix qp = column_space(p, kFiberThreshold);
  const DenseMatrix qe = column_space(stack, kFiberThreshold);
  if (qp.cols() != qe.cols()) return false;
  const double r1 = (qp - qe * (qe.adjoint() * qp)).norm();
  const double r2 = (qe - qp * (qp.adjoint() * qe)).norm();
  return r1 <= tol.effective(std::sqrt(static_cast<double>(qp.cols())) + 1.0) &&
         r2 <= tol.effective(std::sqrt(static_cast<double>(qe.cols())) + 1.0);
}

}  // namespace fellrep
