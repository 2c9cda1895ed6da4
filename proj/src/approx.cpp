#include "fellrep/approx.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "fellrep/error.hpp"

namespace fellrep {

ProjectionFamily::ProjectionFamily(RepPtr rep, int depth)
    : rep_(std::move(rep)), depth_(depth) {
  if (!rep_) throw_input("projection family needs a representation");
  if (depth_ < 1) throw_input("projection family needs depth >= 1");
}

const Operator& ProjectionFamily::e(const Word& t) const {
  return rep_->range_projection(t);
}

const Operator& ProjectionFamily::f(const Word& t) const {
  std::lock_guard<std::mutex> lock(mutex_);
  return f_locked(t);
}

const Operator& ProjectionFamily::P(int k) const {
  if (k < 0 || k > depth_)
    throw_input("P(k) needs 0 <= k <= depth = " + std::to_string(depth_));
  std::lock_guard<std::mutex> lock(mutex_);
  return P_locked(k);
}

const Operator& ProjectionFamily::Q(int k) const {
  if (k < 0 || k > depth_)
    throw_input("Q(k) needs 0 <= k <= depth = " + std::to_string(depth_));
  std::lock_guard<std::mutex> lock(mutex_);
  return Q_locked(k);
}

const Operator& ProjectionFamily::P_locked(int k) const {
  auto it = p_memo_.find(k);
  if (it != p_memo_.end()) return it->second;
  Operator sum;
  if (k == 0) {
    sum = identity_op(dim());
  } else {
    sum = zero_op(dim());
    for (const Word& w : enumerate_positive(num_generators(), k))
      sum += rep_->range_projection(w);
    sum = prune_zeros(std::move(sum));
  }
  return p_memo_.emplace(k, std::move(sum)).first->second;
}

const Operator& ProjectionFamily::f_locked(const Word& t) const {
  auto it = f_memo_.find(t);
  if (it != f_memo_.end()) return it->second;
  const Operator& q0 = Q_locked(0);
  const Operator& u = rep_->evaluate(t);
  Operator f = prune_zeros(u * q0 * adjoint(u));
  return f_memo_.emplace(t, std::move(f)).first->second;
}

const Operator& ProjectionFamily::Q_locked(int k) const {
  auto it = q_memo_.find(k);
  if (it != q_memo_.end()) return it->second;
  Operator sum;
  if (k == 0) {
    sum = identity_op(dim());
    sum -= P_locked(1);
    sum = prune_zeros(std::move(sum));
  } else {
    sum = zero_op(dim());
    for (const Word& w : enumerate_positive(num_generators(), k))
      sum += f_locked(w);
    sum = prune_zeros(std::move(sum));
  }
  return q_memo_.emplace(k, std::move(sum)).first->second;
}

namespace {

void require_level(const ProjectionFamily& pf, int n) {
  if (n < 1 || n > pf.depth())
    throw_input("level n must satisfy 1 <= n <= depth = " +
                std::to_string(pf.depth()));
}

}  // namespace

Section b_map(const ProjectionFamily& pf, int n) {
  require_level(pf, n);
  Section out(pf.dim());
  out.set(Word{}, pf.f(Word{}));
  for (int k = 1; k < n; ++k)
    for (const Word& w : enumerate_positive(pf.num_generators(), k))
      out.set(w, pf.f(w));
  for (const Word& w : enumerate_positive(pf.num_generators(), n))
    out.set(w, pf.e(w));
  return out;
}

Section a_map(const ProjectionFamily& pf, int n) {
  require_level(pf, n);
  Section out(pf.dim());
  out.set(Word{}, pf.f(Word{}));
  const double inv = std::sqrt(1.0 / n);
  for (int k = 1; k <= n; ++k) {
    const double keep = std::sqrt(static_cast<double>(n - k + 1) / n);
    for (const Word& w : enumerate_positive(pf.num_generators(), k)) {
      Operator a = keep * pf.f(w) + inv * (pf.e(w) - pf.f(w));
      out.set(w, std::move(a));
    }
  }
  return out;
}

Operator averaging_map(const Section& a, const Word& t, const Operator& b) {
  if (b.rows() != a.dim() || b.cols() != a.dim())
    throw_input("averaging map needs b of the section's dimension");
  Operator sum = zero_op(a.dim());
  for (const auto& [r, ar] : a.values()) {
    const Operator* atr = a.find(mul(t, r));
    if (!atr) continue;
    sum += adjoint(*atr) * b * ar;
  }
  return prune_zeros(std::move(sum));
}

std::vector<ConvergenceRow> convergence_study(const ProjectionFamily& pf,
                                              const Word& t,
                                              const std::vector<int>& n_range) {
  const auto mn = pos_neg_decompose(t);
  if (!mn)
    throw_input("the image of '" + format_word(pf.rep()->alphabet(), t) +
                "' is zero: not of the form (positive).(positive)^-1");
  if (n_range.empty()) throw_input("empty n range");
  const int halves = std::max(mn->first.length(), mn->second.length());
  int nmax = 0;
  for (int n : n_range) {
    if (n < 1) throw_input("levels must be >= 1");
    nmax = std::max(nmax, n);
  }
  if (nmax + halves > pf.depth())
    throw_input("max(n) + max(|mu|,|nu|) = " + std::to_string(nmax + halves) +
                " exceeds depth " + std::to_string(pf.depth()) +
                "; truncation would distort the study");

  const Operator& st = pf.rep()->evaluate(t);
  std::vector<ConvergenceRow> rows;
  rows.reserve(n_range.size());
  for (int n : n_range) {
    const Section a = a_map(pf, n);
    const double err = spectral_norm(st - averaging_map(a, t, st));
    rows.push_back({n, err});
  }
  return rows;
}

std::string convergence_csv(const std::vector<ConvergenceRow>& rows) {
  std::string out = "n,error\n";
  char buf[64];
  for (const auto& row : rows) {
    std::snprintf(buf, sizeof buf, "%d,%.17g\n", row.n, row.error);
    out += buf;
  }
  return out;
}

ColumnIsometryResult column_isometry_check(const Section& a) {
  if (a.size() == 0) throw_input("column isometry check needs nonempty support");
  const int d = a.dim();
  const int blocks = static_cast<int>(a.size());

  std::vector<Eigen::Triplet<Complex>> trips;
  Operator gram = zero_op(d);
  int block = 0;
  for (const auto& [w, aw] : a.values()) {
    for (int col = 0; col < aw.outerSize(); ++col)
      for (Operator::InnerIterator it(aw, col); it; ++it)
        trips.emplace_back(block * d + static_cast<int>(it.row()), col, it.value());
    gram += adjoint(aw) * aw;
    ++block;
  }
  Operator v(blocks * d, d);
  v.setFromTriplets(trips.begin(), trips.end());
  v.makeCompressed();

  ColumnIsometryResult out;
  out.column_norm = spectral_norm(v);
  out.sum_norm = std::sqrt(spectral_norm(gram));
  return out;
}

Report projection_relations_report(const ProjectionFamily& pf, const Tolerance& tol) {
  const int m = pf.num_generators();
  const int depth = pf.depth();
  const auto& alphabet = pf.rep()->alphabet();
  const auto words = enumerate_reduced(m, depth);

  Report out;

  // (1) every e(t) is a projection, (2) every f(t) is a projection
  WorstCase e_proj("e-values-are-projections");
  WorstCase f_proj("f-values-are-projections");
  auto projection_residual = [](const Operator& p) {
    return std::max(spectral_norm(p * p - p), spectral_norm(p - adjoint(p)));
  };
  for (const Word& w : words) {
    const double np = spectral_norm(pf.e(w));
    e_proj.observe(projection_residual(pf.e(w)),
                   tol.effective(std::max(np * np, np)), format_word(alphabet, w));
    const double nf = spectral_norm(pf.f(w));
    f_proj.observe(projection_residual(pf.f(w)),
                   tol.effective(std::max(nf * nf, nf)), format_word(alphabet, w));
  }
  out.add(e_proj.result());
  out.add(f_proj.result());

  // (3) s(t) f(s) = f(ts) s(t)
  WorstCase shift("f-shift");
  for (const Word& t : words) {
    const Operator& st = pf.rep()->evaluate(t);
    const double nt = spectral_norm(st);
    for (const Word& s : words) {
      const double res =
          spectral_norm(st * pf.f(s) - pf.f(mul(t, s)) * st);
      shift.observe(res, tol.effective(nt), "(" + format_word(alphabet, t) +
                                                ", " + format_word(alphabet, s) + ")");
    }
  }
  out.add(shift.result());

  // (4) e(t) f(t) = f(t)
  WorstCase dominate("e-absorbs-f");
  for (const Word& w : words)
    dominate.observe(spectral_norm(pf.e(w) * pf.f(w) - pf.f(w)), tol.effective(1.0),
                     format_word(alphabet, w));
  out.add(dominate.result());

  // (5) distinct positive words of one length: e e, f f, e f all vanish
  WorstCase level_orth("equal-length-distinct-products-vanish");
  for (int k = 1; k <= depth; ++k) {
    const auto level = enumerate_positive(m, k);
    for (std::size_t i = 0; i < level.size(); ++i) {
      for (std::size_t j = 0; j < level.size(); ++j) {
        if (i == j) continue;
        const std::string wit = "(" + format_word(alphabet, level[i]) + ", " +
                                format_word(alphabet, level[j]) + ")";
        const double res = std::max(
            {spectral_norm(pf.e(level[i]) * pf.e(level[j])),
             spectral_norm(pf.f(level[i]) * pf.f(level[j])),
             spectral_norm(pf.e(level[i]) * pf.f(level[j]))});
        level_orth.observe(res, tol.effective(1.0), wit);
      }
    }
  }
  out.add(level_orth.result());

  // (6) Q(k) = P(k) - P(k+1)
  WorstCase qdiff("Q-equals-P-difference");
  for (int k = 0; k + 1 <= depth; ++k)
    qdiff.observe(spectral_norm(pf.Q(k) - (pf.P(k) - pf.P(k + 1))),
                  tol.effective(1.0), "k=" + std::to_string(k));
  out.add(qdiff.result());

  // (7) Q(0) + ... + Q(n-1) + P(n) = 1
  WorstCase unity("partition-of-unity");
  {
    Operator acc = zero_op(pf.dim());
    const Operator one = identity_op(pf.dim());
    for (int n = 1; n <= depth; ++n) {
      acc += pf.Q(n - 1);
      unity.observe(spectral_norm(acc + pf.P(n) - one), tol.effective(1.0),
                    "n=" + std::to_string(n));
    }
  }
  out.add(unity.result());

  // (8) f(a) f(b) = 0 for all distinct positive words, lengths mixed
  WorstCase all_orth("distinct-positive-f-orthogonal");
  {
    std::vector<Word> positives{Word{}};
    for (int k = 1; k <= depth; ++k)
      for (const Word& w : enumerate_positive(m, k)) positives.push_back(w);
    for (std::size_t i = 0; i < positives.size(); ++i)
      for (std::size_t j = i + 1; j < positives.size(); ++j)
        all_orth.observe(
            spectral_norm(pf.f(positives[i]) * pf.f(positives[j])),
            tol.effective(1.0), "(" + format_word(alphabet, positives[i]) + ", " +
                                    format_word(alphabet, positives[j]) + ")");
  }
  out.add(all_orth.result());

  return out;
}

CheckResult sum_b_check(const ProjectionFamily& pf, int n, const Tolerance& tol) {
  require_level(pf, n);
  const Section b = b_map(pf, n);
  Operator sum = zero_op(pf.dim());
  for (const auto& [w, v] : b.values()) sum += v;
  WorstCase wc("b-sums-to-identity");
  wc.observe(spectral_norm(sum - identity_op(pf.dim())), tol.effective(1.0),
             "n=" + std::to_string(n));
  return wc.result();
}

CheckResult sum_a_check(const ProjectionFamily& pf, int n, const Tolerance& tol) {
  require_level(pf, n);
  const Section a = a_map(pf, n);
  Operator sum = zero_op(pf.dim());
  for (const auto& [w, v] : a.values()) sum += adjoint(v) * v;
  WorstCase wc("a-squares-sum-to-identity");
  wc.observe(spectral_norm(sum - identity_op(pf.dim())), tol.effective(1.0),
             "n=" + std::to_string(n));
  return wc.result();
}

}  // namespace fellrep
