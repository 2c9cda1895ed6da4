#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "fellrep/prep.hpp"
#include "fellrep/section.hpp"

namespace fellrep {

// The projection calculus attached to a representation, truncated at a word
// length `depth` chosen by the caller:
//   e(t) = s(t) s(t)*     range projections
//   P(k) = sum of e over positive words of length k, P(0) = 1
//   Q(0) = 1 - P(1)
//   f(t) = s(t) Q(0) s(t)*
//   Q(k) = sum of f over positive words of length k
// Everything is memoized on first use; sums always run in lexicographic
// order so repeated runs are bitwise identical.
class ProjectionFamily {
public:
  ProjectionFamily(RepPtr rep, int depth);

  const RepPtr& rep() const { return rep_; }
  int depth() const { return depth_; }
  int dim() const { return rep_->dim(); }
  int num_generators() const { return rep_->alphabet().size(); }

  const Operator& e(const Word& t) const;
  const Operator& f(const Word& t) const;
  const Operator& P(int k) const;  // k in [0, depth]
  const Operator& Q(int k) const;  // k in [0, depth]

private:
  const Operator& P_locked(int k) const;
  const Operator& Q_locked(int k) const;
  const Operator& f_locked(const Word& t) const;

  RepPtr rep_;
  int depth_;

  mutable std::mutex mutex_;
  mutable std::unordered_map<Word, Operator, WordHash> f_memo_;
  mutable std::map<int, Operator> p_memo_;
  mutable std::map<int, Operator> q_memo_;
};

// b_n as a finitely supported section over positive words:
// f(t) below level n, e(t) at level n, nothing above.  Sums to the identity.
Section b_map(const ProjectionFamily& pf, int n);

// a_n, the square root of the running average (1/n) sum_{k<=n} b_k, written
// in closed form: a_n(t) = sqrt((n-|t|+1)/n) f(t) + sqrt(1/n) (e(t)-f(t))
// for 1 <= |t| <= n.  At the empty word the average collapses to f(e), so
// a_n(e) = f(e) = Q(0); the closed form is not valid there.
Section a_map(const ProjectionFamily& pf, int n);

// One step of the approximation scheme: sum over r of a(t r)* b a(r),
// restricted to r with both r and t r in the support of a.
Operator averaging_map(const Section& a, const Word& t, const Operator& b);

struct ConvergenceRow {
  int n = 0;
  double error = 0.0;
};

// error(n) = || s(t) - sum_r a_n(t r)* s(t) a_n(r) ||.  Only defined for
// words of the form (positive) . (positive)^-1; anything else evaluates to
// zero and the study would be vacuous.  The depth precondition keeps every
// projection in the sums faithfully represented instead of truncated away.
std::vector<ConvergenceRow> convergence_study(const ProjectionFamily& pf,
                                              const Word& t,
                                              const std::vector<int>& n_range);

// CSV with header "n,error", one row per n, 17 significant digits.
std::string convergence_csv(const std::vector<ConvergenceRow>& rows);

struct ColumnIsometryResult {
  double column_norm = 0.0;  // norm of the stacked block column of a(t)
  double sum_norm = 0.0;     // sqrt of norm of sum a(t)* a(t)
};

// The two sides of ||V||^2 = ||V* V||; they must agree to tolerance.
ColumnIsometryResult column_isometry_check(const Section& a);

// The eight identities the projection calculus satisfies on a valid
// orthogonal semi-saturated representation, one aggregated check per clause.
Report projection_relations_report(const ProjectionFamily& pf, const Tolerance& tol);

// || sum_t b_n(t) - 1 || and || sum_t a_n(t)* a_n(t) - 1 ||.
CheckResult sum_b_check(const ProjectionFamily& pf, int n, const Tolerance& tol);
CheckResult sum_a_check(const ProjectionFamily& pf, int n, const Tolerance& tol);

}  // namespace fellrep
