#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <complex>
#include <string>

namespace fellrep {

using Complex = std::complex<double>;

// Operators live in compressed sparse storage.  The structured families this
// library manipulates (shift images, range projections, their products) are
// extremely sparse at every interesting dimension, and several workloads
// materialize hundreds of them at dim ~2000, which rules out dense storage.
// Genuinely dense small matrices are handled by the same type with full fill.
using Operator = Eigen::SparseMatrix<Complex>;
using DenseMatrix = Eigen::MatrixXcd;

// Absolute plus relative slack.  A residual r measured against operands of
// combined norm scale s passes when r <= atol + rtol * s.
struct Tolerance {
  double atol = 1e-10;
  double rtol = 1e-12;

  double effective(double scale) const { return atol + rtol * scale; }
};

Operator identity_op(int dim);
Operator zero_op(int dim);
Operator adjoint(const Operator& a);

// Keeps every entry that is not exactly zero; never drops small values.
Operator to_sparse(const DenseMatrix& a);
DenseMatrix to_dense(const Operator& a);

// Structural cleanup after cancelling sums: removes stored exact zeros.
Operator prune_zeros(Operator a);

// Canonical byte string of the compressed structure and value bits; equal
// strings iff the pruned matrices are bitwise equal.  Used to deduplicate
// operators by value.
std::string value_key(const Operator& a);

double frobenius_norm(const Operator& a);

// Hilbert-Schmidt inner product trace(a* b).
Complex hs_inner(const Operator& a, const Operator& b);

// Largest singular value, accurate to ~1e-12 relative.  Exact-zero matrices
// short-circuit; small Gram sides use a dense self-adjoint eigensolve; larger
// ones a Lanczos iteration with full reorthogonalization and deterministic
// seeded restarts.
double spectral_norm(const Operator& a);

bool is_projection(const Operator& a, const Tolerance& tol);
bool is_partial_isometry(const Operator& u, const Tolerance& tol);
bool commute(const Operator& a, const Operator& b, const Tolerance& tol);

// An idempotent contraction is automatically self-adjoint.  The verdict says
// which hypothesis failed, or confirms the conclusion with its residual.
enum class IdempotentVerdict { selfadjoint, not_idempotent, not_contraction };

struct IdempotentCheck {
  IdempotentVerdict verdict;
  double idempotency_residual = 0.0;
  double norm = 0.0;
  double selfadjoint_residual = 0.0;  // meaningful when verdict == selfadjoint
};

IdempotentCheck idempotent_contraction_selfadjoint_check(const Operator& p,
                                                         const Tolerance& tol);

// For partial isometries u, v: uv is a partial isometry iff the initial
// projection u*u commutes with the final projection vv*.  Returns both sides
// of the equivalence; callers assert agreement.
struct ProductCriterion {
  bool product_is_partial_isometry = false;
  bool initial_final_commute = false;
};

ProductCriterion product_partial_isometry_criterion(const Operator& u,
                                                    const Operator& v,
                                                    const Tolerance& tol);

}  // namespace fellrep
