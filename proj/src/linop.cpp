#include "fellrep/linop.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "fellrep/error.hpp"

namespace fellrep {

Operator identity_op(int dim) {
  Operator id(dim, dim);
  id.setIdentity();
  return id;
}

Operator zero_op(int dim) { return Operator(dim, dim); }

Operator adjoint(const Operator& a) {
  Operator out = a.adjoint();
  out.makeCompressed();
  return out;
}

Operator to_sparse(const DenseMatrix& a) {
  Operator out(a.rows(), a.cols());
  std::vector<Eigen::Triplet<Complex>> trips;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (a(i, j) != Complex(0.0, 0.0)) trips.emplace_back(i, j, a(i, j));
  out.setFromTriplets(trips.begin(), trips.end());
  out.makeCompressed();
  return out;
}

DenseMatrix to_dense(const Operator& a) { return DenseMatrix(a); }

Operator prune_zeros(Operator a) {
  a.prune([](const Eigen::Index&, const Eigen::Index&, const Complex& v) {
    return v != Complex(0.0, 0.0);
  });
  a.makeCompressed();
  return a;
}

std::string value_key(const Operator& a) {
  std::string key;
  key.reserve(static_cast<std::size_t>(a.nonZeros()) * 24 + 8);
  auto push = [&key](const void* p, std::size_t n) {
    key.append(static_cast<const char*>(p), n);
  };
  const int rows = static_cast<int>(a.rows());
  push(&rows, sizeof rows);
  for (int col = 0; col < a.outerSize(); ++col) {
    for (Operator::InnerIterator it(a, col); it; ++it) {
      const int r = static_cast<int>(it.row());
      const double re = it.value().real();
      const double im = it.value().imag();
      push(&col, sizeof col);
      push(&r, sizeof r);
      push(&re, sizeof re);
      push(&im, sizeof im);
    }
  }
  return key;
}

double frobenius_norm(const Operator& a) { return a.norm(); }

Complex hs_inner(const Operator& a, const Operator& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw_input("Hilbert-Schmidt inner product needs equal shapes");
  Complex sum(0.0, 0.0);
  for (int j = 0; j < a.outerSize(); ++j) {
    Operator::InnerIterator ia(a, j), ib(b, j);
    while (ia && ib) {
      if (ia.row() == ib.row()) {
        sum += std::conj(ia.value()) * ib.value();
        ++ia;
        ++ib;
      } else if (ia.row() < ib.row()) {
        ++ia;
      } else {
        ++ib;
      }
    }
  }
  return sum;
}

namespace {

constexpr int kDenseGramCutoff = 64;

double dense_gram_norm(const Operator& a) {
  DenseMatrix d = to_dense(a);
  DenseMatrix gram;
  if (d.cols() <= d.rows())
    gram = d.adjoint() * d;
  else
    gram = d * d.adjoint();
  Eigen::SelfAdjointEigenSolver<DenseMatrix> es(gram, Eigen::EigenvaluesOnly);
  double lmax = es.eigenvalues().maxCoeff();
  return std::sqrt(std::max(lmax, 0.0));
}

// Largest eigenvalue of the Gram operator v -> a*(a v) (or a(a* v) when that
// side is smaller) by Lanczos with full reorthogonalization.  Start vectors
// come from a fixed-seed generator, so results are deterministic; restarts
// with fresh vectors guard against a start accidentally missing the top
// eigenspace.
double lanczos_gram_lambda_max(const Operator& a) {
  const bool tall = a.rows() >= a.cols();
  const Eigen::Index n = tall ? a.cols() : a.rows();
  const Operator aadj = adjoint(a);

  auto apply = [&](const Eigen::VectorXcd& v) -> Eigen::VectorXcd {
    if (tall) return aadj * (a * v).eval();
    return a * (aadj * v).eval();
  };

  std::mt19937_64 rng(0x9d2c5680f00dULL);
  auto random_unit = [&]() {
    Eigen::VectorXcd v(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      auto u = [&]() {
        return 2.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53) - 1.0;
      };
      v(i) = Complex(u(), u());
    }
    v.normalize();
    return v;
  };

  const Eigen::Index max_steps = std::min<Eigen::Index>(n, 220);
  const double rel_tol = 1e-14;
  double best = 0.0;

  for (int restart = 0; restart < 3; ++restart) {
    Eigen::MatrixXcd basis(n, max_steps + 1);
    std::vector<double> alpha, beta;
    basis.col(0) = random_unit();
    double theta = 0.0;
    bool converged = false;

    for (Eigen::Index j = 0; j < max_steps; ++j) {
      Eigen::VectorXcd w = apply(basis.col(j));
      double aj = std::real(basis.col(j).dot(w));
      alpha.push_back(aj);
      w -= aj * basis.col(j);
      if (j > 0) w -= beta.back() * basis.col(j - 1);
      // Full reorthogonalization, twice for numerical safety.
      for (int pass = 0; pass < 2; ++pass) {
        auto head = basis.leftCols(j + 1);
        w -= head * (head.adjoint() * w).eval();
      }
      double bj = w.norm();

      // Ritz values of the tridiagonal section built so far.
      Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(j + 1, j + 1);
      for (Eigen::Index i = 0; i <= j; ++i) tri(i, i) = alpha[static_cast<std::size_t>(i)];
      for (Eigen::Index i = 0; i + 1 <= j; ++i)
        tri(i, i + 1) = tri(i + 1, i) = beta[static_cast<std::size_t>(i)];
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(tri);
      Eigen::Index top;
      theta = es.eigenvalues().maxCoeff(&top);
      double top_tail = std::abs(es.eigenvectors()(j, top));
      double residual_bound = bj * top_tail;

      if (residual_bound <= rel_tol * std::max(theta, 1e-300)) {
        converged = true;
        break;
      }
      if (bj <= 1e-300) {
        // Krylov space became invariant: theta is exact over it.
        converged = true;
        break;
      }
      beta.push_back(bj);
      basis.col(j + 1) = w / bj;
    }

    best = std::max(best, theta);
    if (converged && restart >= 1) break;
  }
  return best;
}

void require_square_same(const Operator& a, const Operator& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw_input("operands must be square with matching dimension");
}

}  // namespace

double spectral_norm(const Operator& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0.0;
  if (frobenius_norm(a) == 0.0) return 0.0;
  if (std::min(a.rows(), a.cols()) <= kDenseGramCutoff) return dense_gram_norm(a);
  return std::sqrt(std::max(lanczos_gram_lambda_max(a), 0.0));
}

bool is_projection(const Operator& a, const Tolerance& tol) {
  if (a.rows() != a.cols()) throw_input("projection candidate must be square");
  double na = spectral_norm(a);
  double idem = spectral_norm(Operator(a * a) - a);
  double sym = spectral_norm(Operator(a - adjoint(a)));
  return idem <= tol.effective(na * na) && sym <= tol.effective(na);
}

bool is_partial_isometry(const Operator& u, const Tolerance& tol) {
  if (u.rows() != u.cols()) throw_input("partial isometry candidate must be square");
  double nu = spectral_norm(u);
  Operator uu = u * adjoint(u);
  double res = spectral_norm(Operator(uu * u) - u);
  return res <= tol.effective(nu * nu * nu);
}

bool commute(const Operator& a, const Operator& b, const Tolerance& tol) {
  require_square_same(a, b);
  double scale = spectral_norm(a) * spectral_norm(b);
  double res = spectral_norm(Operator(a * b) - Operator(b * a));
  return res <= tol.effective(scale);
}

IdempotentCheck idempotent_contraction_selfadjoint_check(const Operator& p,
                                                         const Tolerance& tol) {
  if (p.rows() != p.cols()) throw_input("idempotent candidate must be square");
  IdempotentCheck out;
  out.norm = spectral_norm(p);
  out.idempotency_residual = spectral_norm(Operator(p * p) - p);
  if (out.idempotency_residual > tol.effective(out.norm * out.norm)) {
    out.verdict = IdempotentVerdict::not_idempotent;
    return out;
  }
  if (out.norm > 1.0 + tol.effective(1.0)) {
    out.verdict = IdempotentVerdict::not_contraction;
    return out;
  }
  out.selfadjoint_residual = spectral_norm(Operator(p - adjoint(p)));
  out.verdict = IdempotentVerdict::selfadjoint;
  return out;
}

ProductCriterion product_partial_isometry_criterion(const Operator& u,
                                                    const Operator& v,
                                                    const Tolerance& tol) {
  require_square_same(u, v);
  if (!is_partial_isometry(u, tol) || !is_partial_isometry(v, tol))
    throw_input("both inputs must be partial isometries");
  ProductCriterion out;
  out.product_is_partial_isometry = is_partial_isometry(Operator(u * v), tol);
  out.initial_final_commute =
      commute(Operator(adjoint(u) * u), Operator(v * adjoint(v)), tol);
  return out;
}

}  // namespace fellrep
