#include <Eigen/Eigenvalues>
#include <cmath>

#include "nevpull/errors.hpp"
#include "nevpull/selfmap.hpp"

namespace nevpull {

namespace {

// Parlett-Reinsch diagonal similarity scaling with powers of two.
void balance(Eigen::MatrixXcd& m) {
  const Eigen::Index n = m.rows();
  constexpr double radix = 2.0;
  bool done = false;
  while (!done) {
    done = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      double c = 0.0, r = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(m(j, i).real()) + std::abs(m(j, i).imag());
        r += std::abs(m(i, j).real()) + std::abs(m(i, j).imag());
      }
      if (c == 0.0 || r == 0.0) continue;
      double g = r / radix, f = 1.0;
      const double s = c + r;
      while (c < g) {
        f *= radix;
        c *= radix * radix;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= radix * radix;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        m.row(i) /= f;
        m.col(i) *= f;
      }
    }
  }
}

}  // namespace

std::vector<cplx> polynomial_roots(std::span<const cplx> coeffs) {
  if (coeffs.empty()) throw DomainError("polynomial_roots: empty coefficient list");
  const std::size_t n = coeffs.size() - 1;
  const cplx lead = coeffs[n];
  if (lead == cplx{0.0, 0.0}) throw DomainError("polynomial_roots: leading coefficient is zero");
  if (n == 0) return {};
  if (n == 1) return {-coeffs[0] / lead};

  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(Eigen::Index(n), Eigen::Index(n));
  for (std::size_t i = 1; i < n; ++i) companion(Eigen::Index(i), Eigen::Index(i - 1)) = 1.0;
  for (std::size_t i = 0; i < n; ++i) companion(Eigen::Index(i), Eigen::Index(n - 1)) = -coeffs[i] / lead;
  balance(companion);

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw NumericalError("polynomial_roots: eigenvalue iteration failed");
  std::vector<cplx> roots(n);
  for (std::size_t i = 0; i < n; ++i) roots[i] = solver.eigenvalues()(Eigen::Index(i));
  return roots;
}

}  // namespace nevpull
