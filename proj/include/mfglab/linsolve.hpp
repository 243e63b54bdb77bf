#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace mfglab {

/// Raised when an inner linear/nonlinear solve breaks down; callers in the
/// experiment harness catch it and flag the affected record.
struct SolverFailure : std::runtime_error {
    SolverFailure(const std::string& what, int time_level, double residual)
        : std::runtime_error(what), level(time_level), residual(residual) {}
    int level = -1;
    double residual = 0.0;
};

/// Tridiagonal system, solved in place by the Thomas algorithm.
/// Rows are diagonally dominant for the implicit steps assembled here,
/// so no pivoting is performed.
struct Tridiag {
    std::vector<double> lower, diag, upper;  // lower[0] and upper[n-1] unused

    explicit Tridiag(std::size_t n) : lower(n, 0.0), diag(n, 0.0), upper(n, 0.0) {}
    std::size_t size() const { return diag.size(); }
};

void solve_thomas(const Tridiag& A, std::vector<double>& rhs);

/// Five-diagonal operator over the interior nodes of a 2-d grid
/// (nx*nx unknowns, row-major in the interior indices).
struct Stencil2D {
    int nx = 0;
    std::vector<double> c, w, e, s, n;

    explicit Stencil2D(int interior_per_axis)
        : nx(interior_per_axis),
          c(static_cast<std::size_t>(nx) * nx, 0.0),
          w(c.size(), 0.0), e(c.size(), 0.0), s(c.size(), 0.0), n(c.size(), 0.0) {}

    std::size_t size() const { return c.size(); }
    void apply(const std::vector<double>& x, std::vector<double>& y) const;
};

/// Diagonally preconditioned BiCGStab. Returns the iteration count;
/// throws SolverFailure when the residual fails to reach tol.
int bicgstab(const Stencil2D& A, const std::vector<double>& rhs,
             std::vector<double>& x, double tol, int max_iter);

/// Dense symmetric positive definite solve (Cholesky), used for the small
/// Gauss-Newton normal equations.
std::vector<double> solve_spd(std::vector<double> A, std::vector<double> b);

}  // namespace mfglab
