#include "mfglab/linsolve.hpp"

#include <cmath>

namespace mfglab {

void solve_thomas(const Tridiag& A, std::vector<double>& rhs) {
    const std::size_t n = A.size();
    std::vector<double> cp(n, 0.0);
    double beta = A.diag[0];
    if (beta == 0.0) throw SolverFailure("thomas: zero pivot", -1, 0.0);
    rhs[0] /= beta;
    for (std::size_t i = 1; i < n; ++i) {
        cp[i - 1] = A.upper[i - 1] / beta;
        beta = A.diag[i] - A.lower[i] * cp[i - 1];
        if (beta == 0.0) throw SolverFailure("thomas: zero pivot", -1, 0.0);
        rhs[i] = (rhs[i] - A.lower[i] * rhs[i - 1]) / beta;
    }
    for (std::size_t i = n - 1; i-- > 0;) rhs[i] -= cp[i] * rhs[i + 1];
}

void Stencil2D::apply(const std::vector<double>& x, std::vector<double>& y) const {
    const int m = nx;
    for (int j = 0; j < m; ++j) {
        for (int i = 0; i < m; ++i) {
            const std::size_t k = static_cast<std::size_t>(j) * m + i;
            double acc = c[k] * x[k];
            if (i > 0) acc += w[k] * x[k - 1];
            if (i < m - 1) acc += e[k] * x[k + 1];
            if (j > 0) acc += s[k] * x[k - m];
            if (j < m - 1) acc += n[k] * x[k + m];
            y[k] = acc;
        }
    }
}

int bicgstab(const Stencil2D& A, const std::vector<double>& rhs,
             std::vector<double>& x, double tol, int max_iter) {
    const std::size_t n = A.size();
    std::vector<double> r(n), r0(n), p(n, 0.0), v(n, 0.0), ss(n), t(n), tmp(n);

    std::vector<double> dinv(n);
    for (std::size_t k = 0; k < n; ++k)
        dinv[k] = A.c[k] != 0.0 ? 1.0 / A.c[k] : 1.0;

    A.apply(x, tmp);
    double rhs_norm = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        r[k] = rhs[k] - tmp[k];
        rhs_norm += rhs[k] * rhs[k];
    }
    rhs_norm = std::sqrt(rhs_norm);
    const double stop = tol * std::max(rhs_norm, 1e-300);

    auto nrm = [&](const std::vector<double>& z) {
        double s = 0.0;
        for (double q : z) s += q * q;
        return std::sqrt(s);
    };
    if (nrm(r) <= stop) return 0;

    r0 = r;
    double rho = 1.0, alpha = 1.0, omega = 1.0;

    for (int it = 1; it <= max_iter; ++it) {
        double rho1 = 0.0;
        for (std::size_t k = 0; k < n; ++k) rho1 += r0[k] * r[k];
        if (rho1 == 0.0)
            throw SolverFailure("bicgstab: breakdown (rho = 0)", -1, nrm(r));
        if (it == 1) {
            p = r;
        } else {
            const double beta = (rho1 / rho) * (alpha / omega);
            for (std::size_t k = 0; k < n; ++k)
                p[k] = r[k] + beta * (p[k] - omega * v[k]);
        }
        rho = rho1;

        for (std::size_t k = 0; k < n; ++k) tmp[k] = dinv[k] * p[k];
        A.apply(tmp, v);
        double r0v = 0.0;
        for (std::size_t k = 0; k < n; ++k) r0v += r0[k] * v[k];
        if (r0v == 0.0)
            throw SolverFailure("bicgstab: breakdown (r0.v = 0)", -1, nrm(r));
        alpha = rho / r0v;
        for (std::size_t k = 0; k < n; ++k) {
            x[k] += alpha * dinv[k] * p[k];
            ss[k] = r[k] - alpha * v[k];
        }
        if (nrm(ss) <= stop) return it;

        for (std::size_t k = 0; k < n; ++k) tmp[k] = dinv[k] * ss[k];
        A.apply(tmp, t);
        double tt = 0.0, ts = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            tt += t[k] * t[k];
            ts += t[k] * ss[k];
        }
        if (tt == 0.0)
            throw SolverFailure("bicgstab: breakdown (t = 0)", -1, nrm(ss));
        omega = ts / tt;
        for (std::size_t k = 0; k < n; ++k) {
            x[k] += omega * dinv[k] * ss[k];
            r[k] = ss[k] - omega * t[k];
        }
        if (nrm(r) <= stop) return it;
        if (omega == 0.0)
            throw SolverFailure("bicgstab: breakdown (omega = 0)", -1, nrm(r));
    }
    throw SolverFailure("bicgstab: no convergence", -1, nrm(r));
}

std::vector<double> solve_spd(std::vector<double> A, std::vector<double> b) {
    const std::size_t n = b.size();
    // In-place Cholesky A = L L^T.
    for (std::size_t j = 0; j < n; ++j) {
        double d = A[j * n + j];
        for (std::size_t k = 0; k < j; ++k) d -= A[j * n + k] * A[j * n + k];
        if (d <= 0.0) throw SolverFailure("cholesky: matrix not SPD", -1, d);
        const double lj = std::sqrt(d);
        A[j * n + j] = lj;
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = A[i * n + j];
            for (std::size_t k = 0; k < j; ++k) s -= A[i * n + k] * A[j * n + k];
            A[i * n + j] = s / lj;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        double s = b[i];
        for (std::size_t k = 0; k < i; ++k) s -= A[i * n + k] * b[k];
        b[i] = s / A[i * n + i];
    }
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t k = i + 1; k < n; ++k) s -= A[k * n + i] * b[k];
        b[i] = s / A[i * n + i];
    }
    return b;
}

}  // namespace mfglab
