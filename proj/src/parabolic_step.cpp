#include "mfglab/parabolic_step.hpp"

#include <cmath>

#include "mfglab/linsolve.hpp"

namespace mfglab {

namespace {

// Stencil coefficients of the implicit operator at interior node (i,j) for
// one axis. Laplacian part plus advection (b) plus flux-form drift (a).
struct AxisCoeffs {
    double minus = 0.0;   // neighbor at pos-1
    double plus = 0.0;    // neighbor at pos+1
    double center = 0.0;  // contribution to the diagonal
};

AxisCoeffs axis_coeffs(const Grid& g, double dt, int axis, std::size_t node,
                       std::size_t node_minus, std::size_t node_plus,
                       const VectorField* b, const VectorField* a) {
    const double h = g.h;
    AxisCoeffs cf;
    // -dt * Lap
    cf.center += 2.0 * dt / (h * h);
    cf.minus -= dt / (h * h);
    cf.plus -= dt / (h * h);
    // +dt * b . grad (central)
    if (b) {
        const double bc = b->at(axis, node);
        cf.plus += dt * bc / (2.0 * h);
        cf.minus -= dt * bc / (2.0 * h);
    }
    // -dt * div_f(a w): faces carry the average of a and of w.
    if (a) {
        const double a_p = 0.5 * (a->at(axis, node) + a->at(axis, node_plus));
        const double a_m = 0.5 * (a->at(axis, node_minus) + a->at(axis, node));
        cf.plus -= dt * a_p / (2.0 * h);
        cf.center -= dt * (a_p - a_m) / (2.0 * h);
        cf.minus += dt * a_m / (2.0 * h);
    }
    return cf;
}

ScalarField step_1d(const GridPtr& grid, double dt, const VectorField* b,
                    const VectorField* a, const ScalarField& rhs,
                    const ScalarField& boundary, int time_level,
                    const char* context) {
    const Grid& g = *grid;
    const int n = g.n;
    Tridiag A(n);
    std::vector<double> r(n);

    for (int i = 1; i <= n; ++i) {
        const std::size_t node = g.index(i);
        const AxisCoeffs cf = axis_coeffs(g, dt, 0, node, g.index(i - 1),
                                          g.index(i + 1), b, a);
        const int row = i - 1;
        A.diag[row] = 1.0 + cf.center;
        r[row] = rhs[node];
        if (i == 1)
            r[row] -= cf.minus * boundary[g.index(0)];
        else
            A.lower[row] = cf.minus;
        if (i == n)
            r[row] -= cf.plus * boundary[g.index(n + 1)];
        else
            A.upper[row] = cf.plus;
    }

    solve_thomas(A, r);

    ScalarField out(grid);
    out[g.index(0)] = boundary[g.index(0)];
    out[g.index(n + 1)] = boundary[g.index(n + 1)];
    for (int i = 1; i <= n; ++i) {
        if (!std::isfinite(r[i - 1]))
            throw SolverFailure(std::string(context) + ": non-finite solution",
                                time_level, r[i - 1]);
        out[g.index(i)] = r[i - 1];
    }
    return out;
}

ScalarField step_2d(const GridPtr& grid, double dt, const VectorField* b,
                    const VectorField* a, const ScalarField& rhs,
                    const ScalarField& boundary, double linear_tol,
                    int time_level, const char* context) {
    const Grid& g = *grid;
    const int n = g.n;
    Stencil2D A(n);
    std::vector<double> r(A.size());

    for (int j = 1; j <= n; ++j) {
        for (int i = 1; i <= n; ++i) {
            const std::size_t node = g.index(i, j);
            const std::size_t row = static_cast<std::size_t>(j - 1) * n + (i - 1);
            const AxisCoeffs cx = axis_coeffs(g, dt, 0, node, g.index(i - 1, j),
                                              g.index(i + 1, j), b, a);
            const AxisCoeffs cy = axis_coeffs(g, dt, 1, node, g.index(i, j - 1),
                                              g.index(i, j + 1), b, a);
            A.c[row] = 1.0 + cx.center + cy.center;
            r[row] = rhs[node];
            if (i == 1) r[row] -= cx.minus * boundary[g.index(0, j)];
            else A.w[row] = cx.minus;
            if (i == n) r[row] -= cx.plus * boundary[g.index(n + 1, j)];
            else A.e[row] = cx.plus;
            if (j == 1) r[row] -= cy.minus * boundary[g.index(i, 0)];
            else A.s[row] = cy.minus;
            if (j == n) r[row] -= cy.plus * boundary[g.index(i, n + 1)];
            else A.n[row] = cy.plus;
        }
    }

    std::vector<double> x(A.size(), 0.0);
    try {
        bicgstab(A, r, x, linear_tol, 40 * n * n);
    } catch (const SolverFailure& f) {
        throw SolverFailure(std::string(context) + ": " + f.what(), time_level,
                            f.residual);
    }

    ScalarField out(grid);
    const int per = g.nodes_per_axis();
    for (int j = 0; j < per; ++j)
        for (int i = 0; i < per; ++i) {
            const std::size_t node = g.index(i, j);
            out[node] = g.is_boundary(i, j)
                            ? boundary[node]
                            : x[static_cast<std::size_t>(j - 1) * n + (i - 1)];
        }
    for (double q : out.v)
        if (!std::isfinite(q))
            throw SolverFailure(std::string(context) + ": non-finite solution",
                                time_level, q);
    return out;
}

}  // namespace

ScalarField implicit_parabolic_step(const GridPtr& grid, double dt,
                                    const VectorField* b, const VectorField* a,
                                    const ScalarField& rhs,
                                    const ScalarField& boundary,
                                    double linear_tol, int time_level,
                                    const char* context) {
    if (grid->d == 1)
        return step_1d(grid, dt, b, a, rhs, boundary, time_level, context);
    return step_2d(grid, dt, b, a, rhs, boundary, linear_tol, time_level, context);
}

ScalarField flux_divergence_product(const VectorField& a, const ScalarField& w) {
    const Grid& g = *w.grid;
    ScalarField out(w.grid);
    const double h = g.h;
    const int n = g.n;
    const int jlo = g.d == 2 ? 1 : 0;
    const int jhi = g.d == 2 ? n : 0;
    for (int j = jlo; j <= jhi; ++j) {
        for (int i = 1; i <= n; ++i) {
            const std::size_t node = g.index(i, j);
            double acc = 0.0;
            for (int axis = 0; axis < g.d; ++axis) {
                const std::size_t np =
                    axis == 0 ? g.index(i + 1, j) : g.index(i, j + 1);
                const std::size_t nm =
                    axis == 0 ? g.index(i - 1, j) : g.index(i, j - 1);
                const double a_p = 0.5 * (a.at(axis, node) + a.at(axis, np));
                const double a_m = 0.5 * (a.at(axis, nm) + a.at(axis, node));
                const double w_p = 0.5 * (w[node] + w[np]);
                const double w_m = 0.5 * (w[nm] + w[node]);
                acc += (a_p * w_p - a_m * w_m) / h;
            }
            out[node] = acc;
        }
    }
    return out;
}

}  // namespace mfglab
