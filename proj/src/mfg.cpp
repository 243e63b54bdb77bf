#include "mfglab/mfg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "mfglab/fd_ops.hpp"
#include "mfglab/linsolve.hpp"
#include "mfglab/norms.hpp"
#include "mfglab/parabolic_step.hpp"

namespace mfglab {

void SolverParams::validate() const {
    if (!(picard_tol > 0.0) || picard_max_iter < 1 ||
        !(theta > 0.0 && theta <= 1.0) || newton_steps_per_time_level < 1 ||
        !(linear_solver_tol > 0.0))
        throw std::invalid_argument("solver params: out of range");
}

AdmissibilityReport check_admissible(const MfgCoefficients& coeffs) {
    AdmissibilityReport rep;
    rep.p_sup = sup_norm(coeffs.p);
    rep.grad_p_sup = sup_norm(gradient_fd(coeffs.p));
    rep.c0_sup = sup_norm(coeffs.c0);
    rep.ok = rep.p_sup + rep.grad_p_sup <= coeffs.M && rep.c0_sup <= coeffs.M;
    return rep;
}

ScalarField boundary_slice(const SpaceTimeField& trace, const GridPtr& grid,
                           int level) {
    if (trace.empty()) return ScalarField(grid, 0.0);
    return trace.slice(level);
}

namespace {

// p * grad(w): advection velocity for the Newton linearization, and the
// drift for the density equation.
VectorField scaled_gradient(const ScalarField& p, const ScalarField& w) {
    VectorField grad = gradient_fd(w);
    const std::size_t N = grad.grid->num_nodes();
    for (int c = 0; c < grad.grid->d; ++c)
        for (std::size_t node = 0; node < N; ++node)
            grad.at(c, node) *= p[node];
    return grad;
}

double grad_sq(const VectorField& grad, std::size_t node) {
    double s = 0.0;
    for (int c = 0; c < grad.grid->d; ++c) {
        const double q = grad.at(c, node);
        s += q * q;
    }
    return s;
}

}  // namespace

SpaceTimeField solve_hjb_backward(const SpaceTimeField& v_fixed,
                                  const MfgCoefficients& coeffs,
                                  const MfgBoundaryData& bdata,
                                  const SolverParams& params,
                                  double* newton_residual_max) {
    const GridPtr grid = coeffs.p.grid;
    require_same_grid(grid, v_fixed.grid, "solve_hjb_backward");
    params.validate();

    const Grid& g = *grid;
    const double dt = g.dt;
    SpaceTimeField u(grid);
    u.set_slice(g.nt, bdata.u_terminal);
    double worst_newton = 0.0;

    for (int k = g.nt - 1; k >= 0; --k) {
        const ScalarField boundary = boundary_slice(bdata.trace_u, grid, k);

        // base rhs: previous level minus dt*(c0 v + forcing) at this level
        ScalarField rhs_base(grid);
        for (std::size_t node = 0; node < g.num_nodes(); ++node) {
            double r = u.at(k + 1, node) - dt * coeffs.c0[node] * v_fixed.at(k, node);
            if (!bdata.forcing_u.empty()) r -= dt * bdata.forcing_u.at(k, node);
            rhs_base[node] = r;
        }

        // Newton on  w - dt*Lap w + (dt/2) p |grad w|^2 = rhs_base.
        // Each pass solves the exact linearization around the previous
        // iterate; the first pass freezes the gradient of u at level k+1.
        ScalarField w = u.slice(k + 1);
        for (std::size_t node = 0; node < g.num_nodes(); ++node)
            if (g.boundary_mask[node]) w[node] = boundary[node];

        for (int it = 0; it < params.newton_steps_per_time_level; ++it) {
            const VectorField grad_w = gradient_fd(w);
            VectorField b(grid);
            for (int c = 0; c < g.d; ++c)
                for (std::size_t node = 0; node < g.num_nodes(); ++node)
                    b.at(c, node) = coeffs.p[node] * grad_w.at(c, node);
            ScalarField rhs(grid);
            for (std::size_t node = 0; node < g.num_nodes(); ++node)
                rhs[node] = rhs_base[node] +
                            0.5 * dt * coeffs.p[node] * grad_sq(grad_w, node);
            w = implicit_parabolic_step(grid, dt, &b, nullptr, rhs, boundary,
                                        params.linear_solver_tol, k,
                                        "hjb backward step");
        }

        // Nonlinear residual of the accepted level (diagnostic; divergence
        // is reported as a failure).
        {
            const VectorField grad_w = gradient_fd(w);
            const ScalarField lap_w = laplacian_fd(w);
            double res = 0.0;
            for (std::size_t node = 0; node < g.num_nodes(); ++node) {
                if (g.boundary_mask[node]) continue;
                const double r = w[node] - dt * lap_w[node] +
                                 0.5 * dt * coeffs.p[node] * grad_sq(grad_w, node) -
                                 rhs_base[node];
                res = std::max(res, std::abs(r));
            }
            worst_newton = std::max(worst_newton, res);
            if (!std::isfinite(res) || res > 1e3)
                throw SolverFailure("hjb backward step: newton divergence", k, res);
        }

        u.set_slice(k, w);
    }
    if (newton_residual_max) *newton_residual_max = worst_newton;
    return u;
}

SpaceTimeField solve_fp_forward(const SpaceTimeField& u_fixed,
                                const MfgCoefficients& coeffs,
                                const MfgBoundaryData& bdata,
                                const SolverParams& params) {
    const GridPtr grid = coeffs.p.grid;
    require_same_grid(grid, u_fixed.grid, "solve_fp_forward");
    params.validate();

    const Grid& g = *grid;
    const double dt = g.dt;
    SpaceTimeField v(grid);
    v.set_slice(0, bdata.v_initial);

    for (int k = 1; k <= g.nt; ++k) {
        const ScalarField boundary = boundary_slice(bdata.trace_v, grid, k);
        const VectorField drift = scaled_gradient(coeffs.p, u_fixed.slice(k));

        ScalarField rhs(grid);
        for (std::size_t node = 0; node < g.num_nodes(); ++node) {
            double r = v.at(k - 1, node);
            if (!bdata.forcing_v.empty()) r += dt * bdata.forcing_v.at(k, node);
            rhs[node] = r;
        }
        const ScalarField w = implicit_parabolic_step(
            grid, dt, nullptr, &drift, rhs, boundary, params.linear_solver_tol,
            k, "fp forward step");
        v.set_slice(k, w);
    }
    return v;
}

MfgSolution solve_mfg(const MfgCoefficients& coeffs, const MfgBoundaryData& bdata,
                      const SolverParams& params) {
    const GridPtr grid = coeffs.p.grid;
    params.validate();
    const AdmissibilityReport adm = check_admissible(coeffs);
    if (!adm.ok)
        throw std::invalid_argument("solve_mfg: coefficients exceed the admissibility bound");

    MfgSolution sol;
    sol.u = SpaceTimeField(grid);
    sol.v = solve_fp_forward(SpaceTimeField(grid), coeffs, bdata, params);

    bool damping_engaged = false;
    double prev_residual = 0.0;
    double worst_newton = 0.0;

    for (int it = 1; it <= params.picard_max_iter; ++it) {
        double newton_res = 0.0;
        SpaceTimeField u_new =
            solve_hjb_backward(sol.v, coeffs, bdata, params, &newton_res);
        worst_newton = std::max(worst_newton, newton_res);
        SpaceTimeField v_candidate = solve_fp_forward(u_new, coeffs, bdata, params);

        if (damping_engaged) {
            const double th = params.theta;
            for (std::size_t m = 0; m < v_candidate.v.size(); ++m)
                v_candidate.v[m] = (1.0 - th) * sol.v.v[m] + th * v_candidate.v[m];
        }

        const double change = std::max(max_abs_diff(u_new, sol.u),
                                       max_abs_diff(v_candidate, sol.v));
        sol.u = std::move(u_new);
        sol.v = std::move(v_candidate);
        sol.picard_residual_history.push_back(change);
        sol.picard_iterations = it;

        if (change < params.picard_tol) {
            sol.converged = true;
            break;
        }
        if (it > 1 && change >= prev_residual && !damping_engaged)
            damping_engaged = true;
        prev_residual = change;
    }

    sol.newton_residual_max = worst_newton;
    sol.final_pde_residuals = pde_residual(sol, coeffs, bdata);
    sol.sup_norms = {sup_norm(sol.u),
                     sup_norm(sol.v),
                     0.0,
                     0.0,
                     sup_norm(time_derivative(sol.u)),
                     sup_norm(time_derivative(sol.v))};
    double gu = 0.0, gv = 0.0;
    for (int k = 0; k <= grid->nt; ++k) {
        gu = std::max(gu, sup_norm(gradient_fd(sol.u.slice(k))));
        gv = std::max(gv, sup_norm(gradient_fd(sol.v.slice(k))));
    }
    sol.sup_norms[2] = gu;
    sol.sup_norms[3] = gv;
    return sol;
}

double check_nondegeneracy(const SpaceTimeField& u, const GridPtr& grid,
                           const Mask* region) {
    const Grid& g = *grid;
    const VectorField grad = gradient_fd(u.slice(g.t0_index));
    double lo = std::numeric_limits<double>::infinity();
    for (std::size_t node = 0; node < g.num_nodes(); ++node) {
        if (region && !(*region)[node]) continue;
        lo = std::min(lo, grad.magnitude(node));
    }
    return std::isfinite(lo) ? lo : 0.0;
}

std::array<double, 2> pde_residual(const MfgSolution& sol,
                                   const MfgCoefficients& coeffs,
                                   const MfgBoundaryData& bdata) {
    const GridPtr grid = sol.u.grid;
    const Grid& g = *grid;
    const double dt = g.dt;

    double acc_u = 0.0;
    for (int k = 0; k < g.nt; ++k) {
        const ScalarField uk = sol.u.slice(k);
        const ScalarField lap = laplacian_fd(uk);
        const VectorField grad = gradient_fd(uk);
        double level = 0.0;
        for (std::size_t node = 0; node < g.num_nodes(); ++node) {
            if (g.boundary_mask[node]) continue;
            double r = (sol.u.at(k + 1, node) - sol.u.at(k, node)) / dt +
                       lap[node] - 0.5 * coeffs.p[node] * grad_sq(grad, node) -
                       coeffs.c0[node] * sol.v.at(k, node);
            if (!bdata.forcing_u.empty()) r -= bdata.forcing_u.at(k, node);
            level += g.node_weight(node) * r * r;
        }
        acc_u += dt * level;
    }

    double acc_v = 0.0;
    for (int k = 1; k <= g.nt; ++k) {
        const ScalarField vk = sol.v.slice(k);
        const ScalarField lap = laplacian_fd(vk);
        const VectorField drift = scaled_gradient(coeffs.p, sol.u.slice(k));
        const ScalarField div = flux_divergence_product(drift, vk);
        double level = 0.0;
        for (std::size_t node = 0; node < g.num_nodes(); ++node) {
            if (g.boundary_mask[node]) continue;
            double r = (sol.v.at(k, node) - sol.v.at(k - 1, node)) / dt -
                       lap[node] - div[node];
            if (!bdata.forcing_v.empty()) r -= bdata.forcing_v.at(k, node);
            level += g.node_weight(node) * r * r;
        }
        acc_v += dt * level;
    }
    return {std::sqrt(acc_u), std::sqrt(acc_v)};
}

}  // namespace mfglab
