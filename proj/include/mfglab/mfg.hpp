#pragma once

#include <array>
#include <string>
#include <vector>

#include "mfglab/field.hpp"

namespace mfglab {

/// Coefficients of the coupled system: p multiplies the quadratic gradient
/// term and the drift flux, c0 couples the density into the value equation.
struct MfgCoefficients {
    ScalarField p;
    ScalarField c0;
    double M = 1.0;  // admissibility bound on the W^{1,inf} norms
};

/// Discrete W^{1,inf} diagnostics for the admissibility bound.
struct AdmissibilityReport {
    double p_sup = 0.0;
    double grad_p_sup = 0.0;
    double c0_sup = 0.0;
    bool ok = false;
};

AdmissibilityReport check_admissible(const MfgCoefficients& coeffs);

/// Terminal/initial data plus Dirichlet traces. Traces and forcings are
/// optional; empty fields mean zero. Forcings exist for manufactured-solution
/// testing and enter the equations as right-hand sides.
struct MfgBoundaryData {
    ScalarField u_terminal;
    ScalarField v_initial;
    SpaceTimeField trace_u;  // used on boundary nodes only
    SpaceTimeField trace_v;
    SpaceTimeField forcing_u;
    SpaceTimeField forcing_v;
};

struct SolverParams {
    double picard_tol = 1e-9;
    int picard_max_iter = 80;
    double theta = 0.5;  // damping applied once the fixed point stalls
    int newton_steps_per_time_level = 3;
    double linear_solver_tol = 1e-12;

    void validate() const;
};

struct MfgSolution {
    SpaceTimeField u;
    SpaceTimeField v;
    int picard_iterations = 0;
    std::vector<double> picard_residual_history;
    std::array<double, 2> final_pde_residuals{0.0, 0.0};
    bool converged = false;
    double newton_residual_max = 0.0;

    // Sup norms of u, v, grad u, grad v, dt u, dt v recorded for the
    // regularity-bound surrogate.
    std::array<double, 6> sup_norms{};
};

/// Backward march for the value function with v frozen. The quadratic
/// gradient term is resolved by Newton linearization at each time level
/// (frozen-gradient start from the previous level).
SpaceTimeField solve_hjb_backward(const SpaceTimeField& v_fixed,
                                  const MfgCoefficients& coeffs,
                                  const MfgBoundaryData& bdata,
                                  const SolverParams& params,
                                  double* newton_residual_max = nullptr);

/// Forward march for the density with u frozen; implicit Euler with the
/// drift in flux form (face-averaged p * grad u).
SpaceTimeField solve_fp_forward(const SpaceTimeField& u_fixed,
                                const MfgCoefficients& coeffs,
                                const MfgBoundaryData& bdata,
                                const SolverParams& params);

/// Damped Picard alternation of the two marches. Starts from the decoupled
/// density (u == 0), runs undamped until the residual stalls, then applies
/// the configured damping. Non-convergence returns the best iterate with
/// converged = false.
MfgSolution solve_mfg(const MfgCoefficients& coeffs, const MfgBoundaryData& bdata,
                      const SolverParams& params);

/// Minimum of |grad u(., t0)| over the masked nodes.
double check_nondegeneracy(const SpaceTimeField& u, const GridPtr& grid,
                           const Mask* region = nullptr);

/// L2(Q) residuals of both equations with the solver's own stencils
/// (forward quotient for the backward equation, backward quotient for the
/// forward one), so a converged solve scores near the Picard tolerance.
std::array<double, 2> pde_residual(const MfgSolution& sol,
                                   const MfgCoefficients& coeffs,
                                   const MfgBoundaryData& bdata);

/// Either trace field may be empty (zero trace); helper that callers use to
/// fetch boundary values for a level.
ScalarField boundary_slice(const SpaceTimeField& trace, const GridPtr& grid, int level);

}  // namespace mfglab
