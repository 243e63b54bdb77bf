#pragma once

#include "mfglab/field.hpp"

namespace mfglab {

/// One implicit Euler step shared by the forward/backward parabolic solvers.
///
/// Solves, over the interior nodes,
///
///   w - dt*Lap(w) + dt*(b . grad w) - dt*div_f(a w) = rhs
///
/// where div_f is the flux-form divergence with face-averaged drift a and
/// face-averaged w, and b is a frozen advection velocity (central gradient).
/// Boundary values of w are prescribed by `boundary` (Dirichlet) and their
/// stencil contributions are moved to the right-hand side.
///
/// Either of a, b may be null. d=1 systems are solved by direct banded
/// elimination; d=2 by diagonally preconditioned conjugate-direction
/// iteration (BiCGStab).
ScalarField implicit_parabolic_step(const GridPtr& grid, double dt,
                                    const VectorField* b, const VectorField* a,
                                    const ScalarField& rhs,
                                    const ScalarField& boundary,
                                    double linear_tol, int time_level,
                                    const char* context);

/// Flux-form divergence of the product a*w with separately face-averaged
/// factors, evaluated at interior nodes (zero on the boundary). This is the
/// explicit counterpart of the implicit drift term above; the two use
/// identical face values.
ScalarField flux_divergence_product(const VectorField& a, const ScalarField& w);

}  // namespace mfglab
