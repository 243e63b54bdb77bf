#pragma once

#include "mfglab/field.hpp"

namespace mfglab {

/// Second-order gradient: central differences at interior nodes, one-sided
/// three-point stencils on the boundary.
VectorField gradient_fd(const ScalarField& f);

/// Five-point (three-point in 1d) Laplacian at interior nodes; one-sided
/// second-order closure on boundary nodes.
ScalarField laplacian_fd(const ScalarField& f);

/// Componentwise second-order divergence, same stencil policy as gradient_fd.
ScalarField divergence_fd(const VectorField& F);

/// Discrete d^2 f / (dx_ci dx_cj).  Pure second derivatives use the compact
/// three-point stencil; mixed derivatives compose two first-derivative passes.
ScalarField second_derivative_fd(const ScalarField& f, int ci, int cj);

/// Central difference quotients in time; one-sided second-order at k=0, nt.
SpaceTimeField time_derivative(const SpaceTimeField& traj);
SpaceTimeVectorField time_derivative(const SpaceTimeVectorField& traj);

/// Second difference quotients in time (central at 1..nt-1, one-sided at the
/// endpoints).
SpaceTimeField time_second_derivative(const SpaceTimeField& traj);

}  // namespace mfglab
