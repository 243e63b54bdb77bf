#pragma once

#include "mfglab/field.hpp"

namespace mfglab {

/// L2 norm over the region (all nodes when region is null), trapezoid
/// quadrature with weight h^d per node.
double norm_l2(const ScalarField& f, const Mask* region = nullptr);

/// Discrete H2 norm of a spatial slice: values, gradient, and the full
/// second-difference tensor including mixed derivatives.
double norm_h2_slice(const ScalarField& f);

/// Discrete H1(0,T; L2(region)) norm of a trajectory, time derivatives by
/// difference quotients.
double norm_h1t_l2(const SpaceTimeField& traj, const Mask* region = nullptr);

/// L2(Q) norm of a space-time field (trapezoid in both space and time).
double norm_l2_q(const SpaceTimeField& f, const Mask* region = nullptr);

/// L2(0,T; L2(region)) squared, exposed for misfit assembly.
double sq_norm_l2_q(const SpaceTimeField& f, const Mask* region = nullptr);

}  // namespace mfglab
