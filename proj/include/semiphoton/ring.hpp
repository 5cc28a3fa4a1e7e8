// Ring-sampled matter-motion diagnostics: the Lamb-form statement
//   (dg/dt + grad U) - v x rot g = 0
// evaluated on an analytic in-plane field configuration, and the rigid-body
// centripetal identity a_r = (1/2) v x rot v = (v^2/r) e_r.
#pragma once

#include <cstddef>
#include <functional>

#include "semiphoton/types.hpp"

namespace semiphoton {

/// In-plane fields given analytically in polar coordinates (r, theta);
/// vector fields return Cartesian components. dg_dt defaults to zero
/// (steady configurations).
struct RingField {
    std::function<double(double r, double th)> U;
    std::function<Vec3(double r, double th)> g;
    std::function<Vec3(double r, double th)> v;
    std::function<Vec3(double r, double th)> dg_dt;
};

struct RingDiagnostics {
    double lamb_residual = 0.0;        // max | (dg/dt + grad U) - v x rot g |
    double lamb_scale = 0.0;           // max |grad U| encountered
    double centripetal_residual = 0.0; // max | (1/2) v x rot v - (v^2/r) e_r | / (v^2/r)
    double relative() const { return lamb_scale > 0.0 ? lamb_residual / lamb_scale : lamb_residual; }
};

/// Samples the ring of radius r_ring at `samples` points (uniform arc length)
/// and evaluates both statements with 2nd-order central differences; the
/// radial step is tied to the angular step, so the residual converges at
/// 2nd order in the sample count. Throws for samples < 16.
RingDiagnostics lamb_residual(const RingField& field, double r_ring, std::size_t samples);

/// Rigid rotation v = omega r e_theta with uniform density rho and the
/// pressure profile U = rho omega^2 r^2 that balances it; satisfies the
/// Lamb-form statement exactly.
RingField rigid_rotation_ring(double omega, double rho);

/// Static configuration: constant U, zero g and v.
RingField uniform_static_ring(double U0);

}  // namespace semiphoton
