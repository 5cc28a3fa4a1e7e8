#include "semiphoton/ring.hpp"

#include <cmath>
#include <stdexcept>

namespace semiphoton {

namespace {

Vec3 radial_unit(double th) { return {std::cos(th), std::sin(th), 0.0}; }
Vec3 tangent_unit(double th) { return {-std::sin(th), std::cos(th), 0.0}; }

// z-component of curl in polar coordinates:
//   rot_z F = (1/r) [ d(r F_theta)/dr - d(F_r)/dtheta ]
double curl_z(const std::function<Vec3(double, double)>& F, double r, double th, double dr,
              double dth) {
    const auto f_theta = [&](double rr) { return dot(F(rr, th), tangent_unit(th)); };
    const auto f_r = [&](double tt) { return dot(F(r, tt), radial_unit(tt)); };
    const double d_rFth = ((r + dr) * f_theta(r + dr) - (r - dr) * f_theta(r - dr)) / (2.0 * dr);
    const double d_Fr = (f_r(th + dth) - f_r(th - dth)) / (2.0 * dth);
    return (d_rFth - d_Fr) / r;
}

Vec3 gradient(const std::function<double(double, double)>& f, double r, double th, double dr,
              double dth) {
    const double df_dr = (f(r + dr, th) - f(r - dr, th)) / (2.0 * dr);
    const double df_dth = (f(r, th + dth) - f(r, th - dth)) / (2.0 * dth);
    return df_dr * radial_unit(th) + (df_dth / r) * tangent_unit(th);
}

}  // namespace

RingDiagnostics lamb_residual(const RingField& field, double r_ring, std::size_t samples) {
    if (samples < 16) throw std::invalid_argument("lamb_residual: need at least 16 samples");
    if (r_ring <= 0.0) throw std::invalid_argument("lamb_residual: radius must be positive");

    const double dth = 2.0 * pi / static_cast<double>(samples);
    const double dr = r_ring * dth;  // tie the radial step to the arc step

    RingDiagnostics d;
    for (std::size_t j = 0; j < samples; ++j) {
        const double th = dth * static_cast<double>(j);
        const Vec3 grad_u = gradient(field.U, r_ring, th, dr, dth);
        const double rot_g = curl_z(field.g, r_ring, th, dr, dth);
        const Vec3 v = field.v(r_ring, th);
        const Vec3 dgdt = field.dg_dt ? field.dg_dt(r_ring, th) : Vec3{};
        const Vec3 residual = (dgdt + grad_u) - cross(v, Vec3{0.0, 0.0, rot_g});
        d.lamb_residual = std::max(d.lamb_residual, norm(residual));
        d.lamb_scale = std::max(d.lamb_scale, norm(grad_u));

        const double v2 = norm2(v);
        if (v2 > 0.0) {
            const double rot_v = curl_z(field.v, r_ring, th, dr, dth);
            const Vec3 a_num = 0.5 * cross(v, Vec3{0.0, 0.0, rot_v});
            const Vec3 a_exact = (v2 / r_ring) * radial_unit(th);
            d.centripetal_residual =
                std::max(d.centripetal_residual, norm(a_num - a_exact) / (v2 / r_ring));
        }
    }
    return d;
}

RingField rigid_rotation_ring(double omega, double rho) {
    RingField f;
    f.U = [=](double r, double) { return rho * omega * omega * r * r; };
    f.g = [=](double r, double th) { return (rho * omega * r) * tangent_unit(th); };
    f.v = [=](double r, double th) { return (omega * r) * tangent_unit(th); };
    return f;
}

RingField uniform_static_ring(double U0) {
    RingField f;
    f.U = [=](double, double) { return U0; };
    f.g = [](double, double) { return Vec3{}; };
    f.v = [](double, double) { return Vec3{}; };
    return f;
}

}  // namespace semiphoton
