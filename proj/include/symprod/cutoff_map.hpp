#pragma once

#include "symprod/radial_profile.hpp"

namespace symprod {

/// Parameters of the cut-off Hamiltonian flow for one factor.
///
/// The cut-off rho(s), s = |z|^2, is a C-infinity step: rho = 0 for
/// s <= delta / (2 pi) and rho = 1 for s >= delta / pi.
struct CutoffMapConfig {
    double delta = 0.0;  // area units
    int steps = 1000;    // RK4 steps on t in [0, 1]
    /// Accepted step-doubling discrepancy, relative to |z|, at the validation probes.
    double tolerance = 1e-6;
    bool validate = true;
};

/// Time-one map of the Hamiltonian rho(|z|^2) H_t(z), where H_t generates the
/// one-homogeneous isotopy psi_t: D(a) -> W_t whose sector-area functions
/// interpolate linearly, S_t = (1 - t) S_disk + t S.
///
/// In polar coordinates (r, phi) the generator of psi_t is
///   dphi/dt = omega = -2 D(phi) / R_t^2,   D = S(phi) - a phi / (2 pi),
///   dr/dt   = r g,   g = (R^2 - a/pi) / (2 R_t^2) + (R_t' / R_t) omega,
///   R_t^2   = (1 - t) a / pi + t R^2,
/// with Hamiltonian H_t = |z|^2 omega / 2 (vector fields X_H = i grad H).
///
/// The map is the identity for pi|z|^2 <= delta / 2 (the flow vanishes there) and equals
/// disk_to_domain for pi|z|^2 >= kappa delta, kappa = max(1, a / (pi R_min^2)): trajectories
/// from that region never enter the cut-off zone. Only the annulus in between is integrated.
class CutoffDiskMap {
public:
    CutoffDiskMap(const RadialProfile& profile, CutoffMapConfig config);

    Point2 operator()(const Point2& z) const;
    Point2 inverse(const Point2& w) const;

    /// Plain RK4 integration of the cut-off flow over t in [0, 1] (or back from 1 to 0).
    Point2 integrate(const Point2& z, int steps, bool backward = false) const;

    Point2 velocity(double t, const Point2& z) const;
    double hamiltonian(double t, const Point2& z) const;
    double cutoff(double s) const;
    double cutoff_derivative(double s) const;

    /// pi |z|^2 at or below this value: map is the identity.
    double frozen_area() const { return 0.5 * config_.delta; }
    /// pi |z|^2 at or above this value: map equals disk_to_domain.
    double exact_area() const { return kappa_ * config_.delta; }
    double kappa() const { return kappa_; }
    const CutoffMapConfig& config() const { return config_; }
    const RadialProfile& profile() const { return *profile_; }

    /// Worst step-doubling discrepancy measured at construction (0 when not validated).
    double validation_error() const { return validation_error_; }

private:
    const RadialProfile* profile_;
    CutoffMapConfig config_;
    double kappa_ = 1.0;
    double validation_error_ = 0.0;
};

/// Largest delta of the form delta_0 / 2^k for which the cut-off map sends D(kappa delta)
/// into eps_prime W, checked on a polar grid of the annulus where the cut-off acts.
/// delta_0 = eps_prime^2 a / kappa^2 is where the uncut isotopy alone would fit.
double scan_cutoff_delta(const RadialProfile& profile, double eps_prime, int steps);

}  // namespace symprod
