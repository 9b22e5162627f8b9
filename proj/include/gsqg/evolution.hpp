#pragma once

#include <array>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "gsqg/field.hpp"
#include "gsqg/operators.hpp"

namespace gsqg {

struct SimConfig {
    double beta = 1.5;
    double mu = 0.6;
    std::size_t n = 256;
    double length = 2.0 * std::numbers::pi;
    double dealias_cutoff = 2.0 / 3.0;
    double t_final = 1.0;
    double cfl = 0.5;
    double nu = 0.0;
    double dt_cap = 0.0;  // 0 = no cap; otherwise dt <= dt_cap (fixed-step runs)
    std::size_t diagnostics_stride = 1;
    std::size_t snapshot_stride = 0;  // 0 = endpoints only
    std::vector<double> norm_exponents;  // tracked sigma values; default {1, beta, beta+1}
    double blowup_factor = 10.0;
    double eps_certificate = 0.1;  // epsilon in the L2 pairing bound report

    std::vector<double> sigmas() const;
    void validate() const;  // throws std::invalid_argument naming the violated range
    GridPtr grid() const;
};

/// Piecewise-linear-in-time coefficient path; evaluation clamps to [t0, t1].
struct CoefficientPath {
    std::vector<double> times;
    std::vector<SpectralField> snaps;

    bool empty() const noexcept { return times.empty(); }
    SpectralField eval(double t) const;
};

/// Linear conservation-law problem data. An empty q_path means the live
/// feedback coefficient q = -theta, which turns the conservation law into
/// the gSQG equation itself.
struct ClawProblem {
    SpectralField theta0;
    std::optional<CoefficientPath> q_path;
    std::optional<CoefficientPath> g_path;
    double nu = 0.0;
};

struct DiagRow {
    double t = 0.0;
    double l2 = 0.0;
    std::vector<double> h_sigma;
    std::vector<double> gronwall_ratio;  // aligned with tracked sigmas
    double flux_residual = 0.0;
};

struct Trajectory {
    std::vector<DiagRow> rows;
    std::vector<double> snap_times;
    std::vector<SpectralField> snapshots;
    SpectralField final_field;
    double t_reached = 0.0;
    std::size_t steps = 0;
    bool aborted = false;
    std::string abort_reason;
    std::vector<double> sup_gronwall;  // per tracked sigma, over every step
    double doubling_time = std::numeric_limits<double>::quiet_NaN();
    std::complex<double> zero_mode_initial{0.0, 0.0};
    std::complex<double> zero_mode_final{0.0, 0.0};

    Trajectory() : final_field(nullptr) {}
    explicit Trajectory(GridPtr g) : final_field(std::move(g)) {}
};

/// F_q(theta) = (perp_grad A q) theta + A((perp_grad theta) q), A = Lambda^{beta-2} p(Lambda).
std::array<SpectralField, 2> flux(const SpectralField& q, const SpectralField& theta,
                                  double beta, double mu);
SpectralField div_flux(const SpectralField& q, const SpectralField& theta, double beta,
                       double mu);

/// -Div F_{-theta}(theta) + nu * Laplacian(theta).
SpectralField gsqg_rhs(const SpectralField& theta, const SimConfig& cfg);

/// cfl * dx / max(|u|_inf, floor); with nu > 0 also dx^2 / (4 nu).
double cfl_dt(const SpectralField& theta, const SimConfig& cfg);

/// One classical 4-stage explicit step of the gSQG equation. Throws on CFL violation.
SpectralField step_rk4(const SpectralField& theta, double dt, const SimConfig& cfg);

using Observer = std::function<void(std::size_t step, double t, const SpectralField&)>;

Trajectory run_claw(const ClawProblem& prob, const SimConfig& cfg,
                    const Observer& observer = {});
Trajectory run_gsqg(const SpectralField& theta0, const SimConfig& cfg,
                    const Observer& observer = {});

/// ||Div F_q(theta)||_{H^beta} / (||q||_{H^beta} ||theta||_{H^{beta+1}}).
double flux_bound_check(const SpectralField& q, const SpectralField& theta, double beta,
                        double mu);

/// ||div_flux(-theta, theta) - u . grad theta|| / ||u . grad theta||.
double flux_identity_residual(const SpectralField& theta, double beta, double mu);

/// Mollify a coefficient path in time with the normalized bump of width 1/n_level.
CoefficientPath mollify_path(const CoefficientPath& path, int n_level);

struct StabilityRow {
    int n_level = 0;
    double sup_theta_err_hbeta = 0.0;  // sup_t ||theta^n - theta^inf||_{H^beta}
    double q_err_l1_hbeta = 0.0;       // ||q^n - q^inf||_{L1_t H^beta}
};

std::vector<StabilityRow> stability_experiment(const CoefficientPath& q_ref,
                                               const SpectralField& theta0,
                                               const std::optional<CoefficientPath>& g_path,
                                               const SimConfig& cfg,
                                               const std::vector<int>& n_levels);

struct ContinuityRow {
    double perturbation_hbetap1 = 0.0;   // ||theta0^n - theta0||_{H^{beta+1}}
    double sup_dtheta_hbeta = 0.0;       // sup_t ||theta^n - theta||_{H^beta}
    double sup_dtheta_hbetap1 = 0.0;     // sup_t ||theta^n - theta||_{H^{beta+1}}
    double sup_domega_hbeta = 0.0;       // sup_t ||omega^n - omega||_{H^beta}
    double sup_zeta_hbeta = 0.0;         // sup_t ||zeta^n||_{H^beta}
    double max_reconstruction_residual = 0.0;  // relative, d_l theta^n vs omega + zeta
};

std::vector<ContinuityRow> continuity_experiment(const SpectralField& theta0,
                                                 const std::vector<SpectralField>& perturbations,
                                                 const SimConfig& cfg);

struct ViscosityRow {
    double nu = 0.0;
    double sup_dev_hbeta = 0.0;  // sup_t ||theta^nu - theta^{nu_min}||_{H^beta}
};

std::vector<ViscosityRow> viscosity_continuation(const SpectralField& theta0,
                                                 const SimConfig& cfg,
                                                 std::vector<double> nu_levels);

}  // namespace gsqg
