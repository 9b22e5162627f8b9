#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "gsqg/evolution.hpp"
#include "gsqg/field.hpp"

namespace gsqg {

/// Binary field snapshot: magic "GSQG", version u16, N u32, L f64, time f64,
/// then row-major f64 physical samples. Little-endian throughout.
void write_snapshot(const std::filesystem::path& path, const SpectralField& f,
                    double time = 0.0);
SpectralField read_snapshot(const std::filesystem::path& path, double* time_out = nullptr,
                            double dealias_cutoff = 2.0 / 3.0);

/// Full round-trip precision "%.17g" formatting used in every CSV cell.
std::string format_f64(double v);

/// Trajectory diagnostics CSV: t, l2, h_<sigma>..., gronwall_ratio, flux_residual.
/// The gronwall column reports the tracked sigma closest to beta.
void write_trajectory_csv(const std::filesystem::path& path, const Trajectory& traj,
                          const SimConfig& cfg);

void write_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

}  // namespace gsqg
