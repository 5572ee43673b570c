#pragma once

// Numeric defaults shared by the library and the CLI.

namespace slgal::defaults {

inline constexpr double kimura_tol = 1e-8;
inline constexpr double eigenvector_angle_tol = 1e-6;
inline constexpr double path_clearance = 0.05;
inline constexpr double boundary_tol = 1e-12;
inline constexpr double heteroclinic_rtol = 1e-12;
inline constexpr double continuation_rtol = 1e-11;
inline constexpr double shooting_rtol = 1e-11;
inline constexpr double back_substitution_tol = 1e-9;
inline constexpr double termination_tol = 1e-8;
inline constexpr double residual_step = 1e-3;
inline constexpr double verify_tol = 1e-5;
inline constexpr double min_shooting_length = 40.0;
inline constexpr int scan_grid = 2000;
inline constexpr int oracle_steps = 500;
inline constexpr int region_resolution = 200;
inline constexpr int sweep_points = 51;
inline constexpr int loop_waypoints = 32;

}  // namespace slgal::defaults
