#pragma once

namespace convexo::tol {

// Numeric contract of the toolkit, shared by every module.
inline constexpr double unit_norm = 1e-12;        // |‖u‖ - 1| bound for unit vectors
inline constexpr double distinct_dir = 1e-9;      // angular (chordal) separation of directions
inline constexpr double measure_close = 1e-9;     // ‖Σ w u‖ <= close * Σ w for Alexandrov measures
inline constexpr double span_eig = 1e-9;          // smallest eigenvalue of Σ u uᵀ for spanning
inline constexpr double lp = 1e-7;                // LP constraint satisfaction after row normalization
inline constexpr double lp_farkas_margin = 1e-9;  // yᵀb of an infeasibility certificate
inline constexpr double cert = 1e-7;              // decomposition certificates on re-substitution
inline constexpr double witness_margin = 1e-9;    // violation margin of constructed witnesses
inline constexpr double reconstruct = 1e-6;       // max relative facet-area mismatch
inline constexpr int reconstruct_max_iter = 10000;
inline constexpr double hull_merge = 1e-9;        // facet/vertex merge threshold (relative)
inline constexpr double cond_limit = 1e12;        // plane intersection condition number guard

}  // namespace convexo::tol
