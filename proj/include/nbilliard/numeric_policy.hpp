#pragma once

namespace nbilliard {

/// Global tolerances. One knob per kind of comparison so dimension counts
/// (zero angles, ranks, hit detection) are reproducible across modules.
struct NumericPolicy {
    double zero_angle_tol = 1e-8;   ///< angles below this count as zero [rad]
    double gram_tol = 1e-10;        ///< orthonormality defect allowed in a basis
    double rank_rel_tol = 1e-10;    ///< Gram-Schmidt rank cut, relative to largest input norm
    double clamp_guard = 1e-12;     ///< singular values in (1, 1+guard] are treated as 1
    double hit_tol = 1e-9;          ///< ray/wall residual for a collision
    double min_advance = 1e-9;      ///< minimum time between collision events
};

NumericPolicy& policy();

}  // namespace nbilliard
