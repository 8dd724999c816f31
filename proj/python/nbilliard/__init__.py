"""Collision subspace angles, bounds, and billiard simulation."""

from ._core import (
    AngleVector,
    Subspace,
    build_delta,
    check_angle_duality,
    closed_form_angle,
    orthogonal_complement,
    principal_angles,
    principal_angles_oracle,
    simulate,
    subspace,
    subspace_intersection,
    three_mass_bound,
    three_mass_system_bound,
    tiling_face_counts,
    verify_angle_theorem,
    wedge_bound,
)

__all__ = [
    "AngleVector",
    "Subspace",
    "build_delta",
    "check_angle_duality",
    "closed_form_angle",
    "orthogonal_complement",
    "principal_angles",
    "principal_angles_oracle",
    "simulate",
    "subspace",
    "subspace_intersection",
    "three_mass_bound",
    "three_mass_system_bound",
    "tiling_face_counts",
    "verify_angle_theorem",
    "wedge_bound",
]
