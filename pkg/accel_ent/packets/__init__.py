"""Accelerating Gaussian packets and two-body Schmidt numbers."""

from accel_ent.packets.two_body import (
    SIGMA_SPAN,
    SchmidtResult,
    Sign,
    TwoBodyParams,
    norm_squared,
    overlap,
    purity,
    schmidt_coefficients,
    schmidt_number_closed,
    schmidt_result,
    two_body_amplitude,
    two_body_grid,
)
from accel_ent.packets.wave_packet import (
    PacketParams,
    accelerated_packet_amplitude,
    free_packet_amplitude,
    packet_center,
    packet_width,
    schrodinger_residual,
)

__all__ = [
    "SIGMA_SPAN",
    "PacketParams",
    "SchmidtResult",
    "Sign",
    "TwoBodyParams",
    "accelerated_packet_amplitude",
    "free_packet_amplitude",
    "norm_squared",
    "overlap",
    "packet_center",
    "packet_width",
    "purity",
    "schmidt_coefficients",
    "schmidt_number_closed",
    "schmidt_result",
    "schrodinger_residual",
    "two_body_amplitude",
    "two_body_grid",
]
