"""Pak-Stanley labelings of deformed braid arrangements."""

from ._core import (
    Arrangement,
    catalan,
    braid,
    shi,
    from_json,
    from_m_eps,
    from_sets,
    recognize_m_eps,
    is_transitive,
    holds_x,
    holds_y,
    regions,
    labeling_report,
    parking_functions,
    count_parking_determinant,
    phi,
    psi,
    psi_trace,
    inverse_region,
    verify,
    render_svg,
    to_json,
)

__all__ = [
    "Arrangement",
    "catalan",
    "braid",
    "shi",
    "from_json",
    "from_m_eps",
    "from_sets",
    "recognize_m_eps",
    "is_transitive",
    "holds_x",
    "holds_y",
    "regions",
    "labeling_report",
    "parking_functions",
    "count_parking_determinant",
    "phi",
    "psi",
    "psi_trace",
    "inverse_region",
    "verify",
    "render_svg",
    "to_json",
]
