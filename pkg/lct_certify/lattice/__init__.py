"""Lattice-point counting, Pick certificates and sigma bounds."""

from __future__ import annotations

from lct_certify.lattice.count import boundary_points, count_simplex, lattice_points
from lct_certify.lattice.models import Point, SigmaBound, SigmaResult, SimplexSpec
from lct_certify.lattice.pick import (
    LatticePolygon,
    PickCertificate,
    corner_polygon,
    parse_vertices,
    pick_certificate,
)
from lct_certify.lattice.search import (
    mask_realizable,
    sigma_exact_2d,
    sigma_upper_search,
    verify_witness,
    witness_from_record,
    witness_to_record,
)
from lct_certify.lattice.sigma import pick_witness, sigma_lower_bound

__all__ = [
    "LatticePolygon",
    "PickCertificate",
    "Point",
    "SigmaBound",
    "SigmaResult",
    "SimplexSpec",
    "boundary_points",
    "corner_polygon",
    "count_simplex",
    "lattice_points",
    "mask_realizable",
    "parse_vertices",
    "pick_certificate",
    "pick_witness",
    "sigma_exact_2d",
    "sigma_lower_bound",
    "sigma_upper_search",
    "verify_witness",
    "witness_from_record",
    "witness_to_record",
]
