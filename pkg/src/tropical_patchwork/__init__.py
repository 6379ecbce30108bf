"""Combinatorial patchworking of real tropical hypersurfaces.

From a homogeneous min-plus polynomial with full simplex support and a sign
distribution, this package computes the regular subdivision, the face poset
of the compactified tropical hypersurface, the real phase structure, and the
Z2-Betti numbers of the real part. Random censuses and plane-curve plots are
available through the `patchwork` command line tool.
"""

from .core import (Exponent, ParseError, PatchworkError, SignDistribution,
                   TropicalPolynomial, lattice_point_count, lattice_points,
                   parse_instance, serialize_instance)
from .generators import (GeneratorError, bound_b0, bound_b1, bound_chi,
                         canonical_unimodular, random_full_triangulation,
                         random_signs)
from .homology import BettiVector, analyze, betti_numbers, component_count
from .hypersurface import compact_cells
from .kernels import BACKEND as kernel_backend
from .phase import phase_structure
from .subdivision import RegularSubdivision, SubdivisionError, regular_subdivision

__version__ = "0.1.0"

__all__ = [
    "Exponent", "ParseError", "PatchworkError", "SignDistribution",
    "TropicalPolynomial", "lattice_point_count", "lattice_points",
    "parse_instance", "serialize_instance",
    "GeneratorError", "bound_b0", "bound_b1", "bound_chi",
    "canonical_unimodular", "random_full_triangulation", "random_signs",
    "BettiVector", "analyze", "betti_numbers", "component_count",
    "compact_cells", "phase_structure",
    "RegularSubdivision", "SubdivisionError", "regular_subdivision",
    "kernel_backend",
]
