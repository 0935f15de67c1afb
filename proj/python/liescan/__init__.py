"""Exact screening of SU/SO/Sp groups: dimensions, Betti numbers, stable homotopy.

The heavy lifting lives in the compiled extension ``liescan._core``; this
package re-exports its public surface.
"""

from ._core import (
    CartanClass,
    CartanGroup,
    FGAbelianGroup,
    GroupParseError,
    LiescanError,
    NotSimpleError,
    OutsideStableRangeError,
    UnsupportedFamilyError,
    __version__,
    betti,
    parse_group,
    pell_enumerate,
    pi,
    poincare_polynomial,
    qubit_rotation_matches,
    scan_class_pairs,
    scan_qubit_rotations,
    screen,
    solve_rn_bruteforce,
    special_orthogonal,
    special_unitary,
    stable_range_bound,
    symplectic,
)

__all__ = [
    "CartanClass",
    "CartanGroup",
    "FGAbelianGroup",
    "GroupParseError",
    "LiescanError",
    "NotSimpleError",
    "OutsideStableRangeError",
    "UnsupportedFamilyError",
    "__version__",
    "betti",
    "parse_group",
    "pell_enumerate",
    "pi",
    "poincare_polynomial",
    "qubit_rotation_matches",
    "scan_class_pairs",
    "scan_qubit_rotations",
    "screen",
    "solve_rn_bruteforce",
    "special_orthogonal",
    "special_unitary",
    "stable_range_bound",
    "symplectic",
]
