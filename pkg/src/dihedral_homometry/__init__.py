"""Homometric sets in the cyclic groups Z_n and the dihedral groups D_n."""
from .errors import ContractViolation, DomainError, ParseError, SizeLimitError
from .zn import ZnSet, dft, ifunc, invert, is_homometric_zn, iv, transpose, trivial_relation_zn
from .dihedral import (
    DihedralAutomorphism,
    DihedralElement,
    DihedralSet,
    act_left,
    act_right,
    inv,
    left_int,
    left_iv,
    mul,
    project,
    right_int,
    right_iv,
    set_inversion,
)

__version__ = "0.1.0"
