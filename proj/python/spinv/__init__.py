"""Exact symplectic linear algebra over the rationals.

Matrices are nested lists (or tuples) of ``fractions.Fraction``, ``int`` or
rational strings on input, and nested lists of ``Fraction`` on output.
Floating-point routines take and return numpy arrays.
"""

from fractions import Fraction

from . import _spinv
from ._spinv import (  # noqa: F401
    DomainError,
    Error,
    InvariantViolation,
    NotSymplecticError,
    ParseError,
    from_symmetric_unitary,
    sample_symmetric_unitary,
    to_symmetric_unitary,
)


def _wire(m):
    return [[str(Fraction(x)) for x in row] for row in m]


def _unwire(m):
    if m is None:
        return None
    return [[Fraction(x) for x in row] for row in m]


def _vec(v):
    return [str(Fraction(x)) for x in v]


def omega(v, w):
    return Fraction(_spinv.omega(_vec(v), _vec(w)))


def omega_matrix(n):
    return _unwire(_spinv.omega_matrix(n))


def standard_involution(n):
    return _unwire(_spinv.standard_involution(n))


def is_symplectic(m):
    return _spinv.is_symplectic(_wire(m))


def is_anti_symplectic(m):
    return _spinv.is_anti_symplectic(_wire(m))


def is_involution(m):
    return _spinv.is_involution(_wire(m))


def is_in_A(m):
    return _spinv.is_in_A(_wire(m))


def is_in_SpR(m):
    return _spinv.is_in_SpR(_wire(m))


def embed_gl(a):
    return _unwire(_spinv.embed_gl(_wire(a)))


def gl_witness(m):
    return _unwire(_spinv.gl_witness(_wire(m)))


def symplectic_basis_from_splitting(l1, l2):
    v, w = _spinv.symplectic_basis_from_splitting(_wire(l1), _wire(l2))
    return [[Fraction(x) for x in vec] for vec in v], [[Fraction(x) for x in vec] for vec in w]


def sp_r_to_involution(psi):
    return _unwire(_spinv.sp_r_to_involution(_wire(psi)))


def involution_to_sp_r(s):
    return _unwire(_spinv.involution_to_sp_r(_wire(s)))


def conjugation_map(psi):
    return _unwire(_spinv.conjugation_map(_wire(psi)))


def conjugate_to_R(s):
    return _unwire(_spinv.conjugate_to_R(_wire(s)))


def eigenspace_split(s):
    plus, minus = _spinv.eigenspace_split(_wire(s))
    return _unwire(plus), _unwire(minus)


def coset_witness(psi1, psi2):
    return _unwire(_spinv.coset_witness(_wire(psi1), _wire(psi2)))


def reverses(s, phi):
    return _spinv.reverses(_wire(s), _wire(phi))


def factor_sl2(phi):
    t, s = _spinv.factor_sl2(_wire(phi))
    return _unwire(t), _unwire(s)


def factor_block_diagonal(blocks):
    phi, t, s = _spinv.factor_block_diagonal([_wire(b) for b in blocks])
    return _unwire(phi), _unwire(t), _unwire(s)


def normalize_to_SpR(phi, s):
    psi, phi_tilde = _spinv.normalize_to_SpR(_wire(phi), _wire(s))
    return _unwire(psi), _unwire(phi_tilde)


def fix_locus(s):
    return _unwire(_spinv.fix_locus(_wire(s)))


def chart_coordinates(s):
    base, coordinate = _spinv.chart_coordinates(_wire(s))
    return _unwire(base), _unwire(coordinate)


def involution_from_chart(base, coordinate):
    return _unwire(_spinv.involution_from_chart(_wire(base), _wire(coordinate)))


def sample_symplectic(n, seed, word_length=6):
    return _unwire(_spinv.sample_symplectic(n, seed, word_length))


def sample_anti_symplectic_involution(n, seed, word_length=6):
    return _unwire(_spinv.sample_anti_symplectic_involution(n, seed, word_length))


def sample_sp_r(n, seed, word_length=6):
    return _unwire(_spinv.sample_sp_r(n, seed, word_length))


def sample_lagrangian(n, seed, word_length=6):
    return _unwire(_spinv.sample_lagrangian(n, seed, word_length))


def verify(n_max=2, trials=10, seed=0):
    """Run the property battery; returns (all_passed, {name: (passed, failed)})."""
    return _spinv.verify(n_max, trials, seed)
