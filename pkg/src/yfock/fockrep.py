"""The level-one Fock space and the operators acting on it.

Three families act here:

* ``e``, ``f``, ``hcart``: Chevalley generators of affine sl_N on Schur functions;
* ``X+``, ``X-``, ``H``: Drinfeld generators of the Yangian of sl_N on Jack(gl_N)
  functions, 1 <= i <= N-1;
* ``x+``, ``x-``, ``h``: the affine Yangian on the normalised fixed-point basis,
  i in Z/N.

Jack and fixed-point coefficients are identified componentwise, b_lam <-> P_lam.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError
from .partitions import (
    Partition,
    addable_cells,
    as_partition,
    removable_cells,
    split_left_right,
)
from .ratfield import RatFun, expand_linear_quotient, form_ratio, hbar
from .symfun import jack_glN

SCHUR = "schur"
JACK = "jack"
BFIX = "bfix"
BASES = (SCHUR, JACK, BFIX)

AFFINE_E, AFFINE_F, AFFINE_H = "e", "f", "hcart"
YSL_XP, YSL_XM, YSL_H = "X+", "X-", "H"
AY_XP, AY_XM, AY_H = "x+", "x-", "h"
AFFINE = (AFFINE_E, AFFINE_F, AFFINE_H)
YSL = (YSL_XP, YSL_XM, YSL_H)
AY = (AY_XP, AY_XM, AY_H)
FAMILIES = AFFINE + YSL + AY

_ZERO = RatFun.const(0)


def _sort_key(lam):
    return (lam.size, tuple(lam))


class FockVec:
    """Finite linear combination of basis vectors indexed by partitions."""

    __slots__ = ("basis", "terms")

    def __init__(self, basis, terms=None):
        if basis not in BASES:
            raise DomainError(f"unknown Fock space basis {basis!r}")
        self.basis = basis
        clean = {}
        for lam, c in (terms or {}).items():
            c = c if isinstance(c, RatFun) else RatFun.const(c)
            if c:
                clean[as_partition(lam)] = c
        self.terms = clean

    @classmethod
    def basis_vector(cls, basis, lam):
        return cls(basis, {as_partition(lam): 1})

    @classmethod
    def _raw(cls, basis, terms):
        v = cls.__new__(cls)
        v.basis = basis
        v.terms = terms
        return v

    def coeff(self, lam):
        return self.terms.get(as_partition(lam), _ZERO)

    def items(self):
        """Terms ordered by degree, then lexicographically, largest first."""
        return sorted(self.terms.items(), key=lambda kv: _sort_key(kv[0]), reverse=True)

    def is_zero(self):
        return not self.terms

    def _check(self, other):
        if self.basis != other.basis:
            raise DomainError(f"basis mismatch: {self.basis} vs {other.basis}")

    def __add__(self, other):
        self._check(other)
        t = dict(self.terms)
        for lam, c in other.terms.items():
            v = t.get(lam, _ZERO) + c
            if v:
                t[lam] = v
            else:
                t.pop(lam, None)
        return FockVec._raw(self.basis, t)

    def __neg__(self):
        return FockVec._raw(self.basis, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if not c:
            return FockVec._raw(self.basis, {})
        return FockVec._raw(self.basis, {k: v * c for k, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, FockVec):
            return NotImplemented
        return self.basis == other.basis and self.terms == other.terms

    def to_json(self):
        return {
            "basis": self.basis,
            "terms": [{"partition": str(lam), "coeff": str(c)} for lam, c in self.items()],
        }

    def __repr__(self):
        body = " + ".join(f"({c})*{self.basis}[{lam}]" for lam, c in self.items()) or "0"
        return f"FockVec({body})"


@dataclass(frozen=True)
class OperatorId:
    family: str
    i: int
    r: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise DomainError(f"unknown operator family {self.family!r}")
        if self.r < 0:
            raise DomainError("mode r must be non-negative")
        if self.family in AFFINE and self.r:
            raise DomainError("Chevalley generators have no mode index")

    def __str__(self):
        if self.family in AFFINE:
            return f"{self.family}_{self.i}"
        return f"{self.family}_{{{self.i},{self.r}}}"


def _check_index(family, i, N):
    if N < 1:
        raise DomainError(f"N must be positive, got {N}")
    if family in YSL:
        if not 1 <= i <= N - 1:
            raise DomainError(f"Yangian sl_N index must satisfy 1 <= i <= {N - 1}, got {i}")
    elif not 0 <= i < N:
        raise DomainError(f"index i must lie in 0..{N - 1}, got {i}")


def _delta(cell, other, k):
    return (cell[0] - other[0] + k, cell[1] - other[1] + k)


@lru_cache(maxsize=None)
def lowering_products(lam, i, N):
    """(mu, cell, product) for each removable i-cell: the right-split quotient."""
    out = []
    for cell in removable_cells(lam, N, i):
        mu = lam.remove_cell(cell)
        _, Ar = split_left_right(addable_cells(lam, N, i), cell)
        _, Rr = split_left_right(removable_cells(mu, N, i), cell)
        prod = form_ratio(
            [_delta(cell, c, 1) for c in Ar] + [_delta(cell, c, -1) for c in Rr],
            [_delta(cell, c, 0) for c in Ar + Rr],
        )
        out.append((mu, cell, prod))
    return tuple(out)


@lru_cache(maxsize=None)
def raising_products(mu, i, N):
    """(lam, cell, product) for each addable i-cell: the left-split quotient."""
    out = []
    for cell in addable_cells(mu, N, i):
        lam = mu.add_cell(cell)
        Al, _ = split_left_right(addable_cells(lam, N, i), cell)
        Rl, _ = split_left_right(removable_cells(mu, N, i), cell)
        prod = form_ratio(
            [_delta(cell, c, 1) for c in Al] + [_delta(cell, c, -1) for c in Rl],
            [_delta(cell, c, 0) for c in Al + Rl],
        )
        out.append((lam, cell, prod))
    return tuple(out)


@lru_cache(maxsize=None)
def cell_weight(family, i, cell):
    """e1 x + e2 y, shifted by i(e1 - e2)/2 for the sl_N Yangian."""
    x, y = cell
    if family in YSL:
        return RatFun.linear(2 * x + i, 2 * y - i) * Fraction(1, 2)
    return RatFun.linear(x, y)


@lru_cache(maxsize=None)
def _weight_power(family, i, cell, r):
    return cell_weight(family, i, cell) ** r


@lru_cache(maxsize=None)
def matrix_column(family, i, r, lam, N):
    """Image of a single basis vector as a tuple of (partition, coefficient)."""
    if family in (YSL_XP, AY_XP):
        return tuple(
            (mu, prod * _weight_power(family, i, cell, r))
            for mu, cell, prod in lowering_products(lam, i, N)
        )
    if family in (YSL_XM, AY_XM):
        return tuple(
            (nu, prod * _weight_power(family, i, cell, r))
            for nu, cell, prod in raising_products(lam, i, N)
        )
    if family in (YSL_H, AY_H):
        return ((lam, h_r_eigenvalue(family, i, r, lam, N)),)
    one = RatFun.const(1)
    if family == AFFINE_E:
        return tuple((lam.remove_cell(c), one) for c in removable_cells(lam, N, i))
    if family == AFFINE_F:
        return tuple((lam.add_cell(c), one) for c in addable_cells(lam, N, i))
    k = len(addable_cells(lam, N, i)) - len(removable_cells(lam, N, i))
    return ((lam, RatFun.const(k)),)


def apply_operator(op: OperatorId, v: FockVec, N) -> FockVec:
    out = {}
    for lam, c in v.terms.items():
        for mu, m in matrix_column(op.family, op.i, op.r, lam, N):
            if not m:
                continue
            val = out.get(mu, _ZERO) + c * m
            if val:
                out[mu] = val
            else:
                out.pop(mu, None)
    return FockVec._raw(v.basis, out)


def act_affine(op: OperatorId, v: FockVec, N) -> FockVec:
    if op.family not in AFFINE:
        raise DomainError(f"{op.family} is not a Chevalley generator")
    if v.basis != SCHUR:
        raise DomainError("Chevalley generators act on the Schur basis")
    _check_index(op.family, op.i, N)
    return apply_operator(op, v, N)


def act_yangian_sl(op: OperatorId, v: FockVec, N) -> FockVec:
    if op.family not in YSL:
        raise DomainError(f"{op.family} is not a Yangian sl_N generator")
    if v.basis != JACK:
        raise DomainError("Yangian sl_N generators act on the Jack basis")
    _check_index(op.family, op.i, N)
    return apply_operator(op, v, N)


def act_affine_yangian(op: OperatorId, v: FockVec, N) -> FockVec:
    if op.family not in AY:
        raise DomainError(f"{op.family} is not an affine Yangian generator")
    if v.basis not in (BFIX, JACK):
        raise DomainError("affine Yangian generators act on the fixed-point basis")
    _check_index(op.family, op.i, N)
    return apply_operator(op, v, N)


def act(op: OperatorId, v: FockVec, N) -> FockVec:
    """Apply ``op`` in its native basis, converting ``v`` there and back."""
    native = SCHUR if op.family in AFFINE else (JACK if op.family in YSL else BFIX)
    w = change_basis(v, native, N)
    if op.family in AFFINE:
        w = act_affine(op, w, N)
    elif op.family in YSL:
        w = act_yangian_sl(op, w, N)
    else:
        w = act_affine_yangian(op, w, N)
    return change_basis(w, v.basis, N)


@lru_cache(maxsize=None)
def h_eigen_factors(family, i, lam, N):
    """Shift pairs (a, b) with h_i(u) (or H_i(u)) acting on lam by prod (u - a)/(u - b)."""
    lam = as_partition(lam)
    if family not in (AY_H, YSL_H):
        raise DomainError(f"{family} has no spectral series")
    _check_index(family, i, N)
    shift = RatFun.linear(i, -i) * Fraction(1, 2) if family == YSL_H else None
    out = []
    cells = [(c, -1) for c in addable_cells(lam, N, i)] + [(c, 1) for c in removable_cells(lam, N, i)]
    cells.sort(key=lambda t: t[0][0])
    for (x, y), k in cells:
        a = RatFun.linear(x + k, y + k)
        b = RatFun.linear(x, y)
        if shift is not None:
            a, b = a + shift, b + shift
        out.append((a, b))
    return tuple(out)


@lru_cache(maxsize=None)
def h_r_eigenvalue(family, i, r, lam, N) -> RatFun:
    """Eigenvalue of h_{i,r} (or H_{i,r}): the u^{-r-1} coefficient divided by hbar."""
    series = expand_linear_quotient(h_eigen_factors(family, i, lam, N), r + 1)
    return series.coeff(r + 1) / hbar()


def h_series(family, i, lam, N, order):
    return expand_linear_quotient(h_eigen_factors(family, i, as_partition(lam), N), order)


def change_basis(v: FockVec, target, N) -> FockVec:
    if target not in BASES:
        raise DomainError(f"unknown Fock space basis {target!r}")
    if v.basis == target:
        return v
    if {v.basis, target} == {JACK, BFIX}:
        return FockVec._raw(target, dict(v.terms))
    if target == SCHUR:
        out = {}
        for lam, c in v.terms.items():
            for mu, d in jack_glN(lam, N).terms.items():
                val = out.get(mu, _ZERO) + c * d
                if val:
                    out[mu] = val
                else:
                    out.pop(mu, None)
        return FockVec._raw(SCHUR, out)
    # Schur -> Jack: unitriangular solve, largest partition first
    rest = dict(v.terms)
    out = {}
    while rest:
        lam = max(rest, key=_sort_key)
        c = rest[lam]
        out[lam] = c
        for mu, d in jack_glN(lam, N).terms.items():
            val = rest.get(mu, _ZERO) - c * d
            if val:
                rest[mu] = val
            else:
                rest.pop(mu, None)
    return FockVec._raw(target, out)
