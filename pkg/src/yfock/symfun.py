"""Schur and power-sum bases, the level-one Fock space form and Jack(gl_N) functions."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import lcm

from .errors import DomainError
from .partitions import (
    Partition,
    addable_cells,
    arm_leg_hook,
    as_partition,
    partitions_of,
    removable_cells,
    split_left_right,
    z_factor,
)
from .ratfield import IntPoly, RatFun, form_ratio

SCHUR = "schur"
POWER = "power"


class SymFun:
    """Homogeneous symmetric function stored in one basis."""

    __slots__ = ("basis", "degree", "terms")

    def __init__(self, basis, terms=None, degree=None):
        if basis not in (SCHUR, POWER):
            raise DomainError(f"unknown symmetric function basis {basis!r}")
        self.basis = basis
        clean = {}
        for lam, c in (terms or {}).items():
            lam = as_partition(lam)
            c = c if isinstance(c, RatFun) else RatFun.const(c)
            if c:
                clean[lam] = c
        sizes = {lam.size for lam in clean}
        if len(sizes) > 1:
            raise DomainError("symmetric function terms must share one degree")
        if degree is None:
            degree = sizes.pop() if sizes else 0
        elif sizes and sizes != {degree}:
            raise DomainError("declared degree does not match the terms")
        self.degree = degree
        self.terms = clean

    def coeff(self, lam):
        return self.terms.get(as_partition(lam), RatFun.const(0))

    def items(self):
        """Terms in lexicographically decreasing partition order."""
        return sorted(self.terms.items(), key=lambda kv: tuple(kv[0]), reverse=True)

    def __eq__(self, other):
        if not isinstance(other, SymFun):
            return NotImplemented
        if self.basis != other.basis:
            return convert(self, SCHUR).terms == convert(other, SCHUR).terms
        return self.terms == other.terms and (self.degree == other.degree or not self.terms)

    def __add__(self, other):
        other = convert(other, self.basis)
        t = dict(self.terms)
        for lam, c in other.terms.items():
            t[lam] = t.get(lam, RatFun.const(0)) + c
        return SymFun(self.basis, t, self.degree if self.terms else other.degree)

    def __neg__(self):
        return SymFun(self.basis, {k: -v for k, v in self.terms.items()}, self.degree)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return SymFun(self.basis, {k: v * c for k, v in self.terms.items()}, self.degree)

    def to_json(self):
        return {
            "basis": self.basis,
            "degree": self.degree,
            "terms": [{"partition": str(lam), "coeff": str(c)} for lam, c in self.items()],
        }

    def __repr__(self):
        body = " + ".join(f"({c})*{self.basis[0]}[{lam}]" for lam, c in self.items()) or "0"
        return f"SymFun({body})"


def schur(lam):
    lam = as_partition(lam)
    return SymFun(SCHUR, {lam: 1}, lam.size)


def power(lam):
    lam = as_partition(lam)
    return SymFun(POWER, {lam: 1}, lam.size)


@lru_cache(maxsize=None)
def character(lam, rho):
    """chi^lam at cycle type rho by Murnaghan-Nakayama on beta-sets."""
    if not rho:
        return 1 if not lam else 0
    r, rest = rho[0], rho[1:]
    L = len(lam)
    beta = [lam[k] + L - 1 - k for k in range(L)]
    occupied = set(beta)
    total = 0
    for b in beta:
        nb = b - r
        if nb < 0 or nb in occupied:
            continue
        height = sum(1 for c in beta if nb < c < b)
        moved = sorted((c for c in beta if c != b), reverse=True)
        moved.append(nb)
        moved.sort(reverse=True)
        parts = [moved[k] - (L - 1 - k) for k in range(L)]
        total += (-1) ** height * character(Partition(p for p in parts if p > 0), rest)
    return total


def schur_to_power(lam) -> SymFun:
    lam = as_partition(lam)
    n = lam.size
    return SymFun(
        POWER,
        {rho: Fraction(character(lam, rho), z_factor(rho)) for rho in partitions_of(n)},
        n,
    )


def power_to_schur(rho) -> SymFun:
    rho = as_partition(rho)
    n = rho.size
    return SymFun(SCHUR, {lam: character(lam, rho) for lam in partitions_of(n)}, n)


def convert(f: SymFun, basis) -> SymFun:
    if f.basis == basis:
        return f
    step = schur_to_power if basis == POWER else power_to_schur
    out = {}
    for lam, c in f.terms.items():
        for mu, d in step(lam).terms.items():
            out[mu] = out.get(mu, RatFun.const(0)) + c * d
    return SymFun(basis, out, f.degree)


def l_N(rho, N):
    return sum(1 for p in rho if p % N == 0)


def _q_power_ratfun(coeffs):
    """sum_k c_k q^k with q = -e2/e1, built as one fraction."""
    if not coeffs:
        return RatFun.const(0)
    top = max(coeffs)
    den = lcm(*(Fraction(c).denominator for c in coeffs.values()))
    t = {}
    for k, c in coeffs.items():
        v = Fraction(c) * den * (-1) ** k
        t[(top - k, k)] = int(v)
    return RatFun(IntPoly(t, 2), IntPoly({(top, 0): den}, 2))


def power_norm(rho, N):
    """<p_rho, p_rho> = z_rho (-e2/e1)^{l_N(rho)}."""
    return _q_power_ratfun({l_N(rho, N): z_factor(rho)})


def uglov_form(f: SymFun, g: SymFun, N) -> RatFun:
    if f.degree != g.degree:
        return RatFun.const(0)
    f, g = convert(f, POWER), convert(g, POWER)
    total = RatFun.const(0)
    for rho, c in f.terms.items():
        d = g.terms.get(rho)
        if d is not None:
            total = total + c * d * power_norm(rho, N)
    return total


@lru_cache(maxsize=None)
def schur_gram(n, N):
    """<s_lam, s_mu> for all partitions of n, keyed by (lam, mu)."""
    parts = partitions_of(n)
    gram = {}
    for a, lam in enumerate(parts):
        for mu in parts[a:]:
            coeffs = {}
            for rho in parts:
                x = character(lam, rho) * character(mu, rho)
                if x:
                    k = l_N(rho, N)
                    coeffs[k] = coeffs.get(k, 0) + Fraction(x, z_factor(rho))
            value = _q_power_ratfun({k: c for k, c in coeffs.items() if c})
            gram[lam, mu] = gram[mu, lam] = value
    return gram


@lru_cache(maxsize=None)
def _jack_component(n, N):
    """Gram-Schmidt on the Schur basis of degree n, smallest partition first."""
    if N < 1:
        raise DomainError(f"N must be positive, got {N}")
    gram = schur_gram(n, N)
    done = []
    jacks, norms = {}, {}
    for lam in reversed(partitions_of(n)):
        vec = {lam: RatFun.const(1)}
        for mu in done:
            ip = RatFun.const(0)
            for nu, c in jacks[mu].items():
                ip = ip + c * gram[lam, nu]
            if not ip:
                continue
            k = ip / norms[mu]
            for nu, c in jacks[mu].items():
                v = vec.get(nu, RatFun.const(0)) - k * c
                if v:
                    vec[nu] = v
                else:
                    vec.pop(nu, None)
        norm = RatFun.const(0)
        for nu, c in vec.items():
            norm = norm + c * gram[lam, nu]
        if not norm:
            raise ArithmeticError(f"vanishing Gram-Schmidt norm at {lam}")
        jacks[lam] = vec
        norms[lam] = norm
        done.append(lam)
    return jacks, norms


def jack_glN(lam, N) -> SymFun:
    lam = as_partition(lam)
    jacks, _ = _jack_component(lam.size, N)
    return SymFun(SCHUR, jacks[lam], lam.size)


def jack_norm_gram_schmidt(lam, N) -> RatFun:
    lam = as_partition(lam)
    return _jack_component(lam.size, N)[1][lam]


def _hook_forms(lam, N):
    """Per cell with hook divisible by N: (l e1 - (a+1) e2, (l+1) e1 - a e2)."""
    out = []
    for cell in lam.cells():
        a, l, h = arm_leg_hook(lam, cell)
        if h % N == 0:
            out.append(((l, -(a + 1)), (l + 1, -a)))
    return out


@lru_cache(maxsize=None)
def jack_norm_formula(lam, N) -> RatFun:
    lam = as_partition(lam)
    forms = _hook_forms(lam, N)
    return form_ratio([f for f, _ in forms], [g for _, g in forms])


def _delta(cell, other, k):
    (x, y), (xp, yp) = cell, other
    return (x - xp + k, y - yp + k)


def lemma_ratio(lam, i, cell, N, which):
    """Hook-product ratios for removing an i-cell, checked against the cell-product form.

    ``which`` is ``"i"``, ``"ii"`` or ``"iii"``; raises ``ArithmeticError`` if
    the two sides disagree.
    """
    lam = as_partition(lam)
    cell = tuple(cell)
    if cell not in removable_cells(lam, N, i):
        raise DomainError(f"{cell} is not a removable {i}-cell of {lam} for N={N}")
    mu = lam.remove_cell(cell)
    Al, Ar = split_left_right(addable_cells(lam, N, i), cell)
    Rl, Rr = split_left_right(removable_cells(mu, N, i), cell)
    sign = -1 if (len(Ar) - len(Rr)) % 2 else 1
    fl, fm = _hook_forms(lam, N), _hook_forms(mu, N)
    if which == "i":
        lhs = form_ratio([f for f, _ in fl], [f for f, _ in fm])
        rhs = form_ratio(
            [_delta(cell, c, 0) for c in Al] + [_delta(cell, c, 1) for c in Ar],
            [_delta(cell, c, -1) for c in Rl] + [_delta(cell, c, 0) for c in Rr],
            sign,
        )
    elif which == "ii":
        lhs = form_ratio([g for _, g in fm], [g for _, g in fl])
        rhs = form_ratio(
            [_delta(cell, c, 0) for c in Rl] + [_delta(cell, c, -1) for c in Rr],
            [_delta(cell, c, 1) for c in Al] + [_delta(cell, c, 0) for c in Ar],
            sign,
        )
    elif which == "iii":
        lhs = jack_norm_formula(lam, N) / jack_norm_formula(mu, N)
        rhs = form_ratio(
            [_delta(cell, c, 0) for c in Al]
            + [_delta(cell, c, 1) for c in Ar]
            + [_delta(cell, c, 0) for c in Rl]
            + [_delta(cell, c, -1) for c in Rr],
            [_delta(cell, c, 1) for c in Al]
            + [_delta(cell, c, 0) for c in Ar]
            + [_delta(cell, c, -1) for c in Rl]
            + [_delta(cell, c, 0) for c in Rr],
        )
    else:
        raise DomainError(f"unknown lemma part {which!r}")
    if lhs != rhs:
        raise ArithmeticError(f"ratio ({which}) mismatch at {lam}, {cell}: {lhs} != {rhs}")
    return lhs
