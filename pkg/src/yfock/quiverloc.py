"""Torus fixed-point data of cyclic quiver varieties with basic framing.

Fixed points are partitions.  Characters of T = (C^*)^2 are kept as integer
Laurent polynomials ``Counter{(a, b): coeff}`` standing for sum coeff t1^a t2^b.
The vector ``[lam]`` is the fixed-point class; ``b'_lam`` and ``b_lam`` are its
two rescalings.
"""

from __future__ import annotations

from collections import Counter, deque
from functools import lru_cache

from .errors import DomainError
from .fockrep import (
    AY_XM,
    AY_XP,
    BFIX,
    FockVec,
    OperatorId,
    _check_index,
    matrix_column,
)
from .partitions import (
    addable_cells,
    arm_leg_hook,
    as_partition,
    epsilon_sign,
    partitions_of,
    partitions_up_to,
    removable_cells,
    residue_counts,
    sign_length,
    split_left_right,
)
from .ratfield import RatFun, form_ratio

FIXED = "fixed"


# -- characters ----------------------------------------------------------------

def char_add(*chars):
    out = Counter()
    for c in chars:
        for k, v in c.items():
            out[k] += v
    return Counter({k: v for k, v in out.items() if v})


def char_scale(c, k):
    return Counter({m: v * k for m, v in c.items() if v * k})


def char_mul(f, g):
    out = Counter()
    for (a, b), u in f.items():
        for (c, d), v in g.items():
            out[a + c, b + d] += u * v
    return Counter({k: v for k, v in out.items() if v})


def char_dual(f):
    return Counter({(-a, -b): v for (a, b), v in f.items()})


def char_component(f, i, N):
    """Terms t1^a t2^b with b - a = i mod N."""
    return Counter({(a, b): v for (a, b), v in f.items() if (b - a - i) % N == 0})


def monomial(a, b, k=1):
    return Counter({(a, b): k})


ONE = monomial(0, 0)
T1T2 = monomial(1, 1)
KOSZUL = char_add(monomial(1, 0), monomial(0, 1), monomial(1, 1, -1), monomial(0, 0, -1))


def v_char(lam):
    """V_lam = sum over cells of t1^x t2^y."""
    return Counter({cell: 1 for cell in as_partition(lam).cells()})


def euler_class(char) -> RatFun:
    """prod (a e1 + b e2)^coeff; a zero weight with positive multiplicity gives 0."""
    nums, dens = [], []
    for (a, b), k in char.items():
        (nums if k > 0 else dens).extend([(a, b)] * abs(k))
    return form_ratio(nums, dens)


# -- tangent spaces and the bilinear form ---------------------------------------

def v_dim(lam, N):
    return residue_counts(as_partition(lam), N)


def _divisible_hooks(lam, N):
    for cell in lam.cells():
        a, l, h = arm_leg_hook(lam, cell)
        if h % N == 0:
            yield a, l


@lru_cache(maxsize=None)
def tangent_weights(lam, N):
    """Sorted tuple of weights (a, b) of T_lam, one pair per cell with N | hook."""
    lam = as_partition(lam)
    out = []
    for a, l in _divisible_hooks(lam, N):
        out.append((l + 1, -a))
        out.append((-l, a + 1))
    return tuple(sorted(out))


def tangent_char_from_vv(lam, N):
    """T_lam = ((t1 + t2 - t1 t2 - 1) V^* V + t1 t2 W^* V + V^* W)_0."""
    v = v_char(lam)
    vd = char_dual(v)
    total = char_add(char_mul(KOSZUL, char_mul(vd, v)), char_mul(T1T2, v), vd)
    return char_component(total, 0, N)


def h_form(lam, mu, N) -> RatFun:
    lam, mu = as_partition(lam), as_partition(mu)
    if lam != mu:
        return RatFun.const(0)
    forms = []
    for a, l in _divisible_hooks(lam, N):
        forms.append((l + 1, -a))
        forms.append((l, -(a + 1)))
    return form_ratio(forms, [])


def bprime_normalization(lam, N) -> RatFun:
    """b'_lam = (prod 1/(e1 (l+1) - e2 a)) [lam]."""
    lam = as_partition(lam)
    return form_ratio([], [(l + 1, -a) for a, l in _divisible_hooks(lam, N)])


def b_normalization(lam, N) -> RatFun:
    """b_lam = (-1)^{eps_lam} b'_lam in units of [lam]."""
    lam = as_partition(lam)
    c = bprime_normalization(lam, N)
    return -c if epsilon_sign(lam, N) else c


def corrected_sign(lam, N):
    """eps_lam + (N-1) v_0 + ((d-1)/2) N(N+1)/2 mod 2.

    The extra terms undo the dependence of eps on d and the j: 1 -> N jump at
    0-cells; with them every x+/x- coefficient on b'-rescaled classes is sign-free.
    """
    lam = as_partition(lam)
    d = sign_length(lam, N)
    return (epsilon_sign(lam, N) + (N - 1) * residue_counts(lam, N)[0] + (d - 1) // 2 * (N * (N + 1) // 2)) % 2


def corrected_b_normalization(lam, N) -> RatFun:
    c = bprime_normalization(lam, N)
    return -c if corrected_sign(lam, N) else c


# -- the action on fixed-point classes ------------------------------------------

def _delta(cell, other, k):
    return (cell[0] - other[0] + k, cell[1] - other[1] + k)


def _weight(cell, r):
    return RatFun.linear(*cell) ** r


@lru_cache(maxsize=None)
def fixed_point_column(family, i, r, lam, N):
    """Image of [lam] under x+_{i,r} or x-_{i,r}, as (partition, coefficient) pairs."""
    v = residue_counts(lam, N)
    vi, vi1 = v[i], v[(i + 1) % N]
    out = []
    if family == AY_XP:
        A = addable_cells(lam, N, i)
        for cell in removable_cells(lam, N, i):
            mu = lam.remove_cell(cell)
            R = removable_cells(mu, N, i)
            sign = (-1) ** ((vi - vi1 + len(A) - len(R)) % 2)
            c = form_ratio([_delta(cell, c, 1) for c in A], [_delta(cell, c, 0) for c in R], sign)
            out.append((mu, c * _weight(cell, r)))
    elif family == AY_XM:
        R = removable_cells(lam, N, i)
        for cell in addable_cells(lam, N, i):
            nu = lam.add_cell(cell)
            A = addable_cells(nu, N, i)
            sign = (-1) ** ((vi - vi1 + 1 + len(A) - len(R)) % 2)
            c = form_ratio([_delta(cell, c, -1) for c in R], [_delta(cell, c, 0) for c in A], sign)
            out.append((nu, c * _weight(cell, r)))
    else:
        raise DomainError(f"fixed-point action implemented for x+ and x- only, got {family}")
    return tuple(out)


def fixed_point_action(op: OperatorId, v: FockVec, N) -> FockVec:
    if v.basis != FIXED:
        raise DomainError("fixed-point action needs vectors in the fixed-point class basis")
    _check_index(op.family, op.i, N)
    out = {}
    for lam, c in v.terms.items():
        for mu, m in fixed_point_column(op.family, op.i, op.r, lam, N):
            val = out.get(mu, RatFun.const(0)) + c * m
            if val:
                out[mu] = val
            else:
                out.pop(mu, None)
    return FockVec._raw(FIXED, out)


def fixed_vector(terms):
    """FockVec in the fixed-point class basis (the tag is local to this module)."""
    v = FockVec.__new__(FockVec)
    v.basis = FIXED
    v.terms = {as_partition(k): (c if isinstance(c, RatFun) else RatFun.const(c)) for k, c in terms.items() if c}
    return v


def bfix_to_fixed(v: FockVec, N, norm=b_normalization) -> FockVec:
    if v.basis != BFIX:
        raise DomainError("expected a fixed-point basis vector")
    return fixed_vector({lam: c * norm(lam, N) for lam, c in v.terms.items()})


def fixed_to_bfix(v: FockVec, N, norm=b_normalization) -> FockVec:
    if v.basis != FIXED:
        raise DomainError("expected a fixed-point class vector")
    return FockVec._raw(BFIX, {lam: c / norm(lam, N) for lam, c in v.terms.items()})


def bprime_signed_coefficient(family, i, r, lam, cell, N):
    """The b'-basis coefficient with its explicit sign (-1)^{v_i - v_{i+1} + #A^l - #R^l (+1)}."""
    v = residue_counts(lam, N)
    vi, vi1 = v[i], v[(i + 1) % N]
    if family == AY_XP:
        mu = lam.remove_cell(cell)
        Al, Ar = split_left_right(addable_cells(lam, N, i), cell)
        Rl, Rr = split_left_right(removable_cells(mu, N, i), cell)
        sign = (-1) ** ((vi - vi1 + len(Al) - len(Rl)) % 2)
        c = form_ratio(
            [_delta(cell, c, 1) for c in Ar] + [_delta(cell, c, -1) for c in Rr],
            [_delta(cell, c, 0) for c in Ar + Rr],
            sign,
        )
        return mu, c * _weight(cell, r)
    nu = lam.add_cell(cell)
    Al, _ = split_left_right(addable_cells(nu, N, i), cell)
    Rl, _ = split_left_right(removable_cells(lam, N, i), cell)
    sign = (-1) ** ((vi - vi1 + 1 + len(Al) - len(Rl)) % 2)
    c = form_ratio(
        [_delta(cell, c, 1) for c in Al] + [_delta(cell, c, -1) for c in Rl],
        [_delta(cell, c, 0) for c in Al + Rl],
        sign,
    )
    return nu, c * _weight(cell, r)


def three_pipelines(family, i, r, lam, N, norm=b_normalization):
    """Per target partition: (raw conjugated by b', b' display, raw conjugated by ``norm``, b-basis formula)."""
    lam = as_partition(lam)
    out = {}
    nb_p, nb = bprime_normalization(lam, N), norm(lam, N)
    cells = removable_cells(lam, N, i) if family == AY_XP else addable_cells(lam, N, i)
    display = dict(bprime_signed_coefficient(family, i, r, lam, c, N) for c in cells)
    theorem = dict(matrix_column(family, i, r, lam, N))
    for mu, c in fixed_point_column(family, i, r, lam, N):
        out[mu] = (
            c * nb_p / bprime_normalization(mu, N),
            display[mu],
            c * nb / norm(mu, N),
            theorem[mu],
        )
    return out


def lemma_sign_holds(lam, cell, N):
    """eps_lam - eps_mu = v_i - v_{i+1} + #A^l_{lam,i} - #R^l_{mu,i} mod 2 for mu = lam minus cell."""
    lam = as_partition(lam)
    i = (cell[1] - cell[0]) % N
    mu = lam.remove_cell(cell)
    v = residue_counts(lam, N)
    Al, _ = split_left_right(addable_cells(lam, N, i), cell)
    Rl, _ = split_left_right(removable_cells(mu, N, i), cell)
    lhs = epsilon_sign(lam, N) - epsilon_sign(mu, N)
    rhs = v[i] - v[(i + 1) % N] + len(Al) - len(Rl)
    return (lhs - rhs) % 2 == 0


def edge_sign(lam, cell, N):
    """Parity s with (x+ b'_lam)_mu = (-1)^s (sign-free coefficient)."""
    lam = as_partition(lam)
    i = (cell[1] - cell[0]) % N
    mu = lam.remove_cell(cell)
    v = residue_counts(lam, N)
    Al, _ = split_left_right(addable_cells(lam, N, i), cell)
    Rl, _ = split_left_right(removable_cells(mu, N, i), cell)
    return (v[i] - v[(i + 1) % N] + len(Al) - len(Rl)) % 2


def consistent_gauge(N, D):
    """A parity sigma_lam (|lam| <= D, sigma_empty = 0) absorbing every edge sign, or None.

    Returns None when the edge signs around some square do not multiply to +1,
    i.e. when no rescaling by signs can make all coefficients sign-free.
    """
    sigma = {as_partition(()): 0}
    queue = deque(sigma)
    while queue:
        mu = queue.popleft()
        if mu.size >= D:
            continue
        for cell in addable_cells(mu, N):
            lam = mu.add_cell(cell)
            want = (sigma[mu] + edge_sign(lam, cell, N)) % 2
            if lam in sigma:
                if sigma[lam] != want:
                    return None
            else:
                sigma[lam] = want
                queue.append(lam)
    return sigma


# -- Varagnolo-Vasserot character identities -------------------------------------

def vv_weight_identities(lam, i, N):
    """Both VV identities for the i-component, as exact Laurent polynomials."""
    lam = as_partition(lam)
    v = v_char(lam)
    A = addable_cells(lam, N, i)
    R = removable_cells(lam, N, i)
    lhs1 = char_component(char_add(char_mul(KOSZUL, v), ONE), i, N)
    rhs1 = char_add(*(monomial(x, y) for x, y in A), *(monomial(x + 1, y + 1, -1) for x, y in R))
    lhs2 = char_component(char_add(char_mul(KOSZUL, char_dual(v)), T1T2), -i, N)
    rhs2 = char_add(*(monomial(1 - x, 1 - y) for x, y in A), *(monomial(-x, -y, -1) for x, y in R))
    return lhs1 == rhs1 and lhs2 == rhs2


def normal_char(mu, lam, N):
    """N_{mu lam} = ((t1+t2-t1t2-1) V_mu^* V_lam + t1t2 W^* V_lam + V_mu^* W - t1t2)_0."""
    vl, vmd = v_char(lam), char_dual(v_char(mu))
    total = char_add(char_mul(KOSZUL, char_mul(vmd, vl)), char_mul(T1T2, vl), vmd, monomial(1, 1, -1))
    return char_component(total, 0, N)


def normal_minus_tangent(lam, cell, N):
    """(N - T_mu, N - T_lam, displayed A/R sum for N - T_mu, displayed sum for N - T_lam)."""
    lam = as_partition(lam)
    i = (cell[1] - cell[0]) % N
    mu = lam.remove_cell(cell)
    x, y = cell
    nc = normal_char(mu, lam, N)
    d_mu = char_add(nc, char_scale(tangent_char_from_vv(mu, N), -1))
    d_lam = char_add(nc, char_scale(tangent_char_from_vv(lam, N), -1))
    A = addable_cells(lam, N, i)
    R = removable_cells(mu, N, i)
    want_mu = char_add(
        *(monomial(x - a + 1, y - b + 1) for a, b in A), *(monomial(x - a, y - b, -1) for a, b in R)
    )
    want_lam = char_add(
        *(monomial(a - x, b - y, -1) for a, b in A), *(monomial(a - x + 1, b - y + 1) for a, b in R)
    )
    return d_mu, d_lam, want_mu, want_lam


def isometry_defect(lam, N):
    """b_lam^2 <[lam],[lam]>_H - <P_lam, P_lam>_F; zero when the isometry holds."""
    from .symfun import jack_norm_formula

    lam = as_partition(lam)
    return b_normalization(lam, N) ** 2 * h_form(lam, lam, N) - jack_norm_formula(lam, N)


__all__ = [
    "FIXED",
    "b_normalization",
    "bfix_to_fixed",
    "bprime_normalization",
    "bprime_signed_coefficient",
    "consistent_gauge",
    "corrected_b_normalization",
    "corrected_sign",
    "edge_sign",
    "euler_class",
    "fixed_point_action",
    "fixed_point_column",
    "fixed_to_bfix",
    "fixed_vector",
    "h_form",
    "isometry_defect",
    "lemma_sign_holds",
    "normal_char",
    "normal_minus_tangent",
    "tangent_char_from_vv",
    "tangent_weights",
    "three_pipelines",
    "v_dim",
    "vv_weight_identities",
]
