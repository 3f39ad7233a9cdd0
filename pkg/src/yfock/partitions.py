"""Partitions, Young diagram combinatorics and residue statistics.

Cells are 0-based ``(x, y)`` with ``x`` the row and ``y`` the column, so
``(x, y)`` belongs to ``lam`` iff ``y < lam[x]``.  The residue of a cell is
``(y - x) mod N``.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import DomainError


class Partition(tuple):
    """Weakly decreasing tuple of positive integers; trailing zeros are dropped."""

    def __new__(cls, parts=()):
        parts = tuple(parts)
        while parts and parts[-1] == 0 and isinstance(parts[-1], int):
            parts = parts[:-1]
        for k, p in enumerate(parts):
            if not isinstance(p, int) or p <= 0:
                raise DomainError(f"partition parts must be positive integers, got {parts}")
            if k and p > parts[k - 1]:
                raise DomainError(f"partition parts must be weakly decreasing, got {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip()
        if not text:
            return cls()
        try:
            parts = [int(t) for t in text.split(",")]
        except ValueError as exc:
            raise DomainError(f"malformed partition {text!r}") from exc
        return cls(parts)

    def __str__(self):
        return ",".join(map(str, self))

    def __repr__(self):
        return f"Partition({list(self)})"

    @property
    def size(self):
        return sum(self)

    def part(self, a):
        """1-based part lambda_a, zero past the length."""
        return self[a - 1] if a <= len(self) else 0

    def __contains__(self, cell):
        x, y = cell
        return 0 <= x < len(self) and 0 <= y < self[x]

    def cells(self):
        return [(x, y) for x, row in enumerate(self) for y in range(row)]

    def conjugate(self) -> "Partition":
        return _conjugate(self)

    def add_cell(self, cell) -> "Partition":
        x, y = cell
        parts = list(self)
        if x == len(parts):
            parts.append(0)
        if parts[x] != y:
            raise DomainError(f"cell {cell} is not addable to {self}")
        parts[x] += 1
        return Partition(parts)

    def remove_cell(self, cell) -> "Partition":
        x, y = cell
        if x >= len(self) or self[x] != y + 1:
            raise DomainError(f"cell {cell} is not removable from {self}")
        parts = list(self)
        parts[x] -= 1
        if not parts[x]:
            parts.pop()
        return Partition(parts)


@lru_cache(maxsize=None)
def _conjugate(lam):
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p > j) for j in range(lam[0]))


def as_partition(obj) -> Partition:
    if isinstance(obj, Partition):
        return obj
    if isinstance(obj, str):
        return Partition.parse(obj)
    return Partition(obj)


def partitions_of(n: int):
    """All partitions of ``n`` in lexicographically decreasing order."""
    return list(_partitions_of(n))


@lru_cache(maxsize=None)
def _partitions_of(n):
    out = []

    def rec(rest, bound, acc):
        if rest == 0:
            out.append(Partition(acc))
            return
        for p in range(min(rest, bound), 0, -1):
            acc.append(p)
            rec(rest - p, p, acc)
            acc.pop()

    rec(n, n, [])
    return tuple(out)


def partitions_up_to(n: int):
    return [lam for k in range(n + 1) for lam in partitions_of(k)]


def arm_leg_hook(lam, cell):
    x, y = cell
    if cell not in lam:
        raise DomainError(f"cell {cell} is not in {lam}")
    conj = lam.conjugate()
    a = lam[x] - (y + 1)
    l = conj[y] - (x + 1)
    return a, l, a + l + 1


def residue(cell, N):
    x, y = cell
    return (y - x) % N


def _check_N(N):
    if not isinstance(N, int) or N < 1:
        raise DomainError(f"N must be a positive integer, got {N}")


@lru_cache(maxsize=None)
def removable_cells(lam, N, i=None):
    """Removable cells of residue ``i`` (all residues if ``None``), by row."""
    _check_N(N)
    out = []
    for x, row in enumerate(lam):
        if x + 1 == len(lam) or lam[x + 1] < row:
            cell = (x, row - 1)
            if i is None or residue(cell, N) == i % N:
                out.append(cell)
    return tuple(out)


@lru_cache(maxsize=None)
def addable_cells(lam, N, i=None):
    """Addable cells of residue ``i`` (all residues if ``None``), by row."""
    _check_N(N)
    out = []
    for x in range(len(lam) + 1):
        y = lam.part(x + 1)
        if x == 0 or lam[x - 1] > y:
            cell = (x, y)
            if i is None or residue(cell, N) == i % N:
                out.append(cell)
    return tuple(out)


def split_left_right(cells, cell):
    """Cells strictly left (smaller row index) and right of ``cell``."""
    x = cell[0]
    return [c for c in cells if c[0] < x], [c for c in cells if c[0] > x]


@lru_cache(maxsize=None)
def residue_counts(lam, N):
    """``v_i(lam)``: number of cells of each residue, indexed 0..N-1."""
    v = [0] * N
    for x, row in enumerate(lam):
        for y in range(row):
            v[(y - x) % N] += 1
    return tuple(v)


def jm_decomposition(lam, N, L=None):
    """Write lam_a - a + 1 = j_a - N m_a with 1 <= j_a <= N for a = 1..L."""
    _check_N(N)
    if L is None:
        L = len(lam) + N
    js, ms = [], []
    for a in range(1, L + 1):
        c = lam.part(a) - a + 1
        j = (c - 1) % N + 1
        js.append(j)
        ms.append((j - c) // N)
    return js, ms


def sign_length(lam, N):
    """Smallest odd d with len(lam) < N d."""
    d = 1
    while len(lam) >= N * d:
        d += 2
    return d


@lru_cache(maxsize=None)
def epsilon_sign(lam, N, d=None):
    """Parity of #{a < b <= N d : j_a >= j_b}."""
    if d is None:
        d = sign_length(lam, N)
    elif d % 2 == 0 or len(lam) >= N * d:
        raise DomainError(f"d={d} is not an admissible odd bound for {lam}")
    js, _ = jm_decomposition(lam, N, N * d)
    count = 0
    for a in range(len(js)):
        ja = js[a]
        for b in range(a + 1, len(js)):
            if ja >= js[b]:
                count += 1
    return count % 2


def dominance_le(lam, mu):
    """True when lam <= mu in dominance order (same size)."""
    if lam.size != mu.size:
        return False
    sa = sb = 0
    for k in range(max(len(lam), len(mu))):
        sa += lam.part(k + 1)
        sb += mu.part(k + 1)
        if sa > sb:
            return False
    return True


def lex_key(lam):
    return tuple(lam)


def setR_setA_via_jm(lam, i, N):
    """Index sets of removable and addable i-cells read off from (j, m).

    Returns ``(R, A)`` as sorted lists of 1-based indices ``a``; index ``a`` in
    ``R`` is the cell ``(a-1, lam_a - 1)``, in ``A`` the cell ``(a-1, lam_a)``.
    """
    _check_N(N)
    i %= N
    L = len(lam) + 2
    js, ms = jm_decomposition(lam, N, L)
    j = lambda a: js[a - 1]
    m = lambda a: ms[a - 1]
    jr = i + 1
    ja_target = i if i else N
    R = []
    for a in range(1, len(lam) + 1):
        if j(a) != jr:
            continue
        if m(a) < m(a + 1):
            # the one way a drop in m hides an equal row: j goes 1 -> N
            if m(a + 1) == m(a) + 1 and j(a) == 1 and j(a + 1) == N:
                continue
            R.append(a)
        elif m(a) == m(a + 1) and j(a + 1) < i:
            R.append(a)
    A = []
    for a in range(1, len(lam) + 2):
        if j(a) != ja_target:
            continue
        if a == 1:
            A.append(a)
        elif m(a - 1) < m(a):
            if m(a) == m(a - 1) + 1 and j(a - 1) == 1 and j(a) == N:
                continue
            A.append(a)
        elif m(a - 1) == m(a) and j(a - 1) > ja_target + 1:
            A.append(a)
    return R, A


def z_factor(lam):
    """Centraliser order z_lam = prod_k k^{m_k} m_k!."""
    from math import factorial

    out = 1
    counts = {}
    for p in lam:
        counts[p] = counts.get(p, 0) + 1
    for k, mk in counts.items():
        out *= k ** mk * factorial(mk)
    return out
