"""Gelfand-Zetlin schemes for tensor products of fundamental gl_N modules.

A partition ``lam`` determines a nondecreasing sequence ``m`` (see
``jm_decomposition``) which splits into blocks ``(r_s, p_s)``; the ``j``
values inside block ``s`` read backwards give the GZ thresholds
``i_1^(s) < ... < i_{p_s}^(s)``.  Entries of the scheme are recovered as
``lam^(s)_{i,p} = [i_p^(s) <= i]``.

Throughout ``t = N e2`` and ``hp = -(e1 + e2)``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError
from .partitions import Partition, as_partition, jm_decomposition
from .ratfield import RatFun, USeries, expand_linear_quotient, hbar



def hbar_prime():
    return -hbar()


def t_param(N):
    return RatFun.linear(0, N)


@dataclass(frozen=True)
class MSeq:
    """Block form ((r_1, p_1), ..., (r_l, p_l)) of a sequence in M."""

    blocks: tuple
    N: int

    def __post_init__(self):
        if not self.blocks:
            raise DomainError("an m-sequence needs at least one block")
        prev = None
        for r, p in self.blocks:
            if not 1 <= p <= self.N:
                raise DomainError(f"block size {p} outside 1..{self.N}")
            if prev is not None and r <= prev:
                raise DomainError("block values must be strictly increasing")
            prev = r
        if self.n % self.N:
            raise DomainError("block sizes must add up to a multiple of N")

    @property
    def l(self):
        return len(self.blocks)

    @property
    def n(self):
        return sum(p for _, p in self.blocks)

    @property
    def r(self):
        return self.n // self.N

    def p(self, s):
        return self.blocks[s - 1][1]

    def prefix(self, s):
        """p_1 + ... + p_s."""
        return sum(p for _, p in self.blocks[:s])

    def m(self, a):
        """The a-th entry (1-based), following the tail 1^N 2^N ... past n."""
        if a > self.n:
            return -(-a // self.N)
        for r, p in self.blocks:
            if a <= p:
                return r
            a -= p
        raise AssertionError

    def to_json(self):
        return [[r, p] for r, p in self.blocks]


@dataclass(frozen=True)
class GZScheme:
    """Thresholds ``thresholds[s-1][p-1] = i_p^(s)``, strictly increasing in p."""

    mseq: MSeq
    thresholds: tuple

    def __post_init__(self):
        N = self.mseq.N
        if len(self.thresholds) != self.mseq.l:
            raise DomainError("one threshold list per block is required")
        for s, row in enumerate(self.thresholds, 1):
            if len(row) != self.mseq.p(s):
                raise DomainError(f"block {s} needs {self.mseq.p(s)} thresholds")
            for k, v in enumerate(row):
                if not 1 <= v <= N:
                    raise DomainError(f"threshold {v} outside 1..{N}")
                if k and v <= row[k - 1]:
                    raise DomainError("thresholds must increase strictly (interlacing)")

    @property
    def N(self):
        return self.mseq.N

    def entry(self, i, p, s):
        """lam^(s)_{i,p}; zero for i = 0 and for p past the block."""
        if p < 1 or p > i:
            return 0
        row = self.thresholds[s - 1]
        return int(p <= len(row) and row[p - 1] <= i)

    def kappa(self, i, p, s):
        return int(1 <= p <= min(i, self.mseq.p(s)))

    def l_count(self, i, s):
        """l_i^(s): the number of ones in row i of block s."""
        return sum(1 for v in self.thresholds[s - 1] if v <= i)

    def j_sequence(self):
        out = []
        for row in self.thresholds:
            out.extend(reversed(row))
        return out

    def shifted(self, s, p, delta):
        """Scheme with entry (s, i, p) moved by ``delta``; i is implicit in the threshold."""
        rows = [list(r) for r in self.thresholds]
        rows[s - 1][p - 1] -= delta
        return GZScheme(self.mseq, tuple(tuple(r) for r in rows))

    def removable(self, i):
        """R_{Lambda,i}: (s, p) whose (i, p) entry can be raised from 0 to 1."""
        out = []
        for s, row in enumerate(self.thresholds, 1):
            for p, v in enumerate(row, 1):
                if v == i + 1 and p <= i and (p == 1 or row[p - 2] < i):
                    out.append((s, p))
        return out

    def addable(self, i):
        """A_{Lambda,i}: (s, p) whose (i, p) entry can be lowered from 1 to 0."""
        out = []
        for s, row in enumerate(self.thresholds, 1):
            for p, v in enumerate(row, 1):
                if v == i and (p == len(row) or row[p] > i + 1):
                    out.append((s, p))
        return out

    def to_json(self):
        return {"blocks": self.mseq.to_json(), "thresholds": [list(r) for r in self.thresholds]}


def _m_runs(ms):
    runs = []
    for v in ms:
        if runs and runs[-1][0] == v:
            runs[-1][1] += 1
        else:
            runs.append([v, 1])
    return runs


@lru_cache(maxsize=None)
def partition_to_gz(lam, N):
    lam = as_partition(lam)
    if N < 1:
        raise DomainError(f"N must be positive, got {N}")
    L = len(lam) + 2 * N
    js, ms = jm_decomposition(lam, N, L)
    runs = _m_runs(ms)
    total = 0
    for l, (r, p) in enumerate(runs, 1):
        total += p
        if total % N == 0 and all(ms[a - 1] == -(-a // N) for a in range(total + 1, L + 1)):
            break
    else:
        raise AssertionError("no admissible block length")
    mseq = MSeq(tuple((r, p) for r, p in runs[:l]), N)
    rows, a = [], 0
    for _, p in mseq.blocks:
        rows.append(tuple(reversed(js[a:a + p])))
        a += p
    return mseq, GZScheme(mseq, tuple(rows))


def gz_to_partition(mseq: MSeq, scheme: GZScheme, N=None) -> Partition:
    N = mseq.N if N is None else N
    if N != mseq.N or scheme.mseq != mseq:
        raise DomainError("scheme and m-sequence disagree")
    js = scheme.j_sequence()
    parts = [js[a - 1] - N * mseq.m(a) + a - 1 for a in range(1, mseq.n + 1)]
    while parts and parts[-1] == 0:
        parts.pop()
    if any(p < 0 for p in parts):
        raise DomainError("scheme does not describe a partition")
    lam = Partition(parts)
    if partition_to_gz(lam, N)[0] != mseq:
        raise DomainError("scheme does not lie in the given m-sequence class")
    return lam


def cell_of(scheme: GZScheme, lam, s, p, kind):
    """Cell of lam matching (s, p): removable for ``"R"``, addable for ``"A"``."""
    x = scheme.mseq.prefix(s) - p
    y = lam.part(x + 1) - (1 if kind == "R" else 0)
    return (x, y)


def a_const(mseq: MSeq, s):
    """a_s = t r_s + hp (p_1 + ... + p_s - 3/2)."""
    r_s = mseq.blocks[s - 1][0]
    return t_param(mseq.N) * r_s + hbar_prime() * (mseq.prefix(s) - Fraction(3, 2))


def nu(scheme: GZScheme, i, p, s):
    return hbar_prime() * (p - 1 - scheme.entry(i, p, s)) - a_const(scheme.mseq, s)


def gz_constants(mseq: MSeq, s, i, p, N, scheme=None):
    """(a_s, nu^(s)_{i,p}); nu needs a scheme and is ``None`` without one."""
    if mseq.N != N:
        raise DomainError("m-sequence was built for a different N")
    if not 1 <= s <= mseq.l or not 1 <= i <= N or not 1 <= p <= i:
        raise DomainError(f"index (s={s}, i={i}, p={p}) out of range")
    a = a_const(mseq, s)
    return a, (nu(scheme, i, p, s) if scheme is not None else None)


def _kl(scheme, i, p, s, sp, pp, sign, use_kappa):
    hp = hbar_prime()
    shift = a_const(scheme.mseq, s) - a_const(scheme.mseq, sp)
    row = i + 1 if sign > 0 else i - 1
    e = scheme.kappa(row, pp, sp) if use_kappa else scheme.entry(row, pp, sp)
    return hp * (p - pp + e - (0 if sign > 0 else 1)) - shift


def K(scheme, i, p, s, sp, pp, sign):
    return _kl(scheme, i, p, s, sp, pp, sign, True)


def L(scheme, i, p, s, sp, pp, sign):
    return _kl(scheme, i, p, s, sp, pp, sign, False)


def nt_gamma_beta(scheme: GZScheme, i, p, s):
    """(gamma^(s)_{i,p}, beta^(s)_{i,p}) from the K/L products."""
    gamma = RatFun.const(1)
    beta = RatFun.const(1)
    for sp in range(1, scheme.mseq.l + 1):
        for pp in range(1, p + 1):
            kp, lp = K(scheme, i, p, s, sp, pp, 1), L(scheme, i, p, s, sp, pp, 1)
            gamma = gamma * kp
            beta = beta * lp / kp
        for pp in range(p + 1, i + 2):
            gamma = gamma * L(scheme, i, p, s, sp, pp, 1)
        for pp in range(1, p):
            km, lm = K(scheme, i, p, s, sp, pp, -1), L(scheme, i, p, s, sp, pp, -1)
            gamma = gamma * km
            beta = beta * lm / km
        for pp in range(p, i):
            gamma = gamma * L(scheme, i, p, s, sp, pp, -1)
    return gamma, beta


def _vandermonde(scheme, i, p, s):
    """prod over (s', p') != (s, p), p' <= i, of 1/(nu_p^(s) - nu_p'^(s'))."""
    base = nu(scheme, i, p, s)
    den = RatFun.const(1)
    for sp in range(1, scheme.mseq.l + 1):
        for pp in range(1, i + 1):
            if (sp, pp) != (s, p):
                den = den * (base - nu(scheme, i, pp, sp))
    return den.inverse()


def nt_matrix_elements(lam, i, N):
    """cell -> (E~_{lam,mu}, F~_{mu,lam}) over the removable i-cells of lam."""
    lam = as_partition(lam)
    if not 1 <= i <= N - 1:
        raise DomainError(f"index i must satisfy 1 <= i <= {N - 1}, got {i}")
    mseq, scheme = partition_to_gz(lam, N)
    minus_inv_hbar = -hbar().inverse()
    out = {}
    for s, p in scheme.removable(i):
        cell = cell_of(scheme, lam, s, p, "R")
        up = scheme.shifted(s, p, 1)
        gamma, _ = nt_gamma_beta(scheme, i, p, s)
        _, beta = nt_gamma_beta(up, i, p, s)
        E = minus_inv_hbar * (-gamma) * _vandermonde(scheme, i, p, s)
        F = minus_inv_hbar * beta * _vandermonde(up, i, p, s)
        out[cell] = (E, F)
    return out


def pole_location(mseq: MSeq, s, p):
    """-hp (p - 2) + a_s, where A^{-1}B and C A^{-1} have their simple pole."""
    return -hbar_prime() * (p - 2) + a_const(mseq, s)


# -- the closed forms of the factor lemma --------------------------------------

def factor_direct(scheme, i, p, s, sp, kind):
    """The (s')-factor ratio of L-products over nu-differences, evaluated directly."""
    base = nu(scheme, i, p, s)
    top = RatFun.const(1)
    if kind == "R":
        for pp in range(1, i + 2):
            top = top * L(scheme, i, p, s, sp, pp, 1)
    else:
        for pp in range(1, i):
            top = top * L(scheme, i, p, s, sp, pp, -1)
    den = RatFun.const(1)
    for pp in range(1, i + 1):
        if (sp, pp) != (s, p):
            den = den * (base - nu(scheme, i, pp, sp))
    return top / den


def factor_closed(scheme, i, p, s, sp, kind):
    """The same factor by the case analysis on l_{i-1}, l_i, l_{i+1}."""
    hp = hbar_prime()
    if sp == s:
        if kind == "R":
            return hp * hp * (p - i - 1)
        return RatFun.const(Fraction(-1, p - i - 1))
    shift = a_const(scheme.mseq, s) - a_const(scheme.mseq, sp)
    li = scheme.l_count(i, sp)
    form = lambda k: hp * k - shift
    if kind == "R":
        lnext = scheme.l_count(i + 1, sp)
        if lnext == li:
            return form(p - i - 1)
        if li == i:
            return form(p - i)
        return form(p - li) * form(p - i - 1) / form(p - li - 1)
    lprev = scheme.l_count(i - 1, sp)
    if lprev == li:
        return form(p - i - 1).inverse()
    if li == i:
        return form(p - i).inverse()
    return form(p - li - 1) / (form(p - li) * form(p - i - 1))


def lemma_product_closed(lam, i, cell, N):
    """Product over all A_{lam,i} and R_{mu,i} in the cell-difference form."""
    from .partitions import addable_cells, removable_cells
    from .ratfield import form_ratio

    lam = as_partition(lam)
    mu = lam.remove_cell(cell)
    d = lambda c, k: (cell[0] - c[0] + k, cell[1] - c[1] + k)
    A = addable_cells(lam, N, i)
    R = removable_cells(mu, N, i)
    return form_ratio(
        [d(c, 1) for c in A] + [d(c, -1) for c in R],
        [d(c, 0) for c in A] + [d(c, 0) for c in R],
    )


# -- A_i(u) eigenvalues --------------------------------------------------------

def reduce_factor_pairs(pairs):
    """Cancel common roots of prod (u - a)/(u - b); returns (numerator, denominator) Counters."""
    num = Counter(a for a, _ in pairs)
    den = Counter(b for _, b in pairs)
    common = num & den
    return num - common, den - common


def same_rational_function(p, q):
    return reduce_factor_pairs(p) == reduce_factor_pairs(q)


def nt_A_eigenvalue(scheme: GZScheme, i, N=None):
    """Root pairs of the Nazarov-Tarasov A_i(u) eigenvalue on xi_Lambda (twist stripped)."""
    N = scheme.N if N is None else N
    if not 1 <= i <= N:
        raise DomainError(f"index i must satisfy 1 <= i <= {N}, got {i}")
    out = []
    for s in range(1, scheme.mseq.l + 1):
        a_s = a_const(scheme.mseq, s)
        for p in range(1, i + 1):
            out.append((nu(scheme, i, p, s), hbar_prime() * (p - 1) - a_s))
    return out


def uglov_A_eigenvalue_ratio(lam, i, N, shift=None):
    """Root pairs of the Jack(gl_N) A_i(u) eigenvalue (twist stripped); A_0 is trivial.

    ``shift`` evaluates at u - shift.
    """
    lam = as_partition(lam)
    if not 0 <= i <= N:
        raise DomainError(f"index i must satisfy 0 <= i <= {N}, got {i}")
    if i == 0:
        return []
    mseq, scheme = partition_to_gz(lam, N)
    js, ms = jm_decomposition(lam, N, mseq.n)
    t, hp = t_param(N), hbar_prime()
    c = shift if shift is not None else RatFun.const(0)
    out = []
    for a in range(1, mseq.n + 1):
        base = t * ms[a - 1] + hp * (a - Fraction(3, 2))
        num = base + hp * int(js[a - 1] <= i)
        out.append((c - num, c - base))
    return out


def yangian_H_from_A(lam, i, N):
    """Root pairs of A_{i-1}A_{i+1}/(A_i A_i) at the shifts giving H_i(u)."""
    hb = hbar()
    lo = hb * Fraction(i - 1, 2)
    hi = hb * Fraction(i + 1, 2)
    pairs = uglov_A_eigenvalue_ratio(lam, i - 1, N, lo) + uglov_A_eigenvalue_ratio(lam, i + 1, N, hi)
    pairs += [(b, a) for a, b in uglov_A_eigenvalue_ratio(lam, i, N, lo)]
    pairs += [(b, a) for a, b in uglov_A_eigenvalue_ratio(lam, i, N, hi)]
    return pairs


# -- the f(u; r) twist ---------------------------------------------------------

def twist_pairs(r, N, shift=None):
    """Root pairs of f(u - shift; r)."""
    t, hp = t_param(N), hbar_prime()
    c = shift if shift is not None else RatFun.const(0)
    out = []
    for s in range(1, r + 1):
        step = (t + hp * N) * s
        out.append((c + hp - step, c - step))
    return out


def twist_factor(r, order, N=1) -> USeries:
    if r < 0:
        raise DomainError("r must be non-negative")
    return expand_linear_quotient(twist_pairs(r, N), order)


def g_pairs(i, r, N, shift=None):
    """Root pairs of g_i(u - shift) = prod_{k < i} f(u - shift - hp k; r)."""
    c = shift if shift is not None else RatFun.const(0)
    out = []
    for k in range(i):
        out.extend(twist_pairs(r, N, c + hbar_prime() * k))
    return out


def g_cancellation_pairs(i, r, N):
    """Pairs of g_{i-1}(u-hb(i-1)/2) g_{i+1}(u-hb(i+1)/2) / (g_i(..) g_i(..))."""
    hb = hbar()
    lo, hi = hb * Fraction(i - 1, 2), hb * Fraction(i + 1, 2)
    pairs = g_pairs(i - 1, r, N, lo) + g_pairs(i + 1, r, N, hi)
    pairs += [(b, a) for a, b in g_pairs(i, r, N, lo) + g_pairs(i, r, N, hi)]
    return pairs


def a_eigen_signature(lam, N):
    """Hashable joint A_1..A_N eigenvalue data of P_lam, used to test distinctness."""
    out = []
    for i in range(1, N + 1):
        num, den = reduce_factor_pairs(uglov_A_eigenvalue_ratio(lam, i, N))
        out.append((frozenset(num.items()), frozenset(den.items())))
    return tuple(out)
