"""Exhaustive checks of defining relations on graded truncations of the Fock space.

Every relation is turned into a noncommutative polynomial in the generators
(an :class:`Expr`) and applied to each basis vector of degree at most D.  The
operators are locally finite, so nothing is lost by truncating the inputs.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement, permutations
from math import comb

from .errors import DomainError
from .fockrep import (
    AFFINE_E,
    AFFINE_F,
    AFFINE_H,
    AY_H,
    AY_XM,
    AY_XP,
    YSL_H,
    YSL_XM,
    YSL_XP,
    OperatorId,
    matrix_column,
)
from .partitions import as_partition, partitions_of, partitions_up_to
from .ratfield import IntPoly, RatFun, hbar
from .symfun import jack_glN, schur_gram

_ZERO = RatFun.const(0)
_ONE = RatFun.const(1)

SUITES = ("affine-yangian", "yangian-sl", "affine-lie", "adjoint", "appendix", "all")

AY_RELATIONS = tuple(f"eq:{k}" for k in range(1, 19))
N2_RELATIONS = ("eq:1", "eq:2", "eq:3", "eq:5", "eq:11", "eq:16", "eq:17", "eq:18")
SL_RELATIONS = ("sl:hh", "sl:xx", "sl:hx0", "sl:hx", "sl:xxpm", "sl:serre", "guay")
LIE_RELATIONS = ("lie:hh", "lie:ef", "lie:he", "serre")
OTHER_RELATIONS = ("adjoint", "appendix-a", "appendix-b")
RELATIONS = AY_RELATIONS + SL_RELATIONS + LIE_RELATIONS + OTHER_RELATIONS


# ---------------------------------------------------------------------------
# noncommutative expressions


class Expr:
    """Linear combination of words in the generators.

    A word is a tuple of :class:`OperatorId` read like a product, so the last
    letter acts first.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {w: c for w, c in (terms or {}).items() if c}

    @classmethod
    def gen(cls, family, i, r=0):
        return cls({(OperatorId(family, i, r),): _ONE})

    @classmethod
    def zero(cls):
        return cls()

    def _combine(self, other, sign):
        t = dict(self.terms)
        for w, c in other.terms.items():
            t[w] = t.get(w, _ZERO) + c * sign
        return Expr(t)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return Expr({w: -c for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Expr):
            t = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    w = w1 + w2
                    t[w] = t.get(w, _ZERO) + c1 * c2
            return Expr(t)
        c = other if isinstance(other, RatFun) else RatFun.const(other)
        return Expr({w: v * c for w, v in self.terms.items()})

    __rmul__ = __mul__

    def __repr__(self):
        body = " + ".join(f"({c})*{'.'.join(map(str, w))}" for w, c in self.terms.items())
        return f"Expr({body or '0'})"


def comm(a, b):
    return a * b - b * a


def anticomm(a, b):
    return a * b + b * a


@lru_cache(maxsize=None)
def _apply_word(word, lam, N):
    """Image of the basis vector ``lam`` under ``word`` as a dict."""
    if not word:
        return {lam: _ONE}
    op = word[-1]
    out = {}
    for mu, c in matrix_column(op.family, op.i, op.r, lam, N):
        if not c:
            continue
        for nu, d in _apply_word(word[:-1], mu, N).items():
            out[nu] = out.get(nu, _ZERO) + c * d
    return {k: v for k, v in out.items() if v}


def evaluate(expr: Expr, lam, N):
    """expr applied to the basis vector indexed by ``lam``, zero coefficients dropped."""
    lam = as_partition(lam)
    out = {}
    for w, c in expr.terms.items():
        for nu, d in _apply_word(w, lam, N).items():
            out[nu] = out.get(nu, _ZERO) + c * d
    return {k: v for k, v in out.items() if v}


# ---------------------------------------------------------------------------
# instances and reports


@dataclass(frozen=True)
class RelationInstance:
    rel: str
    N: int
    D: int
    i: int | None = None
    j: int | None = None
    r: int | None = None
    s: int | None = None
    sign: int = 1
    modes: tuple = ()
    mutate: int = 0

    def to_json(self):
        d = {k: v for k, v in asdict(self).items() if v not in (None, ())}
        if not self.mutate:
            d.pop("mutate", None)
        if "modes" in d:
            d["modes"] = list(d["modes"])
        return d


@dataclass
class CheckReport:
    instance: RelationInstance
    passed: bool
    witness: dict | None = field(default=None)

    def to_json(self):
        d = {"instance": self.instance.to_json(), "passed": self.passed}
        if self.witness is not None:
            d["witness"] = self.witness
        return d


def _fail(inst, **witness):
    return CheckReport(inst, False, {k: str(v) for k, v in witness.items()})


def _cartan(i, j, N):
    if N == 2:
        return 2 if i == j else -2
    if i == j:
        return 2
    if (i - j) % N in (1, N - 1):
        return -1
    return 0


def cartan_entry(i, j, N):
    """Entry of the affine type A Cartan matrix on Z/N (the sl_N entries for 1..N-1)."""
    return _cartan(i % N, j % N, N)


def _sl_cartan(i, j):
    if i == j:
        return 2
    return -1 if abs(i - j) == 1 else 0


# ---------------------------------------------------------------------------
# relation builders


def _ay(sign):
    return AY_XP if sign > 0 else AY_XM


def _serre(xfam, i, j, modes, s):
    total = Expr.zero()
    for w in permutations(modes):
        inner = Expr.gen(xfam, j, s)
        for r in reversed(w):
            inner = comm(Expr.gen(xfam, i, r), inner)
        total = total + inner
    return total


def _third_difference(a_fam, b_fam, i, j, r, s, sign, N):
    """The N = 2 relation shared by h and x: it is linear in the first operator."""
    hb = hbar()
    A = lambda k: Expr.gen(a_fam, i, k)  # noqa: E731
    B = lambda k: Expr.gen(b_fam, j, k)  # noqa: E731
    e = comm(A(r + 2), B(s)) - comm(A(r + 1), B(s + 1)) * 2 + comm(A(r), B(s + 2))
    e = e + anticomm(A(r + 1), B(s)) * (hb * sign) - anticomm(A(r), B(s + 1)) * (hb * sign)
    return e + comm(A(r), B(s)) * (RatFun.var(0) * RatFun.var(1))


def _neighbour_rhs(a, b, c1, c2, mutate):
    """c1 * a b + c2 * b a, with an optional sign flip on one of the two terms."""
    if mutate == 1:
        c1 = -c1
    elif mutate == 2:
        c2 = -c2
    return a * b * c1 + b * a * c2


def build_expression(inst: RelationInstance) -> Expr:
    """The relation as ``lhs - rhs``, which must act as zero."""
    N, i, j, r, s, sg = inst.N, inst.i, inst.j, inst.r, inst.s, inst.sign
    rel = inst.rel
    e1, e2, hb = RatFun.var(0), RatFun.var(1), hbar()
    if rel == "eq:1":
        return comm(Expr.gen(AY_H, i, r), Expr.gen(AY_H, j, s))
    if rel == "eq:2":
        e = comm(Expr.gen(AY_XP, i, r), Expr.gen(AY_XM, j, s))
        return e - Expr.gen(AY_H, i, r + s) if i == j else e
    if rel == "eq:3":
        x = Expr.gen(_ay(sg), j, s)
        return comm(Expr.gen(AY_H, i, 0), x) - x * (sg * _cartan(i, j, N))
    if rel in ("eq:4", "eq:5", "eq:6", "eq:7", "eq:8", "eq:9",
               "eq:10", "eq:11", "eq:12", "eq:13", "eq:14", "eq:15"):
        k = int(rel[3:])
        first = AY_H if k <= 9 else _ay(sg)
        X = lambda a, m: Expr.gen(_ay(sg), a, m)  # noqa: E731
        A = lambda m: Expr.gen(first, i, m)  # noqa: E731
        lhs = comm(A(r + 1), X(j, s)) - comm(A(r), X(j, s + 1))
        if k in (4, 10):
            return lhs
        if k in (5, 11):
            rhs = anticomm(A(r), X(j, s)) * (hb * sg)
            if inst.mutate:
                rhs = -rhs
            return lhs - rhs
        # neighbour relations: j = i - 1 or i + 1, sign fixed by the equation number
        down = k in (6, 8, 12, 14)
        c1, c2 = (e1, e2) if down else (e2, e1)
        if sg > 0:
            c1, c2 = -c1, -c2
        else:
            c1, c2 = c2, c1
        return lhs - _neighbour_rhs(A(r), X(j, s), c1, c2, inst.mutate)
    if rel == "eq:16":
        return _serre(_ay(sg), i, j, inst.modes, s)
    if rel == "eq:17":
        return _third_difference(AY_H, _ay(sg), i, j, r, s, sg, N)
    if rel == "eq:18":
        return _third_difference(_ay(sg), _ay(sg), i, j, r, s, sg, N)

    XP, XM = YSL_XP, YSL_XM
    Xs = XP if sg > 0 else XM
    if rel == "sl:hh":
        return comm(Expr.gen(YSL_H, i, r), Expr.gen(YSL_H, j, s))
    if rel == "sl:xx":
        e = comm(Expr.gen(XP, i, r), Expr.gen(XM, j, s))
        return e - Expr.gen(YSL_H, i, r + s) if i == j else e
    if rel == "sl:hx0":
        x = Expr.gen(Xs, j, s)
        return comm(Expr.gen(YSL_H, i, 0), x) - x * (sg * _sl_cartan(i, j))
    if rel in ("sl:hx", "sl:xxpm"):
        first = YSL_H if rel == "sl:hx" else Xs
        A = lambda m: Expr.gen(first, i, m)  # noqa: E731
        X = lambda m: Expr.gen(Xs, j, m)  # noqa: E731
        lhs = comm(A(r + 1), X(s)) - comm(A(r), X(s + 1))
        coeff = hb * Fraction(sg * _sl_cartan(i, j), 2)
        if inst.mutate:
            coeff = -coeff
        return lhs - anticomm(A(r), X(s)) * coeff
    if rel == "sl:serre":
        return _serre(Xs, i, j, inst.modes, s)

    E, F, H = AFFINE_E, AFFINE_F, AFFINE_H
    if rel == "lie:hh":
        return comm(Expr.gen(H, i), Expr.gen(H, j))
    if rel == "lie:ef":
        e = comm(Expr.gen(E, i), Expr.gen(F, j))
        return e - Expr.gen(H, i) if i == j else e
    if rel == "lie:he":
        x = Expr.gen(E if sg > 0 else F, j)
        return comm(Expr.gen(H, i), x) - x * (sg * _cartan(i, j, N))
    if rel == "serre":
        x = E if sg > 0 else F
        e = Expr.gen(x, j)
        for _ in range(1 - _cartan(i, j, N)):
            e = comm(Expr.gen(x, i), e)
        return e
    raise DomainError(f"relation {rel!r} has no operator expression")


def _guay_check(inst):
    """X^{+-}_{i,r}, H_{i,r} against the binomial shift of x^{+-}_{i,k}, h_{i,k}."""
    N, i, r = inst.N, inst.i, inst.r
    shift = RatFun.linear(i, -i) * Fraction(1, 2)
    pairs = ((YSL_XP, AY_XP), (YSL_XM, AY_XM), (YSL_H, AY_H))
    for lam in partitions_up_to(inst.D):
        for big, small in pairs:
            want = {}
            for k in range(r + 1):
                c = shift ** (r - k) * comb(r, k)
                for mu, m in matrix_column(small, i, k, lam, N):
                    want[mu] = want.get(mu, _ZERO) + c * m
            got = dict(matrix_column(big, i, r, lam, N))
            for mu in sorted(set(want) | set(got), key=lambda p: (p.size, tuple(p))):
                d = got.get(mu, _ZERO) - want.get(mu, _ZERO)
                if d:
                    return _fail(inst, operator=big, input=lam, output=mu, coeff=d)
    return CheckReport(inst, True)


# ---------------------------------------------------------------------------
# validation


def _admissible(rel, N):
    if rel in AY_RELATIONS:
        if N < 2:
            raise DomainError("the affine Yangian relations need N >= 2")
        return rel in N2_RELATIONS if N == 2 else rel not in ("eq:17", "eq:18")
    if rel in SL_RELATIONS or rel == "adjoint":
        return N >= 2
    if rel in LIE_RELATIONS:
        return N >= 2
    return rel in ("appendix-a", "appendix-b")


def validate(inst: RelationInstance):
    rel, N = inst.rel, inst.N
    if rel not in RELATIONS:
        raise DomainError(f"unknown relation {rel!r}")
    if not isinstance(N, int) or N < 1:
        raise DomainError(f"N must be a positive integer, got {N!r}")
    if inst.D is None or inst.D < 0:
        raise DomainError("truncation degree must be non-negative")
    if not _admissible(rel, N):
        raise DomainError(f"relation {rel} is not part of the presentation for N={N}")
    if inst.sign not in (1, -1):
        raise DomainError("sign must be +1 or -1")
    for name in ("r", "s"):
        v = getattr(inst, name)
        if v is not None and v < 0:
            raise DomainError(f"mode {name} must be non-negative")
    if rel.startswith("appendix"):
        return
    if rel in SL_RELATIONS or rel == "adjoint":
        idx = [inst.i] if rel in ("guay", "adjoint") else [inst.i, inst.j]
        for v in idx:
            if v is None or not 1 <= v <= N - 1:
                raise DomainError(f"{rel}: indices must lie in 1..{N - 1}")
    else:
        idx = [inst.i] + ([inst.j] if rel not in ("eq:5", "eq:11") else [])
        for v in idx:
            if v is None or not 0 <= v < N:
                raise DomainError(f"{rel}: indices must lie in 0..{N - 1}")
    i, j = inst.i, inst.j
    if rel in ("eq:4", "eq:10") and (j - i) % N in (0, 1, N - 1):
        raise DomainError(f"{rel} needs j not in {{i, i+1, i-1}}")
    if rel in ("eq:5", "eq:11") and j is not None and j != i:
        raise DomainError(f"{rel} needs j = i")
    if rel in ("eq:6", "eq:8", "eq:12", "eq:14") and (i - j) % N != 1:
        raise DomainError(f"{rel} needs j = i - 1")
    if rel in ("eq:7", "eq:9", "eq:13", "eq:15") and (j - i) % N != 1:
        raise DomainError(f"{rel} needs j = i + 1")
    if rel in ("eq:6", "eq:7", "eq:12", "eq:13") and inst.sign != 1:
        raise DomainError(f"{rel} is a relation for the raising operators")
    if rel in ("eq:8", "eq:9", "eq:14", "eq:15") and inst.sign != -1:
        raise DomainError(f"{rel} is a relation for the lowering operators")
    if rel in ("eq:17", "eq:18") and (j - i) % N != 1:
        raise DomainError(f"{rel} needs j = i + 1")
    if rel in ("eq:16", "sl:serre", "serre") and i == j:
        raise DomainError(f"{rel} needs i != j")
    if rel in ("eq:16", "sl:serre"):
        a = _cartan(i, j, N) if rel == "eq:16" else _sl_cartan(i, j)
        if len(inst.modes) != 1 - a:
            raise DomainError(f"{rel} needs {1 - a} modes for (i, j) = ({i}, {j})")
    if inst.mutate and rel not in ("eq:5", "eq:11", "eq:12", "eq:13", "eq:14", "eq:15",
                                   "sl:hx", "sl:xxpm", "appendix-a", "appendix-b"):
        raise DomainError(f"{rel} has no mutation")


# ---------------------------------------------------------------------------
# checks


def check_relation(inst: RelationInstance) -> CheckReport:
    validate(inst)
    if inst.rel == "adjoint":
        return _adjoint(inst)
    if inst.rel.startswith("appendix"):
        return check_appendix(inst.rel[-1], mutate=bool(inst.mutate))
    if inst.rel == "guay":
        return _guay_check(inst)
    expr = build_expression(inst)
    for lam in partitions_up_to(inst.D):
        image = evaluate(expr, lam, inst.N)
        if image:
            mu = min(image, key=lambda p: (p.size, tuple(p)))
            return _fail(inst, input=lam, output=mu, coeff=image[mu])
    return CheckReport(inst, True)


@lru_cache(maxsize=None)
def jack_gram(n, N):
    """<P_lam, P_mu> for all partitions of n from the Schur expansions."""
    sg = schur_gram(n, N)
    parts = partitions_of(n)
    exp = {lam: jack_glN(lam, N).terms for lam in parts}
    gram = {}
    for a, lam in enumerate(parts):
        for mu in parts[a:]:
            total = _ZERO
            for x, c in exp[lam].items():
                for y, d in exp[mu].items():
                    total = total + c * d * sg[x, y]
            gram[lam, mu] = gram[mu, lam] = total
    return gram


def _pairing(column, target, gram):
    """<sum_nu c_nu P_nu, P_target>."""
    total = _ZERO
    for nu, c in column:
        g = gram.get((nu, target))
        if g is not None:
            total = total + c * g
    return total


def _adjoint(inst):
    N, i, r = inst.N, inst.i, inst.r
    for n in range(1, inst.D + 1):
        big, small = jack_gram(n, N), jack_gram(n - 1, N)
        for lam in partitions_of(n):
            for mu in partitions_of(n - 1):
                lhs = _pairing(matrix_column(YSL_XP, i, r, lam, N), mu, small)
                rhs = _pairing(matrix_column(YSL_XM, i, r, mu, N), lam, big)
                if lhs != rhs:
                    return _fail(inst, operator="X+/X-", input=lam, output=mu, coeff=lhs - rhs)
    for n in range(inst.D + 1):
        g = jack_gram(n, N)
        for lam in partitions_of(n):
            for mu in partitions_of(n):
                lhs = _pairing(matrix_column(YSL_H, i, r, lam, N), mu, g)
                rhs = _pairing(matrix_column(YSL_H, i, r, mu, N), lam, g)
                if lhs != rhs:
                    return _fail(inst, operator="H", input=lam, output=mu, coeff=lhs - rhs)
    return CheckReport(inst, True)


def check_adjointness(i, r, D, N) -> CheckReport:
    """X+_{i,r} and X-_{i,r} are adjoint, and H_{i,r} self-adjoint, for the Fock form."""
    return check_relation(RelationInstance("adjoint", N, D, i=i, r=r))


def _appendix_a_poly(mutate):
    K = 4
    e1, e2, u, c = (RatFun.var(k, K) for k in range(K))
    X = (u - c - e1) * (u - c - e2) / ((u - c + e1) * (u - c + e2))
    one = RatFun.const(1, K)
    sgn = -1 if mutate else 1
    total = (X - one) * (u - c) ** 2 + (X + one) * (u - c) * (e1 + e2) * sgn + (X - one) * e1 * e2
    return total.num


def _appendix_b_terms(sign):
    """Coefficients of x_i x_{i+1} and x_{i+1} x_i in the N = 2 relation, as functions
    of (alpha, beta, e1, e2) where x_{i,r} carries alpha^r and x_{i+1,s} carries beta^s."""
    inst = RelationInstance("eq:18", 2, 0, i=0, j=1, r=0, s=0, sign=sign)
    terms = []
    for word, coeff in build_expression(inst).terms.items():
        first, second = word
        ab = first.i == 0
        a_mode = first.r if ab else second.r
        b_mode = second.r if ab else first.r
        terms.append((ab, a_mode, b_mode, coeff))
    return terms


def check_appendix(which, mutate=False) -> CheckReport:
    """The two rational identities behind the N = 2 relations."""
    rel = f"appendix-{which}"
    inst = RelationInstance(rel, 2, 0, mutate=int(bool(mutate)))
    if which == "a":
        num = _appendix_a_poly(mutate)
        if num.is_zero():
            return CheckReport(inst, True)
        mono, coeff = num.sorted_terms()[0]
        witness = IntPoly({mono: coeff}, 4)
        return _fail(inst, monomial=witness, numerator=num)
    if which != "b":
        raise DomainError(f"unknown appendix identity {which!r}")
    rng = random.Random(20240607)
    axes = [
        sorted({Fraction(rng.randint(-40, 40), rng.randint(1, 9)) for _ in range(5)} | {Fraction(0)})[:5]
        for _ in range(4)
    ]
    for sign in (1, -1):
        terms = _appendix_b_terms(sign)
        for al in axes[0]:
            for be in axes[1]:
                for x1 in axes[2]:
                    for x2 in axes[3]:
                        ab = ba = Fraction(0)
                        for is_ab, p, q, coeff in terms:
                            v = coeff.evaluate((x1, x2)) * al ** p * be ** q
                            if is_ab:
                                ab += v
                            else:
                                ba += v
                        d = al - be if sign > 0 else be - al
                        want_ab = (d + x1) * (d + x2)
                        want_ba = -(-d + x1) * (-d + x2)
                        if mutate:
                            want_ab = -want_ab
                        if ab != want_ab or ba != want_ba:
                            return _fail(inst, sign=sign, point=(al, be, x1, x2),
                                         coeff=(ab - want_ab) or (ba - want_ba))
    return CheckReport(inst, True)


# ---------------------------------------------------------------------------
# suites


def _mode_pairs(rmax):
    return [(r, s) for r in range(rmax + 1) for s in range(rmax + 1)]


def affine_yangian_instances(N, D, rmax):
    if N < 2:
        raise DomainError("affine Yangian suite is unsupported for N = 1")
    out = []
    add = lambda rel, **kw: out.append(RelationInstance(rel, N, D, **kw))  # noqa: E731
    idx = range(N)
    rels = N2_RELATIONS if N == 2 else AY_RELATIONS[:16]
    for rel in rels:
        for i in idx:
            if rel == "eq:1":
                for j in idx:
                    for r, s in _mode_pairs(rmax):
                        add(rel, i=i, j=j, r=r, s=s)
            elif rel == "eq:2":
                for j in idx:
                    for r, s in _mode_pairs(rmax):
                        add(rel, i=i, j=j, r=r, s=s)
            elif rel == "eq:3":
                for j in idx:
                    for s in range(rmax + 1):
                        for sg in (1, -1):
                            add(rel, i=i, j=j, s=s, sign=sg)
            elif rel in ("eq:4", "eq:10"):
                for j in idx:
                    if (j - i) % N in (0, 1, N - 1):
                        continue
                    for r, s in _mode_pairs(rmax):
                        for sg in (1, -1):
                            add(rel, i=i, j=j, r=r, s=s, sign=sg)
            elif rel in ("eq:5", "eq:11"):
                for r, s in _mode_pairs(rmax):
                    for sg in (1, -1):
                        add(rel, i=i, j=i, r=r, s=s, sign=sg)
            elif rel in ("eq:6", "eq:7", "eq:8", "eq:9", "eq:12", "eq:13", "eq:14", "eq:15"):
                k = int(rel[3:])
                j = (i - 1) % N if k in (6, 8, 12, 14) else (i + 1) % N
                sg = 1 if k in (6, 7, 12, 13) else -1
                for r, s in _mode_pairs(rmax):
                    add(rel, i=i, j=j, r=r, s=s, sign=sg)
            elif rel in ("eq:17", "eq:18"):
                j = (i + 1) % N
                for r, s in _mode_pairs(rmax):
                    for sg in (1, -1):
                        add(rel, i=i, j=j, r=r, s=s, sign=sg)
            elif rel == "eq:16":
                for j in idx:
                    if j == i:
                        continue
                    order = 1 - _cartan(i, j, N)
                    for modes in combinations_with_replacement(range(rmax + 1), order):
                        for s in range(rmax + 1):
                            for sg in (1, -1):
                                add(rel, i=i, j=j, s=s, sign=sg, modes=modes)
    return out


def yangian_sl_instances(N, D, rmax):
    out = []
    add = lambda rel, **kw: out.append(RelationInstance(rel, N, D, **kw))  # noqa: E731
    idx = range(1, N)
    for i in idx:
        for j in idx:
            for r, s in _mode_pairs(rmax):
                add("sl:hh", i=i, j=j, r=r, s=s)
                add("sl:xx", i=i, j=j, r=r, s=s)
                for sg in (1, -1):
                    add("sl:hx", i=i, j=j, r=r, s=s, sign=sg)
                    add("sl:xxpm", i=i, j=j, r=r, s=s, sign=sg)
            for s in range(rmax + 1):
                for sg in (1, -1):
                    add("sl:hx0", i=i, j=j, s=s, sign=sg)
            if i != j:
                order = 1 - _sl_cartan(i, j)
                for modes in combinations_with_replacement(range(rmax + 1), order):
                    for s in range(rmax + 1):
                        for sg in (1, -1):
                            add("sl:serre", i=i, j=j, s=s, sign=sg, modes=modes)
        for r in range(rmax + 2):
            add("guay", i=i, r=r)
    return out


def affine_lie_instances(N, D):
    out = []
    add = lambda rel, **kw: out.append(RelationInstance(rel, N, D, **kw))  # noqa: E731
    for i in range(N):
        for j in range(N):
            add("lie:hh", i=i, j=j)
            add("lie:ef", i=i, j=j)
            for sg in (1, -1):
                add("lie:he", i=i, j=j, sign=sg)
                if i != j:
                    add("serre", i=i, j=j, sign=sg)
    return out


def adjoint_instances(N, D, rmax):
    return [RelationInstance("adjoint", N, D, i=i, r=r) for i in range(1, N) for r in range(rmax + 1)]


def appendix_instances():
    return [RelationInstance("appendix-a", 2, 0), RelationInstance("appendix-b", 2, 0)]


def suite_instances(name, N, D, rmax):
    if name not in SUITES:
        raise DomainError(f"unknown suite {name!r}")
    if not isinstance(N, int) or N < 1:
        raise DomainError(f"N must be a positive integer, got {N!r}")
    out = []
    if name in ("affine-yangian", "all"):
        out += affine_yangian_instances(N, D, rmax)
    if name in ("yangian-sl", "all"):
        out += yangian_sl_instances(N, D, rmax)
    if name in ("affine-lie", "all") and N >= 2:
        out += affine_lie_instances(N, D)
    if name in ("adjoint", "all"):
        out += adjoint_instances(N, D, rmax)
    if name in ("appendix", "all"):
        out += appendix_instances()
    return out


def run_suite(name, N, D, rmax, jobs=1):
    """Reports for every instance of a suite, in enumeration order."""
    instances = suite_instances(name, N, D, rmax)
    if jobs and jobs > 1 and len(instances) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(check_relation, instances, chunksize=8))
    return [check_relation(inst) for inst in instances]
