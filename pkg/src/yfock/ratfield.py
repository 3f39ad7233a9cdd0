"""Exact arithmetic in Q(e1, e2) and truncated series in u^-1.

Polynomials have integer coefficients and are stored as sparse maps from
exponent tuples to ints. A ``RatFun`` is a reduced fraction of two such
polynomials whose denominator has a positive lex-leading coefficient, so
structural equality is mathematical equality.
"""

from __future__ import annotations

import ast
from fractions import Fraction
from math import gcd as igcd

from .errors import DomainError, PoleError

VARIABLE_NAMES = ("e1", "e2", "u", "c")


def _names(nvars):
    if nvars <= len(VARIABLE_NAMES):
        return VARIABLE_NAMES[:nvars]
    return tuple(f"x{k + 1}" for k in range(nvars))


class IntPoly:
    """Sparse integer polynomial in ``nvars`` variables (lex order, var 1 highest)."""

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, terms=None, nvars=2):
        self.nvars = nvars
        if terms:
            self.terms = {e: c for e, c in terms.items() if c}
        else:
            self.terms = {}
        self._hash = None

    @classmethod
    def _raw(cls, terms, nvars):
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c, nvars=2):
        return cls._raw({(0,) * nvars: c} if c else {}, nvars)

    @classmethod
    def var(cls, k, nvars=2):
        e = [0] * nvars
        e[k] = 1
        return cls._raw({tuple(e): 1}, nvars)

    def is_zero(self):
        return not self.terms

    def is_one(self):
        return len(self.terms) == 1 and self.terms.get((0,) * self.nvars) == 1

    def is_const(self):
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def const_value(self):
        return self.terms.get((0,) * self.nvars, 0)

    def is_monomial(self):
        return len(self.terms) == 1

    def leading(self):
        e = max(self.terms)
        return e, self.terms[e]

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def degree(self, k):
        return max((e[k] for e in self.terms), default=-1)

    def is_homogeneous(self):
        return len({sum(e) for e in self.terms}) <= 1

    def content(self):
        g = 0
        for c in self.terms.values():
            g = igcd(g, c)
            if g == 1:
                break
        return g

    def __eq__(self, other):
        if isinstance(other, IntPoly):
            return self.terms == other.terms
        if isinstance(other, int):
            return self.is_const() and self.const_value() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __neg__(self):
        return IntPoly._raw({e: -c for e, c in self.terms.items()}, self.nvars)

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPoly.const(other, self.nvars)
        t = dict(self.terms)
        for e, c in other.terms.items():
            v = t.get(e, 0) + c
            if v:
                t[e] = v
            else:
                t.pop(e, None)
        return IntPoly._raw(t, self.nvars)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPoly.const(other, self.nvars)
        t = dict(self.terms)
        for e, c in other.terms.items():
            v = t.get(e, 0) - c
            if v:
                t[e] = v
            else:
                t.pop(e, None)
        return IntPoly._raw(t, self.nvars)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, k):
        if not k:
            return IntPoly._raw({}, self.nvars)
        return IntPoly._raw({e: c * k for e, c in self.terms.items()}, self.nvars)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        t = {}
        get = t.get
        if self.nvars == 2:
            for (b0, b1), cb in b.items():
                for (a0, a1), ca in a.items():
                    e = (a0 + b0, a1 + b1)
                    t[e] = get(e, 0) + ca * cb
        else:
            for eb, cb in b.items():
                for ea, ca in a.items():
                    e = tuple(x + y for x, y in zip(ea, eb))
                    t[e] = get(e, 0) + ca * cb
        return IntPoly._raw({e: c for e, c in t.items() if c}, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, n):
        result = IntPoly.const(1, self.nvars)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def exact_div(self, other):
        """Quotient of an exact division; raises ``ArithmeticError`` otherwise."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if other.is_monomial():
            (eo, co), = other.terms.items()
            t = {}
            for e, c in self.terms.items():
                q, r = divmod(c, co)
                d = tuple(x - y for x, y in zip(e, eo))
                if r or min(d) < 0:
                    raise ArithmeticError("inexact polynomial division")
                t[d] = q
            return IntPoly._raw(t, self.nvars)
        le, lc = other.leading()
        rem = dict(self.terms)
        quot = {}
        other_items = list(other.terms.items())
        while rem:
            e = max(rem)
            c = rem[e]
            q, r = divmod(c, lc)
            d = tuple(x - y for x, y in zip(e, le))
            if r or min(d) < 0:
                raise ArithmeticError("inexact polynomial division")
            quot[d] = q
            for eo, co in other_items:
                k = tuple(x + y for x, y in zip(d, eo))
                v = rem.get(k, 0) - q * co
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return IntPoly._raw(quot, self.nvars)

    def evaluate(self, point):
        total = 0
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v *= x ** k
            total += v
        return total

    def sorted_terms(self):
        return sorted(self.terms.items(), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        names = _names(self.nvars)
        out = []
        for idx, (e, c) in enumerate(self.sorted_terms()):
            mon = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k)
            a = abs(c)
            if not mon:
                body = str(a)
            elif a == 1:
                body = mon
            else:
                body = f"{a}*{mon}"
            if idx == 0:
                out.append("-" + body if c < 0 else body)
            else:
                out.append((" - " if c < 0 else " + ") + body)
        return "".join(out)

    def __repr__(self):
        return f"IntPoly({self})"


# --- univariate dense helpers (coefficient lists, low degree first) ---

def _dup_strip(f):
    while f and not f[-1]:
        f.pop()
    return f


def _dup_content(f):
    g = 0
    for c in f:
        g = igcd(g, c)
        if g == 1:
            break
    return g


def _dup_primitive(f):
    g = _dup_content(f)
    if f[-1] < 0:
        g = -g
    if g == 1:
        return f
    return [c // g for c in f]


def _dup_prem(a, b):
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(a) - 1 >= db and a:
        la = a[-1]
        shift = len(a) - 1 - db
        a = [c * lb for c in a]
        for k, c in enumerate(b):
            a[k + shift] -= la * c
        _dup_strip(a)
    return a


def _dup_gcd(f, g):
    """Primitive gcd of two primitive univariate integer polynomials."""
    if len(f) < len(g):
        f, g = g, f
    while len(g) > 1:
        r = _dup_prem(f, g)
        if not r:
            return _dup_primitive(g)
        f, g = g, _dup_primitive(r)
    if len(g) == 1:
        return [1]
    return _dup_primitive(f)


def _to_dense(p, k):
    f = [0] * (p.degree(k) + 1)
    for e, c in p.terms.items():
        f[e[k]] = c
    return f


# --- multivariate gcd ---

def _split_monomial(p):
    mins = list(next(iter(p.terms)))
    for e in p.terms:
        for k, x in enumerate(e):
            if x < mins[k]:
                mins[k] = x
    if not any(mins):
        return tuple(mins), p
    mins = tuple(mins)
    t = {tuple(x - y for x, y in zip(e, mins)): c for e, c in p.terms.items()}
    return mins, IntPoly._raw(t, p.nvars)


def _primitive(p):
    c = p.content()
    if p.leading()[1] < 0:
        c = -c
    return p if c == 1 else IntPoly._raw({e: v // c for e, v in p.terms.items()}, p.nvars)


def _coeffs_in_first(p):
    """View ``p`` as a polynomial in variable 1 over Z[remaining variables]."""
    out = {}
    n = p.nvars - 1
    for e, c in p.terms.items():
        out.setdefault(e[0], {})[e[1:]] = c
    return {k: IntPoly._raw(t, n) for k, t in out.items()}


def _from_coeffs_in_first(coeffs, nvars):
    t = {}
    for k, q in coeffs.items():
        for e, c in q.terms.items():
            t[(k,) + e] = c
    return IntPoly._raw(t, nvars)


def _embed(q, nvars):
    return IntPoly._raw({(0,) + e: c for e, c in q.terms.items()}, nvars)


def _content_in_first(p):
    g = None
    for q in _coeffs_in_first(p).values():
        g = q if g is None else poly_gcd(g, q)
        if g.is_one():
            break
    return g


def _recursive_gcd(f, g):
    """gcd of primitive, monomial-free polynomials via content/primitive-part PRS."""
    n = f.nvars
    if n == 1:
        h = _dup_gcd(_to_dense(f, 0), _to_dense(g, 0))
        return IntPoly._raw({(k,): c for k, c in enumerate(h) if c}, 1)
    if n == 2 and f.is_homogeneous() and g.is_homogeneous():
        h = _dup_gcd(_to_dense(f, 0), _to_dense(g, 0))
        d = len(h) - 1
        return IntPoly._raw({(k, d - k): c for k, c in enumerate(h) if c}, 2)
    cf, cg = _content_in_first(f), _content_in_first(g)
    c = poly_gcd(cf, cg)
    if f.degree(0) == 0 or g.degree(0) == 0:
        return _embed(c, n)
    a = f.exact_div(_embed(cf, n))
    b = g.exact_div(_embed(cg, n))
    if a.degree(0) < b.degree(0):
        a, b = b, a
    while True:
        r = _prem_first(a, b)
        if r.is_zero():
            break
        if r.degree(0) == 0:
            return _embed(c, n)
        a, b = b, r.exact_div(_embed(_content_in_first(r), n))
    b = b.exact_div(_embed(_content_in_first(b), n))
    if b.leading()[1] < 0:
        b = -b
    return b * _embed(c, n)


def _prem_first(a, b):
    n = a.nvars
    db = b.degree(0)
    cb = _coeffs_in_first(b)
    lb = _embed(cb[db], n)
    r = a
    while not r.is_zero() and r.degree(0) >= db:
        dr = r.degree(0)
        lr = _embed(_coeffs_in_first(r)[dr], n)
        shift = [0] * n
        shift[0] = dr - db
        xs = IntPoly._raw({tuple(shift): 1}, n)
        r = r * lb - lr * xs * b
    return r


def poly_gcd(f, g):
    """Greatest common divisor, normalised to a positive lex-leading coefficient."""
    if f.is_zero():
        return g if g.is_zero() or g.leading()[1] > 0 else -g
    if g.is_zero():
        return f if f.leading()[1] > 0 else -f
    n = f.nvars
    ef, f1 = _split_monomial(f)
    eg, g1 = _split_monomial(g)
    mono = tuple(min(x, y) for x, y in zip(ef, eg))
    c = igcd(f1.content(), g1.content())
    if f1.is_monomial() or g1.is_monomial():
        return IntPoly._raw({mono: c}, n)
    f1, g1 = _primitive(f1), _primitive(g1)
    if f1 == g1:
        core = f1
    else:
        core = _recursive_gcd(f1, g1)
    if any(mono) or c != 1:
        core = core * IntPoly._raw({mono: c}, n)
    return core


def _canonical(num, den):
    if den.is_zero():
        raise ZeroDivisionError("rational function with zero denominator")
    if num.is_zero():
        return IntPoly._raw({}, num.nvars), IntPoly.const(1, num.nvars)
    g = poly_gcd(num, den)
    if not g.is_one():
        num, den = num.exact_div(g), den.exact_div(g)
    if den.leading()[1] < 0:
        num, den = -num, -den
    return num, den


class RatFun:
    """Element of Q(e1, e2) (or Q(e1, e2, u, c) when ``nvars`` is 4)."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1, nvars=2):
        num = _as_poly(num, nvars)
        den = _as_poly(den, num.nvars)
        self.num, self.den = _canonical(num, den)
        self._hash = None

    @classmethod
    def _raw(cls, num, den):
        r = cls.__new__(cls)
        r.num = num
        r.den = den
        r._hash = None
        return r

    @classmethod
    def const(cls, value, nvars=2):
        if isinstance(value, Fraction):
            return cls._raw(IntPoly.const(value.numerator, nvars), IntPoly.const(value.denominator, nvars))
        return cls._raw(IntPoly.const(value, nvars), IntPoly.const(1, nvars))

    @classmethod
    def var(cls, k, nvars=2):
        return cls._raw(IntPoly.var(k, nvars), IntPoly.const(1, nvars))

    @classmethod
    def linear(cls, a, b):
        """``a*e1 + b*e2`` for integers a, b."""
        t = {}
        if a:
            t[(1, 0)] = a
        if b:
            t[(0, 1)] = b
        return cls._raw(IntPoly._raw(t, 2), IntPoly.const(1, 2))

    @classmethod
    def parse(cls, text, nvars=2):
        """Parse the textual form produced by ``str`` (``^`` or ``**`` for powers)."""
        names = _names(nvars)
        env = {n: cls.var(k, nvars) for k, n in enumerate(names)}
        try:
            tree = ast.parse(text.replace("^", "**"), mode="eval")
        except SyntaxError as exc:
            raise DomainError(f"cannot parse rational function {text!r}") from exc

        def walk(node):
            if isinstance(node, ast.Expression):
                return walk(node.body)
            if isinstance(node, ast.Constant) and isinstance(node.value, int):
                return cls.const(node.value, nvars)
            if isinstance(node, ast.Name) and node.id in env:
                return env[node.id]
            if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
                v = walk(node.operand)
                return -v if isinstance(node.op, ast.USub) else v
            if isinstance(node, ast.BinOp):
                a, b = walk(node.left), walk(node.right)
                if isinstance(node.op, ast.Add):
                    return a + b
                if isinstance(node.op, ast.Sub):
                    return a - b
                if isinstance(node.op, ast.Mult):
                    return a * b
                if isinstance(node.op, ast.Div):
                    return a / b
                if isinstance(node.op, ast.Pow) and isinstance(node.right, ast.Constant):
                    return a ** node.right.value
            raise DomainError(f"unsupported syntax in {text!r}")

        return walk(tree)

    @property
    def nvars(self):
        return self.num.nvars

    def is_zero(self):
        return self.num.is_zero()

    def is_one(self):
        return self.num.is_one() and self.den.is_one()

    def is_const(self):
        return self.num.is_const() and self.den.is_const()

    def __eq__(self, other):
        if isinstance(other, RatFun):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self == RatFun.const(other, self.nvars)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __bool__(self):
        return not self.num.is_zero()

    def _coerce(self, other):
        if isinstance(other, RatFun):
            return other
        if isinstance(other, (int, Fraction)):
            return RatFun.const(other, self.nvars)
        return NotImplemented

    def __neg__(self):
        return RatFun._raw(-self.num, self.den)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self.num, self.den, other.num, other.den
        if a.is_zero():
            return other
        if c.is_zero():
            return self
        if b == d:
            n = a + c
            if b.is_one() or n.is_zero():
                return RatFun._raw(n, b) if not n.is_zero() else RatFun.const(0, self.nvars)
            g = poly_gcd(n, b)
            if g.is_one():
                return RatFun._raw(n, b)
            return RatFun._raw(n.exact_div(g), b.exact_div(g))
        if b.is_one():
            return RatFun._raw(a * d + c, d)
        if d.is_one():
            return RatFun._raw(a + c * b, b)
        g = poly_gcd(b, d)
        if g.is_one():
            return RatFun._raw(a * d + c * b, b * d)
        b1, d1 = b.exact_div(g), d.exact_div(g)
        n = a * d1 + c * b1
        if n.is_zero():
            return RatFun.const(0, self.nvars)
        g2 = poly_gcd(n, g)
        if not g2.is_one():
            n = n.exact_div(g2)
            d = d.exact_div(g2)
        return RatFun._raw(n, b1 * d)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self.num, self.den, other.num, other.den
        if a.is_zero() or c.is_zero():
            return RatFun.const(0, self.nvars)
        if d.is_one() and b.is_one():
            return RatFun._raw(a * c, b)
        if not d.is_one():
            g1 = poly_gcd(a, d)
            if not g1.is_one():
                a, d = a.exact_div(g1), d.exact_div(g1)
        if not b.is_one():
            g2 = poly_gcd(c, b)
            if not g2.is_one():
                c, b = c.exact_div(g2), b.exact_div(g2)
        return RatFun._raw(a * c, b * d)

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        n, d = self.den, self.num
        if d.leading()[1] < 0:
            n, d = -n, -d
        return RatFun._raw(n, d)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return RatFun._raw(self.num ** n, self.den ** n)

    def evaluate(self, point):
        """Value at a point of rationals; raises ``PoleError`` on a pole."""
        d = self.den.evaluate(point)
        if d == 0:
            raise PoleError(f"denominator {self.den} vanishes at {tuple(map(str, point))}")
        return Fraction(self.num.evaluate(point)) / d

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        if len(self.num.terms) == 1:
            n = str(self.num)
        elif self.num.leading()[1] < 0:
            n = f"-({-self.num})"
        else:
            n = f"({self.num})"
        den = self.den
        if den.is_const() or (den.is_monomial() and den.leading()[1] == 1 and sum(1 for x in den.leading()[0] if x) == 1):
            d = str(den)
        else:
            d = f"({den})"
        return f"{n}/{d}"

    def __repr__(self):
        return f"RatFun({self})"


def _as_poly(x, nvars):
    if isinstance(x, IntPoly):
        return x
    if isinstance(x, int):
        return IntPoly.const(x, nvars)
    raise TypeError(f"cannot build a polynomial from {type(x).__name__}")


def e1():
    return RatFun.var(0)


def e2():
    return RatFun.var(1)


def hbar():
    return RatFun.linear(1, 1)


def const(value):
    return RatFun.const(value)


def substitute_hbar_zero(a: RatFun) -> RatFun:
    """Specialise e2 to -e1; the result is a rational function of e1 alone."""

    def spec(p):
        t = {}
        for (i, j), c in p.terms.items():
            k = (i + j, 0)
            v = t.get(k, 0) + (-c if j % 2 else c)
            if v:
                t[k] = v
            else:
                t.pop(k, None)
        return IntPoly._raw(t, 2)

    if a.nvars != 2:
        raise DomainError("substitute_hbar_zero expects a function of e1, e2")
    den = spec(a.den)
    if den.is_zero():
        factor = IntPoly({(1, 0): 1, (0, 1): 1})
        mult, rest = 0, a.den
        while True:
            try:
                rest = rest.exact_div(factor)
            except ArithmeticError:
                break
            mult += 1
        raise PoleError(f"pole at e1 + e2 = 0: denominator {a.den} contains (e1 + e2)^{mult}")
    return RatFun(spec(a.num), den)


class USeries:
    """Truncated power series sum_k c_k u^{-k}, kept through ``order``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = tuple(c if isinstance(c, RatFun) else RatFun.const(c) for c in coeffs)

    @property
    def order(self):
        return len(self.coeffs) - 1

    @classmethod
    def one(cls, order):
        return cls([1] + [0] * order)

    def coeff(self, k):
        return self.coeffs[k]

    def __mul__(self, other):
        n = min(self.order, other.order)
        out = []
        for k in range(n + 1):
            s = RatFun.const(0)
            for j in range(k + 1):
                a, b = self.coeffs[j], other.coeffs[k - j]
                if a and b:
                    s = s + a * b
            out.append(s)
        return USeries(out)

    def __eq__(self, other):
        return isinstance(other, USeries) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return "USeries(" + ", ".join(str(c) for c in self.coeffs) + ")"


def expand_linear_quotient(factors, order) -> USeries:
    """Expand prod (u - a_k)/(u - b_k) in powers of u^-1 through u^-order.

    Uses log/exp: the log of each factor is sum_n (b^n - a^n) u^-n / n, so the
    coefficients follow from Newton's recursion on the power sums.
    """
    if order < 0:
        raise DomainError("series order must be non-negative")
    factors = [(_as_ratfun(a), _as_ratfun(b)) for a, b in factors]
    power_sums = []
    apow = [RatFun.const(1) for _ in factors]
    bpow = [RatFun.const(1) for _ in factors]
    for _ in range(order):
        s = RatFun.const(0)
        for k, (a, b) in enumerate(factors):
            apow[k] = apow[k] * a
            bpow[k] = bpow[k] * b
            s = s + bpow[k] - apow[k]
        power_sums.append(s)
    coeffs = [RatFun.const(1)]
    for n in range(1, order + 1):
        s = RatFun.const(0)
        for m in range(1, n + 1):
            p = power_sums[m - 1]
            if p and coeffs[n - m]:
                s = s + p * coeffs[n - m]
        coeffs.append(s * Fraction(1, n))
    return USeries(coeffs)


def _as_ratfun(x):
    if isinstance(x, RatFun):
        return x
    return RatFun.const(x)


def linear_form(a, b):
    """The polynomial a*e1 + b*e2."""
    t = {}
    if a:
        t[(1, 0)] = a
    if b:
        t[(0, 1)] = b
    return IntPoly._raw(t, 2)


def form_ratio(numerators, denominators, sign=1):
    """sign * prod(a e1 + b e2) / prod(c e1 + d e2) over integer pairs.

    Identical pairs cancel before any polynomial arithmetic; a zero form in
    the denominator raises ``PoleError``.
    """
    num = list(numerators)
    den = []
    for f in denominators:
        if f == (0, 0):
            raise PoleError("zero linear form in a denominator")
        try:
            num.remove(f)
        except ValueError:
            den.append(f)
    if (0, 0) in num:
        return RatFun.const(0)
    p = IntPoly.const(sign, 2)
    for a, b in num:
        p = p * linear_form(a, b)
    q = IntPoly.const(1, 2)
    for a, b in den:
        q = q * linear_form(a, b)
    return RatFun(p, q)
