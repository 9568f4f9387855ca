"""Exact sparse multivariate polynomials over the rationals.

Polynomials are immutable maps from exponent tuples to :class:`Fraction`
coefficients, tagged with an ordered tuple of variable names.  Terms are
ordered graded-lexicographically (higher total degree first, then
lexicographically descending with the first variable largest); every
matrix in the package inherits its row and column order from here.

>>> p = parse_poly("(s+t)^2", TRIANGULAR_VARS)
>>> str(p)
's^2 + 2*s*t + t^2'
"""
from __future__ import annotations

import itertools
import math
import random
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Callable, Iterable, Iterator, Mapping, Sequence

TENSOR_VARS = ("s", "u", "t", "v")
TRIANGULAR_VARS = ("s", "t", "u")
IMPLICIT_VARS = ("X1", "X2", "X3", "X4")
AFFINE_VARS = ("X1", "X2", "X3")

Exponent = tuple[int, ...]


def order_key(exp: Exponent) -> tuple:
    """Sort key for the fixed monomial order; larger keys come first."""
    return (sum(exp), exp)


class SparsePoly:
    """Immutable sparse polynomial with rational coefficients."""

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, vars: Sequence[str], terms: Mapping[Exponent, object] = ()):
        self.vars = tuple(vars)
        nv = len(self.vars)
        clean: dict[Exponent, Fraction] = {}
        for exp, c in dict(terms).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != nv:
                raise ValueError(f"exponent {exp} does not match variables {self.vars}")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            c = Fraction(c)
            if c:
                clean[exp] = clean.get(exp, 0) + c
                if not clean[exp]:
                    del clean[exp]
        self.terms = clean
        self._hash = None

    # construction helpers
    @classmethod
    def zero(cls, vars: Sequence[str]) -> SparsePoly:
        return cls(vars)

    @classmethod
    def constant(cls, vars: Sequence[str], c) -> SparsePoly:
        return cls(vars, {(0,) * len(vars): c})

    @classmethod
    def monomial(cls, vars: Sequence[str], exp: Exponent, c=1) -> SparsePoly:
        return cls(vars, {tuple(exp): c})

    @classmethod
    def var(cls, vars: Sequence[str], name: str) -> SparsePoly:
        exp = [0] * len(vars)
        exp[list(vars).index(name)] = 1
        return cls(vars, {tuple(exp): 1})

    @classmethod
    def _raw(cls, vars: tuple[str, ...], terms: dict[Exponent, Fraction]) -> SparsePoly:
        p = object.__new__(cls)
        p.vars = vars
        p.terms = terms
        p._hash = None
        return p

    # basic queries
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def coeff(self, exp: Exponent) -> Fraction:
        return self.terms.get(tuple(exp), Fraction(0))

    def sorted_terms(self) -> list[tuple[Exponent, Fraction]]:
        return sorted(self.terms.items(), key=lambda kv: order_key(kv[0]), reverse=True)

    def leading_term(self) -> tuple[Exponent, Fraction]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exp = max(self.terms, key=order_key)
        return exp, self.terms[exp]

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, name: str) -> int:
        i = self.vars.index(name)
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def bidegree(self) -> tuple[int, int]:
        """Bidegree in ``(s,u)`` and ``(t,v)``; raises unless bihomogeneous."""
        if self.vars != TENSOR_VARS:
            raise ValueError("bidegree is defined for polynomials in s,u,t,v")
        degs = {(e[0] + e[1], e[2] + e[3]) for e in self.terms}
        if len(degs) != 1:
            raise ValueError(f"not bihomogeneous: {self}")
        return degs.pop()

    def homogeneous_degree(self) -> int:
        degs = {sum(e) for e in self.terms}
        if len(degs) != 1:
            raise ValueError(f"not homogeneous: {self}")
        return degs.pop()

    # arithmetic
    def _check(self, other: SparsePoly) -> None:
        if self.vars != other.vars:
            raise ValueError(f"variable sets differ: {self.vars} vs {other.vars}")

    def _coerce(self, other) -> SparsePoly:
        if isinstance(other, SparsePoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return SparsePoly.constant(self.vars, other)
        return NotImplemented

    def __add__(self, other) -> SparsePoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return SparsePoly._raw(self.vars, out)

    __radd__ = __add__

    def __neg__(self) -> SparsePoly:
        return SparsePoly._raw(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> SparsePoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> SparsePoly:
        return (-self) + other

    def scale(self, c) -> SparsePoly:
        c = Fraction(c)
        if not c:
            return SparsePoly._raw(self.vars, {})
        return SparsePoly._raw(self.vars, {e: v * c for e, v in self.terms.items()})

    def shift(self, exp: Exponent) -> SparsePoly:
        """Multiply by the monomial with exponent ``exp``."""
        return SparsePoly._raw(
            self.vars, {tuple(a + b for a, b in zip(e, exp)): c for e, c in self.terms.items()}
        )

    def __mul__(self, other) -> SparsePoly:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return SparsePoly._raw(self.vars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other) -> SparsePoly:
        if isinstance(other, SparsePoly):
            if other.total_degree() > 0 or not other:
                raise ZeroDivisionError("only division by nonzero constants is supported")
            other = other.coeff((0,) * len(other.vars))
        other = Fraction(other)
        if not other:
            raise ZeroDivisionError("division by zero")
        return self.scale(1 / other)

    def __pow__(self, k: int) -> SparsePoly:
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = SparsePoly.constant(self.vars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = SparsePoly.constant(self.vars, other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self.terms.items())))
        return self._hash

    # evaluation and substitution
    def __call__(self, *point) -> Fraction:
        return evaluate(self, point)

    def substitute(self, values: Mapping[str, object]) -> SparsePoly:
        """Replace some variables by constants, keeping the variable tuple."""
        idx = {self.vars.index(k): Fraction(v) for k, v in values.items()}
        out: dict[Exponent, Fraction] = {}
        for e, c in self.terms.items():
            for i, v in idx.items():
                c *= v ** e[i]
            if not c:
                continue
            ne = tuple(0 if i in idx else a for i, a in enumerate(e))
            out[ne] = out.get(ne, 0) + c
        return SparsePoly._raw(self.vars, {e: c for e, c in out.items() if c})

    def compose(self, target_vars: Sequence[str], images: Sequence[SparsePoly]) -> SparsePoly:
        """Substitute ``images[i]`` (polynomials in ``target_vars``) for variable ``i``."""
        if len(images) != len(self.vars):
            raise ValueError("need one image per variable")
        cache: dict[tuple[int, int], SparsePoly] = {}

        def power(i: int, k: int) -> SparsePoly:
            if (i, k) not in cache:
                cache[(i, k)] = images[i] ** k
            return cache[(i, k)]

        result = SparsePoly.zero(target_vars)
        for e, c in self.terms.items():
            term = SparsePoly.constant(target_vars, c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            result = result + term
        return result

    def rename(self, vars: Sequence[str]) -> SparsePoly:
        if len(vars) != len(self.vars):
            raise ValueError("rename needs the same number of variables")
        return SparsePoly._raw(tuple(vars), dict(self.terms))

    def embed(self, vars: Sequence[str]) -> SparsePoly:
        """Re-express in a larger variable tuple containing all current variables."""
        pos = [list(vars).index(v) for v in self.vars]
        out = {}
        for e, c in self.terms.items():
            ne = [0] * len(vars)
            for p, a in zip(pos, e):
                ne[p] = a
            out[tuple(ne)] = c
        return SparsePoly._raw(tuple(vars), out)

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"SparsePoly({format_poly(self)!r}, vars={self.vars})"


# printing ----------------------------------------------------------------

def _format_monomial(vars: Sequence[str], exp: Exponent) -> str:
    parts = []
    for name, k in zip(vars, exp):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def format_poly(p: SparsePoly) -> str:
    """Canonical text form: terms in the fixed order, ``*`` and ``^`` operators."""
    if not p.terms:
        return "0"
    out = []
    for i, (exp, c) in enumerate(p.sorted_terms()):
        mono = _format_monomial(p.vars, exp)
        a = abs(c)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if i == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


# parsing -----------------------------------------------------------------

class PolySyntaxError(ValueError):
    """Malformed polynomial text; ``pos`` is the 0-based character offset."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\*\*|[-+*/^()]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    text = text.replace("−", "-")
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise PolySyntaxError(f"unexpected character {text[start]!r}", start)
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("num", m.group(1), start))
        elif m.group(2):
            tokens.append(("name", m.group(2), start))
        else:
            op = "^" if m.group(3) == "**" else m.group(3)
            tokens.append(("op", op, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, vars: Sequence[str]):
        self.tokens = _tokenize(text)
        self.i = 0
        self.vars = tuple(vars)

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def parse(self) -> SparsePoly:
        p = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise PolySyntaxError(f"unexpected {val!r}", pos)
        return p

    def expr(self) -> SparsePoly:
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            p = self.term()
            if val == "-":
                p = -p
        else:
            p = self.term()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                q = self.term()
                p = p + q if val == "+" else p - q
            else:
                return p

    def term(self) -> SparsePoly:
        p = self.power()
        while True:
            kind, val, pos = self.peek()
            if kind == "op" and val == "*":
                self.take()
                p = p * self.power()
            elif kind == "op" and val == "/":
                self.take()
                q = self.power()
                if q.total_degree() > 0:
                    raise PolySyntaxError("division by a non-constant", pos)
                if not q:
                    raise PolySyntaxError("division by zero", pos)
                p = p / q
            elif kind in ("num", "name") or (kind == "op" and val == "("):
                raise PolySyntaxError("implicit multiplication is not allowed; use '*'", pos)
            else:
                return p

    def power(self) -> SparsePoly:
        base = self.atom()
        kind, val, pos = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, val, pos = self.take()
            if kind == "op" and val == "-":
                raise PolySyntaxError("negative exponent", pos)
            if kind != "num":
                raise PolySyntaxError("exponent must be a non-negative integer", pos)
            return base ** int(val)
        return base

    def atom(self) -> SparsePoly:
        kind, val, pos = self.take()
        if kind == "num":
            return SparsePoly.constant(self.vars, int(val))
        if kind == "name":
            if val not in self.vars:
                raise PolySyntaxError(f"unknown variable {val!r}", pos)
            return SparsePoly.var(self.vars, val)
        if kind == "op" and val == "(":
            p = self.expr()
            kind, val, pos = self.take()
            if not (kind == "op" and val == ")"):
                raise PolySyntaxError("expected ')'", pos)
            return p
        if kind == "op" and val == "-":
            return -self.power()
        raise PolySyntaxError(f"unexpected {val or 'end of input'!r}", pos)


def parse_poly(text: str, vars: Sequence[str]) -> SparsePoly:
    """Parse ``text`` into a polynomial in ``vars``.

    Accepts integers, variable names, ``+ - * / ^`` and parentheses; division
    is only by constants.  Raises :class:`PolySyntaxError`.
    """
    return _Parser(text, vars).parse()


# monomial bases ----------------------------------------------------------

def homogeneous_exponents(nvars: int, degree: int) -> list[Exponent]:
    """All exponents of total degree ``degree`` in lex-descending order."""
    if degree < 0:
        return []
    if nvars == 1:
        return [(degree,)]
    out = []
    for a in range(degree, -1, -1):
        out.extend((a,) + rest for rest in homogeneous_exponents(nvars - 1, degree - a))
    return out


class MonomialBasis(Sequence):
    """Ordered list of exponent vectors spanning a space of polynomials."""

    def __init__(self, vars: Sequence[str], monomials: Iterable[Exponent]):
        self.vars = tuple(vars)
        self.monomials = tuple(tuple(m) for m in monomials)
        self._index = {m: i for i, m in enumerate(self.monomials)}
        if len(self._index) != len(self.monomials):
            raise ValueError("duplicate monomials in basis")

    def __getitem__(self, i):
        return self.monomials[i]

    def __len__(self) -> int:
        return len(self.monomials)

    def __iter__(self) -> Iterator[Exponent]:
        return iter(self.monomials)

    def __contains__(self, exp) -> bool:
        return tuple(exp) in self._index

    def index(self, exp) -> int:
        return self._index[tuple(exp)]

    def __eq__(self, other) -> bool:
        return isinstance(other, MonomialBasis) and (self.vars, self.monomials) == (
            other.vars,
            other.monomials,
        )

    def __repr__(self) -> str:
        return "[" + ", ".join(_format_monomial(self.vars, m) or "1" for m in self.monomials) + "]"


def monomial_basis(space, vars: Sequence[str]) -> MonomialBasis:
    """Monomials of a bidegree ``(k, l)`` (tensor) or degree ``l`` space.

    A pair selects bihomogeneous monomials in ``(s,u;t,v)``; an integer
    selects homogeneous monomials in ``vars``.  Negative degrees give the
    empty basis.
    """
    vars = tuple(vars)
    if isinstance(space, tuple):
        k, l = space
        if len(vars) != 4:
            raise ValueError("bidegree spaces need four variables (s,u,t,v)")
        if k < 0 or l < 0:
            return MonomialBasis(vars, [])
        mons = [
            (i, k - i, j, l - j) for i in range(k, -1, -1) for j in range(l, -1, -1)
        ]
        return MonomialBasis(vars, mons)
    return MonomialBasis(vars, homogeneous_exponents(len(vars), int(space)))


# evaluation --------------------------------------------------------------

def evaluate(p: SparsePoly, point: Sequence) -> Fraction:
    if len(point) != len(p.vars):
        raise ValueError(f"point has {len(point)} coordinates, expected {len(p.vars)}")
    pt = [Fraction(x) for x in point]
    powers: list[dict[int, Fraction]] = [{} for _ in pt]
    total = Fraction(0)
    for e, c in p.terms.items():
        val = c
        for i, k in enumerate(e):
            if k:
                cache = powers[i]
                if k not in cache:
                    cache[k] = pt[i] ** k
                val *= cache[k]
        total += val
    return total


# homogenization and normal forms -----------------------------------------

def homogenize(P: SparsePoly, target_degree: int, new_var: str = "X4") -> SparsePoly:
    """Homogenize with a new last variable up to ``target_degree``."""
    deg = P.total_degree()
    if target_degree < deg:
        raise ValueError(f"target degree {target_degree} below total degree {deg}")
    vars = P.vars + (new_var,)
    return SparsePoly._raw(
        vars, {e + (target_degree - sum(e),): c for e, c in P.terms.items()}
    )


def dehomogenize(F: SparsePoly) -> SparsePoly:
    """Set the last variable to 1 and drop it."""
    out: dict[Exponent, Fraction] = {}
    for e, c in F.terms.items():
        out[e[:-1]] = out.get(e[:-1], 0) + c
    return SparsePoly._raw(F.vars[:-1], {e: c for e, c in out.items() if c})


def content(p: SparsePoly) -> Fraction:
    """Positive rational ``c`` with ``p / c`` integral and of content one."""
    if not p.terms:
        raise ValueError("zero polynomial has no content")
    nums = reduce(math.gcd, (c.numerator for c in p.terms.values()))
    dens = reduce(lambda a, b: a * b // math.gcd(a, b), (c.denominator for c in p.terms.values()))
    return Fraction(nums, dens)


def primitive_normal_form(p: SparsePoly) -> SparsePoly:
    if not p.terms:
        raise ValueError("primitive normal form of the zero polynomial")
    q = p.scale(1 / content(p))
    if q.leading_term()[1] < 0:
        q = -q
    return q


# interpolation -----------------------------------------------------------

def _lattice(nvars: int, degree: int) -> list[Exponent]:
    return [e for d in range(degree + 1) for e in homogeneous_exponents(nvars, d)]


def _falling_binomial(vars: Sequence[str], i: int, base: int, k: int) -> SparsePoly:
    """``binom(x_i - base, k)`` as a polynomial."""
    x = SparsePoly.var(vars, vars[i])
    p = SparsePoly.constant(vars, 1)
    for j in range(k):
        p = p * (x - (base + j))
    return p.scale(Fraction(1, math.factorial(k)))


def interpolate(
    f: Callable[[tuple[int, ...]], object],
    vars: Sequence[str],
    degree: int,
    base: int = 1,
) -> SparsePoly:
    """Recover a polynomial of total degree at most ``degree`` from values.

    ``f`` is called on the integer points ``base + a`` with ``|a| <= degree``
    (the principal lattice of the simplex), and the result is assembled from
    multivariate forward differences in Newton form.  The answer is exact
    whenever the true polynomial has total degree at most ``degree``.
    """
    vars = tuple(vars)
    nv = len(vars)
    pts = _lattice(nv, degree)
    table = {a: Fraction(f(tuple(base + x for x in a))) for a in pts}
    for axis in range(nv):
        new = {}
        for a in pts:
            k = a[axis]
            acc = Fraction(0)
            for j in range(k + 1):
                b = a[:axis] + (j,) + a[axis + 1:]
                term = math.comb(k, j) * table[b]
                acc += term if (k - j) % 2 == 0 else -term
            new[a] = acc
        table = new
    cache: dict[tuple[int, int], SparsePoly] = {}
    result = SparsePoly.zero(vars)
    for a, c in table.items():
        if not c:
            continue
        term = SparsePoly.constant(vars, c)
        for i, k in enumerate(a):
            if k:
                if (i, k) not in cache:
                    cache[(i, k)] = _falling_binomial(vars, i, base, k)
                term = term * cache[(i, k)]
        result = result + term
    return result


def random_poly(vars: Sequence[str], monomials: Iterable[Exponent], rng: random.Random,
                lo: int = -9, hi: int = 9) -> SparsePoly:
    """Polynomial with uniform integer coefficients in ``[lo, hi]`` on ``monomials``."""
    return SparsePoly(vars, {m: rng.randint(lo, hi) for m in monomials})


# parametrized surfaces ---------------------------------------------------

@dataclass(frozen=True)
class ParamSurface:
    """Four forms ``x1..x4`` defining the surface ``(x1/x4, x2/x4, x3/x4)``.

    ``kind`` is ``"tensor"`` (bidegree ``(m, n)`` in ``s,u;t,v``) or
    ``"triangular"`` (degree ``n`` in ``s,t,u``); ``degrees`` is ``(m, n)``
    or ``(n,)``.
    """

    kind: str
    degrees: tuple[int, ...]
    x: tuple[SparsePoly, SparsePoly, SparsePoly, SparsePoly]

    def __post_init__(self):
        if self.kind not in ("tensor", "triangular"):
            raise ValueError(f"unknown surface kind {self.kind!r}")
        if len(self.x) != 4:
            raise ValueError("a surface needs exactly four polynomials")
        for i, p in enumerate(self.x, 1):
            if p.vars != self.vars:
                raise ValueError(f"x{i} is not a polynomial in {self.vars}")
            if not p:
                raise ValueError(f"x{i} is identically zero")
            if self.kind == "tensor":
                if len(self.degrees) != 2 or min(self.degrees) < 1:
                    raise ValueError("tensor surfaces need a bidegree (m, n) with m, n >= 1")
                try:
                    bd = p.bidegree()
                except ValueError:
                    raise ValueError(f"x{i} = {p} is not bihomogeneous") from None
                if bd != tuple(self.degrees):
                    raise ValueError(f"x{i} has bidegree {bd}, expected {tuple(self.degrees)}")
            else:
                if len(self.degrees) != 1 or self.degrees[0] < 1:
                    raise ValueError("triangular surfaces need a degree n >= 1")
                try:
                    deg = p.homogeneous_degree()
                except ValueError:
                    raise ValueError(f"x{i} = {p} is not homogeneous") from None
                if deg != self.degrees[0]:
                    raise ValueError(f"x{i} has degree {deg}, expected {self.degrees[0]}")

    @classmethod
    def tensor(cls, m: int, n: int, polys: Sequence) -> ParamSurface:
        xs = tuple(p if isinstance(p, SparsePoly) else parse_poly(p, TENSOR_VARS) for p in polys)
        return cls("tensor", (m, n), xs)

    @classmethod
    def triangular(cls, n: int, polys: Sequence) -> ParamSurface:
        xs = tuple(
            p if isinstance(p, SparsePoly) else parse_poly(p, TRIANGULAR_VARS) for p in polys
        )
        return cls("triangular", (n,), xs)

    @classmethod
    def random(cls, kind: str, degrees: Sequence[int], rng: random.Random) -> ParamSurface:
        """Surface with uniform integer coefficients in [-9, 9]; zero forms are redrawn."""
        degrees = tuple(degrees)
        vars = TENSOR_VARS if kind == "tensor" else TRIANGULAR_VARS
        space = degrees if kind == "tensor" else degrees[0]
        mons = monomial_basis(space, vars)
        xs = []
        while len(xs) < 4:
            p = random_poly(vars, mons, rng)
            if p:
                xs.append(p)
        return cls(kind, degrees, tuple(xs))

    @property
    def vars(self) -> tuple[str, ...]:
        return TENSOR_VARS if self.kind == "tensor" else TRIANGULAR_VARS

    @property
    def is_tensor(self) -> bool:
        return self.kind == "tensor"

    def space(self, k: int, shift: int = -1) -> MonomialBasis:
        """Basis of ``S_{km+shift, kn+shift}`` (tensor) or ``S_{kn+shift}``."""
        if self.is_tensor:
            m, n = self.degrees
            return monomial_basis((k * m + shift, k * n + shift), self.vars)
        return monomial_basis(self.degrees[0] * k + shift, self.vars)

    def image_point(self, params: Sequence) -> tuple[Fraction, ...]:
        """Homogeneous coordinates ``(x1:x2:x3:x4)`` at a parameter point."""
        return tuple(evaluate(p, params) for p in self.x)

    def __str__(self) -> str:
        degs = "x".join(map(str, self.degrees))
        body = ", ".join(f"x{i}={p}" for i, p in enumerate(self.x, 1))
        return f"{self.kind}({degs}): {body}"


# (s^3 : t^3 : u^3 : s^3+t^3+u^3) covers the plane X1 + X2 + X3 = X4 nine times.
CUBIC_ONTO_PLANE = ParamSurface.triangular(3, ["s^3", "t^3", "u^3", "s^3+t^3+u^3"])
# A bilinear parametrization of a quadric; proper, base-point free.
BILINEAR_QUADRIC = ParamSurface.tensor(1, 1, ["s*t+u*v", "s*v", "u*t", "s*v+u*t+u*v"])
