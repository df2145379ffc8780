"""Exact sparse multivariate (and Laurent) polynomials over the rationals.

A :class:`Poly` is an immutable map from exponent tuples to nonzero
:class:`fractions.Fraction` coefficients, tied to an ordered variable list.
Text input goes through :func:`parse_poly`; :func:`format_poly` produces the
canonical string (graded lex with the declared variable precedence).
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Sequence

Monomial = tuple[int, ...]

MAX_EXPONENT = 2**31 - 1


class PolyError(ValueError):
    """Base class for polynomial domain errors."""


class ParseError(PolyError):
    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


class UnknownVariable(PolyError):
    pass


class NegativeExponent(PolyError):
    pass


class RingMismatch(PolyError):
    pass


class ExponentOverflow(PolyError):
    pass


def _check_exponent(e: int) -> int:
    if abs(e) > MAX_EXPONENT:
        raise ExponentOverflow(f"exponent {e} exceeds machine width")
    return e


def as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    if isinstance(c, str):
        return parse_rational(c)
    raise TypeError(f"not an exact rational: {c!r}")


def parse_rational(text: str) -> Fraction:
    """Parse ``p`` or ``p/q`` (optionally signed) into a Fraction."""
    s = text.strip()
    sign = 1
    if s.startswith("-"):
        sign, s = -1, s[1:].strip()
    num, _, den = s.partition("/")
    if not num.isdigit() or (den and not den.isdigit()):
        raise ParseError(f"malformed rational {text!r}", 0, text)
    if den and int(den) == 0:
        raise ParseError("zero denominator", len(text), text)
    return sign * Fraction(int(num), int(den) if den else 1)


class Poly:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("vars", "terms", "laurent", "_hash")

    def __init__(self, vars: Sequence[str], terms: Mapping[Monomial, object] | None = None,
                 laurent: bool = False):
        vars = tuple(vars)
        if len(set(vars)) != len(vars):
            raise PolyError(f"duplicate variable names in {vars}")
        clean: dict[Monomial, Fraction] = {}
        n = len(vars)
        for mono, c in (terms or {}).items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != n:
                raise PolyError(f"monomial {mono} does not match variables {vars}")
            if not laurent and any(e < 0 for e in mono):
                raise NegativeExponent(f"negative exponent in polynomial mode: {mono}")
            c = as_fraction(c)
            if c:
                clean[mono] = clean.get(mono, 0) + c
                if not clean[mono]:
                    del clean[mono]
        object.__setattr__(self, "vars", vars)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "laurent", bool(laurent))
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _raw(cls, vars, terms, laurent):
        # trusted constructor: terms already canonical
        p = object.__new__(cls)
        object.__setattr__(p, "vars", vars)
        object.__setattr__(p, "terms", terms)
        object.__setattr__(p, "laurent", laurent)
        object.__setattr__(p, "_hash", None)
        return p

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # constructors

    @classmethod
    def zero(cls, vars: Sequence[str], laurent: bool = False) -> "Poly":
        return cls._raw(tuple(vars), {}, laurent)

    @classmethod
    def const(cls, c, vars: Sequence[str], laurent: bool = False) -> "Poly":
        vars = tuple(vars)
        return cls(vars, {(0,) * len(vars): c}, laurent)

    @classmethod
    def var(cls, name: str, vars: Sequence[str], laurent: bool = False) -> "Poly":
        vars = tuple(vars)
        if name not in vars:
            raise UnknownVariable(name)
        mono = tuple(1 if v == name else 0 for v in vars)
        return cls._raw(vars, {mono: Fraction(1)}, laurent)

    @classmethod
    def monomial(cls, exps: Sequence[int], vars: Sequence[str], coeff=1, laurent: bool = False) -> "Poly":
        return cls(vars, {tuple(exps): coeff}, laurent)

    @classmethod
    def gens(cls, vars: Sequence[str], laurent: bool = False) -> tuple["Poly", ...]:
        return tuple(cls.var(v, vars, laurent) for v in vars)

    # basic queries

    @property
    def nvars(self) -> int:
        return len(self.vars)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def constant_value(self) -> Fraction:
        """Coefficient of the unit monomial."""
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def total_degree(self) -> int:
        if not self.terms:
            raise PolyError("degree of the zero polynomial")
        return max(sum(m) for m in self.terms)

    def min_degree(self) -> int:
        if not self.terms:
            raise PolyError("degree of the zero polynomial")
        return min(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def homogeneous_part(self, degree: int) -> "Poly":
        return Poly._raw(self.vars, {m: c for m, c in self.terms.items() if sum(m) == degree}, self.laurent)

    def degree_in(self, name: str) -> int:
        i = self._index(name)
        return max(m[i] for m in self.terms)

    def coefficient(self, mono: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(mono), Fraction(0))

    def _index(self, name: str) -> int:
        try:
            return self.vars.index(name)
        except ValueError:
            raise UnknownVariable(f"unknown variable {name!r}; ring has {self.vars}") from None

    def _same_ring(self, other: "Poly") -> None:
        if self.vars != other.vars or self.laurent != other.laurent:
            raise RingMismatch(
                f"ring mismatch: {self.vars}/{'laurent' if self.laurent else 'poly'} vs "
                f"{other.vars}/{'laurent' if other.laurent else 'poly'}")

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            self._same_ring(other)
            return other
        return Poly.const(as_fraction(other), self.vars, self.laurent)

    # arithmetic

    def __add__(self, other) -> "Poly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Poly._raw(self.vars, out, self.laurent)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw(self.vars, {m: -c for m, c in self.terms.items()}, self.laurent)

    def __sub__(self, other) -> "Poly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            try:
                c = as_fraction(other)
            except TypeError:
                return NotImplemented
            return self.scale(c)
        self._same_ring(other)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Poly._raw(self.vars, out, self.laurent)

    __rmul__ = __mul__

    def scale(self, c) -> "Poly":
        c = as_fraction(c)
        if not c:
            return Poly.zero(self.vars, self.laurent)
        return Poly._raw(self.vars, {m: c * v for m, v in self.terms.items()}, self.laurent)

    def mul_monomial(self, mono: Monomial, c=1) -> "Poly":
        c = as_fraction(c)
        if not c:
            return Poly.zero(self.vars, self.laurent)
        out = {tuple(a + b for a, b in zip(m, mono)): c * v for m, v in self.terms.items()}
        if not self.laurent and any(e < 0 for m in out for e in m):
            raise NegativeExponent("monomial multiplication left polynomial mode")
        return Poly._raw(self.vars, out, self.laurent)

    def __pow__(self, n: int) -> "Poly":
        if not isinstance(n, int):
            return NotImplemented
        _check_exponent(n)
        if n < 0:
            if not (self.laurent and self.is_monomial()):
                raise NegativeExponent("negative power needs a single Laurent monomial")
            (m, c), = self.terms.items()
            return Poly._raw(self.vars, {tuple(e * n for e in m): c ** n}, True)
        result = Poly.const(1, self.vars, self.laurent)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other) -> "Poly":
        c = as_fraction(other)
        if not c:
            raise ZeroDivisionError("division of a polynomial by zero")
        return self.scale(1 / c)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.vars == other.vars and self.laurent == other.laurent and self.terms == other.terms
        try:
            c = as_fraction(other)
        except TypeError:
            return NotImplemented
        return self.is_constant() and self.constant_value() == c

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.vars, self.laurent, frozenset(self.terms.items()))))
        return self._hash

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)!r}, vars={self.vars}{', laurent' if self.laurent else ''})"

    def __str__(self) -> str:
        return format_poly(self)

    # calculus and structure

    def diff(self, name: str) -> "Poly":
        return partial_derivative(self, name)

    def subs(self, assignment: Mapping[str, "Poly"]) -> "Poly":
        return substitute(self, assignment)

    def content(self) -> Fraction:
        """Positive rational c with self/c primitive integral (0 for zero)."""
        from math import gcd
        if not self.terms:
            return Fraction(0)
        num = 0
        den = 1
        for c in self.terms.values():
            num = gcd(num, c.numerator)
            den = den * c.denominator // gcd(den, c.denominator)
        return Fraction(num, den)

    def primitive(self) -> "Poly":
        if not self.terms:
            return self
        return self.scale(1 / self.content())

    def to_laurent(self) -> "Poly":
        return Poly._raw(self.vars, dict(self.terms), True)

    def to_polynomial(self) -> "Poly":
        if any(e < 0 for m in self.terms for e in m):
            raise NegativeExponent("element has negative exponents")
        return Poly._raw(self.vars, dict(self.terms), False)

    def embed(self, vars: Sequence[str]) -> "Poly":
        """Re-express over a larger (or reordered) variable list."""
        vars = tuple(vars)
        missing = [v for v in self.vars if v not in vars]
        pos = {v: i for i, v in enumerate(vars)}
        out = {}
        for m, c in self.terms.items():
            if any(m[i] for i, v in enumerate(self.vars) if v in missing):
                raise UnknownVariable(f"cannot drop variables {missing} from a polynomial using them")
            new = [0] * len(vars)
            for i, v in enumerate(self.vars):
                if v in pos:
                    new[pos[v]] = m[i]
            out[tuple(new)] = c
        return Poly._raw(vars, out, self.laurent)

    def evaluate(self, point: Mapping[str, object]) -> Fraction:
        total = Fraction(0)
        vals = [as_fraction(point[v]) for v in self.vars]
        for m, c in self.terms.items():
            t = c
            for v, e in zip(vals, m):
                t *= v ** e
            total += t
        return total


def poly_arith(kind: str, a: Poly, b=None) -> Poly:
    """Dispatch form of the ring operations (``add sub mul pow neg``)."""
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "pow":
        return a ** int(b)
    if kind == "neg":
        return -a
    raise ValueError(f"unknown arithmetic kind {kind!r}")


def partial_derivative(p: Poly, name: str) -> Poly:
    i = p._index(name)
    out = {}
    for m, c in p.terms.items():
        e = m[i]
        if e:
            nm = m[:i] + (e - 1,) + m[i + 1:]
            out[nm] = c * e
    return Poly._raw(p.vars, out, p.laurent)


def substitute(p: Poly, assignment: Mapping[str, Poly]) -> Poly:
    """Ring homomorphism sending each variable of ``p`` to a Poly.

    All images must live in one common ring; it becomes the result's ring.
    """
    missing = [v for v in p.vars if v not in assignment]
    if missing:
        raise UnknownVariable(f"assignment is missing {missing}")
    images = [assignment[v] for v in p.vars]
    if not images:
        raise PolyError("cannot substitute into a ring with no variables")
    target = images[0]
    for img in images[1:]:
        target._same_ring(img)
    cache: list[dict[int, Poly]] = [{} for _ in images]

    def power(i: int, e: int) -> Poly:
        hit = cache[i].get(e)
        if hit is None:
            hit = images[i] ** e
            cache[i][e] = hit
        return hit

    result = Poly.zero(target.vars, target.laurent)
    one = Poly.const(1, target.vars, target.laurent)
    for m, c in p.terms.items():
        t = one
        for i, e in enumerate(m):
            if e:
                t = t * power(i, e)
        result = result + t.scale(c)
    return result


def jacobian_det(f: Poly, g: Poly, h: Poly, vars: Sequence[str] | None = None) -> Poly:
    """Determinant of the 3x3 matrix of partials of (f, g, h)."""
    vars = tuple(vars) if vars is not None else f.vars
    if len(vars) != 3:
        raise PolyError(f"jacobian_det needs exactly three variables, got {vars}")
    f._same_ring(g)
    f._same_ring(h)
    m = [[q.diff(v) for v in vars] for q in (f, g, h)]
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


# printing

def canonical_key(mono: Monomial):
    """Graded lex key on exponents in declared variable order (larger is earlier)."""
    return (sum(mono), mono)


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_monomial(mono: Monomial, vars: Sequence[str]) -> str:
    parts = []
    for v, e in zip(vars, mono):
        if e == 1:
            parts.append(v)
        elif e:
            parts.append(f"{v}^{e}")
    return "*".join(parts)


def format_poly(p: Poly) -> str:
    if not p.terms:
        return "0"
    out = []
    for m in sorted(p.terms, key=canonical_key, reverse=True):
        c = p.terms[m]
        mono = format_monomial(m, p.vars)
        a = abs(c)
        if not mono:
            body = _format_coeff(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_format_coeff(a)}*{mono}"
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


# parsing

class _Parser:
    def __init__(self, text: str, vars: tuple[str, ...], laurent: bool):
        self.text = text
        self.vars = vars
        self.laurent = laurent
        self.pos = 0

    def error(self, msg: str, pos: int | None = None):
        raise ParseError(msg, self.pos if pos is None else pos, self.text)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected integer")
        return int(self.text[start:self.pos])

    def parse(self) -> Poly:
        p = self.expr()
        if self.peek():
            self.error(f"unexpected {self.peek()!r}")
        return p

    def expr(self) -> Poly:
        neg = False
        if self.peek() == "-":
            self.pos += 1
            neg = True
        acc = self.term()
        if neg:
            acc = -acc
        while self.peek() in ("+", "-"):
            op = self.peek()
            self.pos += 1
            neg = False
            if self.peek() == "-":
                self.pos += 1
                neg = True
            t = self.term()
            if neg:
                t = -t
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self) -> Poly:
        acc = self.factor()
        while self.peek() == "*":
            self.pos += 1
            acc = acc * self.factor()
        return acc

    def factor(self) -> Poly:
        base = self.base()
        if self.peek() == "^":
            self.pos += 1
            start = self.pos
            sign = 1
            if self.peek() == "-":
                self.pos += 1
                sign = -1
            e = sign * self.integer()
            try:
                _check_exponent(e)
            except ExponentOverflow as exc:
                raise ParseError(str(exc), start, self.text) from None
            if e < 0 and not self.laurent:
                raise NegativeExponent(f"negative exponent {e} in polynomial mode at position {start}")
            if e < 0 and not base.is_monomial():
                raise NegativeExponent(f"negative power of a non-monomial at position {start}")
            base = base ** e
        return base

    def base(self) -> Poly:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            inner = self.expr()
            self.expect(")")
            return inner
        if ch.isdigit():
            num = self.integer()
            den = 1
            # '/' only ever appears inside a rational literal
            if self.peek() == "/":
                self.pos += 1
                at = self.pos
                den = self.integer()
                if den == 0:
                    self.error("zero denominator", at)
            return Poly.const(Fraction(num, den), self.vars, self.laurent)
        if ch.isalpha():
            start = self.pos
            while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] == "_"):
                self.pos += 1
            name = self.text[start:self.pos]
            if name not in self.vars:
                raise UnknownVariable(f"unknown variable {name!r} at position {start}; ring has {self.vars}")
            return Poly.var(name, self.vars, self.laurent)
        if not ch:
            self.error("unexpected end of input")
        self.error(f"unexpected {ch!r}")


def parse_poly(text: str, vars: Sequence[str] = ("x", "y", "z"), mode: str = "polynomial") -> Poly:
    """Parse ``text`` into a canonical Poly over ``vars``.

    >>> str(parse_poly("3*z^2 + 1/2*x*y"))
    '1/2*x*y + 3*z^2'
    """
    if mode not in ("polynomial", "laurent"):
        raise ValueError(f"mode must be 'polynomial' or 'laurent', not {mode!r}")
    return _Parser(text, tuple(vars), mode == "laurent").parse()


def gens(names: Iterable[str] = ("x", "y", "z"), laurent: bool = False) -> tuple[Poly, ...]:
    names = tuple(names)
    return Poly.gens(names, laurent)
