"""Exact scalars, sparse Laurent polynomials and truncated power series.

Everything the engine computes lives in one commutative ring: sparse Laurent
polynomials over the rationals in a set of named variables.  The variable
``y`` (Hirzebruch parameter), the power sums ``p_r`` and the free-algebra
generators ``A_r(v)``, ``D_r(v)``, ``Delta_r(v)`` are all just variables of
that ring, which keeps coefficient-ring bookkeeping out of every formula.

A variable is a tuple whose first entry is a string tag, so that sorting
monomials is always well defined:

* ``("y",)``                          the Hirzebruch parameter
* ``("p", r)``                        the power sum ``p_r``
* ``(family, r, label, degree)``      a free-algebra generator
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Mapping, Union

Rational = Fraction
Var = tuple
Monomial = tuple  # sorted tuple of (Var, nonzero int exponent)
Scalar = Union[int, Fraction]

Y: Var = ("y",)


def parse_rational(text: str | int | Fraction) -> Fraction:
    """Parse ``"num/den"`` (or an int) into a Fraction."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    text = str(text).strip()
    if not re.fullmatch(r"[+-]?\d+(/\d+)?", text):
        raise ValueError(f"not an exact rational literal: {text!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in {text!r}") from None


def format_rational(q: Scalar) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


@lru_cache(maxsize=1 << 16)
def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for v, e in b:
        s = exps.get(v, 0) + e
        if s:
            exps[v] = s
        else:
            del exps[v]
    return tuple(sorted(exps.items()))


class Poly:
    """Immutable sparse Laurent polynomial with rational coefficients.

    Zero coefficients are never stored, so two equal polynomials always have
    identical term dictionaries.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for mono, c in terms.items():
                c = Fraction(c)
                if not c:
                    continue
                exps: dict = {}
                for v, e in mono:
                    exps[v] = exps.get(v, 0) + int(e)
                mono = tuple(sorted((v, e) for v, e in exps.items() if e))
                s = clean.get(mono, 0) + c
                if s:
                    clean[mono] = s
                else:
                    clean.pop(mono, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "Poly":
        # trusted path: monomials canonical, coefficients nonzero Fractions
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: Scalar) -> "Poly":
        c = Fraction(c)
        return cls._raw({(): c} if c else {})

    @classmethod
    def var(cls, v: Var, exp: int = 1) -> "Poly":
        return cls._raw({((v, exp),): Fraction(1)} if exp else {(): Fraction(1)})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def variables(self) -> set:
        return {v for mono in self._terms for v, _ in mono}

    def is_constant(self) -> bool:
        return all(not mono for mono in self._terms)

    def constant_term(self) -> Fraction:
        return self._terms.get((), Fraction(0))

    # ring operations

    def __add__(self, other) -> "Poly":
        other = as_poly(other)
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for mono, c in other._terms.items():
            s = out.get(mono, 0) + c
            if s:
                out[mono] = s
            else:
                del out[mono]
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "Poly":
        return self + (-as_poly(other))

    def __rsub__(self, other) -> "Poly":
        return as_poly(other) - self

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            if not other:
                return ZERO
            return Poly._raw({m: c * other for m, c in self._terms.items()})
        other = as_poly(other)
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = _mono_mul(ma, mb)
                s = out.get(m, 0) + ca * cb
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Poly._raw(out)

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> "Poly":
        if not isinstance(other, (int, Fraction)):
            raise TypeError("only division by exact scalars is supported")
        return self * (1 / Fraction(other))

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("negative power of a non-monomial")
            (mono, c), = self._terms.items()
            return Poly._raw({tuple((v, e * k) for v, e in mono): Fraction(1) / c ** -k})
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == as_poly(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # structural maps

    def map_monomials(self, fn: Callable[[Monomial], tuple[Monomial, Fraction]]) -> "Poly":
        """Apply ``fn(mono) -> (new_mono, factor)`` termwise and collect.

        ``new_mono`` may be unsorted and may repeat variables.
        """
        out: dict = {}
        for mono, c in self._terms.items():
            new, factor = fn(mono)
            v = c * factor
            if not v:
                continue
            exps: dict = {}
            for var, e in new:
                exps[var] = exps.get(var, 0) + e
            new = tuple(sorted((var, e) for var, e in exps.items() if e))
            s = out.get(new, 0) + v
            if s:
                out[new] = s
            else:
                del out[new]
        return Poly._raw(out)

    def filter(self, keep: Callable[[Monomial], bool]) -> "Poly":
        return Poly._raw({m: c for m, c in self._terms.items() if keep(m)})

    def substitute(self, images: Callable[[Var], "Poly | Scalar | None"]) -> "Poly":
        """Ring homomorphism sending each variable ``v`` to ``images(v)``.

        ``images`` returns None for variables that stay fixed.
        """
        cache: dict = {}
        out: dict = {}
        for mono, c in self._terms.items():
            term = Poly.const(c)
            rest = []
            for v, e in mono:
                if v not in cache:
                    img = images(v)
                    cache[v] = None if img is None else as_poly(img)
                img = cache[v]
                if img is None:
                    rest.append((v, e))
                else:
                    term = term * img ** e
                    if not term:
                        break
            rest = tuple(rest)
            for m, tc in term._terms.items():
                m = _mono_mul(rest, m)
                s = out.get(m, 0) + tc
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Poly._raw(out)

    def coefficient_split(self, is_outer: Callable[[Var], bool]) -> dict[Monomial, "Poly"]:
        """Group terms by the part of the monomial made of ``is_outer`` variables."""
        groups: dict = {}
        for mono, c in self._terms.items():
            outer = tuple((v, e) for v, e in mono if is_outer(v))
            inner = tuple((v, e) for v, e in mono if not is_outer(v))
            groups.setdefault(outer, {})[inner] = c
        return {k: Poly._raw(v) for k, v in sorted(groups.items())}

    def sorted_items(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self._terms.items())

    def __repr__(self) -> str:
        return f"Poly({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mono, c in self.sorted_items():
            mono_s = "*".join(
                var_to_str(v) + (f"^{e}" if e != 1 else "") for v, e in mono
            )
            if not mono_s:
                parts.append(format_rational(c))
            elif c == 1:
                parts.append(mono_s)
            elif c == -1:
                parts.append("-" + mono_s)
            else:
                parts.append(format_rational(c) + "*" + mono_s)
        return " + ".join(parts).replace("+ -", "- ")


ZERO = Poly._raw({})
ONE = Poly._raw({(): Fraction(1)})
YPOLY = Poly.var(Y)


def as_poly(x) -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, (int, Fraction)):
        return Poly.const(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to Poly")


def var_to_str(v: Var) -> str:
    if v == Y:
        return "y"
    if v[0] == "p":
        return f"p{v[1]}"
    family, r, label, degree = v
    return f"{family}{r}[{label}:{degree}]"


_VAR_RE = re.compile(r"y|p(\d+)|(A|D|Delta)(\d+)\[([^:\]]+):(\d+)\]")


def str_to_var(text: str) -> Var:
    m = _VAR_RE.fullmatch(text)
    if not m:
        raise ValueError(f"unknown variable {text!r}")
    if text == "y":
        return Y
    if m.group(1):
        return ("p", int(m.group(1)))
    return (m.group(2), int(m.group(3)), m.group(4), int(m.group(5)))


# Laurent polynomials in y


def laurent(terms: Mapping[int, Scalar]) -> Poly:
    """Build the Laurent polynomial sum of c * y**e."""
    return Poly({(((Y, e),) if e else ()): c for e, c in terms.items()})


def is_laurent(f: Poly) -> bool:
    return f.variables() <= {Y}


def laurent_terms(f: Poly) -> dict[int, Fraction]:
    if not is_laurent(f):
        raise ValueError(f"not a Laurent polynomial in y: {f}")
    return {(mono[0][1] if mono else 0): c for mono, c in f.sorted_items()}


def laurent_substitute(f: Poly, r: int) -> Poly:
    """y -> y**r on any polynomial; other variables are untouched."""
    if r < 1:
        raise ValueError("r must be a positive integer")
    if r == 1:
        return f

    def scale(mono):
        return tuple((v, e * r) if v == Y else (v, e) for v, e in mono), 1

    return f.map_monomials(scale)


def format_laurent(f: Poly) -> str:
    """Compact text form, ascending in y: ``1+y+y^2``, ``y^-1-1/2y^3``."""
    terms = laurent_terms(f)
    if not terms:
        return "0"
    out = []
    for e in sorted(terms):
        c = terms[e]
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if e == 0:
            body = format_rational(a)
        else:
            ypart = "y" if e == 1 else f"y^{e}"
            body = ypart if a == 1 else format_rational(a) + ypart
        out.append(sign + body)
    text = "".join(out)
    return text[1:] if text.startswith("+") else text


_TOKEN = re.compile(r"\s*(?:(\d+)|(y)|([-+*/^()]))")


def parse_laurent(text: str) -> Poly:
    """Parse expressions such as ``1+y``, ``y^-1+2y^3``, ``-(1/2)*y^2``.

    Grammar: ``expr := term (('+'|'-') term)*``, a term is an optional sign,
    an optional rational coefficient and an optional ``y^k`` factor.
    """
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"unexpected character at {pos} in {text!r}")
        tokens.append(m.group(1) or m.group(2) or m.group(3))
        pos = m.end()
    if not tokens:
        raise ValueError("empty expression")
    parser = _LaurentParser(tokens)
    result = parser.expr()
    if parser.i != len(tokens):
        raise ValueError(f"trailing input in {text!r}")
    return result


class _LaurentParser:
    def __init__(self, tokens: list[str]):
        self.tokens = tokens
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise ValueError(f"expected {expected or 'token'}, got {tok!r}")
        self.i += 1
        return tok

    def expr(self) -> Poly:
        total = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            t = self.term()
            total = total + t if op == "+" else total - t
        return total

    def term(self) -> Poly:
        sign = 1
        while self.peek() in ("+", "-"):
            if self.take() == "-":
                sign = -sign
        coeff = None
        if self.peek() == "(":
            self.take("(")
            coeff = self.expr()
            self.take(")")
        elif self.peek() is not None and self.peek().isdigit():
            num = int(self.take())
            den = 1
            if self.peek() == "/":
                self.take("/")
                den = int(self.take())
                if den == 0:
                    raise ValueError("zero denominator")
            coeff = Poly.const(Fraction(num, den))
        if self.peek() == "*":
            self.take("*")
            if self.peek() != "y":
                raise ValueError("expected y after '*'")
        factor = None
        if self.peek() == "y":
            self.take("y")
            exp = 1
            if self.peek() == "^":
                self.take("^")
                esign = 1
                if self.peek() in ("+", "-"):
                    esign = -1 if self.take() == "-" else 1
                exp = esign * int(self.take())
            factor = Poly.var(Y, exp)
        if coeff is None and factor is None:
            where = "end of input" if self.peek() is None else repr(self.peek())
            raise ValueError(f"expected a term at {where}")
        result = (coeff if coeff is not None else ONE) * (factor if factor is not None else ONE)
        return result * sign


# truncated power series in t


class TruncSeries:
    """Power series in t modulo t**(order+1) with Poly coefficients."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable, order: int):
        if order < 0:
            raise ValueError("order must be non-negative")
        cs = [as_poly(c) for c in coeffs][: order + 1]
        cs += [ZERO] * (order + 1 - len(cs))
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls, order: int) -> "TruncSeries":
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> "TruncSeries":
        return cls([ONE], order)

    def __getitem__(self, n: int) -> Poly:
        return self.coeffs[n]

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self) -> int:
        return self.order + 1

    def truncate(self, order: int) -> "TruncSeries":
        return TruncSeries(self.coeffs, order)

    def _check(self, other: "TruncSeries"):
        if other.order != self.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        self._check(other)
        return TruncSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        self._check(other)
        return TruncSeries([a - b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __neg__(self) -> "TruncSeries":
        return TruncSeries([-a for a in self.coeffs], self.order)

    def __mul__(self, other) -> "TruncSeries":
        if not isinstance(other, TruncSeries):
            return TruncSeries([a * other for a in self.coeffs], self.order)
        self._check(other)
        N = self.order
        out = []
        for n in range(N + 1):
            acc = ZERO
            for k in range(n + 1):
                a, b = self.coeffs[k], other.coeffs[n - k]
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return TruncSeries(out, N)

    __rmul__ = __mul__

    def map(self, fn: Callable[[Poly], Poly]) -> "TruncSeries":
        return TruncSeries([fn(c) for c in self.coeffs], self.order)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        body = ", ".join(str(c) for c in self.coeffs)
        return f"TruncSeries([{body}], order={self.order})"


def series_exp(f: TruncSeries, N: int) -> TruncSeries:
    """exp(f) mod t**(N+1) for f without constant term.

    Uses n*g_n = sum_{k=1..n} k*f_k*g_{n-k}, valid over any commutative
    Q-algebra.
    """
    if N > f.order:
        raise ValueError(f"requested order {N} exceeds input order {f.order}")
    if f[0]:
        raise ValueError("exp needs a series with zero constant term")
    g = [ONE]
    for n in range(1, N + 1):
        acc = ZERO
        for k in range(1, n + 1):
            if f[k] and g[n - k]:
                acc = acc + (f[k] * g[n - k]) * k
        g.append(acc / n)
    return TruncSeries(g, N)


def series_log(f: TruncSeries, N: int) -> TruncSeries:
    """log(f) mod t**(N+1) for f with constant term 1."""
    if N > f.order:
        raise ValueError(f"requested order {N} exceeds input order {f.order}")
    if f[0] != ONE:
        raise ValueError("log needs a series with constant term 1")
    g = [ZERO]
    for n in range(1, N + 1):
        acc = f[n] * n
        for k in range(1, n):
            if g[k] and f[n - k]:
                acc = acc - (g[k] * f[n - k]) * k
        g.append(acc / n)
    return TruncSeries(g, N)


# JSON forms


def rational_to_json(q: Scalar) -> str:
    return format_rational(q)


def laurent_to_json(f: Poly) -> dict[str, str]:
    return {str(e): format_rational(c) for e, c in sorted(laurent_terms(f).items())}


def laurent_from_json(obj: Mapping[str, str]) -> Poly:
    return laurent({int(e): parse_rational(c) for e, c in obj.items()})


def monomial_key(mono: Monomial) -> str:
    if not mono:
        return "1"
    return "*".join(var_to_str(v) + (f"^{e}" if e != 1 else "") for v, e in mono)


def parse_monomial_key(key: str) -> Monomial:
    if key == "1":
        return ()
    out = []
    for factor in key.split("*"):
        base, _, exp = factor.partition("^")
        out.append((str_to_var(base), int(exp) if exp else 1))
    return tuple(sorted(out))


def poly_to_json(f: Poly) -> dict[str, str]:
    """Canonical ``{monomial-key: "num/den"}`` map (keys in sorted monomial order)."""
    return {monomial_key(m): format_rational(c) for m, c in f.sorted_items()}


def poly_from_json(obj: Mapping[str, str]) -> Poly:
    return Poly({parse_monomial_key(k): parse_rational(v) for k, v in obj.items()})


def series_to_json(s: TruncSeries) -> list[dict[str, str]]:
    return [poly_to_json(c) for c in s.coeffs]


def series_from_json(obj: list) -> TruncSeries:
    return TruncSeries([poly_from_json(c) for c in obj], len(obj) - 1)
