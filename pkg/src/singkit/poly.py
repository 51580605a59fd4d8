"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial is a dict from exponent tuples to nonzero Fractions over a
fixed ordered tuple of variable names (the ambient).  All arithmetic is
exact; floats are never accepted.  Printing uses graded lexicographic
term order (descending) and the printed form parses back to an equal
polynomial.

Input grammar (whitespace insignificant)::

    expr   := ['-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' uint)?
    atom   := name | rational | '(' expr ')'
    rational := uint ('/' uint)?

The optional leading '-' is the one extension over the bare sum-of-terms
form; it is what the printer emits for a negative head coefficient.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import ParseError

Exps = tuple  # exponent tuple, one nonnegative int per ambient variable


def _coerce(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"coefficient must be int or Fraction, got {type(c).__name__}")


class Poly:
    """Immutable-by-convention sparse polynomial over Q."""

    __slots__ = ("vars", "terms")

    def __init__(self, vars: Iterable[str], terms: Mapping[Exps, Fraction] | None = None):
        vs = tuple(vars)
        if len(set(vs)) != len(vs):
            raise ValueError("duplicate variable names in ambient")
        self.vars = vs
        clean = {}
        if terms:
            n = len(vs)
            for exps, c in terms.items():
                e = tuple(exps)
                if len(e) != n:
                    raise ValueError(f"exponent tuple {e} does not match ambient of {n} variables")
                if any(x < 0 or not isinstance(x, int) for x in e):
                    raise ValueError(f"exponents must be nonnegative integers: {e}")
                c = _coerce(c)
                if c:
                    clean[e] = c
        self.terms = clean

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, vars) -> "Poly":
        return cls(vars)

    @classmethod
    def const(cls, vars, c) -> "Poly":
        vs = tuple(vars)
        return cls(vs, {(0,) * len(vs): _coerce(c)})

    @classmethod
    def var(cls, vars, name: str) -> "Poly":
        vs = tuple(vars)
        if name not in vs:
            raise ValueError(f"unknown variable {name!r} for ambient {vs}")
        e = [0] * len(vs)
        e[vs.index(name)] = 1
        return cls(vs, {tuple(e): Fraction(1)})

    # -- basic queries ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * len(self.vars), Fraction(0))

    def total_degree(self) -> int:
        """Max total degree of the terms; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def order_at_origin(self) -> int:
        """Min total degree of the terms; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return min(sum(e) for e in self.terms)

    def degree_in(self, name: str) -> int:
        if not self.terms:
            return -1
        i = self.vars.index(name)
        return max(e[i] for e in self.terms)

    def is_univariate_in(self, name: str) -> bool:
        i = self.vars.index(name)
        return all(all(x == 0 for j, x in enumerate(e) if j != i) for e in self.terms)

    def coefficient_in(self, name: str, k: int) -> "Poly":
        """Coefficient of name**k, as a polynomial in the same ambient."""
        i = self.vars.index(name)
        out = {}
        for e, c in self.terms.items():
            if e[i] == k:
                out[e[:i] + (0,) + e[i + 1:]] = c
        return Poly(self.vars, out)

    # -- arithmetic -------------------------------------------------------

    def _check_same(self, other: "Poly"):
        if self.vars != other.vars:
            raise ValueError(f"ambient mismatch: {self.vars} vs {other.vars}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.vars, other)
        self._check_same(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Poly(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.vars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _coerce(other)
            if not c:
                return Poly(self.vars)
            return Poly(self.vars, {e: c * v for e, v in self.terms.items()})
        self._check_same(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return Poly(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = Poly.const(self.vars, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.vars, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    # -- calculus and substitution ----------------------------------------

    def differentiate(self, name: str) -> "Poly":
        i = self.vars.index(name)
        out = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            d = e[:i] + (e[i] - 1,) + e[i + 1:]
            out[d] = c * e[i]
        return Poly(self.vars, out)

    def substitute(self, mapping: Mapping[str, "Poly | int | Fraction"]) -> "Poly":
        """Substitute polynomials (or constants) for variables.

        All polynomial images must share one target ambient; variables not
        mentioned in the mapping are carried over by name and must exist in
        the target ambient.
        """
        target = None
        for img in mapping.values():
            if isinstance(img, Poly):
                if target is None:
                    target = img.vars
                elif img.vars != target:
                    raise ValueError(f"ambient mismatch among images: {target} vs {img.vars}")
        if target is None:
            target = self.vars
        images = []
        for i, v in enumerate(self.vars):
            if v in mapping:
                img = mapping[v]
                if not isinstance(img, Poly):
                    img = Poly.const(target, img)
                images.append(img)
            elif any(e[i] for e in self.terms):
                images.append(Poly.var(target, v))  # raises if v missing from target
            else:
                images.append(None)  # never consumed
        out = Poly.zero(target)
        for e, c in self.terms.items():
            part = Poly.const(target, c)
            for img, k in zip(images, e):
                if k:
                    part = part * img**k
            out = out + part
        return out

    def in_ambient(self, vars) -> "Poly":
        """Re-express in a different ambient, matching variables by name."""
        vs = tuple(vars)
        pos = {}
        for i, v in enumerate(self.vars):
            if v in vs:
                pos[i] = vs.index(v)
            elif any(e[i] for e in self.terms):
                raise ValueError(f"variable {v!r} used but absent from target ambient {vs}")
        out = {}
        for e, c in self.terms.items():
            ne = [0] * len(vs)
            for i, x in enumerate(e):
                if x:
                    ne[pos[i]] = x
            out[tuple(ne)] = out.get(tuple(ne), 0) + c
        return Poly(vs, out)

    def evaluate(self, point: Mapping[str, Fraction | int]) -> Fraction:
        """Evaluate at a full rational point."""
        vals = []
        for v in self.vars:
            if v not in point:
                raise ValueError(f"no value supplied for variable {v!r}")
            vals.append(_coerce(point[v]))
        acc = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for val, k in zip(vals, e):
                if k:
                    t *= val**k
            acc += t
        return acc

    # -- exact division (used by fraction-free elimination) ---------------

    def exact_divide(self, divisor: "Poly") -> "Poly":
        """Quotient self/divisor when the division is exact; raises otherwise."""
        self._check_same(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return Poly(self.vars)
        key = lambda e: (sum(e), e)  # graded lex
        dlead = max(divisor.terms, key=key)
        dc = divisor.terms[dlead]
        rem = dict(self.terms)
        quot = {}
        while rem:
            rlead = max(rem, key=key)
            diff = tuple(a - b for a, b in zip(rlead, dlead))
            if any(x < 0 for x in diff):
                raise ArithmeticError("polynomial division is not exact")
            qc = rem[rlead] / dc
            quot[diff] = qc
            for e, c in divisor.terms.items():
                t = tuple(a + b for a, b in zip(diff, e))
                s = rem.get(t, 0) - qc * c
                if s:
                    rem[t] = s
                else:
                    rem.pop(t, None)
        return Poly(self.vars, quot)

    # -- printing ----------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        ordered = sorted(self.terms, key=lambda e: (sum(e), e), reverse=True)
        pieces = []
        for e, first in zip(ordered, [True] + [False] * (len(ordered) - 1)):
            c = self.terms[e]
            mono = "*".join(
                v if k == 1 else f"{v}^{k}"
                for v, k in zip(self.vars, e)
                if k
            )
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if first:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f" + {body}" if c > 0 else f" - {body}")
        return "".join(pieces)

    def __repr__(self):
        return f"Poly({self.vars!r}, {str(self)!r})"


# -- parsing ----------------------------------------------------------------

_TOKEN = re.compile(r"(?P<ws>\s+)|(?P<int>\d+)|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+*^()/])")


def _tokenize(text: str):
    toks = []
    i = 0
    while i < len(text):
        m = _TOKEN.match(text, i)
        if not m:
            raise ParseError(f"unexpected character {text[i]!r}", i)
        if m.lastgroup != "ws":
            toks.append((m.lastgroup, m.group(), i))
        i = m.end()
    return toks


class _Parser:
    def __init__(self, text: str, vars):
        self.text = text
        self.toks = _tokenize(text)
        self.pos = 0
        self.vars = tuple(vars)

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else (None, None, len(self.text))

    def next(self):
        t = self.peek()
        self.pos += 1
        return t

    def expr(self) -> Poly:
        kind, val, at = self.peek()
        negate = False
        if kind == "op" and val == "-":
            self.next()
            negate = True
        acc = self.term()
        if negate:
            acc = -acc
        while True:
            kind, val, at = self.peek()
            if kind == "op" and val in "+-":
                self.next()
                t = self.term()
                acc = acc + t if val == "+" else acc - t
            else:
                return acc

    def term(self) -> Poly:
        acc = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.next()
                acc = acc * self.factor()
            else:
                return acc

    def factor(self) -> Poly:
        base = self.atom()
        kind, val, at = self.peek()
        if kind == "op" and val == "^":
            self.next()
            kind, val, at = self.peek()
            if kind != "int":
                raise ParseError("exponent must be a nonnegative integer literal", at)
            self.next()
            return base ** int(val)
        return base

    def atom(self) -> Poly:
        kind, val, at = self.next()
        if kind == "int":
            num = int(val)
            kind2, val2, _ = self.peek()
            if kind2 == "op" and val2 == "/":
                self.next()
                kind3, val3, at3 = self.peek()
                if kind3 != "int":
                    raise ParseError("expected integer denominator", at3)
                self.next()
                if int(val3) == 0:
                    raise ParseError("zero denominator in rational literal", at3)
                return Poly.const(self.vars, Fraction(num, int(val3)))
            return Poly.const(self.vars, num)
        if kind == "name":
            if val not in self.vars:
                raise ParseError(f"undeclared variable {val!r}", at)
            return Poly.var(self.vars, val)
        if kind == "op" and val == "(":
            inner = self.expr()
            kind2, val2, at2 = self.peek()
            if kind2 != "op" or val2 != ")":
                raise ParseError("expected ')'", at2)
            self.next()
            return inner
        if kind is None:
            raise ParseError("unexpected end of input", at)
        raise ParseError(f"unexpected {val!r}", at)


def parse_polynomial(text: str, vars) -> Poly:
    """Parse polynomial text over the given ordered variable names."""
    p = _Parser(text, vars)
    if not p.toks:
        raise ParseError("empty input", 0)
    out = p.expr()
    kind, val, at = p.peek()
    if kind is not None:
        raise ParseError(f"unexpected {val!r}", at)
    return out


# -- matrices ----------------------------------------------------------------

class PolyMatrix:
    """Dense matrix of Poly entries sharing one ambient."""

    def __init__(self, rows):
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise ValueError("matrix must be nonempty")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged rows")
        amb = rows[0][0].vars
        for r in rows:
            for p in r:
                if p.vars != amb:
                    raise ValueError("ambient mismatch among matrix entries")
        self.rows = rows
        self.shape = (len(rows), width)
        self.vars = amb

    def determinant(self) -> Poly:
        """Exact determinant: cofactor expansion up to 4x4, fraction-free
        (Bareiss) elimination above that."""
        n, m = self.shape
        if n != m:
            raise ValueError(f"determinant of non-square {n}x{m} matrix")
        if n <= 4:
            return _det_cofactor(self.rows)
        return _det_bareiss(self.rows)


def _det_cofactor(rows) -> Poly:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    amb = rows[0][0].vars
    acc = Poly.zero(amb)
    for j, entry in enumerate(rows[0]):
        if entry.is_zero():
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        sub = _det_cofactor(minor)
        acc = acc + entry * sub if j % 2 == 0 else acc - entry * sub
    return acc


def _det_bareiss(rows) -> Poly:
    m = [r[:] for r in rows]
    n = len(m)
    amb = m[0][0].vars
    one = Poly.const(amb, 1)
    prev = one
    sign = 1
    for k in range(n - 1):
        if m[k][k].is_zero():
            for i in range(k + 1, n):
                if not m[i][k].is_zero():
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return Poly.zero(amb)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[k][k] * m[i][j] - m[i][k] * m[k][j]
                m[i][j] = num.exact_divide(prev)
            m[i][k] = Poly.zero(amb)
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


# -- univariate tools ---------------------------------------------------------

def univariate_gcd(p: Poly, q: Poly, name: str) -> Poly:
    """Monic gcd of two polynomials univariate in `name` over Q."""
    for f in (p, q):
        if not f.is_univariate_in(name):
            raise ValueError(f"{f} is not univariate in {name!r}")
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd(0, 0) is undefined")

    def monic(f: Poly) -> Poly:
        lc = f.coefficient_in(name, f.degree_in(name)).constant_term()
        return f * (1 / lc)

    a, b = p, q
    while not b.is_zero():
        a, b = b, _uni_rem(a, b, name)
    return monic(a)


def _uni_rem(a: Poly, b: Poly, name: str) -> Poly:
    db = b.degree_in(name)
    lb = b.coefficient_in(name, db).constant_term()
    x = Poly.var(a.vars, name)
    r = a
    while not r.is_zero() and r.degree_in(name) >= db:
        dr = r.degree_in(name)
        lr = r.coefficient_in(name, dr).constant_term()
        r = r - b * x ** (dr - db) * (lr / lb)
    return r


def resultant(p: Poly, q: Poly, name: str) -> Poly:
    """Sylvester resultant with respect to `name`; the result does not
    involve `name`."""
    dp, dq = p.degree_in(name), q.degree_in(name)
    if p.is_zero() or q.is_zero():
        raise ValueError("resultant with a zero polynomial")
    if dp == 0 and dq == 0:
        return Poly.const(p.vars, 1)
    if dp == 0:
        return p ** dq
    if dq == 0:
        return q ** dp
    pc = [p.coefficient_in(name, k) for k in range(dp, -1, -1)]
    qc = [q.coefficient_in(name, k) for k in range(dq, -1, -1)]
    size = dp + dq
    zero = Poly.zero(p.vars)
    rows = []
    for i in range(dq):
        rows.append([zero] * i + pc + [zero] * (size - i - dp - 1))
    for i in range(dp):
        rows.append([zero] * i + qc + [zero] * (size - i - dq - 1))
    return PolyMatrix(rows).determinant()


def discriminant(p: Poly, name: str) -> Poly:
    """Discriminant in `name`: (-1)^(d(d-1)/2) * Res(p, p') / leadcoeff."""
    d = p.degree_in(name)
    if d < 1:
        raise ValueError("discriminant requires degree >= 1")
    lead = p.coefficient_in(name, d)
    res = resultant(p, p.differentiate(name), name)
    quot = res.exact_divide(lead)
    return quot if (d * (d - 1) // 2) % 2 == 0 else -quot
