"""The coefficient map induced by splitting a root off a monic polynomial.

Fix n >= 2 and consider the family P(w; b) = w^n + b_{n-2} w^{n-2} + ...
+ b_0 (no w^{n-1} term) together with the family of possible cofactors
Q(w; lam, t) = w^{n-1} + lam w^{n-2} + t_{n-3} w^{n-3} + ... + t_0.
Requiring P = (w - lam) Q determines b from (lam, t); that assignment is
the map built here:

    b_{n-2} = -lam^2 + t_{n-3},
    b_i     = -lam t_i + t_{i-1}      (1 <= i <= n-3),
    b_0     = -lam t_0.

The module verifies the product identity symbolically, inverts the map
modulo the relation P(lam; b) = 0, checks that the Jacobian determinant
is (up to sign) the cofactor evaluated at its root, and counts fiber
points over rational base points.  Everything is exact.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .poly import Poly, discriminant, PolyMatrix, univariate_gcd


def _b_names(n):
    return tuple(f"b{i}" for i in range(n - 2, -1, -1))


def _t_names(n):
    return tuple(f"t{i}" for i in range(n - 3, -1, -1))


@dataclass(frozen=True)
class RootFactorMap:
    """Degree-n root-splitting data: target family P, cofactor family Q,
    and the coefficient map components in the order b_{n-2}, ..., b_0."""

    n: int
    target: Poly      # P(w; b) over ("w", b_{n-2}, ..., b_0)
    cofactor: Poly    # Q(w; lam, t) over ("w", "lam", t_{n-3}, ..., t_0)
    components: tuple  # over ("lam", t_{n-3}, ..., t_0)

    @property
    def b_names(self):
        return _b_names(self.n)

    @property
    def t_names(self):
        return _t_names(self.n)

    @property
    def map_vars(self):
        return ("lam",) + self.t_names


def build(n: int) -> RootFactorMap:
    if not isinstance(n, int) or n < 2:
        raise ValueError("degree n must be an integer >= 2")
    bs = _b_names(n)
    ts = _t_names(n)

    pv = ("w",) + bs
    w = Poly.var(pv, "w")
    target = w**n
    for i, name in enumerate(bs):
        target = target + Poly.var(pv, name) * w ** (n - 2 - i)

    qv = ("w", "lam") + ts
    wq = Poly.var(qv, "w")
    cofactor = wq ** (n - 1) + Poly.var(qv, "lam") * wq ** (n - 2)
    for i, name in enumerate(ts):
        cofactor = cofactor + Poly.var(qv, name) * wq ** (n - 3 - i)

    mv = ("lam",) + ts
    lam = Poly.var(mv, "lam")
    t = [Poly.var(mv, name) for name in ts]
    comps = []
    if n == 2:
        comps.append(-(lam**2))
    else:
        comps.append(-(lam**2) + t[0])
        for k in range(len(ts) - 1):
            comps.append(-lam * t[k] + t[k + 1])
        comps.append(-lam * t[-1])
    return RootFactorMap(n=n, target=target, cofactor=cofactor, components=tuple(comps))


def _full_ring(m: RootFactorMap):
    return ("w", "lam") + m.t_names


def verify_factor_identity(m: RootFactorMap) -> bool:
    """P(w; b)|_{b -> map} == (w - lam) * Q(w; lam, t), exactly."""
    ring = _full_ring(m)
    w = Poly.var(ring, "w")
    lam = Poly.var(ring, "lam")
    mapping = {"w": w}
    for name, comp in zip(m.b_names, m.components):
        mapping[name] = comp.in_ambient(ring)
    lhs = m.target.substitute(mapping)
    rhs = (w - lam) * m.cofactor.in_ambient(ring)
    return lhs == rhs


def inverse_t(m: RootFactorMap) -> tuple:
    """The t_i recovered from a root lam of P(.; b):

        t_i = lam^{n-1-i} + b_{n-2} lam^{n-3-i} + ... + b_{i+1},

    returned in the order t_{n-3}, ..., t_0 over ("lam", b...).  Empty
    for n = 2, where the map has no t coordinates."""
    n = m.n
    ring = ("lam",) + m.b_names
    lam = Poly.var(ring, "lam")
    out = []
    for i in range(n - 3, -1, -1):
        acc = lam ** (n - 1 - i)
        for j in range(i + 1, n - 1):
            acc = acc + Poly.var(ring, f"b{j}") * lam ** (j - i - 1)
        out.append(acc)
    return tuple(out)


def reduce_mod_monic(p: Poly, modulus: Poly, name: str) -> Poly:
    """Remainder of p modulo a polynomial monic in `name` (coefficients
    in the remaining variables); exact division-free reduction."""
    d = modulus.degree_in(name)
    if d < 1:
        raise ValueError("modulus must have positive degree")
    lead = modulus.coefficient_in(name, d)
    if not lead == Poly.const(modulus.vars, 1):
        raise ValueError("modulus must be monic")
    x = Poly.var(p.vars, name)
    r = p
    while not r.is_zero() and r.degree_in(name) >= d:
        k = r.degree_in(name)
        c = r.coefficient_in(name, k)
        r = r - c * x ** (k - d) * modulus.in_ambient(p.vars)
    return r


def target_at_root(m: RootFactorMap) -> Poly:
    """P(lam; b) over ("lam", b...)."""
    ring = ("lam",) + m.b_names
    return m.target.substitute({"w": Poly.var(ring, "lam")})


def inverse_composition_reduces(m: RootFactorMap) -> bool:
    """Substituting t = inverse_t into the map returns each b_j exactly
    modulo the single relation P(lam; b) = 0."""
    ring = ("lam",) + m.b_names
    inv = inverse_t(m)
    mapping = dict(zip(m.t_names, inv))
    rel = target_at_root(m)
    for name, comp in zip(m.b_names, m.components):
        comp_b = comp.in_ambient(("lam",) + m.t_names).substitute(mapping or {"lam": Poly.var(ring, "lam")})
        diff = comp_b.in_ambient(ring) - Poly.var(ring, name)
        if not reduce_mod_monic(diff, rel, "lam").is_zero():
            return False
    return True


@dataclass(frozen=True)
class JacobianResult:
    matches: bool
    sign: int | None       # determinant == sign * Q(lam; lam, t)
    determinant: Poly
    cofactor_at_root: Poly


def jacobian_identity(m: RootFactorMap) -> JacobianResult:
    """Determinant of d(map)/d(lam, t) against +-Q(lam; lam, t).

    The sign is recorded, not asserted: it alternates with n, and the
    caller only relies on the match being exact up to sign."""
    mv = ("lam",) + m.t_names
    rows = []
    for v in mv:
        rows.append([comp.differentiate(v) for comp in m.components])
    det = PolyMatrix(rows).determinant()
    q_at = m.cofactor.substitute({"w": Poly.var(mv, "lam")})
    if det == q_at:
        return JacobianResult(True, 1, det, q_at)
    if det == -q_at:
        return JacobianResult(True, -1, det, q_at)
    return JacobianResult(False, None, det, q_at)


@dataclass(frozen=True)
class FiberPoint:
    lam: Fraction
    t: tuple  # Fractions, ordered t_{n-3}, ..., t_0


@dataclass(frozen=True)
class FiberResult:
    count: int               # number of distinct complex roots of P(.; b)
    is_generic: bool         # count == n
    discriminant: Fraction
    points: tuple            # rational fiber points (exact)


def fiber_count(m: RootFactorMap, b_values) -> FiberResult:
    """Fiber of the map over a rational point b = (b_{n-2}, ..., b_0).

    The fiber cardinality equals the number of distinct roots of
    P(.; b): n minus the degree of gcd(P, P').  Rational roots are
    returned as explicit fiber points with exact t coordinates."""
    vals = [Fraction(v) for v in b_values]
    if len(vals) != m.n - 1:
        raise ValueError(f"need {m.n - 1} coefficients b_{{n-2}}..b_0, got {len(vals)}")
    assign = dict(zip(m.b_names, vals))
    pb = m.target.substitute({k: v for k, v in assign.items()})
    dpb = pb.differentiate("w")
    g = univariate_gcd(pb, dpb, "w")
    count = m.n - g.degree_in("w")
    disc = discriminant(pb, "w").constant_term()

    inv = inverse_t(m)
    points = []
    for root in _rational_roots(pb, "w", assign):
        point = {"lam": root, **assign}
        ts = tuple(p.evaluate(point) for p in inv)
        points.append(FiberPoint(lam=root, t=ts))
    return FiberResult(
        count=count,
        is_generic=(count == m.n),
        discriminant=disc,
        points=tuple(points),
    )


def apply_map(m: RootFactorMap, lam, t_values) -> tuple:
    """Evaluate the coefficient map at a rational (lam, t)."""
    point = {"lam": Fraction(lam)}
    point.update({name: Fraction(v) for name, v in zip(m.t_names, t_values)})
    return tuple(comp.evaluate(point) for comp in m.components)


def _divisors(n):
    n = abs(n)
    out = set()
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.add(d)
            out.add(n // d)
        d += 1
    return sorted(out)


def _rational_roots(p: Poly, name: str, assign) -> list:
    """Distinct rational roots of a univariate-in-`name` polynomial with
    rational coefficients (other ambient variables already numeric)."""
    deg = p.degree_in(name)
    coeffs = [p.coefficient_in(name, k).constant_term() for k in range(deg + 1)]
    denom_lcm = 1
    for c in coeffs:
        denom_lcm = denom_lcm * c.denominator // _gcd(denom_lcm, c.denominator)
    ints = [int(c * denom_lcm) for c in coeffs]
    roots = []
    low = next(k for k, a in enumerate(ints) if a)
    if low > 0:
        roots.append(Fraction(0))
    lead = ints[deg]
    trail = ints[low]
    seen = set()
    for pnum in _divisors(trail):
        for qden in _divisors(lead):
            for sign in (1, -1):
                cand = Fraction(sign * pnum, qden)
                if cand in seen:
                    continue
                seen.add(cand)
                if p.evaluate({name: cand, **assign}) == 0:
                    roots.append(cand)
    return sorted(roots)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


@dataclass(frozen=True)
class RamificationResult:
    ok: bool
    symbolic_ok: bool
    numeric_ok: bool
    samples: int


def ramification_check(m: RootFactorMap, samples: int = 24, seed: int = 0) -> RamificationResult:
    """P'(lam)|_{b -> map} == Q(lam; lam, t): the map is ramified exactly
    where the split root collides with a root of the cofactor.  Checked
    symbolically and on seeded rational samples."""
    mv = ("lam",) + m.t_names
    lam_poly = Poly.var(mv, "lam")
    mapping = {"w": lam_poly}
    for name, comp in zip(m.b_names, m.components):
        mapping[name] = comp
    dp_at = m.target.differentiate("w").substitute(mapping)
    q_at = m.cofactor.substitute({"w": lam_poly})
    symbolic_ok = dp_at == q_at

    rng = random.Random(seed)
    numeric_ok = True
    for _ in range(samples):
        point = {"lam": Fraction(rng.randint(-9, 9), rng.randint(1, 4))}
        for name in m.t_names:
            point[name] = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        if dp_at.evaluate(point) != q_at.evaluate(point):
            numeric_ok = False
            break
    return RamificationResult(
        ok=symbolic_ok and numeric_ok,
        symbolic_ok=symbolic_ok,
        numeric_ok=numeric_ok,
        samples=samples,
    )
