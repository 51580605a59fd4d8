"""Invariants of threefold germs x^2 + y^2 + g(z,w) with small resolutions.

The germ is the double suspension of a reduced plane curve g.  Its small
resolution data is governed by plane-curve numbers: delta of g, the
number of exceptional curves r, and the Tjurina number of the threefold.
From those, b = delta - r counts independent exceptional cohomology
classes and a = 2b + r - tau measures the failure of the singularity to
admit a good torus action (a = 0 exactly for a quasi-homogeneous germ).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import ConfigError, ConsistencyError
from .localring import (
    INFINITE,
    milnor_number,
    quasi_homogeneous_weights,
    tjurina_number,
)
from .poly import Poly, parse_polynomial, univariate_gcd


class Family(str, Enum):
    DISTINCT_LINES = "distinct_lines"  # g = n distinct lines through 0
    A1_TIMES = "a1_times"              # g = z^2 + w^(2n)
    CUSTOM = "custom"


@dataclass(frozen=True)
class SuspendedCurveGerm:
    """A germ x^2 + y^2 + g(z,w), tagged with how its curve arose."""

    g: Poly
    family: Family
    n: int | None = None
    branches: int | None = None
    r_override: int | None = None

    def __post_init__(self):
        g = self.g
        if len(g.vars) != 2:
            raise ConfigError("g must live in exactly two variables")
        if g.is_zero():
            raise ConfigError("g must be nonzero")
        if g.constant_term():
            raise ConfigError("g must vanish at the origin")
        fam = self.family
        if fam in (Family.DISTINCT_LINES, Family.A1_TIMES):
            if self.n is None or self.n < 1:
                raise ConfigError(f"family {fam.value} needs a positive n")
            if self.branches is not None or self.r_override is not None:
                raise ConfigError(f"family {fam.value} derives branches and r itself")
        if fam is Family.DISTINCT_LINES:
            if self.n < 2:
                raise ConfigError("distinct_lines needs n >= 2")
            _check_distinct_lines(g, self.n)
        elif fam is Family.A1_TIMES:
            u, v = g.vars
            want = (
                Poly.var(g.vars, u) ** 2 + Poly.var(g.vars, v) ** (2 * self.n)
            )
            if g != want:
                raise ConfigError(
                    f"a1_times({self.n}) requires g = {u}^2 + {v}^{2 * self.n}, got {g}"
                )
        elif fam is Family.CUSTOM:
            if self.branches is None or self.branches < 1:
                raise ConfigError("custom germs need an explicit positive branch count")
        else:  # pragma: no cover
            raise ConfigError(f"unknown family {fam!r}")

    @property
    def branch_count(self) -> int:
        if self.family is Family.DISTINCT_LINES:
            return self.n
        if self.family is Family.A1_TIMES:
            return 2  # z^2 + w^(2n) = (z + i w^n)(z - i w^n)
        return self.branches


def _check_distinct_lines(g: Poly, n: int):
    if any(sum(e) != n for e in g.terms):
        raise ConfigError(f"distinct_lines({n}) requires g homogeneous of degree {n}")
    z, w = g.vars
    u = g.substitute({w: Poly.const(g.vars, 1)})
    du = u.degree_in(z)
    if n - du > 1:
        raise ConfigError("g has a repeated line (w divides twice)")
    if du > 0:
        gcd = univariate_gcd(u, u.differentiate(z), z)
        if gcd.degree_in(z) > 0:
            raise ConfigError("g has a repeated line")


def plane_delta_invariant(g: Poly, branches: int) -> int:
    """delta = (mu + branches - 1) / 2 for a reduced plane curve germ."""
    if branches < 1:
        raise ValueError("branch count must be positive")
    mu = milnor_number(g)
    if mu == INFINITE:
        raise ValueError("plane curve is not reduced (non-isolated singularity)")
    if (mu + branches - 1) % 2:
        raise ConsistencyError(
            "delta parity",
            f"mu + branches - 1 = {mu + branches - 1} is odd; branch count is wrong",
        )
    return (mu + branches - 1) // 2


def exceptional_curve_count(s: SuspendedCurveGerm) -> int:
    """Number of exceptional curves of the small resolution."""
    if s.family is Family.DISTINCT_LINES:
        return s.n - 1
    if s.family is Family.A1_TIMES:
        return 1
    if s.r_override is None:
        raise ConfigError("custom germs need r_override to fix the exceptional curve count")
    return s.r_override


@dataclass(frozen=True)
class SmallResInvariants:
    """Numeric package of the small resolution.

    b11, b21 and ell21 are the graded pieces of tau:
    tau = b11 + b21 + ell21 with b11 = b, b21 = b - a, ell21 = r.  The
    local cohomology of middle-degree forms along the exceptional curves
    has dimension b + r (= b11 + ell21); the toolkit places that group in
    cohomological degree 2 throughout, the degree consistent with the
    decomposition of tau.  The same number is sometimes quoted with
    superscript 1; we fix one convention rather than guess intent.
    """

    tau: int
    mu: int
    r: int
    delta: int
    b: int
    a: int
    b11: int
    b21: int
    ell21: int
    is_odp: bool

    @property
    def h2_forms_dim(self) -> int:
        """Dimension b + r of the degree-2 local cohomology of 2-forms."""
        return self.b + self.r


def suspension(s: SuspendedCurveGerm) -> Poly:
    """The threefold germ x^2 + y^2 + g as a 4-variable polynomial."""
    if set(s.g.vars) & {"x", "y"}:
        raise ConfigError("g may not use the suspension variables x, y")
    amb = ("x", "y") + s.g.vars
    return (
        Poly.var(amb, "x") ** 2
        + Poly.var(amb, "y") ** 2
        + s.g.in_ambient(amb)
    )


def small_res_report(s: SuspendedCurveGerm):
    """Compute the invariant package plus its named consistency checks.

    Returns (invariants, checks, warnings) without raising on violated
    relations; each check is a dict with name/expected/actual/pass.
    """
    f = suspension(s)
    tau = tjurina_number(f)
    mu = milnor_number(f)
    if tau == INFINITE or mu == INFINITE:
        raise ValueError("suspended germ has a non-isolated singularity")
    delta = plane_delta_invariant(s.g, s.branch_count)
    r = exceptional_curve_count(s)
    b = delta - r
    a = 2 * b + r - tau
    inv = SmallResInvariants(
        tau=tau,
        mu=mu,
        r=r,
        delta=delta,
        b=b,
        a=a,
        b11=b,
        b21=b - a,
        ell21=r,
        is_odp=(b == 0),
    )

    checks = []

    def chk(name, expected, actual, hard=True):
        checks.append(
            {
                "name": name,
                "expected": expected,
                "actual": actual,
                "pass": expected == actual,
                "hard": hard,
            }
        )

    chk("b == delta - r", inv.b, delta - r)
    chk("b >= 0", True, b >= 0)
    chk("a >= 0", True, a >= 0)
    chk("a <= b", True, a <= b)
    chk("tau == 2*b - a + r", tau, 2 * b - a + r)
    chk("b + r <= tau <= 2*b + r", True, b + r <= tau <= 2 * b + r)
    chk("tau <= mu", True, tau <= mu)
    chk("tau == b11 + b21 + ell21", tau, inv.b11 + inv.b21 + inv.ell21)
    chk("b21 == b - a", inv.b21, b - a)
    chk("ell21 == r", inv.ell21, r)
    if inv.is_odp:
        chk("odp forces tau == r == delta == 1", (1, 1, 1), (tau, r, delta))
    if s.family is Family.DISTINCT_LINES:
        chk("delta == n*(n-1)/2", delta, s.n * (s.n - 1) // 2)
        chk("tau == (n-1)^2", tau, (s.n - 1) ** 2)
    if s.family is Family.A1_TIMES:
        chk("delta == n", delta, s.n)
        chk("tau == 2*n - 1", tau, 2 * s.n - 1)

    warnings = []
    weights = quasi_homogeneous_weights(f)
    chk("weights exist iff a == 0", a == 0, weights is not None, hard=False)
    if (weights is not None) != (a == 0):
        warnings.append(
            "quasi-homogeneity detector disagrees with a == 0; the detector is "
            "coordinate-sensitive, so this can be a coordinate artifact"
        )
    return inv, checks, warnings


def small_res_invariants(s: SuspendedCurveGerm) -> SmallResInvariants:
    """The invariant package; raises ConsistencyError if any relation
    that must hold between tau, delta, r, b, a is violated."""
    inv, checks, _ = small_res_report(s)
    for c in checks:
        if c["hard"] and not c["pass"]:
            raise ConsistencyError(
                c["name"], f"expected {c['expected']}, got {c['actual']}"
            )
    return inv


def is_ordinary_double_point(inv: SmallResInvariants) -> bool:
    """b = 0 characterizes the ordinary double point; cross-checks that
    the rest of the package agrees."""
    if inv.is_odp != (inv.b == 0):
        raise ConsistencyError("is_odp", "flag disagrees with b == 0")
    if inv.b == 0 and not (inv.tau == inv.r == inv.delta == 1):
        raise ConsistencyError(
            "odp forces tau == r == delta == 1",
            f"got tau={inv.tau}, r={inv.r}, delta={inv.delta}",
        )
    return inv.b == 0


# -- JSON interchange ----------------------------------------------------------

_GERM_KEYS = {"g", "family", "n", "branches", "r_override"}


def germ_from_dict(d: dict, vars=("z", "w")) -> SuspendedCurveGerm:
    if not isinstance(d, dict):
        raise ConfigError("germ description must be a JSON object")
    unknown = set(d) - _GERM_KEYS
    if unknown:
        raise ConfigError(f"unknown germ keys: {sorted(unknown)}")
    if "g" not in d or "family" not in d:
        raise ConfigError("germ description needs 'g' and 'family'")
    try:
        fam = Family(d["family"])
    except ValueError:
        raise ConfigError(f"unknown family {d['family']!r}") from None
    g = parse_polynomial(d["g"], vars)

    def uint(key):
        v = d.get(key)
        if v is None:
            return None
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            raise ConfigError(f"{key} must be a nonnegative integer")
        return v

    return SuspendedCurveGerm(
        g=g,
        family=fam,
        n=uint("n"),
        branches=uint("branches"),
        r_override=uint("r_override"),
    )
