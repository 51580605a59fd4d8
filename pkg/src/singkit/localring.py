"""Standard bases and colengths in the local ring at the origin.

Everything here works with the negative degree reverse lexicographic
order: monomials of *smaller* total degree are larger, ties broken by
reverse lex.  Under this order the leading monomial of a polynomial is a
term of minimal total degree, which is what makes the order local: the
leading ideal determines the quotient of the localization at the origin
rather than of the polynomial ring.

Division uses Mora's tangent-cone normal form, where a reducer of larger
ecart (spread between total degree and leading-term degree) forces the
intermediate remainder itself into the reducer set.  That bookkeeping is
exactly what guarantees termination in the local order, at the price of
computing a weak normal form u*f mod I with u an invisible unit -- which
is all we need, since only leading terms feed the dimension counts.

Internally polynomials are handled as raw {exponent-tuple: Fraction}
dicts for speed; the public surface accepts and returns Poly objects.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .poly import Poly

INFINITE = float("inf")  # quotient dimension of a non-isolated singularity


# -- the local order ----------------------------------------------------------

def order_key(exps):
    """Sort key: bigger key = bigger monomial in neg-degrevlex."""
    return (-sum(exps), tuple(-e for e in reversed(exps)))


def leading_exponent(terms):
    return max(terms, key=order_key)


def _ecart(terms, lead=None):
    if lead is None:
        lead = leading_exponent(terms)
    return max(sum(e) for e in terms) - sum(lead)


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _sub_scaled_shift(h, g, shift, c):
    """h - c * x^shift * g, in place on a fresh dict."""
    out = dict(h)
    for e, v in g.items():
        t = tuple(a + b for a, b in zip(e, shift))
        s = out.get(t, 0) - c * v
        if s:
            out[t] = s
        else:
            out.pop(t, None)
    return out


def _mora_reduce_step(h, g):
    """One cancellation of LT(h) by g (whose LT divides LT(h))."""
    lh = leading_exponent(h)
    lg = leading_exponent(g)
    shift = tuple(a - b for a, b in zip(lh, lg))
    c = h[lh] / g[lg]
    return _sub_scaled_shift(h, g, shift, c)


def mora_normal_form(f, reducers):
    """Weak normal form of f against the reducer list (raw dicts)."""
    h = dict(f)
    pool = list(reducers)
    while h:
        lh = leading_exponent(h)
        usable = [g for g in pool if _divides(leading_exponent(g), lh)]
        if not usable:
            break
        g = min(usable, key=_ecart)
        if _ecart(g) > _ecart(h, lh):
            pool.append(dict(h))
        h = _mora_reduce_step(h, g)
    return h


def _spoly(f, g):
    lf, lg = leading_exponent(f), leading_exponent(g)
    lcm = tuple(max(a, b) for a, b in zip(lf, lg))
    sf = tuple(a - b for a, b in zip(lcm, lf))
    out = _sub_scaled_shift(
        {tuple(a + b for a, b in zip(e, sf)): c / f[lf] for e, c in f.items()},
        g,
        tuple(a - b for a, b in zip(lcm, lg)),
        Fraction(1) / g[lg],
    )
    return out


# -- ideals and standard bases -------------------------------------------------

class LocalIdeal:
    """Ideal in the localization of Q[vars] at the origin.

    Generators must vanish at the origin: a generator with nonzero
    constant term is a unit locally, which would silently make the whole
    ideal trivial, so it is rejected here instead.
    """

    def __init__(self, vars, generators: Sequence[Poly]):
        self.vars = tuple(vars)
        gens = []
        for g in generators:
            if g.vars != self.vars:
                raise ValueError("generator ambient mismatch")
            if g.is_zero():
                continue
            if g.constant_term():
                raise ValueError(
                    f"generator {g} has nonzero constant term: unit in the local ring"
                )
            gens.append(g)
        if not gens:
            raise ValueError("no nonzero generators")
        self.generators = tuple(gens)

    def __repr__(self):
        return f"LocalIdeal({self.vars!r}, [{', '.join(map(str, self.generators))}])"


@dataclass(frozen=True)
class StandardBasis:
    ideal: LocalIdeal
    basis: tuple
    leading_exponents: tuple

    @property
    def vars(self):
        return self.ideal.vars


def standard_basis(ideal: LocalIdeal) -> StandardBasis:
    """Mora's tangent-cone construction of a standard basis.

    The returned basis is minimal: no leading monomial divides another,
    so the leading-exponent set is the canonical minimal generating set
    of the leading ideal (independent of generator order).
    """
    G = []
    for g in ideal.generators:
        d = dict(g.terms)
        lc = d[leading_exponent(d)]
        G.append({e: c / lc for e, c in d.items()})

    pairs = [(i, j) for i in range(len(G)) for j in range(i + 1, len(G))]
    # small ideals: plain Buchberger loop, cheapest-lcm-first selection
    while pairs:
        pairs.sort(
            key=lambda ij: sum(
                max(a, b)
                for a, b in zip(leading_exponent(G[ij[0]]), leading_exponent(G[ij[1]]))
            )
        )
        i, j = pairs.pop(0)
        h = mora_normal_form(_spoly(G[i], G[j]), G)
        if h:
            lc = h[leading_exponent(h)]
            h = {e: c / lc for e, c in h.items()}
            G.append(h)
            pairs.extend((k, len(G) - 1) for k in range(len(G) - 1))

    # minimalize: keep only leading exponents not divisible by another
    leads = [leading_exponent(g) for g in G]
    keep = []
    for i, le in enumerate(leads):
        dominated = any(
            _divides(leads[j], le) and (leads[j] != le or j < i)
            for j in range(len(G))
            if j != i
        )
        if not dominated:
            keep.append(i)
    basis = tuple(Poly(ideal.vars, G[i]) for i in keep)
    lexps = tuple(sorted((leads[i] for i in keep), key=order_key, reverse=True))
    return StandardBasis(ideal=ideal, basis=basis, leading_exponents=lexps)


def quotient_dim(sb: StandardBasis):
    """Vector-space dimension of local ring / ideal: the number of
    monomials outside the leading ideal.  INFINITE when some variable
    has no pure power among the leading exponents."""
    n = len(sb.vars)
    leads = sb.leading_exponents
    bounds = []
    for i in range(n):
        pure = [e[i] for e in leads if all(x == 0 for j, x in enumerate(e) if j != i)]
        if not pure:
            return INFINITE
        bounds.append(min(pure))
    count = 0
    for exps in itertools.product(*(range(b) for b in bounds)):
        if not any(_divides(le, exps) for le in leads):
            count += 1
    return count


# -- the classical invariants ---------------------------------------------------

def _jacobian_gens(f: Poly):
    return [f.differentiate(v) for v in f.vars]


def milnor_number(f: Poly):
    """Colength of the gradient ideal; INFINITE for a non-isolated
    critical point, 0 for a smooth point of f - f(0)."""
    if f.is_zero():
        raise ValueError("Milnor number of the zero polynomial is undefined")
    if f.constant_term():
        raise ValueError("germ must vanish at the origin")
    gens = [g for g in _jacobian_gens(f) if not g.is_zero()]
    if any(g.constant_term() for g in gens):
        return 0  # unit partial derivative: smooth point
    return quotient_dim(standard_basis(LocalIdeal(f.vars, gens)))


def tjurina_number(f: Poly):
    """Colength of (f) + gradient ideal; INFINITE for non-isolated
    singularities, 0 for smooth points."""
    if f.is_zero():
        raise ValueError("Tjurina number of the zero polynomial is undefined")
    if f.constant_term():
        raise ValueError("germ must vanish at the origin")
    gens = [g for g in [f] + _jacobian_gens(f) if not g.is_zero()]
    if any(g.constant_term() for g in gens):
        return 0
    return quotient_dim(standard_basis(LocalIdeal(f.vars, gens)))


# -- truncated linear-algebra oracle --------------------------------------------

def _monomials_below(nvars, cutoff):
    """All exponent tuples of total degree < cutoff, graded order."""
    out = []

    def rec(prefix, remaining, budget):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for k in range(budget + 1):
            rec(prefix + [k], remaining - 1, budget - k)

    for d in range(cutoff):
        start = len(out)
        rec([], nvars, d)
        out[start:] = [e for e in out[start:] if sum(e) == d]
    return out


def truncated_dim_oracle(ideal: LocalIdeal, cutoff: int) -> int:
    """dim of local ring / (ideal + m^cutoff) by exact rank over Q.

    Independent of the standard-basis machinery: spans the image of the
    ideal inside the monomial basis of degrees < cutoff and subtracts its
    rank.  For zero-dimensional ideals the value stabilizes (in cutoff)
    at the true colength.
    """
    if cutoff < 1:
        raise ValueError("cutoff must be >= 1")
    nvars = len(ideal.vars)
    mons = _monomials_below(nvars, cutoff)
    index = {e: i for i, e in enumerate(mons)}

    pivots = {}
    rank = 0
    for g in ideal.generators:
        gterms = g.terms
        gord = g.order_at_origin()
        for shift in _monomials_below(nvars, max(cutoff - gord, 0)):
            row = {}
            for e, c in gterms.items():
                t = tuple(a + b for a, b in zip(e, shift))
                if sum(t) < cutoff:
                    row[index[t]] = row.get(index[t], 0) + c
            row = {k: v for k, v in row.items() if v}
            # sparse exact elimination
            while row:
                col = min(row)
                piv = pivots.get(col)
                if piv is None:
                    inv = Fraction(1) / row[col]
                    pivots[col] = {k: v * inv for k, v in row.items()}
                    rank += 1
                    break
                c = row[col]
                for k, v in piv.items():
                    s = row.get(k, 0) - c * v
                    if s:
                        row[k] = s
                    else:
                        row.pop(k, None)
    return len(mons) - rank


def stabilized_oracle_dim(ideal: LocalIdeal, start: int | None = None, limit: int = 40):
    """First stabilized value of the truncated oracle: the dimension at
    two consecutive cutoffs N, N+1 that agree, N at least max generator
    degree + 2.  Returns (dim, N)."""
    if start is None:
        start = max(g.total_degree() for g in ideal.generators) + 2
    prev = truncated_dim_oracle(ideal, start)
    n = start
    while n < limit:
        nxt = truncated_dim_oracle(ideal, n + 1)
        if nxt == prev:
            return prev, n
        prev = nxt
        n += 1
    raise ValueError(f"no stabilization up to cutoff {limit} (non-isolated?)")


# -- quasi-homogeneity -----------------------------------------------------------

def quasi_homogeneous_weights(f: Poly):
    """Positive weights making every term of f the same weighted degree.

    Solves <w, exponent> = 1 over the exponent vectors exactly (Gaussian
    elimination, then Fourier-Motzkin for strict positivity), and scales
    the solution to the smallest integer weight vector.  Returns
    (weights, degree) or None.  The test is syntactic: it sees the given
    coordinates only, so a germ that is quasi-homogeneous after a change
    of coordinates can still return None.
    """
    if f.is_zero():
        raise ValueError("weights of the zero polynomial are undefined")
    exps = sorted(set(f.terms))
    n = len(f.vars)

    # Gaussian elimination on [E | 1]
    rows = [[Fraction(x) for x in e] + [Fraction(1)] for e in exps]
    pivots = []  # (row, col)
    r = 0
    for c in range(n):
        pr = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f_ = rows[i][c]
                rows[i] = [a - f_ * b for a, b in zip(rows[i], rows[r])]
        pivots.append((r, c))
        r += 1
    for i in range(r, len(rows)):
        if rows[i][n]:
            return None  # inconsistent

    pivot_cols = [c for _, c in pivots]
    free_cols = [c for c in range(n) if c not in pivot_cols]
    k = len(free_cols)

    # w_c = base[c] + sum_j coeff[c][j] * u_j
    base = [Fraction(0)] * n
    coeff = [[Fraction(0)] * k for _ in range(n)]
    for j, c in enumerate(free_cols):
        coeff[c][j] = Fraction(1)
    for (ri, c) in pivots:
        base[c] = rows[ri][n]
        for j, fc in enumerate(free_cols):
            coeff[c][j] = -rows[ri][fc]

    # strict inequalities sum coeff*u + base > 0, Fourier-Motzkin
    ineqs = [(tuple(coeff[c]), base[c]) for c in range(n)]
    stages = []
    for j in range(k - 1, -1, -1):
        stages.append((j, ineqs))
        lowers = [q for q in ineqs if q[0][j] > 0]
        uppers = [q for q in ineqs if q[0][j] < 0]
        rest = [q for q in ineqs if q[0][j] == 0]
        new = list(rest)
        for lo in lowers:
            for hi in uppers:
                a = tuple(
                    x / lo[0][j] - y / hi[0][j] for x, y in zip(lo[0], hi[0])
                )
                b = lo[1] / lo[0][j] - hi[1] / hi[0][j]
                new.append((a, b))
        ineqs = new
    if any(b <= 0 for coefs, b in ineqs if not any(coefs)):
        return None
    # also fail rows with all-zero coefficients encountered before elimination
    if k == 0 and any(b <= 0 for _, b in ineqs):
        return None

    u = [Fraction(0)] * k
    for j, stage in reversed(stages):
        lo, hi = None, None
        for coefs, b in stage:
            cj = coefs[j]
            if cj == 0:
                continue
            rest = b + sum(coefs[i] * u[i] for i in range(k) if i != j and coefs[i])
            bound = -rest / cj
            if cj > 0:
                lo = bound if lo is None else max(lo, bound)
            else:
                hi = bound if hi is None else min(hi, bound)
        if lo is not None and hi is not None:
            u[j] = (lo + hi) / 2
        elif lo is not None:
            u[j] = lo + 1
        elif hi is not None:
            u[j] = hi - 1

    w = [base[c] + sum(coeff[c][i] * u[i] for i in range(k)) for c in range(n)]
    if any(x <= 0 for x in w):
        return None  # numerically impossible if FM was feasible; belt and braces
    scale = 1
    for x in w:
        scale = scale * x.denominator // _gcd(scale, x.denominator)
    weights = tuple(int(x * scale) for x in w)
    g = 0
    for x in weights + (scale,):
        g = _gcd(g, x)
    return tuple(x // g for x in weights), scale // g


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a
