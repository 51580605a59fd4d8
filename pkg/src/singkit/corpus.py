"""Bundled regression corpus: every published value the package reproduces.

Each entry is a plain dict (JSON-compatible) with an id, a kind that
selects the computation, the inputs, and the expected values.  Expected
dicts are compared key-by-key, so an entry pins exactly the numbers it
cares about.  External corpus files use the same schema: a JSON list of
these entry objects.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

from . import defspace, dualcomplex, smallres
from .errors import ConfigError
from .localring import INFINITE, milnor_number, tjurina_number
from .poly import parse_polynomial

# -- canonical divisor configurations ------------------------------------------

CUBIC_CONE_LINK = {
    "components": [{"id": "E", "kind": "rational", "b2": 7}],
}

TYPE_II_POINT = {
    "components": [
        {"id": "E1", "kind": "rational", "b2": 7, "anticanonical_boundary": ["D0"]},
    ],
    "marked": {"d0_curve": "D0"},
}

TYPE_II_CHAIN = {
    "components": [
        {"id": "E1", "kind": "elliptic_ruled", "b2": 2, "anticanonical_boundary": ["D0", "D12"]},
        {"id": "E2", "kind": "elliptic_ruled", "b2": 2, "anticanonical_boundary": ["D12", "D23"]},
        {"id": "E3", "kind": "rational", "b2": 7, "anticanonical_boundary": ["D23"]},
    ],
    "double_curves": [
        {"id": "D12", "between": ["E1", "E2"], "genus": 1},
        {"id": "D23", "between": ["E2", "E3"], "genus": 1},
    ],
    "marked": {"d0_curve": "D0"},
}

TYPE_III1_SEGMENT = {
    "components": [
        {"id": "F1", "kind": "rational", "b2": 3, "anticanonical_boundary": ["C1", "G12"]},
        {"id": "F2", "kind": "rational", "b2": 4,
         "anticanonical_boundary": ["G12", "C2a", "C2b", "G23"]},
        {"id": "F3", "kind": "rational", "b2": 3, "anticanonical_boundary": ["C3", "G23"]},
    ],
    "double_curves": [
        {"id": "G12", "between": ["F1", "F2"], "genus": 0},
        {"id": "G23", "between": ["F2", "F3"], "genus": 0},
    ],
    "marked": {
        "c_curves": {"F1": [["C1"]], "F2": [["C2a"], ["C2b"]], "F3": [["C3"]]},
    },
}

# four boundary components around one interior component: the smallest
# triangulated disk whose boundary components meet only their neighbors
TYPE_III2_DISK = {
    "components": [
        {"id": "E0", "kind": "rational", "b2": 5,
         "anticanonical_boundary": ["S1", "S2", "S3", "S4"]},
        {"id": "E1", "kind": "rational", "b2": 4,
         "anticanonical_boundary": ["C1", "B12", "B41", "S1"]},
        {"id": "E2", "kind": "rational", "b2": 4,
         "anticanonical_boundary": ["C2", "B12", "B23", "S2"]},
        {"id": "E3", "kind": "rational", "b2": 4,
         "anticanonical_boundary": ["C3", "B23", "B34", "S3"]},
        {"id": "E4", "kind": "rational", "b2": 4,
         "anticanonical_boundary": ["C4", "B34", "B41", "S4"]},
    ],
    "double_curves": [
        {"id": "B12", "between": ["E1", "E2"], "genus": 0},
        {"id": "B23", "between": ["E2", "E3"], "genus": 0},
        {"id": "B34", "between": ["E3", "E4"], "genus": 0},
        {"id": "B41", "between": ["E4", "E1"], "genus": 0},
        {"id": "S1", "between": ["E0", "E1"], "genus": 0},
        {"id": "S2", "between": ["E0", "E2"], "genus": 0},
        {"id": "S3", "between": ["E0", "E3"], "genus": 0},
        {"id": "S4", "between": ["E0", "E4"], "genus": 0},
    ],
    "triple_points": [
        {"id": "T1", "components": ["E1", "E2", "E0"]},
        {"id": "T2", "components": ["E2", "E3", "E0"]},
        {"id": "T3", "components": ["E3", "E4", "E0"]},
        {"id": "T4", "components": ["E4", "E1", "E0"]},
    ],
    "marked": {
        "c_curves": {"E1": [["C1"]], "E2": [["C2"]], "E3": [["C3"]], "E4": [["C4"]]},
        "pa_d": 1,
    },
}

UNCLASSIFIED_PAIR = {
    "components": [
        {"id": "A", "kind": "rational", "b2": 2},
        {"id": "B", "kind": "rational", "b2": 2},
    ],
    "double_curves": [{"id": "D", "between": ["A", "B"], "genus": 1}],
}


# -- the entries -----------------------------------------------------------------

ENTRIES = [
    # Tjurina numbers of the suspended A_1 x C family x^2+y^2+z^2+w^(2n)
    {"id": "tjurina/a1-suspension-n1", "kind": "tjurina",
     "poly": "x^2 + y^2 + z^2 + w^2", "expected": {"tau": 1}},
    {"id": "tjurina/a1-suspension-n2", "kind": "tjurina",
     "poly": "x^2 + y^2 + z^2 + w^4", "expected": {"tau": 3}},
    {"id": "tjurina/a1-suspension-n3", "kind": "tjurina",
     "poly": "x^2 + y^2 + z^2 + w^6", "expected": {"tau": 5}},
    {"id": "tjurina/a1-suspension-n4", "kind": "tjurina",
     "poly": "x^2 + y^2 + z^2 + w^8", "expected": {"tau": 7}},
    # cones over n distinct lines: tau = (n-1)^2
    {"id": "tjurina/lines-n3", "kind": "tjurina",
     "poly": "x^2 + y^2 + z^3 - w^3", "expected": {"tau": 4}},
    {"id": "tjurina/lines-n4", "kind": "tjurina",
     "poly": "x^2 + y^2 + z^4 - w^4", "expected": {"tau": 9}},
    {"id": "tjurina/lines-n5", "kind": "tjurina",
     "poly": "x^2 + y^2 + z^5 - w^5", "expected": {"tau": 16}},
    {"id": "tjurina/lines-n5-deformed", "kind": "tjurina",
     "poly": "x^2 + y^2 + z^5 - w^5 + z^3*w^3", "expected": {"tau": 15}},
    # cone over the cubic surface and its equisingular deformation
    {"id": "tjurina/cubic-cone", "kind": "tjurina",
     "poly": "x^3 + y^3 + z^3 + w^3", "expected": {"tau": 16}},
    {"id": "tjurina/cubic-cone-deformed", "kind": "tjurina",
     "poly": "x^3 + y^3 + z^3 + w^3 + x*y*z*w", "expected": {"tau": 15}},
    {"id": "milnor/cubic-cone", "kind": "milnor",
     "poly": "x^3 + y^3 + z^3 + w^3", "expected": {"mu": 16}},
    {"id": "milnor/lines-n5-deformed", "kind": "milnor",
     "poly": "x^2 + y^2 + z^5 - w^5 + z^3*w^3", "expected": {"mu": 16}},

    # small-resolution invariant packages
    {"id": "smallres/ordinary-double-point", "kind": "smallres",
     "germ": {"g": "z^2 + w^2", "family": "a1_times", "n": 1},
     "expected": {"tau": 1, "mu": 1, "r": 1, "delta": 1, "b": 0, "a": 0,
                  "is_odp": True, "checks_pass": True}},
    {"id": "smallres/two-lines-odp", "kind": "smallres",
     "germ": {"g": "z^2 - w^2", "family": "distinct_lines", "n": 2},
     "expected": {"tau": 1, "r": 1, "delta": 1, "b": 0, "a": 0, "is_odp": True}},
    {"id": "smallres/a1-suspension-n3", "kind": "smallres",
     "germ": {"g": "z^2 + w^6", "family": "a1_times", "n": 3},
     "expected": {"tau": 5, "mu": 5, "r": 1, "delta": 3, "b": 2, "a": 0,
                  "b11": 2, "b21": 2, "ell21": 1, "is_odp": False, "checks_pass": True}},
    {"id": "smallres/five-lines", "kind": "smallres",
     "germ": {"g": "z^5 - w^5", "family": "distinct_lines", "n": 5},
     "expected": {"tau": 16, "mu": 16, "r": 4, "delta": 10, "b": 6, "a": 0,
                  "b11": 6, "b21": 6, "ell21": 4, "is_odp": False, "checks_pass": True}},
    {"id": "smallres/five-lines-deformed", "kind": "smallres",
     "germ": {"g": "z^5 - w^5 + z^3*w^3", "family": "custom",
              "branches": 5, "r_override": 4},
     "expected": {"tau": 15, "mu": 16, "r": 4, "delta": 10, "b": 6, "a": 1,
                  "b11": 6, "b21": 5, "ell21": 4, "is_odp": False, "checks_pass": True}},

    # link of the cone over the cubic surface: b2(E) = 7, ell = 6
    {"id": "dualcomplex/cubic-cone-link", "kind": "link",
     "config": CUBIC_CONE_LINK,
     "expected": {"r": 1, "n_double": 0, "b2e": 7, "ell": 6, "rank_check": True}},
    {"id": "dualcomplex/cubic-cone-semistable", "kind": "semistable",
     "config": CUBIC_CONE_LINK, "model": {"simple_elliptic": {"m": 3}},
     "expected": {"ok": True, "expected": 6, "actual": 6, "bound_ok": True}},

    # classifier verdicts for the four canonical shapes
    {"id": "classify/type-ii-point", "kind": "classify",
     "config": TYPE_II_POINT,
     "expected": {"verdict": "TYPE_II", "h0_t1": 0, "h1_t1": 0, "dim_t2": 0,
                  "h2_lower_bound": 0}},
    {"id": "classify/type-ii-chain", "kind": "classify",
     "config": TYPE_II_CHAIN,
     "expected": {"verdict": "TYPE_II", "h0_t1": 2, "h1_t1": 2, "dim_t2": 2,
                  "h2_lower_bound": 2}},
    {"id": "classify/type-iii1-segment", "kind": "classify",
     "config": TYPE_III1_SEGMENT,
     "expected": {"verdict": "TYPE_III_1", "h0_t1": 0, "h2_lower_bound": 0}},
    {"id": "classify/type-iii2-disk", "kind": "classify",
     "config": TYPE_III2_DISK,
     "expected": {"verdict": "TYPE_III_2", "h0_t1": 0, "h2_lower_bound": 1}},
    {"id": "classify/unclassified-pair", "kind": "classify",
     "config": UNCLASSIFIED_PAIR,
     "expected": {"verdict": "UNCLASSIFIED"}},

    # root-splitting map identities and closed forms
    {"id": "defspace/identities-n2", "kind": "defspace", "n": 2,
     "expected": {"factor_identity": True, "jacobian_matches": True,
                  "inverse_composition": True, "ramification": True,
                  "phi": ["-lam^2"]}},
    {"id": "defspace/identities-n3", "kind": "defspace", "n": 3,
     "expected": {"factor_identity": True, "jacobian_matches": True,
                  "inverse_composition": True, "ramification": True,
                  "phi": ["-lam^2 + t0", "-lam*t0"]}},
    {"id": "defspace/identities-n5", "kind": "defspace", "n": 5,
     "expected": {"factor_identity": True, "jacobian_matches": True,
                  "inverse_composition": True, "ramification": True,
                  "phi": ["-lam^2 + t2", "-lam*t2 + t1", "-lam*t1 + t0", "-lam*t0"]}},
    {"id": "defspace/identities-n6", "kind": "defspace", "n": 6,
     "expected": {"factor_identity": True, "jacobian_matches": True,
                  "inverse_composition": True, "ramification": True}},
    {"id": "defspace/fiber-n3-split", "kind": "fiber", "n": 3, "b": ["-1", "0"],
     "expected": {"count": 3, "is_generic": True,
                  "points": [["-1", ["0"]], ["0", ["-1"]], ["1", ["0"]]]}},
    {"id": "defspace/fiber-n3-double-root", "kind": "fiber", "n": 3, "b": ["0", "0"],
     "expected": {"count": 1, "is_generic": False, "points": [["0", ["0"]]]}},
]


# -- the runner -------------------------------------------------------------------

_DEFAULT_VARS = ("x", "y", "z", "w")


def _dim_value(v):
    return "infinite" if v == INFINITE else v


def _run_tjurina(entry, seed):
    f = parse_polynomial(entry["poly"], entry.get("vars", _DEFAULT_VARS))
    return {"tau": _dim_value(tjurina_number(f))}


def _run_milnor(entry, seed):
    f = parse_polynomial(entry["poly"], entry.get("vars", _DEFAULT_VARS))
    return {"mu": _dim_value(milnor_number(f))}


def _run_smallres(entry, seed):
    germ = smallres.germ_from_dict(entry["germ"])
    inv, checks, _warnings = smallres.small_res_report(germ)
    out = {
        "tau": inv.tau, "mu": inv.mu, "r": inv.r, "delta": inv.delta,
        "b": inv.b, "a": inv.a, "b11": inv.b11, "b21": inv.b21,
        "ell21": inv.ell21, "is_odp": inv.is_odp,
        "checks_pass": all(c["pass"] for c in checks),
    }
    return out


def _run_link(entry, seed):
    config = dualcomplex.config_from_dict(entry["config"])
    rep = dualcomplex.link_invariant(config)
    rank_b2 = dualcomplex.restriction_rank_b2(config, seed=seed)
    return {
        "r": rep.r, "n_double": rep.n_double, "b2e": rep.b2e, "ell": rep.ell,
        "rank_check": rank_b2 == rep.b2e,
    }


def _run_semistable(entry, seed):
    config = dualcomplex.config_from_dict(entry["config"])
    spec = entry["model"]
    if "simple_elliptic" in spec:
        model = dualcomplex.SimpleElliptic(m=spec["simple_elliptic"]["m"])
    elif "cusp" in spec:
        model = dualcomplex.Cusp(m=spec["cusp"]["m"], s=spec["cusp"]["s"])
    else:
        raise ConfigError(f"unknown semistable model {spec!r}")
    chk = dualcomplex.semistable_ell_check(config, model)
    return {"ok": chk.ok, "expected": chk.expected, "actual": chk.actual,
            "bound_ok": chk.bound_ok}


def _run_classify(entry, seed):
    config = dualcomplex.config_from_dict(entry["config"])
    result = dualcomplex.classify(config)
    out = {"verdict": result.verdict.value}
    if result.verdict is not dualcomplex.Verdict.UNCLASSIFIED:
        dims = dualcomplex.deformation_dims(config)
        out.update({"h0_t1": dims.h0_t1, "h1_t1": dims.h1_t1, "dim_t2": dims.dim_t2})
        out["h2_lower_bound"] = dualcomplex.h2_lower_bound(config, result)
    return out


def _run_defspace(entry, seed):
    m = defspace.build(entry["n"])
    jac = defspace.jacobian_identity(m)
    ram = defspace.ramification_check(m, seed=seed)
    return {
        "factor_identity": defspace.verify_factor_identity(m),
        "jacobian_matches": jac.matches,
        "jacobian_sign": jac.sign,
        "inverse_composition": defspace.inverse_composition_reduces(m),
        "ramification": ram.ok,
        "phi": [str(c) for c in m.components],
    }


def _run_fiber(entry, seed):
    m = defspace.build(entry["n"])
    fib = defspace.fiber_count(m, entry["b"])
    return {
        "count": fib.count,
        "is_generic": fib.is_generic,
        "discriminant": str(fib.discriminant),
        "points": [[str(p.lam), [str(t) for t in p.t]] for p in fib.points],
    }


_RUNNERS = {
    "tjurina": _run_tjurina,
    "milnor": _run_milnor,
    "smallres": _run_smallres,
    "link": _run_link,
    "semistable": _run_semistable,
    "classify": _run_classify,
    "defspace": _run_defspace,
    "fiber": _run_fiber,
}


def run_entry(entry, seed=0):
    if not isinstance(entry, dict) or "id" not in entry or "kind" not in entry:
        raise ConfigError("each corpus entry needs 'id' and 'kind'")
    runner = _RUNNERS.get(entry["kind"])
    if runner is None:
        raise ConfigError(f"unknown corpus entry kind {entry['kind']!r}")
    expected = entry.get("expected", {})
    actual = runner(entry, seed)
    mismatches = {
        k: {"expected": v, "actual": actual.get(k)}
        for k, v in expected.items()
        if actual.get(k) != v
    }
    return {
        "id": entry["id"],
        "pass": not mismatches,
        "expected": expected,
        "actual": {k: actual.get(k) for k in expected} if expected else actual,
        "mismatches": mismatches,
    }


def run_corpus(entries=None, seed=0, max_workers=8):
    """Run entries in parallel worker threads; results assembled in
    entry-id order so reports are deterministic."""
    if entries is None:
        entries = ENTRIES
    if not entries:
        raise ConfigError("empty corpus")
    ids = [e.get("id") for e in entries]
    if len(set(ids)) != len(ids):
        raise ConfigError("duplicate corpus entry ids")
    with ThreadPoolExecutor(max_workers=max_workers) as pool:
        results = list(pool.map(lambda e: run_entry(e, seed=seed), entries))
    return sorted(results, key=lambda r: r["id"])
