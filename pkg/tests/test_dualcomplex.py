import copy
import json
import random

import pytest

from singkit.corpus import (
    CUBIC_CONE_LINK,
    TYPE_II_CHAIN,
    TYPE_II_POINT,
    TYPE_III1_SEGMENT,
    TYPE_III2_DISK,
    UNCLASSIFIED_PAIR,
)
from singkit.dualcomplex import (
    Cusp,
    SimpleElliptic,
    Verdict,
    build_dual_complex,
    classify,
    config_from_dict,
    config_to_dot,
    deformation_dims,
    h2_lower_bound,
    link_invariant,
    restriction_rank_b2,
    semistable_ell_check,
)
from singkit.errors import ConfigError

TRIANGLE = {
    # three components meeting pairwise in curves but with no triple point:
    # the dual complex is a hollow triangle
    "components": [
        {"id": "A", "kind": "rational", "b2": 3},
        {"id": "B", "kind": "rational", "b2": 3},
        {"id": "C", "kind": "rational", "b2": 3},
    ],
    "double_curves": [
        {"id": "AB", "between": ["A", "B"], "genus": 0},
        {"id": "BC", "between": ["B", "C"], "genus": 0},
        {"id": "CA", "between": ["C", "A"], "genus": 0},
    ],
}


def cfg(d):
    return config_from_dict(d)


# ---------------------------------------------------------------- dual complex


def test_euler_characteristic_and_h1():
    dc = build_dual_complex(cfg(TRIANGLE))
    assert dc.euler_characteristic == 0
    assert dc.h1_rank == 1
    assert dc.connected
    assert dc.cells == ()

    disk = build_dual_complex(cfg(TYPE_III2_DISK))
    assert disk.euler_characteristic == 1
    assert disk.h1_rank == 0
    assert len(disk.cells) == 4


def test_boundary_and_nonmanifold_edges():
    disk = build_dual_complex(cfg(TYPE_III2_DISK))
    assert set(disk.boundary_edges) == {"B12", "B23", "B34", "B41"}
    assert disk.nonmanifold_edges == ()


def test_point_and_segment_complexes():
    point = build_dual_complex(cfg(TYPE_II_POINT))
    assert point.euler_characteristic == 1 and point.h1_rank == 0
    chain = build_dual_complex(cfg(TYPE_II_CHAIN))
    assert chain.euler_characteristic == 1 and chain.h1_rank == 0


# a reducible intersection E1 ∩ E2 shows up as two curve records with the
# same endpoint pair; the 1-skeleton is then a genuine multigraph
PARALLEL_PAIR = {
    "components": [
        {"id": "E1", "kind": "rational", "b2": 2,
         "anticanonical_boundary": ["B1", "B2", "C1"]},
        {"id": "E2", "kind": "rational", "b2": 2,
         "anticanonical_boundary": ["B1", "B2", "C2"]},
    ],
    "double_curves": [
        {"id": "B1", "between": ["E1", "E2"], "genus": 0},
        {"id": "B2", "between": ["E1", "E2"], "genus": 0},
    ],
    "marked": {"c_curves": {"E1": [["C1"]], "E2": [["C2"]]}},
}


def test_parallel_double_curves_form_a_multigraph():
    c = cfg(PARALLEL_PAIR)
    dc = build_dual_complex(c)
    assert dc.euler_characteristic == 0     # 2 - 2 + 0
    assert dc.h1_rank == 1                  # the bigon cycle survives
    rep = link_invariant(c)
    assert rep.n_double == 2
    assert rep.b2e == 2 + 2 - 2


def test_two_boundary_components_accepted_via_parallel_curves():
    # boundary cycles of length 2 are legal but get a diagnostic note;
    # this bare bigon still misses the disk conditions, so no verdict
    res = classify(cfg(PARALLEL_PAIR))
    assert not [f for f in res.failed_clauses
                if f[0] == "TYPE_III_2" and f[1] == "ii"]
    assert any("parallel double curves" in n for n in res.notes)
    assert res.verdict is Verdict.UNCLASSIFIED


# ---------------------------------------------------------------- link invariant


def test_cubic_cone_link():
    rep = link_invariant(cfg(CUBIC_CONE_LINK))
    assert rep.r == 1 and rep.n_double == 0
    assert rep.b2e == 7
    assert rep.ell == 6
    assert rep.warnings == ()


def test_link_needs_b2():
    with pytest.raises(ConfigError):
        link_invariant(cfg(UNCLASSIFIED_PAIR) if False else cfg({
            "components": [{"id": "E", "kind": "rational"}],
        }))


def test_negative_ell_warns():
    rep = link_invariant(cfg({
        "components": [{"id": "E", "kind": "rational", "b2": 0}],
    }))
    assert rep.ell == -1
    assert rep.warnings


def test_restriction_rank_matches_b2e():
    for d in (CUBIC_CONE_LINK, TYPE_II_CHAIN, TYPE_III1_SEGMENT,
              TYPE_III2_DISK, TRIANGLE):
        c = cfg(d)
        rep = link_invariant(c)
        for seed in (0, 1, 17):
            assert restriction_rank_b2(c, seed=seed) == rep.b2e, d


def test_restriction_rank_deterministic_per_seed():
    c = cfg(TYPE_III2_DISK)
    assert restriction_rank_b2(c, seed=3) == restriction_rank_b2(c, seed=3)


def test_random_chain_ell_closed_form():
    # chains of length r: ell = sum(b2 - 1) - #double curves
    rng = random.Random(31)
    for _ in range(20):
        r = rng.randint(1, 6)
        comps = []
        curves = []
        for i in range(1, r + 1):
            kind = "elliptic_ruled" if i < r else "rational"
            comps.append({"id": f"E{i}", "kind": kind, "b2": rng.randint(2, 9)})
        for i in range(1, r):
            curves.append({"id": f"D{i}", "between": [f"E{i}", f"E{i+1}"], "genus": 1})
        c = cfg({"components": comps, "double_curves": curves})
        rep = link_invariant(c)
        expected = sum(comp["b2"] - 1 for comp in comps) - len(curves)
        assert rep.ell == expected
        assert restriction_rank_b2(c, seed=rng.randint(0, 99)) == rep.b2e


# ---------------------------------------------------------------- semistable models


def test_semistable_simple_elliptic():
    chk = semistable_ell_check(cfg(CUBIC_CONE_LINK), SimpleElliptic(m=3))
    assert chk.ok and chk.expected == 6 and chk.actual == 6
    assert chk.bound_ok


def test_semistable_cusp():
    # ell = 9 - m + s for the cusp model
    c = cfg({"components": [{"id": "E", "kind": "rational", "b2": 9}]})
    chk = semistable_ell_check(c, Cusp(m=3, s=2))
    assert chk.expected == 8 and chk.actual == 8 and chk.ok


def test_semistable_mismatch_and_bound():
    c = cfg(CUBIC_CONE_LINK)
    chk = semistable_ell_check(c, SimpleElliptic(m=2))
    assert not chk.ok and chk.expected == 7 and chk.actual == 6
    big = semistable_ell_check(c, SimpleElliptic(m=12))
    assert not big.bound_ok


# ---------------------------------------------------------------- classification


CANONICAL = [
    (TYPE_II_POINT, Verdict.TYPE_II),
    (TYPE_II_CHAIN, Verdict.TYPE_II),
    (TYPE_III1_SEGMENT, Verdict.TYPE_III_1),
    (TYPE_III2_DISK, Verdict.TYPE_III_2),
    (UNCLASSIFIED_PAIR, Verdict.UNCLASSIFIED),
]


@pytest.mark.parametrize("data,verdict", CANONICAL)
def test_canonical_verdicts(data, verdict):
    result = classify(cfg(data))
    assert result.verdict is verdict


def test_unclassified_reports_failures_for_every_type():
    result = classify(cfg(UNCLASSIFIED_PAIR))
    types_with_failures = {t for t, _, _ in result.failed_clauses}
    assert types_with_failures == {"TYPE_II", "TYPE_III_1", "TYPE_III_2"}


def _relabel(data, rng):
    ids = set()
    for c in data["components"]:
        ids.add(c["id"])
    for d in data.get("double_curves", []):
        ids.add(d["id"])
    for t in data.get("triple_points", []):
        ids.add(t["id"])
    marked = data.get("marked", {})
    if "d0_curve" in marked:
        ids.add(marked["d0_curve"])
    for chains in marked.get("c_curves", {}).values():
        for chain in chains:
            ids.update(chain)
    perm = list(ids)
    rng.shuffle(perm)
    table = dict(zip(sorted(ids), perm))

    def sub(x):
        if isinstance(x, str):
            return table.get(x, x)
        if isinstance(x, list):
            return [sub(v) for v in x]
        if isinstance(x, dict):
            return {table.get(k, k): sub(v) for k, v in x.items()}
        return x

    out = copy.deepcopy(data)
    for c in out["components"]:
        c["id"] = table[c["id"]]
        if "anticanonical_boundary" in c:
            c["anticanonical_boundary"] = sub(c["anticanonical_boundary"])
    for d in out.get("double_curves", []):
        d["id"] = table[d["id"]]
        d["between"] = sub(d["between"])
    for t in out.get("triple_points", []):
        t["id"] = table[t["id"]]
        t["components"] = sub(t["components"])
    if "marked" in out:
        m = out["marked"]
        if "d0_curve" in m:
            m["d0_curve"] = table[m["d0_curve"]]
        if "c_curves" in m:
            m["c_curves"] = {table[k]: sub(v) for k, v in m["c_curves"].items()}
    return out


def test_verdicts_invariant_under_relabeling():
    rng = random.Random(300)
    for data, verdict in CANONICAL:
        for _ in range(10):
            shuffled = _relabel(data, rng)
            assert classify(cfg(shuffled)).verdict is verdict


# ---------------------------------------------------------------- deformation dims


def test_deformation_dims_canonical():
    rep = deformation_dims(cfg(TYPE_II_CHAIN))
    assert (rep.h0_t1, rep.h1_t1, rep.dim_t2) == (2, 2, 2)
    rep = deformation_dims(cfg(TYPE_III1_SEGMENT))
    assert (rep.h0_t1, rep.h1_t1, rep.dim_t2) == (0, 2, 2)
    rep = deformation_dims(cfg(TYPE_III2_DISK))
    assert (rep.h0_t1, rep.h1_t1, rep.dim_t2) == (0, 4, 4)


def test_h0_t1_counts_elliptic_ruled_components():
    rng = random.Random(8)
    for _ in range(15):
        r = rng.randint(1, 6)
        comps, curves = [], []
        n_ell = 0
        for i in range(1, r + 1):
            if i < r and rng.random() < 0.6:
                comps.append({"id": f"E{i}", "kind": "elliptic_ruled"})
                n_ell += 1
            else:
                comps.append({"id": f"E{i}", "kind": "rational"})
        for i in range(1, r):
            curves.append({"id": f"D{i}", "between": [f"E{i}", f"E{i+1}"],
                           "genus": rng.choice([0, 1])})
        rep = deformation_dims(cfg({"components": comps, "double_curves": curves}))
        assert rep.h0_t1 == n_ell
        assert rep.h1_t1 == rep.dim_t2 == r - 1


def test_other_kind_needs_explicit_h01():
    c = cfg({"components": [{"id": "E", "kind": "other"}]})
    with pytest.raises(ConfigError):
        deformation_dims(c)
    c2 = cfg({"components": [{"id": "E", "kind": "other", "h01": 2}]})
    assert deformation_dims(c2).h0_t1 == 2


def test_higher_ambient_dimension_uses_h0q_table():
    c = cfg({"components": [{"id": "E", "kind": "other", "h01": 0,
                             "h0q": {"3": 4, "2": 1}}]})
    rep = deformation_dims(c, ambient_dim=5)
    assert rep.h0_t1 == 4      # sum of h^{0,3}
    assert rep.h1_t1 == 1      # sum of h^{0,2}
    assert rep.dim_t2 == 1
    # both rows of the table are mandatory above dimension 3
    with pytest.raises(ConfigError):
        deformation_dims(c, ambient_dim=4)
    partial = cfg({"components": [{"id": "E", "kind": "other", "h01": 0,
                                   "h0q": {"3": 4}}]})
    with pytest.raises(ConfigError):
        deformation_dims(partial, ambient_dim=5)


def test_h2_lower_bounds():
    assert h2_lower_bound(cfg(TYPE_II_CHAIN)) == 2       # r - 1
    assert h2_lower_bound(cfg(TYPE_III1_SEGMENT)) == 0
    assert h2_lower_bound(cfg(TYPE_III2_DISK)) == 1      # declared pa(D)
    with pytest.raises(ValueError):
        h2_lower_bound(cfg(UNCLASSIFIED_PAIR))


# ---------------------------------------------------------------- config parsing


def test_rejects_unknown_keys():
    bad = {"components": [{"id": "E", "kind": "rational"}], "nope": 1}
    with pytest.raises(ConfigError):
        config_from_dict(bad)


def test_rejects_duplicate_ids():
    with pytest.raises(ConfigError):
        config_from_dict({"components": [
            {"id": "E", "kind": "rational"}, {"id": "E", "kind": "rational"},
        ]})


def test_rejects_ambiguous_d0():
    bad = copy.deepcopy(TYPE_II_CHAIN)
    bad["marked"]["d0_curve"] = ["D0", "D0b"]
    with pytest.raises(ConfigError) as err:
        config_from_dict(bad)
    assert "ambiguous" in str(err.value)


def test_rejects_marked_data_with_both_d0_and_chains():
    bad = copy.deepcopy(TYPE_II_CHAIN)
    bad["marked"]["c_curves"] = {"E1": [["C1"]]}
    with pytest.raises(ConfigError) as err:
        config_from_dict(bad)
    assert "ambiguous" in str(err.value)


def test_rejects_unknown_curve_reference():
    with pytest.raises(ConfigError):
        config_from_dict({
            "components": [{"id": "A", "kind": "rational"},
                           {"id": "B", "kind": "rational"}],
            "double_curves": [{"id": "D", "between": ["A", "Z"], "genus": 0}],
        })


def test_rejects_disconnected_configuration():
    with pytest.raises(ConfigError):
        config_from_dict({
            "components": [{"id": "A", "kind": "rational"},
                           {"id": "B", "kind": "rational"}],
        })


def test_rejects_bad_genus():
    with pytest.raises(ConfigError):
        config_from_dict({
            "components": [{"id": "A", "kind": "rational"},
                           {"id": "B", "kind": "rational"}],
            "double_curves": [{"id": "D", "between": ["A", "B"], "genus": 2}],
        })


def test_rejects_self_curve():
    with pytest.raises(ConfigError):
        config_from_dict({
            "components": [{"id": "A", "kind": "rational"}],
            "double_curves": [{"id": "D", "between": ["A", "A"], "genus": 0}],
        })


def test_rejects_kind_h01_contradiction():
    with pytest.raises(ConfigError):
        config_from_dict({
            "components": [{"id": "A", "kind": "rational", "h01": 1}],
        })


def test_config_survives_json_roundtrip():
    text = json.dumps(TYPE_III2_DISK)
    assert classify(config_from_dict(json.loads(text))).verdict is Verdict.TYPE_III_2


# ---------------------------------------------------------------- dot output


def test_dot_output_lists_components_and_curves():
    dot = config_to_dot(cfg(TYPE_II_CHAIN))
    assert dot.startswith("graph ")
    for cid in ("E1", "E2", "E3"):
        assert f'"{cid}"' in dot
    assert '"E1" -- "E2"' in dot
    assert dot.count("--") == 2
