import random
from fractions import Fraction

import pytest

from singkit.errors import ConfigError, ConsistencyError
from singkit.poly import Poly, parse_polynomial
from singkit.smallres import (
    Family,
    SuspendedCurveGerm,
    germ_from_dict,
    is_ordinary_double_point,
    plane_delta_invariant,
    small_res_invariants,
    small_res_report,
    suspension,
)

ZW = ("z", "w")


def G(text):
    return parse_polynomial(text, ZW)


def test_ordinary_double_point_package():
    inv = small_res_invariants(germ_from_dict({"g": "z^2 + w^2", "family": "a1_times", "n": 1}))
    assert (inv.tau, inv.mu, inv.r, inv.delta, inv.b, inv.a) == (1, 1, 1, 1, 0, 0)
    assert inv.is_odp and is_ordinary_double_point(inv)
    # the ODP forces tau = r = delta = 1
    assert inv.tau == inv.r == inv.delta == 1


def test_suspended_a1_family_package():
    # x^2 + y^2 + z^2 + w^6: (r, delta, b, a) = (1, 3, 2, 0)
    inv = small_res_invariants(germ_from_dict({"g": "z^2 + w^6", "family": "a1_times", "n": 3}))
    assert (inv.r, inv.delta, inv.b, inv.a) == (1, 3, 2, 0)
    assert inv.tau == 5 and inv.mu == 5
    assert inv.b - inv.a == 2  # n - 1
    assert not inv.is_odp


def test_five_lines_package():
    # x^2 + y^2 + z^5 - w^5: (r, delta, b, a) = (4, 10, 6, 0)
    inv = small_res_invariants(
        germ_from_dict({"g": "z^5 - w^5", "family": "distinct_lines", "n": 5}))
    assert (inv.r, inv.delta, inv.b, inv.a) == (4, 10, 6, 0)
    assert inv.tau == 16
    assert inv.b - inv.a == 6  # (n-1)(n-2)/2 at n = 5
    assert (inv.b11, inv.b21, inv.ell21) == (6, 6, 4)


def test_deformed_five_lines_package():
    inv = small_res_invariants(germ_from_dict({
        "g": "z^5 - w^5 + z^3*w^3", "family": "custom",
        "branches": 5, "r_override": 4,
    }))
    assert (inv.tau, inv.mu) == (15, 16)
    assert (inv.r, inv.delta, inv.b, inv.a) == (4, 10, 6, 1)
    assert (inv.b11, inv.b21, inv.ell21) == (6, 5, 4)


def test_consistency_relations_hold_on_every_package():
    germs = [
        {"g": "z^2 + w^2", "family": "a1_times", "n": 1},
        {"g": "z^2 + w^4", "family": "a1_times", "n": 2},
        {"g": "z^2 + w^6", "family": "a1_times", "n": 3},
        {"g": "z^2 + w^8", "family": "a1_times", "n": 4},
        {"g": "z^2 - w^2", "family": "distinct_lines", "n": 2},
        {"g": "z^3 - w^3", "family": "distinct_lines", "n": 3},
        {"g": "z^4 - w^4", "family": "distinct_lines", "n": 4},
        {"g": "z^5 - w^5", "family": "distinct_lines", "n": 5},
        {"g": "z^5 - w^5 + z^3*w^3", "family": "custom", "branches": 5, "r_override": 4},
    ]
    for d in germs:
        inv, checks, _ = small_res_report(germ_from_dict(d))
        failed = [c for c in checks if c["hard"] and not c["pass"]]
        assert not failed, (d, failed)
        assert inv.delta == inv.b + inv.r
        assert inv.tau == 2 * inv.b - inv.a + inv.r
        assert inv.b + inv.r <= inv.tau <= 2 * inv.b + inv.r
        assert inv.tau == inv.b11 + inv.b21 + inv.ell21
        assert inv.h2_forms_dim == inv.b + inv.r == inv.b11 + inv.ell21
        assert inv.tau <= inv.mu


def test_random_slope_line_arrangements():
    # any n distinct lines through the origin give tau = (n-1)^2
    rng = random.Random(2024)
    for n in (3, 4, 5):
        for _ in range(3):
            slopes = set()
            while len(slopes) < n:
                slopes.add(Fraction(rng.randint(-6, 6), rng.randint(1, 4)))
            g = Poly.const(ZW, 1)
            for c in slopes:
                g = g * (Poly.var(ZW, "z") - Poly.const(ZW, c) * Poly.var(ZW, "w"))
            germ = SuspendedCurveGerm(g=g, family=Family.DISTINCT_LINES, n=n)
            inv = small_res_invariants(germ)
            assert inv.tau == (n - 1) ** 2, f"slopes {sorted(slopes)}"
            assert inv.r == n - 1
            assert inv.delta == n * (n - 1) // 2
            assert inv.a == 0


def test_suspension_polynomial():
    s = germ_from_dict({"g": "z^2 + w^6", "family": "a1_times", "n": 3})
    f = suspension(s)
    assert f == parse_polynomial("x^2 + y^2 + z^2 + w^6", ("x", "y", "z", "w"))


def test_suspension_variable_collision():
    g = parse_polynomial("x^2 + y^2", ("x", "y"))
    s = SuspendedCurveGerm(g=g, family=Family.CUSTOM, branches=2, r_override=1)
    with pytest.raises(ConfigError):
        suspension(s)


def test_delta_invariant_values():
    assert plane_delta_invariant(G("z^2 + w^6"), 2) == 3
    assert plane_delta_invariant(G("z^5 - w^5"), 5) == 10
    assert plane_delta_invariant(G("z^2 - w^3"), 1) == 1  # cusp


def test_delta_parity_guard():
    # the cusp has mu = 2; claiming two branches makes mu + r - 1 odd
    with pytest.raises(ConsistencyError):
        plane_delta_invariant(G("z^2 - w^3"), 2)


def test_delta_rejects_non_reduced():
    with pytest.raises(ValueError):
        plane_delta_invariant(G("z^2"), 1)


def test_wrong_branch_count_is_caught_by_report():
    # five concurrent lines declared with four branches: parity happens to
    # pass but the consistency relations fail
    germ = SuspendedCurveGerm(g=G("z^5 - w^5"), family=Family.CUSTOM,
                              branches=3, r_override=4)
    with pytest.raises(ConsistencyError):
        small_res_invariants(germ)


# ---------------------------------------------------------------- germ validation


def test_germ_from_dict_rejects_unknown_keys():
    with pytest.raises(ConfigError):
        germ_from_dict({"g": "z^2 + w^2", "family": "a1_times", "n": 1, "extra": 1})


def test_germ_from_dict_rejects_bad_family():
    with pytest.raises(ConfigError):
        germ_from_dict({"g": "z^2 + w^2", "family": "nope"})


def test_named_families_reject_overrides():
    with pytest.raises(ConfigError):
        germ_from_dict({"g": "z^2 + w^2", "family": "a1_times", "n": 1, "branches": 2})


def test_a1_times_requires_exact_shape():
    with pytest.raises(ConfigError):
        germ_from_dict({"g": "z^2 + w^5", "family": "a1_times", "n": 2})


def test_distinct_lines_rejects_repeated_line():
    with pytest.raises(ConfigError):  # z^2 divides
        germ_from_dict({"g": "z^2*w", "family": "distinct_lines", "n": 3})
    with pytest.raises(ConfigError):  # w^2 divides
        germ_from_dict({"g": "z*w^2", "family": "distinct_lines", "n": 3})


def test_distinct_lines_rejects_inhomogeneous():
    with pytest.raises(ConfigError):
        germ_from_dict({"g": "z^3 - w^2", "family": "distinct_lines", "n": 3})


def test_custom_needs_branches():
    with pytest.raises(ConfigError):
        SuspendedCurveGerm(g=G("z^2 - w^3"), family=Family.CUSTOM)


def test_custom_needs_r_override_for_invariants():
    germ = SuspendedCurveGerm(g=G("z^2 - w^3"), family=Family.CUSTOM, branches=1)
    with pytest.raises(ConfigError):
        small_res_invariants(germ)
