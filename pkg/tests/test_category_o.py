"""Tests for parameters, θ, the orders on standard modules and decomposition numbers."""

import random
from fractions import Fraction

import pytest
from pydantic import ValidationError

from app.fockkit.affine_weyl import weights_below
from app.fockkit.category_o import (
    CherednikParams,
    OrderRelation,
    PiVariant,
    block_decomposition_numbers,
    block_weight,
    charge_weight,
    check_theta_pairing_identity,
    cherednik_order,
    conjecture_hypotheses,
    parabolic_decomposition_numbers,
    params_from_block,
    params_from_charge,
    pi_shift,
    predicted_decomposition,
    theta,
    triangle_leq_block,
)
from app.fockkit.combinatorics import (
    Composition,
    MultiPartition,
    multipartitions_fitting,
    unembed_weight,
)
from app.fockkit.errors import BudgetExceeded, InvalidInput
from app.fockkit.fock_space import decomposition_matrices

EXAMPLE_NU = Composition.of(2, 1, 6, 1)
EXAMPLE_KAPPA = -2


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------

def _box(p: int, level: int = 4) -> MultiPartition:
    """The multipartition with a single box in component p."""
    return MultiPartition.of(*[[1] if q == p else [] for q in range(1, level + 1)])


# ---------------------------------------------------------------------------
# Parameters
# ---------------------------------------------------------------------------

def test_params_parse_rationals() -> None:
    """h and H accept "a/b" strings and refuse floats."""
    params = CherednikParams(h="-1/2", H="1/3,-2")
    assert params.h == Fraction(-1, 2)
    assert params.H == (Fraction(1, 3), Fraction(-2))
    assert params.h_all() == (Fraction(1, 3), Fraction(-2), Fraction(5, 3))
    assert params.level == 3
    with pytest.raises(ValidationError):
        CherednikParams(h=0.5)


def test_params_from_block_example() -> None:
    """κ = −2, ν = (2,1,6,1): h = −1/2 and H = (−7/4, 3/4, 1/4)."""
    params = params_from_block(EXAMPLE_NU, EXAMPLE_KAPPA)
    assert params.h == Fraction(-1, 2)
    assert params.H == (Fraction(-7, 4), Fraction(3, 4), Fraction(1, 4))
    assert params.h_all()[-1] == Fraction(3, 4)


def test_params_from_block_second_example() -> None:
    """κ = −1, ν = (1,1,4,1): h = −1, H = (−9/4, 3/4, 3/4)."""
    params = params_from_block(Composition.of(1, 1, 4, 1), -1)
    assert params.h == -1
    assert params.H == (Fraction(-9, 4), Fraction(3, 4), Fraction(3, 4))


def test_params_from_charge() -> None:
    """h = −1/e, h_p = (s_{p+1} − s_p)/e − 1/ℓ."""
    params = params_from_charge(Composition.of(2, 3, 1), 2)
    assert params.h == Fraction(-1, 2)
    assert params.H == (Fraction(1, 6), Fraction(-4, 3))
    with pytest.raises(InvalidInput):
        params_from_block(EXAMPLE_NU, 0)


def test_malformed_levels_are_invalid_input() -> None:
    """Levels that do not parse as rationals are refused with InvalidInput."""
    for kappa in ("abc", "1/0", 0.5):
        with pytest.raises(InvalidInput):
            params_from_block(EXAMPLE_NU, kappa)
        with pytest.raises(InvalidInput):
            block_weight(_box(1), EXAMPLE_NU, kappa)
    with pytest.raises(InvalidInput):
        check_theta_pairing_identity(_box(1), _box(2), EXAMPLE_NU, "1/0")


def test_q_exponents() -> None:
    """q_p = exp(2iπ(h_1 + … + h_{p−1} + (p−1)/ℓ))."""
    params = CherednikParams(h="-1/3", H=["1/6"])
    assert params.q_exponent() == Fraction(-1, 3)
    assert params.q_p_exponents() == (Fraction(0), Fraction(2, 3))


# ---------------------------------------------------------------------------
# θ and the Cherednik order
# ---------------------------------------------------------------------------

def test_theta_of_empty_and_level_one_box() -> None:
    """θ_∅ = 0, and a single box in level one has θ = 0."""
    params = CherednikParams(h="2/7")
    assert theta(MultiPartition.of([]), params) == 0
    assert theta(MultiPartition.of([1]), params) == 0


def test_theta_content_term() -> None:
    """In level one θ_(2) − θ_(1,1) = 2h."""
    params = CherednikParams(h="1/3")
    assert theta(MultiPartition.of([2]), params) == Fraction(1, 3)
    assert theta(MultiPartition.of([1, 1]), params) == Fraction(-1, 3)


def test_theta_single_boxes_in_example() -> None:
    """θ of a box in component p is 4(h_1 + … + h_{p−1})."""
    params = params_from_block(EXAMPLE_NU, EXAMPLE_KAPPA)
    assert [theta(_box(p), params) for p in range(1, 5)] == [0, -7, -4, -3]
    reversed_boxes = [_box(p).reversed() for p in (3, 2, 1, 4)]
    assert [theta(lam, params) for lam in reversed_boxes] == [-7, -4, -3, 0]


def test_cherednik_order_example_chain() -> None:
    """Δ_{1_2°} ≺ Δ_{1_3°}: θ_{1_2°} − θ_{1_3°} = 3."""
    params = params_from_block(EXAMPLE_NU, EXAMPLE_KAPPA)
    assert cherednik_order(_box(2).reversed(), _box(3).reversed(), params) == OrderRelation.MU_GREATER
    assert cherednik_order(_box(3).reversed(), _box(2).reversed(), params) == OrderRelation.LAMBDA_GREATER


def test_cherednik_order_incomparable() -> None:
    """Equal or non-integral θ differences are incomparable."""
    params = CherednikParams(h="1/3")
    lam, mu = MultiPartition.of([2]), MultiPartition.of([1, 1])
    assert cherednik_order(lam, mu, params) == OrderRelation.INCOMPARABLE
    assert cherednik_order(lam, lam, params) == OrderRelation.INCOMPARABLE


def test_theta_level_mismatch() -> None:
    with pytest.raises(InvalidInput):
        theta(MultiPartition.of([1], []), CherednikParams(h="1/2"))


# ---------------------------------------------------------------------------
# Weights and the order ⊴
# ---------------------------------------------------------------------------

def test_pi_shift_block_origin() -> None:
    """ν = (1,1), c = −4 gives π = (2,4)."""
    assert pi_shift(PiVariant.BLOCK, nu=Composition.of(1, 1), c=-4) == (2, 4)


def test_pi_shift_charge_origin() -> None:
    """s = (2,3,1): π + ρ = (2,1,3,2,1,1)."""
    pi = pi_shift(PiVariant.CHARGE, s=Composition.of(2, 3, 1))
    assert [x + r for x, r in zip(pi, (6, 5, 4, 3, 2, 1))] == [2, 1, 3, 2, 1, 1]
    assert pi_shift(PiVariant.CHARGE, s=Composition.of(3)) == (0, 0, 0)


def test_pi_shift_requires_its_inputs() -> None:
    with pytest.raises(InvalidInput):
        pi_shift(PiVariant.BLOCK, nu=Composition.of(1, 1))
    with pytest.raises(InvalidInput):
        pi_shift(PiVariant.CHARGE)


def test_charge_weight_matches_fock_weight() -> None:
    """λ + π + ρ is the α-sequence of the Fock label."""
    s = Composition.of(2, 3, 1)
    lam = MultiPartition.of([1, 1], [2, 1], [1])
    weight = charge_weight(lam, s, 2)
    shifted = [v + r for v, r in zip(weight.classical, (6, 5, 4, 3, 2, 1))]
    assert shifted == [3, 2, 5, 3, 1, 2]
    assert weight.level == -8


def test_triangle_order_example() -> None:
    """κ = −2, ν = (2,1,6,1): 1_2 ⊴ 1_3 and 1_4 ⊴ 1_1, but not 1_1 ⊴ 1_2."""
    assert triangle_leq_block(_box(2), _box(3), EXAMPLE_NU, EXAMPLE_KAPPA)
    assert not triangle_leq_block(_box(1), _box(2), EXAMPLE_NU, EXAMPLE_KAPPA)
    assert triangle_leq_block(_box(4), _box(1), EXAMPLE_NU, EXAMPLE_KAPPA)


def test_triangle_order_refines_cherednik_order() -> None:
    """μ ⊴ λ with μ ≠ λ forces Δ_{μ°} ≺ Δ_{λ°}."""
    params = params_from_block(EXAMPLE_NU, EXAMPLE_KAPPA)
    boxes = [_box(p) for p in range(1, 5)]
    for lam in boxes:
        for mu in boxes:
            if mu != lam and triangle_leq_block(mu, lam, EXAMPLE_NU, EXAMPLE_KAPPA):
                assert cherednik_order(mu.reversed(), lam.reversed(), params) == OrderRelation.MU_GREATER


def test_order_ideal_below_a_multipartition_stays_nonnegative() -> None:
    """If μ + π ⊴ λ + π with λ ∈ P_{n,s} and μ ν-dominant, then μ ∈ P_{n,s}."""
    rng = random.Random(11)
    cases = [
        (Composition.of(2, 2), 2),
        (Composition.of(1, 3), 2),
        (Composition.of(2, 3), 3),
        (Composition.of(3, 3), 2),
        (Composition.of(1, 2, 2), 2),
        (Composition.of(2, 1, 2), 3),
    ]
    below: dict[tuple[Composition, int, MultiPartition], list[tuple[Fraction, ...]]] = {}
    checked = 0
    while checked < 600:
        s, e = rng.choice(cases)
        n = rng.randint(1, 3)
        lam = rng.choice(multipartitions_fitting(n, s))
        key = (s, e, lam)
        if key not in below:
            pi = pi_shift(PiVariant.CHARGE, s=s)
            below[key] = [
                tuple(x - p for x, p in zip(w.classical, pi))
                for w in weights_below(charge_weight(lam, s, e), s, -e)
            ]
        mu = rng.choice(below[key])
        assert all(x.denominator == 1 and x >= 0 for x in mu), (s, e, lam, mu)
        assert sum(mu) == n
        assert unembed_weight([int(x) for x in mu], s) in multipartitions_fitting(n, s)
        checked += 1


def test_triangle_order_refines_cherednik_order_on_random_blocks() -> None:
    """μ ⊴ λ with μ ≠ λ forces Δ_{μ°} ≺ Δ_{λ°} for random labels of several blocks."""
    rng = random.Random(17)
    cases = [
        (EXAMPLE_NU, -2),
        (Composition.of(2, 1), -3),
        (Composition.of(2, 2), -1),
        (Composition.of(1, 1, 2), -2),
        (Composition.of(1, 2), -5),
    ]
    below: dict[tuple[Composition, int, MultiPartition], set] = {}
    checked = 0
    while checked < 600:
        nu, kappa = rng.choice(cases)
        pool = multipartitions_fitting(rng.randint(1, 3), nu)
        lam, mu = rng.choice(pool), rng.choice(pool)
        key = (nu, kappa, lam)
        if key not in below:
            below[key] = weights_below(block_weight(lam, nu, kappa), nu, kappa)
        if mu != lam and block_weight(mu, nu, kappa) in below[key]:
            params = params_from_block(nu, kappa)
            relation = cherednik_order(mu.reversed(), lam.reversed(), params)
            assert relation == OrderRelation.MU_GREATER, (nu, kappa, lam, mu)
        checked += 1


def test_order_search_budget() -> None:
    """A tiny node budget aborts the descent below 1_3."""
    top = block_weight(_box(3), EXAMPLE_NU, EXAMPLE_KAPPA)
    with pytest.raises(BudgetExceeded):
        weights_below(top, EXAMPLE_NU, EXAMPLE_KAPPA, node_budget=1)


def test_theta_pairing_identity_example() -> None:
    """The θ-difference equals the pairing with π + cω_0 on the example block."""
    boxes = [_box(p) for p in range(1, 5)]
    for lam in boxes:
        for mu in boxes:
            assert check_theta_pairing_identity(lam, mu, EXAMPLE_NU, EXAMPLE_KAPPA)


def test_theta_pairing_identity_random() -> None:
    """The identity holds for random pairs of equal size and random levels."""
    rng = random.Random(5)
    cases = [
        (Composition.of(2, 1), [-3, Fraction(-5, 2), 3]),
        (Composition.of(1, 1, 2), [-2, 3]),
        (EXAMPLE_NU, [-2, -5]),
    ]
    for nu, kappas in cases:
        for kappa in kappas:
            for n in (1, 2, 3):
                pool = multipartitions_fitting(n, nu)
                for _ in range(10):
                    lam, mu = rng.choice(pool), rng.choice(pool)
                    assert check_theta_pairing_identity(lam, mu, nu, kappa), (nu, kappa, lam, mu)


# ---------------------------------------------------------------------------
# Decomposition numbers
# ---------------------------------------------------------------------------

def test_block_decomposition_numbers_trivial() -> None:
    """n = 0 gives the 1×1 identity."""
    matrix = block_decomposition_numbers(0, Composition.of(1, 1), 2)
    assert matrix.entries == ((1,),)


def test_block_route_matches_fock_route() -> None:
    """∇⁻ from the Fock space equals the category O multiplicities after λ ↦ λ°."""
    cases = [
        (2, (2,), 2),
        (1, (2, 2), 2),
        (2, (2, 2), 2),
        (1, (1, 2), 2),
        (2, (2, 3), 2),
        (1, (1, 3), 3),
    ]
    for n, s, e in cases:
        charge = Composition.of(*s)
        _, nabla = decomposition_matrices(n, charge, e)
        block = block_decomposition_numbers(n, charge, e)
        assert set(block.rows) == {lam.reversed() for lam in nabla.rows}
        for lam in block.rows:
            for mu in block.cols:
                assert block.entry(lam, mu) == nabla.entry(lam.reversed(), mu.reversed()), (
                    s, e, lam, mu
                )


def test_parabolic_decomposition_numbers_follow_the_order() -> None:
    """κ = −1, ν = (1,1,4,1), n = 1: [Δ_λ : S_μ] = 1 exactly when μ ⊴ λ."""
    nu = Composition.of(1, 1, 4, 1)
    matrix = parabolic_decomposition_numbers(1, nu, -1)
    assert matrix.is_unitriangular()
    for lam in matrix.rows:
        for mu in matrix.cols:
            expected = 1 if triangle_leq_block(mu, lam, nu, -1) else 0
            assert matrix.entry(lam, mu) == expected, (lam, mu)


# ---------------------------------------------------------------------------
# Hypotheses and predictions
# ---------------------------------------------------------------------------

def test_hypotheses_hold() -> None:
    """n = 1, s = (1,3), e = 3 meets every hypothesis."""
    report = conjecture_hypotheses(1, Composition.of(1, 3), 3)
    assert report.holds()
    payload = report.to_json()
    assert payload["holds"] is True
    assert all(payload["checks"].values())


def test_hypotheses_fail() -> None:
    """n = 1, s = (1,1), e = 2 violates four hypotheses."""
    report = conjecture_hypotheses(1, Composition.of(1, 1), 2)
    assert not report.holds()
    failed = {v.name for v in report.violations}
    assert failed == {"q_plus_one", "distinct_q_p", "h_p_bound", "charge_gaps"}
    assert "4 of 6 hypotheses fail" in str(report)


def test_predicted_decomposition_is_unitriangular() -> None:
    """The prediction is a square unitriangular matrix on the bipartitions of 1."""
    s = Composition.of(1, 3)
    matrix = predicted_decomposition(1, s, 3)
    assert matrix.is_unitriangular()
    assert len(matrix.rows) == 2
    assert matrix.charge == (1, 3)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
