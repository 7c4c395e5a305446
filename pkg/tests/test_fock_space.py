"""Tests for Fock space indices, wedges, Chevalley operators and canonical bases."""

import itertools
import random

import pytest

from app.fockkit.combinatorics import Composition, MultiPartition, compositions, is_nu_dominant
from app.fockkit.errors import InvalidInput
from app.fockkit.fock_space import (
    ChevalleyOp,
    FockLabel,
    WedgeVector,
    alpha_map,
    alpha_to_wedge,
    canonical_Gminus,
    chevalley_apply,
    chevalley_standard,
    decode_index,
    decomposition_matrices,
    encode_index,
    standard_vector,
    to_fock_label,
    underline_alpha,
    wedge_to_alpha,
    yvonne_delta_plus,
)


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------

def _labels(e: int, level: int, m: int) -> list[FockLabel]:
    """All labels of rank m with charges in {0,1} and entries in {−1,0,1}."""
    found = []
    for nu in compositions(m, level):
        for s in itertools.product(range(2), repeat=level):
            for lam in itertools.product(range(-1, 2), repeat=m):
                if is_nu_dominant(lam, nu):
                    found.append(FockLabel(lam=lam, nu=nu, s=s, e=e))
    return found


def _ops(e: int) -> list[ChevalleyOp]:
    return [ChevalleyOp.parse(f"{kind}{a}", e) for kind in "ef" for a in range(e)]


def _by_lam(expansion: dict[FockLabel, int]) -> dict[tuple[int, ...], int]:
    return {label.lam: coeff for label, coeff in expansion.items()}


def _product(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


# ---------------------------------------------------------------------------
# Index decoding and the wedge bijection
# ---------------------------------------------------------------------------

def test_decode_index_examples() -> None:
    """a = c + e(p−1) + eℓr with e = 2, ℓ = 3."""
    assert decode_index(3, 2, 3).to_json() == {"c": 1, "p": 2, "r": 0, "phi": 1}
    assert decode_index(-7, 2, 3).to_json() == {"c": 1, "p": 3, "r": -2, "phi": -3}
    assert decode_index(0, 2, 3).to_json() == {"c": 2, "p": 3, "r": -1, "phi": 0}


def test_encode_index_examples() -> None:
    """encode(5, 1) = 13 and encode(0, 3) = 0 for e = 2, ℓ = 3."""
    assert encode_index(5, 1, 2, 3) == 13
    assert encode_index(0, 3, 2, 3) == 0


def test_decode_encode_roundtrip() -> None:
    """encode inverts decode on a window of indices."""
    for e in (2, 3, 5):
        for level in (1, 2, 3):
            for a in range(-60, 61):
                d = decode_index(a, e, level)
                assert 1 <= d.c <= e
                assert 1 <= d.p <= level
                assert encode_index(d.phi, d.p, e, level) == a


def test_index_parameters_are_validated() -> None:
    """e must exceed 1 and p must lie in 1..ℓ."""
    with pytest.raises(InvalidInput):
        decode_index(3, 1, 2)
    with pytest.raises(InvalidInput):
        encode_index(1, 4, 2, 3)


def test_wedge_to_alpha_example() -> None:
    """(3,1,0,−2,−4,−6,−7) ↦ α = (0,−2,−3,1,0,1,0), ν = (2,2,3)."""
    alpha, nu = wedge_to_alpha((3, 1, 0, -2, -4, -6, -7), 2, 3)
    assert nu.parts == (2, 2, 3)
    assert alpha == (0, -2, -3, 1, 0, 1, 0)


def test_alpha_to_wedge_example() -> None:
    """α = (3,0,2,−3,5,1,−2), μ = (3,2,2) ↦ (13,11,4,1,0,−9,−10)."""
    assert alpha_to_wedge((3, 0, 2, -3, 5, 1, -2), Composition.of(3, 2, 2), 2) == (
        13, 11, 4, 1, 0, -9, -10,
    )


def test_wedge_bijection_roundtrip() -> None:
    """alpha_to_wedge inverts wedge_to_alpha on random strictly decreasing tuples."""
    rng = random.Random(3)
    for _ in range(1000):
        e = rng.choice((2, 3, 4))
        level = rng.choice((1, 2, 3))
        entries = tuple(sorted(rng.sample(range(-30, 30), rng.randint(1, 8)), reverse=True))
        alpha, nu = wedge_to_alpha(entries, e, level)
        assert alpha_to_wedge(alpha, nu, e) == entries


def test_underline_alpha_decomposes_back_to_alpha() -> None:
    """wedge_to_alpha(underline-α) gives back α with the reversed composition."""
    rng = random.Random(13)
    checked = 0
    while checked < 1000:
        e = rng.choice((2, 3, 4))
        level = rng.choice((1, 2, 3))
        parts = [rng.randint(0, 3) for _ in range(level)]
        if sum(parts) == 0:
            continue
        nu = Composition(parts=parts)
        s = [rng.randint(-3, 3) for _ in range(level)]
        lam: list[int] = []
        for part in parts:
            lam.extend(sorted((rng.randint(-3, 3) for _ in range(part)), reverse=True))
        wedge = underline_alpha(lam, nu, s, e)
        assert wedge_to_alpha(wedge, e, level) == (alpha_map(lam, nu, s), nu.reversed())
        checked += 1


def test_wedge_to_alpha_rejects_non_decreasing() -> None:
    with pytest.raises(InvalidInput):
        wedge_to_alpha((1, 3), 2, 1)


def test_alpha_map_examples() -> None:
    """α_j = λ_j + i_p − j + s_p."""
    assert alpha_map((2, 0, 1, -3, 1, -2, -4), Composition.of(2, 2, 3), (1, 1, 4)) == (
        3, 0, 2, -3, 5, 1, -2,
    )
    nu = Composition.of(2, 3, 1)
    assert alpha_map((1, 1, 2, 1, 0, 1), nu, (2, 3, 1)) == (3, 2, 5, 3, 1, 2)


def test_underline_alpha_example() -> None:
    """λ = (1,1,2,1,0,1), ν = s = (2,3,1), e = 2 ↦ (15,11,9,6,3,2)."""
    nu = Composition.of(2, 3, 1)
    assert underline_alpha((1, 1, 2, 1, 0, 1), nu, (2, 3, 1), 2) == (15, 11, 9, 6, 3, 2)
    label = FockLabel(lam=(1, 1, 2, 1, 0, 1), nu=nu, s=(2, 3, 1), e=2)
    assert label.underline_alpha() == (15, 11, 9, 6, 3, 2)


def test_alpha_map_rejects_non_dominant_lambda() -> None:
    with pytest.raises(InvalidInput):
        alpha_map((0, 1), Composition.of(2), (0,))


# ---------------------------------------------------------------------------
# Wedges and Chevalley operators
# ---------------------------------------------------------------------------

def test_wedge_normal_ordering() -> None:
    """Straightening applies the sign of the sorting permutation; repeats vanish."""
    assert WedgeVector.wedge(1, 3) == WedgeVector({(3, 1): -1})
    assert WedgeVector.wedge(2, 1, 3) == WedgeVector({(3, 2, 1): 1})
    assert WedgeVector.wedge(2, 2).is_zero()
    assert (WedgeVector.wedge(3, 1) + WedgeVector.wedge(1, 3)).is_zero()


def test_chevalley_op_parsing() -> None:
    """Generators are written f0, e_1, …; the residue is reduced modulo e."""
    assert str(ChevalleyOp.parse("f_3", 2)) == "f_1"
    assert str(ChevalleyOp.parse("e0", 3)) == "e_0"
    with pytest.raises(InvalidInput):
        ChevalleyOp.parse("g1", 2)
    with pytest.raises(InvalidInput):
        ChevalleyOp.parse("fx", 2)


def test_chevalley_f0_example() -> None:
    """f_0(u_4 ∧ u_2) = u_7 ∧ u_2 − u_5 ∧ u_4 for e = ℓ = 2."""
    image = chevalley_apply(ChevalleyOp.parse("f0", 2), WedgeVector.wedge(4, 2), 2, 2)
    assert image == WedgeVector({(7, 2): 1, (5, 4): -1})


def test_chevalley_collision_gives_zero() -> None:
    """e_1(u_2 ∧ u_1) = 0 for e = 2, ℓ = 1."""
    image = chevalley_apply(ChevalleyOp.parse("e1", 2), WedgeVector.wedge(2, 1), 2, 1)
    assert image.is_zero()


def test_chevalley_standard_adds_a_box() -> None:
    """f_0 adds the box of content 0 to the empty partition."""
    x = FockLabel(lam=(0,), nu=(1,), s=(0,), e=2)
    assert _by_lam(chevalley_standard(ChevalleyOp.parse("f0", 2), x)) == {(1,): 1}
    assert chevalley_standard(ChevalleyOp.parse("f1", 2), x) == {}


def test_chevalley_standard_agrees_with_wedge_action() -> None:
    """The combinatorial rule matches the action on standard wedges."""
    for e in (2, 3):
        for level in (1, 2):
            for m in (1, 2, 3):
                for x in _labels(e, level, m):
                    for op in _ops(e):
                        expected = WedgeVector()
                        for y, coeff in chevalley_standard(op, x).items():
                            expected = expected + standard_vector(y).scale(coeff)
                        assert chevalley_apply(op, standard_vector(x), e, level) == expected, (
                            str(op), x,
                        )


# ---------------------------------------------------------------------------
# Labels and canonical bases
# ---------------------------------------------------------------------------

def test_fock_label_validation() -> None:
    """Shapes must match and λ must be weakly decreasing in each block."""
    with pytest.raises(ValueError):
        FockLabel(lam=(0, 1), nu=(2,), s=(0,), e=2)
    with pytest.raises(ValueError):
        FockLabel(lam=(0,), nu=(1,), s=(0, 0), e=2)
    with pytest.raises(ValueError):
        FockLabel(lam=(0,), nu=(1,), s=(0,), e=1)


def test_to_fock_label_example() -> None:
    """|λ, s, s°⟩ with λ = (1,1,2,1,0,1), s = (2,3,1) ↦ ((1),(2,1),(1,1)) of charge (1,3,2)."""
    x = FockLabel(lam=(1, 1, 2, 1, 0, 1), nu=(2, 3, 1), s=(2, 3, 1), e=2)
    state = to_fock_label(x)
    assert state is not None
    assert state.multipartition == MultiPartition.of([1], [2, 1], [1, 1])
    assert state.charge == (1, 3, 2)


def test_to_fock_label_negative_entry() -> None:
    """Labels with a negative entry have no Fock counterpart."""
    x = FockLabel(lam=(1, -1), nu=(2,), s=(2,), e=2)
    assert to_fock_label(x) is None
    with pytest.raises(InvalidInput):
        to_fock_label(FockLabel(lam=(1, 0), nu=(2,), s=(3,), e=2))


def test_canonical_basis_regressions() -> None:
    """e = 2, ℓ = 1, s = (2): G⁻((1,1)) = |(1,1)⟩ and G⁻((2,0)) = |(2,0)⟩ − |(1,1)⟩."""
    mu = FockLabel(lam=(1, 1), nu=(2,), s=(2,), e=2)
    assert _by_lam(canonical_Gminus(mu)) == {(1, 1): 1}
    mu = FockLabel(lam=(2, 0), nu=(2,), s=(2,), e=2)
    assert _by_lam(canonical_Gminus(mu)) == {(2, 0): 1, (1, 1): -1}


def test_canonical_basis_contains_its_label_once() -> None:
    """G⁻(μ) = |μ⟩ + lower terms, and the q-analog specializes at q = 1."""
    for x in _labels(2, 2, 2):
        plain = canonical_Gminus(x)
        assert plain[x] == 1
        graded = canonical_Gminus(x, q_analog=True)
        for label, coeff in plain.items():
            assert graded[label].at_one() == coeff


def test_decomposition_matrices_small_example() -> None:
    """𝔖_2 at e = 2: [M(2) : L(1,1)] = 1."""
    delta, nabla = decomposition_matrices(2, Composition.of(2), 2)
    two, one_one = MultiPartition.of([2]), MultiPartition.of([1, 1])
    assert delta.entry(two, one_one) == -1
    assert nabla.entry(two, one_one) == 1
    assert nabla.entry(one_one, two) == 0
    assert delta.charge == (2,)


def test_decomposition_matrices_are_inverse_unitriangular() -> None:
    """Δ⁻·∇⁻ = I, both unitriangular, ∇⁻ nonnegative."""
    for n, s, e in [
        (0, (1, 1), 2),
        (1, (1, 1), 2),
        (2, (2, 2), 2),
        (2, (2, 3), 3),
        (2, (2,), 3),
        (1, (1, 3), 3),
        (3, (1, 1), 2),
        (3, (3,), 2),
        (3, (1, 2), 3),
        (3, (2, 2), 3),
    ]:
        delta, nabla = decomposition_matrices(n, Composition(parts=s), e)
        size = len(delta.rows)
        product = _product([list(r) for r in delta.entries], [list(r) for r in nabla.entries])
        assert product == [[1 if i == j else 0 for j in range(size)] for i in range(size)]
        assert delta.is_unitriangular()
        assert nabla.is_unitriangular()
        assert all(v >= 0 for row in nabla.entries for v in row)
        assert delta.rows == nabla.rows


def test_decomposition_matrix_of_empty_multipartition() -> None:
    """n = 0 gives the 1×1 identity."""
    delta, nabla = decomposition_matrices(0, Composition.of(2, 1), 3)
    assert delta.entries == ((1,),)
    assert nabla.rows == (MultiPartition.of([], []),)


def test_yvonne_matrix_shape() -> None:
    """n = 1, s = (3,1,2,3), e = 2 gives a unitriangular 4×4 matrix."""
    plus = yvonne_delta_plus(1, Composition.of(3, 1, 2, 3), 2)
    assert len(plus.rows) == 4
    assert plus.is_unitriangular()
    assert plus.charge == (-3, -1, -2, -3)


def test_yvonne_is_transposed_nabla() -> None:
    """Δ⁺_{ᵗμ,ᵗλ} = ∇⁻_{λ,μ}."""
    s = Composition.of(2, 2)
    _, nabla = decomposition_matrices(2, s, 2)
    plus = yvonne_delta_plus(2, s, 2)
    for lam in nabla.rows:
        for mu in nabla.cols:
            assert plus.entry(mu.transpose(), lam.transpose()) == nabla.entry(lam, mu)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
