"""Level-ℓ Fock space combinatorics on finite wedge spaces Λ^m.

Indices a ∈ ℤ are decoded as a = c + e(p−1) + eℓr with c ∈ {1,…,e},
p ∈ {1,…,ℓ}; the pair (φ, p) with φ = c + er determines a.
"""

import logging
from collections.abc import Iterable, Mapping, Sequence
from concurrent.futures import ThreadPoolExecutor
from enum import Enum
from typing import Any

import pandas as pd
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from .affine_weyl import AffineWeight, antidominant_rep, tilde
from .combinatorics import (
    Composition,
    IntegerTuple,
    MultiPartition,
    blocks,
    embed_weight,
    is_nu_dominant,
    is_nu_strict,
    multipartitions_fitting,
    rho,
)
from .errors import InvalidInput
from .kl_engine import character_row, invert_unitriangular

logger = logging.getLogger(__name__)


# =========================================================================
# INDEX DECODING
# =========================================================================


class IndexDecomposition(BaseModel):
    model_config = ConfigDict(frozen=True)

    a: int
    c: int
    p: int
    r: int
    phi: int

    def to_json(self) -> dict[str, int]:
        return {"c": self.c, "p": self.p, "r": self.r, "phi": self.phi}


def _check_fock_params(e: int, level: int) -> None:
    if e < 2:
        raise InvalidInput(f"Fock space operations need e > 1, got e={e}")
    if level < 1:
        raise InvalidInput(f"level must be positive, got {level}")


def decode_index(a: int, e: int, level: int) -> IndexDecomposition:
    _check_fock_params(e, level)
    c = (a - 1) % e + 1
    t = (a - c) // e
    p = t % level + 1
    r = (t - (p - 1)) // level
    return IndexDecomposition(a=a, c=c, p=p, r=r, phi=c + e * r)


def encode_index(phi: int, p: int, e: int, level: int) -> int:
    _check_fock_params(e, level)
    if not 1 <= p <= level:
        raise InvalidInput(f"p={p} outside 1..{level}")
    c = (phi - 1) % e + 1
    r = (phi - c) // e
    return c + e * (p - 1) + e * level * r


def wedge_to_alpha(entries: Sequence[int], e: int, level: int) -> tuple[IntegerTuple, Composition]:
    """(α, ν) for a strictly decreasing tuple, α listed in the p-order ℓ, …, 1."""
    if any(a <= b for a, b in zip(entries, entries[1:], strict=False)):
        raise InvalidInput(f"{list(entries)} is not strictly decreasing")
    decoded = [decode_index(a, e, level) for a in entries]
    counts = [sum(1 for d in decoded if d.p == p) for p in range(1, level + 1)]
    alpha: list[int] = []
    for p in range(level, 0, -1):
        alpha.extend(d.phi for d in decoded if d.p == p)
    return tuple(alpha), Composition(parts=counts)


def alpha_to_wedge(alpha: Sequence[int], mu: Composition, e: int) -> IntegerTuple:
    """The strictly decreasing tuple mapped to (α, μ) by wedge_to_alpha."""
    level = mu.level
    outer = mu.reversed()
    if len(alpha) != outer.m:
        raise InvalidInput(f"alpha of length {len(alpha)} for a composition of {outer.m}")
    if not is_nu_strict(alpha, outer):
        raise InvalidInput(f"{list(alpha)} is not strictly decreasing in the blocks of {outer.to_json()}")
    result = []
    for q, (start, end) in enumerate(blocks(outer), start=1):
        p = level + 1 - q
        result.extend(encode_index(phi, p, e, level) for phi in alpha[start - 1 : end])
    return tuple(sorted(result, reverse=True))


def alpha_map(lam: Sequence[int], nu: Composition, s: Sequence[int]) -> IntegerTuple:
    """α_j = λ_j + i_p − j + s_p for j in the p-th block."""
    if len(lam) != nu.m or len(s) != nu.level:
        raise InvalidInput(f"shape mismatch: lambda {list(lam)}, nu {nu.to_json()}, s {list(s)}")
    if not is_nu_dominant(lam, nu):
        raise InvalidInput(f"{list(lam)} is not in Z^nu_(>=0)")
    result = []
    for (start, end), charge in zip(blocks(nu), s, strict=True):
        for j in range(start, end + 1):
            result.append(lam[j - 1] + start - j + charge)
    return tuple(result)


def underline_alpha(lam: Sequence[int], nu: Composition, s: Sequence[int], e: int) -> IntegerTuple:
    return alpha_to_wedge(alpha_map(lam, nu, s), nu.reversed(), e)


# =========================================================================
# WEDGES
# =========================================================================


class WedgeVector:
    """Finite integer combination of wedges u_{a_1} ∧ … ∧ u_{a_m}, a_1 > … > a_m."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[IntegerTuple, int] | None = None) -> None:
        self.terms: dict[IntegerTuple, int] = {}
        for key, coeff in (terms or {}).items():
            self._accumulate(key, coeff)

    @classmethod
    def wedge(cls, *entries: int) -> "WedgeVector":
        return cls({tuple(entries): 1})

    def _accumulate(self, entries: Sequence[int], coeff: int) -> None:
        if coeff == 0 or len(set(entries)) != len(entries):
            return
        order = sorted(range(len(entries)), key=lambda i: -entries[i])
        key = tuple(entries[i] for i in order)
        if _parity(order):
            coeff = -coeff
        total = self.terms.get(key, 0) + coeff
        if total:
            self.terms[key] = total
        else:
            self.terms.pop(key, None)

    def __add__(self, other: "WedgeVector") -> "WedgeVector":
        result = WedgeVector(self.terms)
        for key, coeff in other.terms.items():
            result._accumulate(key, coeff)
        return result

    def __sub__(self, other: "WedgeVector") -> "WedgeVector":
        return self + other.scale(-1)

    def scale(self, factor: int) -> "WedgeVector":
        return WedgeVector({key: coeff * factor for key, coeff in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WedgeVector):
            return NotImplemented
        return self.terms == other.terms

    def __repr__(self) -> str:
        return f"WedgeVector({self.terms})"

    def to_json(self) -> list[dict[str, Any]]:
        return [
            {"tuple": list(key), "coeff": coeff}
            for key, coeff in sorted(self.terms.items(), reverse=True)
        ]


def _parity(order: Sequence[int]) -> int:
    seen = [False] * len(order)
    parity = 0
    for i in range(len(order)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = order[j]
            length += 1
        parity ^= (length - 1) & 1
    return parity


class ChevalleyKind(str, Enum):
    E = "e"
    F = "f"


class ChevalleyOp(BaseModel):
    """A generator e_a or f_a of ŝl_e, a ∈ ℤ/e."""

    model_config = ConfigDict(frozen=True)

    kind: ChevalleyKind
    a: int

    @classmethod
    def parse(cls, text: str, e: int) -> "ChevalleyOp":
        """Accept ``f0``, ``e_1``, ``f_3`` (residue taken modulo e)."""
        raw = text.strip().replace("_", "")
        if len(raw) < 2 or raw[0] not in "ef":
            raise InvalidInput(f"unknown Chevalley generator {text!r}")
        try:
            a = int(raw[1:])
        except ValueError as exc:
            raise InvalidInput(f"unknown Chevalley generator {text!r}") from exc
        return cls(kind=ChevalleyKind(raw[0]), a=a % e)

    def __str__(self) -> str:
        return f"{self.kind.value}_{self.a}"


def _act_on_index(op: ChevalleyOp, a: int, e: int, level: int) -> int | None:
    b = op.a % e
    if op.kind == ChevalleyKind.F:
        if a % e != b:
            return None
        return a + 1 if b else a + 1 - e + e * level
    below = a - 1
    if below % e != b:
        return None
    return below if b else below + e - e * level


def chevalley_apply(op: ChevalleyOp, v: WedgeVector, e: int, level: int) -> WedgeVector:
    """Apply e_a or f_a as a derivation on each wedge factor, then straighten."""
    _check_fock_params(e, level)
    result = WedgeVector()
    for key, coeff in v.terms.items():
        for j, a in enumerate(key):
            image = _act_on_index(op, a, e, level)
            if image is not None:
                result._accumulate(key[:j] + (image,) + key[j + 1 :], coeff)
    return result


# =========================================================================
# LABELS
# =========================================================================


class FockLabel(BaseModel):
    """The standard vector |λ, ν, s, e⟩ of Λ^ν."""

    model_config = ConfigDict(frozen=True)

    lam: tuple[int, ...]
    nu: Composition
    s: tuple[int, ...]
    e: int

    @field_validator("nu", mode="before")
    @classmethod
    def parse_nu(cls, v: Any) -> Any:
        if isinstance(v, (str, list, tuple)):
            return Composition(parts=v)
        return v

    @field_validator("lam", "s", mode="before")
    @classmethod
    def parse_tuple(cls, v: Any) -> tuple[int, ...]:
        if isinstance(v, str):
            v = [int(x) for x in v.replace(" ", "").split(",") if x != ""]
        return tuple(int(x) for x in v)

    @model_validator(mode="after")
    def check_shape(self) -> "FockLabel":
        if len(self.lam) != self.nu.m:
            raise ValueError(f"lambda has {len(self.lam)} entries for nu={self.nu.to_json()}")
        if len(self.s) != self.nu.level:
            raise ValueError(f"charge has {len(self.s)} entries for level {self.nu.level}")
        if not is_nu_dominant(self.lam, self.nu):
            raise ValueError(f"{list(self.lam)} is not weakly decreasing in each block")
        if self.e < 2:
            raise ValueError(f"e must exceed 1, got {self.e}")
        return self

    @property
    def size(self) -> int:
        return sum(self.lam)

    def alpha(self) -> IntegerTuple:
        return alpha_map(self.lam, self.nu, self.s)

    def underline_alpha(self) -> IntegerTuple:
        return underline_alpha(self.lam, self.nu, self.s, self.e)

    def with_lam(self, lam: Sequence[int]) -> "FockLabel":
        return FockLabel(lam=tuple(lam), nu=self.nu, s=self.s, e=self.e)

    def weight(self) -> AffineWeight:
        """The tilde-normalized weight α(λ,ν,s) − ρ at level κ−m, κ = −e."""
        alpha = self.alpha()
        return tilde([a - r for a, r in zip(alpha, rho(len(alpha)), strict=True)], -self.e)

    def to_json(self) -> list[int]:
        return list(self.lam)


def standard_vector(x: FockLabel) -> WedgeVector:
    """The block-ordered wedge of x: block q of α carries p = ℓ+1−q."""
    level = x.nu.level
    alpha = x.alpha()
    factors = []
    for q, (start, end) in enumerate(blocks(x.nu), start=1):
        factors.extend(encode_index(phi, level + 1 - q, x.e, level) for phi in alpha[start - 1 : end])
    return WedgeVector({tuple(factors): 1})


def chevalley_standard(op: ChevalleyOp, x: FockLabel) -> dict[FockLabel, int]:
    """Labels reached by one arrow of residue a, each with coefficient +1."""
    alpha = x.alpha()
    result: dict[FockLabel, int] = {}
    for start, end in blocks(x.nu):
        for j in range(start, end + 1):
            value = alpha[j - 1]
            if op.kind == ChevalleyKind.F:
                if value % x.e != op.a % x.e:
                    continue
                if j > start and alpha[j - 2] == value + 1:
                    continue
                step = 1
            else:
                if (value - 1) % x.e != op.a % x.e:
                    continue
                if j < end and alpha[j] == value - 1:
                    continue
                step = -1
            lam = list(x.lam)
            lam[j - 1] += step
            target = x.with_lam(lam)
            result[target] = result.get(target, 0) + 1
    return result


def label_from_weight(weight: AffineWeight, template: FockLabel) -> FockLabel:
    """Invert FockLabel.weight on the classical part."""
    alpha = [v + r for v, r in zip(weight.classical, rho(weight.m), strict=True)]
    lam = []
    for (start, end), charge in zip(blocks(template.nu), template.s, strict=True):
        for j in range(start, end + 1):
            value = alpha[j - 1] - start + j - charge
            if value.denominator != 1:
                raise InvalidInput(f"{weight!r} is not the weight of a Fock label")
            lam.append(int(value))
    return template.with_lam(lam)


def canonical_Gminus(mu: FockLabel, q_analog: bool = False) -> dict[FockLabel, Any]:
    """G(μ)⁻ = Σ_λ (−1)^{l(v_λ)−l(v_μ)} P^{γ,−1}_{v_λ,v_μ}(1) |λ⟩.

    With ``q_analog`` the coefficients are the signed polynomials themselves.
    """
    row = character_row(mu.weight(), mu.nu)
    expansion: dict[FockLabel, Any] = {}
    for weight, poly in row.items():
        label = label_from_weight(weight, mu)
        if q_analog:
            expansion[label] = poly
        elif poly.at_one():
            expansion[label] = poly.at_one()
    return expansion


def chevalley_length(x: FockLabel) -> int:
    """l(v_x) for the minimal element carrying the antidominant weight to x."""
    return antidominant_rep(x.weight())[1].length()


# =========================================================================
# DECOMPOSITION MATRICES
# =========================================================================


class FockState(BaseModel):
    """A basis vector |λ, s, e⟩ of the Fock space of multicharge s."""

    model_config = ConfigDict(frozen=True)

    multipartition: MultiPartition
    charge: tuple[int, ...]

    def to_json(self) -> dict[str, Any]:
        return {"multipartition": self.multipartition.to_json(), "charge": list(self.charge)}


def to_fock_label(x: FockLabel) -> FockState | None:
    """|λ, s, s°, e⟩ ↦ |λ°, s°, e⟩; None when λ has a negative entry."""
    if x.nu.parts != x.s:
        raise InvalidInput(f"to_fock_label needs nu = s, got nu={x.nu.to_json()}, s={list(x.s)}")
    if any(v < 0 for v in x.lam):
        return None
    components = [x.lam[start - 1 : end] for start, end in blocks(x.nu)]
    lam = MultiPartition(components=tuple(tuple(c) for c in components))
    return FockState(multipartition=lam.reversed(), charge=tuple(reversed(x.s)))


class DecompMatrix(BaseModel):
    """An integer matrix indexed by multipartitions (values at q = 1)."""

    model_config = ConfigDict(frozen=True)

    rows: tuple[MultiPartition, ...]
    cols: tuple[MultiPartition, ...]
    entries: tuple[tuple[int, ...], ...]
    charge: tuple[int, ...] = ()
    e: int = 0

    @model_validator(mode="after")
    def check_shape(self) -> "DecompMatrix":
        if len(self.entries) != len(self.rows):
            raise ValueError("entries do not match the row labels")
        if any(len(row) != len(self.cols) for row in self.entries):
            raise ValueError("entries do not match the column labels")
        return self

    def entry(self, row: MultiPartition, col: MultiPartition) -> int:
        try:
            return self.entries[self.rows.index(row)][self.cols.index(col)]
        except ValueError as exc:
            raise InvalidInput(f"no entry for ({row}, {col})") from exc

    def transpose_relabel(self) -> "DecompMatrix":
        """M'[ᵗμ][ᵗλ] = M[λ][μ], with the charge s ↦ −s°."""
        return DecompMatrix(
            rows=tuple(c.transpose() for c in self.cols),
            cols=tuple(r.transpose() for r in self.rows),
            entries=tuple(
                tuple(self.entries[i][j] for i in range(len(self.rows)))
                for j in range(len(self.cols))
            ),
            charge=tuple(-c for c in reversed(self.charge)),
            e=self.e,
        )

    def is_unitriangular(self) -> bool:
        """Unit diagonal and a triangular pattern in some order of the labels."""
        if self.rows != self.cols:
            return False
        n = len(self.rows)
        if any(self.entries[i][i] != 1 for i in range(n)):
            return False
        # Repeatedly peel off a label whose row is zero off the diagonal.
        remaining = set(range(n))
        while remaining:
            peel = [
                i for i in remaining
                if all(self.entries[i][j] == 0 for j in remaining if j != i)
            ]
            if not peel:
                return False
            remaining -= set(peel)
        return True

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [list(row) for row in self.entries],
            index=[str(r) for r in self.rows],
            columns=[str(c) for c in self.cols],
        )

    def to_json(self) -> dict[str, Any]:
        return {
            "rows": [r.to_json() for r in self.rows],
            "cols": [c.to_json() for c in self.cols],
            "entries": [list(row) for row in self.entries],
        }


def fock_labels(n: int, s: Composition, e: int) -> list[FockLabel]:
    """|λ, s, s°, e⟩ for λ ∈ P^ℓ_{n,s}."""
    return [
        FockLabel(lam=embed_weight(lam, s), nu=s, s=s.parts, e=e)
        for lam in multipartitions_fitting(n, s)
    ]


def _map_rows(function: Any, items: Iterable[Any], workers: int) -> list[Any]:
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [function(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(function, items))


def decomposition_matrices(
    n: int, s: Composition, e: int, workers: int = 1
) -> tuple[DecompMatrix, DecompMatrix]:
    """(Δ⁻, ∇⁻) over P^ℓ_{n,s}, labelled by λ° with charge s°."""
    labels = fock_labels(n, s, e)
    lengths = {x: chevalley_length(x) for x in labels}
    labels.sort(key=lambda x: (lengths[x], x.lam))
    index = {x: i for i, x in enumerate(labels)}
    rows = _map_rows(canonical_Gminus, labels, workers)
    size = len(labels)
    delta = [[0] * size for _ in range(size)]
    for i, expansion in enumerate(rows):
        for label, coeff in expansion.items():
            j = index.get(label)
            if j is None:
                logger.debug("G-(%s): dropping term outside P_(n,s): %s", labels[i].lam, label.lam)
                continue
            delta[i][j] = coeff
    nabla = invert_unitriangular(delta)
    names = []
    for x in labels:
        state = to_fock_label(x)
        if state is None:
            raise InvalidInput(f"label {list(x.lam)} has no Fock counterpart")
        names.append(state.multipartition)
    charge = tuple(reversed(s.parts))
    return (
        _labelled(names, delta, charge, e),
        _labelled(names, nabla, charge, e),
    )


def _labelled(
    names: list[MultiPartition], entries: list[list[int]], charge: tuple[int, ...], e: int
) -> DecompMatrix:
    return DecompMatrix(
        rows=tuple(names),
        cols=tuple(names),
        entries=tuple(tuple(row) for row in entries),
        charge=charge,
        e=e,
    )


def yvonne_delta_plus(n: int, s: Composition, e: int, workers: int = 1) -> DecompMatrix:
    """Δ⁺_{ᵗμ,ᵗλ,−s,e} = ∇⁻_{λ,μ,s°,e}."""
    _, nabla = decomposition_matrices(n, s, e, workers=workers)
    return nabla.transpose_relabel()
