"""Partitions, multipartitions, compositions and their embedding into ℤ^m."""

import itertools
from collections.abc import Iterable, Sequence
from fractions import Fraction
from typing import Any

from pydantic import BaseModel, ConfigDict, field_validator

from .errors import InvalidInput

IntegerTuple = tuple[int, ...]
RationalTuple = tuple[Fraction, ...]


class Partition(BaseModel):
    """A partition, stored without trailing zeros."""

    model_config = ConfigDict(frozen=True)

    parts: tuple[int, ...] = ()

    @field_validator("parts", mode="before")
    @classmethod
    def parse_parts(cls, v: Any) -> tuple[int, ...]:
        """Accept any integer sequence; zeros at the end are dropped."""
        if isinstance(v, str):
            v = [int(x) for x in v.replace(" ", "").split(",") if x != ""]
        parts = [int(x) for x in v]
        while parts and parts[-1] == 0:
            parts.pop()
        for a, b in zip(parts, parts[1:], strict=False):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing, got {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be positive, got {parts}")
        return tuple(parts)

    @classmethod
    def of(cls, parts: Iterable[int]) -> "Partition":
        return cls(parts=tuple(parts))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def n_statistic(self) -> int:
        """n(λ) = Σ λ_i (i − 1)."""
        return sum(part * i for i, part in enumerate(self.parts))

    def transpose(self) -> "Partition":
        if not self.parts:
            return self
        return Partition.of(sum(1 for part in self.parts if part > j) for j in range(self.parts[0]))

    def padded(self, length: int) -> IntegerTuple:
        if self.length > length:
            raise InvalidInput(f"partition {list(self.parts)} has more than {length} parts")
        return self.parts + (0,) * (length - self.length)

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


class MultiPartition(BaseModel):
    """An ℓ-tuple of partitions."""

    model_config = ConfigDict(frozen=True)

    components: tuple[Partition, ...]

    @field_validator("components", mode="before")
    @classmethod
    def parse_components(cls, v: Any) -> tuple[Partition, ...]:
        """Components may be given as Partitions or as plain integer lists."""
        result = []
        for comp in v:
            if isinstance(comp, Partition):
                result.append(comp)
            elif isinstance(comp, dict):
                result.append(Partition(**comp))
            else:
                result.append(Partition.of(comp))
        if not result:
            raise ValueError("a multipartition needs at least one component")
        return tuple(result)

    @classmethod
    def of(cls, *components: Iterable[int]) -> "MultiPartition":
        return cls(components=tuple(tuple(c) for c in components))

    @classmethod
    def empty(cls, level: int) -> "MultiPartition":
        return cls(components=((),) * level)

    @property
    def level(self) -> int:
        return len(self.components)

    @property
    def size(self) -> int:
        return sum(comp.size for comp in self.components)

    def reversed(self) -> "MultiPartition":
        """λ° = (λ_ℓ, …, λ_1)."""
        return MultiPartition(components=tuple(reversed(self.components)))

    def transpose(self) -> "MultiPartition":
        return transpose_mp(self)

    def fits(self, nu: "Composition") -> bool:
        """Membership in P^ℓ_{n,ν}: l(λ_p) ≤ ν_p for every p."""
        return nu.level == self.level and all(
            comp.length <= part for comp, part in zip(self.components, nu.parts, strict=True)
        )

    def to_json(self) -> list[list[int]]:
        return [list(comp.parts) for comp in self.components]

    def __str__(self) -> str:
        return "(" + ",".join(str(comp) for comp in self.components) + ")"


class Composition(BaseModel):
    """A composition ν of m with ℓ nonnegative parts."""

    model_config = ConfigDict(frozen=True)

    parts: tuple[int, ...]

    @field_validator("parts", mode="before")
    @classmethod
    def parse_parts(cls, v: Any) -> tuple[int, ...]:
        if isinstance(v, str):
            v = [int(x) for x in v.replace(" ", "").split(",") if x != ""]
        parts = tuple(int(x) for x in v)
        if not parts:
            raise ValueError("a composition needs at least one part")
        if any(part < 0 for part in parts):
            raise ValueError(f"composition parts must be nonnegative, got {list(parts)}")
        return parts

    @classmethod
    def of(cls, *parts: int) -> "Composition":
        return cls(parts=parts)

    @property
    def m(self) -> int:
        return sum(self.parts)

    @property
    def level(self) -> int:
        return len(self.parts)

    def starts(self) -> tuple[int, ...]:
        """i_p = 1 + ν_1 + … + ν_{p−1}."""
        result = []
        running = 1
        for part in self.parts:
            result.append(running)
            running += part
        return tuple(result)

    def reversed(self) -> "Composition":
        """ν°."""
        return Composition(parts=tuple(reversed(self.parts)))

    def bullet(self) -> "Composition":
        """ν• = (ν_{ℓ−1}, …, ν_1, ν_ℓ)."""
        return Composition(parts=tuple(reversed(self.parts[:-1])) + (self.parts[-1],))

    def block_of(self, j: int) -> int:
        """The p with j ∈ J_{ν,p} (1-based j and p)."""
        for p, (start, end) in enumerate(blocks(self), start=1):
            if start <= j <= end:
                return p
        raise InvalidInput(f"index {j} outside 1..{self.m}")

    def in_c(self, n: int) -> bool:
        """Membership in C_{m,ℓ,n}: all parts ≥ n."""
        return all(part >= n for part in self.parts)

    def to_json(self) -> list[int]:
        return list(self.parts)


# =========================================================================
# OPERATIONS
# =========================================================================


def rho(m: int) -> IntegerTuple:
    """ρ = (m, …, 2, 1)."""
    return tuple(range(m, 0, -1))


def blocks(nu: Composition) -> list[tuple[int, int]]:
    """The intervals J_{ν,p} = [i_p, j_p]."""
    return [(start, start + part - 1) for start, part in zip(nu.starts(), nu.parts, strict=True)]


def transpose_mp(lam: MultiPartition) -> MultiPartition:
    """ᵗλ = (ᵗλ_ℓ, …, ᵗλ_1)."""
    return MultiPartition(components=tuple(comp.transpose() for comp in reversed(lam.components)))


def embed_weight(lam: MultiPartition, nu: Composition) -> IntegerTuple:
    """Pad each λ_p to length ν_p and concatenate."""
    if lam.level != nu.level:
        raise InvalidInput(f"level mismatch: {lam.level} components for {nu.level} blocks")
    if not lam.fits(nu):
        raise InvalidInput(f"{lam} does not lie in P_(n,nu) for nu={nu.to_json()}")
    result: list[int] = []
    for comp, part in zip(lam.components, nu.parts, strict=True):
        result.extend(comp.padded(part))
    return tuple(result)


def unembed_weight(t: Sequence[int], nu: Composition) -> MultiPartition:
    """Inverse of embed_weight; t must lie in ℕ^ν_{≥0}."""
    if len(t) != nu.m:
        raise InvalidInput(f"tuple of length {len(t)} for composition of {nu.m}")
    if not is_nu_dominant(t, nu) or any(x < 0 for x in t):
        raise InvalidInput(f"{list(t)} is not in N^nu_(>=0)")
    return MultiPartition(
        components=tuple(tuple(t[start - 1 : end]) for start, end in blocks(nu))
    )


def is_nu_dominant(t: Sequence[int | Fraction], nu: Composition) -> bool:
    """Membership in ℤ^ν_{≥0}: integral steps, weakly decreasing in every block."""
    for start, end in blocks(nu):
        for j in range(start, end):
            step = Fraction(t[j - 1]) - Fraction(t[j])
            if step < 0 or step.denominator != 1:
                return False
    return True


def is_nu_strict(t: Sequence[int | Fraction], nu: Composition) -> bool:
    """Membership in ℤ^ν_{>0}: integral steps, strictly decreasing in every block."""
    for start, end in blocks(nu):
        for j in range(start, end):
            step = Fraction(t[j - 1]) - Fraction(t[j])
            if step <= 0 or step.denominator != 1:
                return False
    return True


def partitions(n: int, max_part: int | None = None) -> list[Partition]:
    """All partitions of n in reverse lexicographic order."""
    if n < 0:
        return []
    return [Partition.of(parts) for parts in _partition_parts(n, n if max_part is None else max_part)]


def _partition_parts(n: int, max_part: int) -> list[tuple[int, ...]]:
    if n == 0:
        return [()]
    result = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partition_parts(n - first, first):
            result.append((first,) + rest)
    return result


def multipartitions(n: int, level: int) -> list[MultiPartition]:
    """All ℓ-partitions of n."""
    result = []
    for sizes in _weak_compositions(n, level):
        pools = [partitions(size) for size in sizes]
        for combo in itertools.product(*pools):
            result.append(MultiPartition(components=combo))
    return result


def multipartitions_fitting(n: int, nu: Composition) -> list[MultiPartition]:
    """P^ℓ_{n,ν}."""
    return [lam for lam in multipartitions(n, nu.level) if lam.fits(nu)]


def compositions(m: int, level: int, n: int = 0) -> list[Composition]:
    """C_{m,ℓ,n}: compositions of m with ℓ parts, all parts ≥ n."""
    return [
        Composition(parts=parts) for parts in _weak_compositions(m, level) if min(parts) >= n
    ]


def _weak_compositions(total: int, length: int) -> list[tuple[int, ...]]:
    if length == 1:
        return [(total,)]
    result = []
    for first in range(total, -1, -1):
        for rest in _weak_compositions(total - first, length - 1):
            result.append((first,) + rest)
    return result

