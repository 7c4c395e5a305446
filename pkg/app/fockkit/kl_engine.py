"""Kazhdan-Lusztig polynomials for finite and affine type A.

Ordinary and parabolic polynomials share one column recursion: for a minimal
coset representative σ with left descent s and σ' = sσ, the column of σ is
obtained from the column of σ' by the action of T_s + 1 on the induced module
where the parabolic generators act by −1, then corrected by μ-terms. With an
empty parabolic subset this is the usual recursion.
"""

import logging
import threading
from collections import deque
from collections.abc import Iterable, Sequence
from enum import Enum
from pathlib import Path
from typing import Any, Union

import pandas as pd
from pydantic import BaseModel, ConfigDict, field_validator

from .affine_weyl import (
    AffinePermutation,
    AffineWeight,
    antidominant_rep,
    dot_act,
    is_nu_dominant_weight,
    stabilizer_generators,
)
from .combinatorics import Composition
from .errors import InvalidInput, NotMinimalCosetRep, Unsupported
from .kl_cache import KLCache

logger = logging.getLogger(__name__)


# =========================================================================
# POLYNOMIALS
# =========================================================================


class IntPoly:
    """Integer polynomial in q, coefficients in ascending powers."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def constant(cls, value: int) -> "IntPoly":
        return cls((value,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, power: int) -> int:
        return self.coeffs[power] if 0 <= power < len(self.coeffs) else 0

    def at_one(self) -> int:
        return sum(self.coeffs)

    def shift(self, power: int) -> "IntPoly":
        """Multiply by q^power."""
        if not self.coeffs or power == 0:
            return self
        return IntPoly((0,) * power + self.coeffs)

    def __add__(self, other: "IntPoly") -> "IntPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(self.coefficient(i) + other.coefficient(i) for i in range(n))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(self.coefficient(i) - other.coefficient(i) for i in range(n))

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self.coeffs)

    def __mul__(self, other: Union["IntPoly", int]) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return ZERO
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.coeffs == IntPoly.constant(other).coeffs
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for power, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if power == 0:
                body = str(c)
            else:
                mono = "q" if power == 1 else f"q^{power}"
                body = mono if c == 1 else ("-" + mono if c == -1 else f"{c}{mono}")
            terms.append(body)
        return " + ".join(terms).replace("+ -", "- ")

    def to_json(self) -> list[int]:
        return list(self.coeffs)


ZERO = IntPoly()
ONE = IntPoly.constant(1)


# =========================================================================
# COXETER CONTEXTS
# =========================================================================


class CoxeterKind(str, Enum):
    FINITE = "finite-A"
    AFFINE = "affine-A"


class CoxeterContext(BaseModel):
    """A type A Coxeter system with an optional parabolic subset J."""

    model_config = ConfigDict(frozen=True)

    kind: CoxeterKind
    m: int
    parabolic: frozenset[int] = frozenset()

    @field_validator("parabolic", mode="before")
    @classmethod
    def parse_parabolic(cls, v: Any) -> frozenset[int]:
        if v is None:
            return frozenset()
        if isinstance(v, str):
            v = [int(x) for x in v.replace(" ", "").split(",") if x != ""]
        return frozenset(int(x) for x in v)

    def model_post_init(self, __context: Any) -> None:
        if self.m < 1:
            raise InvalidInput(f"rank m must be positive, got {self.m}")
        bad = [i for i in self.parabolic if i not in self.simple_indices()]
        if bad:
            raise InvalidInput(f"parabolic indices {sorted(bad)} are not simple reflections")
        if self.kind == CoxeterKind.AFFINE and self.m > 1 and len(self.parabolic) == self.m:
            raise Unsupported("the full affine group is not a finite parabolic subgroup")

    def simple_indices(self) -> range:
        if self.kind == CoxeterKind.FINITE:
            return range(1, self.m)
        return range(0, self.m) if self.m > 1 else range(0)

    def without_parabolic(self) -> "CoxeterContext":
        return CoxeterContext(kind=self.kind, m=self.m)

    def table_name(self) -> str:
        if not self.parabolic:
            return self.kind.value
        return f"{self.kind.value}/J=" + ".".join(str(i) for i in sorted(self.parabolic))

    def check_element(self, w: AffinePermutation) -> None:
        if w.m != self.m:
            raise InvalidInput(f"element of rank {w.m} in a context of rank {self.m}")
        if self.kind == CoxeterKind.FINITE and not w.is_finite():
            raise InvalidInput(f"{w!r} is not in the finite symmetric group")

    def is_minimal(self, w: AffinePermutation) -> bool:
        """w is the minimal-length element of w·W_J."""
        return not (w.right_descents() & self.parabolic)


def _has_left_descent(w: AffinePermutation, i: int) -> bool:
    return w.left_mul_simple(i).length() < w.length()


# =========================================================================
# ENGINE
# =========================================================================


class KLEngine:
    """Memoized columns {τ: P^{J,−1}_{τ,σ}} of one context."""

    def __init__(self, ctx: CoxeterContext, cache: KLCache) -> None:
        self.ctx = ctx
        self.cache = cache
        self.table = ctx.table_name()
        self._columns: dict[AffinePermutation, dict[AffinePermutation, IntPoly]] = {}
        self._lower: dict[AffinePermutation, frozenset[AffinePermutation]] = {}
        self._lock = threading.RLock()

    def _descent(self, w: AffinePermutation) -> int | None:
        for i in self.ctx.simple_indices():
            if _has_left_descent(w, i):
                return i
        return None

    def lower_interval(self, w: AffinePermutation) -> frozenset[AffinePermutation]:
        """Minimal representatives below w in the Bruhat order."""
        found = self._lower.get(w)
        if found is not None:
            return found
        s = self._descent(w)
        if s is None:
            result = frozenset({w})
        else:
            below = self.lower_interval(w.left_mul_simple(s))
            extra = {x.left_mul_simple(s) for x in below}
            result = below | {x for x in extra if self.ctx.is_minimal(x)}
        self._lower[w] = result
        return result

    def column(self, w: AffinePermutation) -> dict[AffinePermutation, IntPoly]:
        found = self._columns.get(w)
        if found is not None:
            return found
        with self._lock:
            found = self._columns.get(w)
            if found is None:
                found = self._compute_column(w)
                self._columns[w] = found
        return found

    def _compute_column(self, w: AffinePermutation) -> dict[AffinePermutation, IntPoly]:
        cached = self.cache.get(self.table, self.ctx.m, w)
        if cached is not None:
            return {v: IntPoly(c) for v, c in cached.items()}
        s = self._descent(w)
        if s is None:
            column = {w: ONE}
        else:
            column = self._recurse(w, s)
        self.cache.put(self.table, self.ctx.m, w, {v: p.coeffs for v, p in column.items()})
        return column

    def _recurse(self, w: AffinePermutation, s: int) -> dict[AffinePermutation, IntPoly]:
        prev_w = w.left_mul_simple(s)
        prev = self.column(prev_w)
        lw = w.length()
        lp = prev_w.length()
        corrections = []
        for z in self.lower_interval(prev_w):
            if z == prev_w or not _has_left_descent(z, s):
                continue
            diff = lp - z.length()
            if diff % 2 == 0:
                continue
            mu = prev.get(z, ZERO).coefficient((diff - 1) // 2)
            if mu:
                corrections.append((self.column(z), mu, (lw - z.length()) // 2))
        column: dict[AffinePermutation, IntPoly] = {}
        for tau in self.lower_interval(w):
            s_tau = tau.left_mul_simple(s)
            if s_tau.length() < tau.length():
                value = prev.get(tau, ZERO).shift(1) + prev.get(s_tau, ZERO)
            elif self.ctx.is_minimal(s_tau):
                value = prev.get(tau, ZERO) + prev.get(s_tau, ZERO).shift(1)
            else:
                value = ZERO
            for z_column, mu, power in corrections:
                p = z_column.get(tau)
                if p is not None:
                    value = value - (p * mu).shift(power)
            if not value.is_zero():
                column[tau] = value
        logger.debug("%s: column of length %d has %d entries", self.table, lw, len(column))
        return column

    def poly(self, v: AffinePermutation, w: AffinePermutation) -> IntPoly:
        return self.column(w).get(v, ZERO)


_cache = KLCache()
_engines: dict[CoxeterContext, KLEngine] = {}
_registry_lock = threading.Lock()


def configure_cache(path: Path | None) -> KLCache:
    """Replace the shared memo table; with a path, columns persist across runs."""
    global _cache
    with _registry_lock:
        _cache = KLCache(path)
        _engines.clear()
    return _cache


def engine_for(ctx: CoxeterContext) -> KLEngine:
    with _registry_lock:
        engine = _engines.get(ctx)
        if engine is None:
            engine = KLEngine(ctx, _cache)
            _engines[ctx] = engine
    return engine


# =========================================================================
# OPERATIONS
# =========================================================================


def kl_poly(ctx: CoxeterContext, v: AffinePermutation, w: AffinePermutation) -> IntPoly:
    """The ordinary Kazhdan-Lusztig polynomial P_{v,w}; ctx.parabolic is ignored."""
    ctx.check_element(v)
    ctx.check_element(w)
    return engine_for(ctx.without_parabolic()).poly(v, w)


def _check_minimal(ctx: CoxeterContext, *elements: AffinePermutation) -> None:
    for w in elements:
        ctx.check_element(w)
        if not ctx.is_minimal(w):
            descents = sorted(w.right_descents() & ctx.parabolic)
            raise NotMinimalCosetRep(f"{w!r} has right descents {descents} in J")


def parabolic_kl_minus(ctx: CoxeterContext, u: AffinePermutation, w: AffinePermutation) -> IntPoly:
    """Deodhar's P^{J,−1}_{u,w} for minimal coset representatives u, w."""
    _check_minimal(ctx, u, w)
    return engine_for(ctx).poly(u, w)


def parabolic_subgroup(ctx: CoxeterContext) -> list[AffinePermutation]:
    """The elements of W_J, in order of discovery."""
    e = AffinePermutation.identity(ctx.m)
    seen = {e}
    order = [e]
    queue = deque([e])
    while queue:
        x = queue.popleft()
        for i in sorted(ctx.parabolic):
            y = x.right_mul_simple(i)
            if y not in seen:
                seen.add(y)
                order.append(y)
                queue.append(y)
    return order


def alternating_sum_kl_minus(
    ctx: CoxeterContext, u: AffinePermutation, w: AffinePermutation
) -> IntPoly:
    """Σ_{x∈W_J} (−1)^{l(x)} P_{ux,w}."""
    _check_minimal(ctx, u, w)
    plain = engine_for(ctx.without_parabolic())
    total = ZERO
    for x in parabolic_subgroup(ctx):
        p = plain.poly(u * x, w)
        total = total - p if x.length() % 2 else total + p
    return total


def lower_coset_interval(ctx: CoxeterContext, w: AffinePermutation) -> frozenset[AffinePermutation]:
    _check_minimal(ctx, w)
    return engine_for(ctx).lower_interval(w)


# =========================================================================
# CHARACTER MATRICES
# =========================================================================


class CharacterMatrix:
    """Signed parabolic KL data on a set of ν-dominant weights of one orbit.

    ``polys[i][j]`` is (−1)^{l(w_i)−l(v_j)} P^{γ,−1}_{v_j,w_i}, so row i expands
    [L(w_i•γ)] in the parabolic Verma classes. ``inverse[j][i]`` is the
    multiplicity [M(v_j•γ)_ν : L(w_i•γ)].
    """

    def __init__(
        self,
        gamma: AffineWeight,
        context: CoxeterContext,
        labels: list[AffineWeight],
        elements: list[AffinePermutation],
        polys: list[list[IntPoly]],
    ) -> None:
        self.gamma = gamma
        self.context = context
        self.labels = labels
        self.elements = elements
        self.polys = polys
        self.entries = [[p.at_one() for p in row] for row in polys]
        self.inverse = invert_unitriangular(self.entries)
        self._index = {label: i for i, label in enumerate(labels)}

    def __len__(self) -> int:
        return len(self.labels)

    def index(self, label: AffineWeight) -> int:
        try:
            return self._index[label]
        except KeyError as exc:
            raise InvalidInput(f"{label!r} is not a label of this matrix") from exc

    def entry(self, row: AffineWeight, col: AffineWeight) -> int:
        return self.entries[self.index(row)][self.index(col)]

    def multiplicity(self, verma: AffineWeight, simple: AffineWeight) -> int:
        """[M(verma)_ν : L(simple)]."""
        return self.inverse[self.index(verma)][self.index(simple)]

    def restrict(self, labels: Sequence[AffineWeight]) -> list[list[int]]:
        """The inverse matrix on a subset of labels, rows and columns in the given order."""
        idx = [self.index(label) for label in labels]
        return [[self.inverse[i][j] for j in idx] for i in idx]

    def is_unitriangular(self) -> bool:
        n = len(self.labels)
        return all(
            self.entries[i][j] == (1 if i == j else 0) for i in range(n) for j in range(i, n)
        )

    def to_frame(self, inverse: bool = False) -> pd.DataFrame:
        names = [",".join(str(v) for v in label.classical) for label in self.labels]
        data = self.inverse if inverse else self.entries
        return pd.DataFrame(data, index=names, columns=names)

    def __str__(self) -> str:
        return f"CharacterMatrix({len(self.labels)} labels, J={sorted(self.context.parabolic)})"


def invert_unitriangular(matrix: list[list[int]]) -> list[list[int]]:
    """Inverse of a lower unitriangular integer matrix by forward substitution."""
    n = len(matrix)
    inv = [[0] * n for _ in range(n)]
    for i in range(n):
        inv[i][i] = 1
        for j in range(i - 1, -1, -1):
            inv[i][j] = -sum(matrix[i][k] * inv[k][j] for k in range(j, i))
    return inv


def _orbit_element(x: AffineWeight, gamma: AffineWeight) -> AffinePermutation:
    found_gamma, v = antidominant_rep(x)
    if found_gamma != gamma:
        raise InvalidInput(f"{x!r} is not in the dot orbit of {gamma!r}")
    return v


def character_matrix(
    gamma: AffineWeight,
    nu: Composition,
    targets: Iterable[AffineWeight],
) -> CharacterMatrix:
    """The matrix [L] → [M]_ν on ``targets`` and everything below them.

    The label set always contains every ν-dominant weight v•γ with v below a
    target in the Bruhat order; the inverse is only exact on such a set.
    """
    target_list = list(dict.fromkeys(targets))
    if not target_list:
        raise InvalidInput("character matrix needs at least one target weight")
    for x in target_list:
        if not is_nu_dominant_weight(x, nu):
            raise InvalidInput(f"{x!r} is not nu-dominant for nu={nu.to_json()}")
    ctx = parabolic_context(gamma)
    engine = engine_for(ctx)
    by_element = {_orbit_element(x, gamma): x for x in target_list}
    for v in list(by_element):
        for tau in engine.lower_interval(v):
            if tau not in by_element:
                weight = dot_act(tau, gamma)
                if is_nu_dominant_weight(weight, nu):
                    by_element[tau] = weight
    elements = sorted(by_element, key=lambda w: (w.length(), w.window))
    labels = [by_element[w] for w in elements]
    polys = []
    for w in elements:
        column = engine.column(w)
        lw = w.length()
        polys.append(
            [column.get(v, ZERO) * (-1 if (lw - v.length()) % 2 else 1) for v in elements]
        )
    logger.debug("character matrix: %d labels, J=%s", len(labels), sorted(ctx.parabolic))
    return CharacterMatrix(gamma, ctx, labels, elements, polys)


def jordan_holder_leq(lam: AffineWeight, mu: AffineWeight, nu: Composition) -> bool:
    """λ ≼ μ: transitive closure of [M(μ)_ν : L(λ)] ≠ 0."""
    if lam == mu:
        return True
    gamma, _ = antidominant_rep(mu)
    if antidominant_rep(lam)[0] != gamma:
        return False
    matrix = character_matrix(gamma, nu, [mu])
    if lam not in matrix.labels:
        return False
    n = len(matrix)
    reached = {matrix.index(mu)}
    queue = deque(reached)
    while queue:
        i = queue.popleft()
        for j in range(n):
            if j not in reached and matrix.inverse[i][j] != 0:
                reached.add(j)
                queue.append(j)
    return matrix.index(lam) in reached


def parabolic_context(gamma: AffineWeight) -> CoxeterContext:
    """The affine context whose parabolic subset is the dot-stabilizer of γ."""
    return CoxeterContext(
        kind=CoxeterKind.AFFINE, m=gamma.m, parabolic=stabilizer_generators(gamma)
    )


def character_row(top: AffineWeight, nu: Composition) -> dict[AffineWeight, IntPoly]:
    """[L(top)] = Σ_x row[x]·[M(x)_ν]: signed parabolic KL polynomials by weight."""
    if not is_nu_dominant_weight(top, nu):
        raise InvalidInput(f"{top!r} is not nu-dominant for nu={nu.to_json()}")
    gamma, v_top = antidominant_rep(top)
    column = engine_for(parabolic_context(gamma)).column(v_top)
    top_length = v_top.length()
    row: dict[AffineWeight, IntPoly] = {}
    for tau in sorted(column, key=lambda w: (w.length(), w.window)):
        weight = dot_act(tau, gamma)
        if is_nu_dominant_weight(weight, nu):
            sign = -1 if (top_length - tau.length()) % 2 else 1
            row[weight] = column[tau] * sign
    return row
