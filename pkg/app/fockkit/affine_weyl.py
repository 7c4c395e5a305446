"""The affine symmetric group in window notation and its action on affine weights.

Weights live in t* = ℂδ ⊕ ℂ^m ⊕ ℂω_0 and are stored as exact rationals. The
pairing has ⟨δ:ω_0⟩ = 1, ⟨ε_i:ε_j⟩ = δ_ij and ⟨δ:δ⟩ = ⟨ω_0:ω_0⟩ = 0.
"""

import logging
from collections import deque
from collections.abc import Iterator, Sequence
from fractions import Fraction
from functools import lru_cache
from typing import Any, Union

from .combinatorics import Composition, blocks, rho
from .config import DEFAULT_NODE_BUDGET
from .errors import BudgetExceeded, InvalidInput, NotNuRegular, Unsupported

logger = logging.getLogger(__name__)

Rational = Union[int, Fraction]


def _q(x: Rational | str) -> Fraction:
    if isinstance(x, Fraction):
        return x
    try:
        return Fraction(x)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise InvalidInput(f"not a rational number: {x!r}") from exc


# =========================================================================
# AFFINE WEIGHTS
# =========================================================================


class AffineWeight:
    """A weight dδ + Σ v_i ε_i + cω_0."""

    __slots__ = ("delta", "classical", "level")

    def __init__(
        self, delta: Rational | str, classical: Sequence[Rational | str], level: Rational | str
    ) -> None:
        self.delta = _q(delta)
        self.classical = tuple(_q(v) for v in classical)
        self.level = _q(level)

    @property
    def m(self) -> int:
        return len(self.classical)

    def __add__(self, other: "AffineWeight") -> "AffineWeight":
        return AffineWeight(
            self.delta + other.delta,
            [a + b for a, b in zip(self.classical, other.classical, strict=True)],
            self.level + other.level,
        )

    def __sub__(self, other: "AffineWeight") -> "AffineWeight":
        return AffineWeight(
            self.delta - other.delta,
            [a - b for a, b in zip(self.classical, other.classical, strict=True)],
            self.level - other.level,
        )

    def scale(self, factor: Rational) -> "AffineWeight":
        return AffineWeight(
            self.delta * factor, [v * factor for v in self.classical], self.level * factor
        )

    def pairing(self, other: "AffineWeight") -> Fraction:
        """⟨self:other⟩."""
        finite = sum((a * b for a, b in zip(self.classical, other.classical, strict=True)), Fraction(0))
        return finite + self.delta * other.level + self.level * other.delta

    def norm(self) -> Fraction:
        return self.pairing(self)

    def with_delta(self, delta: Rational) -> "AffineWeight":
        return AffineWeight(delta, self.classical, self.level)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AffineWeight):
            return NotImplemented
        return (
            self.delta == other.delta
            and self.classical == other.classical
            and self.level == other.level
        )

    def __hash__(self) -> int:
        return hash((self.delta, self.classical, self.level))

    def __repr__(self) -> str:
        cl = ",".join(str(v) for v in self.classical)
        return f"AffineWeight(delta={self.delta}, classical=({cl}), level={self.level})"

    def to_json(self) -> dict[str, Any]:
        return {
            "delta": str(self.delta),
            "classical": [str(v) for v in self.classical],
            "level": str(self.level),
        }


def delta_weight(m: int) -> AffineWeight:
    return AffineWeight(1, [0] * m, 0)


def omega0(m: int) -> AffineWeight:
    return AffineWeight(0, [0] * m, 1)


def rho_hat(m: int) -> AffineWeight:
    """ρ̂ = ρ + mω_0."""
    return AffineWeight(0, rho(m), m)


def z_coefficient(classical: Sequence[Rational], kappa: Rational) -> Fraction:
    """z_λ = −⟨λ:2ρ+λ⟩/2κ."""
    kappa = _q(kappa)
    if kappa == 0:
        raise Unsupported("z_lambda is undefined at critical level kappa = 0")
    r = rho(len(classical))
    total = sum((_q(v) * (2 * ri + _q(v)) for v, ri in zip(classical, r, strict=True)), Fraction(0))
    return -total / (2 * kappa)


def tilde(classical: Sequence[Rational], kappa: Rational) -> AffineWeight:
    """λ̃ = λ + (κ−m)ω_0 + z_λδ."""
    m = len(classical)
    return AffineWeight(z_coefficient(classical, kappa), classical, _q(kappa) - m)


def weight_leq(lam: AffineWeight, mu: AffineWeight) -> bool:
    """λ ≤ μ iff μ − λ is a nonnegative integer combination of α_0, …, α_{m−1}."""
    diff = mu - lam
    if diff.level != 0:
        return False
    d = diff.delta
    if d.denominator != 1 or d < 0:
        return False
    partial = Fraction(0)
    for value in diff.classical[:-1]:
        partial += value
        if partial.denominator != 1 or d + partial < 0:
            return False
    return partial + diff.classical[-1] == 0


# =========================================================================
# AFFINE PERMUTATIONS
# =========================================================================


class AffinePermutation:
    """An element of the (non-extended) affine symmetric group Ŝ_m.

    Stored as the window [w(1), …, w(m)] of the periodic bijection of ℤ with
    w(i+m) = w(i) + m.
    """

    __slots__ = ("window", "_hash")

    def __init__(self, window: Sequence[int]) -> None:
        win = tuple(int(x) for x in window)
        m = len(win)
        if m == 0:
            raise InvalidInput("empty window")
        if len({x % m for x in win}) != m:
            raise InvalidInput(f"window {list(win)} is not a bijection modulo {m}")
        if sum(win) != m * (m + 1) // 2:
            raise InvalidInput(f"window {list(win)} lies outside the non-extended group")
        self.window = win
        self._hash = hash(win)

    @classmethod
    def _raw(cls, window: tuple[int, ...]) -> "AffinePermutation":
        obj = cls.__new__(cls)
        obj.window = window
        obj._hash = hash(window)
        return obj

    @classmethod
    def identity(cls, m: int) -> "AffinePermutation":
        return cls._raw(tuple(range(1, m + 1)))

    @classmethod
    def simple(cls, i: int, m: int) -> "AffinePermutation":
        return cls.identity(m).right_mul_simple(i)

    @classmethod
    def translation(cls, tau: Sequence[int]) -> "AffinePermutation":
        """t_τ for τ in the root lattice (integer entries summing to 0)."""
        m = len(tau)
        if sum(tau) != 0:
            raise InvalidInput(f"translation {list(tau)} is not in the root lattice")
        return cls._raw(tuple(j + 1 + m * int(t) for j, t in enumerate(tau)))

    @classmethod
    def from_word(cls, word: Sequence[int], m: int) -> "AffinePermutation":
        """The product s_{i_1} s_{i_2} ⋯ of the word (function composition)."""
        w = cls.identity(m)
        for i in word:
            w = w.right_mul_simple(i)
        return w

    @property
    def m(self) -> int:
        return len(self.window)

    def __call__(self, i: int) -> int:
        m = self.m
        q, r = divmod(i - 1, m)
        return self.window[r] + q * m

    def __mul__(self, other: "AffinePermutation") -> "AffinePermutation":
        return AffinePermutation._raw(tuple(self(x) for x in other.window))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AffinePermutation):
            return NotImplemented
        return self.window == other.window

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"AffinePermutation({list(self.window)})"

    def inverse(self) -> "AffinePermutation":
        m = self.m
        inv = [0] * m
        for j, value in enumerate(self.window, start=1):
            q, r = divmod(value - 1, m)
            inv[r] = j - q * m
        return AffinePermutation._raw(tuple(inv))

    def is_finite(self) -> bool:
        return all(1 <= x <= self.m for x in self.window)

    def decompose(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """(σ, τ) with w = t_τ ∘ σ, σ given as the window of a finite permutation."""
        m = self.m
        sigma = [0] * m
        tau = [0] * m
        for j, value in enumerate(self.window):
            q, r = divmod(value - 1, m)
            sigma[j] = r + 1
            tau[r] = q
        return tuple(sigma), tuple(tau)

    def length(self) -> int:
        return _length(self.window)

    def right_mul_simple(self, i: int) -> "AffinePermutation":
        """w·s_i: swap positions i and i+1 of the window."""
        win = list(self.window)
        m = len(win)
        if i == 0:
            first, last = win[0], win[m - 1]
            win[0], win[m - 1] = last - m, first + m
        else:
            win[i - 1], win[i] = win[i], win[i - 1]
        return AffinePermutation._raw(tuple(win))

    def left_mul_simple(self, i: int) -> "AffinePermutation":
        """s_i·w: exchange the values ≡ i and ≡ i+1 modulo m."""
        m = self.m
        lo, hi = i % m, (i + 1) % m
        result = []
        for x in self.window:
            r = x % m
            if r == lo:
                result.append(x + 1)
            elif r == hi:
                result.append(x - 1)
            else:
                result.append(x)
        return AffinePermutation._raw(tuple(result))

    def right_descents(self) -> frozenset[int]:
        win = self.window
        m = len(win)
        found = {i for i in range(1, m) if win[i - 1] > win[i]}
        if m > 1 and win[m - 1] - m > win[0]:
            found.add(0)
        return frozenset(found)

    def left_descents(self) -> frozenset[int]:
        return self.inverse().right_descents()

    def reduced_word(self) -> tuple[int, ...]:
        word: list[int] = []
        w = self
        while True:
            descents = w.right_descents()
            if not descents:
                break
            i = min(descents)
            word.append(i)
            w = w.right_mul_simple(i)
        return tuple(reversed(word))

    def to_json(self) -> list[int]:
        return list(self.window)


@lru_cache(maxsize=None)
def _length(window: tuple[int, ...]) -> int:
    m = len(window)
    total = 0
    for i in range(m):
        for j in range(i + 1, m):
            total += abs((window[j] - window[i]) // m)
    return total


def length_and_reduce(w: AffinePermutation) -> tuple[int, tuple[int, ...]]:
    """Length and a reduced word of w."""
    word = w.reduced_word()
    return len(word), word


@lru_cache(maxsize=None)
def bruhat_leq(v: AffinePermutation, w: AffinePermutation) -> bool:
    """v ≤ w in the Bruhat order, by the lifting property along right descents."""
    lv, lw = v.length(), w.length()
    if lv > lw:
        return False
    if lv == lw:
        return v == w
    if lv == 0:
        return True
    s = min(w.right_descents())
    ws = w.right_mul_simple(s)
    if s in v.right_descents():
        return bruhat_leq(v.right_mul_simple(s), ws)
    return bruhat_leq(v, ws)


# =========================================================================
# ROOTS AND ACTIONS
# =========================================================================


class AffineRoot:
    """The real root (ε_a − ε_b) + kδ, with 1 ≤ a ≠ b ≤ m."""

    __slots__ = ("a", "b", "k", "m")

    def __init__(self, a: int, b: int, k: int, m: int) -> None:
        if a == b or not (1 <= a <= m and 1 <= b <= m):
            raise InvalidInput(f"invalid finite part eps_{a} - eps_{b} for m={m}")
        self.a, self.b, self.k, self.m = a, b, int(k), m

    def is_positive(self) -> bool:
        return self.k > 0 or (self.k == 0 and self.a < self.b)

    def as_weight(self) -> AffineWeight:
        classical = [0] * self.m
        classical[self.a - 1] = 1
        classical[self.b - 1] = -1
        return AffineWeight(self.k, classical, 0)

    def pairing(self, x: AffineWeight) -> Fraction:
        return x.classical[self.a - 1] - x.classical[self.b - 1] + self.k * x.level

    def reflection(self) -> AffinePermutation:
        """s_α: the affine transposition exchanging a and b + km."""
        win = list(range(1, self.m + 1))
        win[self.a - 1] = self.b + self.k * self.m
        win[self.b - 1] = self.a - self.k * self.m
        return AffinePermutation._raw(tuple(win))

    def reflect(self, x: AffineWeight) -> AffineWeight:
        """s_α(x) = x − ⟨x:α⟩α."""
        return x - self.as_weight().scale(self.pairing(x))

    def __repr__(self) -> str:
        return f"AffineRoot(eps_{self.a} - eps_{self.b} + {self.k} delta)"


Acting = Union[AffinePermutation, AffineRoot]


def linear_act(w: Acting, x: AffineWeight) -> AffineWeight:
    """The linear action of Ŝ_m on t*."""
    if isinstance(w, AffineRoot):
        return w.reflect(x)
    sigma, tau = w.decompose()
    moved = [Fraction(0)] * x.m
    for i, target in enumerate(sigma):
        moved[target - 1] = x.classical[i]
    c = x.level
    shift = sum((t * v for t, v in zip(tau, moved, strict=True)), Fraction(0))
    norm = sum(t * t for t in tau)
    return AffineWeight(
        x.delta - shift - c * norm / 2,
        [v + c * t for v, t in zip(moved, tau, strict=True)],
        c,
    )


def dot_act(w: Acting, x: AffineWeight) -> AffineWeight:
    """w•x = w(x + ρ̂) − ρ̂."""
    shift = rho_hat(x.m)
    return linear_act(w, x + shift) - shift


# =========================================================================
# ν-DOMINANCE AND ANTIDOMINANT REPRESENTATIVES
# =========================================================================


def nu_project(x: AffineWeight, nu: Composition) -> tuple[AffineWeight, int]:
    """(x_+, sn(x)): the ν-dominant element of 𝔖_ν•x and the sign of the sorting."""
    if nu.m != x.m:
        raise InvalidInput(f"composition of {nu.m} for a weight of rank {x.m}")
    r = rho(x.m)
    y = [v + ri for v, ri in zip(x.classical, r, strict=True)]
    sign = 1
    result: list[Fraction] = []
    for start, end in blocks(nu):
        block = y[start - 1 : end]
        for i, a in enumerate(block):
            for b in block[i + 1 :]:
                if a == b:
                    raise NotNuRegular(f"weight {x!r} is singular within block [{start},{end}]")
                if (a - b).denominator != 1:
                    raise InvalidInput(f"weight {x!r} is not nu-integral")
                if a < b:
                    sign = -sign
        result.extend(sorted(block, reverse=True))
    return AffineWeight(x.delta, [v - ri for v, ri in zip(result, r, strict=True)], x.level), sign


def is_nu_dominant_weight(x: AffineWeight, nu: Composition) -> bool:
    y = [v + ri for v, ri in zip(x.classical, rho(x.m), strict=True)]
    for start, end in blocks(nu):
        for j in range(start, end):
            step = y[j - 1] - y[j]
            if step <= 0 or step.denominator != 1:
                return False
    return True


def _integral_level(x: AffineWeight) -> int:
    """κ = level of x + ρ̂, checked to be a negative integer with integral differences."""
    kappa = x.level + x.m
    if kappa >= 0:
        raise Unsupported(f"level kappa={kappa} is not negative")
    if kappa.denominator != 1:
        raise Unsupported(f"non-integral kappa={kappa}: the integral Weyl group is not standard")
    first = x.classical[0]
    if any((v - first).denominator != 1 for v in x.classical):
        raise Unsupported(f"weight {x!r} is not integral")
    return int(kappa)


def antidominant_rep(x: AffineWeight) -> tuple[AffineWeight, AffinePermutation]:
    """(γ, v) with γ antidominant, v minimal in v·Ŝ_γ and v•γ = x.

    Sorts the periodic sequence Y(i) = (x+ρ̂)_i, Y(i+m) = Y(i) − κ; ties keep
    their index order, which makes the sorting permutation minimal in its coset.
    """
    kappa = _integral_level(x)
    e = -kappa
    m = x.m
    y = [v + ri for v, ri in zip(x.classical, rho(m), strict=True)]
    ranks = []
    for i in range(m):
        count = 0
        for j in range(m):
            diff = int(y[i] - y[j])
            t = (diff - 1) // e
            if diff % e == 0 and (j + 1) + (diff // e) * m < i + 1:
                t = diff // e
            count += t + 1
        ranks.append(count)
    offset, rem = divmod(m * (m + 1) // 2 - sum(ranks), m)
    if rem:
        raise InvalidInput(f"inconsistent orbit ranks for {x!r}")
    u = AffinePermutation._raw(tuple(r + offset for r in ranks))
    gamma = dot_act(u, x)
    return gamma, u.inverse()


def stabilizer_generators(gamma: AffineWeight) -> frozenset[int]:
    """Simple reflections fixing an antidominant γ under the dot action."""
    m = gamma.m
    kappa = gamma.level + m
    y = [v + ri for v, ri in zip(gamma.classical, rho(m), strict=True)]
    found = {i for i in range(1, m) if y[i - 1] == y[i]}
    if m > 1 and y[m - 1] - y[0] + kappa == 0:
        found.add(0)
    return frozenset(found)


def is_antidominant(gamma: AffineWeight) -> bool:
    """⟨γ+ρ̂:α⟩ ≤ 0 on all integral positive real roots (simple-root test suffices)."""
    m = gamma.m
    kappa = gamma.level + m
    y = [v + ri for v, ri in zip(gamma.classical, rho(m), strict=True)]
    if any(y[i] > y[i + 1] for i in range(m - 1)):
        return False
    return m == 1 or y[m - 1] - y[0] + kappa <= 0


# =========================================================================
# THE ORDER ⊴
# =========================================================================


def _reflection_candidates(
    x: AffineWeight, nu: Composition, kappa: Fraction | None
) -> Iterator[AffineWeight]:
    """s_α•x for α ∈ Π̂⁺_re∖Π⁺_ν with ⟨x+ρ̂:α⟩ ∈ ℤ_{>0}."""
    m = x.m
    y = [v + ri for v, ri in zip(x.classical, rho(m), strict=True)]
    block = [nu.block_of(j) for j in range(1, m + 1)]
    for a in range(1, m + 1):
        for b in range(1, m + 1):
            if a == b:
                continue
            base = y[a - 1] - y[b - 1]
            k = 0 if (a < b and block[a - 1] != block[b - 1]) else 1
            if kappa is None:
                if k == 1:
                    continue
                if base > 0 and base.denominator == 1:
                    yield AffineRoot(a, b, 0, m).reflect(x + rho_hat(m)) - rho_hat(m)
                continue
            while True:
                value = base + k * kappa
                if value < 1:
                    break
                if value.denominator == 1:
                    yield AffineRoot(a, b, k, m).reflect(x + rho_hat(m)) - rho_hat(m)
                k += 1


def _down_steps(x: AffineWeight, nu: Composition, kappa: Fraction | None) -> Iterator[AffineWeight]:
    for candidate in _reflection_candidates(x, nu, kappa):
        try:
            projected, _ = nu_project(candidate, nu)
        except (NotNuRegular, InvalidInput):
            continue
        if projected != x and weight_leq(projected, x):
            yield projected


def order_triangle_leq(
    lam: AffineWeight,
    mu: AffineWeight,
    nu: Composition,
    kappa: Rational | None,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> bool:
    """λ ⊴ μ, by breadth-first descent from μ along the ↑ relation.

    kappa=None stands for an irrational level: only k = 0 roots are used.
    """
    if kappa is not None:
        kappa = _q(kappa)
        if kappa >= 0:
            raise Unsupported(f"order search needs kappa < 0, got {kappa}")
    if lam == mu:
        return True
    if not weight_leq(lam, mu):
        return False
    seen = {mu}
    queue = deque([mu])
    while queue:
        node = queue.popleft()
        for child in _down_steps(node, nu, kappa):
            if child == lam:
                logger.debug("triangle order: reached target after %d nodes", len(seen))
                return True
            if child in seen or not weight_leq(lam, child):
                continue
            seen.add(child)
            if len(seen) > node_budget:
                raise BudgetExceeded(f"order search exceeded {node_budget} nodes")
            queue.append(child)
    return False


def weights_below(
    mu: AffineWeight,
    nu: Composition,
    kappa: Rational,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> set[AffineWeight]:
    """All ν-dominant λ with λ ⊴ μ (finite for κ < 0)."""
    kappa_q = _q(kappa)
    seen = {mu}
    queue = deque([mu])
    while queue:
        node = queue.popleft()
        for child in _down_steps(node, nu, kappa_q):
            if child not in seen:
                seen.add(child)
                if len(seen) > node_budget:
                    raise BudgetExceeded(f"order search exceeded {node_budget} nodes")
                queue.append(child)
    return seen
