"""Weight dictionaries between the Cherednik side and the affine parabolic category O."""

import logging
from collections.abc import Sequence
from enum import Enum
from fractions import Fraction
from typing import Any

from pydantic import BaseModel, ConfigDict, field_validator

from .affine_weyl import (
    AffineWeight,
    antidominant_rep,
    order_triangle_leq,
    tilde,
)
from .combinatorics import (
    Composition,
    MultiPartition,
    RationalTuple,
    embed_weight,
    multipartitions_fitting,
    rho,
)
from .config import DEFAULT_NODE_BUDGET
from .errors import InvalidInput
from .fock_space import DecompMatrix, yvonne_delta_plus
from .kl_engine import character_matrix

logger = logging.getLogger(__name__)


def parse_rational(v: Any) -> Fraction:
    """Exact rational from an int, a Fraction or an "a/b" string."""
    if isinstance(v, Fraction):
        return v
    if isinstance(v, float):
        raise ValueError(f"floats are not accepted, got {v!r}; write it as a/b")
    try:
        return Fraction(str(v).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {v!r}") from exc


def rational_arg(v: Any) -> Fraction:
    """parse_rational for plain function arguments; bad values raise InvalidInput."""
    try:
        return parse_rational(v)
    except ValueError as exc:
        raise InvalidInput(str(exc)) from exc


# =========================================================================
# PARAMETERS
# =========================================================================


class CherednikParams(BaseModel):
    """Parameters (h, H) with H = (h_1, …, h_{ℓ−1}); h_ℓ is fixed by Σ h_p = 0."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    h: Fraction
    H: tuple[Fraction, ...] = ()

    @field_validator("h", mode="before")
    @classmethod
    def parse_h(cls, v: Any) -> Fraction:
        return parse_rational(v)

    @field_validator("H", mode="before")
    @classmethod
    def parse_H(cls, v: Any) -> tuple[Fraction, ...]:
        if isinstance(v, str):
            v = [x for x in v.replace(" ", "").split(",") if x != ""]
        return tuple(parse_rational(x) for x in v)

    @property
    def level(self) -> int:
        return len(self.H) + 1

    def h_all(self) -> RationalTuple:
        """(h_1, …, h_ℓ)."""
        return self.H + (-sum(self.H, Fraction(0)),)

    def partial(self, p: int) -> Fraction:
        """h_1 + … + h_p (0 for p = 0)."""
        return sum(self.h_all()[:p], Fraction(0))

    def k(self) -> Fraction:
        return -self.h

    def q_exponent(self) -> Fraction:
        """q = exp(2iπ·q_exponent)."""
        return self.h

    def q_p_exponents(self) -> RationalTuple:
        """q_p = exp(2iπ(h_1 + … + h_{p−1} + (p−1)/ℓ))."""
        return tuple(
            self.partial(p - 1) + Fraction(p - 1, self.level) for p in range(1, self.level + 1)
        )

    def to_json(self) -> dict[str, Any]:
        return {"h": str(self.h), "H": [str(x) for x in self.H]}


def params_from_block(nu: Composition, kappa: Fraction | int) -> CherednikParams:
    """h = 1/κ, h_p = ν•_p/κ − m/(ℓκ)."""
    kappa = rational_arg(kappa)
    if kappa == 0:
        raise InvalidInput("kappa must be nonzero")
    bullet = nu.bullet().parts
    level = nu.level
    H = [Fraction(bullet[p]) / kappa - Fraction(nu.m) / (level * kappa) for p in range(level - 1)]
    return CherednikParams(h=1 / kappa, H=tuple(H))


def params_from_charge(s: Composition, e: int) -> CherednikParams:
    """h = −1/e, h_p = s_{p+1}/e − s_p/e − 1/ℓ for p ≠ ℓ."""
    if e == 0:
        raise InvalidInput("e must be nonzero")
    level = s.level
    H = [
        Fraction(s.parts[p + 1] - s.parts[p], e) - Fraction(1, level) for p in range(level - 1)
    ]
    return CherednikParams(h=Fraction(-1, e), H=tuple(H))


# =========================================================================
# THETA AND THE ORDER ON STANDARD MODULES
# =========================================================================


def theta(lam: MultiPartition, params: CherednikParams) -> Fraction:
    """Scalar of eu_0 on the W-type of λ, normalized so that θ_∅ = 0."""
    level = params.level
    if lam.level != level:
        raise InvalidInput(f"{lam} has {lam.level} components for level {level}")
    shift = sum(
        (comp.size * params.partial(p - 1) for p, comp in enumerate(lam.components, start=1)),
        Fraction(0),
    )
    content = sum(
        comp.n_statistic() - comp.transpose().n_statistic() for comp in lam.components
    )
    return level * shift - params.h * level * content


class OrderRelation(str, Enum):
    LAMBDA_GREATER = "lambda-greater"
    MU_GREATER = "mu-greater"
    INCOMPARABLE = "incomparable"


def cherednik_order(
    lam: MultiPartition, mu: MultiPartition, params: CherednikParams
) -> OrderRelation:
    """Δ_μ ≻ Δ_λ iff θ_λ − θ_μ ∈ ℤ_{>0}."""
    diff = theta(lam, params) - theta(mu, params)
    if diff.denominator == 1 and diff > 0:
        return OrderRelation.MU_GREATER
    if diff.denominator == 1 and diff < 0:
        return OrderRelation.LAMBDA_GREATER
    return OrderRelation.INCOMPARABLE


# =========================================================================
# WEIGHT DICTIONARIES
# =========================================================================


class PiVariant(str, Enum):
    BLOCK = "block"
    CHARGE = "charge"


def pi_shift(
    variant: PiVariant,
    nu: Composition | None = None,
    c: Fraction | int | None = None,
    s: Composition | None = None,
) -> RationalTuple:
    """The origin π: cγ/ℓ with γ = (−1^{ν_1}, …, −ℓ^{ν_ℓ}), or π + ρ = (s_1, …, 1, s_2, …, 1, …)."""
    if variant == PiVariant.BLOCK:
        if nu is None or c is None:
            raise InvalidInput("the block origin needs nu and c")
        c = rational_arg(c)
        gamma = [-p for p, part in enumerate(nu.parts, start=1) for _ in range(part)]
        return tuple(c * g / nu.level for g in gamma)
    if s is None:
        raise InvalidInput("the charge origin needs s")
    shifted = [x for part in s.parts for x in range(part, 0, -1)]
    return tuple(Fraction(x - r) for x, r in zip(shifted, rho(s.m), strict=True))


def shifted_weight(
    lam: MultiPartition, nu: Composition, kappa: Fraction | int, pi: Sequence[Fraction]
) -> AffineWeight:
    """λ̃_π: λ + π at level κ − m, tilde-normalized."""
    classical = [Fraction(x) + p for x, p in zip(embed_weight(lam, nu), pi, strict=True)]
    return tilde(classical, rational_arg(kappa))


def block_weight(lam: MultiPartition, nu: Composition, kappa: Fraction | int) -> AffineWeight:
    """The weight of Δ_{λ,ν,κ}, with the block origin at c = κ − m."""
    kappa = rational_arg(kappa)
    pi = pi_shift(PiVariant.BLOCK, nu=nu, c=kappa - nu.m)
    return shifted_weight(lam, nu, kappa, pi)


def charge_weight(lam: MultiPartition, s: Composition, e: int) -> AffineWeight:
    """The weight of Δ_{λ,s,−e}."""
    return shifted_weight(lam, s, -e, pi_shift(PiVariant.CHARGE, s=s))


def check_theta_pairing_identity(
    lam: MultiPartition, mu: MultiPartition, nu: Composition, kappa: Fraction | int
) -> bool:
    """c(θ_{μ°} − θ_{λ°})/ℓ = ⟨λ̃_π − μ̃_π : π + cω_0⟩ with c = κ − m."""
    kappa = rational_arg(kappa)
    params = params_from_block(nu, kappa)
    c = kappa - nu.m
    pi = pi_shift(PiVariant.BLOCK, nu=nu, c=c)
    left = c * (theta(mu.reversed(), params) - theta(lam.reversed(), params)) / nu.level
    diff = shifted_weight(lam, nu, kappa, pi) - shifted_weight(mu, nu, kappa, pi)
    right = diff.pairing(AffineWeight(0, pi, c))
    return left == right


def triangle_leq_block(
    lam: MultiPartition,
    mu: MultiPartition,
    nu: Composition,
    kappa: Fraction | int,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> bool:
    """Δ_{λ,ν,κ} ⊴ Δ_{μ,ν,κ}."""
    return order_triangle_leq(
        block_weight(lam, nu, kappa), block_weight(mu, nu, kappa), nu, kappa, node_budget
    )


# =========================================================================
# DECOMPOSITION NUMBERS
# =========================================================================


def multiplicity_matrix(
    labels: Sequence[MultiPartition],
    weights: Sequence[AffineWeight],
    nu: Composition,
    charge: tuple[int, ...] = (),
    e: int = 0,
) -> DecompMatrix:
    """[M(λ)_ν : L(μ)] for the given labels, block by block."""
    by_block: dict[AffineWeight, list[int]] = {}
    lengths = []
    for i, weight in enumerate(weights):
        gamma, v = antidominant_rep(weight)
        by_block.setdefault(gamma, []).append(i)
        lengths.append(v.length())
    order = sorted(range(len(labels)), key=lambda i: (lengths[i], embed_weight(labels[i], nu)))
    position = {i: k for k, i in enumerate(order)}
    size = len(labels)
    entries = [[0] * size for _ in range(size)]
    for gamma, members in by_block.items():
        matrix = character_matrix(gamma, nu, [weights[i] for i in members])
        for i in members:
            for j in members:
                entries[position[i]][position[j]] = matrix.multiplicity(weights[i], weights[j])
    logger.debug("multiplicity matrix: %d labels in %d blocks", size, len(by_block))
    names = tuple(labels[i] for i in order)
    return DecompMatrix(
        rows=names,
        cols=names,
        entries=tuple(tuple(row) for row in entries),
        charge=charge,
        e=e,
    )


def block_decomposition_numbers(n: int, s: Composition, e: int) -> DecompMatrix:
    """[Δ_{λ,s,−e} : S_{μ,s,−e}] over λ, μ ∈ P^ℓ_{n,s}."""
    if e < 1:
        raise InvalidInput(f"e must be a positive integer, got {e}")
    labels = multipartitions_fitting(n, s)
    weights = [charge_weight(lam, s, e) for lam in labels]
    return multiplicity_matrix(labels, weights, s, charge=s.parts, e=e)


def parabolic_decomposition_numbers(
    n: int, nu: Composition, kappa: Fraction | int
) -> DecompMatrix:
    """[Δ_{λ,ν,κ} : S_{μ,ν,κ}] over λ, μ ∈ P^ℓ_{n,ν}, block origin."""
    labels = multipartitions_fitting(n, nu)
    weights = [block_weight(lam, nu, kappa) for lam in labels]
    return multiplicity_matrix(labels, weights, nu)


# =========================================================================
# CONJECTURE HYPOTHESES
# =========================================================================


class HypothesisViolation:
    def __init__(self, name: str, detail: str) -> None:
        self.name = name
        self.detail = detail

    def __str__(self) -> str:
        return f"[{self.name}] {self.detail}"

    def to_json(self) -> dict[str, str]:
        return {"hypothesis": self.name, "detail": self.detail}


class HypothesisReport:
    """Which hypotheses of the dimension conjecture hold for (n, s, e)."""

    def __init__(self, params: CherednikParams) -> None:
        self.params = params
        self.checked: list[str] = []
        self.violations: list[HypothesisViolation] = []

    def holds(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        if self.holds():
            return f"all {len(self.checked)} hypotheses hold"
        lines = [f"{len(self.violations)} of {len(self.checked)} hypotheses fail:"]
        lines.extend(f"  {v}" for v in self.violations)
        return "\n".join(lines)

    def to_json(self) -> dict[str, Any]:
        failed = {v.name for v in self.violations}
        return {
            "params": self.params.to_json(),
            "holds": self.holds(),
            "checks": {name: name not in failed for name in self.checked},
            "violations": [v.to_json() for v in self.violations],
        }


def _check_q_not_minus_one(params: CherednikParams, n: int, s: Composition) -> list[HypothesisViolation]:
    if (params.q_exponent() - Fraction(1, 2)).denominator == 1:
        return [HypothesisViolation("q_plus_one", f"q = -1 for h = {params.h}")]
    return []


def _check_distinct_q_p(params: CherednikParams, n: int, s: Composition) -> list[HypothesisViolation]:
    exps = params.q_p_exponents()
    found = []
    for i in range(len(exps)):
        for j in range(i + 1, len(exps)):
            if (exps[i] - exps[j]).denominator == 1:
                found.append(HypothesisViolation("distinct_q_p", f"q_{i + 1} = q_{j + 1}"))
    return found


def _check_h_negative(params: CherednikParams, n: int, s: Composition) -> list[HypothesisViolation]:
    if params.h >= 0:
        return [HypothesisViolation("h_negative", f"h = {params.h} is not negative")]
    return []


def _check_h_p_bound(params: CherednikParams, n: int, s: Composition) -> list[HypothesisViolation]:
    bound = (1 - n) * params.h
    return [
        HypothesisViolation("h_p_bound", f"h_{p} = {value} < (1-n)h = {bound}")
        for p, value in enumerate(params.H, start=1)
        if value < bound
    ]


def _check_charge_in_c(params: CherednikParams, n: int, s: Composition) -> list[HypothesisViolation]:
    if not s.in_c(n):
        return [HypothesisViolation("charge_in_C", f"s = {s.to_json()} has a part below n = {n}")]
    return []


def _check_charge_gaps(params: CherednikParams, n: int, s: Composition) -> list[HypothesisViolation]:
    return [
        HypothesisViolation("charge_gaps", f"s_{p + 1} - s_{p} = {s.parts[p] - s.parts[p - 1]} < n")
        for p in range(1, s.level)
        if s.parts[p] - s.parts[p - 1] < n
    ]


_HYPOTHESES = [
    ("q_plus_one", _check_q_not_minus_one),
    ("distinct_q_p", _check_distinct_q_p),
    ("h_negative", _check_h_negative),
    ("h_p_bound", _check_h_p_bound),
    ("charge_in_C", _check_charge_in_c),
    ("charge_gaps", _check_charge_gaps),
]


def conjecture_hypotheses(n: int, s: Composition, e: int) -> HypothesisReport:
    """Check the hypotheses under which Δ⁺ predicts Cherednik decomposition numbers."""
    params = params_from_charge(s, e)
    report = HypothesisReport(params)
    for name, check in _HYPOTHESES:
        report.checked.append(name)
        report.violations.extend(check(params, n, s))
    return report


def predicted_decomposition(n: int, s: Composition, e: int, workers: int = 1) -> DecompMatrix:
    """[Δ_{λ,q,Q} : S_{μ,q,Q}] = Δ⁺_{ᵗμ,ᵗλ,e,−s}, on the labels of Λ^s."""
    plus = yvonne_delta_plus(n, s, e, workers=workers)
    names = tuple(c.transpose() for c in plus.cols)
    entries = tuple(
        tuple(plus.entry(mu.transpose(), lam.transpose()) for mu in names) for lam in names
    )
    return DecompMatrix(rows=names, cols=names, entries=entries, charge=s.parts, e=e)
