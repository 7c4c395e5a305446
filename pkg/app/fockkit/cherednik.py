"""Dunkl operators for the cyclotomic rational DAHA of G(ℓ,1,n).

Polynomials live in ℚ(ε)[x_1, …, x_n]. The group G(ℓ,1,n) = 𝔖_n ⋉ (ℤ/ℓ)^n acts
by ε_i(x_i) = ε^{−1}x_i and s_ij swapping x_i and x_j. Relation and grading
checks compare operators monomial by monomial up to a degree bound.
"""

import itertools
import logging
from collections.abc import Callable, Iterator, Mapping, Sequence
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Any, Union

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from .category_o import CherednikParams, parse_rational
from .cyclotomic import CycloNumber, eps_power
from .errors import InternalNonDivisible, InvalidInput

logger = logging.getLogger(__name__)

Monomial = tuple[int, ...]


# =========================================================================
# THE GROUP G(ℓ,1,n)
# =========================================================================


class GroupElement:
    """g = σ·ε_1^{a_1}⋯ε_n^{a_n}, acting by g(x_i) = ε^{−a_i} x_{σ(i)}.

    ``perm`` and ``exps`` are 0-based; the public constructors take 1-based
    indices.
    """

    __slots__ = ("perm", "exps", "level")

    def __init__(self, perm: Sequence[int], exps: Sequence[int], level: int) -> None:
        if sorted(perm) != list(range(len(perm))) or len(exps) != len(perm):
            raise InvalidInput(f"not a group element: perm={perm}, exps={exps}")
        self.perm = tuple(perm)
        self.exps = tuple(a % level for a in exps)
        self.level = level

    @classmethod
    def identity(cls, n: int, level: int) -> "GroupElement":
        return cls(range(n), [0] * n, level)

    @classmethod
    def eps(cls, i: int, n: int, level: int, p: int = 1) -> "GroupElement":
        """ε_i^p."""
        exps = [0] * n
        exps[i - 1] = p
        return cls(range(n), exps, level)

    @classmethod
    def reflection(cls, i: int, j: int, n: int, level: int, p: int = 0) -> "GroupElement":
        """s_ij^{(p)} = s_ij ε_i^p ε_j^{−p}."""
        if i == j:
            raise InvalidInput("s_ij needs i != j")
        perm = list(range(n))
        perm[i - 1], perm[j - 1] = j - 1, i - 1
        exps = [0] * n
        exps[i - 1] = p
        exps[j - 1] = -p
        return cls(perm, exps, level)

    @property
    def n(self) -> int:
        return len(self.perm)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        """Composition: (g·h)(f) = g(h(f))."""
        perm = [self.perm[other.perm[i]] for i in range(self.n)]
        exps = [other.exps[i] + self.exps[other.perm[i]] for i in range(self.n)]
        return GroupElement(perm, exps, self.level)

    def inverse(self) -> "GroupElement":
        perm = [0] * self.n
        exps = [0] * self.n
        for i, image in enumerate(self.perm):
            perm[image] = i
            exps[image] = -self.exps[i]
        return GroupElement(perm, exps, self.level)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupElement):
            return NotImplemented
        return (self.perm, self.exps, self.level) == (other.perm, other.exps, other.level)

    def __hash__(self) -> int:
        return hash((self.perm, self.exps, self.level))

    def __repr__(self) -> str:
        return f"GroupElement(perm={self.perm}, exps={self.exps}, level={self.level})"


# =========================================================================
# POLYNOMIALS
# =========================================================================


class PolyN:
    """Polynomial in x_1, …, x_n with coefficients in ℚ(ε_ℓ)."""

    __slots__ = ("n", "level", "terms")

    def __init__(
        self, n: int, level: int, terms: Mapping[Monomial, CycloNumber] | None = None
    ) -> None:
        self.n = n
        self.level = level
        self.terms: dict[Monomial, CycloNumber] = {}
        for mono, coeff in (terms or {}).items():
            if len(mono) != n:
                raise InvalidInput(f"monomial {mono} has the wrong number of variables")
            if not coeff.is_zero():
                self.terms[tuple(mono)] = coeff

    @classmethod
    def monomial(
        cls, exps: Sequence[int], level: int, coeff: CycloNumber | int | Fraction = 1
    ) -> "PolyN":
        if not isinstance(coeff, CycloNumber):
            coeff = CycloNumber.rational(coeff, level)
        return cls(len(exps), level, {tuple(exps): coeff})

    @classmethod
    def constant(cls, value: CycloNumber | int | Fraction, n: int, level: int) -> "PolyN":
        return cls.monomial([0] * n, level, value)

    @classmethod
    def variable(cls, i: int, n: int, level: int) -> "PolyN":
        exps = [0] * n
        exps[i - 1] = 1
        return cls.monomial(exps, level)

    def _same_ring(self, other: "PolyN") -> None:
        if (self.n, self.level) != (other.n, other.level):
            raise InvalidInput("polynomials over different rings")

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(mono) for mono in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(mono) for mono in self.terms}) <= 1

    def __add__(self, other: "PolyN") -> "PolyN":
        self._same_ring(other)
        terms = dict(self.terms)
        for mono, coeff in other.terms.items():
            terms[mono] = terms[mono] + coeff if mono in terms else coeff
        return PolyN(self.n, self.level, terms)

    def __neg__(self) -> "PolyN":
        return PolyN(self.n, self.level, {mono: -c for mono, c in self.terms.items()})

    def __sub__(self, other: "PolyN") -> "PolyN":
        return self + (-other)

    def scale(self, factor: CycloNumber | int | Fraction) -> "PolyN":
        return PolyN(self.n, self.level, {mono: c * factor for mono, c in self.terms.items()})

    def __mul__(self, other: "PolyN") -> "PolyN":
        self._same_ring(other)
        terms: dict[Monomial, CycloNumber] = {}
        for (m1, c1), (m2, c2) in itertools.product(self.terms.items(), other.terms.items()):
            mono = tuple(a + b for a, b in zip(m1, m2))
            terms[mono] = terms[mono] + c1 * c2 if mono in terms else c1 * c2
        return PolyN(self.n, self.level, terms)

    def mul_var(self, i: int) -> "PolyN":
        """x_i · f."""
        terms = {}
        for mono, coeff in self.terms.items():
            raised = list(mono)
            raised[i - 1] += 1
            terms[tuple(raised)] = coeff
        return PolyN(self.n, self.level, terms)

    def derivative(self, i: int) -> "PolyN":
        terms = {}
        for mono, coeff in self.terms.items():
            d = mono[i - 1]
            if d:
                lowered = list(mono)
                lowered[i - 1] -= 1
                terms[tuple(lowered)] = coeff * d
        return PolyN(self.n, self.level, terms)

    def act(self, g: GroupElement) -> "PolyN":
        """g·f with g(x_i) = ε^{−a_i} x_{σ(i)}."""
        terms: dict[Monomial, CycloNumber] = {}
        for mono, coeff in self.terms.items():
            image = [0] * self.n
            twist = 0
            for i, b in enumerate(mono):
                image[g.perm[i]] = b
                twist -= g.exps[i] * b
            new = tuple(image)
            value = coeff * eps_power(twist, self.level)
            terms[new] = terms[new] + value if new in terms else value
        return PolyN(self.n, self.level, terms)

    def divide_linear(self, i: int, j: int, c: CycloNumber) -> "PolyN":
        """Exact quotient f / (x_i − c·x_j), i ≠ j."""
        remainder = dict(self.terms)
        quotient: dict[Monomial, CycloNumber] = {}
        top = max((mono[i - 1] for mono in remainder), default=0)
        for d in range(top, 0, -1):
            for mono in [mono for mono in remainder if mono[i - 1] == d]:
                a = remainder.pop(mono)
                lowered = list(mono)
                lowered[i - 1] -= 1
                q_mono = tuple(lowered)
                quotient[q_mono] = quotient[q_mono] + a if q_mono in quotient else a
                lowered[j - 1] += 1
                carry = tuple(lowered)
                value = a * c
                if carry in remainder:
                    value = remainder[carry] + value
                if value.is_zero():
                    remainder.pop(carry, None)
                else:
                    remainder[carry] = value
        if remainder:
            raise InternalNonDivisible(
                f"{self} is not divisible by x{i} - ({c})*x{j}; remainder has {len(remainder)} terms"
            )
        return PolyN(self.n, self.level, quotient)

    def divide_variable(self, i: int, c: CycloNumber) -> "PolyN":
        """Exact quotient f / (c·x_i)."""
        inv = c.inverse()
        terms = {}
        for mono, coeff in self.terms.items():
            if mono[i - 1] == 0:
                raise InternalNonDivisible(f"{self} is not divisible by x{i}")
            lowered = list(mono)
            lowered[i - 1] -= 1
            terms[tuple(lowered)] = coeff * inv
        return PolyN(self.n, self.level, terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolyN):
            return NotImplemented
        return (self.n, self.level) == (other.n, other.level) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.n, self.level, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"PolyN({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms, reverse=True):
            factors = [
                f"x{i}" if d == 1 else f"x{i}^{d}" for i, d in enumerate(mono, start=1) if d
            ]
            parts.append(f"({self.terms[mono]})" + "".join("*" + f for f in factors))
        return " + ".join(parts)


def monomials_up_to(n: int, max_deg: int) -> list[Monomial]:
    """All exponent vectors of total degree ≤ max_deg, graded then lexicographic."""
    monos = [mono for mono in itertools.product(range(max_deg + 1), repeat=n) if sum(mono) <= max_deg]
    return sorted(monos, key=lambda mono: (sum(mono), mono))


# =========================================================================
# PARAMETERS
# =========================================================================


class DunklParams(BaseModel):
    """(k, γ_1, …, γ_{ℓ−1}) of the presentation H_{k,γ}."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    level: int
    k: Fraction
    gamma: tuple[CycloNumber, ...] = ()

    @field_validator("k", mode="before")
    @classmethod
    def parse_k(cls, v: Any) -> Fraction:
        return parse_rational(v)

    @model_validator(mode="before")
    @classmethod
    def parse_gamma(cls, data: Any) -> Any:
        """γ may be given as rationals or an "a/b,c/d" string."""
        if not isinstance(data, dict):
            return data
        level = int(data.get("level", 1))
        raw = data.get("gamma", ())
        if isinstance(raw, str):
            raw = [x for x in raw.replace(" ", "").split(",") if x != ""]
        data = dict(data)
        data["gamma"] = tuple(
            g if isinstance(g, CycloNumber) else CycloNumber.rational(parse_rational(g), level)
            for g in raw
        )
        return data

    @model_validator(mode="after")
    def check_gamma(self) -> "DunklParams":
        if self.level < 1:
            raise ValueError("level must be positive")
        if len(self.gamma) != self.level - 1:
            raise ValueError(f"need {self.level - 1} gamma values, got {len(self.gamma)}")
        if any(g.level != self.level for g in self.gamma):
            raise ValueError("gamma values live in the wrong cyclotomic field")
        return self

    def gamma_p(self, p: int) -> CycloNumber:
        return self.gamma[p - 1]

    def perturbed(self) -> "DunklParams":
        """Same parameters with k replaced by k + 1."""
        return DunklParams(level=self.level, k=self.k + 1, gamma=self.gamma)

    def to_json(self) -> dict[str, Any]:
        return {"k": str(self.k), "gamma": [g.to_json() for g in self.gamma]}


class ParamConversion:
    """(h, H) rewritten as (k, γ) and as exponents of (q, Q)."""

    def __init__(self, params: CherednikParams, dunkl: DunklParams) -> None:
        self.params = params
        self.dunkl = dunkl
        self.q_exponent = params.q_exponent()
        self.q_p_exponents = params.q_p_exponents()

    def to_json(self) -> dict[str, Any]:
        return {
            "h": str(self.params.h),
            "H": [str(x) for x in self.params.H],
            "k": str(self.dunkl.k),
            "gamma": [g.to_json() for g in self.dunkl.gamma],
            "q_exponent": str(self.q_exponent),
            "q_p_exponents": [str(x) for x in self.q_p_exponents],
        }


def param_convert(params: CherednikParams) -> ParamConversion:
    """k = −h, γ_p = −Σ_{p'} ε^{−pp'} h_{p'}."""
    level = params.level
    h_all = params.h_all()
    gamma = []
    for p in range(1, level):
        total = CycloNumber.zero(level)
        for p_prime, h_p in enumerate(h_all, start=1):
            total = total + eps_power(-p * p_prime, level) * h_p
        gamma.append(-total)
    return ParamConversion(params, DunklParams(level=level, k=-params.h, gamma=tuple(gamma)))


def _as_dunkl(params: Union[DunklParams, CherednikParams]) -> DunklParams:
    if isinstance(params, CherednikParams):
        return param_convert(params).dunkl
    return params


# =========================================================================
# DUNKL OPERATORS
# =========================================================================


def dunkl_apply(i: int, f: PolyN, params: Union[DunklParams, CherednikParams]) -> PolyN:
    """ȳ_i f = ∂_i f + kΣ_{j≠i}Σ_p (s_ij^{(p)}f − f)/(x_i − ε^{−p}x_j)
    + Σ_{p≠0} γ_p (ε_i^p f − f)/((1 − ε^{−p})x_i)."""
    dunkl = _as_dunkl(params)
    n, level = f.n, f.level
    if not 1 <= i <= n:
        raise InvalidInput(f"index {i} out of range 1..{n}")
    if dunkl.level != level:
        raise InvalidInput(f"parameters of level {dunkl.level} on a level-{level} polynomial")
    result = f.derivative(i)
    if dunkl.k:
        for j in range(1, n + 1):
            if j == i:
                continue
            for p in range(level):
                numerator = f.act(GroupElement.reflection(i, j, n, level, p)) - f
                if not numerator.is_zero():
                    quotient = numerator.divide_linear(i, j, eps_power(-p, level))
                    result = result + quotient.scale(dunkl.k)
    for p in range(1, level):
        gamma = dunkl.gamma_p(p)
        if gamma.is_zero():
            continue
        numerator = f.act(GroupElement.eps(i, n, level, p)) - f
        if not numerator.is_zero():
            quotient = numerator.divide_variable(i, 1 - eps_power(-p, level))
            result = result + quotient.scale(gamma)
    return result


# =========================================================================
# RELATION CHECKS
# =========================================================================


Operator = Callable[[PolyN], PolyN]


class RelationResult:
    def __init__(self, name: str, witness: dict[str, Any] | None = None) -> None:
        self.name = name
        self.witness = witness

    @property
    def passed(self) -> bool:
        return self.witness is None

    def to_json(self) -> dict[str, Any]:
        if self.passed:
            return {"result": "pass"}
        return {"result": "fail", "witness": self.witness}


class RelationReport:
    """Outcome of a batch of operator identities, one entry per relation."""

    def __init__(self, n: int, level: int, max_deg: int, results: list[RelationResult]) -> None:
        self.n = n
        self.level = level
        self.max_deg = max_deg
        self.results = results

    def holds(self) -> bool:
        return all(r.passed for r in self.results)

    def result(self, name: str) -> RelationResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def __str__(self) -> str:
        lines = [f"Relations for n={self.n}, l={self.level}, degree <= {self.max_deg}:"]
        for r in self.results:
            status = "pass" if r.passed else f"FAIL at {r.witness}"
            lines.append(f"  {r.name}: {status}")
        return "\n".join(lines)

    def to_json(self) -> dict[str, Any]:
        return {r.name: r.to_json() for r in self.results}


def _combination(terms: list[tuple[CycloNumber, GroupElement]]) -> Operator:
    """Group-algebra element Σ c·g as an operator on polynomials."""

    def apply(f: PolyN) -> PolyN:
        result = PolyN(f.n, f.level)
        for coeff, g in terms:
            result = result + f.act(g).scale(coeff)
        return result

    return apply


def _first_failure(
    name: str,
    cases: Iterator[tuple[dict[str, Any], Operator, Operator]],
    monomials: list[Monomial],
    level: int,
    workers: int,
) -> RelationResult:
    """Compare lhs and rhs on every monomial; the witness is the first mismatch."""
    jobs = [(label, lhs, rhs, mono) for label, lhs, rhs in cases for mono in monomials]

    def differs(job: tuple[dict[str, Any], Operator, Operator, Monomial]) -> bool:
        _, lhs, rhs, mono = job
        f = PolyN.monomial(mono, level)
        return lhs(f) != rhs(f)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(differs, jobs))
    else:
        outcomes = [differs(job) for job in jobs]
    for (label, _, _, mono), failed in zip(jobs, outcomes):
        if failed:
            logger.debug("relation %s fails at %s on %s", name, label, mono)
            return RelationResult(name, {**label, "monomial": list(mono)})
    return RelationResult(name)


def _check_args(n: int, level: int, max_deg: int, dunkl: DunklParams) -> None:
    if n < 1 or level < 1:
        raise InvalidInput(f"need n >= 1 and l >= 1, got n={n}, l={level}")
    if max_deg < 1:
        raise InvalidInput(f"max_deg must be at least 1, got {max_deg}")
    if dunkl.level != level:
        raise InvalidInput(f"parameters of level {dunkl.level} for l={level}")


def verify_relations(
    n: int,
    level: int,
    params: Union[DunklParams, CherednikParams],
    max_deg: int,
    perturb: bool = False,
    workers: int = 1,
) -> RelationReport:
    """Check the defining relations on all monomials of degree ≤ max_deg.

    With ``perturb`` the Dunkl operators use k + 1 while the right-hand sides
    keep k, so the commutator relations are expected to fail.
    """
    dunkl = _as_dunkl(params)
    _check_args(n, level, max_deg, dunkl)
    inner = dunkl.perturbed() if perturb else dunkl
    k = dunkl.k
    monomials = monomials_up_to(n, max_deg)
    pairs = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]

    def x(i: int) -> Operator:
        return lambda f: f.mul_var(i)

    def y(i: int) -> Operator:
        return lambda f: dunkl_apply(i, f, inner)

    def commutator(a: Operator, b: Operator) -> Operator:
        return lambda f: a(b(f)) - b(a(f))

    def conjugate(g: GroupElement, a: Operator) -> Operator:
        g_inv = g.inverse()
        return lambda f: a(f.act(g_inv)).act(g)

    def diagonal_rhs(i: int) -> Operator:
        terms = [(CycloNumber.one(level), GroupElement.identity(n, level))]
        terms += [
            (CycloNumber.rational(-k, level), GroupElement.reflection(i, j, n, level, p))
            for j in range(1, n + 1)
            if j != i
            for p in range(level)
        ]
        terms += [(-dunkl.gamma_p(p), GroupElement.eps(i, n, level, p)) for p in range(1, level)]
        return _combination(terms)

    def offdiagonal_rhs(i: int, j: int) -> Operator:
        return _combination(
            [(eps_power(p, level) * k, GroupElement.reflection(i, j, n, level, p)) for p in range(level)]
        )

    def zero(f: PolyN) -> PolyN:
        return PolyN(f.n, f.level)

    def twisted(i: int) -> Operator:
        return lambda f: y(i)(f).scale(eps_power(1, level))

    families: list[tuple[str, list[tuple[dict[str, Any], Operator, Operator]]]] = [
        ("[x_i,x_j]=0", [({"i": i, "j": j}, commutator(x(i), x(j)), zero) for i, j in pairs]),
        ("[y_i,y_j]=0", [({"i": i, "j": j}, commutator(y(i), y(j)), zero) for i, j in pairs]),
        (
            "[y_i,x_i]",
            [({"i": i}, commutator(y(i), x(i)), diagonal_rhs(i)) for i in range(1, n + 1)],
        ),
        (
            "[y_i,x_j]",
            [({"i": i, "j": j}, commutator(y(i), x(j)), offdiagonal_rhs(i, j)) for i, j in pairs],
        ),
        (
            "s_ij y_i s_ij = y_j",
            [
                ({"i": i, "j": j}, conjugate(GroupElement.reflection(i, j, n, level), y(i)), y(j))
                for i, j in pairs
            ],
        ),
        (
            "e_i y_i e_i^-1 = e y_i",
            [
                (
                    {"i": i},
                    conjugate(GroupElement.eps(i, n, level), y(i)),
                    twisted(i),
                )
                for i in range(1, n + 1)
            ]
            if level > 1
            else [],
        ),
    ]
    results = [
        _first_failure(name, iter(cases), monomials, level, workers) for name, cases in families
    ]
    report = RelationReport(n, level, max_deg, results)
    logger.info("relation check n=%d l=%d deg<=%d: %s", n, level, max_deg, report.holds())
    return report


# =========================================================================
# EULER ELEMENT
# =========================================================================


def euler_coefficients(params: Union[DunklParams, CherednikParams]) -> tuple[CycloNumber, ...]:
    """c_p with eu_0 ⊇ Σ_i Σ_{p≠0} c_p ε_i^p, characterized by c_p(ε^{−p} − 1) = γ_p.

    For parameters (h, H) this is c_p = Σ_{p'=1}^{ℓ−1} ε^{−pp'}(h_1 + … + h_{p'}).
    """
    dunkl = _as_dunkl(params)
    level = dunkl.level
    return tuple(
        dunkl.gamma_p(p) / (eps_power(-p, level) - 1) for p in range(1, level)
    )


def euler_zero_apply(f: PolyN, params: Union[DunklParams, CherednikParams]) -> PolyN:
    """eu_0 f = kΣ_{i<j}Σ_p (1 − s_ij^{(p)})f + Σ_iΣ_{p≠0} c_p ε_i^p f."""
    dunkl = _as_dunkl(params)
    n, level = f.n, f.level
    result = PolyN(n, level)
    for i, j in itertools.combinations(range(1, n + 1), 2):
        for p in range(level):
            result = result + (f - f.act(GroupElement.reflection(i, j, n, level, p))).scale(dunkl.k)
    for p, c in enumerate(euler_coefficients(dunkl), start=1):
        for i in range(1, n + 1):
            result = result + f.act(GroupElement.eps(i, n, level, p)).scale(c)
    return result


def euler_apply(f: PolyN, params: Union[DunklParams, CherednikParams]) -> PolyN:
    """eu f = Σ_i x_i ȳ_i f + eu_0 f."""
    dunkl = _as_dunkl(params)
    result = euler_zero_apply(f, dunkl)
    for i in range(1, f.n + 1):
        result = result + dunkl_apply(i, f, dunkl).mul_var(i)
    return result


def euler_grading_check(
    n: int,
    level: int,
    params: Union[DunklParams, CherednikParams],
    max_deg: int,
    workers: int = 1,
) -> RelationReport:
    """[eu, x_i] = x_i and [eu, ȳ_i] = −ȳ_i on monomials; constants are eu_0-eigenvectors."""
    dunkl = _as_dunkl(params)
    _check_args(n, level, max_deg, dunkl)
    monomials = monomials_up_to(n, max_deg)

    def eu(f: PolyN) -> PolyN:
        return euler_apply(f, dunkl)

    def bracket_x(i: int) -> Operator:
        return lambda f: eu(f.mul_var(i)) - eu(f).mul_var(i)

    def bracket_y(i: int) -> Operator:
        return lambda f: eu(dunkl_apply(i, f, dunkl)) - dunkl_apply(i, eu(f), dunkl)

    def minus_y(i: int) -> Operator:
        return lambda f: -dunkl_apply(i, f, dunkl)

    def times_x(i: int) -> Operator:
        return lambda f: f.mul_var(i)

    results = [
        _first_failure(
            "[eu,x_i]=x_i",
            iter([({"i": i}, bracket_x(i), times_x(i)) for i in range(1, n + 1)]),
            monomials,
            level,
            workers,
        ),
        _first_failure(
            "[eu,y_i]=-y_i",
            iter([({"i": i}, bracket_y(i), minus_y(i)) for i in range(1, n + 1)]),
            monomials,
            level,
            workers,
        ),
    ]
    constant = euler_zero_apply(PolyN.constant(1, n, level), dunkl)
    if constant.degree() > 0:
        results.append(RelationResult("eu_0 on constants", {"image": str(constant)}))
    else:
        results.append(RelationResult("eu_0 on constants"))
    return RelationReport(n, level, max_deg, results)
