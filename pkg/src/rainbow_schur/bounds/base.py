from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal

from mpmath import mpf
from pydantic import BaseModel, ConfigDict, Field


@dataclass(frozen=True)
class ReweighInstance:
    """Finite instance of the reweighing lemma over elements 0..size-1.

    f and g are indexed by element, f0 only by the elements of s0.
    """

    f: tuple[Fraction, ...]
    g: tuple[Fraction, ...]
    s0: frozenset[int]
    f0: dict[int, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if len(self.f) != len(self.g):
            raise ValueError("f and g must have one value per element")
        if set(self.f0) != set(self.s0):
            raise ValueError("f0 must be defined exactly on s0")
        if any(v < 0 for v in self.f) or any(v < 0 for v in self.g):
            raise ValueError("f and g must be nonnegative")

    @property
    def size(self) -> int:
        return len(self.f)


class ReweighCheck(BaseModel):
    """Hypotheses (i)-(iv) and the conclusion sum f <= sum_{s0} f0, evaluated exactly."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    positive_outside: bool = Field(..., description="(i) g > 0 outside s0")
    separated: bool = Field(..., description="(ii) max g on s0 <= min g outside s0")
    dominated: bool = Field(..., description="(iii) f <= f0 on s0")
    weighted: bool = Field(..., description="(iv) sum_{s0} f0 g >= sum f g")
    conclusion_holds: bool
    lhs: Fraction
    rhs: Fraction

    @property
    def hypotheses_hold(self) -> bool:
        return self.positive_outside and self.separated and self.dominated and self.weighted


class ProofCut(BaseModel):
    """Thresholds (z0, k0, Z) extracted from a concrete coloring, with bookkeeping sets."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    n: int
    z0: int
    k0: int
    Z: tuple[int, ...] = ()
    weighted_rainbow: int = Field(..., description="sum r(z) (n + 1 - z)")
    rainbow_ceiling: int = Field(..., description="sum_{z >= z0} (z - 1) - k0 |Z|")
    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    c_sets: dict[int, tuple[int, ...]] = Field(
        default_factory=dict, description="C_i: z >= z0, z not in Z, c(z) = i"
    )
    c_prime_sets: dict[int, tuple[int, ...]] = Field(
        default_factory=dict, description="C'_i: z < z0, c(z) = i"
    )
    z_max: dict[int, int | None] = Field(
        default_factory=dict, description="max C_i, None standing for max of the empty set"
    )

    def disjunction_holds(self, slack: int = 0) -> bool:
        """n - slack <= max(z0 - 1 + |Z| + 2 k0, |Z| + 3 k0)."""
        size = len(self.Z)
        return self.n - slack <= max(self.z0 - 1 + size + 2 * self.k0, size + 3 * self.k0)


class BetaCurves(BaseModel):
    """The two beta boundaries at one (alpha, gamma)."""

    alpha: float
    gamma: float
    beta1: float
    discriminant: float
    beta2_lower: float | None = None
    beta2_upper: float | None = None

    @property
    def feasible(self) -> bool:
        return self.discriminant >= 0


class Binding(BaseModel):
    """Which constraints are active at a maximizer."""

    disjunct: Literal["first", "second"]
    first_active: bool
    second_active: bool
    cubic_lower_active: bool
    cubic_upper_active: bool
    box_active: bool


class BoundSolution(BaseModel):
    """Maximizer of 1/2 - alpha^2/2 - beta gamma for one gamma."""

    gamma: float
    feasible: bool
    alpha_star: float | None = None
    beta_star: float | None = None
    objective: float | None = None
    fraction: float | None = None
    binding: Binding | None = None
    use_disjunction: bool = True


class MinMaxResult(BaseModel):
    """Best gamma of the min-max problem and, on request, the whole gamma curve."""

    best: BoundSolution
    curve: list[tuple[float, float | None]] = Field(default_factory=list)


class RegionRow(BaseModel):
    gamma: float
    alpha: float
    beta1: float
    beta2_lower: float | None
    beta2_upper: float | None
    feasible_flag: bool
    objective: float | None


class SimpleRoot(BaseModel):
    """Root of a^3/3 - a^2/2 + 1/10 in [0, 1], computed in closed form and by Newton."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    closed_form: mpf
    newton: mpf
    residual: mpf
    coefficient: mpf = Field(..., description="(1 - alpha^2) / 2")
    fraction_bound: mpf = Field(..., description="1 - alpha^2")


class PrintedPoint(BaseModel):
    """The printed closed-form intersection point evaluated at high precision."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    gamma0: mpf
    alpha_star: mpf
    beta_star: mpf
    objective: mpf
    fraction: mpf
    beta2_gap: mpf | None = Field(None, description="beta2_lower(alpha*) - beta1(alpha*)")


class PrintedComparison(BaseModel):
    """The printed point and the solver optimum at the same gamma, side by side."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    printed: PrintedPoint
    solver: BoundSolution
    fraction_gap: float = Field(..., description="solver fraction - printed fraction")
