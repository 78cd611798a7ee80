"""
Analytic logarithmic negativities used as oracles for the generic pipeline.

Fermions, one mode accelerated::

    LN_sp = log2(1 + cos(r_f)**2),  LN_sa = log2(1 + sin(r_f)**2)

Fermions, both modes accelerated with the same ``r_f``::

    LN_pp = log2(1 + cos**4),  LN_aa = log2(1 + sin**4),
    LN_pa = LN_ap = log2(1 + cos**2 sin**2)

Scalars, one mode accelerated. Without a pair restriction the partial
transpose of ``rho_{s,p}`` decomposes into blocks whose negative eigenvalues
sum to the series

    2 N_e + 1 = 1/(2 cosh**2) + sum_{n>=0} tanh**(2n)/(2 cosh**2)
                * sqrt((n / sinh**2 + tanh**2)**2 + 4 / cosh**2)

and ``rho_{s,a}`` is separable. With at most ``M`` pairs the sum is finite
and ``rho_{s,a}`` keeps a single negative eigenvalue.
"""

import math
from collections.abc import Iterator, Mapping
from dataclasses import dataclass, field
from enum import Enum
from types import MappingProxyType

from accel_ent.bogoliubov import R_MAX_FERMION, R_MAX_SCALAR
from accel_ent.errors import ConvergenceError
from accel_ent.fock import restriction_params
from accel_ent.settings import DEFAULT_SETTINGS, NumericSettings
from accel_ent.utilities import require_range, stable_sum


class Scenario(Enum):
    """Which of the two entangled modes is accelerated."""

    ONE = "one"
    BOTH = "both"

    @classmethod
    def parse(cls, value: "str | Scenario") -> "Scenario":
        """
        Parse ``"one"``/``"both"`` (also ``one_accelerated``/``both_accelerated``).

        Raises
        ------
        ValueError
            If the value names no scenario.
        """
        if isinstance(value, Scenario):
            return value
        key = value.strip().lower().removesuffix("_accelerated")
        for member in cls:
            if member.value == key:
                return member
        valid = ", ".join(f"'{m.value}'" for m in cls)
        raise ValueError(f"Unknown scenario: '{value}'. Valid: {valid}")


@dataclass(frozen=True)
class ClosedForms:
    """
    Labelled set of logarithmic negativities.

    Parameters
    ----------
    values : Mapping[str, float]
        ``LN_total``, ``LN_sp``, ... keyed by label.
    error_bound : float
        Bound on the error of every value (nonzero only for truncated series).
    """

    values: Mapping[str, float]
    error_bound: float = 0.0
    terms: int = field(default=0, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", MappingProxyType(dict(self.values)))

    def __getitem__(self, key: str) -> float:
        return self.values[key]

    def __iter__(self) -> Iterator[str]:
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)


def fermion_closed_forms(
    r_f: float, scenario: Scenario | str = Scenario.ONE
) -> ClosedForms:
    """
    Fermion logarithmic negativities at ``r_f``.

    Examples
    --------
    >>> forms = fermion_closed_forms(math.pi / 4, "both")
    >>> round(forms["LN_pp"], 6)
    0.321928
    """
    r_f = require_range("r_f", r_f, 0.0, R_MAX_FERMION)
    c2, s2 = math.cos(r_f) ** 2, math.sin(r_f) ** 2
    match Scenario.parse(scenario):
        case Scenario.ONE:
            values = {
                "LN_total": 1.0,
                "LN_sp": math.log2(1.0 + c2),
                "LN_sa": math.log2(1.0 + s2),
            }
        case Scenario.BOTH:
            cross = math.log2(1.0 + c2 * s2)
            values = {
                "LN_total": 1.0,
                "LN_pp": math.log2(1.0 + c2 * c2),
                "LN_aa": math.log2(1.0 + s2 * s2),
                "LN_pa": cross,
                "LN_ap": cross,
            }
    return ClosedForms(values)


def scalar_series_ln_sp(
    r: float, settings: NumericSettings = DEFAULT_SETTINGS
) -> tuple[float, float, int]:
    """
    ``LN(rho_{s,p})`` for one unrestricted accelerated scalar mode.

    Terms are summed until one drops below ``settings.series_tolerance``.
    The neglected remainder is bounded in closed form using
    ``sqrt(u**2 + v**2) <= u + v`` and geometric sums in ``tanh**2``.

    Returns
    -------
    tuple[float, float, int]
        ``(LN_sp, error bound on LN_sp, number of terms)``.

    Raises
    ------
    ConvergenceError
        If ``settings.series_max_terms`` is reached first.
    """
    r = require_range("r", r, 0.0, R_MAX_SCALAR)
    if r == 0.0:
        return 1.0, 0.0, 0
    x = math.tanh(r) ** 2
    c2 = math.cosh(r) ** 2
    s2 = math.sinh(r) ** 2
    terms = [1.0 / (2.0 * c2)]
    n = 0
    while True:
        term = x**n / (2.0 * c2) * math.sqrt((n / s2 + x) ** 2 + 4.0 / c2)
        terms.append(term)
        if n >= 1 and term < settings.series_tolerance:
            break
        n += 1
        if n > settings.series_max_terms:
            raise ConvergenceError(
                f"series for r={r!r} not below {settings.series_tolerance:.1e}",
                f"after {settings.series_max_terms} terms; last term {term:.3e}",
            )

    k = n + 1
    geometric = x**k / (1.0 - x)
    weighted = x**k * (k * (1.0 - x) + x) / (1.0 - x) ** 2
    remainder = (weighted / s2 + (x + 2.0 / math.sqrt(c2)) * geometric) / (2.0 * c2)
    total = stable_sum(terms)
    return math.log2(total), remainder / (total * math.log(2.0)), len(terms)


def restricted_ln_sp(r: float, M: int) -> float:
    """
    ``LN(rho_{s,p})`` with at most ``M`` pairs.

    The partial transpose splits into 2x2 blocks ``n = 1..M`` with diagonal
    ``d1 = (n-1) N2**2 tanh**(2n-4) / (2 cosh**4)``,
    ``d2 = N1**2 tanh**(2n) / (2 cosh**2)`` and off-diagonal
    ``N1 N2 sqrt(n) tanh**(2n-2) / (2 cosh**3)``.
    """
    params = restriction_params(r, M)
    t = math.tanh(params.r)
    c = math.cosh(params.r)
    negatives = []
    for n in range(1, params.M + 1):
        d1 = 0.0 if n == 1 else (n - 1) * params.N2**2 * t ** (2 * n - 4) / (2.0 * c**4)
        d2 = params.N1**2 * t ** (2 * n) / (2.0 * c**2)
        off = params.N1 * params.N2 * math.sqrt(n) * t ** (2 * n - 2) / (2.0 * c**3)
        low = (d1 + d2) / 2.0 - math.sqrt(((d1 - d2) / 2.0) ** 2 + off**2)
        if low < 0.0:
            negatives.append(low)
    return math.log2(1.0 - 2.0 * stable_sum(negatives))


def restricted_ln_sa(r: float, M: int) -> float:
    """
    ``LN(rho_{s,a})`` with at most ``M`` pairs.

    ``log2(1 - (N1**2 tanh**(2M-2) / (2 cosh**2))
    * (1 - sqrt(1 + 4 N2**2 M tanh**2 / (N1**2 cosh**2))))``

    Examples
    --------
    >>> round(restricted_ln_sa(math.asinh(1.0), 1), 6)
    0.415037
    """
    params = restriction_params(r, M)
    x = math.tanh(params.r) ** 2
    c2 = math.cosh(params.r) ** 2
    prefactor = params.N1**2 * x ** (params.M - 1) / (2.0 * c2)
    inner = 4.0 * params.N2**2 * params.M * x / (params.N1**2 * c2)
    return math.log2(1.0 - prefactor * (1.0 - math.sqrt(1.0 + inner)))


def scalar_closed_forms(
    r: float, M: int | None = None, settings: NumericSettings = DEFAULT_SETTINGS
) -> ClosedForms:
    """
    Scalar logarithmic negativities with one mode accelerated.

    Parameters
    ----------
    r : float
        Squeezing parameter in ``[0, asinh 1]``.
    M : int | None
        Pair restriction; ``None`` sums the full series.
    settings : NumericSettings
        Series tolerance and term cap.

    Returns
    -------
    ClosedForms
        Unrestricted: ``LN_total``, ``LN_sp`` (series) and the vanishing
        ``LN_sa``, ``LN_pa``, ``LN_aa``; ``error_bound`` bounds the series
        remainder. Restricted: ``LN_total``, ``LN_sp`` and ``LN_sa``.
    """
    if M is None:
        ln_sp, bound, terms = scalar_series_ln_sp(r, settings)
        return ClosedForms(
            {"LN_total": 1.0, "LN_sp": ln_sp, "LN_sa": 0.0, "LN_pa": 0.0, "LN_aa": 0.0},
            error_bound=bound,
            terms=terms,
        )
    return ClosedForms(
        {
            "LN_total": 1.0,
            "LN_sp": restricted_ln_sp(r, M),
            "LN_sa": restricted_ln_sa(r, M),
        }
    )


__all__ = [
    "ClosedForms",
    "Scenario",
    "fermion_closed_forms",
    "restricted_ln_sa",
    "restricted_ln_sp",
    "scalar_closed_forms",
    "scalar_series_ln_sp",
]
