"""Closed-form upper bounds on packing and domination numbers.

Each evaluator returns a :class:`BoundEvaluation`; graphs outside a bound's
hypothesis get ``applicable=False`` with a reason instead of an exception.
Values with square roots are kept as ``a + b*sqrt(c)`` over the rationals and
compared with integers exactly.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from .graph import Graph, structural_profile

Rational = Union[int, Fraction]


def _sign(x) -> int:
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class Surd:
    """The real number ``a + b * sqrt(c)`` with rational a, b and c >= 0."""

    a: Fraction
    b: Fraction = Fraction(0)
    c: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        object.__setattr__(self, "c", Fraction(self.c))
        if self.c < 0:
            raise ValueError("negative radicand")

    def compare(self, x: Rational) -> int:
        """Sign of ``self - x``."""
        p = self.a - x
        if self.b == 0 or self.c == 0:
            return _sign(p)
        sb = _sign(self.b)
        if p == 0 or _sign(p) == sb:
            return sb
        lhs, rhs = p * p, self.b * self.b * self.c
        if lhs == rhs:
            return 0
        return _sign(p) if lhs > rhs else sb

    def is_rational(self) -> bool:
        if self.b == 0 or self.c == 0:
            return True
        num, den = self.c.numerator, self.c.denominator
        return math.isqrt(num) ** 2 == num and math.isqrt(den) ** 2 == den

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(self.c)

    def __str__(self) -> str:
        if self.b == 0 or self.c == 0:
            return str(self.a)
        if self.is_rational():
            r = Fraction(math.isqrt(self.c.numerator), math.isqrt(self.c.denominator))
            return str(self.a + self.b * r)
        sign = "-" if self.b < 0 else "+"
        coef = "" if abs(self.b) == 1 else f"{abs(self.b)}*"
        return f"{self.a} {sign} {coef}sqrt({self.c})"


def _as_surd(v: Union[Rational, Surd]) -> Surd:
    return v if isinstance(v, Surd) else Surd(Fraction(v))


class BoundId(str, enum.Enum):
    L2_PENDANT = "l2_pendant"
    LK_ORDER_SIZE = "lk_order_size"
    OPEN_PACKING_ORDER_SIZE = "open_packing_order_size"
    OPEN_PACKING_MIN_DEGREE = "open_packing_min_degree"
    PACKING_MIN_DEGREE = "packing_min_degree"
    DOUBLE_DOMINATION_NEW = "double_domination_plus_packing"
    DOUBLE_DOMINATION_PRIOR_SUM = "double_domination_plus_packing_prior"
    DOUBLE_DOMINATION_PRIOR = "double_domination_prior"


@dataclass(frozen=True)
class BoundEvaluation:
    bound_id: BoundId
    value: Optional[Surd]
    applicable: bool
    reason: str = ""
    invariant: Optional[int] = None
    tight: Optional[bool] = None
    holds: Optional[bool] = None
    details: dict = field(default_factory=dict, hash=False, compare=False)

    def to_dict(self) -> dict:
        return {
            "bound": self.bound_id.value,
            "applicable": self.applicable,
            "reason": self.reason,
            "value": None if self.value is None else str(self.value),
            "value_float": None if self.value is None else float(self.value),
            "invariant": self.invariant,
            "holds": self.holds,
            "tight": self.tight,
            **({"details": self.details} if self.details else {}),
        }


def _evaluate(bound_id, value, invariant, **details) -> BoundEvaluation:
    value = _as_surd(value)
    if invariant is None:
        return BoundEvaluation(bound_id, value, True, details=details)
    cmp = value.compare(invariant)
    return BoundEvaluation(
        bound_id, value, True, invariant=invariant, tight=cmp == 0, holds=cmp >= 0, details=details
    )


def _inapplicable(bound_id, reason, invariant=None) -> BoundEvaluation:
    return BoundEvaluation(bound_id, None, False, reason=reason, invariant=invariant)


def l2_pendant_bound(g: Graph, invariant: Optional[int] = None) -> BoundEvaluation:
    """2(n - l + s*delta*) / (1 + delta*), an upper bound on L_2."""
    bid = BoundId.L2_PENDANT
    if g.n < 3:
        return _inapplicable(bid, "requires n >= 3", invariant)
    if not g.is_connected():
        return _inapplicable(bid, "requires a connected graph", invariant)
    prof = structural_profile(g)
    ds = prof.delta_star
    value = Fraction(2 * (g.n - prof.ell + prof.s * ds), 1 + ds)
    return _evaluate(bid, value, invariant, ell=prof.ell, s=prof.s, delta_star=ds)


def lk_hypothesis(g: Graph, k: int) -> tuple[bool, str]:
    """Whether k <= 2(n - sqrt(n^2 - n - 2m)) or delta >= k - 1, decided in integers."""
    n, m = g.n, g.m
    if g.min_degree >= k - 1:
        return True, "delta >= k - 1"
    # k <= 2n - 2 sqrt(r)  <=>  2n - k >= 0 and (2n - k)^2 >= 4r
    r = n * n - n - 2 * m
    if 2 * n - k >= 0 and (2 * n - k) ** 2 >= 4 * r:
        return True, "k <= 2(n - sqrt(n^2 - n - 2m))"
    return False, "neither k <= 2(n - sqrt(n^2 - n - 2m)) nor delta >= k - 1"


def lk_order_size_bound(g: Graph, k: int, invariant: Optional[int] = None) -> BoundEvaluation:
    """n + k/2 - sqrt(k^2/4 + (1 - k)n + 2m), an upper bound on L_k."""
    bid = BoundId.LK_ORDER_SIZE
    if k < 1:
        raise ValueError("k must be positive")
    ok, why = lk_hypothesis(g, k)
    if not ok:
        return _inapplicable(bid, why, invariant)
    radicand = Fraction(k * k, 4) + (1 - k) * g.n + 2 * g.m
    return _evaluate(bid, Surd(g.n + Fraction(k, 2), -1, radicand), invariant, k=k, hypothesis=why)


def open_packing_order_size_bound(g: Graph, invariant: Optional[int] = None) -> BoundEvaluation:
    """n - sqrt(2m - n), an upper bound on rho_o for graphs without isolated vertices."""
    bid = BoundId.OPEN_PACKING_ORDER_SIZE
    if g.n == 0 or g.min_degree < 1:
        return _inapplicable(bid, "requires no isolated vertex", invariant)
    return _evaluate(bid, Surd(g.n, -1, 2 * g.m - g.n), invariant)


def open_packing_min_degree_bound(g: Graph, invariant: Optional[int] = None) -> BoundEvaluation:
    """n / delta, an upper bound on rho_o for connected graphs with n >= 2."""
    bid = BoundId.OPEN_PACKING_MIN_DEGREE
    if g.n < 2 or not g.is_connected():
        return _inapplicable(bid, "requires a connected graph with n >= 2", invariant)
    return _evaluate(bid, Fraction(g.n, g.min_degree), invariant)


def packing_min_degree_bound(g: Graph, invariant: Optional[int] = None) -> BoundEvaluation:
    """n / (delta + 1), an upper bound on rho for connected graphs.

    K_1 is treated as out of range, like the open-packing version.
    """
    bid = BoundId.PACKING_MIN_DEGREE
    if g.n < 2 or not g.is_connected():
        return _inapplicable(bid, "requires a connected graph with n >= 2", invariant)
    return _evaluate(bid, Fraction(g.n, g.min_degree + 1), invariant)


def double_domination_bounds(
    g: Graph, gamma_x2: Optional[int] = None, rho: Optional[int] = None
) -> list[BoundEvaluation]:
    """The improved bound on gamma_x2 + rho and the two bounds it sharpens.

    Returns ``[new, prior_sum, prior]``:

    * new: gamma_x2 + rho <= n - delta + 2 (delta >= 2)
    * prior_sum: gamma_x2 + rho <= n (delta >= 2)
    * prior: gamma_x2 <= n - delta + 1 (delta >= 1)

    The new evaluation's details record whether, on this graph, it implies
    each prior bound.
    """
    n, delta = g.n, g.min_degree
    both = None if gamma_x2 is None or rho is None else gamma_x2 + rho
    if n == 0 or delta < 2:
        new = _inapplicable(BoundId.DOUBLE_DOMINATION_NEW, "requires delta >= 2", both)
        prior_sum = _inapplicable(BoundId.DOUBLE_DOMINATION_PRIOR_SUM, "requires delta >= 2", both)
    else:
        implies = {"implies_prior_sum": n - delta + 2 <= n}
        if rho is not None:
            implies["implies_prior"] = n - delta + 2 - rho <= n - delta + 1
        new = _evaluate(BoundId.DOUBLE_DOMINATION_NEW, n - delta + 2, both, **implies)
        prior_sum = _evaluate(BoundId.DOUBLE_DOMINATION_PRIOR_SUM, n, both)
    if n == 0 or delta < 1:
        prior = _inapplicable(BoundId.DOUBLE_DOMINATION_PRIOR, "requires no isolated vertex", gamma_x2)
    else:
        prior = _evaluate(BoundId.DOUBLE_DOMINATION_PRIOR, n - delta + 1, gamma_x2)
    return [new, prior_sum, prior]


def lk_trivial_threshold(g: Graph, k: int) -> bool:
    """True iff k >= Delta + 1, which is exactly when L_k(G) = n."""
    return k >= g.max_degree + 1
