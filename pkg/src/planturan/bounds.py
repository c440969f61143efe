"""Closed-form extremal bounds, evaluated exactly over the rationals."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable


class RangeWarning(UserWarning):
    """Parameters fall outside the range where a formula is claimed."""


@dataclass(frozen=True)
class BoundFormula:
    id: str
    params: tuple[str, ...]
    kind: str  # "exact", "upper" or "lower"
    statement: str
    evaluate: Callable[..., Fraction]
    in_range: Callable[..., bool]
    range_text: str
    notes: tuple[str, ...] = field(default=())
    reference_only: bool = False

    def holds(self, computed: int, **params) -> bool:
        """Does an exact computed value satisfy this formula?"""
        value = self.evaluate(**params)
        if self.kind == "exact":
            return computed == value
        if self.kind == "upper":
            return computed <= value
        return computed >= value


REGISTRY: dict[str, BoundFormula] = {}


def _register(*args, **kw):
    f = BoundFormula(*args, **kw)
    REGISTRY[f.id] = f


F = Fraction


def _ceil(x: Fraction) -> int:
    return math.ceil(x)


def lemma2_value(n: int, k: int) -> Fraction:
    r = (n - 3) % (k - 2)
    return (3 - F(1, k - 2)) * n + F(3 + r, k - 2) - 5 + max(1 - r, 0)


def lemma3_value(n: int, k: int) -> Fraction:
    if k % 2:
        d = k - 4 + k // 2
        eps = (n - (2 * k - 1)) % d
        return (3 - F(1, d)) * n + F(5 + eps, d) - F(17, 3) + max(1 - eps, 0)
    d = k - 6 + k // 2
    eps = (n - (2 * k - 1)) % d
    return (3 - F(1, d)) * n + F(7 + eps, d) - F(17, 3) + max(1 - eps, 0)


def lemma3_remainder(n: int, k: int) -> int:
    d = k - 4 + k // 2 if k % 2 else k - 6 + k // 2
    return (n - (2 * k - 1)) % d


def _tc3(n: int, t: int) -> Fraction:
    if t >= 3:
        return F(3 * n - 6)
    if t == 2:
        return F(_ceil(F(5 * n, 2)) - 5)
    return F(2 * n - 4)


def _bipartite(n: int, t: int) -> Fraction:
    if t == 4 and n <= 8:
        return F(3 * n - 7)
    if t == 3 and n <= 11:
        return F(3 * n - 8)
    return F(3 * n - 6)


def _prism(n: int) -> Fraction:
    return F(3 * n - 7) if 6 <= n <= 9 else F(3 * n - 6)


_register("dowden.c3", ("n",), "exact", "ex(n, C3) = 2n-4", lambda n: F(2 * n - 4),
          lambda n: n >= 3, "n >= 3")
_register("dowden.k4", ("n",), "exact", "ex(n, K4) = 3n-6", lambda n: F(3 * n - 6),
          lambda n: n >= 6, "n >= 6 (registered); stated for all n >= 4",
          notes=("registered range starts at n = 6: exhaustive search gives ex(4, K4) = 5 and "
                 "ex(5, K4) = 8, below 3n-6, while the extremal construction 2K_1 + C_{n-2} "
                 "exists only from n = 6",))
_register("dowden.c4", ("n",), "upper", "ex(n, C4) <= 15(n-2)/7", lambda n: F(15 * (n - 2), 7),
          lambda n: n >= 4, "n >= 4", reference_only=True)
_register("dowden.c5", ("n",), "upper", "ex(n, C5) <= 12(n-2)/5", lambda n: F(12 * (n - 2), 5),
          lambda n: n >= 5, "n >= 5", reference_only=True)
_register("dowden.c5b", ("n",), "upper", "ex(n, C5) <= (12n-33)/5", lambda n: F(12 * n - 33, 5),
          lambda n: n >= 11, "n >= 11", reference_only=True)
_register("theta4", ("n",), "upper", "ex(n, Theta4) <= 12(n-2)/5", lambda n: F(12 * (n - 2), 5),
          lambda n: n >= 4, "n >= 4", reference_only=True)
_register("theta5", ("n",), "upper", "ex(n, Theta5) <= 5(n-2)/2", lambda n: F(5 * (n - 2), 2),
          lambda n: n >= 5, "n >= 5", reference_only=True)
_register("theta6", ("n",), "upper", "ex(n, C6) <= ex(n, Theta6) <= 18(n-2)/7", lambda n: F(18 * (n - 2), 7),
          lambda n: n >= 6, "n >= 6", reference_only=True)
_register("c6", ("n",), "upper", "ex(n, C6) <= (5n-14)/2", lambda n: F(5 * n - 14, 2),
          lambda n: n >= 18, "n >= 18", reference_only=True)
_register("theta6b", ("n",), "upper", "ex(n, Theta6) <= (18n-48)/7", lambda n: F(18 * n - 48, 7),
          lambda n: n >= 14, "n >= 14", reference_only=True)
_register("main.prism", ("n",), "exact", "ex(n, prism) = 3n-7 for 6 <= n <= 9, else 3n-6", _prism,
          lambda n: n >= 6, "n >= 6")
_register("tc3", ("n", "t"), "exact", "ex(n, tC3) = 3n-6 (t>=3), ceil(5n/2)-5 (t=2), 2n-4 (t=1)", _tc3,
          lambda n, t: t >= 1 and n >= 3 * t, "n >= 3t >= 3")
_register("prop.c3plus", ("n",), "exact", "ex(n, C3^+) = ex(n, C3) = 2n-4", lambda n: F(2 * n - 4),
          lambda n: n >= 4, "n >= 4")
_register("lemma2ck", ("n", "k"), "lower", "ex(n, 2Ck) >= (3-1/(k-2))n + (3+r)/(k-2) - 5 + max(1-r, 0)",
          lemma2_value, lambda n, k: n >= 2 * k >= 8, "n >= 2k >= 8")
_register("lemma3", ("n", "k"), "lower",
          "ex(n, 2Ck) >= (3-1/d)n + (c+eps)/d - 17/3 + max(1-eps, 0), d = k-4+floor(k/2), c = 5 (odd k); "
          "d = k-6+k/2, c = 7 (even k)",
          lemma3_value,
          lambda n, k: k >= 7 and n >= (3 * k - 3 if k % 2 else 3 * k - 6),
          "k >= 7; n >= 3k-3 (odd k) or n >= 3k-6 (even k)",
          notes=("the blocks 𝒯_s^m are built for m <= s <= 3m-4 (one stacked vertex per 3-face); "
                 "the stated s <= 2m-4 is read as s - m <= 2m-4",))
_register("lemma3.small", ("n", "k"), "exact", "ex(n, 2Ck) = 3n-6 for n <= 3k-4 (odd k) or n <= 3k-7 (even k)",
          lambda n, k: F(3 * n - 6),
          lambda n, k: k >= 7 and 2 * k <= n <= (3 * k - 4 if k % 2 else 3 * k - 7),
          "k >= 7, 2k <= n <= 3k-4 (odd) or 3k-7 (even)")
_register("bipartite", ("n", "t"), "exact",
          "ex(n, K2,t) = 3n-6 (t>=5; t=4, n>=9; t=3, n>=12), 3n-7 (t=4, n<=8), 3n-8 (t=3, n<=11)",
          _bipartite, lambda n, t: t >= 3 and n >= t + 2, "t >= 3, n >= t+2")
_register("conj.weak", ("n", "k"), "upper", "ex(n, Ck) <= (3-1/(k-2))n - 4",
          lambda n, k: (3 - F(1, k - 2)) * n - 4, lambda n, k: n >= k >= 3, "n >= k >= 3")
_register("conj.c4", ("n",), "exact", "ex(n, 2C4) = 5n/2 - (5+r)/2, r = (n-3) mod 2",
          lambda n: F(5 * n, 2) - F(5 + (n - 3) % 2, 2), lambda n: n >= 8, "n >= 8")


def get(id: str) -> BoundFormula:
    try:
        return REGISTRY[id]
    except KeyError:
        raise ValueError(f"unknown bound {id!r}; known: {', '.join(sorted(REGISTRY))}") from None


def eval_bound(id: str, **params: int) -> Fraction:
    """Exact value of a registered formula; warns (but evaluates) out of range."""
    f = get(id)
    missing = [p for p in f.params if p not in params]
    if missing:
        raise ValueError(f"bound {id!r} needs parameter(s): {', '.join(missing)}")
    extra = set(params) - set(f.params)
    if extra:
        raise ValueError(f"bound {id!r} does not take: {', '.join(sorted(extra))}")
    if not f.in_range(**params):
        warnings.warn(f"{id}: parameters {params} outside the stated range ({f.range_text})", RangeWarning,
                      stacklevel=2)
    return f.evaluate(**params)
