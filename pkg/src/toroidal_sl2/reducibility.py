"""Reducibility of the Verma module via resonances on the horizontal
affine subalgebra.

The module for highest weight lam is reducible exactly when some positive
root beta of the horizontal affine subalgebra and some positive integer l
satisfy (lam + rho)(beta_check) = l.  With n1 = lam(alpha_check) and
k1 = lam(c1), the two real-root families give

    beta = alpha + k*delta1  (k >= 0):   l = (n1 + 1) + k*(k1 + 2)
    beta = -alpha + k*delta1 (k >= 1):   l = -(n1 + 1) + k*(k1 + 2)

Imaginary roots beta = k*delta1 resonate only at the critical level
k1 = -2 (their pairing degenerates to k*(k1 + 2) = 0 for every l there and
to nothing otherwise), which the standing assumption k1 >= 0 excludes, so
they never contribute here.

Finite decision bound.  Both families are strictly increasing arithmetic
progressions in k with step s = k1 + 2 >= 2.  A term can be a positive
integer only once the progression has reached 1, which happens no later
than k = ceil((|n1| + 2)/s); and whether a term is an integer depends on k
only through k mod den(s), a period dividing q = lcm(den(n1), den(k1)).
Hence scanning k = 0 .. kmax with

    kmax = max(1, ceil((|n1| + 2)/s) + q)

covers a full integrality period past the positivity threshold for both
families, and finding nothing there proves there is nothing at all.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil, lcm

from .roots import RHO, RootVector, Weight, coroot
from .verma import HighestWeight


@dataclass(frozen=True)
class ResonancePair:
    """A witness (beta, l) with (lam + rho)(beta_check) = l, l a positive integer."""

    beta: RootVector
    l: int
    quotient_weight: Weight

    def to_json(self) -> dict:
        return {
            "beta": {"a": self.beta.a, "n1": self.beta.n1, "n2": self.beta.n2},
            "l": self.l,
            "quotient_weight": self.quotient_weight.to_json(),
        }


@dataclass(frozen=True)
class ReducibilityReport:
    verdict: bool
    witnesses: tuple[ResonancePair, ...]
    scan_bound: int

    def to_json(self) -> dict:
        return {
            "reducible": self.verdict,
            "witnesses": [w.to_json() for w in self.witnesses],
            "scan_bound": self.scan_bound,
        }


def _pair_for(hw: HighestWeight, beta: RootVector) -> ResonancePair | None:
    lam_rho = hw.weight() + RHO
    val = lam_rho.pair(coroot(beta))
    if val.denominator == 1 and val >= 1:
        l = int(val)
        return ResonancePair(beta, l, hw.weight() - l * Weight.from_root(beta))
    return None


def kk_pairs(hw: HighestWeight, kmax: int) -> list[ResonancePair]:
    """All resonance pairs with |delta1-degree of beta| <= kmax.

    Enumerates beta = alpha + k*delta1 (0 <= k <= kmax) and
    beta = -alpha + k*delta1 (1 <= k <= kmax); imaginary roots cannot
    resonate away from the critical level, see the module docstring.
    """
    if kmax < 0:
        raise ValueError("kmax must be >= 0")
    out: list[ResonancePair] = []
    for k in range(kmax + 1):
        for a in (1, -1):
            if a == -1 and k == 0:
                continue
            pair = _pair_for(hw, RootVector(a, k, 0))
            if pair is not None:
                out.append(pair)
    # order by height of l*beta in simple-root coordinates, then by family
    out.sort(key=lambda p: (p.l * (2 * p.beta.n1 + p.beta.a), p.beta.n1, -p.beta.a))
    return out


def sufficient_kmax(hw: HighestWeight) -> int:
    """The finite bound that makes the resonance scan a decision procedure."""
    s = hw.k1 + 2
    assert s >= 2, "positive step requires k1 >= 0"
    q = lcm(hw.n1.denominator, hw.k1.denominator)
    bound = max(1, ceil((abs(hw.n1) + 2) / s) + q)
    assert q % s.denominator == 0, "integrality period must divide the scan padding"
    return bound


def is_reducible(hw: HighestWeight) -> ReducibilityReport:
    """Exact reducibility decision; the report records the bound used."""
    bound = sufficient_kmax(hw)
    witnesses = tuple(kk_pairs(hw, bound))
    return ReducibilityReport(bool(witnesses), witnesses, bound)


def maximal_submodule_generators(hw: HighestWeight) -> list[Weight]:
    """Weights lam - l*beta over all witnesses within the decision bound."""
    return [w.quotient_weight for w in is_reducible(hw).witnesses]
