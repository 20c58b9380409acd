"""Sing(omega): the twists t for which omega + rho - t*omega_k is singular.

Only radical roots (those involving alpha_k) see the twist.  For such a root
the pairing ``(omega + rho - t omega_k, alpha^vee)`` vanishes exactly at

    t = sum_j m_j (lambda_j + 1) / m_k,

an affine function of the weight coefficients.  These affine forms are the
symbolic content of Sing; evaluating them at a concrete weight and keeping
the integral values gives the set itself.
"""
from __future__ import annotations

import string
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor
from typing import Sequence

from .bwb import check_levi_dominant
from .rootsys import InvariantError, RootSystem, Vec, levi_coroots, pairing, radical_coroots
from .weyl import is_singular


def variable_names(rank: int) -> list[str]:
    if rank <= 26:
        return list(string.ascii_lowercase[:rank])
    return [f"x{i}" for i in range(1, rank + 1)]


def _frac_text(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _frac_latex(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else rf"\frac{{{q.numerator}}}{{{q.denominator}}}"


@dataclass(frozen=True, order=True)
class AffineForm:
    """``constant + sum_j multipliers[j] * lambda_j``, exact."""

    constant: Fraction
    multipliers: tuple[Fraction, ...]
    coroot: Vec

    @classmethod
    def from_coroot(cls, coroot: Sequence[int], k: int) -> AffineForm:
        mk = coroot[k - 1]
        if mk <= 0:
            raise ValueError(f"coroot {tuple(coroot)} does not involve node {k}")
        return cls(
            Fraction(sum(coroot), mk),
            tuple(Fraction(m, mk) for m in coroot),
            tuple(coroot),
        )

    def __call__(self, weight: Sequence[int]) -> Fraction:
        return self.constant + sum(m * x for m, x in zip(self.multipliers, weight))

    def _render(self, fmt, paren: bool) -> str:
        parts = []
        for name, m in zip(variable_names(len(self.multipliers)), self.multipliers):
            if m == 0:
                continue
            if m == 1:
                parts.append(name)
            elif m.denominator == 1 or not paren:
                parts.append(f"{fmt(m)}{name}")
            else:
                parts.append(f"({fmt(m)}){name}")
        if self.constant:
            parts.append(fmt(self.constant))
        return " + ".join(parts) if parts else "0"

    def __str__(self) -> str:
        return self._render(_frac_text, paren=True)

    def latex(self) -> str:
        return self._render(_frac_latex, paren=False)

    def to_json(self) -> dict:
        return {
            "constant": _frac_text(self.constant),
            "multipliers": [_frac_text(m) for m in self.multipliers],
            "coroot": list(self.coroot),
            "text": str(self),
            "latex": self.latex(),
        }

    @classmethod
    def from_json(cls, data: dict) -> AffineForm:
        return cls(
            Fraction(data["constant"]),
            tuple(Fraction(m) for m in data["multipliers"]),
            tuple(data["coroot"]),
        )


def sing_forms(rs: RootSystem, k: int) -> tuple[AffineForm, ...]:
    """One affine form per radical coroot, sorted by (constant, multipliers)."""
    key = ("forms", k)
    if key not in rs._index:
        rs._index[key] = tuple(sorted(AffineForm.from_coroot(cv, k) for cv in radical_coroots(rs, k)))
    return rs._index[key]


def sing_set(rs: RootSystem, k: int, weight: Sequence[int]) -> tuple[int, ...]:
    """Sorted Sing(omega) for an L-dominant weight."""
    rs.check_node(k)
    rs.check_weight(weight)
    check_levi_dominant(rs, k, weight)
    shifted = tuple(x + 1 for x in weight)
    for cv in levi_coroots(rs, k):
        if pairing(rs, shifted, cv) <= 0:
            raise InvariantError(f"Levi coroot {cv} pairs non-positively with omega + rho")
    values = set()
    for f in sing_forms(rs, k):
        v = f(weight)
        if v.denominator == 1:
            values.add(int(v))
    return tuple(sorted(values))


def sing_set_by_scan(rs: RootSystem, k: int, weight: Sequence[int]) -> tuple[int, ...]:
    """Sing(omega) by testing every integer twist in the hull of the form values."""
    vals = [f(weight) for f in sing_forms(rs, k)]
    lo, hi = floor(min(vals)), ceil(max(vals))
    out = []
    for t in range(lo, hi + 1):
        mu = tuple(x + 1 - t * (j == k - 1) for j, x in enumerate(weight))
        if is_singular(rs, mu):
            out.append(t)
    return tuple(out)
