"""The spin representations as vectors over spin columns.

The basis actions are multiplicity-free with structure constant 1: each f_i
either moves a basis spin column to another (the same substitution the
crystal operator performs) or kills it.  Only the f-actions and the t-weight
exponents are needed by the canonical-basis algorithms.
"""

from __future__ import annotations

from dataclasses import dataclass

from .crystal import SpinColumn, spin_apply
from .laurent import LaurentPoly
from .rootdata import AlgebraKind, cartan_exponent


@dataclass(frozen=True)
class SpinVector:
    """A finitely supported map from spin columns to Laurent coefficients."""

    kind: AlgebraKind
    terms: tuple[tuple[SpinColumn, LaurentPoly], ...]

    @staticmethod
    def make(kind: AlgebraKind, data: dict[SpinColumn, LaurentPoly]) -> "SpinVector":
        items = [(s, v) for s, v in data.items() if not v.is_zero()]
        items.sort(key=lambda sv: sv[0].letters())
        classes = {s.sign_class() for s, _ in items}
        if len(classes) > 1:
            raise ValueError("mixed spin classes in one vector")
        return SpinVector(kind, tuple(items))

    @staticmethod
    def unit(s: SpinColumn) -> "SpinVector":
        return SpinVector(s.kind, ((s, LaurentPoly.one()),))

    def is_zero(self) -> bool:
        return not self.terms


def spin_module_f(v: SpinVector, i: int) -> SpinVector:
    out: dict[SpinColumn, LaurentPoly] = {}
    for s, c in v.terms:
        t = spin_apply(s, i, "f")
        if t is not None:
            out[t] = out.get(t, LaurentPoly.zero()) + c
    return SpinVector.make(v.kind, out)


def spin_t_exponent(s: SpinColumn, i: int) -> int:
    """Exponent a with t_i v = q_i^a v on a spin basis vector."""
    return cartan_exponent(s.weight2(), i, s.kind)
