"""Discrete measures: finitely many rational atoms at isolated points, plus
an optional atom at the limit point on the sequence backend."""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .errors import SpaceMismatchError
from .lattice import LIMIT, Element, Rational, Space, q


class Measure:
    """A discrete signed measure.  Atoms with zero weight are dropped."""

    __slots__ = ("space", "atoms", "limit_atom")

    def __init__(
        self,
        space: Space,
        atoms: Mapping[int, Rational] | None = None,
        limit_atom: Rational = 0,
    ) -> None:
        clean: dict[int, Fraction] = {}
        for point, weight in (atoms or {}).items():
            if not isinstance(point, int) or point < 1:
                raise ValueError(f"atom point {point!r} is not an isolated point label")
            if space.is_finite and point > space.n:
                raise ValueError(f"atom point {point} outside 1..{space.n}")
            w = q(weight)
            if w != 0:
                clean[point] = w
        la = q(limit_atom)
        if space.is_finite and la != 0:
            raise SpaceMismatchError("finite spaces have no limit point")
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "atoms", dict(sorted(clean.items())))
        object.__setattr__(self, "limit_atom", la)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Measure is immutable")

    # -- integration -----------------------------------------------------

    def integrate(self, x: Element, power: int = 1) -> Fraction:
        """integral of x^power: sum of w_t * x(t)^power plus the limit term."""
        if x.space != self.space:
            raise SpaceMismatchError("element on the wrong space")
        total = Fraction(0)
        for point, weight in self.atoms.items():
            total += weight * x.value_at(point) ** power
        if self.limit_atom != 0:
            total += self.limit_atom * x.value_at(LIMIT) ** power
        return total

    # -- norms and support --------------------------------------------------

    def variation_norm(self) -> Fraction:
        return sum((abs(w) for w in self.atoms.values()), abs(self.limit_atom))

    def support(self) -> frozenset[int]:
        """Isolated atom points (the limit atom is tracked separately)."""
        return frozenset(self.atoms)

    def is_zero(self) -> bool:
        return not self.atoms and self.limit_atom == 0

    def is_positive(self) -> bool:
        return all(w >= 0 for w in self.atoms.values()) and self.limit_atom >= 0

    # -- atomwise lattice and linear structure ----------------------------------

    def _merge(self, other: "Measure", op) -> "Measure":
        if self.space != other.space:
            raise SpaceMismatchError("measures on different spaces")
        zero = Fraction(0)
        points = set(self.atoms) | set(other.atoms)
        atoms = {t: op(self.atoms.get(t, zero), other.atoms.get(t, zero)) for t in points}
        return Measure(self.space, atoms, op(self.limit_atom, other.limit_atom))

    def join(self, other: "Measure") -> "Measure":
        return self._merge(other, max)

    def meet(self, other: "Measure") -> "Measure":
        return self._merge(other, min)

    def __add__(self, other: "Measure") -> "Measure":
        return self._merge(other, lambda a, b: a + b)

    def __sub__(self, other: "Measure") -> "Measure":
        return self._merge(other, lambda a, b: a - b)

    def __abs__(self) -> "Measure":
        return Measure(self.space, {t: abs(w) for t, w in self.atoms.items()}, abs(self.limit_atom))

    def scale(self, c: Rational) -> "Measure":
        c = q(c)
        return Measure(self.space, {t: w * c for t, w in self.atoms.items()}, self.limit_atom * c)

    def is_disjoint(self, other: "Measure") -> bool:
        """No point, isolated or limit, carries mass in both."""
        if set(self.atoms) & set(other.atoms):
            return False
        return self.limit_atom == 0 or other.limit_atom == 0

    def restrict(self, keep_points: frozenset[int], keep_limit: bool) -> "Measure":
        atoms = {t: w for t, w in self.atoms.items() if t in keep_points}
        return Measure(self.space, atoms, self.limit_atom if keep_limit else 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Measure):
            return NotImplemented
        return (
            self.space == other.space
            and self.atoms == other.atoms
            and self.limit_atom == other.limit_atom
        )

    def __hash__(self) -> int:
        return hash((self.space, tuple(self.atoms.items()), self.limit_atom))

    def __repr__(self) -> str:
        parts = ", ".join(f"{t}: {w}" for t, w in self.atoms.items())
        if self.limit_atom != 0:
            parts += f", limit: {self.limit_atom}"
        return f"Measure({self.space!r}, {{{parts}}})"


def is_normal_measure(mu: Measure) -> bool:
    """Whether the measure vanishes on every closed nowhere dense set.

    On a finite space every set is open, so every measure is normal.  On the
    sequence backend the only obstruction is mass at the limit point: {limit}
    is closed with empty interior, so normality is exactly limit_atom == 0.
    """
    if mu.space.is_finite:
        return True
    return mu.limit_atom == 0
