"""Exact vector-lattice kernel on two concrete backends.

Elements live either on a finite point set {1, .., n} or on the one-point
compactification of the positive integers, realised as eventually constant
rational sequences: a finite prefix of values followed by a tail value,
which is also the value at the limit point.  Continuity is built into the
representation, and every operation is exact over `fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterable, Sequence

from .errors import (
    DegreeMismatchError,
    InvalidGeneratorError,
    PositivityError,
    SpaceMismatchError,
)

Rational = Fraction | int | str


def q(value: Rational) -> Fraction:
    """Coerce to an exact rational."""
    return value if isinstance(value, Fraction) else Fraction(value)


class _LimitPoint:
    """Sentinel for the limit point of the sequence backend."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "LIMIT"


LIMIT = _LimitPoint()

FINITE = "finite"
OMEGA = "omega1"


@dataclass(frozen=True)
class Space:
    """A point set: ``finite`` with n points labelled 1..n, or ``omega1``."""

    kind: str
    n: int = 0

    def __post_init__(self) -> None:
        if self.kind == FINITE:
            if not isinstance(self.n, int) or self.n < 1:
                raise ValueError("finite space needs n >= 1")
        elif self.kind == OMEGA:
            if self.n:
                raise ValueError("omega1 space takes no point count")
        else:
            raise ValueError(f"unknown space kind {self.kind!r}")

    @staticmethod
    def finite(n: int) -> "Space":
        return Space(FINITE, n)

    @staticmethod
    def omega_plus_one() -> "Space":
        return Space(OMEGA)

    @property
    def is_finite(self) -> bool:
        return self.kind == FINITE

    def points(self) -> range:
        """Isolated points of a finite space."""
        if not self.is_finite:
            raise ValueError("points() is only available on finite spaces")
        return range(1, self.n + 1)

    def __repr__(self) -> str:
        return f"finite({self.n})" if self.is_finite else "omega1"


def _check_same_space(a: "Element", b: "Element") -> None:
    if a.space != b.space:
        raise SpaceMismatchError(f"{a.space!r} vs {b.space!r}")


class Element:
    """A point of the lattice: a value vector, or an eventually constant
    sequence stored as (prefix, tail).

    The omega1 form is normalised by stripping trailing prefix entries equal
    to the tail, so equality and hashing are structural.
    """

    __slots__ = ("space", "values", "prefix", "tail")

    def __init__(
        self,
        space: Space,
        values: Sequence[Rational] | None = None,
        prefix: Sequence[Rational] | None = None,
        tail: Rational | None = None,
    ) -> None:
        object.__setattr__(self, "space", space)
        if space.is_finite:
            if values is None or prefix is not None or tail is not None:
                raise ValueError("finite element takes values only")
            vals = tuple(q(v) for v in values)
            if len(vals) != space.n:
                raise ValueError(f"expected {space.n} values, got {len(vals)}")
            object.__setattr__(self, "values", vals)
            object.__setattr__(self, "prefix", None)
            object.__setattr__(self, "tail", None)
        else:
            if values is not None or tail is None:
                raise ValueError("omega1 element takes prefix and tail")
            t = q(tail)
            pre = [q(v) for v in (prefix or ())]
            while pre and pre[-1] == t:
                pre.pop()
            object.__setattr__(self, "values", None)
            object.__setattr__(self, "prefix", tuple(pre))
            object.__setattr__(self, "tail", t)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Element is immutable")

    # -- constructors -----------------------------------------------------

    @staticmethod
    def finite(values: Sequence[Rational]) -> "Element":
        return Element(Space.finite(len(values)), values=values)

    @staticmethod
    def omega(prefix: Sequence[Rational], tail: Rational) -> "Element":
        return Element(Space.omega_plus_one(), prefix=prefix, tail=tail)

    @staticmethod
    def zero(space: Space) -> "Element":
        return Element.constant(space, 0)

    @staticmethod
    def constant(space: Space, value: Rational) -> "Element":
        if space.is_finite:
            return Element(space, values=[q(value)] * space.n)
        return Element(space, prefix=(), tail=q(value))

    @staticmethod
    def basis(space: Space, point: int) -> "Element":
        """Indicator of a single isolated point."""
        if space.is_finite:
            if not 1 <= point <= space.n:
                raise ValueError(f"point {point} outside 1..{space.n}")
            return Element(space, values=[1 if t == point else 0 for t in space.points()])
        if point < 1:
            raise ValueError("isolated points are labelled 1, 2, ...")
        return Element(space, prefix=[0] * (point - 1) + [1], tail=0)

    @staticmethod
    def tail_indicator(space: Space, start: int, scale: Rational = 1) -> "Element":
        """scale * indicator({limit} | {isolated >= start}); omega1 only."""
        if space.is_finite:
            raise SpaceMismatchError("tail indicators live on omega1")
        if start < 1:
            raise ValueError("start index must be >= 1")
        return Element(space, prefix=[0] * (start - 1), tail=q(scale))

    # -- accessors ---------------------------------------------------------

    def value_at(self, point: int | _LimitPoint) -> Fraction:
        if self.space.is_finite:
            if not isinstance(point, int) or not 1 <= point <= self.space.n:
                raise ValueError(f"no point {point!r} in {self.space!r}")
            return self.values[point - 1]
        if point is LIMIT:
            return self.tail
        if not isinstance(point, int) or point < 1:
            raise ValueError(f"no point {point!r} in {self.space!r}")
        return self.prefix[point - 1] if point <= len(self.prefix) else self.tail

    def _iso(self, i: int) -> Fraction:
        # unchecked isolated-point accessor used by the zip kernels
        if self.space.is_finite:
            return self.values[i - 1]
        return self.prefix[i - 1] if i <= len(self.prefix) else self.tail

    # -- pointwise kernels ---------------------------------------------------

    def _map(self, op: Callable[[Fraction], Fraction]) -> "Element":
        if self.space.is_finite:
            return Element(self.space, values=[op(v) for v in self.values])
        return Element(self.space, prefix=[op(v) for v in self.prefix], tail=op(self.tail))

    def _zip(self, other: "Element", op: Callable[[Fraction, Fraction], Fraction]) -> "Element":
        _check_same_space(self, other)
        if self.space.is_finite:
            return Element(self.space, values=[op(a, b) for a, b in zip(self.values, other.values)])
        width = max(len(self.prefix), len(other.prefix))
        vals = [op(self._iso(i), other._iso(i)) for i in range(1, width + 1)]
        return Element(self.space, prefix=vals, tail=op(self.tail, other.tail))

    # -- linear and multiplicative structure ---------------------------------

    def __add__(self, other: "Element") -> "Element":
        return self._zip(other, lambda a, b: a + b)

    def __sub__(self, other: "Element") -> "Element":
        return self._zip(other, lambda a, b: a - b)

    def __neg__(self) -> "Element":
        return self._map(lambda a: -a)

    def __mul__(self, other: "Element | Rational") -> "Element":
        if isinstance(other, Element):
            return self._zip(other, lambda a, b: a * b)
        c = q(other)
        return self._map(lambda a: a * c)

    def __rmul__(self, other: Rational) -> "Element":
        return self.__mul__(other)

    def __pow__(self, m: int) -> "Element":
        if not isinstance(m, int) or m < 0:
            raise ValueError("pointwise powers take a nonnegative integer")
        return self._map(lambda a: a**m)

    # -- lattice structure ----------------------------------------------------

    def join(self, other: "Element") -> "Element":
        return self._zip(other, max)

    def meet(self, other: "Element") -> "Element":
        return self._zip(other, min)

    def __abs__(self) -> "Element":
        return self._map(abs)

    def pos_part(self) -> "Element":
        return self._map(lambda a: a if a > 0 else Fraction(0))

    def neg_part(self) -> "Element":
        return self._map(lambda a: -a if a < 0 else Fraction(0))

    def le(self, other: "Element") -> bool:
        """Pointwise order: self <= other everywhere."""
        _check_same_space(self, other)
        if self.space.is_finite:
            return all(a <= b for a, b in zip(self.values, other.values))
        width = max(len(self.prefix), len(other.prefix))
        if any(self._iso(i) > other._iso(i) for i in range(1, width + 1)):
            return False
        return self.tail <= other.tail

    def is_nonnegative(self) -> bool:
        if self.space.is_finite:
            return all(v >= 0 for v in self.values)
        return all(v >= 0 for v in self.prefix) and self.tail >= 0

    def is_zero(self) -> bool:
        if self.space.is_finite:
            return all(v == 0 for v in self.values)
        return not self.prefix and self.tail == 0

    def sup_norm(self) -> Fraction:
        if self.space.is_finite:
            return max(abs(v) for v in self.values)
        return max([abs(v) for v in self.prefix] + [abs(self.tail)])

    # -- identity ---------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        if self.space != other.space:
            return False
        if self.space.is_finite:
            return self.values == other.values
        return self.prefix == other.prefix and self.tail == other.tail

    def __hash__(self) -> int:
        if self.space.is_finite:
            return hash((self.space, self.values))
        return hash((self.space, self.prefix, self.tail))

    def __repr__(self) -> str:
        if self.space.is_finite:
            return f"Element([{', '.join(str(v) for v in self.values)}])"
        pre = ", ".join(str(v) for v in self.prefix)
        return f"Element(prefix=[{pre}], tail={self.tail})"


def is_disjoint(x: Element, y: Element) -> bool:
    """|x| and |y| have zero meet."""
    return abs(x).meet(abs(y)).is_zero()


def decreasing_rearrangement(xs: Sequence[Element], k: int) -> Element:
    """The k-th decreasing rearrangement of the tuple: the join, over all
    k-element subsets, of the subset meets.  Pointwise this is the k-th
    largest of the tuple's values at that point.
    """
    m = len(xs)
    if m == 0:
        raise DegreeMismatchError("rearrangement of an empty tuple")
    if not 1 <= k <= m:
        raise DegreeMismatchError(f"k={k} outside 1..{m}")
    for x in xs[1:]:
        _check_same_space(xs[0], x)
    best: Element | None = None
    for subset in combinations(xs, k):
        cur = subset[0]
        for x in subset[1:]:
            cur = cur.meet(x)
        best = cur if best is None else best.join(cur)
    return best


def decreasing_rearrangements(xs: Sequence[Element]) -> list[Element]:
    """All rearrangements (J_1, .., J_m) of the tuple, largest first."""
    return [decreasing_rearrangement(xs, k) for k in range(1, len(xs) + 1)]


# -- radicals -------------------------------------------------------------------


def _int_root(value: int, degree: int) -> int | None:
    """Exact nonnegative integer degree-th root, or None."""
    if value < 0:
        return None
    if degree == 1 or value in (0, 1):
        return value
    guess = round(value ** (1.0 / degree))
    for cand in (guess - 1, guess, guess + 1, guess + 2):
        if cand >= 0 and cand**degree == value:
            return cand
    return None


def exact_fraction_root(value: Fraction, degree: int) -> Fraction | None:
    """Exact rational degree-th root of a nonnegative rational, or None."""
    num = _int_root(value.numerator, degree)
    den = _int_root(value.denominator, degree)
    if num is None or den is None:
        return None
    return Fraction(num, den)


@dataclass(frozen=True)
class RadicalElement:
    """base**(1/degree) for a nonnegative base, held symbolically.

    The element is rarely rational; it is consumed by evaluation rules that
    clear the radical (a degree-m polynomial evaluates it through its base),
    or simplified by `exact_root` when the base is a pointwise perfect power.
    """

    degree: int
    base: Element

    def __post_init__(self) -> None:
        if not isinstance(self.degree, int) or self.degree < 1:
            raise DegreeMismatchError("radical degree must be a positive integer")
        if not self.base.is_nonnegative():
            raise PositivityError("radical base must be nonnegative")

    @property
    def space(self) -> Space:
        return self.base.space

    def join(self, other: "RadicalElement") -> "RadicalElement":
        self._check_compatible(other)
        return RadicalElement(self.degree, self.base.join(other.base))

    def meet(self, other: "RadicalElement") -> "RadicalElement":
        self._check_compatible(other)
        return RadicalElement(self.degree, self.base.meet(other.base))

    def _check_compatible(self, other: "RadicalElement") -> None:
        if self.degree != other.degree:
            raise DegreeMismatchError("radicals of different degree do not mix")
        _check_same_space(self.base, other.base)

    def exact_root(self) -> Element | None:
        """The radical as a plain element when it is exactly rational."""
        if self.degree == 1:
            return self.base
        roots = []
        base = self.base
        if base.space.is_finite:
            for v in base.values:
                r = exact_fraction_root(v, self.degree)
                if r is None:
                    return None
                roots.append(r)
            return Element(base.space, values=roots)
        for v in base.prefix:
            r = exact_fraction_root(v, self.degree)
            if r is None:
                return None
            roots.append(r)
        tail = exact_fraction_root(base.tail, self.degree)
        if tail is None:
            return None
        return Element(base.space, prefix=roots, tail=tail)


def krivine_radical(kind: str, degree: int, args: Sequence[Element]) -> RadicalElement:
    """Krivine functional-calculus combinations of nonnegative elements:
    ``power-sum`` builds (sum x_i^m)^(1/m), ``product`` builds
    (x_1 * .. * x_m)^(1/m) and requires exactly m arguments.
    """
    if not args:
        raise DegreeMismatchError("krivine radical needs at least one argument")
    for x in args:
        if not x.is_nonnegative():
            raise PositivityError("krivine radical arguments must be nonnegative")
        _check_same_space(args[0], x)
    if kind == "power-sum":
        acc = args[0] ** degree
        for x in args[1:]:
            acc = acc + x**degree
        return RadicalElement(degree, acc)
    if kind == "product":
        if len(args) != degree:
            raise DegreeMismatchError(
                f"product radical of degree {degree} needs exactly {degree} arguments"
            )
        acc = args[0]
        for x in args[1:]:
            acc = acc * x
        return RadicalElement(degree, acc)
    raise ValueError(f"unknown radical kind {kind!r}")


# -- principal ideals -------------------------------------------------------------


@dataclass(frozen=True)
class PrincipalIdeal:
    """The ideal generated by a nonnegative, nonzero element: all x with
    |x| <= lambda * generator for some rational lambda >= 0."""

    generator: Element

    def __post_init__(self) -> None:
        if not self.generator.is_nonnegative() or self.generator.is_zero():
            raise InvalidGeneratorError("generator must be nonnegative and nonzero")

    @property
    def space(self) -> Space:
        return self.generator.space

    def membership_witness(self, x: Element) -> Fraction | None:
        """The least lambda with |x| <= lambda * generator, or None."""
        _check_same_space(x, self.generator)
        a = self.generator
        pairs: list[tuple[Fraction, Fraction]] = []
        if self.space.is_finite:
            pairs = list(zip((abs(v) for v in x.values), a.values))
        else:
            width = max(len(x.prefix), len(a.prefix))
            pairs = [(abs(x._iso(i)), a._iso(i)) for i in range(1, width + 1)]
            pairs.append((abs(x.tail), a.tail))
        bound = Fraction(0)
        for mag, cap in pairs:
            if cap == 0:
                if mag != 0:
                    return None
                continue
            ratio = mag / cap
            if ratio > bound:
                bound = ratio
        return bound

    def __contains__(self, x: Element) -> bool:
        return self.membership_witness(x) is not None

    def covers_point(self, point: int | _LimitPoint) -> bool:
        return self.generator.value_at(point) > 0

    def support_points(self) -> frozenset[int]:
        """Isolated support of the generator (finite spaces only)."""
        if not self.space.is_finite:
            raise SpaceMismatchError("extensional support only on finite spaces")
        return frozenset(t for t in self.space.points() if self.generator.values[t - 1] != 0)
