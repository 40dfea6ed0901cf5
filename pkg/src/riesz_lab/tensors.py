"""Symmetric multilinear forms on finite spaces, stored sparsely.

A symmetric m-linear form is determined by its values on nondecreasing
multi-indices: the stored coefficient at alpha is the value of the full
symmetric array at any arrangement of alpha.  Evaluation therefore sums,
for each stored entry, over the distinct permutations of its index.

Order-2 forms with no symmetry assumption get their own dense matrix type.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement, permutations, product
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import DegreeMismatchError, PositivityError, SpaceMismatchError
from .lattice import Element, Rational, Space, q


def nondecreasing_indices(n: int, m: int) -> Iterator[tuple[int, ...]]:
    """All nondecreasing multi-indices of length m over points 1..n."""
    return combinations_with_replacement(range(1, n + 1), m)


def _distinct_permutations(idx: tuple[int, ...]) -> set[tuple[int, ...]]:
    return set(permutations(idx))


class SymTensor:
    """A symmetric m-linear form on a finite space."""

    __slots__ = ("space", "degree", "entries")

    def __init__(
        self,
        space: Space,
        degree: int,
        entries: Mapping[tuple[int, ...], Rational],
    ) -> None:
        if not space.is_finite:
            raise SpaceMismatchError("tensors live on finite spaces")
        if not isinstance(degree, int) or degree < 1:
            raise DegreeMismatchError("tensor degree must be a positive integer")
        clean: dict[tuple[int, ...], Fraction] = {}
        for idx, value in entries.items():
            key = tuple(sorted(idx))
            if len(key) != degree:
                raise DegreeMismatchError(f"index {idx} has length {len(idx)}, expected {degree}")
            if any(not 1 <= t <= space.n for t in key):
                raise ValueError(f"index {idx} outside 1..{space.n}")
            if key in clean:
                raise ValueError(f"duplicate index {key}")
            val = q(value)
            if val != 0:
                clean[key] = val
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "entries", dict(sorted(clean.items())))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("SymTensor is immutable")

    @staticmethod
    def diagonal(space: Space, degree: int, weights: Mapping[int, Rational]) -> "SymTensor":
        return SymTensor(space, degree, {(t,) * degree: w for t, w in weights.items()})

    # -- evaluation ---------------------------------------------------------

    def evaluate(self, args: Sequence[Element]) -> Fraction:
        """A(x_1, .., x_m), summing each entry over the distinct
        permutations of its index."""
        if len(args) != self.degree:
            raise DegreeMismatchError(f"expected {self.degree} arguments, got {len(args)}")
        for x in args:
            if x.space != self.space:
                raise SpaceMismatchError("argument on the wrong space")
        vecs = [x.values for x in args]
        total = Fraction(0)
        for idx, coeff in self.entries.items():
            acc = Fraction(0)
            for perm in _distinct_permutations(idx):
                term = Fraction(1)
                for slot, point in enumerate(perm):
                    term *= vecs[slot][point - 1]
                acc += term
            total += coeff * acc
        return total

    def evaluate_diagonal(self, x: Element) -> Fraction:
        return self.evaluate([x] * self.degree)

    # -- structure ------------------------------------------------------------

    def is_diagonal(self) -> bool:
        return all(len(set(idx)) == 1 for idx in self.entries)

    def diagonal_weights(self) -> dict[int, Fraction]:
        if not self.is_diagonal():
            raise ValueError("tensor has off-diagonal entries")
        return {idx[0]: v for idx, v in self.entries.items()}

    def off_diagonal_entries(self) -> dict[tuple[int, ...], Fraction]:
        return {idx: v for idx, v in self.entries.items() if len(set(idx)) > 1}

    def is_positive(self) -> bool:
        return all(v >= 0 for v in self.entries.values())

    def support_points(self) -> frozenset[int]:
        return frozenset(t for idx in self.entries for t in idx)

    # -- lattice operations (entrywise on the symmetric array) ------------------

    def modulus(self) -> "SymTensor":
        return SymTensor(self.space, self.degree, {i: abs(v) for i, v in self.entries.items()})

    def _merge(self, other: "SymTensor", op) -> "SymTensor":
        if self.space != other.space or self.degree != other.degree:
            raise SpaceMismatchError("tensors not compatible")
        keys = set(self.entries) | set(other.entries)
        zero = Fraction(0)
        out = {k: op(self.entries.get(k, zero), other.entries.get(k, zero)) for k in keys}
        return SymTensor(self.space, self.degree, out)

    def join(self, other: "SymTensor") -> "SymTensor":
        return self._merge(other, max)

    def meet(self, other: "SymTensor") -> "SymTensor":
        return self._merge(other, min)

    def __add__(self, other: "SymTensor") -> "SymTensor":
        return self._merge(other, lambda a, b: a + b)

    def __sub__(self, other: "SymTensor") -> "SymTensor":
        return self._merge(other, lambda a, b: a - b)

    def scale(self, c: Rational) -> "SymTensor":
        c = q(c)
        return SymTensor(self.space, self.degree, {i: v * c for i, v in self.entries.items()})

    def restrict_points(self, points: frozenset[int]) -> "SymTensor":
        """Drop entries touching any point outside the given set."""
        kept = {i: v for i, v in self.entries.items() if set(i) <= points}
        return SymTensor(self.space, self.degree, kept)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymTensor):
            return NotImplemented
        return (
            self.space == other.space
            and self.degree == other.degree
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash((self.space, self.degree, tuple(self.entries.items())))

    def __repr__(self) -> str:
        return f"SymTensor(m={self.degree}, {self.space!r}, {len(self.entries)} entries)"


def tensors_disjoint(a: SymTensor, b: SymTensor) -> bool:
    """|A| and |B| have zero meet, i.e. no multi-index carries mass in both."""
    return all(k not in b.entries for k in a.entries)


class GeneralMatrixForm:
    """A bilinear form on a finite space with no symmetry assumption."""

    __slots__ = ("space", "rows")

    degree = 2

    def __init__(self, space: Space, rows: Sequence[Sequence[Rational]]) -> None:
        if not space.is_finite:
            raise SpaceMismatchError("matrix forms live on finite spaces")
        mat = tuple(tuple(q(v) for v in row) for row in rows)
        if len(mat) != space.n or any(len(row) != space.n for row in mat):
            raise ValueError(f"need an {space.n} x {space.n} matrix")
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "rows", mat)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("GeneralMatrixForm is immutable")

    def evaluate(self, args: Sequence[Element]) -> Fraction:
        if len(args) != 2:
            raise DegreeMismatchError("matrix forms are bilinear")
        x, y = args
        if x.space != self.space or y.space != self.space:
            raise SpaceMismatchError("argument on the wrong space")
        total = Fraction(0)
        for i, row in enumerate(self.rows):
            if x.values[i] == 0:
                continue
            total += x.values[i] * sum(c * y.values[j] for j, c in enumerate(row))
        return total

    def modulus(self) -> "GeneralMatrixForm":
        return GeneralMatrixForm(self.space, [[abs(v) for v in row] for row in self.rows])

    def is_symmetric(self) -> bool:
        n = self.space.n
        return all(self.rows[i][j] == self.rows[j][i] for i in range(n) for j in range(i + 1, n))

    def off_diagonal_is_zero(self) -> bool:
        n = self.space.n
        return all(self.rows[i][j] == 0 for i in range(n) for j in range(n) if i != j)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GeneralMatrixForm):
            return NotImplemented
        return self.space == other.space and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.space, self.rows))

    def __repr__(self) -> str:
        return f"GeneralMatrixForm({self.space!r})"


Form = SymTensor | GeneralMatrixForm


def eval_form(form: Form, args: Sequence[Element]) -> Fraction:
    return form.evaluate(args)


def atomic_partition(x: Element) -> list[Element]:
    """x(t) * e_t over the support of a nonnegative finite-space element."""
    if not x.space.is_finite:
        raise SpaceMismatchError("atomic partitions need a finite space")
    if not x.is_nonnegative():
        raise PositivityError("partitions are taken of nonnegative elements")
    return [Element.basis(x.space, t) * v for t, v in zip(x.space.points(), x.values) if v != 0]


def modulus_partition_oracle(
    form: Form,
    args: Sequence[Element],
    partitions: Sequence[Sequence[Element]],
) -> Fraction:
    """sum over all choices (u^1_{i_1}, .., u^m_{i_m}) of |A(...)|, where the
    k-th partition is a finite decomposition of args[k] into nonnegative
    parts.  This is the partition functional whose supremum over all
    partitions is the modulus evaluated at the (nonnegative) arguments.
    """
    m = form.degree
    if len(args) != m or len(partitions) != m:
        raise DegreeMismatchError("need one argument and one partition per slot")
    for x, parts in zip(args, partitions):
        if not x.is_nonnegative():
            raise PositivityError("arguments must be nonnegative")
        if not parts:
            raise ValueError("empty partition")
        total = Element.zero(x.space)
        for part in parts:
            if not part.is_nonnegative():
                raise PositivityError("partition parts must be nonnegative")
            total = total + part
        if total != x:
            raise ValueError("partition does not sum to its argument")
    result = Fraction(0)
    for combo in product(*partitions):
        result += abs(form.evaluate(list(combo)))
    return result
