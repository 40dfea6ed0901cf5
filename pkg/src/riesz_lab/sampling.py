"""Seeded object-level generators for lattice instances.

Every generator takes a `random.Random`; derive independent streams with
`rng_for(seed, *branch)` so that a (seed, trial) pair fully determines the
instance no matter how many other trials run.  Values are small rationals,
numerators in [-9, 9] over denominators {1, 2, 3, 4}, keeping all downstream
arithmetic exact and fast.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .lattice import Element, Space
from .measures import Measure
from .polynomials import Polynomial
from .tensors import GeneralMatrixForm, SymTensor, nondecreasing_indices

DENOMINATORS = (1, 2, 3, 4)


def rng_for(seed: int | str, *branch: int | str) -> random.Random:
    """Independent deterministic stream for one trial; string seeding is
    stable across processes."""
    return random.Random(":".join(str(part) for part in (seed, *branch)))


def rational(rng: random.Random, nonzero: bool = False, positive: bool = False) -> Fraction:
    lo = 1 if positive else -9
    while True:
        value = Fraction(rng.randint(lo, 9), rng.choice(DENOMINATORS))
        if value != 0 or not (nonzero or positive):
            return value


def element(rng: random.Random, space: Space, positive: bool = False) -> Element:
    if space.is_finite:
        vals = [rational(rng) for _ in range(space.n)]
        if positive:
            vals = [abs(v) for v in vals]
        return Element(space, values=vals)
    prefix = [rational(rng) for _ in range(rng.randint(0, 5))]
    tail = rational(rng)
    if positive:
        prefix, tail = [abs(v) for v in prefix], abs(tail)
    return Element.omega(prefix, tail)


def nonzero_positive_element(rng: random.Random, space: Space) -> Element:
    while True:
        x = element(rng, space, positive=True)
        if not x.is_zero():
            return x


def measure(
    rng: random.Random,
    space: Space,
    max_atoms: int = 4,
    allow_limit: bool = True,
    normal: bool = False,
) -> Measure:
    """Random discrete measure; ``normal`` forces a zero limit atom."""
    if space.is_finite:
        count = rng.randint(0, min(max_atoms, space.n))
        points = rng.sample(list(space.points()), count)
        return Measure(space, {t: rational(rng, nonzero=True) for t in points})
    count = rng.randint(0, max_atoms)
    points = rng.sample(range(1, 7), count)
    atoms = {t: rational(rng, nonzero=True) for t in points}
    limit = Fraction(0)
    if allow_limit and not normal and rng.random() < Fraction(1, 2):
        limit = rational(rng, nonzero=True)
    return Measure(space, atoms, limit_atom=limit)


def sym_tensor(
    rng: random.Random,
    space: Space,
    degree: int,
    diagonal: bool = False,
    ensure_off_diagonal: bool = False,
    max_entries: int | None = None,
) -> SymTensor:
    """Sparse random symmetric tensor.

    ``diagonal`` keeps every entry on the diagonal; ``ensure_off_diagonal``
    plants at least one genuinely mixed entry.
    """
    n = space.n
    cap = max_entries if max_entries is not None else 2 * n
    entries: dict[tuple[int, ...], Fraction] = {}
    diag_candidates = [(t,) * degree for t in space.points()]
    all_candidates = list(nondecreasing_indices(n, degree))
    mixed = [idx for idx in all_candidates if len(set(idx)) > 1]
    pool = diag_candidates if diagonal else all_candidates
    for idx in rng.sample(pool, min(cap, len(pool))):
        if rng.random() < 0.7:
            entries[idx] = rational(rng, nonzero=True)
    if ensure_off_diagonal and mixed and not any(len(set(i)) > 1 for i in entries):
        entries[rng.choice(mixed)] = rational(rng, nonzero=True)
    if not entries:
        entries[rng.choice(pool)] = rational(rng, nonzero=True)
    return SymTensor(space, degree, entries)


def matrix_form(rng: random.Random, space: Space, symmetric: bool = False) -> GeneralMatrixForm:
    n = space.n
    rows = [[rational(rng) for _ in range(n)] for _ in range(n)]
    if symmetric:
        for i in range(n):
            for j in range(i):
                rows[i][j] = rows[j][i]
    return GeneralMatrixForm(space, rows)


def measure_polynomial(rng: random.Random, space: Space, degree: int, normal: bool = False) -> Polynomial:
    return Polynomial.from_measure(degree, measure(rng, space, normal=normal))


def tensor_polynomial(
    rng: random.Random, space: Space, degree: int, diagonal: bool = False, ensure_off_diagonal: bool = False
) -> Polynomial:
    return Polynomial.from_tensor(sym_tensor(rng, space, degree, diagonal, ensure_off_diagonal))
