"""Seeded deterministic samplers used by tests, demos and the CLI.

All randomness flows through an explicit random.Random instance, so the
same seed reproduces the same objects everywhere.
"""
from __future__ import annotations

import random
from typing import Optional

from .fields import Field, Scalar
from .matrices import Matrix, det
from .modules import (
    CommutingTuple,
    GroupElement,
    Staircase,
    companion,
    conjugate,
    direct_sum,
    empty_tuple,
    from_staircase,
    group_element,
    staircase,
    translate,
    validate,
)
from .polynomials import MultiPoly, UniPoly


def random_scalar(field: Field, rng: random.Random, span: int = 3) -> Scalar:
    if field.characteristic:
        return rng.randrange(field.characteristic)
    return field.of(rng.randint(-span, span))


def random_matrix(field: Field, n: int, rng: random.Random, span: int = 3) -> Matrix:
    return Matrix(field, n, n, tuple(random_scalar(field, rng, span) for _ in range(n * n)))


def random_invertible(field: Field, n: int, rng: random.Random, span: int = 3) -> Matrix:
    if n == 0:
        return Matrix.zero(field, 0, 0)
    while True:
        m = random_matrix(field, n, rng, span)
        if det(m) != field.zero():
            return m


def random_group_element(field: Field, n: int, rng: random.Random) -> GroupElement:
    return group_element(random_invertible(field, n, rng))


def random_staircase(rng: random.Random, n_cells: int) -> Staircase:
    """A uniform-ish random Young diagram with the given number of cells."""
    rows: list[int] = []
    remaining = n_cells
    cap = max(n_cells, 1)
    while remaining > 0:
        r = rng.randint(1, min(cap, remaining))
        rows.append(r)
        cap = r
        remaining -= r
    cells = [(i, j) for j, width in enumerate(rows) for i in range(width)]
    return staircase(cells)


def random_punctual_tuple(
    field: Field, d: int, size: int, rng: random.Random
) -> CommutingTuple:
    """A punctual (nilpotent) tuple of the given size: staircase pair for
    the first two coordinates, polynomial combinations of them after that."""
    if size == 0:
        return empty_tuple(field, d)
    if d == 1:
        # any strictly upper triangular matrix is punctual
        rows = [
            [random_scalar(field, rng) if j > i else field.zero() for j in range(size)]
            for i in range(size)
        ]
        return validate([Matrix.from_rows(field, rows)])
    pair = from_staircase(random_staircase(rng, size), field)
    mx, my = pair.mats
    mats = [mx, my]
    for _ in range(d - 2):
        extra = Matrix.zero(field, size, size)
        for basis_el in (mx, my, mx * my, mx * mx):
            c = random_scalar(field, rng, span=2)
            if c != field.zero():
                extra = extra + basis_el.scale(c)
        mats.append(extra)
    return validate(mats)


def random_split_tuple(
    field: Field,
    d: int,
    rng: random.Random,
    max_pieces: int = 3,
    max_piece_size: int = 3,
    coord_span: int = 2,
    conjugated: bool = True,
) -> tuple[CommutingTuple, list[tuple[tuple[Scalar, ...], int]]]:
    """A tuple with known split support: punctual pieces translated to
    pairwise distinct rational points, summed, optionally conjugated.

    Returns (tuple, ground truth) where the ground truth lists
    (point, size) by construction, independent of any cycle computation.
    """
    pieces = rng.randint(1, max_pieces)
    points: list[tuple[Scalar, ...]] = []
    while len(points) < pieces:
        p = tuple(random_scalar(field, rng, coord_span) for _ in range(d))
        if p not in points:
            points.append(p)
    total = empty_tuple(field, d)
    truth: dict[tuple[Scalar, ...], int] = {}
    for p in points:
        size = rng.randint(1, max_piece_size)
        block = translate(random_punctual_tuple(field, d, size, rng), list(p))
        total = direct_sum(total, block)
        truth[p] = truth.get(p, 0) + size
    if conjugated and total.n > 0:
        total = conjugate(total, random_group_element(field, total.n, rng))
    return total, sorted(truth.items())


def random_multipoly(
    field: Field, d: int, rng: random.Random, max_terms: int = 3, max_degree: int = 2
) -> MultiPoly:
    """A sparse random polynomial, nonzero constant term allowed."""
    terms: dict[tuple[int, ...], Scalar] = {}
    for _ in range(rng.randint(1, max_terms)):
        exps = [0] * d
        for _ in range(rng.randint(0, max_degree)):
            exps[rng.randrange(d)] += 1
        c = random_scalar(field, rng, span=2)
        if c != field.zero():
            key = tuple(exps)
            terms[key] = field.add(terms.get(key, field.zero()), c)
    if not terms:
        terms[(0,) * d] = field.one()
    return MultiPoly.make(field, d, terms)


def random_monic(field: Field, degree: int, rng: random.Random, span: int = 3) -> UniPoly:
    coeffs = [random_scalar(field, rng, span) for _ in range(degree)]
    coeffs.append(field.one())
    return UniPoly.make(field, coeffs)


def sample_companion_of_roots(field: Field, roots: list[Scalar]) -> CommutingTuple:
    """companion((t - r_1)...(t - r_k)) for explicit roots."""
    f = UniPoly.one(field)
    for r in roots:
        f = f * UniPoly.make(field, [field.neg(field.of(r)), field.one()])
    return companion(f)
