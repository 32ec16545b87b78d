"""Graded slices of polynomial rings and ideals.

Everything here is degree-truncated linear algebra: a degree-k slice of an
ideal is the column span of a multiplication matrix in the monomial basis of
S_k.  Slice ranks and slice subspaces are memoised on (generators, degree,
field) since the higher-level invariants revisit the same slices constantly.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Sequence

from .fields import QQ
from .linalg import ExactMatrix, Subspace, rank
from .poly import Exps, HomogPoly

__all__ = [
    "DegreeTooLowError",
    "space_dim",
    "monomial_basis",
    "basis_index",
    "multiplication_matrix",
    "slice_dim",
    "ideal_slice",
    "HilbertFunction",
    "hilbert_function_of_quotient",
]


class DegreeTooLowError(ValueError):
    """A generator's degree exceeds the requested matrix degree."""


def space_dim(nvars: int, k: int) -> int:
    """Dimension of the degree-k piece of a polynomial ring in nvars variables."""
    if k < 0:
        return 0
    return comb(nvars - 1 + k, nvars - 1)


@lru_cache(maxsize=None)
def monomial_basis(nvars: int, degree: int) -> tuple[Exps, ...]:
    """All exponent tuples of the given total degree, lexicographically
    increasing.  Length is space_dim(nvars, degree)."""
    if degree < 0:
        return ()
    if nvars == 1:
        return ((degree,),)
    out: list[Exps] = []
    for e0 in range(degree + 1):
        for rest in monomial_basis(nvars - 1, degree - e0):
            out.append((e0,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def basis_index(nvars: int, degree: int) -> dict[Exps, int]:
    return {m: i for i, m in enumerate(monomial_basis(nvars, degree))}


def multiplication_matrix(gens: Sequence[HomogPoly], degree: int, field=QQ) -> ExactMatrix:
    """Matrix of (a_0, …, a_r) ↦ Σ a_i·g_i landing in S_degree.

    Rows are indexed by the degree-`degree` monomial basis; columns by pairs
    (generator i, monomial of degree `degree` − deg g_i), generator-major.
    A zero generator keeps its (all-zero) column block so that kernel
    coordinates always mean a full coefficient tuple.
    """
    gens = tuple(gens)
    if not gens:
        raise ValueError("need at least one generator")
    nvars = gens[0].nvars
    for g in gens:
        if g.nvars != nvars:
            raise ValueError("generators live in different rings")
        if g.degree > degree:
            raise DegreeTooLowError(
                f"generator of degree {g.degree} cannot land in degree {degree}"
            )
    index = basis_index(nvars, degree)
    nrows = len(index)
    ncols = sum(space_dim(nvars, degree - g.degree) for g in gens)
    zero = field.zero
    data = [[zero] * ncols for _ in range(nrows)]
    col = 0
    for g in gens:
        complements = monomial_basis(nvars, degree - g.degree)
        if g.is_zero:
            col += len(complements)
            continue
        converted = [(e, field.convert(c)) for e, c in g.terms.items()]
        for mu in complements:
            for e, cv in converted:
                target = tuple(a + b for a, b in zip(mu, e))
                data[index[target]][col] = cv
            col += 1
    return ExactMatrix(nrows, ncols, data)


@lru_cache(maxsize=None)
def _slice_rank(gens: tuple[HomogPoly, ...], degree: int, field) -> int:
    if not gens:
        return 0
    return rank(multiplication_matrix(gens, degree, field), field)


@lru_cache(maxsize=None)
def _slice_space(nvars: int, gens: tuple[HomogPoly, ...], degree: int, field) -> Subspace:
    ambient = space_dim(nvars, degree)
    if not gens:
        return Subspace.zero(ambient, field)
    m = multiplication_matrix(gens, degree, field)
    return Subspace.from_vectors(
        (m.column(j) for j in range(m.ncols)), ambient, field
    )


def _usable(gens: Sequence[HomogPoly], degree: int) -> tuple[HomogPoly, ...]:
    # generators of degree > `degree` (or identically zero) contribute nothing
    return tuple(g for g in gens if not g.is_zero and g.degree <= degree)


def slice_dim(gens: Sequence[HomogPoly], degree: int, field=QQ) -> int:
    """dim of the degree-`degree` piece of the ideal the generators span."""
    if degree < 0:
        return 0
    return _slice_rank(_usable(gens, degree), degree, field)


def ideal_slice(gens: Sequence[HomogPoly], degree: int, field=QQ) -> Subspace:
    """The degree slice itself, as a canonical subspace of S_degree in
    monomial coordinates."""
    gens = tuple(gens)
    if not gens:
        raise ValueError("need at least one generator")
    nvars = gens[0].nvars
    if degree < 0:
        return Subspace.zero(0, field)
    return _slice_space(nvars, _usable(gens, degree), degree, field)


@dataclass(frozen=True)
class HilbertFunction:
    """Degree-wise dimensions 0..k_max with the detected constant tail.

    stable_value/stable_from are present only when the final `window` values
    used at construction all agree; a graded module whose dimensions still
    move at the top of the range gets None for both.
    """

    dims: tuple[int, ...]
    stable_value: int | None
    stable_from: int | None

    @classmethod
    def from_dims(cls, dims: Sequence[int], window: int) -> "HilbertFunction":
        dims = tuple(dims)
        if not dims:
            raise ValueError("need at least one dimension")
        if window < 1:
            raise ValueError("window must be positive")
        tail = dims[-1]
        s = len(dims) - 1
        while s > 0 and dims[s - 1] == tail:
            s -= 1
        if len(dims) - s >= window:
            return cls(dims, tail, s)
        return cls(dims, None, None)

    @property
    def k_max(self) -> int:
        return len(self.dims) - 1

    def __getitem__(self, k: int) -> int:
        if k < 0:
            return 0
        return self.dims[k]


def hilbert_function_of_quotient(
    gens: Sequence[HomogPoly], k_max: int, field=QQ, window: int | None = None
) -> HilbertFunction:
    """Hilbert function of S/(gens) for degrees 0..k_max.  The stabilisation
    window defaults to nvars+1 consecutive equal values."""
    gens = tuple(gens)
    if not gens:
        raise ValueError("need at least one generator")
    if k_max < 0:
        raise ValueError("k_max must be nonnegative")
    nvars = gens[0].nvars
    if window is None:
        window = nvars + 1
    dims = [space_dim(nvars, k) - slice_dim(gens, k, field) for k in range(k_max + 1)]
    return HilbertFunction.from_dims(dims, window)
