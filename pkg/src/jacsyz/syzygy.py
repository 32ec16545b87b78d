"""Relations among the partial derivatives: all of them, the Koszul ones,
and the essential quotient.

A degree-m relation is a tuple (a_0, …, a_n) of degree-m forms with
Σ a_i·f_i = 0; Koszul relations are the span of b·(f_j e_i − f_i e_j).  The
essential dimension er = ar − kr admits an independent second route through
Milnor dimensions (koszul_cohomology_dim), and the agreement of the two is
one of the package's central self-checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .fields import QQ
from .graded import basis_index, monomial_basis, multiplication_matrix, slice_dim, space_dim
from .linalg import ExactMatrix, Subspace, kernel, rank
from .milnor import jacobian_generators, milnor_dim, smooth_series_coeff, top_degree
from .poly import HomogPoly

__all__ = [
    "ar_dim",
    "relation_kernel",
    "kr_dim",
    "koszul_relation_vectors",
    "er_dim",
    "koszul_cohomology_dim",
    "minimal_relation_degree",
    "SyzygyProfile",
    "syzygy_profile",
]


def ar_dim(f: HomogPoly, m: int, field=QQ) -> int:
    """Dimension of the space of degree-m relations among the partials."""
    if m < 0:
        return 0
    gens = jacobian_generators(f)
    return f.nvars * space_dim(f.nvars, m) - slice_dim(gens, m + f.degree - 1, field)


def relation_kernel(f: HomogPoly, m: int, field=QQ) -> Subspace:
    """The relation space itself, in block coordinates: coefficient vector of
    a_0 in the degree-m monomial basis, then a_1, and so on."""
    if m < 0:
        raise ValueError("relation degree must be nonnegative")
    gens = jacobian_generators(f)
    return kernel(multiplication_matrix(gens, m + f.degree - 1, field), field)


def koszul_relation_vectors(f: HomogPoly, m: int, field=QQ) -> list[list]:
    """Spanning set of the degree-m Koszul relations b·(f_j e_i − f_i e_j),
    b running over monomials of degree m − (d−1), in the same block
    coordinates as relation_kernel."""
    d = f.degree
    nvars = f.nvars
    if m < d - 1:
        return []
    gens = jacobian_generators(f)
    index = basis_index(nvars, m)
    sdim = len(index)
    converted = [
        [(e, field.convert(c)) for e, c in g.terms.items()] for g in gens
    ]
    vectors = []
    for i in range(nvars):
        for j in range(i + 1, nvars):
            for b in monomial_basis(nvars, m - (d - 1)):
                v = [field.zero] * (nvars * sdim)
                for e, c in converted[j]:
                    pos = i * sdim + index[tuple(a + x for a, x in zip(b, e))]
                    v[pos] = c
                for e, c in converted[i]:
                    pos = j * sdim + index[tuple(a + x for a, x in zip(b, e))]
                    v[pos] = field.neg(c)
                vectors.append(v)
    return vectors


@lru_cache(maxsize=None)
def _kr_dim(f: HomogPoly, m: int, field) -> int:
    vectors = koszul_relation_vectors(f, m, field)
    if not vectors:
        return 0
    return rank(ExactMatrix.from_rows(vectors), field)


def kr_dim(f: HomogPoly, m: int, field=QQ) -> int:
    """Dimension of the degree-m Koszul (trivial) relations."""
    if m < 0:
        return 0
    return _kr_dim(f, m, field)


def er_dim(f: HomogPoly, m: int, field=QQ) -> int:
    """Essential relations in degree m: ar_dim − kr_dim."""
    if m < 0:
        return 0
    return ar_dim(f, m, field) - kr_dim(f, m, field)


def koszul_cohomology_dim(f: HomogPoly, j: int, field=QQ) -> int:
    """Degree-j dimension of the next-to-top cohomology of the Koszul complex
    of the partials, computed as a difference of Milnor dimensions.  Under
    the index shift j = m + n this is an independent oracle for er_dim."""
    n = f.nvars - 1
    k = j + f.degree - n - 1
    if k < 0:
        return 0
    return milnor_dim(f, k, field) - smooth_series_coeff(n, f.degree, k)


def minimal_relation_degree(f: HomogPoly, field=QQ) -> int | None:
    """Least m with an essential relation; None when no degree up to
    top_degree has one (for isolated singularities that means f is smooth)."""
    for m in range(max(top_degree(f.nvars, f.degree), 0) + 1):
        if er_dim(f, m, field) > 0:
            return m
    return None


@dataclass(frozen=True)
class SyzygyProfile:
    """ar/kr/er dimensions for relation degrees 0..m_max plus the minimal
    essential degree."""

    m_max: int
    ar_dims: tuple[int, ...]
    kr_dims: tuple[int, ...]
    er_dims: tuple[int, ...]
    mdr: int | None


@lru_cache(maxsize=None)
def _syzygy_profile(f: HomogPoly, m_max: int | None, field) -> SyzygyProfile:
    if f.degree < 2:
        raise ValueError("hypersurface degree must be at least 2")
    n = f.nvars - 1
    if m_max is None:
        # covers the er = τ tail (which starts at n(d−2)) with margin
        m_max = max(n * (f.degree - 2), 0) + 2
    if m_max < 0:
        raise ValueError("m_max must be nonnegative")
    ar = tuple(ar_dim(f, m, field) for m in range(m_max + 1))
    kr = tuple(kr_dim(f, m, field) for m in range(m_max + 1))
    er = tuple(a - k for a, k in zip(ar, kr))
    return SyzygyProfile(
        m_max=m_max,
        ar_dims=ar,
        kr_dims=kr,
        er_dims=er,
        mdr=minimal_relation_degree(f, field),
    )


def syzygy_profile(f: HomogPoly, m_max: int | None = None, field=QQ) -> SyzygyProfile:
    return _syzygy_profile(f, m_max, field)
