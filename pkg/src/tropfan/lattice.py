"""Sublattices of Z^n in canonical Hermite normal form.

A Sublattice is the subgroup of Z^n generated by its basis rows.  The
basis is kept in row-style HNF (positive pivots, reduced entries above
pivots), so equality of subgroups is equality of tuples.  Rank-deficient
sublattices are ordinary values; the zero lattice has an empty basis.
"""

from dataclasses import dataclass

from . import _linalg
from ._linalg import hnf, express_in_hnf, integer_kernel


class DimensionError(ValueError):
    pass


class ContainmentError(ValueError):
    pass


INFINITE = "infinite"


@dataclass(frozen=True)
class Sublattice:
    ambient_rank: int
    basis: tuple  # tuple of int tuples, in HNF

    def __post_init__(self):
        for row in self.basis:
            if len(row) != self.ambient_rank:
                raise DimensionError(
                    f"basis vector of length {len(row)} in ambient rank {self.ambient_rank}"
                )

    @property
    def rank(self):
        return len(self.basis)

    def __repr__(self):
        return f"Sublattice(rank {self.rank} in Z^{self.ambient_rank})"


def canonicalize(vectors, ambient_rank):
    """Canonical Sublattice generated by the given integer vectors."""
    for v in vectors:
        if len(v) != ambient_rank:
            raise DimensionError(f"vector {v} does not have length {ambient_rank}")
    return Sublattice(ambient_rank, tuple(hnf([list(v) for v in vectors], ambient_rank)))


def full_lattice(ambient_rank):
    return canonicalize(
        [[1 if i == j else 0 for j in range(ambient_rank)] for i in range(ambient_rank)],
        ambient_rank,
    )


def zero_lattice(ambient_rank):
    return Sublattice(ambient_rank, ())


def member(v, lattice):
    """Exact membership of an integer vector in a sublattice."""
    if len(v) != lattice.ambient_rank:
        raise DimensionError(f"vector {v} vs ambient rank {lattice.ambient_rank}")
    if all(x == 0 for x in v):
        return True
    return express_in_hnf(list(lattice.basis), lattice.ambient_rank, v) is not None


def contains(sup, sub):
    """True iff every basis vector of `sub` lies in `sup`."""
    return all(member(b, sup) for b in sub.basis)


def index_in(sub, sup):
    """Index [sup : sub], or the string "infinite" when ranks differ.

    Raises ContainmentError unless sub is contained in sup.
    """
    if sub.ambient_rank != sup.ambient_rank:
        raise DimensionError("ambient ranks differ")
    if not contains(sup, sub):
        raise ContainmentError("first lattice is not contained in the second")
    if sub.rank < sup.rank:
        return INFINITE
    # Express sub's basis in coordinates with respect to sup's basis; the
    # index is |det| of the resulting square integer matrix.
    coords = [express_in_hnf(list(sup.basis), sup.ambient_rank, b) for b in sub.basis]
    det = _int_det([list(c) for c in coords])
    return abs(det)


def _int_det(mat):
    """Determinant of a square integer matrix by fraction-free elimination."""
    n = len(mat)
    if n == 0:
        return 1
    from fractions import Fraction

    a = [[Fraction(x) for x in row] for row in mat]
    det = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        inv = 1 / a[c][c]
        for i in range(c + 1, n):
            if a[i][c] != 0:
                f = a[i][c] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    assert det.denominator == 1
    return det.numerator


def intersect(l1, l2):
    """Canonical basis of the intersection of two sublattices."""
    if l1.ambient_rank != l2.ambient_rank:
        raise DimensionError("ambient ranks differ")
    n = l1.ambient_rank
    if not l1.basis or not l2.basis:
        return zero_lattice(n)
    stacked = [list(b) for b in l1.basis] + [[-x for x in b] for b in l2.basis]
    kernel = _linalg.left_kernel(stacked, n)
    r1 = len(l1.basis)
    gens = []
    for k in kernel:
        v = [0] * n
        for c, b in zip(k[:r1], l1.basis):
            if c:
                v = [a + c * x for a, x in zip(v, b)]
        gens.append(v)
    return canonicalize(gens, n)


def saturate(lattice):
    """Span_Q(L) intersected with Z^n: the saturation of L."""
    n = lattice.ambient_rank
    if not lattice.basis:
        return zero_lattice(n)
    perp = integer_kernel([list(b) for b in lattice.basis], n)
    if not perp:
        return full_lattice(n)
    sat = integer_kernel([list(p) for p in perp], n)
    return canonicalize([list(v) for v in sat], n)


def group_closure(points, ambient_rank):
    """Subgroup of Z^n generated by the given points (differences included)."""
    return canonicalize(points, ambient_rank)


def restrict_to_span(lattice, span_vectors):
    """L intersected with the rational span of `span_vectors`.

    Implemented as intersect(L, saturate(<span_vectors>)).
    """
    span = saturate(canonicalize(span_vectors, lattice.ambient_rank))
    return intersect(lattice, span)
