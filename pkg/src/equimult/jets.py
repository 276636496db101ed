"""Exact linear algebra over truncated jet spaces.

The jet space of level m is the span of the monomials of total degree
< m, a vector space of dimension m*(m+1)/2 over the rationals.  Ideals
taken modulo the m-th power of the maximal ideal live here, represented
as canonical reduced-row-echelon subspaces so that equal subspaces have
identical data.

Everything is fraction-exact: pivoting picks the first nonzero entry in
basis order, which is deterministic and loses nothing without rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence, Tuple

from .poly import BiPoly, Exponent, grlex_key


class BasisMismatchError(ValueError):
    """Raised when vectors from different jet bases are combined."""


class MonoBasis:
    """Ordered basis of monomials of total degree < m (graded order)."""

    __slots__ = ("m", "monomials", "_index")

    def __init__(self, m: int):
        if m < 1:
            raise ValueError(f"jet level must be >= 1, got {m}")
        self.m = m
        self.monomials: Tuple[Exponent, ...] = tuple(
            sorted(((i, j) for d in range(m) for i in range(d + 1) for j in (d - i,)), key=grlex_key)
        )
        self._index = {e: k for k, e in enumerate(self.monomials)}

    @property
    def dim(self) -> int:
        return len(self.monomials)

    def index_of(self, exponent: Exponent) -> int:
        return self._index[exponent]

    def __len__(self) -> int:
        return len(self.monomials)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, MonoBasis) and other.m == self.m

    def __hash__(self) -> int:
        return hash(("MonoBasis", self.m))

    def __repr__(self) -> str:
        return f"MonoBasis(m={self.m})"


@lru_cache(maxsize=None)
def mono_basis(m: int) -> MonoBasis:
    """Shared MonoBasis instance for jet level m."""
    return MonoBasis(m)


@dataclass(frozen=True)
class JetVector:
    """Coordinates of a truncated polynomial in a MonoBasis."""

    basis: MonoBasis
    coords: Tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coords) != self.basis.dim:
            raise ValueError(
                f"coordinate length {len(self.coords)} does not match basis dimension {self.basis.dim}"
            )

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)

    def __add__(self, other: "JetVector") -> "JetVector":
        _require_same_basis(self.basis, other.basis)
        return JetVector(self.basis, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "JetVector") -> "JetVector":
        _require_same_basis(self.basis, other.basis)
        return JetVector(self.basis, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __mul__(self, scalar) -> "JetVector":
        c = Fraction(scalar)
        return JetVector(self.basis, tuple(a * c for a in self.coords))

    __rmul__ = __mul__

    def to_poly(self) -> BiPoly:
        return BiPoly({e: c for e, c in zip(self.basis.monomials, self.coords) if c})


def _require_same_basis(*bases: MonoBasis) -> None:
    if any(b != bases[0] for b in bases[1:]):
        raise BasisMismatchError("jet vectors use different bases; mixing levels is not allowed")


def to_jet_vector(p: BiPoly, m: int) -> JetVector:
    """Coordinates of the truncation of p to total degree < m."""
    basis = mono_basis(m)
    return JetVector(basis, tuple(p.coeff(i, j) for i, j in basis.monomials))


def row_reduce(
    rows: Iterable[Sequence[Fraction]],
) -> Tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form of the given rows (exact, deterministic).

    Returns the nonzero rows sorted by pivot column together with the
    pivot column indices.  Pivots are normalized to 1 and cleared both
    above and below, so the output is the canonical representation of the
    row space.
    """
    echelon: list[list[Fraction]] = []
    pivots: list[int] = []
    for candidate in rows:
        v = list(candidate)
        for row, p in zip(echelon, pivots):
            c = v[p]
            if c:
                v = [a - c * b for a, b in zip(v, row)]
        pivot = next((k for k, entry in enumerate(v) if entry), None)
        if pivot is None:
            continue
        inv = v[pivot]
        v = [entry / inv for entry in v]
        for idx, row in enumerate(echelon):
            c = row[pivot]
            if c:
                echelon[idx] = [a - c * b for a, b in zip(row, v)]
        at = next((k for k, p in enumerate(pivots) if p > pivot), len(pivots))
        echelon.insert(at, v)
        pivots.insert(at, pivot)
    return echelon, pivots


class JetSubspace:
    """A linear subspace of a jet space in canonical row-echelon form.

    Build instances with :func:`span`; two calls that span the same space
    produce identical rows, so ``==`` is meaningful.
    """

    __slots__ = ("basis", "rows", "pivots")

    def __init__(self, basis: MonoBasis, rows: Tuple[JetVector, ...], pivots: Tuple[int, ...]):
        self.basis = basis
        self.rows = rows
        self.pivots = pivots

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, v: JetVector) -> JetVector:
        """Residue of v after eliminating all pivots of this subspace."""
        _require_same_basis(self.basis, v.basis)
        coords = list(v.coords)
        for row, p in zip(self.rows, self.pivots):
            c = coords[p]
            if c:
                coords = [a - c * b for a, b in zip(coords, row.coords)]
        return JetVector(self.basis, tuple(coords))

    def contains(self, v: JetVector) -> bool:
        """True iff v lies in the row space."""
        return self.reduce(v).is_zero

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, JetSubspace):
            return NotImplemented
        return self.basis == other.basis and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.basis, self.rows))

    def __repr__(self) -> str:
        return f"JetSubspace(m={self.basis.m}, rank={self.rank})"


def span(vectors: Iterable[JetVector], basis: Optional[MonoBasis] = None) -> JetSubspace:
    """Canonical subspace spanned by the given jet vectors.

    All vectors must share one basis; pass ``basis`` explicitly to span
    the empty family.
    """
    vectors = list(vectors)
    if vectors:
        if basis is None:
            basis = vectors[0].basis
        _require_same_basis(basis, *(v.basis for v in vectors))
    elif basis is None:
        raise ValueError("span of no vectors needs an explicit basis")
    echelon, pivots = row_reduce(v.coords for v in vectors)
    rows = tuple(JetVector(basis, tuple(r)) for r in echelon)
    return JetSubspace(basis, rows, tuple(pivots))


@dataclass(frozen=True)
class AffineSolutionSet:
    """All solutions of a linear system, as particular point plus direction basis.

    ``empty`` marks an inconsistent system; then there is no particular
    point and no directions.  Otherwise the solutions are exactly
    ``particular + span(directions)`` and the affine dimension equals the
    number of directions.
    """

    empty: bool
    particular: Optional[Tuple[Fraction, ...]] = None
    directions: Tuple[Tuple[Fraction, ...], ...] = ()

    @classmethod
    def none(cls) -> "AffineSolutionSet":
        return cls(empty=True, particular=None, directions=())

    @property
    def dimension(self) -> int:
        if self.empty:
            raise ValueError("empty solution set has no dimension")
        return len(self.directions)

    def points(self) -> Iterable[Tuple[Fraction, ...]]:
        """The particular point and its shift by each single direction."""
        if self.empty:
            return []
        assert self.particular is not None
        pts = [self.particular]
        for d in self.directions:
            pts.append(tuple(a + b for a, b in zip(self.particular, d)))
        return pts


def solve_affine(columns: Sequence[JetVector], target: JetVector) -> AffineSolutionSet:
    """Solve sum_i c_i * columns[i] = target for the coefficient vector c.

    The particular solution sets all free variables to zero; the
    directions are the canonical kernel basis read off the reduced
    echelon form, one per free variable in increasing column order.
    """
    _require_same_basis(target.basis, *(v.basis for v in columns))
    n = len(columns)
    augmented = (
        [col.coords[r] for col in columns] + [target.coords[r]]
        for r in range(target.basis.dim)
    )
    echelon, pivots = row_reduce(augmented)
    if n in pivots:
        return AffineSolutionSet.none()
    particular = [Fraction(0)] * n
    for row, p in zip(echelon, pivots):
        particular[p] = row[n]
    free = [c for c in range(n) if c not in pivots]
    directions = []
    for f in free:
        direction = [Fraction(0)] * n
        direction[f] = Fraction(1)
        for row, p in zip(echelon, pivots):
            direction[p] = -row[f]
        directions.append(tuple(direction))
    return AffineSolutionSet(empty=False, particular=tuple(particular), directions=tuple(directions))
