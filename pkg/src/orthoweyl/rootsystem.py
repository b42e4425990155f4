"""Root data of types B_k and D_k, weights, and simple-reflection actions.

Weights are always written in fundamental-weight (Bourbaki) coordinates:
``w = (c_1(w), ..., c_k(w))`` with ``c_i(w) = <w, α_i^∨>``.  The pairing
matrix convention is fixed once and for all as

    ``cartan[j-1][i-1] = <α_j, α_i^∨>``

so that the reflection rule reads ``c_i(s_j w) = c_i(w) - c_j(w) * <α_j, α_i^∨>``.
Both index orders occur in the literature; everything in this package assumes
this one.

ε-coordinates (the orthonormal functional basis in which the group acts by
signed permutations) exist for types B and D only, and are used for the
brute-force machinery and human-readable output, never as the internal basis.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import (
    DimensionError,
    IndexRangeError,
    NeedsAssignmentError,
    UnsupportedKindError,
    UnsupportedRankError,
)
from .linform import LinearForm, RationalLike

__all__ = [
    "DynkinKind",
    "RootDatum",
    "Weight",
    "EpsWeight",
    "make_datum",
    "custom_datum",
    "cartan_matrix",
    "simple_reflection",
    "rho",
    "fundamental_weight",
    "positive_roots",
    "positive_root_vectors",
    "to_epsilon",
    "from_epsilon",
    "is_regular_dominant",
]


class DynkinKind(enum.Enum):
    B = "B"
    D = "D"
    CUSTOM = "Custom"


@dataclass(frozen=True)
class RootDatum:
    """Dynkin kind, rank, and the integer pairing matrix ``<α_j, α_i^∨>``."""

    kind: DynkinKind
    rank: int
    cartan: tuple[tuple[int, ...], ...]

    def pairing(self, j: int, i: int) -> int:
        """``<α_j, α_i^∨>`` with 1-based indices."""
        return self.cartan[j - 1][i - 1]

    def __repr__(self) -> str:
        return f"RootDatum({self.kind.value}{self.rank})"


def cartan_matrix(kind: DynkinKind, rank: int) -> tuple[tuple[int, ...], ...]:
    """Pairing matrix for B_k / D_k in the convention described above."""
    k = rank
    rows = []
    for j in range(1, k + 1):
        row = [0] * k
        row[j - 1] = 2
        rows.append(row)

    def set_edge(j: int, i: int, value: int = -1) -> None:
        rows[j - 1][i - 1] = value

    if kind is DynkinKind.B:
        for j in range(1, k):
            set_edge(j, j + 1)
            set_edge(j + 1, j)
        # α_k is short: <α_{k-1}, α_k^∨> = -2 while <α_k, α_{k-1}^∨> = -1.
        set_edge(k - 1, k, -2)
    elif kind is DynkinKind.D:
        for j in range(1, k - 1):
            set_edge(j, j + 1)
            set_edge(j + 1, j)
        set_edge(k - 2, k)
        set_edge(k, k - 2)
    else:
        raise UnsupportedKindError("cartan_matrix only knows kinds B and D")
    return tuple(tuple(r) for r in rows)


def make_datum(kind: DynkinKind, rank: int) -> RootDatum:
    """Root datum of type B_k (k >= 3) or D_k (k >= 4)."""
    minimum = {DynkinKind.B: 3, DynkinKind.D: 4}
    if kind not in minimum:
        raise UnsupportedKindError("use custom_datum for non-B/D pairing matrices")
    if rank < minimum[kind]:
        raise UnsupportedRankError(
            f"type {kind.value} needs rank >= {minimum[kind]}, got {rank}"
        )
    return RootDatum(kind, rank, cartan_matrix(kind, rank))


def custom_datum(cartan: Sequence[Sequence[int]]) -> RootDatum:
    """Datum from an arbitrary generalized Cartan matrix of finite type.

    The reflection and orbit machinery works for any such matrix; positive-root
    enumeration and ε-conversion stay restricted to kinds B and D.
    """
    k = len(cartan)
    if k < 2:
        raise UnsupportedRankError("custom datum needs rank >= 2")
    rows = tuple(tuple(int(x) for x in row) for row in cartan)
    for j in range(k):
        if len(rows[j]) != k:
            raise DimensionError("pairing matrix must be square")
        if rows[j][j] != 2:
            raise ValueError("pairing matrix diagonal must be 2")
        for i in range(k):
            if i != j:
                if not -3 <= rows[j][i] <= 0:
                    raise ValueError("off-diagonal pairings must lie in {0,-1,-2,-3}")
                if (rows[j][i] == 0) != (rows[i][j] == 0):
                    raise ValueError("zero pattern of the pairing matrix must be symmetric")
    return RootDatum(DynkinKind.CUSTOM, k, rows)


@dataclass(frozen=True)
class Weight:
    """Vector of linear forms in fundamental-weight coordinates."""

    coords: tuple[LinearForm, ...]

    @property
    def rank(self) -> int:
        return len(self.coords)

    @staticmethod
    def from_constants(values: Sequence[RationalLike], nvars: int | None = None) -> "Weight":
        n = len(values) if nvars is None else nvars
        return Weight(tuple(LinearForm.const(v, n) for v in values))

    @staticmethod
    def symbolic(k: int) -> "Weight":
        """The generic weight (λ1, ..., λk)."""
        return Weight(tuple(LinearForm.variable(i, k) for i in range(1, k + 1)))

    def _check_rank(self, other: "Weight") -> None:
        if self.rank != other.rank:
            raise DimensionError(f"rank mismatch: {self.rank} vs {other.rank}")

    def __add__(self, other: "Weight") -> "Weight":
        if not isinstance(other, Weight):
            return NotImplemented
        self._check_rank(other)
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        if not isinstance(other, Weight):
            return NotImplemented
        self._check_rank(other)
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def scale(self, factor: RationalLike) -> "Weight":
        return Weight(tuple(c.scale(factor) for c in self.coords))

    def evaluate(self, assignment: Sequence[RationalLike]) -> "Weight":
        """Substitute numbers for the symbolic variables."""
        vals = [c.evaluate(assignment) for c in self.coords]
        nvars = self.coords[0].nvars if self.coords else 0
        return Weight.from_constants(vals, nvars)

    @property
    def is_constant(self) -> bool:
        return all(c.is_constant for c in self.coords)

    def constant_tuple(self) -> tuple[Fraction, ...]:
        if not self.is_constant:
            raise NeedsAssignmentError(f"weight {self} is still symbolic")
        return tuple(c.constant for c in self.coords)

    def render(self) -> str:
        return "(" + ",".join(c.render() for c in self.coords) + ")"

    def __str__(self) -> str:
        return self.render()


def _check_letter(datum: RootDatum, j: int) -> None:
    if not 1 <= j <= datum.rank:
        raise IndexRangeError(f"reflection index {j} outside 1..{datum.rank}")


def simple_reflection(datum: RootDatum, j: int, w: Weight) -> Weight:
    """Apply s_j: ``c_i -> c_i - c_j * <α_j, α_i^∨>``."""
    _check_letter(datum, j)
    if w.rank != datum.rank:
        raise DimensionError(f"weight rank {w.rank} != datum rank {datum.rank}")
    cj = w.coords[j - 1]
    if cj == LinearForm.zero(cj.nvars):
        return w
    row = datum.cartan[j - 1]
    new = [c - cj.scale(row[i]) if row[i] else c for i, c in enumerate(w.coords)]
    return Weight(tuple(new))


def reflect_vector(datum: RootDatum, j: int, vec: Sequence[int]) -> tuple[int, ...]:
    """Same reflection on a plain integer coordinate vector (fast path)."""
    cj = vec[j - 1]
    if cj == 0:
        return tuple(vec)
    row = datum.cartan[j - 1]
    return tuple(v - cj * row[i] for i, v in enumerate(vec))


def rho(datum: RootDatum) -> Weight:
    """Half-sum of positive roots: (1, ..., 1) in these coordinates."""
    return Weight.from_constants([1] * datum.rank)


def fundamental_weight(datum: RootDatum, i: int, nvars: int | None = None) -> Weight:
    _check_letter(datum, i)
    vec = [0] * datum.rank
    vec[i - 1] = 1
    return Weight.from_constants(vec, nvars)


def simple_root_vector(datum: RootDatum, j: int) -> tuple[int, ...]:
    """ϖ-coordinates of α_j, i.e. row j of the pairing matrix."""
    _check_letter(datum, j)
    return tuple(datum.cartan[j - 1])


# --- ε-coordinates (types B and D only) -------------------------------------


def _require_bd(datum: RootDatum) -> None:
    if datum.kind is DynkinKind.CUSTOM:
        raise UnsupportedKindError("operation needs a B- or D-type datum")


@dataclass(frozen=True)
class EpsWeight:
    """Vector of linear forms in the ε functional basis."""

    coords: tuple[LinearForm, ...]

    @property
    def rank(self) -> int:
        return len(self.coords)

    def render(self) -> str:
        return "(" + ",".join(c.render() for c in self.coords) + ")"


def to_epsilon(datum: RootDatum, w: Weight) -> EpsWeight:
    """Change of basis from fundamental-weight to ε-coordinates."""
    _require_bd(datum)
    k = datum.rank
    if w.rank != k:
        raise DimensionError(f"weight rank {w.rank} != datum rank {k}")
    c = w.coords
    half = Fraction(1, 2)
    out: list[LinearForm] = []
    if datum.kind is DynkinKind.B:
        # ϖ_i = ε_1+...+ε_i (i<k), ϖ_k = (ε_1+...+ε_k)/2.
        for j in range(1, k + 1):
            acc = c[k - 1].scale(half)
            for i in range(j, k):
                acc = acc + c[i - 1]
            out.append(acc)
    else:
        # ϖ_i = ε_1+...+ε_i (i<=k-2), ϖ_{k-1/k} = (ε_1+...+ε_{k-1} ∓ ε_k)/2.
        for j in range(1, k - 1):
            acc = (c[k - 2] + c[k - 1]).scale(half)
            for i in range(j, k - 1):
                acc = acc + c[i - 1]
            out.append(acc)
        out.append((c[k - 2] + c[k - 1]).scale(half))
        out.append((c[k - 1] - c[k - 2]).scale(half))
    return EpsWeight(tuple(out))


def from_epsilon(datum: RootDatum, ew: EpsWeight) -> Weight:
    """Inverse of :func:`to_epsilon`."""
    _require_bd(datum)
    k = datum.rank
    if ew.rank != k:
        raise DimensionError(f"eps-weight rank {ew.rank} != datum rank {k}")
    b = ew.coords
    out: list[LinearForm] = []
    if datum.kind is DynkinKind.B:
        for i in range(1, k):
            out.append(b[i - 1] - b[i])
        out.append(b[k - 1].scale(2))
    else:
        for i in range(1, k - 1):
            out.append(b[i - 1] - b[i])
        out.append(b[k - 2] - b[k - 1])
        out.append(b[k - 2] + b[k - 1])
    return Weight(tuple(out))


@lru_cache(maxsize=None)
def _eps_positive_roots(datum: RootDatum) -> tuple[tuple[Fraction, ...], ...]:
    """Positive roots in ε-coordinates, in a fixed deterministic order."""
    _require_bd(datum)
    k = datum.rank
    roots: list[tuple[Fraction, ...]] = []

    def vec(entries: dict[int, int]) -> tuple[Fraction, ...]:
        return tuple(Fraction(entries.get(i, 0)) for i in range(1, k + 1))

    for i in range(1, k + 1):
        for j in range(i + 1, k + 1):
            roots.append(vec({i: 1, j: -1}))
            roots.append(vec({i: 1, j: 1}))
    if datum.kind is DynkinKind.B:
        for i in range(1, k + 1):
            roots.append(vec({i: 1}))
    return tuple(roots)


def _eps_to_weight_vector(datum: RootDatum, b: Sequence[Fraction]) -> tuple[Fraction, ...]:
    k = datum.rank
    if datum.kind is DynkinKind.B:
        c = [b[i] - b[i + 1] for i in range(k - 1)] + [2 * b[k - 1]]
    else:
        c = [b[i] - b[i + 1] for i in range(k - 2)]
        c += [b[k - 2] - b[k - 1], b[k - 2] + b[k - 1]]
    return tuple(c)


@lru_cache(maxsize=None)
def positive_root_vectors(datum: RootDatum) -> tuple[tuple[int, ...], ...]:
    """Positive roots as integer ϖ-coordinate vectors (types B and D)."""
    out = []
    for b in _eps_positive_roots(datum):
        c = _eps_to_weight_vector(datum, b)
        assert all(x.denominator == 1 for x in c)
        out.append(tuple(int(x) for x in c))
    return tuple(out)


def positive_roots(datum: RootDatum) -> tuple[Weight, ...]:
    """Positive roots as constant weights; k^2 for B_k, k(k-1) for D_k."""
    return tuple(Weight.from_constants(v) for v in positive_root_vectors(datum))


def is_regular_dominant(w: Weight) -> bool:
    """True iff every coordinate is a constant > 0."""
    if not w.is_constant:
        raise NeedsAssignmentError(
            "regularity test needs a numeric weight; evaluate the symbolic one first"
        )
    return all(c.constant > 0 for c in w.coords)
