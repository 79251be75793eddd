"""Sign matrices over {+, -} and the feasibility decision.

A sign pattern is achievable as the entrywise sign matrix of the inverse of
some invertible irreducible doubly nonnegative matrix exactly when it is
symmetric, its diagonal is all plus, and its negative-sign graph (one edge per
off-diagonal minus pair) is connected. Feasible patterns come with an explicit
witness: a diagonally dominant symmetric M-matrix whose inverse realizes the
pattern with strictly positive plus entries.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .densemat import REL_TOL_ZERO, SymMatrix, zero_threshold
from .errors import AsymmetricSignMatrix, InfeasiblePattern
from .graphs import UGraph, is_connected, random_tree

PLUS: int = 1
MINUS: int = -1

_CHAR = {PLUS: "+", MINUS: "-"}
_SIGN = {"+": PLUS, "-": MINUS}


class SignMatrix:
    """Square matrix with entries in {PLUS, MINUS}, immutable after construction."""

    __slots__ = ("_signs",)

    def __init__(self, signs) -> None:
        arr = np.asarray(signs)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError(f"expected a square sign matrix, got shape {arr.shape}")
        if arr.shape[0] < 1:
            raise ValueError("sign matrix must have at least one row")
        arr = arr.astype(np.int8)
        if not np.isin(arr, (PLUS, MINUS)).all():
            raise ValueError("sign entries must be PLUS (+1) or MINUS (-1)")
        arr = arr.copy()
        arr.setflags(write=False)
        self._signs = arr

    @classmethod
    def from_rows(cls, rows: Sequence[str]) -> "SignMatrix":
        """Build from strings of '+' and '-' characters, one per row."""
        n = len(rows)
        out = np.empty((n, n), dtype=np.int8)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError(f"row {i + 1} has {len(row)} characters, expected {n}")
            for j, ch in enumerate(row):
                if ch not in _SIGN:
                    raise ValueError(f"row {i + 1} has invalid character {ch!r}")
                out[i, j] = _SIGN[ch]
        return cls(out)

    def to_rows(self) -> list[str]:
        return ["".join(_CHAR[int(s)] for s in row) for row in self._signs]

    @property
    def n(self) -> int:
        return self._signs.shape[0]

    @property
    def signs(self) -> np.ndarray:
        return self._signs

    @property
    def is_symmetric(self) -> bool:
        return bool(np.array_equal(self._signs, self._signs.T))

    def __getitem__(self, index):
        return self._signs[index]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SignMatrix):
            return NotImplemented
        return self._signs.shape == other._signs.shape and bool(
            np.array_equal(self._signs, other._signs)
        )

    def __repr__(self) -> str:
        return f"SignMatrix({self.to_rows()!r})"


def sign_of(q: SymMatrix, rel_tol: float = REL_TOL_ZERO) -> SignMatrix:
    """Entrywise sign pattern of a matrix.

    Entries below ``-tol`` are MINUS and everything else is PLUS, where ``tol``
    is ``rel_tol`` times the largest entry magnitude. Entries inside the band
    ``[-tol, tol]`` therefore land on PLUS; :func:`ambiguous_signs` lists them.
    """
    arr = q.entries
    tol = zero_threshold(arr, rel_tol)
    return SignMatrix(np.where(arr < -tol, MINUS, PLUS))


def ambiguous_signs(
    q: SymMatrix, rel_tol: float = REL_TOL_ZERO
) -> list[tuple[int, int]]:
    """Positions (i, j), i <= j, whose magnitude falls inside the zero band."""
    arr = q.entries
    tol = zero_threshold(arr, rel_tol)
    rows, cols = np.nonzero(np.triu(np.abs(arr) <= tol))
    return [(int(i) + 1, int(j) + 1) for i, j in zip(rows, cols)]


def negative_sign_graph(s: SignMatrix) -> UGraph:
    """Graph on 1..n with an edge for every symmetric off-diagonal MINUS pair."""
    if not s.is_symmetric:
        raise AsymmetricSignMatrix("negative-sign graph requires a symmetric pattern")
    rows, cols = np.nonzero(np.triu(s.signs == MINUS, k=1))
    return UGraph(s.n, zip((rows + 1).tolist(), (cols + 1).tolist()))


@dataclass(frozen=True)
class FeasibilityReport:
    """Decision plus the three condition flags and the component certificate."""

    feasible: bool
    symmetric_ok: bool
    diagonal_ok: bool
    delta_connected: bool
    delta_components: tuple[tuple[int, ...], ...]

    def to_dict(self) -> dict:
        return {
            "feasible": self.feasible,
            "symmetric_ok": self.symmetric_ok,
            "diagonal_ok": self.diagonal_ok,
            "delta_connected": self.delta_connected,
            "delta_components": [list(c) for c in self.delta_components],
        }


def check_feasible(s: SignMatrix) -> FeasibilityReport:
    """Decide whether some invertible irreducible doubly nonnegative matrix has
    an inverse with sign pattern ``s``.

    Never raises on bad patterns: an asymmetric input simply fails the symmetry
    flag, with the negative-sign graph taken over pairs where either
    orientation is MINUS so the certificate is still meaningful.
    """
    arr = s.signs
    symmetric_ok = s.is_symmetric
    diagonal_ok = bool((arr.diagonal() == PLUS).all())
    minus_either = (arr == MINUS) | (arr.T == MINUS)
    rows, cols = np.nonzero(np.triu(minus_either, k=1))
    delta = UGraph(s.n, zip((rows + 1).tolist(), (cols + 1).tolist()))
    connected, components = is_connected(delta)
    return FeasibilityReport(
        feasible=symmetric_ok and diagonal_ok and connected,
        symmetric_ok=symmetric_ok,
        diagonal_ok=diagonal_ok,
        delta_connected=connected,
        delta_components=components,
    )


def construct_witness(s: SignMatrix) -> SymMatrix:
    """Witness matrix whose inverse has sign pattern ``s``.

    The witness puts n on the diagonal and -1 on every MINUS off-diagonal
    position, zero elsewhere: a strictly diagonally dominant irreducible
    symmetric M-matrix, so its inverse is entrywise strictly positive on the
    PLUS positions and strictly negative on the MINUS ones. Raises
    :class:`InfeasiblePattern` when :func:`check_feasible` rejects ``s``.
    """
    report = check_feasible(s)
    if not report.feasible:
        failed = [
            name
            for name, ok in [
                ("symmetry", report.symmetric_ok),
                ("all-plus diagonal", report.diagonal_ok),
                ("connected negative-sign graph", report.delta_connected),
            ]
            if not ok
        ]
        raise InfeasiblePattern(f"pattern fails: {', '.join(failed)}")
    n = s.n
    q = np.where(s.signs == MINUS, -1.0, 0.0)
    np.fill_diagonal(q, float(n))
    return SymMatrix(q)


def random_feasible_sign_matrix(n: int, seed) -> SignMatrix:
    """Random feasible pattern: a uniform spanning tree of MINUS pairs, then
    each remaining off-diagonal pair flipped to MINUS with probability 1/2."""
    if n < 1:
        raise ValueError(f"size must be at least 1, got {n}")
    signs = np.full((n, n), PLUS, dtype=np.int8)
    if n >= 2:
        rng = np.random.default_rng(seed)
        for i, j in random_tree(n, rng).edges:
            signs[i - 1, j - 1] = signs[j - 1, i - 1] = MINUS
        extra = np.triu(rng.random((n, n)) < 0.5, k=1)
        signs[extra | extra.T] = MINUS
        np.fill_diagonal(signs, PLUS)
    return SignMatrix(signs)
