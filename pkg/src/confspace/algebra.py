"""Exact chain complexes and integral homology via Smith normal form.

Boundary matrices are kept as integer triplet lists; all reductions run
through :mod:`confspace.kernels` (compiled or pure Python, identical
results).  Homology in degree d is reported only when the (d+1)-faces were
enumerated, so truncated models never produce silently wrong answers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import Complex
from . import kernels


class TruncationError(ValueError):
    """An operation needed the full complex but got a truncated one."""


@dataclass(frozen=True)
class ChainComplex:
    """Per-dimension face bases and sparse integer boundary matrices."""

    bases: tuple          # bases[d] = tuple of d-faces (ascending index tuples)
    boundaries: tuple     # boundaries[d] = triplets of d(C_d) -> C_{d-1}
    complete: bool        # False if the top dimension was truncated

    @property
    def top_dim(self) -> int:
        return len(self.bases) - 1

    def n_cells(self, d: int) -> int:
        if 0 <= d < len(self.bases):
            return len(self.bases[d])
        return 0

    def boundary(self, d: int):
        """Triplets (row, col, sign) of the boundary map C_d -> C_{d-1}."""
        if 1 <= d < len(self.bases):
            return self.boundaries[d]
        return ()


def chain_complex(cx: Complex, max_dim=None) -> ChainComplex:
    """Boundary matrices of a complex, with d.d = 0 checked on construction."""
    levels = cx.faces_by_dim(max_dim)
    if not levels:
        return ChainComplex(bases=(), boundaries=(), complete=True)
    bases = [tuple(level) for level in levels]
    boundaries = [()]
    index_of = {f: i for i, f in enumerate(bases[0])}
    for d in range(1, len(bases)):
        lower, index_of = index_of, {f: i for i, f in enumerate(bases[d])}
        triplets = []
        for col, face in enumerate(bases[d]):
            sign = 1
            for k in range(len(face)):
                sub = face[:k] + face[k + 1:]
                triplets.append((lower[sub], col, sign))
                sign = -sign
        boundaries.append(tuple(triplets))
    top = len(bases) - 1
    truncated = (cx.dim > top
                 or (cx.truncated_at is not None and top >= cx.truncated_at))
    cc = ChainComplex(bases=tuple(bases), boundaries=tuple(boundaries),
                      complete=not truncated)
    for d in range(2, len(bases)):
        if not _composes_to_zero(cc, d):
            raise AssertionError(f"boundary squared nonzero in degree {d}")
    return cc


def _composes_to_zero(cc: ChainComplex, d: int) -> bool:
    rows_of = {}
    for i, j, v in cc.boundaries[d - 1]:
        rows_of.setdefault(j, []).append((i, v))
    by_col = {}
    for i, j, v in cc.boundaries[d]:
        by_col.setdefault(j, []).append((i, v))
    for col_entries in by_col.values():
        acc = {}
        for i, v in col_entries:
            for ii, vv in rows_of.get(i, ()):
                acc[ii] = acc.get(ii, 0) + v * vv
        if any(acc.values()):
            return False
    return True


@dataclass(frozen=True)
class HomologySummary:
    """Betti numbers and torsion invariant factors per degree."""

    betti: tuple          # betti[d]
    torsion: tuple        # torsion[d] = tuple of invariant factors > 1
    degrees: int          # homology reported for d in range(degrees)
    complete: bool        # True iff the whole complex entered the computation

    def group(self, d: int) -> str:
        if not 0 <= d < self.degrees:
            return "unknown (truncated)"
        parts = ["Z"] * self.betti[d] + [f"Z/{t}" for t in self.torsion[d]]
        return " + ".join(parts) if parts else "0"

    def __str__(self):
        return "; ".join(f"H_{d} = {self.group(d)}" for d in range(self.degrees))


def homology(cc: ChainComplex) -> HomologySummary:
    """Integral homology from Smith normal forms of the boundary maps.

    H_d = Z^betti + sum of Z/t for the invariant factors t > 1 of the
    (d+1)-boundary.  When the chain complex is truncated, the top degree is
    left out (its image term is unknown).
    """
    top = cc.top_dim
    if top < 0:
        return HomologySummary((), (), 0, True)
    factors = [()]
    for d in range(1, top + 1):
        factors.append(tuple(kernels.snf_invariant_factors(
            cc.n_cells(d - 1), cc.n_cells(d), cc.boundaries[d])))
    ranks = [len(f) for f in factors] + [0]
    degrees = top + 1 if cc.complete else top
    betti = []
    torsion = []
    for d in range(degrees):
        betti.append(cc.n_cells(d) - ranks[d] - ranks[d + 1])
        above = factors[d + 1] if d + 1 <= top else ()
        torsion.append(tuple(t for t in above if t > 1))
    return HomologySummary(tuple(betti), tuple(torsion), degrees, cc.complete)


def betti_numbers(cx: Complex, max_dim=None) -> tuple:
    """Convenience wrapper: Betti numbers of a complex."""
    return homology(chain_complex(cx, max_dim)).betti


def euler_characteristic(cx: Complex) -> int:
    """Alternating sum of face counts; refuses truncated complexes."""
    if cx.truncated_at is not None:
        raise TruncationError(
            "Euler characteristic needs the full face list, but this "
            f"complex is truncated at dimension {cx.truncated_at}")
    chi = 0
    for d, level in enumerate(cx.faces_by_dim()):
        chi += len(level) if d % 2 == 0 else -len(level)
    return chi


def rank_exact(n_rows: int, n_cols: int, entries) -> int:
    """Rank over Q by fraction-free (Bareiss) Gaussian elimination.

    Dense and exact; independent of the Smith normal form path, used to
    cross-check rational Betti numbers on small matrices.
    """
    dense = [[0] * n_cols for _ in range(n_rows)]
    for i, j, v in entries:
        dense[i][j] += v
    rank = 0
    row = 0
    prev = 1
    for col in range(n_cols):
        pivot = next((r for r in range(row, n_rows) if dense[r][col]), None)
        if pivot is None:
            continue
        dense[row], dense[pivot] = dense[pivot], dense[row]
        pv = dense[row][col]
        for r in range(row + 1, n_rows):
            vrc = dense[r][col]
            rowr = dense[r]
            prow = dense[row]
            for c in range(col, n_cols):
                rowr[c] = (pv * rowr[c] - vrc * prow[c]) // prev
        prev = pv
        rank += 1
        row += 1
        if row == n_rows:
            break
    return rank
