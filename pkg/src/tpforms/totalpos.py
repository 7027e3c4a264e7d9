"""Total positivity of rational matrices by exact minor enumeration.

The exhaustive test walks every square minor of every size and is the source
of truth; it is capped, because the count grows as a central binomial in the
smaller dimension.  Past the cap the contiguous-minor criteria apply: all
contiguous minors positive up to size k certifies every minor of size up to k
positive (Fekete), which the test-suite cross-validates against the
exhaustive scan on everything under the cap.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

from .apolarity import sperner_number, toeplitz
from .forms import BivariateForm, ZeroFormError
from .linalg import (
    RatMatrix,
    ResourceLimitError,
    det_exact,
    rank_exact,
    subsets_colex,
)

MINOR_ENUMERATION_CAP = 7


@dataclass(frozen=True)
class MinorWitness:
    """First failing minor in size-then-colex order (0-indexed index sets)."""

    rows: tuple[int, ...]
    cols: tuple[int, ...]
    value: Fraction


@dataclass(frozen=True)
class TPReport:
    is_tnn: bool
    is_tp: bool
    tp_order: int
    rank: int
    witness: MinorWitness | None


@lru_cache(maxsize=None)
def scan_all_minors(A: RatMatrix) -> TPReport:
    """Exhaustive minor scan: total non-negativity, total positivity, the
    largest k with every minor of size <= k positive, and the rank.

    The witness records the first strictly negative minor, scanning sizes
    ascending and row/column subsets in colex order.
    """
    m, n = A.rows, A.cols
    if min(m, n) > MINOR_ENUMERATION_CAP:
        raise ResourceLimitError(
            f"min dimension {min(m, n)} exceeds the exhaustive cap "
            f"{MINOR_ENUMERATION_CAP}; use the contiguous criteria"
        )
    if m == 0 or n == 0:
        return TPReport(True, True, 0, 0, None)
    denoms = [e.denominator for e in A.entries]
    scale = lcm(*denoms)
    a = [[int(A.at(r, c) * scale) for c in range(n)] for r in range(m)]

    witness = None
    any_negative = False
    rank = 0
    tp_order = 0
    tp_so_far = True

    # dets[(rmask, cmask)] for the current size, built from the previous size
    prev: dict[tuple[int, int], int] = {(0, 0): 1}
    for size in range(1, min(m, n) + 1):
        row_sets = subsets_colex(m, size)
        col_sets = subsets_colex(n, size)
        cur: dict[tuple[int, int], int] = {}
        all_positive = True
        any_nonzero = False
        for rows in row_sets:
            rmask = 0
            for r in rows:
                rmask |= 1 << r
            sub_rmask = rmask ^ (1 << rows[-1])
            last_row = a[rows[-1]]
            for cols in col_sets:
                cmask = 0
                for c in cols:
                    cmask |= 1 << c
                det = 0
                for pos, c in enumerate(cols):
                    entry = last_row[c]
                    if entry == 0:
                        continue
                    sub = prev[(sub_rmask, cmask ^ (1 << c))]
                    if sub == 0:
                        continue
                    term = entry * sub
                    if (size - 1 + pos) % 2:
                        det -= term
                    else:
                        det += term
                cur[(rmask, cmask)] = det
                if det > 0:
                    any_nonzero = True
                elif det < 0:
                    any_nonzero = True
                    all_positive = False
                    if witness is None:
                        witness = MinorWitness(
                            rows=rows,
                            cols=cols,
                            value=Fraction(det, scale**size),
                        )
                    any_negative = True
                else:
                    all_positive = False
        if any_nonzero:
            rank = size
        if tp_so_far and all_positive:
            tp_order = size
        else:
            tp_so_far = False
        prev = cur
    return TPReport(
        is_tnn=not any_negative,
        is_tp=tp_order == min(m, n),
        tp_order=tp_order,
        rank=rank,
        witness=witness,
    )


def all_minors_nonneg(A: RatMatrix) -> TPReport:
    """Exact total non-negativity by checking every square minor."""
    return scan_all_minors(A)


def is_tp_contiguous(A: RatMatrix, k: int) -> bool:
    """Every contiguous minor of size <= k positive.

    By Fekete's theorem this certifies positivity of all (not just
    contiguous) minors up to size k.
    """
    m, n = A.rows, A.cols
    if not 1 <= k <= min(m, n):
        raise IndexError(f"order {k} out of range for {m}x{n}")
    for size in range(1, k + 1):
        rows = tuple(range(size))
        cols = tuple(range(size))
        for r0 in range(m - size + 1):
            for c0 in range(n - size + 1):
                block = A.submatrix(
                    [r0 + r for r in rows], [c0 + c for c in cols]
                )
                if det_exact(block) <= 0:
                    return False
    return True


def corner_minors_nonzero(A: RatMatrix, s: int) -> bool:
    """Top-right and bottom-left k x k corner minors nonzero for all k <= s."""
    m, n = A.rows, A.cols
    if not 1 <= s <= min(m, n):
        raise IndexError(f"order {s} out of range for {m}x{n}")
    for k in range(1, s + 1):
        top_right = A.submatrix(range(k), range(n - k, n))
        bottom_left = A.submatrix(range(m - k, m), range(k))
        if det_exact(top_right) == 0 or det_exact(bottom_left) == 0:
            return False
    return True


def contiguous_s_minors_nonzero(A: RatMatrix, s: int) -> bool:
    """Every contiguous s x s minor nonzero."""
    m, n = A.rows, A.cols
    if not 1 <= s <= min(m, n):
        raise IndexError(f"order {s} out of range for {m}x{n}")
    for r0 in range(m - s + 1):
        for c0 in range(n - s + 1):
            block = A.submatrix(range(r0, r0 + s), range(c0, c0 + s))
            if det_exact(block) == 0:
                return False
    return True


def in_open_stratum(A: RatMatrix, s: int) -> bool:
    """Membership in the open set of rank-s Toeplitz matrices whose corner
    minors up to size s and contiguous s x s minors all survive."""
    if not A.is_toeplitz():
        raise ValueError("stratum membership is defined for Toeplitz matrices")
    if s < 1:
        raise IndexError("rank parameter must be at least 1")
    if s > min(A.rows, A.cols):
        return False
    return (
        rank_exact(A) == s
        and corner_minors_nonzero(A, s)
        and contiguous_s_minors_nonzero(A, s)
    )


def classify_max_toeplitz(F: BivariateForm) -> TPReport:
    """Full minor report of the maximal coefficient Toeplitz matrix of F
    (the one of degree index floor(d/2))."""
    if F.is_zero:
        raise ZeroFormError("the zero form has no Toeplitz classification")
    sperner_number(F)  # raises on pathological input before the scan
    return scan_all_minors(toeplitz(F, F.degree // 2))
