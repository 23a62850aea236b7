"""Degree sequences and the sequence-level predicates.

All arithmetic is on int64 numpy arrays. Inputs whose degree sum reaches
2**62 are rejected so that every partial sum below stays in range.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Optional, Sequence, Union

import numpy as np

from .errors import EmptyInput, NegativeEntry, Overflow, ZeroDegreePresent

SUM_LIMIT = 1 << 62


def _frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


def as_int_array(raw) -> np.ndarray:
    """Convert ``raw`` to a fresh int64 array, rejecting non-integers and huge values."""
    if isinstance(raw, DegreeSequence):
        return raw.degrees.copy()
    try:
        arr = np.asarray(raw)
    except OverflowError as exc:  # pragma: no cover - numpy raises lazily below
        raise Overflow(str(exc)) from None
    if arr.ndim != 1:
        raise ValueError("degree sequence must be one-dimensional")
    if arr.size == 0:
        return np.zeros(0, dtype=np.int64)
    if arr.dtype == object:
        # Python ints beyond int64 end up here
        if not all(isinstance(x, (int, np.integer)) and not isinstance(x, bool) for x in arr):
            raise TypeError("degree sequence entries must be integers")
        if any(abs(int(x)) >= SUM_LIMIT for x in arr):
            raise Overflow("entry does not fit in 62 bits")
        arr = arr.astype(np.int64)
    elif arr.dtype.kind == "b" or arr.dtype.kind not in "iu":
        raise TypeError("degree sequence entries must be integers")
    if arr.dtype.kind == "u" and arr.size and int(arr.max()) >= SUM_LIMIT:
        raise Overflow("entry does not fit in 62 bits")
    return arr.astype(np.int64, copy=True)


def _check_sum(arr: np.ndarray) -> None:
    if arr.size == 0:
        return
    top = int(arr.max())
    if top >= SUM_LIMIT or top * arr.size >= SUM_LIMIT:
        # slow exact path only when int64 accumulation could wrap
        if sum(int(x) for x in arr) >= SUM_LIMIT:
            raise Overflow("degree sum must stay below 2**62")


@dataclass(frozen=True, eq=False)
class DegreeSequence:
    """Degrees sorted non-increasingly, with ``perm[i]`` the 1-based input
    position of the vertex now at sorted position ``i + 1``."""

    degrees: np.ndarray
    perm: np.ndarray

    @property
    def n(self) -> int:
        return int(self.degrees.size)

    def tolist(self) -> list[int]:
        return self.degrees.tolist()

    def is_identity(self) -> bool:
        return bool(np.array_equal(self.perm, np.arange(1, self.n + 1)))

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other) -> bool:
        if not isinstance(other, DegreeSequence):
            return NotImplemented
        return np.array_equal(self.degrees, other.degrees) and np.array_equal(self.perm, other.perm)

    def __hash__(self) -> int:
        return hash((tuple(self.degrees.tolist()), tuple(self.perm.tolist())))

    def __repr__(self) -> str:
        if self.n <= 12:
            return f"DegreeSequence({self.degrees.tolist()}, perm={self.perm.tolist()})"
        return f"DegreeSequence(n={self.n}, d1={int(self.degrees[0])}, dn={int(self.degrees[-1])})"


SequenceLike = Union[DegreeSequence, Sequence[int], np.ndarray]


def canonicalize(raw: SequenceLike) -> DegreeSequence:
    """Sort ``raw`` descending (stable) and remember where each entry came from.

    >>> canonicalize([4, 6, 5])
    DegreeSequence([6, 5, 4], perm=[2, 3, 1])
    """
    if isinstance(raw, DegreeSequence):
        return raw
    arr = as_int_array(raw)
    if arr.size == 0:
        raise EmptyInput("degree sequence is empty")
    neg = np.flatnonzero(arr < 0)
    if neg.size:
        raise NegativeEntry(int(neg[0]) + 1)
    _check_sum(arr)
    if arr.size == 1 or bool(np.all(arr[:-1] >= arr[1:])):
        order = np.arange(arr.size)
    else:
        order = np.argsort(-arr, kind="stable")
    return DegreeSequence(_frozen(arr[order]), _frozen(order.astype(np.int64) + 1))


def degrees_of(seq: SequenceLike) -> np.ndarray:
    if isinstance(seq, DegreeSequence):
        return seq.degrees
    arr = as_int_array(seq)
    _check_sum(arr)
    return arr


def alternating_sum(seq: SequenceLike) -> int:
    """Return d1 - d2 + d3 - ... over the sequence in its given order."""
    d = degrees_of(seq)
    return int(d[0::2].sum()) - int(d[1::2].sum())


@dataclass(frozen=True)
class ValidationReport:
    ordering_ok: bool
    parity_ok: bool
    d1_bound_ok: bool
    min_degree_ok: bool
    erdos_gallai_ok: Optional[bool] = None
    failing_k: Optional[int] = None

    def __post_init__(self):
        if (self.failing_k is not None) != (self.erdos_gallai_ok is False):
            raise ValueError("failing_k must be set exactly when erdos_gallai_ok is False")

    @property
    def triangular_ok(self) -> bool:
        """Whether the necessary-and-sufficient multigraph conditions all hold."""
        return self.ordering_ok and self.parity_ok and self.d1_bound_ok and self.min_degree_ok

    def first_failure(self) -> Optional[str]:
        for name in ("ordering", "parity", "d1_bound", "min_degree"):
            if not getattr(self, f"{name}_ok"):
                return name
        if self.erdos_gallai_ok is False:
            return "erdos_gallai"
        return None

    def to_dict(self) -> dict:
        return asdict(self)


def check_triangular_conditions(seq: SequenceLike) -> ValidationReport:
    """Evaluate ordering, parity, the d1 bound and the minimum-degree condition.

    Accepts a DegreeSequence or a raw sequence (whose order is then
    checked as given).
    """
    d = degrees_of(seq)
    n = int(d.size)
    if n == 0:
        raise EmptyInput("degree sequence is empty")
    total = int(d.sum())
    d1 = int(d[0])
    return ValidationReport(
        ordering_ok=bool(np.all(d[:-1] >= d[1:])),
        parity_ok=total % 2 == 0,
        d1_bound_ok=d1 <= (total - d1) - (n - 1),
        min_degree_ok=n >= 3 and int(d.min()) >= 4,
    )


def strip_zeros(seq: SequenceLike) -> DegreeSequence:
    s = canonicalize(seq)
    keep = s.degrees > 0
    return DegreeSequence(_frozen(s.degrees[keep]), _frozen(s.perm[keep]))


def erdos_gallai_violation(d: np.ndarray) -> int:
    """Smallest k violating the Erdős–Gallai inequality for descending ``d``, or -1."""
    n = d.size
    k = np.arange(1, n + 1, dtype=np.int64)
    prefix = np.cumsum(d)
    total = int(prefix[-1])
    # p[k-1] = #{i : d_i >= k}; d is descending so these are the first p entries
    asc = d[::-1]
    p = n - np.searchsorted(asc, k, side="left")
    c = np.maximum(k, p)
    # sum_{i>k} min(d_i, k) = k * (c - k) + sum_{i>c} d_i
    tail = total - np.concatenate(([0], prefix))[c]
    rhs = k * (k - 1) + k * (c - k) + tail
    bad = np.flatnonzero(prefix > rhs)
    return int(bad[0]) + 1 if bad.size else -1


def check_erdos_gallai(seq: SequenceLike) -> ValidationReport:
    """Decide whether ``seq`` is graphical.

    ``failing_k`` is 0 when the degree sum is odd, otherwise the smallest
    k whose inequality fails. Zero degrees must be stripped by the caller.
    """
    s = canonicalize(seq)
    d = s.degrees
    if int(d[-1]) == 0:
        raise ZeroDegreePresent("Erdős–Gallai check requires positive degrees; strip zeros first")
    base = check_triangular_conditions(s)
    if not base.parity_ok:
        k = 0
    else:
        k = erdos_gallai_violation(d)
    ok = k == -1
    return ValidationReport(
        ordering_ok=base.ordering_ok,
        parity_ok=base.parity_ok,
        d1_bound_ok=base.d1_bound_ok,
        min_degree_ok=base.min_degree_ok,
        erdos_gallai_ok=ok,
        failing_k=None if ok else k,
    )
