"""Explicit triangular multigraph realizations.

Four constructions cover every sequence with ``n >= 3``, all degrees at
least 4, even sum and ``d1 <= sum_{i>=2} (d_i - 1)``:

* the fan: ``v1`` joined to everything, plus rim edges pairing up the
  remaining vertices (needs ``D >= n - 2``);
* the cycle square: ``C_n`` plus all distance-2 chords with adjusted
  multiplicities, patched near ``v1`` for even ``n`` (needs ``D <= 4``);
* a hand-made graph for ``n = 4, D = 0``;
* for ``6 <= D <= n - 3``, a fan on ``v1`` and the last ``2k`` (or ``2k + 1``)
  vertices glued at ``v1`` to a cycle square on the rest.

``D`` is the alternating sum ``d1 - d2 + d3 - ...``. The fan and cycle
square accept sequences whose first entry is arbitrary (it need not be the
largest), which is what makes the gluing possible.

Every construction records a :class:`ConstructionCertificate`; feeding it to
:func:`replay` rebuilds the identical graph without re-deriving parameters.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional, Tuple

import numpy as np

from .errors import InternalError, NotRealizable, PreconditionViolated
from .multigraph import Multigraph, check_triangular, degree_array, union_on_shared_vertex
from .sequence import (
    DegreeSequence,
    SequenceLike,
    alternating_sum,
    as_int_array,
    canonicalize,
    check_triangular_conditions,
)


class Branch(str, enum.Enum):
    FanOdd = "FanOdd"
    FanEvenK1 = "FanEvenK1"
    FanEvenKGt1 = "FanEvenKGt1"
    CycleSquareOdd = "CycleSquareOdd"
    CycleSquareD0 = "CycleSquareD0"
    CycleSquareD2 = "CycleSquareD2"
    CycleSquareD4 = "CycleSquareD4"
    SmallN3 = "SmallN3"
    SmallN4D0 = "SmallN4D0"
    SplitOdd = "SplitOdd"
    SplitEven = "SplitEven"

    def __str__(self) -> str:
        return self.value


FAN_BRANCHES = frozenset({Branch.FanOdd, Branch.FanEvenK1, Branch.FanEvenKGt1, Branch.SmallN3})
CYCLE_BRANCHES = frozenset({Branch.CycleSquareOdd, Branch.CycleSquareD0,
                            Branch.CycleSquareD2, Branch.CycleSquareD4})
SPLIT_BRANCHES = frozenset({Branch.SplitOdd, Branch.SplitEven})


def _eq(a, b) -> bool:
    if a is None or b is None:
        return a is b
    return np.array_equal(np.asarray(a), np.asarray(b))


def _ro(a) -> Optional[np.ndarray]:
    if a is None:
        return None
    a = np.array(a, dtype=np.int64)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class ConstructionParams:
    D: int
    k: Optional[int] = None
    delta: Optional[int] = None
    alpha: Optional[int] = None
    beta: Optional[int] = None
    dbar: Optional[np.ndarray] = None
    dprime: Optional[np.ndarray] = None
    Dsuffix: Optional[np.ndarray] = None

    def __post_init__(self):
        for name in ("dbar", "dprime", "Dsuffix"):
            object.__setattr__(self, name, _ro(getattr(self, name)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, ConstructionParams):
            return NotImplemented
        return (self.D, self.k, self.delta, self.alpha, self.beta) == \
            (other.D, other.k, other.delta, other.alpha, other.beta) and \
            all(_eq(getattr(self, f), getattr(other, f)) for f in ("dbar", "dprime", "Dsuffix"))

    def to_dict(self) -> dict:
        out = {}
        for name in ("D", "k", "delta", "alpha", "beta"):
            val = getattr(self, name)
            if val is not None:
                out[name] = int(val)
        for name in ("dbar", "dprime", "Dsuffix"):
            val = getattr(self, name)
            if val is not None:
                out[name] = val.tolist()
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "ConstructionParams":
        return cls(**{k: data.get(k) for k in
                      ("D", "k", "delta", "alpha", "beta", "dbar", "dprime", "Dsuffix")})


@dataclass(frozen=True, eq=False)
class SplitInfo:
    """How a split realization was glued: ``a`` is the fan side, ``b`` the cycle-square side.

    The fan lives on ``v1`` and ``v_tail_start..v_n``; the cycle square on
    ``v1..v_{tail_start - 1}``.
    """

    a_seq: np.ndarray
    b_seq: np.ndarray
    shared_vertex: int
    tail_start: int
    a_certificate: "ConstructionCertificate"
    b_certificate: "ConstructionCertificate"

    def __post_init__(self):
        object.__setattr__(self, "a_seq", _ro(self.a_seq))
        object.__setattr__(self, "b_seq", _ro(self.b_seq))

    def __eq__(self, other) -> bool:
        if not isinstance(other, SplitInfo):
            return NotImplemented
        return (_eq(self.a_seq, other.a_seq) and _eq(self.b_seq, other.b_seq)
                and self.shared_vertex == other.shared_vertex
                and self.tail_start == other.tail_start
                and self.a_certificate == other.a_certificate
                and self.b_certificate == other.b_certificate)

    def to_dict(self) -> dict:
        return {
            "a_seq": self.a_seq.tolist(),
            "b_seq": self.b_seq.tolist(),
            "shared_vertex": self.shared_vertex,
            "tail_start": self.tail_start,
            "a_certificate": self.a_certificate.to_dict(),
            "b_certificate": self.b_certificate.to_dict(),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SplitInfo":
        return cls(
            a_seq=data["a_seq"],
            b_seq=data["b_seq"],
            shared_vertex=int(data["shared_vertex"]),
            tail_start=int(data["tail_start"]),
            a_certificate=ConstructionCertificate.from_dict(data["a_certificate"]),
            b_certificate=ConstructionCertificate.from_dict(data["b_certificate"]),
        )


@dataclass(frozen=True, eq=False)
class ConstructionCertificate:
    """Which construction produced a graph, on which degrees, with which parameters."""

    branch: Branch
    degrees: np.ndarray
    params: ConstructionParams
    split: Optional[SplitInfo] = None

    def __post_init__(self):
        object.__setattr__(self, "branch", Branch(self.branch))
        object.__setattr__(self, "degrees", _ro(self.degrees))
        if (self.split is not None) != (self.branch in SPLIT_BRANCHES):
            raise ValueError("split info is required exactly for split branches")

    def __eq__(self, other) -> bool:
        if not isinstance(other, ConstructionCertificate):
            return NotImplemented
        return (self.branch == other.branch and _eq(self.degrees, other.degrees)
                and self.params == other.params and self.split == other.split)

    def to_dict(self) -> dict:
        out = {"branch": self.branch.value, "degrees": self.degrees.tolist(),
               "params": self.params.to_dict()}
        if self.split is not None:
            out["split"] = self.split.to_dict()
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "ConstructionCertificate":
        split = data.get("split")
        return cls(
            branch=Branch(data["branch"]),
            degrees=data["degrees"],
            params=ConstructionParams.from_dict(data["params"]),
            split=SplitInfo.from_dict(split) if split is not None else None,
        )


# ---------------------------------------------------------------------------
# preconditions


def _padded(seq) -> np.ndarray:
    """1-based view: ``d[i]`` is the degree of ``v_i``; ``d[0]`` is unused."""
    arr = seq.degrees if isinstance(seq, DegreeSequence) else as_int_array(seq)
    return np.concatenate(([0], arr))


def _check_tail(d: np.ndarray, min_n: int) -> int:
    n = d.size - 1
    if n < min_n:
        raise PreconditionViolated(f"n_at_least_{min_n}", f"n={n}")
    tail = d[2:]
    if not bool(np.all(tail[:-1] >= tail[1:])):
        raise PreconditionViolated("tail_descending", "d2 >= ... >= dn must hold")
    if int(tail[-1]) < 4:
        raise PreconditionViolated("tail_min_degree", f"dn={int(tail[-1])} < 4")
    if int(d[1]) < 0:
        raise PreconditionViolated("d1_nonnegative")
    return n


def _check_fan(d: np.ndarray) -> Tuple[int, int]:
    n = _check_tail(d, 3)
    total = int(d.sum())
    if total % 2:
        raise PreconditionViolated("parity", f"sum={total}")
    rest = total - int(d[1])
    if int(d[1]) > rest - (n - 1):
        raise PreconditionViolated("d1_bound", f"d1={int(d[1])} > {rest - (n - 1)}")
    D = alternating_sum(d[1:])
    if D < n - 2:
        raise PreconditionViolated("D_at_least_n_minus_2", f"D={D}, n={n}")
    if n % 2 == 0 and int(d[1]) > rest - n:
        # implied by parity and the d1 bound for even n
        raise InternalError("even_fan_bound", f"d1={int(d[1])} > {rest - n}")
    return n, D


def _check_cycle_square(d: np.ndarray) -> Tuple[int, int]:
    n = _check_tail(d, 5)
    D = alternating_sum(d[1:])
    allowed = (4,) if n % 2 else (0, 2, 4)
    if D not in allowed:
        raise PreconditionViolated("D_value", f"D={D} not in {allowed} for n={n}")
    return n, D


# ---------------------------------------------------------------------------
# fan


def _fan_blocks(d, top, bot, k, delta):
    """Spokes and rim edges for consecutive pairs ``(bot[j], top[j])``.

    Block ``j + 1 < k`` loads the spokes, blocks after ``k`` load the rim
    edge, and block ``k`` splits the excess ``delta`` between them.
    """
    j = np.arange(1, top.size + 1)
    dt, db = d[top], d[bot]
    before, after = j < k, j > k
    spoke_top = np.where(before, dt - 1, np.where(after, 1, 1 + delta))
    spoke_bot = np.where(before, db - 1, np.where(after, 1 + db - dt, 1 + delta + db - dt))
    rim = np.where(before, 1, np.where(after, dt - 1, dt - 1 - delta))
    ones = np.ones_like(top)
    return (np.concatenate((ones, ones, bot)),
            np.concatenate((top, bot, top)),
            np.concatenate((spoke_top, spoke_bot, rim)))


def _fan_parameters(d: np.ndarray, n: int, D: int) -> ConstructionParams:
    if n % 2:
        tops = np.arange(n, 1, -2)  # v_n, v_{n-2}, ..., v_3
        dbar = d[tops] - 2
        target = (D - (n - 1)) // 2
    else:
        tops = np.arange(n - 1, 1, -2)  # v_{n-1}, v_{n-3}, ..., v_3
        dbar = d[tops] - 2
        dbar[0] -= 1
        target = (D - (n - 2)) // 2
    prefix = np.cumsum(dbar)
    # smallest k with prefix[k-1] <= target <= prefix[k]
    k = int(np.searchsorted(prefix, target, side="left")) + 1
    if k > dbar.size:
        raise InternalError("fan_index", f"target {target} exceeds {int(prefix[-1])}")
    delta = target - (int(prefix[k - 2]) if k > 1 else 0)
    alpha = beta = None
    if n % 2 == 0 and k == 1:
        alpha = min(delta, int(d[n]) - 3)
        beta = delta - alpha
    return ConstructionParams(D=D, k=k, delta=delta, alpha=alpha, beta=beta, dbar=dbar)


def _emit_fan(d: np.ndarray, p: ConstructionParams) -> Multigraph:
    n = d.size - 1
    k, delta = p.k, p.delta
    if n % 2:
        top = np.arange(n, 1, -2)
        us, vs, ms = _fan_blocks(d, top, top - 1, k, delta)
    else:
        if k == 1:
            a, b = p.alpha, p.beta
            head = [
                (1, n, 2 + a),
                (1, n - 1, 1 + a + b),
                (1, n - 2, int(d[n - 2] - d[n - 1] + d[n]) - 1 + b),
                (n - 1, n, int(d[n]) - 2 - a),
                (n - 2, n - 1, int(d[n - 1] - d[n]) + 1 - b),
            ]
        else:
            head = [
                (1, n, int(d[n]) - 1),
                (1, n - 1, int(d[n - 1]) - 2),
                (1, n - 2, int(d[n - 2]) - 1),
                (n - 1, n, 1),
                (n - 2, n - 1, 1),
            ]
        # blocks 2..(n-2)/2 pair v_{n-2i} with v_{n-2i+1}; relative to them
        # the chosen block is k - 1 (a k of 1 puts every block after it)
        top = np.arange(n - 3, 1, -2)
        us, vs, ms = _fan_blocks(d, top, top - 1, k - 1, delta)
        hu, hv, hm = (np.array(c, dtype=np.int64) for c in zip(*head))
        us, vs, ms = np.concatenate((hu, us)), np.concatenate((hv, vs)), np.concatenate((hm, ms))
    if ms.size and int(ms.min()) < 1:
        raise InternalError("fan_multiplicity", f"non-positive multiplicity {int(ms.min())}")
    return Multigraph.from_arrays(n, us, vs, ms)


def _fan_branch(n: int, k: int) -> Branch:
    if n % 2:
        return Branch.FanOdd
    return Branch.FanEvenK1 if k == 1 else Branch.FanEvenKGt1


def construct_fan(seq: SequenceLike) -> Tuple[Multigraph, ConstructionCertificate]:
    """Fan realization centred on ``v1``; requires ``D >= n - 2``."""
    d = _padded(seq)
    n, D = _check_fan(d)
    params = _fan_parameters(d, n, D)
    cert = ConstructionCertificate(_fan_branch(n, params.k), d[1:], params)
    return _emit_fan(d, params), cert


# ---------------------------------------------------------------------------
# cycle square


def _suffix_alternating(dprime: np.ndarray) -> np.ndarray:
    """``D_i = sum_{j>=i} (-1)^(j-i) d'_j`` for ``i = 2..n``, from a 1-based ``dprime``."""
    n = dprime.size - 1
    j = np.arange(2, n + 1)
    signed = np.where(j % 2 == 0, 1, -1) * dprime[2:]
    suffix = np.cumsum(signed[::-1])[::-1]
    return np.where(j % 2 == 0, 1, -1) * suffix


def _emit_cycle_square(d: np.ndarray, p: ConstructionParams) -> Multigraph:
    n = d.size - 1
    Dsuf = p.Dsuffix  # Dsuf[i - 2] = D_i
    i = np.arange(1, n)
    cyc_u, cyc_v, cyc_m = i, i + 1, 1 + Dsuf[i - 1]
    sq_u = np.arange(1, n + 1)
    sq_v = (sq_u + 1) % n + 1  # i + 2 taken mod n, labels 1..n
    sq_m = np.ones(n, dtype=np.int64)
    extra_u, extra_v, extra_m = [1], [n], [1]  # the cycle edge v_n v_1
    if n % 2 == 0 and p.D in (2, 4):
        extra_m[0] += 1
        cyc_m = cyc_m.copy()
        cyc_m[0] += p.D // 2  # m(v1, v2) rises by 1 for D=2, by 2 for D=4
        drop = sq_u == n  # {v_n, v_2}
        if p.D == 4:
            drop |= sq_u == 2  # {v_2, v_4}
            extra_u.append(1)
            extra_v.append(4)
            extra_m.append(1)
        sq_u, sq_v, sq_m = sq_u[~drop], sq_v[~drop], sq_m[~drop]
    us = np.concatenate((cyc_u, sq_u, extra_u))
    vs = np.concatenate((cyc_v, sq_v, extra_v))
    ms = np.concatenate((cyc_m, sq_m, extra_m))
    if int(ms.min()) < 1:
        raise InternalError("cycle_square_multiplicity", f"non-positive multiplicity {int(ms.min())}")
    return Multigraph.from_arrays(n, us, vs, ms)


def _cycle_branch(n: int, D: int) -> Branch:
    if n % 2:
        return Branch.CycleSquareOdd
    return {0: Branch.CycleSquareD0, 2: Branch.CycleSquareD2, 4: Branch.CycleSquareD4}[D]


def construct_cycle_square(seq: SequenceLike) -> Tuple[Multigraph, ConstructionCertificate]:
    """Square-of-cycle realization; requires ``D = 4`` (odd n) or ``D in {0, 2, 4}`` (even n)."""
    d = _padded(seq)
    n, D = _check_cycle_square(d)
    dprime = d - 4
    dprime[0] = 0
    Dsuf = _suffix_alternating(dprime)
    if int(Dsuf.min()) < 0:
        raise InternalError("suffix_sum", "negative suffix alternating sum")
    params = ConstructionParams(D=D, dprime=dprime[1:], Dsuffix=Dsuf)
    cert = ConstructionCertificate(_cycle_branch(n, D), d[1:], params)
    return _emit_cycle_square(d, params), cert


# ---------------------------------------------------------------------------
# n = 3, 4


def _emit_small4(d: np.ndarray) -> Multigraph:
    return Multigraph(4, [(1, 2, int(d[1]) - 2), (3, 4, int(d[3]) - 2),
                          (1, 3, 1), (1, 4, 1), (2, 3, 1), (2, 4, 1)])


def construct_small_n(seq: SequenceLike) -> Tuple[Multigraph, ConstructionCertificate]:
    """Realizations for three or four vertices.

    ``n = 3`` is always a fan (recorded as ``SmallN3``); ``n = 4`` is a fan
    unless ``D = 0``, which forces ``d1 = d2`` and ``d3 = d4``.
    """
    s = canonicalize(seq)
    if s.n not in (3, 4):
        raise PreconditionViolated("n_in_3_4", f"n={s.n}")
    report = check_triangular_conditions(s)
    if not report.triangular_ok:
        raise PreconditionViolated(report.first_failure())
    d = _padded(s)
    D = alternating_sum(s)
    if s.n == 3:
        g, cert = construct_fan(s)
        return g, ConstructionCertificate(Branch.SmallN3, cert.degrees, cert.params)
    if D >= 2:
        return construct_fan(s)
    if not (d[1] == d[2] and d[3] == d[4]):
        raise InternalError("small_n", "D = 0 without d1 = d2 and d3 = d4")
    cert = ConstructionCertificate(Branch.SmallN4D0, d[1:], ConstructionParams(D=0))
    return _emit_small4(d), cert


# ---------------------------------------------------------------------------
# split


def split_sequences(seq: SequenceLike) -> Tuple[np.ndarray, np.ndarray, int]:
    """Split a sequence with ``6 <= D <= n - 3`` into a fan part and a cycle-square part.

    Returns ``(a, b, k)`` with ``k = (D - 4) / 2``. ``a`` is the degree
    sequence on ``v1`` followed by the tail vertices (the last ``2k`` for
    odd ``n``, the last ``2k + 1`` for even ``n``); ``b`` is on ``v1`` and the
    remaining head. ``a[0] + b[0] == d1``.
    """
    s = canonicalize(seq)
    report = check_triangular_conditions(s)
    if not report.triangular_ok:
        raise PreconditionViolated(report.first_failure())
    return _split(_padded(s), alternating_sum(s))


def _split(d: np.ndarray, D: int) -> Tuple[np.ndarray, np.ndarray, int]:
    n = d.size - 1
    if not 6 <= D <= n - 3:
        raise PreconditionViolated("D_in_6_to_n_minus_3", f"D={D}, n={n}")
    k = (D - 4) // 2
    start = n - 2 * k + 1 if n % 2 else n - 2 * k
    idx = np.arange(2, n + 1)
    signed = np.where(idx % 2 == 0, 1, -1) * d[2:]  # (-1)^i d_i
    tail_sum = int(signed[start - 2:].sum())
    head_sum = int(signed[: start - 2].sum())
    a = np.concatenate(([2 * k + tail_sum], d[start:]))
    b = np.concatenate(([4 + head_sum], d[2:start]))
    if int(a[0]) + int(b[0]) != int(d[1]):
        raise InternalError("split", "a1 + b1 != d1")
    return a, b, k


def _construct_split(s: DegreeSequence, D: int) -> Tuple[Multigraph, ConstructionCertificate]:
    n = s.n
    a, b, k = _split(_padded(s), D)
    start = n - a.size + 2
    g_a, cert_a = construct_fan(a)
    g_b, cert_b = construct_cycle_square(b)
    relabel = np.concatenate(([1], np.arange(start, n + 1)))
    g = union_on_shared_vertex(g_b, g_a, relabel)
    info = SplitInfo(a, b, 1, start, cert_a, cert_b)
    branch = Branch.SplitOdd if n % 2 else Branch.SplitEven
    cert = ConstructionCertificate(branch, s.degrees, ConstructionParams(D=D, k=k), split=info)
    return g, cert


# ---------------------------------------------------------------------------
# dispatch


def replay(cert: ConstructionCertificate) -> Multigraph:
    """Rebuild the graph a certificate describes, using its recorded parameters."""
    d = np.concatenate(([0], cert.degrees))
    if cert.branch in FAN_BRANCHES:
        return _emit_fan(d, cert.params)
    if cert.branch in CYCLE_BRANCHES:
        return _emit_cycle_square(d, cert.params)
    if cert.branch is Branch.SmallN4D0:
        return _emit_small4(d)
    info = cert.split
    n = cert.degrees.size
    relabel = np.concatenate(([1], np.arange(info.tail_start, n + 1)))
    return union_on_shared_vertex(replay(info.b_certificate), replay(info.a_certificate), relabel)


def dispatch(s: DegreeSequence) -> Tuple[Multigraph, ConstructionCertificate]:
    """Choose and run a construction for a sorted sequence meeting all conditions.

    Order: ``n <= 4`` small cases, then the fan when ``D >= n - 2`` (it wins
    ties with the cycle square), then the cycle square for ``D <= 4``, then
    the split.
    """
    n = s.n
    D = alternating_sum(s)
    if n in (3, 4):
        return construct_small_n(s)
    if D >= n - 2:
        return construct_fan(s)
    if D <= 4:
        return construct_cycle_square(s)
    return _construct_split(s, D)


def verify(g: Multigraph, degrees: np.ndarray) -> None:
    """Raise InternalError unless ``g`` has exactly ``degrees`` and is triangular."""
    got = degree_array(g)
    if got.size != degrees.size or not np.array_equal(got, degrees):
        bad = int(np.flatnonzero(got != degrees)[0]) + 1 if got.size == degrees.size else -1
        raise InternalError("degree", f"at vertex {bad}")
    tri = check_triangular(g)
    if not tri.is_triangular:
        raise InternalError("triangularity", f"edge {tri.uncovered_edge} lies in no triangle")


CONSTRUCTIONS = ("auto", "fan", "cycle-square", "small-n")


def realize(seq: SequenceLike, original_order: bool = True,
            construction: str = "auto") -> Tuple[Multigraph, ConstructionCertificate]:
    """Build and verify a triangular multigraph with the given degrees.

    The certificate describes the graph on the sorted sequence; with
    ``original_order`` the returned graph is relabelled so that vertex ``i``
    carries the ``i``-th input degree.  ``construction`` forces a single
    family instead of the automatic choice and raises
    ``PreconditionViolated`` when that family does not apply.
    """
    if construction not in CONSTRUCTIONS:
        raise ValueError(f"unknown construction {construction!r}")
    s = canonicalize(seq)
    report = check_triangular_conditions(s)
    if not report.triangular_ok:
        raise NotRealizable(report)
    if construction == "auto":
        g, cert = dispatch(s)
    else:
        build = {"fan": construct_fan, "cycle-square": construct_cycle_square,
                 "small-n": construct_small_n}[construction]
        g, cert = build(s.degrees)
    verify(g, s.degrees)
    if original_order and not s.is_identity():
        g = g.relabel(s.perm, n=s.n)
    return g, cert
