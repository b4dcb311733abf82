"""Labeling value types and pure verifiers.

Covers every labeling notion the library searches for: super edge-magic
(via the consecutive-edge-sums criterion), gap of an integer set, strength
of a numbering, graceful labelings and their boundary variant, harmonious
and sequential labelings.

All functions here are pure and all types immutable; unrestricted
concurrent use is safe.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .graphs import Graph, is_tree


class LabelingError(ValueError):
    """A labeling violates a structural precondition."""


class NotBijectiveError(LabelingError):
    """Labels are not a bijection onto the required interval."""


class DuplicateSumsError(LabelingError):
    """Two edges induce the same endpoint sum."""


class NonConsecutiveSumsError(LabelingError):
    """Edge sums are duplicate-free but do not form a consecutive run."""


@dataclass(frozen=True)
class VertexLabeling:
    """Injective map vertex -> positive integer, stored as values[v]."""

    values: tuple[int, ...]

    def __post_init__(self):
        vals = tuple(self.values)
        object.__setattr__(self, "values", vals)
        if any(x < 1 for x in vals):
            raise LabelingError("vertex labels must be positive")
        if len(set(vals)) != len(vals):
            raise LabelingError("vertex labels must be injective")

    def __getitem__(self, v: int) -> int:
        return self.values[v]

    def __len__(self) -> int:
        return len(self.values)

    def shifted(self, c: int) -> "VertexLabeling":
        return VertexLabeling(tuple(x + c for x in self.values))


@dataclass(frozen=True)
class Numbering:
    """Bijection of the p vertices onto [1, p]."""

    values: tuple[int, ...]

    def __post_init__(self):
        vals = tuple(self.values)
        object.__setattr__(self, "values", vals)
        if sorted(vals) != list(range(1, len(vals) + 1)):
            raise NotBijectiveError("numbering must be a bijection onto [1, p]")

    def __getitem__(self, v: int) -> int:
        return self.values[v]


@dataclass(frozen=True)
class GracefulLabeling:
    """Injective vertex map into [0, q]; `boundary` is the split value of a
    boundary-valuation (every edge has its smaller endpoint label <= boundary
    and its larger one > boundary)."""

    values: tuple[int, ...]
    boundary: int | None = None

    def __post_init__(self):
        vals = tuple(self.values)
        object.__setattr__(self, "values", vals)
        if len(set(vals)) != len(vals):
            raise LabelingError("graceful labels must be injective")
        if any(x < 0 for x in vals):
            raise LabelingError("graceful labels must be >= 0")

    def __getitem__(self, v: int) -> int:
        return self.values[v]


@dataclass(frozen=True)
class ModularLabeling:
    """Vertex labels used modulo q; trees may repeat at most one value once."""

    values: tuple[int, ...]
    repeat_allowance: int = 0

    def __post_init__(self):
        vals = tuple(self.values)
        object.__setattr__(self, "values", vals)
        if self.repeat_allowance not in (0, 1):
            raise LabelingError("repeat allowance must be 0 or 1")
        if any(x < 0 for x in vals):
            raise LabelingError("labels must be >= 0")
        extra = len(vals) - len(set(vals))
        if extra > self.repeat_allowance:
            raise LabelingError(
                f"{extra} repeated labels exceed allowance {self.repeat_allowance}"
            )

    def __getitem__(self, v: int) -> int:
        return self.values[v]


Labels = Union[Sequence[int], VertexLabeling, Numbering, GracefulLabeling, ModularLabeling]

SumSet = tuple[int, ...]


def _values(f: Labels) -> tuple[int, ...]:
    if isinstance(f, (VertexLabeling, Numbering, GracefulLabeling, ModularLabeling)):
        return f.values
    return tuple(f)


def sum_set(g: Graph, f: Labels) -> SumSet:
    """Sorted multiset of the q edge sums f(u) + f(v)."""
    vals = _values(f)
    if len(vals) < g.p:
        raise LabelingError(f"labeling covers {len(vals)} of {g.p} vertices")
    return tuple(sorted(vals[u] + vals[v] for u, v in g.edges))


def gap(s: Iterable[int]) -> int:
    """(max - min + 1) - |s| for a nonempty duplicate-free set of integers."""
    items = list(s)
    if not items:
        raise ValueError("gap is undefined for the empty set")
    if len(set(items)) != len(items):
        raise ValueError("gap is defined on sets; duplicates present")
    return (max(items) - min(items) + 1) - len(items)


def is_consecutive(s: Iterable[int]) -> bool:
    """True iff the set is a run of consecutive integers (gap zero)."""
    return gap(s) == 0


@dataclass(frozen=True)
class SemCertificate:
    """Checkable witness that a graph plus `isolated` extra vertices is
    super edge-magic: a bijective labeling onto [1, order+isolated] whose
    edge sums are the consecutive run [s, s+q-1], with magic constant
    k = (order+isolated) + q + s."""

    order: int
    isolated: int
    labels: tuple[int, ...]
    sums: tuple[int, ...]
    s: int
    k: int

    def to_json_dict(self) -> dict:
        return {
            "order": self.order,
            "isolated": self.isolated,
            "labels": list(self.labels),
            "sums": list(self.sums),
            "s": self.s,
            "k": self.k,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"

    @staticmethod
    def from_json_dict(data: dict) -> "SemCertificate":
        try:
            return SemCertificate(
                order=int(data["order"]),
                isolated=int(data["isolated"]),
                labels=tuple(int(x) for x in data["labels"]),
                sums=tuple(int(x) for x in data["sums"]),
                s=int(data["s"]),
                k=int(data["k"]),
            )
        except (KeyError, TypeError) as exc:
            raise LabelingError(f"malformed certificate: {exc}") from exc


def verify_sem(g: Graph, f: Labels, isolated_count: int = 0) -> SemCertificate:
    """Check the consecutive-sums criterion and build the certificate.

    `f` must label the p graph vertices (optionally followed by labels for
    the isolated vertices); all together the labels must be a bijection onto
    [1, p + isolated_count]; when only the graph vertices are labelled the
    leftover labels go to the isolated vertices in ascending order.

    Raises NotBijectiveError / DuplicateSumsError / NonConsecutiveSumsError
    so callers can tell the failure modes apart.
    """
    if isolated_count < 0:
        raise ValueError("isolated_count must be >= 0")
    vals = _values(f)
    total = g.p + isolated_count
    if len(vals) not in (g.p, total):
        raise NotBijectiveError(
            f"expected labels for {g.p} or {total} vertices, got {len(vals)}"
        )
    if len(set(vals)) != len(vals) or any(not 1 <= x <= total for x in vals):
        raise NotBijectiveError(
            f"labels are not injective into [1, {total}]"
        )
    if len(vals) == g.p:
        leftover = sorted(set(range(1, total + 1)) - set(vals))
        full = vals + tuple(leftover)
    else:
        full = vals
    if sorted(full) != list(range(1, total + 1)):
        raise NotBijectiveError(f"labels are not a bijection onto [1, {total}]")

    sums = sum_set(g, full[: g.p])
    if g.q == 0:
        return SemCertificate(g.p, isolated_count, full, (), 0, total)
    if len(set(sums)) != len(sums):
        raise DuplicateSumsError(f"duplicate edge sums in {sums}")
    lo, hi = sums[0], sums[-1]
    if hi - lo + 1 != g.q:
        raise NonConsecutiveSumsError(
            f"edge sums span [{lo}, {hi}] but there are only {g.q} edges"
        )
    s = lo
    k = total + g.q + s
    assert sums == tuple(range(k - (total + g.q), k - (total + 1) + 1))
    return SemCertificate(g.p, isolated_count, full, sums, s, k)


def recheck_sem_certificate(g: Graph, data: dict) -> SemCertificate:
    """Independently re-validate a serialized certificate against a graph.

    Recomputes everything from the labels and the graph; any field that
    disagrees is an error. No search code is involved.
    """
    cert = SemCertificate.from_json_dict(data)
    if cert.order != g.p:
        raise LabelingError(f"certificate order {cert.order} != graph order {g.p}")
    if len(cert.labels) != g.p + cert.isolated:
        raise NotBijectiveError(
            f"certificate carries {len(cert.labels)} labels for "
            f"{g.p} + {cert.isolated} vertices"
        )
    rebuilt = verify_sem(g, cert.labels, cert.isolated)
    if rebuilt.sums != cert.sums:
        raise LabelingError(
            f"stored sums {cert.sums} differ from recomputed {rebuilt.sums}"
        )
    if rebuilt.s != cert.s or rebuilt.k != cert.k:
        raise LabelingError(
            f"stored (s, k) = ({cert.s}, {cert.k}) differ from recomputed "
            f"({rebuilt.s}, {rebuilt.k})"
        )
    return rebuilt


def strength_of_numbering(g: Graph, f: Labels) -> int:
    """Maximum edge sum under a bijective numbering onto [1, p]."""
    if g.q == 0:
        raise ValueError("strength is undefined for edgeless graphs")
    vals = _values(f)
    if sorted(vals) != list(range(1, g.p + 1)):
        raise NotBijectiveError("numbering must be a bijection onto [1, p]")
    return max(vals[u] + vals[v] for u, v in g.edges)


def verify_graceful(g: Graph, f: Labels) -> bool:
    """True iff the injective labeling into [0, q] induces the edge
    differences {1, ..., q} exactly."""
    vals = _values(f)
    if len(vals) < g.p:
        raise LabelingError(f"labeling covers {len(vals)} of {g.p} vertices")
    if any(not 0 <= x <= g.q for x in vals[: g.p]):
        raise LabelingError(f"graceful labels must lie in [0, {g.q}]")
    if len(set(vals[: g.p])) != g.p:
        raise LabelingError("graceful labels must be injective")
    diffs = sorted(abs(vals[u] - vals[v]) for u, v in g.edges)
    return diffs == list(range(1, g.q + 1))


def verify_alpha(g: Graph, f: Labels) -> int | None:
    """Boundary value of a graceful labeling, or None.

    Returns the least lambda with min{f(u), f(v)} <= lambda < max{f(u), f(v)}
    on every edge, if the (required graceful) labeling admits one.
    """
    if not verify_graceful(g, f):
        raise LabelingError("boundary check requires a graceful labeling")
    vals = _values(f)
    if g.q == 0:
        return None
    lo = max(min(vals[u], vals[v]) for u, v in g.edges)
    hi = min(max(vals[u], vals[v]) for u, v in g.edges)
    return lo if lo < hi else None


def _tree_allowance(g: Graph) -> int:
    return 1 if is_tree(g) else 0


def verify_harmonious(g: Graph, f: ModularLabeling) -> bool:
    """True iff the labels, taken modulo q, induce pairwise distinct edge
    sums modulo q. Trees get one repeated vertex label; other graphs none."""
    if g.q == 0:
        raise ValueError("harmonious labelings need at least one edge")
    if f.repeat_allowance != _tree_allowance(g):
        raise LabelingError(
            "repeat allowance must be 1 for trees and 0 otherwise"
        )
    vals = f.values
    if len(vals) < g.p:
        raise LabelingError(f"labeling covers {len(vals)} of {g.p} vertices")
    if any(not 0 <= x < g.q for x in vals[: g.p]):
        raise LabelingError(f"harmonious labels must lie in [0, {g.q - 1}]")
    residues = [(vals[u] + vals[v]) % g.q for u, v in g.edges]
    return len(set(residues)) == g.q


def verify_sequential(g: Graph, f: ModularLabeling) -> bool:
    """True iff the injective labels give q consecutive integer edge sums.

    Labels live in [0, q-1]; for trees the top label q is also allowed
    (an injection of p = q+1 vertices cannot fit in [0, q-1]).
    """
    if g.q == 0:
        raise ValueError("sequential labelings need at least one edge")
    if f.repeat_allowance != 0:
        raise LabelingError("sequential labelings are injective")
    vals = f.values
    if len(vals) < g.p:
        raise LabelingError(f"labeling covers {len(vals)} of {g.p} vertices")
    top = g.q if is_tree(g) else g.q - 1
    if any(not 0 <= x <= top for x in vals[: g.p]):
        raise LabelingError(f"sequential labels must lie in [0, {top}]")
    if len(set(vals[: g.p])) != g.p:
        raise LabelingError("sequential labels must be injective")
    sums = sorted(vals[u] + vals[v] for u, v in g.edges)
    if len(set(sums)) != g.q:
        return False
    return sums[-1] - sums[0] + 1 == g.q
