"""Exhaustive search for the maximum cross-intersecting family size.

Candidates are ordered pairs (A, B) with A ∩ B empty; a sequence of
distinct candidates is a valid family when compatible(p_i, p_j) holds for
every i < j, i.e. A_i meets B_j.  The condition is one-directional, so
the search is over ordered sequences, not subsets.

max_family explores extensions depth-first in candidate order.  The
subtree below a partial sequence depends only on the set of candidates
still feasible as successors, so results are memoized on that set; this
keeps the search exact while collapsing the factorial number of prefix
orders.  The reported witness is the lexicographically smallest maximum
sequence, and sequential runs are fully reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .field import Field
from .geometry import (
    AffineFlat,
    ProjectiveSubspace,
    enumerate_flats,
    flats_disjoint,
    projective_disjoint,
)
from .linalg import Space, enumerate_hyperplanes, enumerate_subspaces

DEFAULT_CANDIDATE_CAP = 5000


class CandidateCapExceeded(ValueError):
    """The instance would generate more candidates than the configured cap."""


class BudgetExceeded(RuntimeError):
    """The node budget ran out before the search completed."""

    def __init__(self, limit: int):
        super().__init__(f"search exceeded the node budget of {limit}")
        self.limit = limit


@dataclass(frozen=True)
class CandidatePair:
    id: int
    A: object
    B: object


@dataclass(frozen=True)
class SearchReport:
    max_size: int
    witness: tuple[int, ...]
    nodes_explored: int
    restricted: bool


def _disjoint(a, b) -> bool:
    if isinstance(a, AffineFlat):
        return flats_disjoint(a, b)
    return projective_disjoint(a, b)


def compatible(p: CandidatePair, q: CandidatePair) -> bool:
    """True iff p may immediately or eventually precede q: A_p meets B_q."""
    return not _disjoint(p.A, q.B)


def _append_capped(pairs: list, pair, max_candidates: int):
    pairs.append(pair)
    if len(pairs) > max_candidates:
        raise CandidateCapExceeded(
            f"instance yields more than {max_candidates} candidates")


def candidates_affine(n: int, field: Field, restricted: bool,
                      max_candidates: int = DEFAULT_CANDIDATE_CAP) -> list[CandidatePair]:
    """Disjoint ordered flat pairs of F_q^n, in canonical order.

    Restricted mode keeps only pairs of distinct cosets of a common
    hyperplane (the shape the proof of the upper bound reduces to):
    exactly t * q * (q-1) candidates.  Unrestricted mode pairs up all
    disjoint nonempty flats.
    """
    if n < 1:
        raise ValueError(f"dimension must be >= 1, got {n}")
    space = Space(field, n)
    pairs = []
    if restricted:
        for hyperplane in enumerate_hyperplanes(space):
            kernel = hyperplane.kernel()
            cosets = _cosets(space, kernel)
            for a in cosets:
                for b in cosets:
                    if a != b:
                        _append_capped(pairs, (a, b), max_candidates)
    else:
        flats = list(enumerate_flats(space))
        for a in flats:
            for b in flats:
                if flats_disjoint(a, b):
                    _append_capped(pairs, (a, b), max_candidates)
    return [CandidatePair(i, a, b) for i, (a, b) in enumerate(pairs)]


def _cosets(space: Space, sub) -> list[AffineFlat]:
    pivots = set(sub.pivot_columns())
    free = [j for j in range(space.n) if j not in pivots]
    out = []
    for values in itertools.product(range(space.q), repeat=len(free)):
        rep = [0] * space.n
        for j, val in zip(free, values):
            rep[j] = val
        out.append(AffineFlat(tuple(rep), sub))
    return out


def candidates_projective(n: int, field: Field,
                          max_candidates: int = DEFAULT_CANDIDATE_CAP) -> list[CandidatePair]:
    """Disjoint ordered pairs of nonempty projective subspaces of PG(n, q)."""
    if n < 0:
        raise ValueError(f"projective dimension must be >= 0, got {n}")
    space = Space(field, n + 1)
    members = [ProjectiveSubspace(sub) for sub in enumerate_subspaces(space)
               if sub.dim >= 1]
    pairs = []
    for a in members:
        for b in members:
            if projective_disjoint(a, b):
                _append_capped(pairs, (a, b), max_candidates)
    return [CandidatePair(i, a, b) for i, (a, b) in enumerate(pairs)]


def max_family(candidates: list[CandidatePair], limit: int | None = None,
               restricted: bool = False) -> SearchReport:
    """Exact maximum ordered-sequence length over the given candidates.

    Raises BudgetExceeded when more than ``limit`` nodes are visited.
    The witness lists candidate ids; it is the lexicographically smallest
    maximum sequence with respect to the given candidate order.
    """
    k = len(candidates)
    # succ[i] = candidates that may appear anywhere after i.
    succ = [frozenset(j for j in range(k)
                      if j != i and compatible(candidates[i], candidates[j]))
            for i in range(k)]
    memo: dict[frozenset, tuple[int, tuple[int, ...]]] = {}
    nodes = 0

    def extend(feasible: frozenset) -> tuple[int, tuple[int, ...]]:
        nonlocal nodes
        nodes += 1
        if limit is not None and nodes > limit:
            raise BudgetExceeded(limit)
        cached = memo.get(feasible)
        if cached is not None:
            return cached
        best_len, best_seq = 0, ()
        for i in sorted(feasible):
            sub_len, sub_seq = extend(feasible & succ[i])
            if 1 + sub_len > best_len:
                best_len, best_seq = 1 + sub_len, (i, *sub_seq)
        memo[feasible] = (best_len, best_seq)
        return best_len, best_seq

    size, seq = extend(frozenset(range(k)))
    witness = tuple(candidates[i].id for i in seq)
    return SearchReport(size, witness, nodes, restricted)
