"""Exhaustive minimal-length search for t-reachability networks.

Depth-first search over transposition sequences with three
length-preserving pruning rules: (i) a step joining two inactive
positions never changes the frontier, so a shorter network exists;
(ii) inactive positions are interchangeable under relabeling, so the k-th
newly activated position can be forced to carry label t+k; (iii) every
minimal network grows its frontier strictly at each step (a non-growing
step can be dropped without changing later frontiers).  A witness found
at level L during iterative deepening is therefore minimal once all
smaller levels are exhausted.

``exists_network`` succeeds as soon as the frontier completes, so a
returned witness may be shorter than the requested length; ``None`` means
no network of length <= ``length`` exists at all.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import Network, encode_tuple, start_tuple
from .errors import BudgetExceededError, CapExhaustedError


@dataclass(frozen=True)
class PruneFlags:
    """Toggles for each pruning rule; disabling all gives the brute search."""

    inactive_pairs: bool = True
    canonical_activation: bool = True
    frontier_growth: bool = True
    bounds: bool = True


PRUNE_ALL = PruneFlags()
PRUNE_NONE = PruneFlags(False, False, False, False)


@dataclass(frozen=True)
class SearchSpec:
    n: int
    t: int
    star_only: bool = False
    max_len: int | None = None
    budget: int | None = None

    def __post_init__(self) -> None:
        if not 1 <= self.t <= self.n:
            raise ValueError(f"need 1 <= t <= n, got t={self.t}, n={self.n}")
        if self.budget is not None and self.budget < 1:
            raise ValueError("node budget must be positive")


@dataclass(frozen=True)
class SearchResult:
    min_length: int
    witness: Network
    nodes_explored: int
    exhausted_levels: tuple[int, ...]

    def summary(self, spec: SearchSpec) -> str:
        star = "true" if spec.star_only else "false"
        return (
            f"MIN n={spec.n} t={spec.t} star={star} "
            f"len={self.min_length} nodes={self.nodes_explored}"
        )


def _apply_table(n: int, t: int, a: int, b: int) -> list[int]:
    """code -> code map of the transposition over the n^t code space."""
    size = n**t
    tab = list(range(size))
    da, db = a - 1, b - 1
    for code in range(size):
        c = code
        out = 0
        w = 1
        for _ in range(t):
            c, d = divmod(c, n)
            if d == da:
                d = db
            elif d == db:
                d = da
            out += d * w
            w *= n
        tab[code] = out
    return tab


class _Searcher:
    def __init__(self, n: int, t: int, star_only: bool, prunes: PruneFlags, budget: int | None):
        self.n = n
        self.t = t
        self.star_only = star_only
        self.prunes = prunes
        self.budget = budget
        self.required = math.perm(n, t)
        self.nodes = 0
        self.tables: dict[tuple[int, int], list[int]] = {}
        self.path: list[tuple[int, int]] = []

    def table(self, a: int, b: int) -> list[int]:
        tab = self.tables.get((a, b))
        if tab is None:
            tab = _apply_table(self.n, self.t, a, b)
            self.tables[(a, b)] = tab
        return tab

    def candidates(self, active: frozenset[int]) -> list[tuple[int, int]]:
        """Branching order: active-active pairs, then activations, lex each."""
        act = sorted(active)
        if self.star_only:
            within = [(1, x) for x in act if x != 1]
        else:
            within = [(a, b) for i, a in enumerate(act) for b in act[i + 1 :]]
        out = within
        inactive = [v for v in range(1, self.n + 1) if v not in active]
        if inactive:
            if self.prunes.canonical_activation:
                # canonical labels keep active = {1..m}, so min(inactive) is next
                new = [inactive[0]]
            else:
                new = inactive
            if self.star_only:
                out = out + [(1, v) for v in new]
            else:
                out = out + sorted((min(a, v), max(a, v)) for a in act for v in new)
                if not self.prunes.inactive_pairs:
                    out = out + [
                        (u, v) for i, u in enumerate(inactive) for v in inactive[i + 1 :]
                    ]
        return out

    def run(self, length: int) -> Network | None:
        start = frozenset([encode_tuple(start_tuple(self.t), self.n)])
        active = frozenset(range(1, self.t + 1))
        self.path = []
        if self._dfs(start, active, length):
            return Network.from_pairs(self.n, self.path)
        return None

    def _dfs(self, frontier: frozenset[int], active: frozenset[int], remaining: int) -> bool:
        if len(frontier) == self.required:
            return True
        if remaining == 0:
            return False
        if self.prunes.bounds:
            if len(frontier) << remaining < self.required:
                return False
            if self.n - len(active) > remaining:
                return False
        for a, b in self.candidates(active):
            self.nodes += 1
            if self.budget is not None and self.nodes > self.budget:
                raise BudgetExceededError(
                    f"search node budget {self.budget} exceeded (result unknown)"
                )
            tab = self.table(a, b)
            child = frontier | {tab[s] for s in frontier}
            if self.prunes.frontier_growth and len(child) == len(frontier):
                continue
            # Activation on first contact with an active position; a step
            # joining two inactive positions activates neither.
            if a in active:
                nxt_active = active if b in active else active | {b}
            else:
                nxt_active = active | {a} if b in active else active
            self.path.append((a, b))
            if self._dfs(child, nxt_active, remaining - 1):
                return True
            self.path.pop()
        return False


def exists_network(
    n: int,
    t: int,
    length: int,
    star_only: bool = False,
    *,
    budget: int | None = None,
    prunes: PruneFlags = PRUNE_ALL,
) -> Network | None:
    """Witness of length <= ``length``, or None after exhausting the level.

    Raises BudgetExceededError when the node budget is hit first; that
    outcome carries no feasibility information.
    """
    if length < 0:
        raise ValueError("length must be nonnegative")
    SearchSpec(n, t, star_only)  # validate n, t
    return _Searcher(n, t, star_only, prunes, budget).run(length)


def min_length(
    spec: SearchSpec,
    *,
    prunes: PruneFlags = PRUNE_ALL,
    start_length: int | None = None,
) -> SearchResult:
    """Iterative deepening from n-1 (or ``start_length``) upward.

    Every level below the answer is proven infeasible by exhaustion and
    recorded in ``exhausted_levels``.
    """
    start = max(0, spec.n - 1) if start_length is None else start_length
    if start < 0:
        raise ValueError("start_length must be nonnegative")
    searcher = _Searcher(spec.n, spec.t, spec.star_only, prunes, spec.budget)
    exhausted: list[int] = []
    level = start
    while spec.max_len is None or level <= spec.max_len:
        witness = searcher.run(level)
        if witness is not None:
            return SearchResult(len(witness), witness, searcher.nodes, tuple(exhausted))
        exhausted.append(level)
        level += 1
    raise CapExhaustedError(
        f"no {spec.t}-reachability network of length <= {spec.max_len} exists "
        f"(levels {exhausted} exhausted)"
    )
