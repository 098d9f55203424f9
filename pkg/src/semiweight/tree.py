"""Exhaustive enumeration of numerical semigroups by genus.

The semigroup tree has the naturals at its root; the children of a node are
obtained by removing, one at a time, each minimal generator larger than the
Frobenius number.  Every numerical semigroup of genus ``g`` appears exactly
once at depth ``g``.

Minimal generators are tracked with decomposition numbers: ``dec[y]`` is the
number of unordered pairs ``{a, b}`` of members with ``a + b = y``, so a
member ``x > 0`` is a minimal generator iff ``dec[x] == 1``.  Removing the
generator ``x`` lowers ``dec[y]`` by one for every member ``y - x`` of the
parent, which is a single vectorised slice update per child.

Parallel runs split the tree at a fixed depth into subtree tasks.  Each task
gets its own copy of the visitor; the copies are merged back into the
caller's visitor in subtree order, so results never depend on scheduling.
"""

from __future__ import annotations

import copy
import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator, Protocol

import numpy as np

from .gamma import certify
from .gapset import GapList, Semigroup, from_gaps, gaps

__all__ = [
    "EnumerationStats",
    "GammaPrune",
    "TreeNode",
    "brute_force_enumerate",
    "children",
    "effective_generators",
    "enumerate_gamma_hyperelliptic",
    "enumerate_semigroups",
    "iter_semigroups",
    "minimal_generators",
    "tree_node",
]

DEFAULT_SPLIT_DEPTH = 6


class MergeableVisitor(Protocol):
    def __call__(self, s: Semigroup) -> None: ...

    def fork(self) -> "MergeableVisitor": ...

    def merge(self, other: "MergeableVisitor") -> None: ...


@dataclass
class _Node:
    """Hot-loop state; ``mem`` and ``dec`` cover ``[0, width)``."""

    bits: int
    genus: int
    frobenius: int
    multiplicity: int
    mem: np.ndarray
    dec: np.ndarray

    def semigroup(self) -> Semigroup:
        c = self.frobenius + 1
        return Semigroup(
            bits=self.bits & ((1 << (c + 1)) - 1),
            genus=self.genus,
            frobenius=self.frobenius,
            multiplicity=self.multiplicity,
        )

    def generators_above_frobenius(self) -> np.ndarray:
        lo = max(self.frobenius + 1, 1)
        hi = self.frobenius + self.multiplicity + 1
        return np.flatnonzero(self.dec[lo : hi + 1] == 1) + lo

    def child(self, x: int) -> "_Node":
        mem = self.mem.copy()
        mem[x] = 0
        dec = self.dec.copy()
        dec[x:] -= self.mem[: dec.size - x]
        mult = self.multiplicity + 1 if x == self.multiplicity else self.multiplicity
        return _Node(self.bits & ~(1 << x), self.genus + 1, x, mult, mem, dec)


def _node_from_semigroup(s: Semigroup, width: int) -> _Node:
    mem = np.fromiter((x in s for x in range(width)), dtype=np.int16, count=width)
    dec = np.zeros(width, dtype=np.int16)
    for y in range(width):
        a = mem[: y // 2 + 1]
        b = mem[y - np.arange(y // 2 + 1)]
        dec[y] = int(np.dot(a, b))
    bits = s.bits | (((1 << width) - 1) >> (s.conductor) << s.conductor)
    return _Node(bits, s.genus, s.frobenius, s.multiplicity, mem, dec)


def _width(genus_max: int) -> int:
    # generators of a genus-g node are <= frobenius + multiplicity + 1 <= 3g + 1
    return 3 * max(genus_max, 1) + 3


@dataclass(frozen=True)
class TreeNode:
    semigroup: Semigroup
    effective_generators: list[int]


def minimal_generators(s: Semigroup) -> list[int]:
    """Minimal generating set, increasing."""
    m = s.multiplicity
    bound = s.frobenius + m + 1
    mem = [x for x in range(1, bound + 1) if x in s]
    out: list[int] = []
    for x in mem:
        if not any((x - a) in s for a in mem if a <= x // 2 and x - a > 0):
            out.append(x)
    return out


def effective_generators(s: Semigroup) -> list[int]:
    """Minimal generators larger than the Frobenius number."""
    return [x for x in minimal_generators(s) if x > s.frobenius]


def tree_node(s: Semigroup) -> TreeNode:
    return TreeNode(semigroup=s, effective_generators=effective_generators(s))


def children(s: Semigroup) -> list[Semigroup]:
    """Children of ``s`` in the semigroup tree, by increasing removed generator."""
    node = _node_from_semigroup(s, _width(s.genus + 1))
    return [node.child(int(x)).semigroup() for x in node.generators_above_frobenius()]


class GammaPrune:
    """Subtree cut for the gamma-hyperelliptic filter.

    Everything at or below the Frobenius number is frozen for all
    descendants.  A gamma-hyperelliptic semigroup has exactly ``gamma``
    positive members below ``4*gamma + 2``, none of them odd, and contains
    ``4*gamma + 2``; a node whose frozen part already contradicts this has
    no certified descendant.
    """

    def __init__(self, gamma: int):
        self.gamma = gamma
        self.window = 4 * gamma + 1

    def __call__(self, node: _Node) -> bool:
        f = node.frobenius
        top = min(f, self.window)
        if top < 1:
            return False
        frozen = node.mem[1 : top + 1]
        if frozen[0::2].any():  # odd members 1, 3, ...
            return True
        count = int(frozen.sum())
        if count > self.gamma:
            return True
        if f >= self.window and count != self.gamma:
            return True
        if f >= self.window + 1 and not node.mem[self.window + 1]:
            return True
        return False


def _walk(
    root: _Node, genus_max: int, prune: Callable[[_Node], bool] | None
) -> Iterator[_Node]:
    stack = [root]
    while stack:
        node = stack.pop()
        if prune is not None and prune(node):
            continue
        yield node
        if node.genus < genus_max:
            gens = node.generators_above_frobenius()
            # reversed so the smallest generator is explored first
            stack.extend(node.child(int(x)) for x in gens[::-1])


@dataclass
class EnumerationStats:
    counts: list[int]
    gamma_counts: dict[int, list[int]] = field(default_factory=dict)
    wall_time: float = 0.0
    workers: int = 1
    tasks: int = 1

    @property
    def nodes(self) -> int:
        return sum(self.counts)

    @property
    def throughput(self) -> float:
        return self.nodes / self.wall_time if self.wall_time > 0 else float("inf")

    def to_dict(self) -> dict:
        return {
            "counts": list(self.counts),
            "gamma_counts": {str(k): v for k, v in sorted(self.gamma_counts.items())},
            "total": self.nodes,
            "wall_time": self.wall_time,
            "throughput": self.throughput,
            "workers": self.workers,
            "tasks": self.tasks,
        }


class _Counter:
    def __init__(self, genus_max: int, gammas: tuple[int, ...], filter_gamma: int | None):
        self.counts = [0] * (genus_max + 1)
        self.gammas = gammas
        self.gamma_counts = {c: [0] * (genus_max + 1) for c in gammas}
        self.filter_gamma = filter_gamma

    def accept(self, s: Semigroup) -> bool:
        if self.filter_gamma is not None and not certify(s, self.filter_gamma).affirmative:
            return False
        self.counts[s.genus] += 1
        for c in self.gammas:
            if certify(s, c).affirmative:
                self.gamma_counts[c][s.genus] += 1
        return True

    def merge(self, other: "_Counter") -> None:
        for i, v in enumerate(other.counts):
            self.counts[i] += v
        for c, row in other.gamma_counts.items():
            for i, v in enumerate(row):
                self.gamma_counts[c][i] += v


def _run_task(args):
    root, genus_max, prune, counter, visitor, genus_min = args
    for node in _walk(root, genus_max, prune):
        if node.genus < genus_min:
            continue
        s = node.semigroup()
        if counter.accept(s) and visitor is not None:
            visitor(s)
    return counter, visitor


def _traverse(
    genus_max: int,
    visitor,
    *,
    workers: int,
    split_depth: int,
    prune,
    gammas: tuple[int, ...] = (),
    filter_gamma: int | None = None,
    genus_min: int = 0,
) -> EnumerationStats:
    if genus_max < 0:
        raise ValueError(f"genus_max must be >= 0, got {genus_max}")
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    if workers > 1 and visitor is not None and not hasattr(visitor, "merge"):
        raise TypeError("parallel enumeration needs a visitor with a merge() method")
    start = time.perf_counter()
    fork = None
    if workers > 1 and visitor is not None:
        fork = getattr(visitor, "fork", None)
        if fork is None:
            pristine = copy.deepcopy(visitor)
            fork = lambda: copy.deepcopy(pristine)  # noqa: E731
    width = _width(genus_max)
    root = _node_from_semigroup(from_gaps(()), width)
    depth = min(split_depth, genus_max)

    counter = _Counter(genus_max, tuple(gammas), filter_gamma)
    # the shallow part of the tree is visited in-process, in DFS order
    frontier: list[_Node] = []
    for node in _walk(root, depth, prune):
        if node.genus == depth and depth < genus_max:
            frontier.append(node)
            continue
        if node.genus < genus_min:
            continue
        s = node.semigroup()
        if counter.accept(s) and visitor is not None:
            visitor(s)

    tasks = [
        (n, genus_max, prune, _Counter(genus_max, tuple(gammas), filter_gamma),
         fork() if fork is not None else visitor, genus_min)
        for n in frontier
    ]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_task, tasks))
    else:
        results = map(_run_task, tasks)
    for sub_counter, sub_visitor in results:
        counter.merge(sub_counter)
        if fork is not None:
            visitor.merge(sub_visitor)

    return EnumerationStats(
        counts=counter.counts,
        gamma_counts=counter.gamma_counts,
        wall_time=time.perf_counter() - start,
        workers=workers,
        tasks=max(len(tasks), 1),
    )


def enumerate_semigroups(
    genus_max: int,
    visitor: Callable[[Semigroup], None] | MergeableVisitor | None = None,
    *,
    workers: int = 1,
    split_depth: int = DEFAULT_SPLIT_DEPTH,
    gammas: tuple[int, ...] = (),
) -> EnumerationStats:
    """Visit every numerical semigroup of genus ``<= genus_max`` exactly once.

    Parameters
    ----------
    genus_max
        Deepest genus to enumerate.
    visitor
        Called once per semigroup.  With ``workers > 1`` each subtree task
        works on a fresh copy, ``visitor.fork()`` if defined and otherwise a
        deep copy of ``visitor`` as it was before the run; the copies are
        folded back through ``visitor.merge(copy)`` in subtree order.
    workers
        Number of worker processes.
    split_depth
        Genus at which the tree is cut into independent tasks.
    gammas
        Extra per-genus counts of gamma-hyperelliptic semigroups to collect.
    """
    return _traverse(
        genus_max, visitor, workers=workers, split_depth=split_depth, prune=None, gammas=gammas
    )


def iter_semigroups(genus_max: int, *, gamma: int | None = None) -> Iterator[Semigroup]:
    """Lazy single-process DFS over the tree, optionally restricted to the
    gamma-hyperelliptic semigroups (with subtree pruning)."""
    width = _width(genus_max)
    root = _node_from_semigroup(from_gaps(()), width)
    prune = GammaPrune(gamma) if gamma is not None else None
    for node in _walk(root, genus_max, prune):
        s = node.semigroup()
        if gamma is None or certify(s, gamma).affirmative:
            yield s


def enumerate_gamma_hyperelliptic(
    gamma: int,
    genus: int,
    visitor=None,
    *,
    workers: int = 1,
    split_depth: int = DEFAULT_SPLIT_DEPTH,
    genus_min: int | None = None,
    prune: bool = True,
) -> EnumerationStats:
    """Visit the gamma-hyperelliptic semigroups of genus ``genus``.

    With ``genus_min`` set the visit covers every genus in
    ``[genus_min, genus]`` in one traversal.  ``prune=False`` walks the
    full tree and filters, which is the reference the pruned walk is tested
    against.
    """
    lo = genus if genus_min is None else genus_min
    return _traverse(
        genus,
        visitor,
        workers=workers,
        split_depth=split_depth,
        prune=GammaPrune(gamma) if prune else None,
        filter_gamma=gamma,
        genus_min=lo,
    )


def brute_force_enumerate(genus: int) -> list[Semigroup]:
    """All semigroups of the given genus by testing every ``genus``-subset of
    ``[1, 2*genus - 1]`` for additive closure of its complement.

    Independent of the tree; lexicographic order of gap sets.
    """
    if genus > 12:
        raise ValueError("brute force is limited to genus <= 12")
    if genus == 0:
        return [from_gaps(())]
    out = []
    for cand in itertools.combinations(range(1, 2 * genus), genus):
        if cand[0] != 1:
            # 1 in S forces S = N
            break
        gapset = set(cand)
        if all(
            (a in gapset) or ((ell - a) in gapset)
            for ell in cand
            for a in range(1, ell // 2 + 1)
        ):
            out.append(from_gaps(GapList._trusted(cand)))
    return out


def gap_multiset(semigroups) -> list[tuple[int, ...]]:
    return sorted(tuple(gaps(s)) for s in semigroups)
