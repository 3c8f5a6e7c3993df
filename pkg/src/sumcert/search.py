"""Exhaustive and backtracking search engines.

Three kinds of search live here:

* witness search inside one colouring (``find_mono_fs_witness``),
* universal search over every colouring of an initial segment
  (``fs_number``, ``fu_number``), and
* homogeneous-set search for pair colourings (``pair_ramsey_homogeneous``).

Determinism contract: results are the lexicographically least hit in a fixed
enumeration order, workers only change how the fixed task partition is
executed, and node budgets are allocated per task so that the verdict cannot
depend on the worker count.  Exceeding a budget yields the distinct verdict
``inconclusive``, never a silent ``exhausted``.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Optional, Sequence

from .certificate import Certificate, EXHAUSTED, INCONCLUSIVE, WITNESS
from .coloring import ColoringSpec
from .exact import QVec, format_qvec, format_rat
from .sumsets import fs_enumerate, is_monochromatic

_PREFIX_DEPTH = 4


@dataclass(frozen=True)
class Budget:
    """Explicit resource limits; exhausting one is never a mathematical verdict.

    Node budgets are split evenly over the fixed task partition, so verdicts
    cannot depend on the worker count.  Wall-clock budgets are inherently
    racy and only bound runaway runs; determinism is guaranteed for
    unbudgeted and node-budgeted searches.
    """

    nodes: Optional[int] = None
    millis: Optional[int] = None

    def per_task(self, task_count: int) -> Optional[int]:
        if self.nodes is None:
            return None
        return max(1, self.nodes // max(1, task_count))

    def deadline(self) -> Optional[float]:
        if self.millis is None:
            return None
        return time.perf_counter() + self.millis / 1000.0


class BudgetExceeded(Exception):
    pass


def _elapsed_ms(t0: float) -> int:
    return int((time.perf_counter() - t0) * 1000)


def _map_tasks(tasks: Sequence, fn: Callable, workers: int) -> list:
    """Apply fn to every task, preserving task order in the result list."""
    if workers <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, tasks))


def _first_hit(tasks: Sequence, fn: Callable, workers: int):
    """First non-None fn(task) in task order, evaluating batches concurrently."""
    if workers <= 1 or len(tasks) <= 1:
        for t in tasks:
            r = fn(t)
            if r is not None:
                return r
        return None
    with ThreadPoolExecutor(max_workers=workers) as pool:
        for start in range(0, len(tasks), workers):
            for r in pool.map(fn, tasks[start : start + workers]):
                if r is not None:
                    return r
    return None


def format_element(x) -> str:
    return format_qvec(x) if isinstance(x, QVec) else format_rat(x)


def format_elements(xs) -> str:
    return "; ".join(format_element(x) for x in xs)


# ---------------------------------------------------------------------------
# Witness search inside one colouring.


def find_mono_fs_witness(
    ground: Sequence,
    add: Callable,
    spec: ColoringSpec,
    k: int,
    workers: int = 1,
) -> Certificate:
    """Lexicographically least injective k-subsequence of the ground list
    whose finite-sums set is monochromatic, or an exhaustion certificate."""
    if k < 1:
        raise ValueError("k must be >= 1")
    t0 = time.perf_counter()
    n = len(ground)
    space = _binomial(n, k)

    def scan_first(i: int):
        rest = range(i + 1, n)
        for tail in combinations(rest, k - 1):
            idx = (i,) + tail
            elems = [ground[j] for j in idx]
            sums = [s for _, s in fs_enumerate(elems, add)]
            color = is_monochromatic(sums, spec)
            if color is not None:
                return idx, color
        return None

    hit = _first_hit(range(n - k + 1), scan_first, workers) if n >= k else None
    params = {"coloring": str(spec), "k": k, "ground_size": n}
    if hit is None:
        return Certificate.build(
            "fs-witness", params, EXHAUSTED, {}, space, _elapsed_ms(t0)
        )
    idx, color = hit
    payload = {
        "witness": format_elements(ground[j] for j in idx),
        "color": str(color),
    }
    return Certificate.build("fs-witness", params, WITNESS, payload, space, _elapsed_ms(t0))


def _binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out


# ---------------------------------------------------------------------------
# fs_number: least R such that every t-colouring of {1..R} contains a
# monochromatic sum configuration on k terms (repeats allowed, so for k = 2
# these are the classical Schur triples {x, y, x+y} with x <= y).


def _partitions(total: int, parts: int, lo: int = 1):
    if parts == 1:
        if total >= lo:
            yield (total,)
        return
    for first in range(lo, total // parts + 1):
        for rest in _partitions(total - first, parts - 1, first):
            yield (first,) + rest


def _proper_sum_groups(n: int, k: int) -> list[list[tuple[int, ...]]]:
    """groups[m] lists, per k-partition of m, the proper nonempty subset sums."""
    groups: list[list[tuple[int, ...]]] = [[] for _ in range(n + 1)]
    for m in range(1, n + 1):
        seen = set()
        for parts in _partitions(m, k):
            sums = set()
            for mask in range(1, (1 << k) - 1):
                sums.add(sum(parts[i] for i in range(k) if (mask >> i) & 1))
            key = tuple(sorted(sums))
            if key not in seen:
                seen.add(key)
                groups[m].append(key)
    return groups


class _ColoringSearch:
    """Backtracking over canonical colourings of positions 1..size.

    Positions are coloured in order; ``forbidden(colors, m)`` yields the
    colours that would complete a monochromatic configuration at m.  First
    use of colour i is only allowed after colours below i have appeared, and
    the DFS tries colours in ascending order, so the first colouring found
    is the lexicographically least canonical one.
    """

    def __init__(self, size: int, t: int, forbidden: Callable[[list[int], int], set[int]]):
        self.size = size
        self.t = t
        self.forbidden = forbidden

    def prefixes(self, depth: int) -> list[tuple[int, ...]]:
        out: list[tuple[int, ...]] = []
        colors: list[int] = [0] * (self.size + 1)

        def rec(m: int, used: int):
            if m > depth:
                out.append(tuple(colors[1 : depth + 1]))
                return
            bad = self.forbidden(colors, m)
            for v in range(min(used + 1, self.t)):
                if v in bad:
                    continue
                colors[m] = v
                rec(m + 1, max(used, v + 1))

        if self.size == 0:
            return [()]
        rec(1, 0)
        return out

    def complete(
        self,
        prefix: tuple[int, ...],
        node_budget: Optional[int],
        deadline: Optional[float] = None,
    ) -> Optional[list[int]]:
        """Lex-least canonical avoiding colouring extending prefix, or None."""
        colors = [0] * (self.size + 1)
        for i, v in enumerate(prefix, start=1):
            colors[i] = v
        used = max(prefix) + 1 if prefix else 0
        nodes = 0

        def rec(m: int, used: int) -> bool:
            nonlocal nodes
            if m > self.size:
                return True
            bad = self.forbidden(colors, m)
            for v in range(min(used + 1, self.t)):
                if v in bad:
                    continue
                nodes += 1
                if node_budget is not None and nodes > node_budget:
                    raise BudgetExceeded()
                if deadline is not None and nodes % 1024 == 0 and time.perf_counter() > deadline:
                    raise BudgetExceeded()
                colors[m] = v
                if rec(m + 1, max(used, v + 1)):
                    return True
            return False

        if rec(len(prefix) + 1, used):
            return colors[1:]
        return None

    def solve(self, budget: Budget, workers: int):
        """('found', colouring) | ('none', None) | ('inconclusive', None)."""
        if self.size == 0:
            return "found", []
        depth = min(self.size, _PREFIX_DEPTH)
        tasks = self.prefixes(depth)
        if not tasks:
            return "none", None
        per_task = budget.per_task(len(tasks))
        deadline = budget.deadline()

        def run(prefix: tuple[int, ...]):
            try:
                return "ok", self.complete(prefix, per_task, deadline)
            except BudgetExceeded:
                return "exceeded", None

        results = _map_tasks(tasks, run, workers)
        for status, coloring in results:
            if status == "ok" and coloring is not None:
                return "found", coloring
        if any(status == "exceeded" for status, _ in results):
            return "inconclusive", None
        return "none", None


def _format_digits(digits: Sequence[int], t: int) -> str:
    if t <= 10:
        return "".join(str(d) for d in digits)
    return ",".join(str(d) for d in digits)


def fs_number(
    k: int, t: int, budget: Budget = Budget(), workers: int = 1, n_limit: int = 64
) -> Certificate:
    """Least R such that no t-colouring of {1..R} avoids a monochromatic
    k-term sum configuration; the certificate carries the canonical extremal
    colouring of {1..R-1}."""
    if k < 1 or t < 1:
        raise ValueError("k and t must be >= 1")
    t0 = time.perf_counter()
    params = {"k": k, "t": t}
    extremal: list[int] = []
    space = 0
    for n in range(1, n_limit + 1):
        space += t**n
        groups = _proper_sum_groups(n, k)

        def forbidden(colors: list[int], m: int) -> set[int]:
            bad = set()
            for sums in groups[m]:
                if not sums:
                    return set(range(t))
                v = colors[sums[0]]
                if all(colors[s] == v for s in sums[1:]):
                    bad.add(v)
            return bad

        status, coloring = _ColoringSearch(n, t, forbidden).solve(budget, workers)
        if status == "inconclusive":
            return Certificate.build(
                "fs-number",
                params,
                INCONCLUSIVE,
                {"searched_up_to": n - 1},
                space,
                _elapsed_ms(t0),
            )
        if status == "none":
            payload = {
                "value": n,
                "extremal_coloring": _format_digits(extremal, t),
            }
            return Certificate.build(
                "fs-number", params, EXHAUSTED, payload, space, _elapsed_ms(t0)
            )
        extremal = coloring
    raise RuntimeError(f"fs_number({k},{t}) not determined below {n_limit}")


def fs_coloring_avoids(coloring: Sequence[int], k: int) -> bool:
    """Direct re-check that a colouring of {1..n} has no monochromatic
    k-term sum configuration (used to re-verify extremal certificates)."""
    n = len(coloring)
    colors = [0] + list(coloring)
    groups = _proper_sum_groups(n, k)
    for m in range(1, n + 1):
        for sums in groups[m]:
            if not sums:
                return False
            v = colors[sums[0]]
            if all(colors[s] == v for s in sums[1:]) and colors[m] == v:
                return False
    return True


# ---------------------------------------------------------------------------
# fu_number: least F such that every t-colouring of the nonempty subsets of
# {0..F-1} contains a k-term block sequence whose unions are monochromatic.


def _block_decompositions(u: int, f: int, k: int) -> list[tuple[int, ...]]:
    """All splits of mask u into k blocks (each block's bits below the next's)."""
    bits = [i for i in range(f) if (u >> i) & 1]
    if len(bits) < k:
        return []
    out = []
    for cuts in combinations(range(1, len(bits)), k - 1):
        blocks = []
        prev = 0
        for cut in cuts + (len(bits),):
            mask = 0
            for i in bits[prev:cut]:
                mask |= 1 << i
            blocks.append(mask)
            prev = cut
        out.append(tuple(blocks))
    return out


def _proper_union_groups(f: int, k: int) -> list[list[tuple[int, ...]]]:
    """groups[u] lists, per k-block decomposition of u, the proper unions."""
    groups: list[list[tuple[int, ...]]] = [[] for _ in range(1 << f)]
    for u in range(1, 1 << f):
        for blocks in _block_decompositions(u, f, k):
            unions = set()
            for mask in range(1, (1 << k) - 1):
                w = 0
                for i in range(k):
                    if (mask >> i) & 1:
                        w |= blocks[i]
                unions.add(w)
            groups[u].append(tuple(sorted(unions)))
    return groups


def fu_number(
    k: int, t: int, budget: Budget = Budget(), workers: int = 1, f_limit: int = 10
) -> Certificate:
    """Least F forcing a monochromatic k-block finite-unions family; the
    certificate carries the canonical extremal colouring at F-1, indexed by
    subset rank."""
    if k < 1 or t < 1:
        raise ValueError("k and t must be >= 1")
    t0 = time.perf_counter()
    params = {"k": k, "t": t}
    extremal: list[int] = []
    space = 0
    for f in range(1, f_limit + 1):
        size = (1 << f) - 1
        space += t**size
        groups = _proper_union_groups(f, k)

        def forbidden(colors: list[int], m: int) -> set[int]:
            bad = set()
            for unions in groups[m]:
                if not unions:
                    return set(range(t))
                v = colors[unions[0]]
                if all(colors[w] == v for w in unions[1:]):
                    bad.add(v)
            return bad

        status, coloring = _ColoringSearch(size, t, forbidden).solve(budget, workers)
        if status == "inconclusive":
            return Certificate.build(
                "fu-number",
                params,
                INCONCLUSIVE,
                {"searched_up_to": f - 1},
                space,
                _elapsed_ms(t0),
            )
        if status == "none":
            payload = {
                "value": f,
                "extremal_coloring": _format_digits(extremal, t),
            }
            return Certificate.build(
                "fu-number", params, EXHAUSTED, payload, space, _elapsed_ms(t0)
            )
        extremal = coloring
    raise RuntimeError(f"fu_number({k},{t}) not determined below {f_limit}")


def fu_coloring_avoids(coloring: Sequence[int], f: int, k: int) -> bool:
    """Direct re-check that a subset colouring has no monochromatic k-block
    finite-unions family."""
    if len(coloring) != (1 << f) - 1:
        raise ValueError("colouring length must be 2**f - 1")
    colors = [0] + list(coloring)
    for u in range(1, 1 << f):
        for blocks in _block_decompositions(u, f, k):
            vals = {colors[u]}
            for mask in range(1, (1 << k) - 1):
                w = 0
                for i in range(k):
                    if (mask >> i) & 1:
                        w |= blocks[i]
                vals.add(colors[w])
            if len(vals) == 1:
                return False
    return True


def find_mono_fu_blocks(
    coloring: Callable[[frozenset[int]], object], f: int, k: int
) -> Optional[tuple[frozenset[int], ...]]:
    """First k-block sequence inside the subsets of {0..f-1} whose unions all
    share one colour, scanning decompositions in subset-rank order."""
    for u in range(1, 1 << f):
        for blocks in _block_decompositions(u, f, k):
            sets = tuple(frozenset(i for i in range(f) if (b >> i) & 1) for b in blocks)
            union_vals = set()
            for mask in range(1, 1 << k):
                w: frozenset[int] = frozenset()
                for i in range(k):
                    if (mask >> i) & 1:
                        w |= sets[i]
                union_vals.add(coloring(w))
            if len(union_vals) == 1:
                return sets
    return None


# ---------------------------------------------------------------------------
# Homogeneous sets for pair colourings.


def pair_ramsey_homogeneous(
    n: int, pair_coloring: Callable[[int, int], object], k: int
) -> Optional[tuple[int, ...]]:
    """Lexicographically least k-subset of range(n) with all pairs one
    colour, or None."""
    if k > n:
        raise ValueError("k must be at most n")
    if k <= 1:
        return tuple(range(k))
    for combo in combinations(range(n), k):
        colors = {pair_coloring(a, b) for a, b in combinations(combo, 2)}
        if len(colors) == 1:
            return combo
    return None
