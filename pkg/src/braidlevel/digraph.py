"""Weighted-digraph encoding of the regions of ``B_n^A``.

A region is a choice, for every pair ``i < j``, of the open interval of
``A = {a_1 < ... < a_m}`` that contains ``x_i - x_j``.  Choice ``k`` in
``0..m`` selects ``(a_k, a_{k+1})`` with ``a_0 = -inf`` and
``a_{m+1} = +inf``.  Each finite bound becomes an edge:

* lower bound ``a_k``:  edge ``i -> j`` with weight ``a_k``
* upper bound ``a_{k+1}``: edge ``j -> i`` with weight ``-a_{k+1}``

so an edge ``u -> v`` of weight ``w`` always reads ``x_u - x_v > w``.  The
system is solvable exactly when every directed cycle has negative weight
sum (the digraph is *m-acyclic*), and the level of a region is the number
of strong components of its digraph.
"""
from __future__ import annotations

import csv
import io
import json
import math
from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Mapping, Optional, Sequence, Union

from braidlevel._runtime import check_cap, resolve_cap, run_jobs
from braidlevel.arrangement import ArrangementSpec, Hyperplane, normalize_integer
from braidlevel.polyalg import frac_str

SCHEMA = "braidlevel/1"
DEFAULT_CENSUS_CAP = 10**8
NEG_INF = float("-inf")


class DigraphError(ValueError):
    pass


class OnHyperplaneError(DigraphError):
    def __init__(self, hyperplane: Hyperplane):
        super().__init__(f"point lies on hyperplane {hyperplane}")
        self.hyperplane = hyperplane


def pairs_of(vertices: Sequence[int]) -> list[tuple[int, int]]:
    return list(combinations(sorted(vertices), 2))


@dataclass(frozen=True)
class WeightedDigraph:
    """Valid weighted digraph on ``vertices`` (sorted labels, 1-based).

    ``choices`` lists the interval index for each pair of ``vertices`` in
    lexicographic order.
    """
    offsets: tuple[Fraction, ...]
    vertices: tuple[int, ...]
    choices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(sorted(self.vertices)))
        npairs = len(self.vertices) * (len(self.vertices) - 1) // 2
        if len(self.choices) != npairs:
            raise DigraphError(f"expected {npairs} pair choices, got {len(self.choices)}")
        m = len(self.offsets)
        for c in self.choices:
            if not 0 <= c <= m:
                raise DigraphError(f"choice index {c} out of range 0..{m}")
        if npairs and m == 0:
            raise DigraphError("empty offset set has no valid digraphs on >= 2 vertices")

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.offsets)

    @property
    def pairs(self) -> list[tuple[int, int]]:
        return pairs_of(self.vertices)

    def choice_map(self) -> dict[tuple[int, int], int]:
        return dict(zip(self.pairs, self.choices))

    def bounds(self) -> list[tuple[int, int, Optional[Fraction], Optional[Fraction]]]:
        """``(i, j, lower, upper)`` per pair; ``None`` marks an infinite bound."""
        out = []
        for (i, j), k in zip(self.pairs, self.choices):
            lower = self.offsets[k - 1] if k > 0 else None
            upper = self.offsets[k] if k < self.m else None
            out.append((i, j, lower, upper))
        return out

    @property
    def edges(self) -> dict[tuple[int, int], Fraction]:
        """Edge ``(u, v) -> weight`` meaning ``x_u - x_v > weight``."""
        e: dict[tuple[int, int], Fraction] = {}
        for i, j, lower, upper in self.bounds():
            if lower is not None:
                e[(i, j)] = lower
            if upper is not None:
                e[(j, i)] = -upper
        return e

    def to_dict(self) -> dict:
        return {"n": self.n, "choices": list(self.choices)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str, spec: ArrangementSpec) -> "WeightedDigraph":
        data = json.loads(text)
        return digraph_from_choices(spec.with_n(int(data["n"])), data["choices"])


@dataclass(frozen=True)
class LevelCensus:
    """Region counts ``r_0 .. r_n`` by level, tagged with the method used."""
    n: int
    counts: tuple[int, ...]
    method: str
    offsets: tuple[Fraction, ...] = ()

    @property
    def total(self) -> int:
        return sum(self.counts)

    def __getitem__(self, l: int) -> int:
        return self.counts[l] if 0 <= l < len(self.counts) else 0

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "n": self.n,
            "A": [frac_str(a) for a in self.offsets],
            "r": [str(c) for c in self.counts],
            "total": str(self.total),
            "method": self.method,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: Mapping) -> "LevelCensus":
        return cls(
            int(data["n"]),
            tuple(int(x) for x in data["r"]),
            data["method"],
            tuple(Fraction(a) for a in data.get("A", ())),
        )

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "l", "value", "method"])
        for l, c in enumerate(self.counts):
            w.writerow([self.n, l, c, self.method])
        return buf.getvalue()


def digraph_from_choices(
    spec: ArrangementSpec,
    choices: Union[Mapping[tuple[int, int], int], Sequence[int]],
) -> WeightedDigraph:
    pairs = pairs_of(range(1, spec.n + 1))
    if isinstance(choices, Mapping):
        missing = [p for p in pairs if p not in choices]
        if missing:
            raise DigraphError(f"choices missing for pairs {missing}")
        seq = tuple(int(choices[p]) for p in pairs)
    else:
        seq = tuple(int(c) for c in choices)
    return WeightedDigraph(spec.offsets, tuple(range(1, spec.n + 1)), seq)


# ---------------------------------------------------------------- structure

def _adjacency(d: WeightedDigraph) -> dict[int, list[tuple[int, Fraction]]]:
    adj: dict[int, list[tuple[int, Fraction]]] = {v: [] for v in d.vertices}
    for (u, v), w in d.edges.items():
        adj[u].append((v, w))
    return adj


def strong_components(d: WeightedDigraph) -> list[tuple[int, ...]]:
    """Strong components in topological order of the condensation (sources first)."""
    adj = _adjacency(d)
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    on_stack: set[int] = set()
    stack: list[int] = []
    comps: list[tuple[int, ...]] = []
    counter = 0

    for root in d.vertices:
        if root in index:
            continue
        work = [(root, 0)]
        while work:
            v, pos = work.pop()
            if pos == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack.add(v)
            nbrs = adj[v]
            if pos < len(nbrs):
                work.append((v, pos + 1))
                w = nbrs[pos][0]
                if w not in index:
                    work.append((w, 0))
                elif w in on_stack:
                    low[v] = min(low[v], index[w])
                continue
            if low[v] == index[v]:
                comp = []
                while True:
                    x = stack.pop()
                    on_stack.discard(x)
                    comp.append(x)
                    if x == v:
                        break
                comps.append(tuple(sorted(comp)))
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    # Tarjan emits sinks first
    comps.reverse()
    return comps


def max_cycle_mean(vertices: Sequence[int], edges: Mapping[tuple[int, int], Fraction]) -> Optional[Fraction]:
    """Karp's maximum cycle mean of a strongly connected digraph, exactly.

    Returns ``None`` when there is no cycle.
    """
    vs = list(vertices)
    k = len(vs)
    pos = {v: i for i, v in enumerate(vs)}
    inc: list[list[tuple[int, Fraction]]] = [[] for _ in vs]
    for (u, v), w in edges.items():
        if u in pos and v in pos:
            inc[pos[v]].append((pos[u], Fraction(w)))
    # D[s][v]: heaviest walk with exactly s edges ending at v
    D: list[list[Optional[Fraction]]] = [[Fraction(0)] * k]
    for _ in range(k):
        prev = D[-1]
        row: list[Optional[Fraction]] = []
        for v in range(k):
            best = None
            for u, w in inc[v]:
                if prev[u] is not None:
                    cand = prev[u] + w
                    if best is None or cand > best:
                        best = cand
            row.append(best)
        D.append(row)
    result = None
    for v in range(k):
        if D[k][v] is None:
            continue
        worst = None
        for s in range(k):
            if D[s][v] is not None:
                val = (D[k][v] - D[s][v]) / (k - s)
                if worst is None or val < worst:
                    worst = val
        if worst is not None and (result is None or worst > result):
            result = worst
    return result


def is_m_acyclic(d: WeightedDigraph) -> bool:
    """True iff no directed cycle has non-negative weight sum."""
    edges = d.edges
    for comp in strong_components(d):
        if len(comp) < 2:
            continue
        mean = max_cycle_mean(comp, edges)
        if mean is not None and mean >= 0:
            return False
    return True


def level(d: WeightedDigraph) -> int:
    return len(strong_components(d))


def _require_region(d: WeightedDigraph) -> None:
    if not is_m_acyclic(d):
        raise DigraphError("digraph has an m-ascending cycle (empty region)")


# ---------------------------------------------------------------- enumeration

def _integer_weights(spec: ArrangementSpec) -> tuple[int, ...]:
    scaled, _ = normalize_integer(spec)
    return tuple(int(a) for a in scaled.offsets)


def _pair_edges(offs: Sequence[int], k: int) -> list[tuple[bool, int]]:
    """Edges of pair choice ``k`` as ``(forward, weight)``; forward means ``i -> j``."""
    m = len(offs)
    out = []
    if k > 0:
        out.append((True, offs[k - 1]))
    if k < m:
        out.append((False, -offs[k]))
    return out


def _add_edge(L: list[list], u: int, v: int, w: int) -> bool:
    """Insert ``u -> v`` into the longest-path closure ``L``; False on an m-ascending cycle."""
    if L[v][u] + w >= 0:
        return False
    n = len(L)
    Lu = [L[x][u] for x in range(n)]
    Lv = L[v]
    srcs = [x for x in range(n) if Lu[x] != NEG_INF]
    dsts = [y for y in range(n) if Lv[y] != NEG_INF]
    for x in srcs:
        base = Lu[x] + w
        row = L[x]
        for y in dsts:
            cand = base + Lv[y]
            if cand > row[y]:
                row[y] = cand
    return True


def _closure_levels(L: list[list]) -> int:
    n = len(L)
    seen = [False] * n
    comps = 0
    for x in range(n):
        if seen[x]:
            continue
        comps += 1
        for y in range(x, n):
            if L[x][y] != NEG_INF and L[y][x] != NEG_INF:
                seen[y] = True
    return comps


def _walk(n: int, offs: tuple[int, ...], prefix: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], int]]:
    """Depth-first walk over pair choices with m-ascending-cycle pruning.

    Yields ``(choices, level)`` for every region whose choice tuple starts
    with ``prefix``.
    """
    pairs = pairs_of(range(n))
    m = len(offs)
    L = [[0 if x == y else NEG_INF for y in range(n)] for x in range(n)]

    def apply(L, depth, k):
        i, j = pairs[depth]
        L2 = [row[:] for row in L]
        for forward, w in _pair_edges(offs, k):
            ok = _add_edge(L2, i, j, w) if forward else _add_edge(L2, j, i, w)
            if not ok:
                return None
        return L2

    for depth, k in enumerate(prefix):
        L = apply(L, depth, k)
        if L is None:
            return
    chosen = list(prefix)
    total = len(pairs)

    def rec(L, depth):
        if depth == total:
            yield tuple(chosen), _closure_levels(L)
            return
        for k in range(m + 1):
            L2 = apply(L, depth, k)
            if L2 is not None:
                chosen.append(k)
                yield from rec(L2, depth + 1)
                chosen.pop()

    yield from rec(L, len(prefix))


def search_space(spec: ArrangementSpec) -> int:
    return (spec.m + 1) ** math.comb(spec.n, 2)


def iter_regions(spec: ArrangementSpec, cap: Optional[int] = None) -> Iterator[WeightedDigraph]:
    """Every valid m-acyclic digraph of ``spec``, in lexicographic choice order."""
    _check_spec(spec, resolve_cap(cap, DEFAULT_CENSUS_CAP), "region enumeration")
    offs = _integer_weights(spec)
    verts = tuple(range(1, spec.n + 1))
    for choices, _ in _walk(spec.n, offs, ()):
        yield WeightedDigraph(spec.offsets, verts, choices)


def _check_spec(spec: ArrangementSpec, cap: int, what: str) -> None:
    if spec.n >= 2 and spec.m == 0:
        raise DigraphError("offset set must be non-empty for n >= 2")
    check_cap(search_space(spec), cap, what)


def _census_chunk(task) -> list[int]:
    n, offs, prefix = task
    counts = [0] * (n + 1)
    for _, lev in _walk(n, offs, prefix):
        counts[lev] += 1
    return counts


def enumerate_census(spec: ArrangementSpec, cap: Optional[int] = None, jobs: int = 1) -> LevelCensus:
    """Count valid m-acyclic digraphs of ``spec`` by number of strong components."""
    _check_spec(spec, resolve_cap(cap, DEFAULT_CENSUS_CAP), "enumerate_census")
    n = spec.n
    if n == 0:
        return LevelCensus(0, (1,), "digraph", spec.offsets)
    offs = _integer_weights(spec)
    if n == 1:
        tasks = [(n, offs, ())]
    else:
        tasks = [(n, offs, (k,)) for k in range(spec.m + 1)]
    counts = [0] * (n + 1)
    for part in run_jobs(_census_chunk, tasks, jobs):
        counts = [a + b for a, b in zip(counts, part)]
    return LevelCensus(n, tuple(counts), "digraph", spec.offsets)


# ---------------------------------------------------------------- structure theorem

def compose(
    parts: Sequence[Sequence[int]],
    components: Sequence[WeightedDigraph],
    spec: ArrangementSpec,
) -> WeightedDigraph:
    """Glue strongly connected components along an ordered set partition.

    Cross pairs point from the earlier part to the later one, with weight
    ``a_m`` when the smaller label comes first and ``-a_1`` otherwise.
    """
    if len(parts) != len(components):
        raise DigraphError("one component digraph is needed per part")
    where: dict[int, int] = {}
    for idx, (part, comp) in enumerate(zip(parts, components)):
        if tuple(sorted(part)) != comp.vertices:
            raise DigraphError(f"component {idx} is not on vertex set {sorted(part)}")
        if comp.offsets != spec.offsets:
            raise DigraphError(f"component {idx} uses a different offset set")
        if len(strong_components(comp)) != 1:
            raise DigraphError(f"component {idx} is not strongly connected")
        _require_region(comp)
        for v in part:
            if v in where:
                raise DigraphError(f"vertex {v} appears in two parts")
            where[v] = idx
    if sorted(where) != list(range(1, spec.n + 1)):
        raise DigraphError("parts do not partition the vertex set")
    inner: dict[tuple[int, int], int] = {}
    for comp in components:
        inner.update(comp.choice_map())
    choices = []
    for i, j in pairs_of(range(1, spec.n + 1)):
        if where[i] == where[j]:
            choices.append(inner[(i, j)])
        elif where[i] < where[j]:
            choices.append(spec.m)
        else:
            choices.append(0)
    return WeightedDigraph(spec.offsets, tuple(range(1, spec.n + 1)), tuple(choices))


def induced(d: WeightedDigraph, vertices: Sequence[int]) -> WeightedDigraph:
    cm = d.choice_map()
    vs = tuple(sorted(vertices))
    return WeightedDigraph(d.offsets, vs, tuple(cm[p] for p in pairs_of(vs)))


def decompose(d: WeightedDigraph) -> tuple[tuple[tuple[int, ...], ...], list[WeightedDigraph]]:
    """Ordered partition into strong components plus the induced component digraphs."""
    _require_region(d)
    parts = tuple(strong_components(d))
    return parts, [induced(d, p) for p in parts]


# ---------------------------------------------------------------- witnesses

def sample_point(d: WeightedDigraph) -> tuple[Fraction, ...]:
    """A rational point of the region encoded by ``d``.

    Offsets are first scaled to integers, so every cycle of a valid
    m-acyclic digraph weighs at most -1.  Each edge constraint is tightened
    by ``1/(n+1)``; a simple cycle has at most ``n`` edges, so the tightened
    system stays solvable and the longest-path potentials satisfy it.
    """
    _require_region(d)
    n = d.n
    if n == 0:
        return ()
    scaled, scale = normalize_integer(ArrangementSpec(n, d.offsets))
    sd = WeightedDigraph(scaled.offsets, d.vertices, d.choices)
    delta = Fraction(1, n + 1)
    idx = {v: i for i, v in enumerate(d.vertices)}
    best: list[list[Optional[Fraction]]] = [[None] * n for _ in range(n)]
    for x in range(n):
        best[x][x] = Fraction(0)
    for (u, v), w in sd.edges.items():
        best[idx[u]][idx[v]] = w + delta
    for mid in range(n):
        for x in range(n):
            if best[x][mid] is None:
                continue
            for y in range(n):
                if best[mid][y] is None:
                    continue
                cand = best[x][mid] + best[mid][y]
                if best[x][y] is None or cand > best[x][y]:
                    best[x][y] = cand
    pot = [max(c for c in best[x] if c is not None) for x in range(n)]
    return tuple(p / scale for p in pot)


def region_to_digraph(spec: ArrangementSpec, x: Sequence) -> WeightedDigraph:
    """Digraph of the region containing ``x``; raises if ``x`` is on a hyperplane."""
    if len(x) != spec.n:
        raise DigraphError(f"point has {len(x)} coordinates, expected {spec.n}")
    xs = [Fraction(v) for v in x]
    offs = list(spec.offsets)
    choices = []
    for i, j in pairs_of(range(1, spec.n + 1)):
        diff = xs[i - 1] - xs[j - 1]
        k = bisect_left(offs, diff)
        if k < len(offs) and offs[k] == diff:
            raise OnHyperplaneError(Hyperplane(i, j, diff))
        choices.append(k)
    return WeightedDigraph(spec.offsets, tuple(range(1, spec.n + 1)), tuple(choices))


def satisfies(d: WeightedDigraph, x: Sequence[Fraction]) -> bool:
    """Check every strict inequality ``lower < x_i - x_j < upper`` of ``d``."""
    pos = {v: i for i, v in enumerate(d.vertices)}
    for i, j, lower, upper in d.bounds():
        diff = x[pos[i]] - x[pos[j]]
        if lower is not None and not diff > lower:
            return False
        if upper is not None and not diff < upper:
            return False
    return True
