"""Exact permutation algebra on {1..n}.

Permutations are stored in word form: a tuple ``p`` of length ``n`` with
``p[i]`` the 0-based image of the 0-based point ``i``.  All external I/O
(cycle strings, JSON) is 1-based; conversion happens only at the boundary.

The product convention is ``compose(p, q) = p after q``, i.e.
``compose(p, q)(x) = p(q(x))``.  Under this convention the two worked
degree-6 local monodromies (1,3,6)(4,5) and (1,2)(3,5) multiply to the
canonical 6-cycle (1,2,...,6), and the dihedral pair acting on residues by
i -> -i and i -> -i-1 multiplies to i -> i+1; a unit test pins this down.
"""

from __future__ import annotations

import re
from collections import Counter
from typing import Iterable, Iterator, Optional, Sequence


class PermError(ValueError):
    """Malformed permutation input (bad cycle string, degree mismatch...)."""


class ClosureOverflow(RuntimeError):
    """Generated subgroup exceeded the element-count cap."""

    def __init__(self, cap: int, partial_count: int):
        super().__init__(f"closure exceeded cap {cap} (saw {partial_count} elements)")
        self.cap = cap
        self.partial_count = partial_count


def identity(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def is_permutation(word: Sequence[int]) -> bool:
    n = len(word)
    return sorted(word) == list(range(n))


def compose(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    """Product p*q, acting as "apply q first, then p"."""
    if len(p) != len(q):
        raise PermError(f"degree mismatch: {len(p)} vs {len(q)}")
    return tuple(p[x] for x in q)


def compose_all(perms: Iterable[Sequence[int]], n: int) -> tuple[int, ...]:
    """Product p1*p2*...*pk under the compose convention (pk applied first)."""
    result = identity(n)
    for p in perms:
        result = compose(result, p)
    return result


def inverse(p: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def power(p: Sequence[int], k: int) -> tuple[int, ...]:
    n = len(p)
    if k < 0:
        return power(inverse(p), -k)
    result = identity(n)
    base = tuple(p)
    while k:
        if k & 1:
            result = compose(result, base)
        base = compose(base, base)
        k >>= 1
    return result


def conjugate(g: Sequence[int], p: Sequence[int]) -> tuple[int, ...]:
    """g * p * g^-1."""
    n = len(p)
    result = [0] * n
    for i in range(n):
        result[g[i]] = g[p[i]]
    return tuple(result)


def cycles(p: Sequence[int]) -> list[list[int]]:
    """Disjoint cycles as 0-based point lists, fixed points included.

    Each cycle starts at its smallest point; cycles are ordered by that point.
    """
    n = len(p)
    seen = [False] * n
    out = []
    for start in range(n):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        x = p[start]
        while x != start:
            cyc.append(x)
            seen[x] = True
            x = p[x]
        out.append(cyc)
    return out


def cycle_type(p: Sequence[int]) -> tuple[int, ...]:
    """Multiset of cycle lengths in non-increasing order, fixed points as 1s."""
    return tuple(sorted((len(c) for c in cycles(p)), reverse=True))


def num_cycles(p: Sequence[int]) -> int:
    return len(cycles(p))


def order(p: Sequence[int]) -> int:
    from math import lcm

    return lcm(*(len(c) for c in cycles(p))) if p else 1


def parity(p: Sequence[int]) -> int:
    """0 for even, 1 for odd."""
    return (len(p) - num_cycles(p)) % 2


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> tuple[int, ...]:
    """Parse cycle notation like "(1,3,6)(4,5)" into a permutation word.

    Unlisted points are fixed; the empty string is the identity.  Raises
    PermError naming the offending token on repeated points, points out of
    range, or malformed syntax.
    """
    if degree < 0:
        raise PermError(f"degree must be >= 0, got {degree}")
    stripped = re.sub(r"\s+", "", text)
    if stripped in ("", "()"):
        return identity(degree)
    consumed = _CYCLE_RE.sub("", stripped)
    if consumed:
        raise PermError(f"malformed cycle notation near {consumed[:12]!r}")
    word = list(range(degree))
    used: set[int] = set()
    for body in _CYCLE_RE.findall(stripped):
        if not body:
            continue
        points = []
        for token in body.split(","):
            if not re.fullmatch(r"\d+", token):
                raise PermError(f"malformed point {token!r}")
            pt = int(token)
            if not 1 <= pt <= degree:
                raise PermError(f"point {pt} outside 1..{degree}")
            if pt - 1 in used:
                raise PermError(f"repeated point {pt}")
            used.add(pt - 1)
            points.append(pt - 1)
        for a, b in zip(points, points[1:] + points[:1]):
            word[a] = b
    return tuple(word)


def format_cycles(p: Sequence[int]) -> str:
    """Canonical 1-based cycle string; fixed points omitted, identity is "()"."""
    parts = []
    for cyc in cycles(p):
        if len(cyc) > 1:
            parts.append("(" + ",".join(str(x + 1) for x in cyc) + ")")
    return "".join(parts) if parts else "()"


def cycles_to_json(p: Sequence[int]) -> list[list[int]]:
    """Nontrivial cycles as 1-based lists (the JSON wire form)."""
    return [[x + 1 for x in c] for c in cycles(p) if len(c) > 1]


def perm_from_json(cycs: Sequence[Sequence[int]], degree: int) -> tuple[int, ...]:
    word = list(range(degree))
    used: set[int] = set()
    for cyc in cycs:
        pts = []
        for pt in cyc:
            if not 1 <= pt <= degree:
                raise PermError(f"point {pt} outside 1..{degree}")
            if pt - 1 in used:
                raise PermError(f"repeated point {pt}")
            used.add(pt - 1)
            pts.append(pt - 1)
        for a, b in zip(pts, pts[1:] + pts[:1]):
            word[a] = b
    return tuple(word)


def is_transitive(perms: Sequence[Sequence[int]], degree: int) -> bool:
    """True if the group generated by perms acts transitively on the points."""
    if degree <= 1:
        return True
    if not perms:
        return False
    parent = list(range(degree))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in perms:
        for i in range(degree):
            ri, rj = find(i), find(p[i])
            if ri != rj:
                parent[ri] = rj
    root = find(0)
    return all(find(i) == root for i in range(degree))


def closure(
    generators: Sequence[Sequence[int]], cap: int = 2_000_000
) -> set[tuple[int, ...]]:
    """The full generated subgroup as a set; raises ClosureOverflow past cap."""
    if cap < 1:
        raise ValueError("cap must be >= 1")
    gens = [tuple(g) for g in generators]
    if gens:
        n = len(gens[0])
        if any(len(g) != n for g in gens):
            raise PermError("generators must share one degree")
    else:
        n = 0
    elems: set[tuple[int, ...]] = {identity(n)}
    frontier = [identity(n)]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple(x[v] for v in g)
                if y not in elems:
                    if len(elems) >= cap:
                        raise ClosureOverflow(cap, len(elems))
                    elems.add(y)
                    nxt.append(y)
        frontier = nxt
    return elems


def _cycle_len_signature(
    perms: Sequence[Sequence[int]], degree: int
) -> list[tuple[int, ...]]:
    """Per point, the vector of cycle lengths through it in each permutation."""
    lengths = []
    for p in perms:
        lens = [0] * degree
        for cyc in cycles(p):
            for x in cyc:
                lens[x] = len(cyc)
        lengths.append(lens)
    return [tuple(lens[i] for lens in lengths) for i in range(degree)]


def simultaneous_conjugators(
    pairs: Sequence[tuple[Sequence[int], Sequence[int]]],
) -> Iterator[tuple[int, ...]]:
    """Yield every g with g*x_i*g^-1 = y_i for all pairs (x_i, y_i).

    Deterministic backtracking over point images, points ordered smallest
    cycle first, with cycle-structure pruning.
    """
    if not pairs:
        yield ()
        return
    xs = [tuple(x) for x, _ in pairs]
    ys = [tuple(y) for _, y in pairs]
    n = len(xs[0])
    if any(len(p) != n for p in xs + ys):
        raise PermError("all permutations must share one degree")
    for x, y in zip(xs, ys):
        if cycle_type(x) != cycle_type(y):
            return
    sig_x = _cycle_len_signature(xs, n)
    sig_y = _cycle_len_signature(ys, n)
    point_order = sorted(range(n), key=lambda i: (min(sig_x[i]), sig_x[i], i))
    sig_buckets: dict[tuple[int, ...], list[int]] = {}
    for j in range(n):
        sig_buckets.setdefault(sig_y[j], []).append(j)

    g = [-1] * n
    used = [False] * n

    def assign(a: int, b: int, trail: list[int]) -> bool:
        # propagate g(x_i(a)) = y_i(g(a)) transitively
        stack = [(a, b)]
        while stack:
            u, v = stack.pop()
            if g[u] == v:
                continue
            if g[u] != -1 or used[v] or sig_x[u] != sig_y[v]:
                return False
            g[u] = v
            used[v] = True
            trail.append(u)
            for x, y in zip(xs, ys):
                stack.append((x[u], y[v]))
        return True

    def undo(trail: list[int]) -> None:
        for u in trail:
            used[g[u]] = False
            g[u] = -1

    def solve(idx: int) -> Iterator[tuple[int, ...]]:
        while idx < n and g[point_order[idx]] != -1:
            idx += 1
        if idx == n:
            yield tuple(g)
            return
        a = point_order[idx]
        for b in sig_buckets.get(sig_x[a], ()):
            if used[b]:
                continue
            trail: list[int] = []
            if assign(a, b, trail):
                yield from solve(idx + 1)
            undo(trail)

    yield from solve(0)


def simultaneous_conjugator(
    pairs: Sequence[tuple[Sequence[int], Sequence[int]]],
) -> Optional[tuple[int, ...]]:
    """Some g with g*x_i*g^-1 = y_i for all i, or None if none exists."""
    return next(simultaneous_conjugators(pairs), None)


def permutations_of_type(n: int, parts: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """All permutations of degree n with the given cycle type, without repeats.

    Only nontrivial cycles are placed (fixed points are the leftovers); cycles
    of equal length are deduplicated by forcing their smallest points to
    appear in increasing order.
    """
    from itertools import permutations as _perms

    if sum(parts) != n:
        raise ValueError(f"parts {parts} do not sum to degree {n}")
    lengths = sorted((p for p in parts if p > 1), reverse=True)
    word = list(range(n))

    def build(remaining: list[int], idx: int, prev_min: int):
        if idx == len(lengths):
            yield tuple(word)
            return
        length = lengths[idx]
        # among equal-length cycles, minima must increase
        floor = prev_min if idx > 0 and lengths[idx - 1] == length else -1
        for m in remaining:
            if m <= floor:
                continue
            bigger = [x for x in remaining if x > m]
            if len(bigger) < length - 1:
                continue
            for tail in _perms(bigger, length - 1):
                cyc = (m,) + tail
                for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                    word[a] = b
                rest = [x for x in remaining if x != m and x not in tail]
                yield from build(rest, idx + 1, m)
                for a in cyc:
                    word[a] = a

    yield from build(list(range(n)), 0, -1)
