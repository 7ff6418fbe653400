"""Finite quasigroups as dense Cayley tables over element indices 0..m-1.

A table is accepted only when every row and every column is a permutation of
0..m-1, so products and both divisions always have unique solutions.  All
values are immutable after construction and every operation is a pure
function of its inputs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import LatinError
from .perms import Perm, is_perm

PRODUCT = "product"
LEFT_DIVIDE = "left_divide"
RIGHT_DIVIDE = "right_divide"


def _latin_violation(table):
    """Return (axis, index, symbol) for the first duplicate, or None."""
    m = len(table)
    for i, row in enumerate(table):
        seen = [False] * m
        for v in row:
            if not 0 <= v < m:
                raise LatinError(f"row {i}: entry {v} outside 0..{m - 1}")
            if seen[v]:
                return ("row", i, v)
            seen[v] = True
    for j in range(m):
        seen = [False] * m
        for i in range(m):
            v = table[i][j]
            if seen[v]:
                return ("column", j, v)
            seen[v] = True
    return None


@dataclass(frozen=True)
class Quasigroup:
    """Cayley table: ``table[x][y]`` is the product x*y.

    Construction validates the Latin conditions; use :func:`validate_latin`
    for friendly coercion from nested lists.
    """

    order: int
    table: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        table = tuple(tuple(int(v) for v in row) for row in self.table)
        object.__setattr__(self, "table", table)
        if self.order < 1:
            raise LatinError("order must be positive")
        if len(table) != self.order or any(len(r) != self.order for r in table):
            raise LatinError(f"table is not {self.order}x{self.order}")
        hit = _latin_violation(table)
        if hit is not None:
            axis, idx, sym = hit
            raise LatinError(f"{axis} {idx} repeats symbol {sym}")
        if self.labels is not None:
            labels = tuple(str(s) for s in self.labels)
            if len(labels) != self.order:
                raise LatinError("labels length does not match order")
            object.__setattr__(self, "labels", labels)

    def op(self, a: int, b: int) -> int:
        return self.table[a][b]

    def ldiv(self, a: int, b: int) -> int:
        """The unique x with a*x = b."""
        return self.table[a].index(b)

    def rdiv(self, a: int, b: int) -> int:
        """The unique y with y*a = b."""
        col = [self.table[i][a] for i in range(self.order)]
        return col.index(b)


def validate_latin(table, labels=None) -> Quasigroup:
    """Build a Quasigroup from a nested sequence, reporting the first
    offending row/column and the duplicated symbol on failure."""
    rows = [list(r) for r in table]
    m = len(rows)
    if m == 0 or any(len(r) != m for r in rows):
        raise LatinError("table must be square and non-empty")
    return Quasigroup(m, tuple(tuple(r) for r in rows), labels)


def evaluate(q: Quasigroup, kind: str, a: int, b: int) -> int:
    if not (0 <= a < q.order and 0 <= b < q.order):
        raise ValueError(f"index out of range for order {q.order}: ({a}, {b})")
    if kind == PRODUCT:
        return q.op(a, b)
    if kind == LEFT_DIVIDE:
        return q.ldiv(a, b)
    if kind == RIGHT_DIVIDE:
        return q.rdiv(a, b)
    raise ValueError(f"unknown operation kind: {kind!r}")


def identity_element(q: Quasigroup) -> int | None:
    """The two-sided identity, or None.  At most one can exist."""
    m = q.order
    for e in range(m):
        if q.table[e] == tuple(range(m)) and all(q.table[x][e] == x for x in range(m)):
            return e
    return None


@dataclass(frozen=True)
class InverseMaps:
    """Crossed-inverse maps defined by universal properties.

    ``rho`` satisfies (x*y)*rho(x) = y for all x, y; ``lam`` satisfies
    lam(x)*(y*x) = y for all x, y.  Either may be absent: existence of rho is
    exactly the cross inverse property.
    """

    rho: Perm | None
    lam: Perm | None


def inverse_maps(q: Quasigroup) -> InverseMaps:
    m = q.order
    t = q.table
    rho: list[int] | None = []
    for x in range(m):
        z = q.ldiv(t[x][0], 0)  # solve (x*0)*z = 0
        if all(t[t[x][y]][z] == y for y in range(m)):
            rho.append(z)
        else:
            rho = None
            break
    lam: list[int] | None = []
    for x in range(m):
        w = q.rdiv(t[0][x], 0)  # solve w*(0*x) = 0
        if all(t[w][t[y][x]] == y for y in range(m)):
            lam.append(w)
        else:
            lam = None
            break
    rho_p = tuple(rho) if rho is not None and is_perm(rho) else None
    lam_p = tuple(lam) if lam is not None and is_perm(lam) else None
    return InverseMaps(rho_p, lam_p)


def subquasigroup_closure(q: Quasigroup, seed) -> tuple[int, ...]:
    """Smallest superset of seed closed under product and both divisions."""
    cur = set(int(x) for x in seed)
    if not cur:
        raise ValueError("seed must be non-empty")
    if any(not 0 <= x < q.order for x in cur):
        raise ValueError("seed element out of range")
    t = q.table
    while True:
        new = set()
        elems = list(cur)
        for a in elems:
            for b in elems:
                p = t[a][b]
                if p not in cur:
                    new.add(p)
                x = q.ldiv(a, b)
                if x not in cur:
                    new.add(x)
                y = q.rdiv(a, b)
                if y not in cur:
                    new.add(y)
        if not new:
            return tuple(sorted(cur))
        cur |= new


def is_closed(q: Quasigroup, sub) -> bool:
    s = set(sub)
    return all(q.table[a][b] in s for a in s for b in s)


def is_associative_subset(q: Quasigroup, sub) -> bool:
    s = sorted(set(sub))
    if not is_closed(q, s):
        raise ValueError("subset is not closed under the product")
    t = q.table
    return all(t[t[a][b]][c] == t[a][t[b][c]] for a in s for b in s for c in s)


def find_substructures(q: Quasigroup, require_associative: bool = False,
                       cap: int = 64) -> list[tuple[int, ...]]:
    """All nontrivial proper closed subsets reachable by closing singletons
    and pairs, deduplicated and sorted by (size, contents)."""
    m = q.order
    if m > cap:
        raise ValueError(f"order {m} exceeds substructure search cap {cap}")
    found = set()
    for a in range(m):
        found.add(subquasigroup_closure(q, (a,)))
        for b in range(a + 1, m):
            found.add(subquasigroup_closure(q, (a, b)))
    out = [s for s in found if 2 <= len(s) < m]
    if require_associative:
        out = [s for s in out if is_associative_subset(q, s)]
    return sorted(out, key=lambda s: (len(s), s))


@dataclass(frozen=True)
class SQuasigroup:
    """A quasigroup with a designated nontrivial closed subset.

    The induced table on ``sub`` is automatically Latin; associativity of the
    subset is a separate query (:func:`is_associative_subset`), not a
    construction requirement.
    """

    q: Quasigroup
    sub: tuple[int, ...]

    def __post_init__(self):
        sub = tuple(sorted(int(x) for x in set(self.sub)))
        object.__setattr__(self, "sub", sub)
        m = self.q.order
        if not 2 <= len(sub) < m:
            raise ValueError(f"designated subset must have 2 <= size < {m}, got {len(sub)}")
        if any(not 0 <= x < m for x in sub):
            raise ValueError("designated subset element out of range")
        if not is_closed(self.q, sub):
            raise ValueError("designated subset is not closed under the product")

    @property
    def order(self) -> int:
        return self.q.order


def induced(q: Quasigroup, sub) -> Quasigroup:
    """The sub-table on a closed subset, relabeled to positions 0..k-1 in
    increasing element order."""
    elems = sorted(set(sub))
    if not is_closed(q, elems):
        raise ValueError("subset is not closed under the product")
    pos = {e: i for i, e in enumerate(elems)}
    table = tuple(tuple(pos[q.table[a][b]] for b in elems) for a in elems)
    return Quasigroup(len(elems), table)


def generating_sequence(q: Quasigroup) -> tuple[int, ...]:
    """Greedy generating sequence: repeatedly add the least element outside
    the closure of what has been chosen so far."""
    m = q.order
    chosen: list[int] = []
    closed: set[int] = set()
    while len(closed) < m:
        nxt = min(x for x in range(m) if x not in closed)
        chosen.append(nxt)
        closed = set(subquasigroup_closure(q, chosen))
    return tuple(chosen)


def is_isomorphic(q1: Quasigroup, q2: Quasigroup) -> Perm | None:
    """A bijection f with f(x*y) = f(x)*f(y), or None.  Found by backtracking
    over images of a generating sequence with consistency propagation."""
    from .morphisms import search_morphisms  # local import to avoid a cycle

    hits = search_morphisms(q1, q2, limit=1)
    return hits[0] if hits else None
