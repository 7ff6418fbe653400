"""Inverse-property predicates (WIP, CIP, AIP), their relative versions on a
designated substructure, unipotency, and inverse-cycle decompositions."""

from __future__ import annotations

import random
from dataclasses import dataclass
from collections import Counter

from .core import Quasigroup, SQuasigroup, identity_element, induced, inverse_maps
from .perms import Perm, cycles, is_perm

WIP = "wip"
CIP = "cip"
AIP = "aip"
PROPERTY_KINDS = (WIP, CIP, AIP)


def inverse_pair(q: Quasigroup) -> tuple[Perm | None, Perm | None]:
    """Right and left inverse maps used by the identity checks.

    When the table has an identity element e, these are the usual maps
    x -> x\\e and x -> e/x (always defined).  Otherwise the crossed-inverse
    maps from :func:`inverse_maps` are used; either may be absent.  On tables
    where both notions apply they coincide.
    """
    e = identity_element(q)
    if e is None:
        im = inverse_maps(q)
        return im.rho, im.lam
    rho = tuple(q.ldiv(x, e) for x in range(q.order))
    lam = tuple(q.rdiv(x, e) for x in range(q.order))
    return (rho if is_perm(rho) else None), (lam if is_perm(lam) else None)


def has_property(q: Quasigroup, kind: str) -> bool:
    """Whether the inverse-property identity of the given kind holds for all
    pairs.  False (not an error) when the needed inverse map is absent."""
    if kind not in PROPERTY_KINDS:
        raise ValueError(f"unknown property kind: {kind!r}")
    rho, _ = inverse_pair(q)
    if rho is None:
        return False
    t = q.table
    m = q.order
    rng = range(m)
    if kind == CIP:
        return all(t[t[x][y]][rho[x]] == y for x in rng for y in rng)
    if kind == WIP:
        return all(t[x][rho[t[y][x]]] == rho[y] for x in rng for y in rng)
    return all(rho[t[x][y]] == t[rho[x]][rho[y]] for x in rng for y in rng)


def cip_forms(q: Quasigroup) -> dict[str, bool]:
    """The four equivalent shapes of the cross-inverse identity, evaluated
    independently (used to verify they agree on every CIP table)."""
    rho, lam = inverse_pair(q)
    t = q.table
    rng = range(q.order)
    out = {
        "xy_xr": False,  # (x*y) * rho(x) = y
        "x_yxr": False,  # x * (y * rho(x)) = y
        "xl_yx": False,  # lam(x) * (y*x)   = y
        "xly_x": False,  # (lam(x)*y) * x   = y
    }
    if rho is not None:
        out["xy_xr"] = all(t[t[x][y]][rho[x]] == y for x in rng for y in rng)
        out["x_yxr"] = all(t[x][t[y][rho[x]]] == y for x in rng for y in rng)
    if lam is not None:
        out["xl_yx"] = all(t[lam[x]][t[y][x]] == y for x in rng for y in rng)
        out["xly_x"] = all(t[t[lam[x]][y]][x] == y for x in rng for y in rng)
    return out


def is_smarandache_property(sq: SQuasigroup, kind: str) -> bool:
    """Whether the induced table on the designated subset has the property."""
    return has_property(induced(sq.q, sq.sub), kind)


@dataclass(frozen=True)
class CycleDecomposition:
    """Cycles of the right crossed-inverse map.  Each cycle starts at its
    least element; cycles are ordered by that element."""

    cycles: tuple[tuple[int, ...], ...]
    lengths: tuple[int, ...]

    def counts(self) -> list[tuple[int, int]]:
        """(length, multiplicity) pairs, ascending by length."""
        return sorted(Counter(self.lengths).items())


def inverse_cycles(q: Quasigroup) -> CycleDecomposition:
    rho = inverse_maps(q).rho
    if rho is None:
        raise ValueError("no right crossed inverse map")
    cyc = cycles(rho)
    return CycleDecomposition(cyc, tuple(sorted(len(c) for c in cyc)))


def is_unipotent(q: Quasigroup) -> bool:
    """True when x*x is the same element for every x."""
    d0 = q.table[0][0]
    return all(q.table[x][x] == d0 for x in range(q.order))


def reduced_latin_squares(n: int, rng: random.Random | None = None):
    """Yield every n x n Latin square whose first row and column are
    0..n-1 in order; these are exactly the loop tables with identity 0.

    With ``rng`` the branching order is shuffled, which turns the generator
    into a sampler of random such squares.
    """
    if n < 1:
        raise ValueError("n must be positive")
    table = [[-1] * n for _ in range(n)]
    for k in range(n):
        table[0][k] = k
        table[k][0] = k
    row_used = [set(r for r in row if r >= 0) for row in table]
    col_used = [set(table[i][j] for i in range(n) if table[i][j] >= 0) for j in range(n)]
    cells = [(i, j) for i in range(1, n) for j in range(1, n)]

    def fill(idx):
        if idx == len(cells):
            yield tuple(tuple(row) for row in table)
            return
        i, j = cells[idx]
        options = [v for v in range(n) if v not in row_used[i] and v not in col_used[j]]
        if rng is not None:
            rng.shuffle(options)
        for v in options:
            table[i][j] = v
            row_used[i].add(v)
            col_used[j].add(v)
            yield from fill(idx + 1)
            table[i][j] = -1
            row_used[i].discard(v)
            col_used[j].discard(v)

    yield from fill(0)


def all_loops(max_order: int):
    """Yield (order, Quasigroup) for every loop table with identity 0 of each
    order up to the bound."""
    for n in range(1, max_order + 1):
        for table in reduced_latin_squares(n):
            yield n, Quasigroup(n, table)


def sample_loops(n: int, count: int, seed: int) -> list[Quasigroup]:
    """Random loop tables of one order, sampled by shuffled backtracking."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        table = next(iter(reduced_latin_squares(n, rng)))
        out.append(Quasigroup(n, table))
    return out
