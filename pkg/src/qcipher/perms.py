"""Permutations in one-line notation, composed left to right.

``compose(p, q)`` applies ``p`` first and ``q`` second, so a chain written
``p q`` acts on a point as ``q[p[x]]``.  Every higher-level operation in the
package (automorphism search, isotopism transport, key derivation) uses this
one convention.
"""

from __future__ import annotations

import random

Perm = tuple[int, ...]


def is_perm(images) -> bool:
    return sorted(images) == list(range(len(images)))


def check_perm(images) -> Perm:
    p = tuple(int(v) for v in images)
    if not is_perm(p):
        raise ValueError(f"not a permutation of 0..{len(p) - 1}: {list(p)}")
    return p


def identity(m: int) -> Perm:
    return tuple(range(m))


def compose(p: Perm, q: Perm) -> Perm:
    """Apply p, then q."""
    if len(p) != len(q):
        raise ValueError(f"size mismatch: {len(p)} vs {len(q)}")
    return tuple(q[x] for x in p)


def invert(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def conjugate(p: Perm, psi: Perm) -> Perm:
    """psi-inverse, then p, then psi; pointwise ``psi[p[psi_inv[x]]]``."""
    return compose(compose(invert(psi), p), psi)


def stabilizes(p: Perm, subset) -> bool:
    """True when p maps the subset onto itself (setwise)."""
    sub = set(subset)
    return all(p[x] in sub for x in sub)


def cycles(p: Perm) -> tuple[tuple[int, ...], ...]:
    """Disjoint cycles, each rotated to start at its least element, ordered
    by that least element.  Fixed points appear as 1-cycles."""
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        x = p[start]
        while x != start:
            cyc.append(x)
            seen[x] = True
            x = p[x]
        out.append(tuple(cyc))
    return tuple(out)


def random_perm(m: int, rng: random.Random) -> Perm:
    images = list(range(m))
    rng.shuffle(images)
    return tuple(images)


def random_stabilizing(m: int, subset, rng: random.Random) -> Perm:
    """Uniform bijection on 0..m-1 mapping the subset onto itself: the subset
    and its complement are shuffled independently."""
    sub = sorted(set(subset))
    rest = [x for x in range(m) if x not in set(sub)]
    sub_img = sub[:]
    rest_img = rest[:]
    rng.shuffle(sub_img)
    rng.shuffle(rest_img)
    out = [0] * m
    for src, dst in zip(sub, sub_img):
        out[src] = dst
    for src, dst in zip(rest, rest_img):
        out[src] = dst
    return tuple(out)
