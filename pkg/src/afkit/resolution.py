"""Resolution-based grounded semantics.

A resolution keeps one direction of every mutual attack and drops the other.
The resolution-based grounded extensions are the subset-minimal grounded
extensions taken over all resolutions.  Two independent engines:

* grd_star_naive enumerates every resolution literally (capped at 2^20);
* verify_grd_star / grd_star use the recursive characterization over minimal
  relevant components and never materialize a resolution.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .core import (
    AF,
    ArgSet,
    _attacked_mask,
    is_conflict_free,
    lift,
    project,
    restrict,
    sccs,
)
from .semantics import (
    DEFAULT_SEARCH_CAP,
    ExtensionSet,
    SearchCapError,
    _grounded_mask,
    _search,
)

RESOLUTION_CAP = 20


@dataclass(frozen=True)
class MutualPair:
    lo: int
    hi: int


@dataclass(frozen=True)
class Resolution:
    """One direction dropped per mutual pair; removed lists the dropped attacks."""

    removed: tuple[tuple[int, int], ...]


def mutual_pairs(af: AF) -> list[MutualPair]:
    return [
        MutualPair(a, b)
        for a, b in af.attacks
        if a < b and af.out_masks[b] >> a & 1
    ]


def resolutions(
    af: AF, *, max_pairs: int | None = RESOLUTION_CAP
) -> Iterator[Resolution]:
    """All resolutions, in binary-counter order over the sorted mutual pairs.

    Bit i of the counter picks the dropped direction of pair i: 0 drops
    (lo,hi), 1 drops (hi,lo).  Self-attacks are not mutual pairs.
    """
    pairs = mutual_pairs(af)
    if max_pairs is not None and len(pairs) > max_pairs:
        raise SearchCapError(
            f"{len(pairs)} mutual pairs exceed the resolution cap of {max_pairs}"
        )

    def gen() -> Iterator[Resolution]:
        for code in range(1 << len(pairs)):
            removed = tuple(
                (p.hi, p.lo) if code >> i & 1 else (p.lo, p.hi)
                for i, p in enumerate(pairs)
            )
            yield Resolution(tuple(sorted(removed)))

    return gen()


def _grounded_after_removal(n: int, out: list[int], inn: list[int]) -> int:
    mask, prev = 0, -1
    while mask != prev:
        prev = mask
        covered = 0
        t = mask
        while t:
            low = t & -t
            t ^= low
            covered |= out[low.bit_length() - 1]
        mask = 0
        for i in range(n):
            if inn[i] & ~covered == 0:
                mask |= 1 << i
    return mask


def grd_star_naive(af: AF, *, max_pairs: int | None = RESOLUTION_CAP) -> ExtensionSet:
    """Oracle engine: grounded extension of every resolution, then minimize."""
    results: set[int] = set()
    for res in resolutions(af, max_pairs=max_pairs):
        out = list(af.out_masks)
        inn = list(af.in_masks)
        for a, b in res.removed:
            out[a] &= ~(1 << b)
            inn[b] &= ~(1 << a)
        results.add(_grounded_after_removal(af.n, out, inn))
    minimal = [
        m for m in results if not any(o != m and o & ~m == 0 for o in results)
    ]
    return ExtensionSet(af, minimal)


def minimal_relevant(af: AF) -> list[ArgSet]:
    """Predecessor-free SCCs whose internal attacks form a symmetric,
    self-attack-free relation with an acyclic undirected collapse (a tree)."""
    part = sccs(af)
    found = []
    for idx in part.minimal():
        comp = part.components[idx]
        cmask = comp.mask
        directed_edges = 0
        ok = True
        for x in comp:
            if af.self_loop_mask >> x & 1:
                ok = False
                break
            if af.out_masks[x] & cmask != af.in_masks[x] & cmask:
                ok = False  # some internal attack lacks its converse
                break
            directed_edges += (af.out_masks[x] & cmask).bit_count()
        # symmetric and strongly connected: tree iff half the directed count
        # is one less than the node count
        if ok and directed_edges == 2 * (len(comp) - 1):
            found.append(comp)
    return found


@dataclass(frozen=True)
class RbgFrame:
    """One level of the recursive acceptance check, for inspection."""

    af: AF
    grounded_part: ArgSet
    remainder: ArgSet
    minimal_scc_union: ArgSet
    depth: int


def verify_grd_star(af: AF, u: ArgSet, *, trace: list[RbgFrame] | None = None) -> bool:
    """Decide membership of u in the resolution-based grounded extensions
    without enumerating resolutions."""
    if not is_conflict_free(af, u):
        return False
    return _accept(af, u.mask, 0, trace)


def _accept(af: AF, u_mask: int, depth: int, trace: list[RbgFrame] | None) -> bool:
    g = _grounded_mask(af)
    gplus = g | _attacked_mask(af, g)
    grounded_ok = u_mask & gplus == g
    t = u_mask & ~gplus
    rest = af.full_mask & ~gplus
    if rest == 0:
        if trace is not None:
            trace.append(
                RbgFrame(af, ArgSet(g, af.n), ArgSet(t, af.n), ArgSet(0, af.n), depth)
            )
        return grounded_ok and t == 0
    sub, orig = restrict(af, ArgSet(rest, af.n))
    components = minimal_relevant(sub)
    pi = 0
    for c in components:
        pi |= c.mask
    if trace is not None:
        trace.append(
            RbgFrame(
                af,
                ArgSet(g, af.n),
                ArgSet(t, af.n),
                ArgSet(lift(pi, orig), af.n),
                depth,
            )
        )
    if not grounded_ok:
        return False
    t_sub = project(t, orig)
    if not components:
        return t_sub == 0
    t_pi = t_sub & pi
    struck = _attacked_mask(sub, t_pi)
    if pi & ~(t_pi | struck):
        return False  # not stable inside the selected components
    next_mask = sub.full_mask & ~(pi | struck)
    t_next = t_sub & ~pi
    if t_next & ~next_mask:
        return False
    nsub, norig = restrict(sub, ArgSet(next_mask, sub.n))
    return _accept(nsub, project(t_next, norig), depth + 1, trace)


def grd_star(
    af: AF, *, max_args: int | None = DEFAULT_SEARCH_CAP
) -> ExtensionSet:
    """Enumerate resolution-based grounded extensions recursively.

    Candidates are the conflict-free sets containing the grounded extension
    and avoiding its targets (both sound: grounded extensions only grow when
    a mutual-attack direction is dropped, and stay conflict-free w.r.t. the
    full relation); each candidate is then checked recursively.
    """
    if max_args is not None and af.n > max_args:
        raise SearchCapError(
            f"{af.n} arguments exceed the enumeration cap of {max_args}"
        )
    g = _grounded_mask(af)
    gatt = _attacked_mask(af, g)
    masks = [
        m
        for m in _search(af, admissible=False, forced_in=g, forced_out=gatt)
        if _accept(af, m, 0, None)
    ]
    return ExtensionSet(af, masks)
