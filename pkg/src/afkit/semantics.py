"""Extension semantics: enumeration, verification, and acceptance decisions.

Supported semantics tags: conflict-free (cf), admissible (adm), complete (com),
grounded (grd), stable (stb), preferred (prf), semi-stable (sem), stage (stg),
and resolution-based grounded (grd_star, handled by the resolution module).

The enumeration engine is a backtracking walk over argument ids with bitmask
state.  For preferred/semi-stable it first absorbs the grounded part (every
complete extension contains grd(F) and excludes its targets), then splits the
remainder into weakly connected components and recombines the per-component
results; stage gets the component split only, since absorbing the grounded
range is not sound for plain conflict-free maximality.

brute_force is the deliberately naive oracle: literal definitions evaluated
over all subsets with frozenset algebra, sharing no search code with the
engine above.
"""
from __future__ import annotations

from enum import Enum
from typing import Iterable, Iterator

from .core import (
    AF,
    ArgSet,
    _attacked_mask,
    _char_mask,
    is_conflict_free,
    lift,
    restrict,
)

DEFAULT_SEARCH_CAP = 26
ORACLE_CAP = 20


class SearchCapError(RuntimeError):
    """Instance exceeds a configured enumeration cap; nothing was truncated."""


class Semantics(str, Enum):
    CF = "cf"
    ADM = "adm"
    COM = "com"
    GRD = "grd"
    STB = "stb"
    PRF = "prf"
    SEM = "sem"
    STG = "stg"
    GRD_STAR = "grd_star"


class ExtensionSet:
    """Extensions of one framework in canonical order (ascending bitmask)."""

    __slots__ = ("af", "extensions", "_masks")

    def __init__(self, af: AF, masks: Iterable[int]):
        self.af = af
        ordered = sorted(set(masks))
        self.extensions = tuple(ArgSet(m, af.n) for m in ordered)
        self._masks = frozenset(ordered)

    def masks(self) -> tuple[int, ...]:
        return tuple(e.mask for e in self.extensions)

    def names(self) -> list[tuple[str, ...]]:
        return [self.af.names(e) for e in self.extensions]

    def __len__(self) -> int:
        return len(self.extensions)

    def __iter__(self) -> Iterator[ArgSet]:
        return iter(self.extensions)

    def __contains__(self, s: ArgSet) -> bool:
        return s.mask in self._masks

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ExtensionSet)
            and self.af.n == other.af.n
            and self._masks == other._masks
        )

    def __repr__(self) -> str:
        return f"ExtensionSet({len(self.extensions)} extensions over {self.af.n} args)"


def _grounded_mask(af: AF) -> int:
    mask, prev = 0, -1
    while mask != prev:
        mask, prev = _char_mask(af, mask), mask
    return mask


def grounded(af: AF) -> ArgSet:
    """The least fixpoint of the characteristic function."""
    return ArgSet(_grounded_mask(af), af.n)


def _search(
    af: AF,
    *,
    admissible: bool,
    forced_in: int = 0,
    forced_out: int = 0,
    cover: int = 0,
) -> Iterator[int]:
    """Yield conflict-free (or admissible) sets as bitmasks.

    forced_in/forced_out pin membership decisions; cover prunes to sets whose
    final range includes every cover bit (cover == full_mask gives stable
    candidates directly).  Yield order is search order, not canonical order.
    """
    n = af.n
    out, inn = af.out_masks, af.in_masks
    blocked = forced_out | af.self_loop_mask
    # future_in[i]: still-choosable ids >= i; future_pot[i]: their ids+targets
    future_in = [0] * (n + 1)
    future_pot = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        free = not (blocked >> i & 1)
        future_in[i] = future_in[i + 1] | ((1 << i) if free else 0)
        future_pot[i] = future_pot[i + 1] | (((1 << i) | out[i]) if free else 0)

    def walk(i: int, chosen: int, covered: int, threats: int) -> Iterator[int]:
        if cover & ~(chosen | covered | future_pot[i]):
            return  # some required bit is out of reach
        if i == n:
            if threats == 0 and not (cover & ~(chosen | covered)):
                yield chosen
            return
        bit = 1 << i
        if not (bit & blocked) and not (covered & bit) and not (out[i] & chosen):
            nchosen = chosen | bit
            ncovered = covered | out[i]
            if admissible:
                nthreats = (threats | inn[i]) & ~ncovered
                # a threat nobody can ever counter kills the whole branch
                fresh = nthreats & ~threats
                dead = False
                while fresh:
                    low = fresh & -fresh
                    fresh ^= low
                    if not inn[low.bit_length() - 1] & future_in[i + 1]:
                        dead = True
                        break
                if not dead:
                    yield from walk(i + 1, nchosen, ncovered, nthreats)
            else:
                yield from walk(i + 1, nchosen, ncovered, 0)
        if not (bit & forced_in):
            yield from walk(i + 1, chosen, covered, threats)

    yield from walk(0, 0, 0, 0)


def _weak_component_masks(af: AF) -> list[int]:
    parent = list(range(af.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in af.attacks:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[rb] = ra
    groups: dict[int, int] = {}
    for v in range(af.n):
        r = find(v)
        groups[r] = groups.get(r, 0) | (1 << v)
    return [groups[r] for r in sorted(groups)]


def _subset_maximal(masks: Iterable[int]) -> list[int]:
    out: list[int] = []
    for m in sorted(set(masks), key=int.bit_count, reverse=True):
        if not any(m & ~k == 0 for k in out):
            out.append(m)
    return out


def _range_maximal(af: AF, masks: Iterable[int]) -> list[int]:
    pairs = [(m, m | _attacked_mask(af, m)) for m in set(masks)]
    best = set(_subset_maximal(r for _, r in pairs))
    return [m for m, r in pairs if r in best]


def _combine_components(af: AF, base: int, sub: AF, orig: tuple[int, ...], comp_fn) -> list[int]:
    combos = [base]
    for cmask in _weak_component_masks(sub):
        csub, corig = restrict(sub, ArgSet(cmask, sub.n))
        local = comp_fn(csub)
        lifted = [lift(lift(m, corig), orig) for m in local]
        combos = [p | q for p in combos for q in lifted]
    return combos


def _absorb_then_split(af: AF, comp_fn) -> list[int]:
    g = _grounded_mask(af)
    rest = af.full_mask & ~(g | _attacked_mask(af, g))
    if rest == 0:
        return [g]
    sub, orig = restrict(af, ArgSet(rest, af.n))
    return _combine_components(af, g, sub, orig, comp_fn)


def _enum_masks(af: AF, sem: Semantics) -> list[int]:
    if sem is Semantics.CF:
        return list(_search(af, admissible=False))
    if sem is Semantics.ADM:
        return list(_search(af, admissible=True))
    if sem is Semantics.GRD:
        return [_grounded_mask(af)]
    g = _grounded_mask(af)
    gatt = _attacked_mask(af, g)
    if sem is Semantics.COM:
        return [
            m
            for m in _search(af, admissible=True, forced_in=g, forced_out=gatt)
            if _char_mask(af, m) == m
        ]
    if sem is Semantics.STB:
        return list(
            _search(
                af,
                admissible=False,
                forced_in=g,
                forced_out=gatt,
                cover=af.full_mask,
            )
        )
    if sem is Semantics.PRF:
        return _absorb_then_split(
            af, lambda c: _subset_maximal(_search(c, admissible=True))
        )
    if sem is Semantics.SEM:
        return _absorb_then_split(
            af, lambda c: _range_maximal(c, _search(c, admissible=True))
        )
    if sem is Semantics.STG:
        return _combine_components(
            af,
            0,
            af,
            tuple(range(af.n)),
            lambda c: _range_maximal(c, _search(c, admissible=False)),
        )
    if sem is Semantics.GRD_STAR:
        from . import resolution

        return list(resolution.grd_star(af, max_args=None).masks())
    raise ValueError(f"unhandled semantics {sem!r}")


def enumerate_extensions(
    af: AF, semantics: Semantics | str, *, max_args: int | None = DEFAULT_SEARCH_CAP
) -> ExtensionSet:
    """All extensions under the given semantics, canonically ordered.

    Refuses frameworks beyond max_args arguments (default 26) rather than
    answering slowly or partially; pass max_args=None to lift the cap.
    """
    sem = Semantics(semantics)
    if max_args is not None and af.n > max_args:
        raise SearchCapError(
            f"{af.n} arguments exceed the enumeration cap of {max_args}"
        )
    return ExtensionSet(af, _enum_masks(af, sem))


def verify(af: AF, semantics: Semantics | str, s: ArgSet) -> bool:
    """Decide whether s is an extension under the given semantics."""
    sem = Semantics(semantics)
    mask = s.mask
    if sem is Semantics.GRD:
        return mask == _grounded_mask(af)
    if sem is Semantics.GRD_STAR:
        from . import resolution

        return resolution.verify_grd_star(af, s)
    if not is_conflict_free(af, s):
        return False
    if sem is Semantics.CF:
        return True
    if sem is Semantics.STB:
        return mask | _attacked_mask(af, mask) == af.full_mask
    if sem is Semantics.STG:
        rng = mask | _attacked_mask(af, mask)
        return all(
            m | _attacked_mask(af, m) == rng
            for m in _search(af, admissible=False, cover=rng)
        )
    if mask & ~_char_mask(af, mask):
        return False  # not admissible
    if sem is Semantics.ADM:
        return True
    if sem is Semantics.COM:
        return _char_mask(af, mask) == mask
    if sem is Semantics.PRF:
        return all(m == mask for m in _search(af, admissible=True, forced_in=mask))
    if sem is Semantics.SEM:
        rng = mask | _attacked_mask(af, mask)
        return all(
            m | _attacked_mask(af, m) == rng
            for m in _search(af, admissible=True, cover=rng)
        )
    raise ValueError(f"unhandled semantics {sem!r}")


def credulous(
    af: AF,
    semantics: Semantics | str,
    arg: int | str,
    *,
    max_args: int | None = DEFAULT_SEARCH_CAP,
) -> bool:
    """Is arg in at least one extension?

    cf/adm/com/grd/prf/stb answer by short-circuit search and ignore max_args;
    sem/stg/grd_star enumerate (capped).
    """
    sem = Semantics(semantics)
    a = af.arg_id(arg)
    bit = 1 << a
    if sem is Semantics.CF:
        return not af.self_loop_mask & bit
    if sem is Semantics.GRD:
        return bool(_grounded_mask(af) & bit)
    if sem in (Semantics.ADM, Semantics.COM, Semantics.PRF):
        # credulously accepted under preferred/complete iff under admissible
        return any(_search(af, admissible=True, forced_in=bit))
    if sem is Semantics.STB:
        return any(_search(af, admissible=False, forced_in=bit, cover=af.full_mask))
    exts = enumerate_extensions(af, sem, max_args=max_args)
    return any(e.mask & bit for e in exts)


def skeptical(
    af: AF,
    semantics: Semantics | str,
    arg: int | str,
    *,
    max_args: int | None = DEFAULT_SEARCH_CAP,
) -> bool:
    """Is arg in every extension?  Vacuously true when there are none.

    cf/adm/com/grd/stb answer by short-circuit search and ignore max_args;
    prf/sem/stg/grd_star enumerate (capped).
    """
    sem = Semantics(semantics)
    a = af.arg_id(arg)
    bit = 1 << a
    if sem in (Semantics.CF, Semantics.ADM):
        return False  # the empty set is conflict-free and admissible
    if sem in (Semantics.GRD, Semantics.COM):
        # the grounded extension is the least complete extension
        return bool(_grounded_mask(af) & bit)
    if sem is Semantics.STB:
        return not any(
            _search(af, admissible=False, forced_out=bit, cover=af.full_mask)
        )
    exts = enumerate_extensions(af, sem, max_args=max_args)
    return all(e.mask & bit for e in exts)


def brute_force(af: AF, semantics: Semantics | str) -> ExtensionSet:
    """Oracle enumeration by literal definition over every subset (n <= 20).

    Kept deliberately separate from the search engine: frozenset algebra over
    af.attacks, no bitmask walks, no pruning.
    """
    sem = Semantics(semantics)
    if sem is Semantics.GRD_STAR:
        raise ValueError("grd_star has its own oracle: resolution.grd_star_naive")
    if af.n > ORACLE_CAP:
        raise SearchCapError(f"{af.n} arguments exceed the oracle cap of {ORACLE_CAP}")
    n = af.n
    universe = frozenset(range(n))
    pairs = set(af.attacks)
    targets_of = {a: frozenset(b for x, b in pairs if x == a) for a in universe}
    attackers_of = {b: frozenset(x for x, y in pairs if y == b) for b in universe}

    def targets(s: frozenset) -> frozenset:
        acc: frozenset = frozenset()
        for a in s:
            acc |= targets_of[a]
        return acc

    def rng(s: frozenset) -> frozenset:
        return s | targets(s)

    def conflict_free(s: frozenset) -> bool:
        return not any(b in s for a in s for b in targets_of[a])

    def defended(s: frozenset, x: int) -> bool:
        return attackers_of[x] <= targets(s)

    subsets = [
        frozenset(i for i in range(n) if bits >> i & 1) for bits in range(1 << n)
    ]
    cf_sets = [s for s in subsets if conflict_free(s)]
    adm_sets = [s for s in cf_sets if all(defended(s, x) for x in s)]

    if sem is Semantics.CF:
        chosen = cf_sets
    elif sem is Semantics.ADM:
        chosen = adm_sets
    elif sem is Semantics.COM:
        chosen = [
            s
            for s in cf_sets
            if frozenset(x for x in universe if defended(s, x)) == s
        ]
    elif sem is Semantics.GRD:
        com = [
            s
            for s in cf_sets
            if frozenset(x for x in universe if defended(s, x)) == s
        ]
        chosen = [s for s in com if not any(t < s for t in com)]
    elif sem is Semantics.STB:
        chosen = [s for s in cf_sets if rng(s) == universe]
    elif sem is Semantics.PRF:
        chosen = [s for s in adm_sets if not any(s < t for t in adm_sets)]
    elif sem is Semantics.SEM:
        chosen = [s for s in adm_sets if not any(rng(s) < rng(t) for t in adm_sets)]
    elif sem is Semantics.STG:
        chosen = [s for s in cf_sets if not any(rng(s) < rng(t) for t in cf_sets)]
    else:
        raise ValueError(f"unhandled semantics {sem!r}")
    return ExtensionSet(af, [sum(1 << i for i in s) for s in chosen])
