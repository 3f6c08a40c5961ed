"""Core data structures for abstract argumentation frameworks.

An AF is a finite set of arguments plus a binary defeat (attack) relation.
Arguments get dense integer ids in order of first appearance; argument sets
are bitmasks wrapped in ArgSet, with id 0 on the least-significant bit.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

NAME_RE = re.compile(r"[a-z][a-z0-9_]*\Z")
_FACT_RE = re.compile(r"\s*([a-z][a-z0-9_]*)\s*\(\s*([a-z0-9_,\s]*?)\s*\)\s*\.")


class ApxError(ValueError):
    """Raised on malformed APX input; carries the 1-based source line."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


@dataclass(frozen=True)
class Argument:
    id: int
    name: str


class ArgSet:
    """Immutable argument set over a fixed universe of n ids, backed by a bitmask."""

    __slots__ = ("mask", "n")

    def __init__(self, mask: int, n: int):
        if mask < 0 or mask >> n:
            raise ValueError(f"mask {mask:#x} out of range for universe of {n}")
        object.__setattr__(self, "mask", mask)
        object.__setattr__(self, "n", n)

    def __setattr__(self, *_):
        raise AttributeError("ArgSet is immutable")

    @classmethod
    def from_ids(cls, ids: Iterable[int], n: int) -> "ArgSet":
        mask = 0
        for i in ids:
            mask |= 1 << i
        return cls(mask, n)

    def ids(self) -> list[int]:
        return [i for i in range(self.n) if self.mask >> i & 1]

    def __iter__(self) -> Iterator[int]:
        return iter(self.ids())

    def __contains__(self, i: int) -> bool:
        return 0 <= i < self.n and bool(self.mask >> i & 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def _check(self, other: "ArgSet") -> None:
        if self.n != other.n:
            raise ValueError("ArgSet universes differ")

    def __or__(self, other: "ArgSet") -> "ArgSet":
        self._check(other)
        return ArgSet(self.mask | other.mask, self.n)

    def __and__(self, other: "ArgSet") -> "ArgSet":
        self._check(other)
        return ArgSet(self.mask & other.mask, self.n)

    def __sub__(self, other: "ArgSet") -> "ArgSet":
        self._check(other)
        return ArgSet(self.mask & ~other.mask, self.n)

    def __le__(self, other: "ArgSet") -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def __lt__(self, other: "ArgSet") -> bool:
        return self <= other and self.mask != other.mask

    def __eq__(self, other) -> bool:
        return isinstance(other, ArgSet) and self.mask == other.mask and self.n == other.n

    def __hash__(self) -> int:
        return hash((self.mask, self.n))

    def __repr__(self) -> str:
        return f"ArgSet({{{','.join(map(str, self.ids()))}}}, n={self.n})"


class AF:
    """Argumentation framework: named arguments plus a defeat relation over ids.

    Immutable by convention after construction.  Exposes both neighbour lists
    (out_adj/in_adj) and per-argument bitmasks (out_masks/in_masks).
    """

    def __init__(self, names: Iterable[str], attacks: Iterable[tuple[str, str]]):
        names = list(names)
        seen: dict[str, int] = {}
        for name in names:
            if not NAME_RE.match(name):
                raise ValueError(f"invalid argument name {name!r}")
            if name in seen:
                raise ValueError(f"duplicate argument {name!r}")
            seen[name] = len(seen)
        self.args: tuple[Argument, ...] = tuple(
            Argument(i, name) for name, i in seen.items()
        )
        self.n = len(self.args)
        self.name_to_id: dict[str, int] = seen
        self.full_mask = (1 << self.n) - 1

        pairs = set()
        for src, dst in attacks:
            if src not in seen:
                raise ValueError(f"attack endpoint {src!r} not declared")
            if dst not in seen:
                raise ValueError(f"attack endpoint {dst!r} not declared")
            pairs.add((seen[src], seen[dst]))
        self.attacks: tuple[tuple[int, int], ...] = tuple(sorted(pairs))

        out = [0] * self.n
        inn = [0] * self.n
        for a, b in self.attacks:
            out[a] |= 1 << b
            inn[b] |= 1 << a
        self.out_masks: tuple[int, ...] = tuple(out)
        self.in_masks: tuple[int, ...] = tuple(inn)
        self.out_adj: tuple[tuple[int, ...], ...] = tuple(
            tuple(b for b in range(self.n) if out[a] >> b & 1) for a in range(self.n)
        )
        self.in_adj: tuple[tuple[int, ...], ...] = tuple(
            tuple(b for b in range(self.n) if inn[a] >> b & 1) for a in range(self.n)
        )
        self.self_loop_mask = sum(
            1 << a for a in range(self.n) if out[a] >> a & 1
        )

    def names(self, s: ArgSet | int) -> tuple[str, ...]:
        mask = s.mask if isinstance(s, ArgSet) else s
        return tuple(self.args[i].name for i in range(self.n) if mask >> i & 1)

    def argset(self, names: Iterable[str] = ()) -> ArgSet:
        return ArgSet.from_ids((self.arg_id(x) for x in names), self.n)

    def arg_id(self, x: int | str) -> int:
        if isinstance(x, int):
            if not 0 <= x < self.n:
                raise ValueError(f"argument id {x} out of range")
            return x
        try:
            return self.name_to_id[x]
        except KeyError:
            raise ValueError(f"unknown argument {x!r}") from None

    def has_attack(self, a: int | str, b: int | str) -> bool:
        return bool(self.out_masks[self.arg_id(a)] >> self.arg_id(b) & 1)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AF)
            and self.args == other.args
            and self.attacks == other.attacks
        )

    def __repr__(self) -> str:
        return f"AF(n={self.n}, attacks={len(self.attacks)})"


def parse_apx(text: str) -> AF:
    """Parse APX text: ``arg(x).`` and ``defeat(x,y).`` facts (``att`` accepted).

    ``%`` starts a comment.  Multiple facts per line are fine; facts do not
    span lines.  Attack endpoints may be declared later in the file.
    """
    names: list[str] = []
    declared: set[str] = set()
    attacks: list[tuple[str, str, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("%", 1)[0]
        pos = 0
        while pos < len(line):
            if line[pos:].isspace():
                break
            m = _FACT_RE.match(line, pos)
            if not m:
                snippet = line[pos:].strip()[:30]
                raise ApxError(f"malformed token near {snippet!r}", lineno)
            pred, argstr = m.group(1), m.group(2)
            terms = [t.strip() for t in argstr.split(",")] if argstr.strip() else []
            if any(not NAME_RE.match(t) for t in terms):
                raise ApxError(f"malformed token in {pred} fact", lineno)
            if pred == "arg":
                if len(terms) != 1:
                    raise ApxError("arg/1 takes exactly one argument", lineno)
                if terms[0] in declared:
                    raise ApxError(f"duplicate arg fact for {terms[0]!r}", lineno)
                declared.add(terms[0])
                names.append(terms[0])
            elif pred in ("defeat", "att"):
                if len(terms) != 2:
                    raise ApxError(f"{pred}/2 takes exactly two arguments", lineno)
                attacks.append((terms[0], terms[1], lineno))
            else:
                raise ApxError(f"unexpected predicate {pred!r}", lineno)
            pos = m.end()
    for src, dst, lineno in attacks:
        for endpoint in (src, dst):
            if endpoint not in declared:
                raise ApxError(f"attack endpoint {endpoint!r} not declared", lineno)
    return AF(names, [(s, d) for s, d, _ in attacks])


def serialize_apx(af: AF) -> str:
    """Render an AF as APX text: args in id order, then attacks in (src,dst) id order."""
    lines = [f"arg({a.name})." for a in af.args]
    lines += [f"defeat({af.args[a].name},{af.args[b].name})." for a, b in af.attacks]
    return "\n".join(lines) + "\n" if lines else ""


def attacked_by(af: AF, s: ArgSet) -> ArgSet:
    """All arguments some member of s attacks."""
    return ArgSet(_attacked_mask(af, s.mask), af.n)


def range_of(af: AF, s: ArgSet) -> ArgSet:
    """s together with everything it attacks."""
    return ArgSet(s.mask | _attacked_mask(af, s.mask), af.n)


def is_conflict_free(af: AF, s: ArgSet) -> bool:
    return _attacked_mask(af, s.mask) & s.mask == 0


def characteristic(af: AF, s: ArgSet) -> ArgSet:
    """Arguments whose every attacker is attacked by s."""
    return ArgSet(_char_mask(af, s.mask), af.n)


def _attacked_mask(af: AF, mask: int) -> int:
    out = af.out_masks
    acc = 0
    while mask:
        low = mask & -mask
        acc |= out[low.bit_length() - 1]
        mask ^= low
    return acc


def _char_mask(af: AF, mask: int) -> int:
    covered = _attacked_mask(af, mask)
    acc = 0
    for i in range(af.n):
        if af.in_masks[i] & ~covered == 0:
            acc |= 1 << i
    return acc


def restrict(af: AF, s: ArgSet) -> tuple[AF, tuple[int, ...]]:
    """Sub-framework induced by s.  Names are kept; ids are re-densified.

    Returns (sub, orig_ids) where orig_ids[i] is the parent id of sub-argument i.
    """
    keep = s.ids()
    keep_set = set(keep)
    names = [af.args[i].name for i in keep]
    sub_attacks = [
        (af.args[a].name, af.args[b].name)
        for a, b in af.attacks
        if a in keep_set and b in keep_set
    ]
    return AF(names, sub_attacks), tuple(keep)


def project(mask: int, orig_ids: tuple[int, ...]) -> int:
    """Reindex a parent-level bitmask into the child universe given by orig_ids."""
    out = 0
    for i, o in enumerate(orig_ids):
        if mask >> o & 1:
            out |= 1 << i
    return out


def lift(mask: int, orig_ids: tuple[int, ...]) -> int:
    """Inverse of project: reindex a child-level bitmask back to the parent."""
    out = 0
    for i, o in enumerate(orig_ids):
        if mask >> i & 1:
            out |= 1 << o
    return out


@dataclass(frozen=True)
class SccPartition:
    """Strongly connected components in topological order.

    order_edges holds the direct component-graph edges (i precedes j); the full
    precedence relation is order_closure().  Every edge satisfies i < j.
    """

    components: tuple[ArgSet, ...]
    comp_of: tuple[int, ...]
    order_edges: frozenset[tuple[int, int]]

    def order_closure(self) -> frozenset[tuple[int, int]]:
        k = len(self.components)
        succ: list[set[int]] = [set() for _ in range(k)]
        for i, j in self.order_edges:
            succ[i].add(j)
        closed = set()
        for i in reversed(range(k)):
            reach: set[int] = set()
            for j in succ[i]:
                reach.add(j)
                reach |= {c for (a, c) in closed if a == j}
            closed |= {(i, j) for j in reach}
        return frozenset(closed)

    def minimal(self) -> tuple[int, ...]:
        """Indices of components with no predecessor."""
        has_in = {j for _, j in self.order_edges}
        return tuple(i for i in range(len(self.components)) if i not in has_in)


def sccs(af: AF) -> SccPartition:
    """Tarjan's algorithm, iterative; components come out topologically sorted."""
    n = af.n
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work: list[tuple[int, int]] = [(root, 0)]
        while work:
            v, pi = work.pop()
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            adj = af.out_adj[v]
            descended = False
            for i in range(pi, len(adj)):
                w = adj[i]
                if index[w] == -1:
                    work.append((v, i + 1))
                    work.append((w, 0))
                    descended = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if descended:
                continue
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(comp)
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    comps.reverse()  # Tarjan emits reverse-topologically
    comp_of = [0] * n
    for ci, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = ci
    edges = {
        (comp_of[a], comp_of[b]) for a, b in af.attacks if comp_of[a] != comp_of[b]
    }
    return SccPartition(
        components=tuple(ArgSet.from_ids(c, n) for c in comps),
        comp_of=tuple(comp_of),
        order_edges=frozenset(edges),
    )
