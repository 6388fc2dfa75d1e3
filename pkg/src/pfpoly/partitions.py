"""Binary and skewed binary partitions of [0, n], their preposets, and contraction.

A binary partition is an ordered list of blocks; a block is either
homogeneous (its elements are all equivalent, written with a trailing ``*``)
or not (its elements are pairwise incomparable).  Earlier blocks lie below
later ones.  Skewed binary partitions add two leading slots ``B_-1`` and
``B_0`` that may be empty and that pin down where 0 sits.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from math import factorial
from typing import Iterable, Iterator, Sequence, Union


@dataclass(frozen=True)
class Block:
    elements: tuple
    homogeneous: bool = False

    def __post_init__(self):
        els = tuple(sorted(set(self.elements)))
        if len(els) != len(self.elements):
            raise ValueError(f"repeated element in block {self.elements}")
        object.__setattr__(self, "elements", els)
        if self.homogeneous and len(els) < 2:
            raise ValueError("homogeneous blocks need at least two elements")

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x) -> bool:
        return x in self.elements

    def classes(self) -> list:
        """Equivalence classes inside the block, as sorted tuples."""
        if self.homogeneous:
            return [self.elements]
        return [(x,) for x in self.elements]

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.elements)) + "}" + ("*" if self.homogeneous else "")


def _check_ground_set(blocks: Sequence[Block]) -> int:
    seen: set = set()
    for b in blocks:
        for x in b:
            if x in seen:
                raise ValueError(f"element {x} appears in two blocks")
            seen.add(x)
    n = len(seen) - 1
    if seen != set(range(n + 1)):
        raise ValueError("blocks must partition [0, n]")
    return n


class BinaryPartition:
    """Ordered partition of [0, n] into nonempty blocks."""

    __slots__ = ("blocks", "n", "_where")

    def __init__(self, blocks: Iterable[Block]):
        blocks = tuple(blocks)
        if not blocks or any(len(b) == 0 for b in blocks):
            raise ValueError("binary partition blocks must be nonempty")
        self.n = _check_ground_set(blocks)
        self.blocks = blocks
        where = [0] * (self.n + 1)
        for i, b in enumerate(blocks):
            for x in b:
                where[x] = i
        self._where = tuple(where)

    def block_index(self, x: int) -> int:
        return self._where[x]

    def classes(self) -> list:
        return [c for b in self.blocks for c in b.classes()]

    def __len__(self) -> int:
        return len(self.blocks)

    def __eq__(self, other) -> bool:
        return isinstance(other, BinaryPartition) and self.blocks == other.blocks

    def __hash__(self) -> int:
        return hash(("B", self.blocks))

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.blocks)) + ")"

    __repr__ = __str__


class SkewedBinaryPartition:
    """Blocks ``(B_-1, B_0, B_1, ..., B_k)``; the first two may be empty."""

    __slots__ = ("blocks", "n", "_hat")

    def __init__(self, blocks: Iterable[Block]):
        blocks = tuple(blocks)
        if len(blocks) < 2:
            raise ValueError("a skewed binary partition has at least the slots B_-1 and B_0")
        bm, b0 = blocks[0], blocks[1]
        if bm.homogeneous:
            raise ValueError("B_-1 must be non-homogeneous")
        if b0.homogeneous != (len(b0) >= 2):
            raise ValueError("B_0 is homogeneous exactly when it has two or more elements")
        if 0 not in bm and 0 not in b0:
            raise ValueError("0 must lie in B_-1 or B_0")
        if 0 in bm and (len(bm) < 2 or len(b0) > 0):
            raise ValueError("if 0 is in B_-1 then |B_-1| >= 2 and B_0 is empty")
        if any(len(b) == 0 for b in blocks[2:]):
            raise ValueError("blocks B_1, ..., B_k must be nonempty")
        self.n = _check_ground_set(blocks)
        self.blocks = blocks
        self._hat = None

    @property
    def k(self) -> int:
        return len(self.blocks) - 2

    def hat(self) -> BinaryPartition:
        if self._hat is None:
            self._hat = BinaryPartition(b for b in self.blocks if len(b))
        return self._hat

    def __eq__(self, other) -> bool:
        return isinstance(other, SkewedBinaryPartition) and self.blocks == other.blocks

    def __hash__(self) -> int:
        return hash(("S", self.blocks))

    def __lt__(self, other: "SkewedBinaryPartition") -> bool:
        return sort_key(self) < sort_key(other)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.blocks)) + ")"

    __repr__ = __str__


AnyPartition = Union[BinaryPartition, SkewedBinaryPartition]


def sort_key(B: AnyPartition) -> tuple:
    return tuple((b.elements, b.homogeneous) for b in B.blocks)


def _hat(B: AnyPartition) -> BinaryPartition:
    return B.hat() if isinstance(B, SkewedBinaryPartition) else B


# ---------------------------------------------------------------- compositions

@dataclass(frozen=True, order=True)
class Entry:
    """A tagged size: tag ``""`` (plain), ``"o"`` (circle) or ``"*"`` (star)."""

    size: int
    tag: str = ""

    def __post_init__(self):
        if self.tag not in ("", "o", "*"):
            raise ValueError(f"unknown tag {self.tag!r}")
        if self.size < 0:
            raise ValueError("negative entry")
        if self.tag == "*" and self.size < 2:
            raise ValueError("starred entries are at least 2")

    def __str__(self) -> str:
        return f"{self.size}{self.tag}"


class SkewedBinaryComposition:
    """The type ``(b_-1, b_0, b_1, ..., b_k)`` of a skewed binary partition."""

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable):
        es = tuple(e if isinstance(e, Entry) else _parse_entry(e) for e in entries)
        if len(es) < 2:
            raise ValueError("a composition has at least the entries b_-1 and b_0")
        bm, b0 = es[0], es[1]
        if bm.tag != "":
            raise ValueError("b_-1 must be a plain integer")
        if b0.tag == "o":
            pass
        elif b0 == Entry(0, "") and bm.size >= 1:
            pass
        else:
            raise ValueError("(b_-1, b_0) must be (N, N°) or (P, 0)")
        for e in es[2:]:
            if e.tag == "o" or e.size < 1:
                raise ValueError("b_i for i >= 1 must be positive or starred")
        self.entries = es

    @property
    def n(self) -> int:
        return sum(e.size for e in self.entries)

    def __iter__(self) -> Iterator[Entry]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, SkewedBinaryComposition) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __lt__(self, other) -> bool:
        return self.entries < other.entries

    def __str__(self) -> str:
        return ",".join(map(str, self.entries))

    __repr__ = __str__


def _parse_entry(x) -> Entry:
    if isinstance(x, int):
        return Entry(x)
    if isinstance(x, tuple):
        return Entry(*x)
    s = str(x).strip()
    m = re.fullmatch(r"(\d+)\s*([o°*★]?)", s)
    if not m:
        raise ValueError(f"bad composition entry {x!r}")
    tag = {"°": "o", "★": "*"}.get(m.group(2), m.group(2))
    return Entry(int(m.group(1)), tag)


def composition(*entries) -> SkewedBinaryComposition:
    """``composition(2, "1o", 1, "2*", 2)`` or ``composition("2,1o,1,2*,2")``."""
    if len(entries) == 1 and isinstance(entries[0], str) and "," in entries[0]:
        entries = tuple(entries[0].split(","))
    return SkewedBinaryComposition(entries)


def parse_composition(text: str) -> SkewedBinaryComposition:
    return SkewedBinaryComposition(text.strip().strip("()").split(","))


# ---------------------------------------------------------------- types

def type_of(B: SkewedBinaryPartition) -> SkewedBinaryComposition:
    bm, b0 = B.blocks[0], B.blocks[1]
    if 0 in b0:
        head = [Entry(len(bm)), Entry(len(b0) - 1, "o")]
    else:
        head = [Entry(len(bm) - 1), Entry(0)]
    tail = [Entry(len(b), "*" if b.homogeneous else "") for b in B.blocks[2:]]
    return SkewedBinaryComposition(head + tail)


def _slot_sizes(b: SkewedBinaryComposition) -> list:
    """Number of positive integers that go into each slot."""
    return [e.size for e in b.entries]


def _assemble(b: SkewedBinaryComposition, groups: Sequence[Sequence[int]]) -> SkewedBinaryPartition:
    zero_in_b0 = b[1].tag == "o"
    blocks = []
    for i, (e, g) in enumerate(zip(b.entries, groups)):
        els = tuple(g)
        if i == 0:
            blocks.append(Block(els if zero_in_b0 else (0,) + els))
        elif i == 1:
            if zero_in_b0:
                els = (0,) + els
                blocks.append(Block(els, len(els) >= 2))
            else:
                blocks.append(Block(()))
        else:
            blocks.append(Block(els, e.tag == "*"))
    return SkewedBinaryPartition(blocks)


def standard_of_type(b: SkewedBinaryComposition) -> SkewedBinaryPartition:
    groups, nxt = [], 1
    for s in _slot_sizes(b):
        groups.append(range(nxt, nxt + s))
        nxt += s
    return _assemble(b, groups)


def _ordered_set_partitions(items: tuple, sizes: Sequence[int]) -> Iterator[list]:
    if not sizes:
        yield []
        return
    first, rest = sizes[0], sizes[1:]
    for chosen in combinations(items, first):
        cs = set(chosen)
        remaining = tuple(x for x in items if x not in cs)
        for tail in _ordered_set_partitions(remaining, rest):
            yield [chosen] + tail


def partitions_of_type(b: SkewedBinaryComposition) -> Iterator[SkewedBinaryPartition]:
    """Every skewed binary partition whose type is ``b``."""
    positives = tuple(range(1, b.n + 1))
    for groups in _ordered_set_partitions(positives, _slot_sizes(b)):
        yield _assemble(b, groups)


def count_of_type(b: SkewedBinaryComposition) -> int:
    out = factorial(b.n)
    for s in _slot_sizes(b):
        out //= factorial(s)
    return out


def skewed_compositions(n: int) -> Iterator[SkewedBinaryComposition]:
    """All skewed binary compositions of n."""

    def tails(rest: int) -> Iterator[list]:
        if rest == 0:
            yield []
            return
        for s in range(1, rest + 1):
            opts = [Entry(s)] + ([Entry(s, "*")] if s >= 2 else [])
            for e in opts:
                for t in tails(rest - s):
                    yield [e] + t

    for bm in range(n + 1):
        for b0 in range(n - bm + 1):
            for t in tails(n - bm - b0):
                yield SkewedBinaryComposition([Entry(bm), Entry(b0, "o")] + t)
        if bm >= 1:
            for t in tails(n - bm):
                yield SkewedBinaryComposition([Entry(bm), Entry(0)] + t)


# ---------------------------------------------------------------- preposets

class Preposet:
    """Reflexive transitive relation on [0, n].

    ``up[i]`` is a bitmask of all j with i ⪯ j; transitive closure is taken
    at construction.
    """

    __slots__ = ("n", "up")

    def __init__(self, n: int, relations: Iterable = (), *, up: Sequence[int] | None = None):
        size = n + 1
        if up is None:
            rows = [1 << i for i in range(size)]
            for i, j in relations:
                rows[i] |= 1 << j
        else:
            rows = [r | (1 << i) for i, r in enumerate(up)]
        for k in range(size):
            bit, rk = 1 << k, rows[k]
            for i in range(size):
                if rows[i] & bit:
                    rows[i] |= rk
        self.n = n
        self.up = tuple(rows)

    def leq(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)

    def equiv(self, i: int, j: int) -> bool:
        return self.leq(i, j) and self.leq(j, i)

    def classes(self) -> list:
        """Equivalence classes as sorted tuples, ordered by minimum element."""
        seen, out = 0, []
        for i in range(self.n + 1):
            if seen >> i & 1:
                continue
            cls = tuple(j for j in range(i, self.n + 1) if self.equiv(i, j))
            for j in cls:
                seen |= 1 << j
            out.append(cls)
        return out

    def rep(self, i: int) -> int:
        return next(j for j in range(self.n + 1) if self.equiv(i, j))

    def covers(self) -> list:
        """Cover pairs (g, h) of class representatives, g strictly below h."""
        reps = [c[0] for c in self.classes()]
        strict = {g: [h for h in reps if h != g and self.leq(g, h) and not self.leq(h, g)] for g in reps}
        out = []
        for g in reps:
            above = strict[g]
            for h in above:
                if not any(self.leq(k, h) and not self.leq(h, k) for k in above if k != h):
                    out.append((g, h))
        return out

    def relations(self) -> list:
        return [(i, j) for i in range(self.n + 1) for j in range(self.n + 1) if i != j and self.leq(i, j)]

    def is_poset(self) -> bool:
        return all(len(c) == 1 for c in self.classes())

    def hasse_is_tree(self) -> bool:
        reps = [c[0] for c in self.classes()]
        edges = self.covers()
        if len(edges) != len(reps) - 1:
            return False
        adj = {r: [] for r in reps}
        for g, h in edges:
            adj[g].append(h)
            adj[h].append(g)
        seen, todo = {reps[0]}, [reps[0]]
        while todo:
            x = todo.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    todo.append(y)
        return len(seen) == len(reps)

    def contract(self, g: int, h: int) -> "Preposet":
        """Identify the classes of g and h (meant for a Hasse edge)."""
        rows = list(self.up)
        rows[g] |= 1 << h
        rows[h] |= 1 << g
        return Preposet(self.n, up=rows)

    def dual(self) -> "Preposet":
        return Preposet(self.n, [(j, i) for i, j in self.relations()])

    def __eq__(self, other) -> bool:
        return isinstance(other, Preposet) and self.up == other.up

    def __hash__(self) -> int:
        return hash(self.up)

    def __repr__(self) -> str:
        return f"Preposet(n={self.n}, covers={self.covers()})"


def preposet_of(B: AnyPartition) -> Preposet:
    A = _hat(B)
    rows = [0] * (A.n + 1)
    above = 0
    for b in reversed(A.blocks):
        mask = 0
        for x in b:
            mask |= 1 << x
        for x in b:
            rows[x] = above | (mask if b.homogeneous else 1 << x)
        above |= mask
    return Preposet(A.n, up=rows)


def representing_partition(P: Preposet) -> BinaryPartition | None:
    """The binary partition whose preorder is P, or None if P is not of that form."""
    remaining = P.classes()
    blocks = []
    while remaining:
        layer = [
            c for c in remaining
            if not any(d is not c and P.leq(d[0], c[0]) and not P.leq(c[0], d[0]) for d in remaining)
        ]
        if len(layer) == 1 and len(layer[0]) > 1:
            blocks.append(Block(layer[0], True))
        elif any(len(c) > 1 for c in layer):
            return None
        else:
            blocks.append(Block(tuple(c[0] for c in layer)))
        remaining = [c for c in remaining if all(c is not d for d in layer)]
    A = BinaryPartition(blocks)
    return A if preposet_of(A) == P else None


# ---------------------------------------------------------------- bipartite graph

@dataclass(frozen=True)
class BipartiteBlockGraph:
    left: tuple
    right: tuple
    edges: frozenset
    overlap: dict

    def left_neighbors(self, i: int) -> list:
        return sorted(j for a, j in self.edges if a == i)

    def right_neighbors(self, j: int) -> list:
        return sorted(i for i, b in self.edges if b == j)

    def degrees(self, side: str, idx: int) -> tuple:
        """(deg, deg_star, deg_vee) of a vertex on ``side`` ('left' or 'right')."""
        if side == "left":
            nbrs = [self.right[j] for j in self.left_neighbors(idx)]
        else:
            nbrs = [self.left[i] for i in self.right_neighbors(idx)]
        star = sum(1 for b in nbrs if b.homogeneous)
        return len(nbrs), star, len(nbrs) - star


def bipartite_graph(B: AnyPartition, C: AnyPartition) -> BipartiteBlockGraph:
    Bh, Ch = _hat(B), _hat(C)
    if Bh.n != Ch.n:
        raise ValueError("partitions have different ground sets")
    overlap: dict = {}
    for x in range(Bh.n + 1):
        key = (Bh.block_index(x), Ch.block_index(x))
        overlap[key] = overlap.get(key, 0) + 1
    return BipartiteBlockGraph(Bh.blocks, Ch.blocks, frozenset(overlap), overlap)


def is_noncrossing(G: BipartiteBlockGraph) -> bool:
    # Sorted by left index, right indices must be weakly increasing.
    last = -1
    for i in range(len(G.left)):
        nb = G.left_neighbors(i)
        if nb and nb[0] < last:
            return False
        if nb:
            last = nb[-1]
    return True


def is_contraction(C: AnyPartition, B: AnyPartition) -> bool:
    """Whether the preorder of C is a contraction of the preorder of B."""
    G = bipartite_graph(B, C)
    if not is_noncrossing(G):
        return False
    for i, b in enumerate(G.left):
        _, star, vee = G.degrees("left", i)
        if b.homogeneous:
            if star != 1 or vee != 0:
                return False
        elif vee > 1:
            return False
    for j, c in enumerate(G.right):
        deg, star, vee = G.degrees("right", j)
        if c.homogeneous:
            if deg == 1 and star != 1:
                return False
        elif star != 0 or vee != 1:
            return False
    return True


def is_cover(C: AnyPartition, B: AnyPartition) -> bool:
    """Whether C is obtained from B by contracting a single Hasse edge."""
    G = bipartite_graph(B, C)
    if not is_noncrossing(G):
        return False
    two = [j for j in range(len(G.right)) if len(G.right_neighbors(j)) == 2]
    if len(two) != 1:
        return False
    cj = two[0]
    if not G.right[cj].homogeneous:
        return False
    for j, c in enumerate(G.right):
        if j == cj:
            continue
        nb = G.right_neighbors(j)
        if len(nb) != 1 or G.left[nb[0]].homogeneous != c.homogeneous:
            return False
    for i, b in enumerate(G.left):
        nb = G.left_neighbors(i)
        if not b.homogeneous and cj in nb:
            if len(nb) > 2 or G.overlap[(i, cj)] != 1:
                return False
        else:
            if len(nb) != 1 or G.right[nb[0]].homogeneous != b.homogeneous:
                return False
    return True


# ---------------------------------------------------------------- contraction

def to_skewed(A: BinaryPartition) -> SkewedBinaryPartition:
    """Re-insert the empty leading slot so that A reads as a skewed partition."""
    a1 = A.blocks[0]
    empty = Block(())
    if 0 in a1:
        if not a1.homogeneous and len(a1) >= 2:
            return SkewedBinaryPartition((a1, empty) + A.blocks[1:])
        return SkewedBinaryPartition((empty, a1) + A.blocks[1:])
    if len(A.blocks) >= 2 and 0 in A.blocks[1] and not a1.homogeneous:
        return SkewedBinaryPartition(A.blocks)
    raise ValueError(f"{A} is not representable as a skewed binary partition")


def _class_in(block: Block, x: int) -> tuple:
    return block.elements if block.homogeneous else (x,)


def contract_binary(A: BinaryPartition, g: int, h: int) -> BinaryPartition:
    """Contract the Hasse edge between the classes of g and h in A."""
    i, j = A.block_index(g), A.block_index(h)
    if j == i - 1:
        g, h, i, j = h, g, j, i
    if j != i + 1:
        raise ValueError(f"classes of {g} and {h} do not form a Hasse edge")
    bi, bj = A.blocks[i], A.blocks[j]
    gc, hc = _class_in(bi, g), _class_in(bj, h)
    X = tuple(x for x in bi if x not in gc)
    Y = tuple(y for y in bj if y not in hc)
    middle = []
    if X:
        middle.append(Block(X, bi.homogeneous))
    middle.append(Block(gc + hc, True))
    if Y:
        middle.append(Block(Y, bj.homogeneous))
    return BinaryPartition(A.blocks[:i] + tuple(middle) + A.blocks[j + 1:])


def _as_element(cls) -> int:
    if isinstance(cls, int):
        return cls
    return min(cls)


def contract_edge(B: SkewedBinaryPartition, g, h) -> SkewedBinaryPartition:
    """One-edge contraction; ``g`` and ``h`` are class members or whole classes."""
    return to_skewed(contract_binary(B.hat(), _as_element(g), _as_element(h)))


def hasse_edges(B: AnyPartition) -> list:
    """Pairs of class representatives (g, h) with g's class covered by h's."""
    A = _hat(B)
    out = []
    for lo, hi in zip(A.blocks, A.blocks[1:]):
        for gc in lo.classes():
            for hc in hi.classes():
                out.append((gc[0], hc[0]))
    return out


def covers_below(B: SkewedBinaryPartition) -> set:
    """All partitions covered by B (single edge contractions)."""
    return {contract_edge(B, g, h) for g, h in hasse_edges(B)}


def all_contractions(B: SkewedBinaryPartition) -> set:
    seen = {B}
    todo = deque([B])
    while todo:
        cur = todo.popleft()
        for nxt in covers_below(cur):
            if nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    return seen


# ---------------------------------------------------------------- text format

_BLOCK = re.compile(r"\{([^{}]*)\}(\*?)")


def _parse_blocks(text: str) -> list:
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError(f"partition must be parenthesised: {text!r}")
    body = s[1:-1]
    blocks, pos = [], 0
    for m in _BLOCK.finditer(body):
        gap = body[pos:m.start()].strip()
        if gap not in ("", ","):
            raise ValueError(f"unexpected text {gap!r} in partition")
        pos = m.end()
        inner = m.group(1).strip()
        els = tuple(int(x) for x in inner.split(",")) if inner else ()
        blocks.append(Block(els, m.group(2) == "*"))
    if body[pos:].strip():
        raise ValueError(f"trailing text in partition: {body[pos:]!r}")
    return blocks


def parse_partition(text: str) -> SkewedBinaryPartition:
    return SkewedBinaryPartition(_parse_blocks(text))


def parse_binary_partition(text: str) -> BinaryPartition:
    return BinaryPartition(_parse_blocks(text))


def skewed(*blocks) -> SkewedBinaryPartition:
    """Shorthand: ``skewed({0,2,3}, set(), ({0,7}, "*"), ...)``."""
    out = []
    for b in blocks:
        if isinstance(b, Block):
            out.append(b)
        elif isinstance(b, tuple) and len(b) == 2 and b[1] == "*":
            out.append(Block(tuple(b[0]), True))
        else:
            els = tuple(b)
            out.append(Block(els, len(out) == 1 and len(els) >= 2))
    return SkewedBinaryPartition(out)
