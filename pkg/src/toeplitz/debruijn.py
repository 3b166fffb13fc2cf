"""De Bruijn (Rauzy) graphs, their reflection symmetry, and palindrome counts.

The graph at length L has the length-L factors as vertices and one edge per
length-(L+1) factor, from its length-L prefix to its length-L suffix.  The
graphs of a simple Toeplitz subshift consist of a bundle of arcs between the
prefix u1 and suffix v1 of the governing block p(k), occasionally with a
secondary branch vertex v2 (suffix of p(k-1) a_{k-1} p(k-1)).  Reversal of
words is a graph anti-automorphism; its fixed vertices are exactly the
palindromes, which yields a closed palindrome-count formula checked here
against direct enumeration.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .coding import Alphabet, Coding, tail_alphabet
from .language import language
from .words import DEFAULT_BUDGET, block, block_length


@dataclass(frozen=True)
class RightSpecial:
    vertex: bytes
    out_degree: int


@dataclass(frozen=True)
class GraphAnnotations:
    """Designated vertices from the structural description of the graph."""

    level: int
    u1: bytes
    v1: bytes
    u2: Optional[bytes]
    v2: Optional[bytes]


@dataclass(frozen=True)
class DeBruijnGraph:
    alphabet: Alphabet
    length: int
    vertices: tuple[bytes, ...]
    edges: tuple[tuple[bytes, bytes, bytes], ...]  # (source, target, word)
    annotations: GraphAnnotations

    def out_degrees(self) -> dict[bytes, int]:
        degrees = {v: 0 for v in self.vertices}
        for u, _, _ in self.edges:
            degrees[u] += 1
        return degrees

    def successors(self) -> dict[bytes, list[bytes]]:
        nxt: dict[bytes, list[bytes]] = {v: [] for v in self.vertices}
        for u, v, _ in self.edges:
            nxt[u].append(v)
        return nxt


def _annotations(c: Coding, length: int, budget: int) -> GraphAnnotations:
    k = 0
    while block_length(c, k) < length:
        k += 1
    p = block(c, k, budget)
    u1, v1 = p[:length], p[-length:]
    u2 = v2 = None
    if k >= 1 and c.letter(k - 1) in tail_alphabet(c, k):
        pk1, pk2 = block_length(c, k - 1), block_length(c, k - 2)
        if pk1 + 1 <= length <= 2 * pk1 - pk2:
            host = block(c, k - 1, budget) + bytes([c.letter(k - 1).id]) \
                + block(c, k - 1, budget)
            u2, v2 = host[:length], host[-length:]
    return GraphAnnotations(k, u1, v1, u2, v2)


def build_graph(c: Coding, length: int, budget: int = DEFAULT_BUDGET,
                jobs: int = 1) -> DeBruijnGraph:
    """The de Bruijn graph at `length`; needs language(L) and language(L+1)."""
    if length < 1:
        raise IndexError("graph length must be >= 1")
    vertices = language(c, length, budget, jobs).words
    edges = tuple(
        (w[:-1], w[1:], w) for w in language(c, length + 1, budget, jobs).words
    )
    return DeBruijnGraph(c.alphabet, length, vertices, edges,
                         _annotations(c, length, budget))


def right_special_report(graph: DeBruijnGraph) -> list[RightSpecial]:
    """Vertices with at least two right extensions, in word order."""
    return [
        RightSpecial(v, d)
        for v, d in sorted(graph.out_degrees().items())
        if d >= 2
    ]


def is_strongly_connected(graph: DeBruijnGraph) -> bool:
    if not graph.vertices:
        return False

    def reaches_all(adjacency: dict[bytes, list[bytes]]) -> bool:
        seen = {graph.vertices[0]}
        queue = deque(seen)
        while queue:
            for nxt in adjacency[queue.popleft()]:
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
        return len(seen) == len(graph.vertices)

    forward = graph.successors()
    backward: dict[bytes, list[bytes]] = {v: [] for v in graph.vertices}
    for u, v, _ in graph.edges:
        backward[v].append(u)
    return reaches_all(forward) and reaches_all(backward)


def reflection_check(graph: DeBruijnGraph) -> bool:
    """Does word reversal map the graph onto itself with arrows flipped?"""
    vertex_set = set(graph.vertices)
    if any(v[::-1] not in vertex_set for v in graph.vertices):
        return False
    edge_pairs = {(u, v) for u, v, _ in graph.edges}
    return all((v[::-1], u[::-1]) in edge_pairs for u, v in edge_pairs)


def reflection_fixed_points(graph: DeBruijnGraph) -> list[bytes]:
    return [v for v in graph.vertices if v == v[::-1]]


def palindrome_formula(c: Coding, length: int) -> int:
    """Closed-form palindrome count among the length-`length` factors.

    With r = L mod (|p(k-1)|+1) and rt = L mod (|p(k-2)|+1) in the band
    |p(k-1)|+1 <= L <= |p(k)|, the count is a sum of parity terms; the
    final bracket is active exactly when the secondary branch vertex v2
    exists.
    """
    if length < 1:
        raise IndexError("palindrome counts start at length 1")
    p0 = block_length(c, 0)
    if length <= p0:
        return (len(tail_alphabet(c, 0)) - 1) * (length % 2) + 1

    k = 1
    while length > block_length(c, k):
        k += 1
    pk = block_length(c, k)
    pk1 = block_length(c, k - 1)
    pk2 = block_length(c, k - 2)
    r = length % (pk1 + 1)
    rt = length % (pk2 + 1)

    value = (len(tail_alphabet(c, k)) - 1) * (length % 2)
    value += (pk1 + 1 - r) % 2
    if length <= pk - pk1 - 1:
        value += r % 2
    else:
        value += (r % 2) * int(c.letter(k) in tail_alphabet(c, k + 1))
    if c.letter(k - 1) in tail_alphabet(c, k) and length <= 2 * pk1 - pk2:
        value += (rt % 2) + (pk2 + 1 - rt) % 2 - (length % 2)
    return value


def palindrome_oracle(c: Coding, length: int, budget: int = DEFAULT_BUDGET,
                      jobs: int = 1) -> int:
    return sum(
        1 for w in language(c, length, budget, jobs) if w == w[::-1]
    )


@dataclass(frozen=True)
class PalindromeRow:
    length: int
    formula: int
    oracle: Optional[int] = None


def palindrome_profile(c: Coding, max_length: int, with_oracle: bool = False,
                       budget: int = DEFAULT_BUDGET,
                       jobs: int = 1) -> list[PalindromeRow]:
    """Per-L palindrome counts by formula and (optionally) by enumeration."""
    return [
        PalindromeRow(
            L, palindrome_formula(c, L),
            palindrome_oracle(c, L, budget, jobs) if with_oracle else None,
        )
        for L in range(1, max_length + 1)
    ]


def arc_structure_report(c: Coding, graph: DeBruijnGraph) -> list[tuple[str, bool, str]]:
    """Validate the arc lengths of the structural graph description.

    Walks from each branch vertex along out-degree-1 vertices and compares
    segment lengths with the predicted r/rt arithmetic.  At L = |p(k)| the
    prefix u1 coincides with v1 and position bookkeeping degenerates, so
    callers should treat findings at that boundary length as advisory.
    """
    ann = graph.annotations
    k, length = ann.level, graph.length
    first_out: dict[tuple[bytes, int], bytes] = {}
    for u, v, w in graph.edges:
        first_out[(u, w[-1])] = v
    degrees = graph.out_degrees()
    branch_points = {v for v, d in degrees.items() if d >= 2}
    successors = graph.successors()

    def walk(start: bytes, first_letter: int) -> tuple[bytes, int]:
        current = first_out[(start, first_letter)]
        steps = 1
        while current not in branch_points and current != ann.u1:
            nxts = successors[current]
            current = nxts[0]
            steps += 1
            if steps > len(graph.edges):
                break
        return current, steps

    checks: list[tuple[str, bool, str]] = []

    def record(name: str, got: tuple[bytes, int], want_end: bytes, want_steps: int):
        ok = got == (want_end, want_steps)
        checks.append((name, ok, f"walked {got[1]} edges, expected {want_steps}"))

    if k == 0:
        a0 = c.letter(0).id
        for letter in sorted(tail_alphabet(c, 0).ids):
            steps = 1 if letter == a0 else length + 1
            if (ann.v1, letter) in first_out:
                record(f"arc via {letter}", walk(ann.v1, letter), ann.v1, steps)
        return checks

    pk1, pk2 = block_length(c, k - 1), block_length(c, k - 2)
    r = length % (pk1 + 1)
    rt = length % (pk2 + 1)
    ak = c.letter(k).id
    ak_prev = c.letter(k - 1).id
    for letter in sorted(tail_alphabet(c, k).ids):
        if (ann.v1, letter) not in first_out:
            continue
        if letter == ak:
            record(f"arc via a_k={letter}", walk(ann.v1, letter), ann.u1, r + 1)
        elif ann.v2 is not None and letter == ak_prev:
            record(
                f"arc via a_(k-1)={letter} to v2",
                walk(ann.v1, letter), ann.v2, r + 1 + pk2 - rt,
            )
        else:
            record(f"arc via {letter}", walk(ann.v1, letter), ann.u1, length + 1)
    if ann.v2 is not None:
        record("v2 loop", walk(ann.v2, ak_prev), ann.v2, pk2 + 1)
        record("v2 to u1 via a_k", walk(ann.v2, ak), ann.u1, r + 1)
    if ann.u1 not in branch_points and ann.u1 != ann.v1:
        letter = next(b for (u, b) in first_out if u == ann.u1)
        record("u1 to v1", walk(ann.u1, letter), ann.v1, pk1 - r)
    return checks


def to_dot(graph: DeBruijnGraph) -> str:
    """Graphviz rendering: right-special vertices doubled, reflection pairs ranked."""
    alphabet = graph.alphabet
    lines = ["digraph debruijn {", "  rankdir=LR;"]
    special = {rs.vertex for rs in right_special_report(graph)}
    for v in graph.vertices:
        name = alphabet.render(v)
        shape = ' shape=doublecircle' if v in special else ""
        lines.append(f'  "{name}" [label="{name}"{shape}];')
    seen_pairs = set()
    for v in graph.vertices:
        mirror = v[::-1]
        if mirror != v and mirror in set(graph.vertices):
            pair = tuple(sorted((v, mirror)))
            if pair not in seen_pairs:
                seen_pairs.add(pair)
                a, b = (alphabet.render(w) for w in pair)
                lines.append(f'  {{ rank=same; "{a}"; "{b}"; }}')
    for u, v, w in graph.edges:
        label = alphabet.render(w[-1:])
        lines.append(
            f'  "{alphabet.render(u)}" -> "{alphabet.render(v)}" [label="{label}"];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
