"""Hurwitz moves on factorizations and orbit enumeration.

The forward move at position i (1-based, 1 <= i <= len-1) sends
(..., x_i, x_{i+1}, ...) to (..., x_{i+1}, x_{i+1}^-1 x_i x_{i+1}, ...);
the inverse move sends it to (..., x_i x_{i+1} x_i^-1, x_i, ...). Both
preserve the left-to-right product, and orbits are breadth-first closures
under all moves in both directions.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Literal, Optional, Sequence, Tuple, Union

from .groups import Group

DEFAULT_NODE_CAP = 10_000_000

FORWARD = "forward"
INVERSE = "inverse"
Direction = Literal["forward", "inverse"]


class CappedOrbitError(RuntimeError):
    """Raised when an operation needs a complete orbit but got a capped one."""


@dataclass(frozen=True)
class Factorization:
    group: Group
    factors: Tuple[int, ...]

    def __post_init__(self):
        if len(self.factors) < 1:
            raise ValueError("a factorization has length >= 1")

    def __len__(self) -> int:
        return len(self.factors)

    def __str__(self) -> str:
        return "(" + ", ".join(self.group.element_name(x) for x in self.factors) + ")"


@dataclass(frozen=True)
class Orbit:
    base: Factorization
    members: FrozenSet[Tuple[int, ...]]
    capped: bool

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class Finite:
    size: int


@dataclass(frozen=True)
class AtLeast:
    size: int


OrbitSize = Union[Finite, AtLeast]


def factorization(group: Group, factors: Sequence[int]) -> Factorization:
    return Factorization(group, tuple(factors))


def product(f: Factorization) -> int:
    g = f.group
    out = g.identity
    for x in f.factors:
        out = g.multiply(out, x)
    return out


def _check_position(f: Factorization, i: int):
    if not 1 <= i <= len(f.factors) - 1:
        raise ValueError(
            f"move position {i} out of range 1..{len(f.factors) - 1}"
        )


def hurwitz_move(f: Factorization, i: int, direction: Direction = FORWARD) -> Factorization:
    _check_position(f, i)
    g = f.group
    t = f.factors
    a, b = t[i - 1], t[i]
    if direction == FORWARD:
        pair = (b, g.conjugate(a, b))
    elif direction == INVERSE:
        pair = (g.conjugate(b, g.inverse(a)), a)
    else:
        raise ValueError(f"direction must be {FORWARD!r} or {INVERSE!r}")
    return Factorization(g, t[: i - 1] + pair + t[i + 1 :])


def apply_braid(f: Factorization, moves: Iterable[Tuple[int, Direction]]) -> Factorization:
    for i, direction in moves:
        f = hurwitz_move(f, i, direction)
    return f


def _explore(
    f: Factorization,
    node_cap: int,
    target: Optional[Tuple[int, ...]] = None,
):
    """BFS closure under all moves. Returns (seen_set, capped, found_target).

    States are packed into single integers (fixed width per factor) so set
    membership stays cheap on large orbits.
    """
    if node_cap < 1:
        raise ValueError("node_cap must be >= 1")
    group = f.group
    length = len(f.factors)
    bits = max(group.order.bit_length(), 1)
    mask = (1 << bits) - 1

    def pack(t) -> int:
        out = 0
        for x in t:
            out = (out << bits) | x
        return out

    start = pack(f.factors)
    target_packed = pack(target) if target is not None else None
    if target_packed == start:
        return {start}, False, True
    if length == 1:
        return {start}, False, target_packed == start

    tables = group.conjugation_tables()
    if tables is not None:
        conj, inv = tables
    else:
        conj_fn, inv_fn = group.conjugate, group.inverse

    seen = {start}
    queue = deque([f.factors])
    capped = False
    while queue:
        t = queue.popleft()
        base = pack(t)
        for i in range(length - 1):
            a, b = t[i], t[i + 1]
            shift = bits * (length - 2 - i)
            if tables is not None:
                fwd_pair = (b << bits) | conj[a][b]
                bwd_pair = (conj[b][inv[a]] << bits) | a
            else:
                fwd_pair = (b << bits) | conj_fn(a, b)
                bwd_pair = (conj_fn(b, inv_fn(a)) << bits) | a
            cleared = base & ~(((mask << bits) | mask) << shift)
            for pair in (fwd_pair, bwd_pair):
                state = cleared | (pair << shift)
                if state not in seen:
                    if state == target_packed:
                        seen.add(state)
                        return seen, False, True
                    if len(seen) >= node_cap:
                        return seen, True, False
                    seen.add(state)
                    nt = list(t)
                    nt[i] = (pair >> bits) & mask
                    nt[i + 1] = pair & mask
                    queue.append(tuple(nt))
    return seen, capped, False


def _unpack_all(packed: Iterable[int], length: int, order: int):
    bits = max(order.bit_length(), 1)
    mask = (1 << bits) - 1
    for state in packed:
        yield tuple(
            (state >> (bits * (length - 1 - k))) & mask for k in range(length)
        )


def orbit(f: Factorization, node_cap: int = DEFAULT_NODE_CAP) -> Orbit:
    seen, capped, _ = _explore(f, node_cap)
    members = frozenset(_unpack_all(seen, len(f.factors), f.group.order))
    return Orbit(base=f, members=members, capped=capped)


def orbit_size(f: Factorization, node_cap: int = DEFAULT_NODE_CAP) -> OrbitSize:
    seen, capped, _ = _explore(f, node_cap)
    if capped:
        return AtLeast(node_cap)
    return Finite(len(seen))


def same_orbit(
    f1: Factorization, f2: Factorization, node_cap: int = DEFAULT_NODE_CAP
) -> Literal["yes", "no", "unknown"]:
    if f1.group is not f2.group:
        raise ValueError("factorizations live in different groups")
    if len(f1.factors) != len(f2.factors):
        raise ValueError("factorizations have different lengths")
    _, capped, found = _explore(f1, node_cap, target=f2.factors)
    if found:
        return "yes"
    return "unknown" if capped else "no"


def export_orbit_graph(
    o: Orbit, format: str = "dot", self_loops: bool = False
) -> str:
    """Render an orbit as DOT or JSON; edges are forward moves labeled s_i."""
    if o.capped:
        raise CappedOrbitError(
            "orbit is capped; rerun with a larger node cap to export the graph"
        )
    if format not in ("dot", "json"):
        raise ValueError("format must be 'dot' or 'json'")
    group = o.base.group
    length = len(o.base.factors)
    vertices = sorted(o.members)
    index = {t: k for k, t in enumerate(vertices)}

    def label(t):
        return "(" + ", ".join(group.element_name(x) for x in t) + ")"

    edges = []
    for t in vertices:
        f = Factorization(group, t)
        for i in range(1, length):
            u = hurwitz_move(f, i, FORWARD).factors
            if u == t and not self_loops:
                continue
            edges.append((index[t], index[u], i))

    if format == "json":
        return json.dumps(
            {
                "vertices": [label(t) for t in vertices],
                "edges": [{"from": a, "to": b, "move": i} for a, b, i in edges],
            },
            indent=2,
        )
    lines = ["digraph hurwitz_orbit {"]
    for t in vertices:
        lines.append(f'  v{index[t]} [label="{label(t)}"];')
    for a, b, i in edges:
        lines.append(f'  v{a} -> v{b} [label="s{i}"];')
    lines.append("}")
    return "\n".join(lines)
