"""K4 counts on an edge of Paley(p) and the closed form for prime p."""

from __future__ import annotations

import math
import random
from typing import NamedTuple

import numpy as np

from .errors import NoDecomposition, NonIntegral, NotAnEdge, NotOneModFour, NotPrime
from .ff import FieldSpec, is_prime
from .graph import require_paley


class TwoSquares(NamedTuple):
    p: int
    m: int  # even, >= 0
    n: int  # odd, > 0


def sum_two_squares(p: int) -> TwoSquares:
    """The decomposition p = m^2 + n^2 with n odd; search over even m."""
    if not is_prime(p):
        raise NotPrime(p)
    if p % 4 != 1:
        raise NotOneModFour(p)
    for m in range(0, math.isqrt(p) + 1, 2):
        n2 = p - m * m
        n = math.isqrt(n2)
        if n * n == n2 and n % 2 == 1:
            return TwoSquares(p, m, n)
    raise NoDecomposition(p)


def common_neighbors(spec: FieldSpec, a: int, b: int) -> np.ndarray:
    chi = spec.char_table
    xs = spec.elements
    return xs[(chi[spec.sub_array(xs, a)] == 1) & (chi[spec.sub_array(xs, b)] == 1)]


def k4_on_edge(spec: FieldSpec, a: int, b: int) -> int:
    """Number of K4 subgraphs containing the edge {a, b}."""
    require_paley(spec)
    if a == b or spec.char_table[spec.sub(a, b)] != 1:
        raise NotAnEdge((a, b))
    nb = common_neighbors(spec, a, b)
    adj = spec.char_table[spec.sub_array(nb[:, None], nb[None, :])] == 1
    return int(np.triu(adj, 1).sum())


def k4_closed_form(p: int) -> int:
    """((p - 9)^2 - 4 m^2) / 64 with p = m^2 + n^2, n odd."""
    m = sum_two_squares(p).m
    num = (p - 9) ** 2 - 4 * m * m
    if num % 64:
        raise NonIntegral(f"{num} is not divisible by 64")
    return num // 64


def sample_edges(spec: FieldSpec, count: int, seed: int = 0) -> list[tuple[int, int]]:
    """``count`` random edges, always starting with (0, 1)."""
    rng = random.Random(seed * 1_000_003 + spec.q)
    squares = spec.square_array
    edges = [(0, 1)]
    while len(edges) < count:
        a = rng.randrange(spec.q)
        edges.append((a, spec.add(a, int(squares[rng.randrange(len(squares))]))))
    return edges


def check_k4(spec: FieldSpec, edges: int = 20, seed: int = 0) -> dict:
    """Brute-force K4 counts on sampled edges against the closed form."""
    counts = [k4_on_edge(spec, a, b) for a, b in sample_edges(spec, edges, seed)]
    out = {"edges": len(counts), "min": min(counts), "max": max(counts)}
    if spec.k == 1:
        out["closed_form"] = k4_closed_form(spec.p)
    return out
