"""Shared test utilities: random term generation and independent oracles."""

from __future__ import annotations

import itertools
import random

from latgap import Lattice
from latgap.terms import Const, Join, Meet, Term, Var

M3_NAMES = ("0", "x", "y", "z", "1")
M3_COVERS = (("0", "x"), ("0", "y"), ("0", "z"),
             ("x", "1"), ("y", "1"), ("z", "1"))

N5_NAMES = ("0", "p", "q", "r", "1")
N5_COVERS = (("0", "p"), ("p", "1"), ("0", "q"), ("q", "r"), ("r", "1"))


def random_term(rng: random.Random, arity: int, max_depth: int,
                lattice: Lattice) -> Term:
    def node(depth: int):
        if depth >= max_depth or rng.random() < 0.3:
            if rng.random() < 0.7:
                return Var(rng.randrange(1, arity + 1))
            return Const(lattice.elements[rng.randrange(lattice.size)])
        left = node(depth + 1)
        right = node(depth + 1)
        return Meet(left, right) if rng.random() < 0.5 else Join(left, right)

    return Term(node(0), arity, lattice)


def monotone_tables_by_filter(n: int, lattice: Lattice) -> list[tuple[int, ...]]:
    """Enumerate ALL value tables on subset masks and keep the monotone
    ones, testing every subset pair directly. Deliberately naive, so it
    is independent of both the backtracking enumerator and the cover
    based PolyFn validation."""
    size = 1 << n
    els = lattice.elements
    keep = []
    for tab in itertools.product(range(lattice.size), repeat=size):
        ok = True
        for i in range(size):
            for j in range(size):
                if i & j == i and not lattice.leq(els[tab[i]], els[tab[j]]):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            keep.append(tab)
    return keep


def essential_by_full_scan(lattice: Lattice, arity: int, fn) -> set[int]:
    """Definitional essentiality of a callable point -> Elem over L^n,
    written with explicit point tuples rather than table indexing."""
    els = lattice.elements
    ess = set()
    for pos in range(1, arity + 1):
        found = False
        for point in itertools.product(els, repeat=arity):
            base = fn(point)
            for replacement in els:
                changed = list(point)
                changed[pos - 1] = replacement
                if fn(tuple(changed)) != base:
                    ess.add(pos)
                    found = True
                    break
            if found:
                break
        if found:
            continue
    return ess
