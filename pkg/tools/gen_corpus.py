#!/usr/bin/env python3
"""Regenerate the graph6 corpus files under data/.

Deterministic: fixed RNG seed, fixed ordering.  Three files:

  families_upto12.g6  every generable family instance on <= 12 vertices
                      (complete, stars, bipartite, multipartite, balanced,
                      equal-product two-component unions, doubled balanced
                      packs, clique-complement constructions, shifted-bound
                      family members)
  random_n8.g6        deterministic random sample on 8 vertices
  random_n9.g6        deterministic random sample on 9 vertices
"""

from __future__ import annotations

import os
import sys

import numpy as np

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from spectra_bounds.graphs import (
    BalancedMultipartite,
    Complete,
    CompleteBipartite,
    CompleteMultipartite,
    ComplementOfCliques,
    Graph,
    JoinOf,
    PackJoin,
    Star,
    UnionOf,
    generate,
    q_parameters,
    to_graph6,
)

MAX_N = 12
SAMPLES_PER_ORDER = 12000
SEED = 20250810


def family_specs():
    for n in range(2, MAX_N + 1):
        yield Complete(n)
    for n in range(3, MAX_N + 1):
        yield Star(n)
    for p in range(1, MAX_N):
        for q in range(p, MAX_N - p + 1):
            yield CompleteBipartite(p, q)
    for t in range(1, MAX_N // 2 + 1):
        for p in range(2, MAX_N // t + 1):
            yield BalancedMultipartite(t, p)
    # all complete multipartite graphs (partitions with >= 2 parts)
    for n in range(3, MAX_N + 1):
        for parts in _partitions(n):
            if len(parts) >= 2:
                yield CompleteMultipartite(tuple(parts))
    # two complete bipartite components with equal products
    for p in range(1, MAX_N):
        for q in range(p, MAX_N):
            for s in range(p, MAX_N):
                for t in range(s, MAX_N):
                    if p * q == s * t and (p, q) <= (s, t) and p + q + s + t <= MAX_N:
                        yield UnionOf((CompleteBipartite(p, q), CompleteBipartite(s, t)))
    # doubled balanced multipartite
    for t in range(1, MAX_N // 2 + 1):
        for p in range(3, MAX_N // (2 * t) + 1):
            yield UnionOf((BalancedMultipartite(t, p), BalancedMultipartite(t, p)))
    # clique-complement constructions landing in the three-distinct class
    for a in range(2, 6):
        for b in range(3, 8):
            try:
                c, order, _ = q_parameters(a, b)
            except ValueError:
                continue
            if order <= MAX_N:
                yield ComplementOfCliques(a, b, c)
    # K_{n-2} v 2K_1 (the n, n-2 member of the three-distinct class)
    for n in range(4, MAX_N + 1):
        yield JoinOf(Complete(n - 2), UnionOf((Complete(1), Complete(1))))
    # shifted-bound family members built from K_{j-2} v 2K_1:
    #   complement(K_{j-2} v 2K_1) = (j-2)K_1 + K_2
    for n in range(5, MAX_N + 1):
        j = n - 1
        scattered = UnionOf((Complete(1),) * (j - 2) + (Complete(2),))
        yield JoinOf(Complete(1), scattered)
    for j in range(4, MAX_N // 2 + 2):
        n = 2 * j - 2
        if n <= MAX_N:
            scattered = UnionOf((Complete(1),) * (j - 2) + (Complete(2),))
            isolated = UnionOf((Complete(1),) * (j - 2))
            yield JoinOf(scattered, isolated)
    for x in range(1, MAX_N // 2 + 1):
        for y in range(2, MAX_N // (2 * x) + 1):
            yield PackJoin(x, y)


def _partitions(n, largest=None):
    if largest is None:
        largest = n
    if n == 0:
        yield []
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield [first] + rest


def random_sample(n: int, count: int, rng) -> list[str]:
    nbits = n * (n - 1) // 2
    lines: list[str] = []
    seen: set[int] = set()
    densities = [0.15, 0.3, 0.5, 0.7, 0.85]
    while len(lines) < count:
        p = densities[len(lines) % len(densities)]
        bits = rng.random(nbits) < p
        mask = 0
        for b, on in enumerate(bits):
            if on:
                mask |= 1 << b
        if mask in seen:
            continue
        seen.add(mask)
        lines.append(to_graph6(Graph.from_mask(n, mask)))
    return lines


def main():
    root = os.path.join(os.path.dirname(__file__), "..", "data")
    os.makedirs(root, exist_ok=True)

    seen: set[str] = set()
    fam_lines: list[str] = []
    for spec in family_specs():
        line = to_graph6(generate(spec))
        if line not in seen:
            seen.add(line)
            fam_lines.append(line)
    with open(os.path.join(root, "families_upto12.g6"), "w") as fh:
        fh.write("\n".join(fam_lines) + "\n")
    print(f"families_upto12.g6: {len(fam_lines)} graphs")

    rng = np.random.default_rng(SEED)
    for n in (8, 9):
        lines = random_sample(n, SAMPLES_PER_ORDER, rng)
        with open(os.path.join(root, f"random_n{n}.g6"), "w") as fh:
            fh.write("\n".join(lines) + "\n")
        print(f"random_n{n}.g6: {len(lines)} graphs")


if __name__ == "__main__":
    main()
