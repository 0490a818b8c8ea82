"""Simple undirected graphs: representation, graph6 I/O, structure, families.

Graphs are immutable, vertices are 0..n-1.  The family generators produce
the extremal constructions used by the equality characterizations, together
with closed-form spectra in exact arithmetic (rationals, plus a symbolic
square-root marker for the complete-bipartite adjacency spectrum).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from spectra_bounds.linalg import Spectrum, SymMatrix, distinct_values, eigh
from spectra_bounds.tolerances import classification_eps

__all__ = [
    "BalancedMultipartite",
    "Complete",
    "CompleteBipartite",
    "CompleteMultipartite",
    "ComplementOfCliques",
    "ExactSpectrum",
    "ExactValue",
    "FamilySpec",
    "Graph",
    "JoinOf",
    "PackJoin",
    "Star",
    "UnionOf",
    "UnsupportedFamilyError",
    "adjacency",
    "allones_shifted_spectrum",
    "complement",
    "complement_lap_spectrum",
    "components",
    "count_distinct",
    "disjoint_union",
    "edge_pairs",
    "enumerate_labeled",
    "from_graph6",
    "generate",
    "exact_spectrum",
    "is_complete",
    "is_complete_multipartite",
    "join",
    "laplacian",
    "multipartite_charpoly_factor",
    "parse_family",
    "q_class_check",
    "q_parameters",
    "signless_laplacian",
    "to_graph6",
]

MAX_ENUMERATION_N = 7


class UnsupportedFamilyError(ValueError):
    """Raised when a closed-form spectrum is requested for a family without one."""


# ---------------------------------------------------------------------------
# Graph representation


class Graph:
    """Simple undirected graph on vertices 0..n-1 (no loops, no multi-edges)."""

    __slots__ = ("n", "adj", "_m", "_deg", "_g6")

    def __init__(self, n: int, adj: np.ndarray):
        if n < 1:
            raise ValueError("graph must have at least one vertex")
        a = np.asarray(adj, dtype=bool)
        if a.shape != (n, n):
            raise ValueError(f"adjacency must be {n}x{n}")
        if a.diagonal().any():
            raise ValueError("loops are not allowed")
        if not np.array_equal(a, a.T):
            raise ValueError("adjacency must be symmetric")
        a = a.copy()
        a.setflags(write=False)
        self.n = n
        self.adj = a
        self._m = None
        self._deg = None
        self._g6 = None

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        a = np.zeros((n, n), dtype=bool)
        for i, j in edges:
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            a[i, j] = True
            a[j, i] = True
        return cls(n, a)

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "Graph":
        a = np.zeros((n, n), dtype=bool)
        for b, (i, j) in enumerate(edge_pairs(n)):
            if mask >> b & 1:
                a[i, j] = True
                a[j, i] = True
        return cls(n, a)

    @property
    def m(self) -> int:
        if self._m is None:
            self._m = int(np.count_nonzero(self.adj)) // 2
        return self._m

    @property
    def degrees(self) -> np.ndarray:
        if self._deg is None:
            deg = self.adj.sum(axis=0).astype(np.int64)
            deg.setflags(write=False)
            self._deg = deg
        return self._deg

    def edges(self) -> list[tuple[int, int]]:
        iu, ju = np.nonzero(np.triu(self.adj))
        return list(zip(iu.tolist(), ju.tolist()))

    def mask(self) -> int:
        out = 0
        for b, (i, j) in enumerate(edge_pairs(self.n)):
            if self.adj[i, j]:
                out |= 1 << b
        return out

    def has_isolated_vertex(self) -> bool:
        return bool((self.adj.sum(axis=0) == 0).any())

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and np.array_equal(self.adj, other.adj)
        )

    def __hash__(self):
        return hash((self.n, self.adj.tobytes()))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m}, graph6={to_graph6(self)!r})"


def edge_pairs(n: int) -> list[tuple[int, int]]:
    """Vertex pairs in the edge-mask bit order: (0,1), (0,2), ..., (1,2), ..."""
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def enumerate_labeled(n: int):
    """Every labeled simple graph on n vertices, edge-mask ascending."""
    if not 1 <= n <= MAX_ENUMERATION_N:
        raise ValueError(
            f"labeled enumeration supports 1 <= n <= {MAX_ENUMERATION_N}; "
            "use graph6 corpora for larger orders"
        )
    for mask in range(1 << (n * (n - 1) // 2)):
        yield Graph.from_mask(n, mask)


# ---------------------------------------------------------------------------
# graph6 encoding (one graph per line; bit packing is column-major over the
# upper triangle, six bits per printable character offset by 63)

_G6_HEADER = ">>graph6<<"


def _g6_size_bytes(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes(
            [126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
        )
    raise ValueError(f"graph6 encoding for n={n} not supported (max 258047)")


def to_graph6(G: Graph) -> str:
    if G._g6 is not None:
        return G._g6
    n = G.n
    out = bytearray(_g6_size_bytes(n))
    bits = 0
    nbits = 0
    adj = G.adj
    for j in range(1, n):
        for i in range(j):
            bits = bits << 1 | int(adj[i, j])
            nbits += 1
            if nbits == 6:
                out.append(bits + 63)
                bits = 0
                nbits = 0
    if nbits:
        out.append((bits << (6 - nbits)) + 63)
    G._g6 = out.decode("ascii")
    return G._g6


def from_graph6(line: str) -> Graph:
    """Decode one graph6 line; strict about header, length, and padding."""
    s = line.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise ValueError("empty graph6 line")
    data = s.encode("ascii", errors="strict") if s.isascii() else None
    if data is None or any(c < 63 or c > 126 for c in data):
        raise ValueError(f"graph6 character out of range in {line!r}")
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise ValueError("graph6 256-bit size form not supported")
        if len(data) < 4:
            raise ValueError(f"malformed graph6 header in {line!r}")
        n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
        body = data[4:]
    else:
        n = data[0] - 63
        body = data[1:]
    if n < 1:
        raise ValueError(f"graph6 order {n} not supported (need n >= 1)")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(body) != nbytes:
        raise ValueError(
            f"graph6 body has {len(body)} characters, expected {nbytes} for n={n}"
        )
    a = np.zeros((n, n), dtype=bool)
    pos = 0
    for c in body:
        group = c - 63
        for shift in (5, 4, 3, 2, 1, 0):
            bit = group >> shift & 1
            if pos < nbits:
                if bit:
                    i, j = _g6_pair(pos, n)
                    a[i, j] = True
                    a[j, i] = True
            elif bit:
                raise ValueError(f"nonzero padding bits in {line!r}")
            pos += 1
    return Graph(n, a)


def _g6_pair(pos: int, n: int) -> tuple[int, int]:
    # column-major position -> (i, j); columns j=1..n-1 have j entries each
    j = 1
    while pos >= j:
        pos -= j
        j += 1
    return pos, j


def read_graph6_file(path) -> list[Graph]:
    graphs = []
    with open(path, "r", encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if line:
                graphs.append(from_graph6(line))
    return graphs


# ---------------------------------------------------------------------------
# Graph matrices and structural operations


def adjacency(G: Graph) -> SymMatrix:
    return SymMatrix(G.adj.astype(float))


def laplacian(G: Graph) -> SymMatrix:
    a = G.adj.astype(float)
    return SymMatrix(np.diag(a.sum(axis=0)) - a)


def signless_laplacian(G: Graph) -> SymMatrix:
    a = G.adj.astype(float)
    return SymMatrix(np.diag(a.sum(axis=0)) + a)


def complement(G: Graph) -> Graph:
    a = ~G.adj
    np.fill_diagonal(a, False)
    return Graph(G.n, a)


def disjoint_union(G: Graph, H: Graph) -> Graph:
    n = G.n + H.n
    a = np.zeros((n, n), dtype=bool)
    a[: G.n, : G.n] = G.adj
    a[G.n :, G.n :] = H.adj
    return Graph(n, a)


def join(G: Graph, H: Graph) -> Graph:
    n = G.n + H.n
    a = np.zeros((n, n), dtype=bool)
    a[: G.n, : G.n] = G.adj
    a[G.n :, G.n :] = H.adj
    a[: G.n, G.n :] = True
    a[G.n :, : G.n] = True
    return Graph(n, a)


def components(G: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, largest first."""
    seen = [False] * G.n
    comps = []
    for start in range(G.n):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in np.nonzero(G.adj[v])[0]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(int(w))
        comps.append(sorted(comp))
    comps.sort(key=lambda c: (-len(c), c))
    return comps


def induced_subgraph(G: Graph, vertices) -> Graph:
    idx = np.asarray(sorted(vertices), dtype=int)
    return Graph(len(idx), G.adj[np.ix_(idx, idx)])


def is_connected(G: Graph) -> bool:
    return len(components(G)) == 1


def is_complete(G: Graph) -> bool:
    return G.m == G.n * (G.n - 1) // 2


def is_complete_multipartite(G: Graph) -> tuple[int, ...] | None:
    """The part sizes (descending) when G is complete multipartite, else None.

    The certificate is the complement: G is complete multipartite with p >= 2
    parts exactly when the complement's components are cliques (and there are
    at least two of them).
    """
    comps = components(complement(G))
    if len(comps) < 2:
        return None
    for comp in comps:
        for a in range(len(comp)):
            for b in range(a + 1, len(comp)):
                if G.adj[comp[a], comp[b]]:
                    return None
    return tuple(sorted((len(c) for c in comps), reverse=True))


# ---------------------------------------------------------------------------
# Family specifications


@dataclass(frozen=True)
class Complete:
    n: int


@dataclass(frozen=True)
class Star:
    """K_{1, n-1} on n vertices."""

    n: int


@dataclass(frozen=True)
class CompleteBipartite:
    p: int
    q: int


@dataclass(frozen=True)
class CompleteMultipartite:
    parts: tuple[int, ...]


@dataclass(frozen=True)
class BalancedMultipartite:
    """p parts of size t each."""

    t: int
    p: int


@dataclass(frozen=True)
class UnionOf:
    members: tuple


@dataclass(frozen=True)
class JoinOf:
    left: "FamilySpec"
    right: "FamilySpec"


@dataclass(frozen=True)
class ComplementOfCliques:
    """Complement of a*K_b together with c isolated vertices."""

    a: int
    b: int
    c: int


@dataclass(frozen=True)
class PackJoin:
    """Join of two disjoint packs of y copies of K_x each."""

    x: int
    y: int


FamilySpec = (
    Complete
    | Star
    | CompleteBipartite
    | CompleteMultipartite
    | BalancedMultipartite
    | UnionOf
    | JoinOf
    | ComplementOfCliques
    | PackJoin
)


def q_parameters(a: int, b: int) -> tuple[int, int, int]:
    """The (c, order, connectivity) making the clique-complement construction
    land in the three-distinct-Laplacian-eigenvalue class.

    Requires a >= 2, b >= 3 and (b-2) | b(a-1); returns (c, a*b+c, (a-1)*b+c).
    """
    if a < 2 or b < 3:
        raise ValueError("construction needs a >= 2 and b >= 3")
    num = b * (a - 1)
    if num % (b - 2):
        raise ValueError(
            f"c = b(a-1)/(b-2) = {num}/{b - 2} is not an integer; "
            "no class membership for these (a, b)"
        )
    c = num // (b - 2)
    return c, a * b + c, (a - 1) * b + c


def _check_positive(name, *values):
    for v in values:
        if not isinstance(v, int) or v < 1:
            raise ValueError(f"{name}: size parameters must be positive integers")


def generate(spec: FamilySpec) -> Graph:
    """Concrete graph for a family specification."""
    if isinstance(spec, Complete):
        _check_positive("Complete", spec.n)
        return generate(CompleteMultipartite((1,) * spec.n))
    if isinstance(spec, Star):
        _check_positive("Star", spec.n)
        if spec.n < 2:
            raise ValueError("Star needs n >= 2")
        return generate(CompleteMultipartite((1, spec.n - 1)))
    if isinstance(spec, CompleteBipartite):
        _check_positive("CompleteBipartite", spec.p, spec.q)
        return generate(CompleteMultipartite((spec.p, spec.q)))
    if isinstance(spec, BalancedMultipartite):
        _check_positive("BalancedMultipartite", spec.t, spec.p)
        return generate(CompleteMultipartite((spec.t,) * spec.p))
    if isinstance(spec, CompleteMultipartite):
        if not spec.parts:
            raise ValueError("CompleteMultipartite needs at least one part")
        _check_positive("CompleteMultipartite", *spec.parts)
        n = sum(spec.parts)
        a = np.ones((n, n), dtype=bool)
        np.fill_diagonal(a, False)
        offset = 0
        for size in spec.parts:
            a[offset : offset + size, offset : offset + size] = False
            offset += size
        return Graph(n, a)
    if isinstance(spec, UnionOf):
        if not spec.members:
            raise ValueError("UnionOf needs at least one member")
        graphs = [generate(s) for s in spec.members]
        out = graphs[0]
        for g in graphs[1:]:
            out = disjoint_union(out, g)
        return out
    if isinstance(spec, JoinOf):
        return join(generate(spec.left), generate(spec.right))
    if isinstance(spec, ComplementOfCliques):
        _check_positive("ComplementOfCliques", spec.a, spec.b)
        if spec.c < 0:
            raise ValueError("ComplementOfCliques: c must be nonnegative")
        members = [Complete(spec.b)] * spec.a + [Complete(1)] * spec.c
        return complement(generate(UnionOf(tuple(members))))
    if isinstance(spec, PackJoin):
        _check_positive("PackJoin", spec.x, spec.y)
        pack = UnionOf((Complete(spec.x),) * spec.y)
        return generate(JoinOf(pack, pack))
    raise TypeError(f"not a family spec: {spec!r}")


def family_order(spec: FamilySpec) -> int:
    if isinstance(spec, (Complete, Star)):
        return spec.n
    if isinstance(spec, CompleteBipartite):
        return spec.p + spec.q
    if isinstance(spec, CompleteMultipartite):
        return sum(spec.parts)
    if isinstance(spec, BalancedMultipartite):
        return spec.t * spec.p
    if isinstance(spec, UnionOf):
        return sum(family_order(s) for s in spec.members)
    if isinstance(spec, JoinOf):
        return family_order(spec.left) + family_order(spec.right)
    if isinstance(spec, ComplementOfCliques):
        return spec.a * spec.b + spec.c
    if isinstance(spec, PackJoin):
        return 2 * spec.x * spec.y
    raise TypeError(f"not a family spec: {spec!r}")


# ---------------------------------------------------------------------------
# Exact spectra


def _square_free_split(rad: int) -> tuple[int, int]:
    """rad = outer^2 * core with core square-free; returns (outer, core)."""
    outer = 1
    core = rad
    d = 2
    while d * d <= core:
        while core % (d * d) == 0:
            core //= d * d
            outer *= d
        d += 1
    return outer, core


@dataclass(frozen=True)
class ExactValue:
    """A real of the form coef * sqrt(rad) with coef rational, rad a positive
    integer (rad == 1 means the value is rational)."""

    coef: Fraction
    rad: int = 1

    def __post_init__(self):
        if self.rad < 1:
            raise ValueError("radicand must be positive")
        coef = Fraction(self.coef)
        rad = self.rad
        if coef == 0:
            rad = 1
        else:
            outer, rad = _square_free_split(rad)
            coef *= outer
        object.__setattr__(self, "coef", coef)
        object.__setattr__(self, "rad", rad)

    @classmethod
    def of(cls, value) -> "ExactValue":
        return cls(Fraction(value))

    @classmethod
    def sqrt(cls, rad: int) -> "ExactValue":
        return cls(Fraction(1), rad)

    @property
    def is_rational(self) -> bool:
        return self.rad == 1

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is irrational")
        return self.coef

    def __float__(self) -> float:
        return float(self.coef) * math.sqrt(self.rad)

    def __neg__(self) -> "ExactValue":
        return ExactValue(-self.coef, self.rad)

    def _key(self) -> Fraction:
        return self.coef * abs(self.coef) * self.rad

    def __lt__(self, other: "ExactValue") -> bool:
        return self._key() < other._key()

    def __repr__(self):
        if self.is_rational:
            return f"{self.coef}"
        return f"{self.coef}*sqrt({self.rad})"


class ExactSpectrum:
    """Eigenvalues with multiplicities in exact arithmetic, descending."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        merged: dict[ExactValue, int] = {}
        for value, mult in entries:
            if not isinstance(value, ExactValue):
                value = ExactValue.of(value)
            if mult < 0:
                raise ValueError("multiplicity must be nonnegative")
            if mult:
                merged[value] = merged.get(value, 0) + mult
        if not merged:
            raise ValueError("empty spectrum")
        self.entries = tuple(
            sorted(merged.items(), key=lambda e: e[0]._key(), reverse=True)
        )

    @property
    def n(self) -> int:
        return sum(m for _, m in self.entries)

    def values_float(self) -> np.ndarray:
        out = []
        for value, mult in self.entries:
            out.extend([float(value)] * mult)
        return np.array(out)

    def to_spectrum(self) -> Spectrum:
        return Spectrum(values=self.values_float(), tol=0.0, exact=True)

    def distinct_count(self) -> int:
        return len(self.entries)

    def top_k_sum_float(self, k: int) -> float:
        if not 1 <= k <= self.n:
            raise ValueError(f"k must be in [1, {self.n}]")
        total = 0.0
        remaining = k
        for value, mult in self.entries:
            take = min(mult, remaining)
            total += take * float(value)
            remaining -= take
            if remaining == 0:
                break
        return total

    def top_k_sum_fraction(self, k: int) -> Fraction:
        if not 1 <= k <= self.n:
            raise ValueError(f"k must be in [1, {self.n}]")
        total = Fraction(0)
        remaining = k
        for value, mult in self.entries:
            take = min(mult, remaining)
            total += take * value.as_fraction()
            remaining -= take
            if remaining == 0:
                break
        return total

    def is_rational(self) -> bool:
        return all(v.is_rational for v, _ in self.entries)

    def complement_laplacian(self, n: int | None = None) -> "ExactSpectrum":
        """Laplacian spectrum of the complement: drop one zero, map mu -> n - mu, add a zero."""
        if n is None:
            n = self.n
        if n != self.n:
            raise ValueError("order mismatch")
        zero = ExactValue.of(0)
        entries = dict(self.entries)
        if entries.get(zero, 0) < 1:
            raise ValueError("a Laplacian spectrum must contain 0")
        if min(v._key() for v in entries) < 0:
            raise ValueError("Laplacian eigenvalues must be nonnegative")
        entries[zero] -= 1
        out = [(ExactValue.of(n - v.as_fraction()), m) for v, m in entries.items()]
        out.append((zero, 1))
        return ExactSpectrum(out)

    def allones_shifted(self, a=1) -> "ExactSpectrum":
        """Spectrum of L + a*J from the Laplacian spectrum: replace one zero by n*a."""
        zero = ExactValue.of(0)
        entries = dict(self.entries)
        if entries.get(zero, 0) < 1:
            raise ValueError("a Laplacian spectrum must contain 0")
        entries[zero] -= 1
        out = list(entries.items())
        out.append((ExactValue.of(Fraction(a) * self.n), 1))
        return ExactSpectrum(out)

    def __eq__(self, other):
        return isinstance(other, ExactSpectrum) and self.entries == other.entries

    def __repr__(self):
        body = ", ".join(f"{v}^{m}" for v, m in self.entries)
        return f"ExactSpectrum({body})"


def _lap_spectrum_multipartite(parts: tuple[int, ...]) -> ExactSpectrum:
    n = sum(parts)
    entries = [(ExactValue.of(n), len(parts) - 1), (ExactValue.of(0), 1)]
    for size in parts:
        entries.append((ExactValue.of(n - size), size - 1))
    return ExactSpectrum(entries)


def _adj_spectrum_bipartite(p: int, q: int) -> ExactSpectrum:
    root = ExactValue(Fraction(1), p * q)
    return ExactSpectrum([(root, 1), (ExactValue.of(0), p + q - 2), (-root, 1)])


def _adj_spectrum_balanced(t: int, p: int) -> ExactSpectrum:
    return ExactSpectrum(
        [
            (ExactValue.of(t * (p - 1)), 1),
            (ExactValue.of(0), t * p - p),
            (ExactValue.of(-t), p - 1),
        ]
    )


def exact_spectrum(spec: FamilySpec, which: str) -> ExactSpectrum:
    """Closed-form spectrum of a family instance.

    ``which`` is "adjacency" or "laplacian".  The Laplacian side covers all
    family compositions (unions concatenate, joins go through the complement
    rule); the adjacency side covers complete / complete bipartite / balanced
    multipartite graphs and disjoint unions of those.
    """
    if which == "laplacian":
        return _exact_laplacian(spec)
    if which == "adjacency":
        return _exact_adjacency(spec)
    raise ValueError(f"which must be 'adjacency' or 'laplacian', got {which!r}")


def _parts_of(spec: FamilySpec) -> tuple[int, ...] | None:
    if isinstance(spec, Complete):
        return (1,) * spec.n
    if isinstance(spec, Star):
        return (spec.n - 1, 1)
    if isinstance(spec, CompleteBipartite):
        return (spec.p, spec.q)
    if isinstance(spec, BalancedMultipartite):
        return (spec.t,) * spec.p
    if isinstance(spec, CompleteMultipartite):
        return tuple(spec.parts)
    return None


def _exact_laplacian(spec: FamilySpec) -> ExactSpectrum:
    parts = _parts_of(spec)
    if parts is not None:
        return _lap_spectrum_multipartite(parts)
    if isinstance(spec, UnionOf):
        specs = [_exact_laplacian(s) for s in spec.members]
        entries = []
        for s in specs:
            entries.extend(s.entries)
        return ExactSpectrum(entries)
    if isinstance(spec, JoinOf):
        left = _exact_laplacian(spec.left).complement_laplacian()
        right = _exact_laplacian(spec.right).complement_laplacian()
        union = ExactSpectrum(list(left.entries) + list(right.entries))
        return union.complement_laplacian()
    if isinstance(spec, ComplementOfCliques):
        members = [Complete(spec.b)] * spec.a + [Complete(1)] * spec.c
        return _exact_laplacian(UnionOf(tuple(members))).complement_laplacian()
    if isinstance(spec, PackJoin):
        pack = UnionOf((Complete(spec.x),) * spec.y)
        return _exact_laplacian(JoinOf(pack, pack))
    raise UnsupportedFamilyError(f"no Laplacian closed form for {spec!r}")


def _exact_adjacency(spec: FamilySpec) -> ExactSpectrum:
    parts = _parts_of(spec)
    if parts is not None:
        if len(parts) == 1:
            return ExactSpectrum([(ExactValue.of(0), parts[0])])
        if len(parts) == 2:
            return _adj_spectrum_bipartite(parts[0], parts[1])
        if len(set(parts)) == 1:
            return _adj_spectrum_balanced(parts[0], len(parts))
        raise UnsupportedFamilyError(
            f"no adjacency closed form for unbalanced multipartite {parts}"
        )
    if isinstance(spec, UnionOf):
        specs = [_exact_adjacency(s) for s in spec.members]
        entries = []
        for s in specs:
            entries.extend(s.entries)
        return ExactSpectrum(entries)
    raise UnsupportedFamilyError(f"no adjacency closed form for {spec!r}")


# ---------------------------------------------------------------------------
# Spectrum-level helpers


def count_distinct(S: Spectrum) -> int:
    """Number of distinct eigenvalues under the clustering tolerance."""
    return len(distinct_values(S))


def complement_lap_spectrum(S: Spectrum, n: int) -> Spectrum:
    """Laplacian spectrum of the complement graph from that of the graph."""
    if S.n != n:
        raise ValueError(f"spectrum has {S.n} values, expected {n}")
    eps = 0.0 if S.exact else S.tol
    if S.values[-1] < -eps:
        raise ValueError("Laplacian eigenvalues must be nonnegative")
    transformed = [n - v for v in S.values[: n - 1]]
    transformed.append(0.0)
    values = np.sort(np.array(transformed))[::-1]
    return Spectrum(values=values, tol=S.tol, exact=S.exact)


def allones_shifted_spectrum(S: Spectrum, a: float = 1.0) -> Spectrum:
    """Spectrum of L + a*J from the Laplacian spectrum (smallest value -> n*a)."""
    n = S.n
    values = np.sort(np.append(S.values[: n - 1], n * a))[::-1]
    return Spectrum(values=values, tol=S.tol, exact=False if a != int(a) else S.exact)


def multipartite_charpoly_factor(sizes, mults, x):
    """The nontrivial factor of the complete-multipartite characteristic
    polynomial, evaluated at ``x``:

        F(x) = prod_j (x + m_j) - sum_i a_i m_i prod_{j != i} (x + m_j)

    where ``sizes`` are the distinct part sizes and ``mults`` their counts.
    Accepts float or Fraction ``x`` and preserves the arithmetic type.
    """
    sizes = list(sizes)
    mults = list(mults)
    if len(sizes) != len(mults) or not sizes:
        raise ValueError("sizes and mults must be nonempty and equally long")
    if any(s < 1 for s in sizes) or any(a < 1 for a in mults):
        raise ValueError("sizes and multiplicities must be positive")
    full = x - x + 1  # one, in the arithmetic type of x
    for s in sizes:
        full = full * (x + s)
    total = x - x
    for i, (s_i, a_i) in enumerate(zip(sizes, mults)):
        partial = x - x + 1
        for j, s_j in enumerate(sizes):
            if j != i:
                partial = partial * (x + s_j)
        total = total + a_i * s_i * partial
    return full - total


# ---------------------------------------------------------------------------
# The three-distinct-Laplacian-eigenvalue class


def q_class_check(G: Graph, t: int, spectrum: Spectrum | None = None) -> bool:
    """Membership test for the class of connected graphs of order n with
    exactly three distinct Laplacian eigenvalues, size (n+1)t/2, and
    algebraic connectivity t."""
    if t < 1:
        raise ValueError("t must be a positive integer")
    n = G.n
    if 2 * G.m != (n + 1) * t:
        return False
    if not is_connected(G):
        return False
    if spectrum is None:
        spectrum = eigh(laplacian(G))
    if count_distinct(spectrum) != 3:
        return False
    eps = 0.0 if spectrum.exact else max(spectrum.tol, classification_eps(1.0))
    algebraic_connectivity = spectrum.values[n - 2]
    return abs(algebraic_connectivity - t) <= eps


# ---------------------------------------------------------------------------
# Family mini-grammar: Kn(5), Kpq(2,3), Star(4), Parts(3,2,1), Bal(t=2,p=3),
# QComp(a=2,b=3), G3(x=2,y=2), Join(a,b), Union(a,b,...)


def parse_family(text: str) -> FamilySpec:
    spec, pos = _parse_expr(text, 0)
    if text[pos:].strip():
        raise ValueError(f"trailing input after family spec: {text[pos:]!r}")
    return spec


def _parse_expr(text: str, pos: int) -> tuple[FamilySpec, int]:
    while pos < len(text) and text[pos].isspace():
        pos += 1
    start = pos
    while pos < len(text) and (text[pos].isalnum() or text[pos] == "_"):
        pos += 1
    name = text[start:pos]
    if not name:
        raise ValueError(f"expected a family name at position {start} in {text!r}")
    while pos < len(text) and text[pos].isspace():
        pos += 1
    if pos >= len(text) or text[pos] != "(":
        raise ValueError(f"expected '(' after {name!r} in {text!r}")
    pos += 1
    args: list = []
    kwargs: dict[str, int] = {}
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos < len(text) and text[pos] == ")":
            pos += 1
            break
        if name in ("Join", "Union"):
            sub, pos = _parse_expr(text, pos)
            args.append(sub)
        else:
            key = None
            mark = pos
            while pos < len(text) and (text[pos].isalnum() or text[pos] == "_"):
                pos += 1
            token = text[mark:pos]
            while pos < len(text) and text[pos].isspace():
                pos += 1
            if pos < len(text) and text[pos] == "=":
                key = token
                pos += 1
                while pos < len(text) and text[pos].isspace():
                    pos += 1
                mark = pos
                if pos < len(text) and text[pos] == "-":
                    pos += 1
                while pos < len(text) and text[pos].isdigit():
                    pos += 1
                token = text[mark:pos]
            if not token or not token.lstrip("-").isdigit():
                raise ValueError(f"expected an integer at position {mark} in {text!r}")
            if key is None:
                args.append(int(token))
            else:
                kwargs[key] = int(token)
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos < len(text) and text[pos] == ",":
            pos += 1
            continue
        if pos < len(text) and text[pos] == ")":
            pos += 1
            break
        raise ValueError(f"expected ',' or ')' at position {pos} in {text!r}")
    return _build_family(name, args, kwargs), pos


def _build_family(name: str, args: list, kwargs: dict[str, int]) -> FamilySpec:
    try:
        if name == "Kn":
            return Complete(*args, **kwargs)
        if name == "Star":
            return Star(*args, **kwargs)
        if name == "Kpq":
            return CompleteBipartite(*args, **kwargs)
        if name == "Parts":
            if kwargs or not args:
                raise ValueError("Parts takes positional sizes")
            return CompleteMultipartite(tuple(args))
        if name == "Bal":
            return BalancedMultipartite(*args, **kwargs)
        if name == "QComp":
            a = kwargs.pop("a", None) if "a" in kwargs else (args.pop(0) if args else None)
            b = kwargs.pop("b", None) if "b" in kwargs else (args.pop(0) if args else None)
            c = kwargs.pop("c", None) if "c" in kwargs else (args.pop(0) if args else None)
            if kwargs or args or a is None or b is None:
                raise ValueError("QComp takes (a, b) or (a, b, c)")
            if c is None:
                c, _, _ = q_parameters(a, b)
            return ComplementOfCliques(a, b, c)
        if name == "G3":
            return PackJoin(*args, **kwargs)
        if name == "Join":
            if len(args) != 2 or kwargs:
                raise ValueError("Join takes exactly two family specs")
            return JoinOf(args[0], args[1])
        if name == "Union":
            if not args or kwargs:
                raise ValueError("Union takes at least one family spec")
            return UnionOf(tuple(args))
    except TypeError as exc:
        raise ValueError(f"bad arguments for {name}: {exc}") from exc
    raise ValueError(f"unknown family {name!r}")
