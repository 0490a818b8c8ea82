"""Eigenvalue-sum bounds specialized to graph matrices.

Every bound here is a thin wrapper that assembles a ``BoundInput`` for the
right matrix and delegates to the general machinery in ``bounds_core``, so
the specialized and general code paths cannot drift apart.

Bound identifiers (used by the scan layer and the CLI):

===========  ================================================================
adj1         sqrt(2m (k - 1/(theta+1))) on the adjacency matrix
adj2         sqrt(2m (k - 4/(theta+2))), k >= 2, G not complete
inertia      n/(2(theta+1)) (theta + sqrt(theta (k theta + k - 1)))
lap1         2mk/n + sqrt((sum d_i^2 + 2m - 4m^2/n)(k - 1/(theta+1)))
lap2         shifted bound through L + J with sigma = #{mu < 2m/n + 1}
mohar        (n/2)(sqrt(k) + 1) comparator (adjacency)
nikiforov    2n/sqrt(3) comparator for lambda_1 + lambda_2 (k = 2 only)
===========  ================================================================

theta is always the count of eigenvalues of the matrix at hand strictly
below its mean eigenvalue.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from spectra_bounds import bounds_core
from spectra_bounds.bounds_core import BoundInput, mohar_bound, nikiforov_pair_bound
from spectra_bounds.graphs import (
    Graph,
    adjacency,
    allones_shifted_spectrum,
    complement,
    components,
    induced_subgraph,
    is_complete,
    is_complete_multipartite,
    laplacian,
    q_class_check,
    to_graph6,
)
from spectra_bounds.linalg import (
    Spectrum,
    SymMatrix,
    distinct_values,
    eigh,
    inertia,
    top_k_sum,
    trace_stats,
)
from spectra_bounds.tolerances import EQUALITY_TOL

__all__ = [
    "BOUND_IDS",
    "GraphBoundReport",
    "PairBounds",
    "adj_bound_inertia",
    "adj_bound_theta1",
    "adj_bound_theta2",
    "equality_family",
    "equality_witness_scan",
    "evaluate_bound",
    "g_family_membership",
    "lap2_equality_route",
    "lap_bound_sigma",
    "lap_bound_theta",
    "pair_bound_checks",
]

BOUND_IDS = ("adj1", "adj2", "inertia", "lap1", "lap2", "mohar", "nikiforov")


@dataclass(frozen=True)
class GraphBoundReport:
    """A bound evaluation on one graph."""

    graph6: str
    bound: str
    n: int
    m: int
    k: int
    value: float
    applicable: bool
    reason: str = ""
    actual: float | None = None
    slack: float | None = None
    equality: bool | None = None
    theta: int | None = None
    sigma: int | None = None


def _wrap(G: Graph, bound: str, k: int, rep, theta=None, sigma=None) -> GraphBoundReport:
    return GraphBoundReport(
        graph6=to_graph6(G),
        bound=bound,
        n=G.n,
        m=G.m,
        k=k,
        value=rep.value,
        applicable=rep.applicable,
        reason=rep.reason,
        actual=rep.actual,
        slack=rep.slack,
        equality=rep.equality,
        theta=theta,
        sigma=sigma,
    )


def _adjacency_input(G: Graph, k: int, spectrum: Spectrum | None) -> tuple[BoundInput, int]:
    if G.m < 1:
        raise ValueError("adjacency bounds need at least one edge")
    if spectrum is None:
        spectrum = eigh(adjacency(G))
    theta = inertia(spectrum, 0.0).theta
    inp = BoundInput(
        n=G.n, k=k, tr=0.0, centered_tr2=2.0 * G.m, theta=theta, spectrum=spectrum
    )
    return inp, theta


def adj_bound_theta1(
    G: Graph, k: int, spectrum: Spectrum | None = None, eq_tol: float = EQUALITY_TOL
) -> GraphBoundReport:
    """Adjacency top-k bound with the theta+1 correction (shift order 1)."""
    inp, theta = _adjacency_input(G, k, spectrum)
    rep = bounds_core.variance_bound(inp, t=1, eq_tol=eq_tol)
    return _wrap(G, "adj1", k, rep, theta=theta)


def adj_bound_theta2(
    G: Graph, k: int, spectrum: Spectrum | None = None, eq_tol: float = EQUALITY_TOL
) -> GraphBoundReport:
    """Adjacency top-k bound with the theta+2 correction; needs k >= 2 and a
    non-complete graph."""
    if is_complete(G):
        raise ValueError("the theta+2 adjacency bound excludes complete graphs")
    if k < 2:
        raise ValueError("the theta+2 adjacency bound needs k >= 2")
    inp, theta = _adjacency_input(G, k, spectrum)
    rep = bounds_core.variance_bound(inp, t=2, eq_tol=eq_tol)
    return _wrap(G, "adj2", k, rep, theta=theta)


def adj_bound_inertia(
    G: Graph, k: int, spectrum: Spectrum | None = None, eq_tol: float = EQUALITY_TOL
) -> GraphBoundReport:
    """Inertia-only adjacency bound n/(2(theta+1)) (theta + sqrt(theta(k theta + k - 1)))."""
    inp, theta = _adjacency_input(G, k, spectrum)
    rep = bounds_core.inertia_bound(inp, s=1, eq_tol=eq_tol)
    return _wrap(G, "inertia", k, rep, theta=theta)


def _degree_power(G: Graph) -> float:
    deg = G.degrees
    return float((deg * deg).sum())


def lap_bound_theta(
    G: Graph, k: int, spectrum: Spectrum | None = None, eq_tol: float = EQUALITY_TOL
) -> GraphBoundReport:
    """Laplacian top-k bound: 2mk/n + sqrt((sum d^2 + 2m - 4m^2/n)(k - 1/(theta+1)))."""
    if G.m < 1:
        raise ValueError("Laplacian bounds need at least one edge")
    if spectrum is None:
        spectrum = eigh(laplacian(G))
    n, m = G.n, G.m
    # trace statistics of L from the degree sequence: tr = 2m, tr2 = sum d^2 + 2m
    tr = 2.0 * m
    centered_tr2 = _degree_power(G) + 2.0 * m - 4.0 * m * m / n
    theta = inertia(spectrum, tr / n).theta
    inp = BoundInput(
        n=n, k=k, tr=tr, centered_tr2=max(0.0, centered_tr2), theta=theta, spectrum=spectrum
    )
    rep = bounds_core.variance_bound(inp, t=1, eq_tol=eq_tol)
    return _wrap(G, "lap1", k, rep, theta=theta)


def lap_bound_sigma(
    G: Graph, k: int, spectrum: Spectrum | None = None, eq_tol: float = EQUALITY_TOL
) -> GraphBoundReport:
    """Laplacian top-k bound through the all-ones shift.

    Evaluates the general shift-order-2 bound on M = L + J, whose spectrum is
    the Laplacian's with the zero replaced by n, and subtracts n back out.
    sigma counts Laplacian eigenvalues below 2m/n + 1.
    """
    if G.m < 1:
        raise ValueError("Laplacian bounds need at least one edge")
    if not 1 <= k <= G.n - 1:
        raise ValueError(f"k must be in [1, {G.n - 1}], got {k}")
    if spectrum is None:
        spectrum = eigh(laplacian(G))
    n, m = G.n, G.m
    shifted = allones_shifted_spectrum(spectrum, 1.0)
    # trace statistics of L + J from the degree sequence:
    # tr = 2m + n, tr2 = sum d^2 + 2m + n^2
    tr = 2.0 * m + n
    centered_tr2 = _degree_power(G) + n * n - n - 2.0 * m - 4.0 * m * m / n
    theta_m = inertia(shifted, tr / n).theta
    sigma = theta_m + 1
    inp = BoundInput(
        n=n,
        k=k + 1,
        tr=tr,
        centered_tr2=max(0.0, centered_tr2),
        theta=theta_m,
        spectrum=shifted,
    )
    rep = bounds_core.variance_bound(inp, t=2, eq_tol=eq_tol)
    value = rep.value - n
    actual = top_k_sum(spectrum, k)
    slack = value - actual
    report = bounds_core.BoundReport(
        value=value,
        applicable=True,
        actual=actual,
        slack=slack,
        equality=abs(slack) <= eq_tol,
    )
    return _wrap(G, "lap2", k, report, theta=theta_m, sigma=sigma)


def _comparator_report(G, bound, k, value, spectrum, eq_tol):
    actual = top_k_sum(spectrum, k)
    slack = value - actual
    rep = bounds_core.BoundReport(
        value=value, applicable=True, actual=actual, slack=slack,
        equality=abs(slack) <= eq_tol,
    )
    return _wrap(G, bound, k, rep, theta=inertia(spectrum, 0.0).theta)


def evaluate_bound(
    G: Graph,
    bound: str,
    k: int,
    adj_spectrum: Spectrum | None = None,
    lap_spectrum: Spectrum | None = None,
    eq_tol: float = EQUALITY_TOL,
) -> GraphBoundReport:
    """Scan-level dispatcher: precondition failures become inapplicable records."""
    try:
        if bound == "adj1":
            return adj_bound_theta1(G, k, adj_spectrum, eq_tol)
        if bound == "adj2":
            return adj_bound_theta2(G, k, adj_spectrum, eq_tol)
        if bound == "inertia":
            return adj_bound_inertia(G, k, adj_spectrum, eq_tol)
        if bound == "lap1":
            return lap_bound_theta(G, k, lap_spectrum, eq_tol)
        if bound == "lap2":
            return lap_bound_sigma(G, k, lap_spectrum, eq_tol)
        if bound == "mohar":
            if adj_spectrum is None:
                adj_spectrum = eigh(adjacency(G))
            return _comparator_report(G, bound, k, mohar_bound(G.n, k), adj_spectrum, eq_tol)
        if bound == "nikiforov":
            if k != 2:
                raise ValueError("the pairwise comparator is defined for k = 2")
            if adj_spectrum is None:
                adj_spectrum = eigh(adjacency(G))
            return _comparator_report(
                G, bound, k, nikiforov_pair_bound(G.n), adj_spectrum, eq_tol
            )
    except ValueError as exc:
        return GraphBoundReport(
            graph6=to_graph6(G),
            bound=bound,
            n=G.n,
            m=G.m,
            k=k,
            value=math.nan,
            applicable=False,
            reason=str(exc),
        )
    raise ValueError(f"unknown bound id {bound!r}; known: {', '.join(BOUND_IDS)}")


# ---------------------------------------------------------------------------
# Corollary-style pairwise checks


@dataclass(frozen=True)
class PairBounds:
    """lambda_1 + lambda_2 against the pairwise comparators."""

    n: int
    actual: float
    nikiforov: float
    adj2_k2: float | None
    planar_bound: float | None
    trianglefree_bound: float | None


def pair_bound_checks(
    G: Graph,
    planar: bool = False,
    triangle_free: bool = False,
    spectrum: Spectrum | None = None,
) -> PairBounds:
    """Pairwise top-two comparisons; planarity/triangle-freeness are caller
    supplied flags (this module does not test planarity)."""
    n = G.n
    if n < 3:
        raise ValueError("pairwise checks need n >= 3")
    if spectrum is None:
        spectrum = eigh(adjacency(G))
    actual = top_k_sum(spectrum, 2)
    adj2 = None
    if not is_complete(G) and G.m >= 1:
        adj2 = adj_bound_theta2(G, 2, spectrum).value
    return PairBounds(
        n=n,
        actual=actual,
        nikiforov=nikiforov_pair_bound(n),
        adj2_k2=adj2,
        planar_bound=(2 * math.sqrt(3) / math.sqrt(n)) * (n - 2) if planar else None,
        trianglefree_bound=math.sqrt(n * (n - 2)) if triangle_free else None,
    )


# ---------------------------------------------------------------------------
# Equality characterizations


def _multipartite_class(parts: tuple[int, ...]) -> tuple | None:
    """('bipartite', product) or ('balanced', t, p) or None."""
    if len(parts) == 2:
        return ("bipartite", parts[0] * parts[1])
    if len(parts) >= 3 and len(set(parts)) == 1:
        return ("balanced", parts[0], len(parts))
    return None


def g_family_membership(G: Graph) -> set[str]:
    """Which of the three shifted-bound equality families contain G.

    g1: complement is an isolated vertex plus a three-distinct-eigenvalue
        class member; g2: complement is K_t plus a class member with matching
        connectivity t; g3: complement is two copies of one balanced
        complete multipartite graph.
    """
    comp = complement(G)
    comps = components(comp)
    n = G.n
    tags: set[str] = set()
    if len(comps) != 2:
        return tags

    subs = [induced_subgraph(comp, c) for c in comps]

    balanced = []
    for H in subs:
        parts = is_complete_multipartite(H)
        if parts is not None and len(set(parts)) == 1:
            balanced.append((parts[0], len(parts)))
        else:
            balanced.append(None)
    if balanced[0] is not None and balanced[0] == balanced[1] and balanced[0][1] >= 2:
        tags.add("g3")

    for one, other in ((0, 1), (1, 0)):
        H1, H2 = subs[one], subs[other]
        if H1.n == 1 and H2.n >= 2:
            spec = eigh(laplacian(H2))
            t = round(float(spec.values[H2.n - 2]))
            if 2 <= t <= n - 3 and q_class_check(H2, t, spec):
                tags.add("g1")
        if H1.n >= 2 and is_complete(H1) and H2.n >= 2:
            t = H1.n
            if 2 * t <= n and t >= 2 and q_class_check(H2, t):
                tags.add("g2")
    return tags


def _is_star(G: Graph) -> bool:
    parts = is_complete_multipartite(G)
    return parts is not None and len(parts) == 2 and parts[1] == 1


def equality_family(bound: str, G: Graph, k: int) -> tuple[bool, str]:
    """Does G belong to the characterized equality family of ``bound`` at k?

    Returns (member, detail).  Graphs with isolated vertices are outside
    every characterization (the bounds' standing assumption).
    """
    if G.has_isolated_vertex():
        return False, "isolated vertex"
    if bound == "adj1":
        if k != 1:
            return False, "characterized only at k=1"
        parts = is_complete_multipartite(G)
        if parts is None:
            return False, "not complete multipartite"
        cls = _multipartite_class(parts)
        if cls is None:
            return False, f"unbalanced multipartite {parts}"
        return True, f"{cls[0]} {parts}"
    if bound == "adj2":
        if k != 2:
            return False, "characterized only at k=2"
        comps = components(G)
        if len(comps) != 2:
            return False, f"{len(comps)} components"
        classes = []
        for c in comps:
            parts = is_complete_multipartite(induced_subgraph(G, c))
            if parts is None:
                return False, "component not complete multipartite"
            cls = _multipartite_class(parts)
            if cls is None:
                return False, "unbalanced multipartite component"
            classes.append(cls)
        a, b = classes
        if a[0] == "bipartite" and b[0] == "bipartite" and a[1] == b[1]:
            return True, f"two bipartite components, equal products {a[1]}"
        if a[0] == "balanced" and a == b:
            return True, f"two identical balanced components t={a[1]}, p={a[2]}"
        return False, f"mismatched components {a} vs {b}"
    if bound == "inertia":
        if k != 1:
            return False, "characterized only at k=1"
        parts = is_complete_multipartite(G)
        if parts is None or len(set(parts)) != 1:
            return False, "not balanced multipartite"
        return True, f"balanced multipartite {parts}"
    if bound == "lap1":
        if k != 1:
            return False, "characterized only at k=1"
        parts = is_complete_multipartite(G)
        if parts is not None and len(parts) == 2 and parts[0] == parts[1]:
            return True, f"balanced complete bipartite {parts}"
        return False, "not a balanced complete bipartite graph"
    if bound == "lap2":
        if is_complete(G):
            return True, "complete"
        if k != 1:
            return False, "characterized only at k=1 (besides complete graphs)"
        if _is_star(G):
            return True, "star"
        tags = g_family_membership(G)
        if tags:
            return True, "shifted-bound family " + "+".join(sorted(tags))
        return False, "not complete/star/shifted-bound family"
    return False, f"no equality characterization for {bound!r}"


def lap2_equality_route(G: Graph, lap_spectrum: Spectrum | None = None) -> str | None:
    """Which spectral shape realizes a shifted-bound equality witness.

    "uniform": L + J is a multiple of the identity (complete graphs);
    "three-distinct": mu_1 = n with one interior value below 2m/n + 1;
    "four-distinct": mu_1 = n with mu_2 = 2m/n + 1 exactly.
    """
    if is_complete(G):
        return "uniform"
    if lap_spectrum is None:
        lap_spectrum = eigh(laplacian(G))
    n, m = G.n, G.m
    eps = max(lap_spectrum.tol, 1e-9)
    center = 2 * m / n + 1
    clusters = distinct_values(lap_spectrum)
    values = lap_spectrum.values
    if abs(values[0] - n) > eps:
        return None
    if len(clusters) == 3 and abs(values[1] - values[n - 2]) <= eps and values[1] < center - eps:
        return "three-distinct"
    if len(clusters) == 4 and abs(values[1] - center) <= eps:
        return "four-distinct"
    return None


@dataclass(frozen=True)
class WitnessRecord:
    graph6: str
    slack: float
    in_family: bool
    detail: str


@dataclass(frozen=True)
class EqualityScanResult:
    bound: str
    k: int
    witnesses: list[WitnessRecord]
    missed_family: list[str]

    @property
    def bidirectional(self) -> bool:
        return not self.missed_family and all(w.in_family for w in self.witnesses)


def equality_witness_scan(
    corpus, bound: str, k: int, tol: float = EQUALITY_TOL
) -> EqualityScanResult:
    """Find every corpus graph attaining ``bound`` at ``k`` and cross-check the
    characterized family in both directions.

    Graphs with isolated vertices are skipped (outside the standing
    assumption of the graph bounds).
    """
    witnesses: list[WitnessRecord] = []
    missed: list[str] = []
    for G in corpus:
        if G.has_isolated_vertex():
            continue
        rep = evaluate_bound(G, bound, k)
        attained = rep.applicable and rep.slack is not None and abs(rep.slack) <= tol
        member, detail = equality_family(bound, G, k)
        if attained:
            witnesses.append(
                WitnessRecord(graph6=rep.graph6, slack=rep.slack, in_family=member, detail=detail)
            )
        elif member:
            missed.append(rep.graph6)
    return EqualityScanResult(bound=bound, k=k, witnesses=witnesses, missed_family=missed)
