"""Recognition of near-extremal structure and closeness to the two
Dirac-extremal families.

A graph with minimum degree (1/2+alpha)n is eta-extremal when some
disjoint pair (A, B) satisfies

  (E1)  |A| = (1/2 - sqrt(alpha+/2) +- eta) n
  (E2)  |B| = (1/2 + sqrt(alpha+/2) +- eta) n
  (E3)  e(A,B) > (1-eta) |A||B|
  (E4)  e(B)  < (alpha+ + sqrt(alpha+/2) + eta) n |B| / 2

with alpha+ = max(alpha, 0); alpha is always derived from the actual
minimum degree as an exact rational.  All four comparisons are decided
exactly by squaring out the irrational thresholds.  Closeness to
K_{n/2,n/2} (resp. two disjoint half cliques) asks for a half-sized A
with e(A) (resp. e(A, complement)) at most eps*n^2.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

import numpy as np

from .core import Graph, Partition, iter_bits, mask_of, set_of
from .errors import InputError, InternalError
from .exactcmp import cmp_sqrt, cmp_sqrt_sum
from .expanders import (
    EXACT_EXPANDER_MAX_N,
    ExpanderVerdict,
    RobustParams,
    is_robust_expander_exact,
    refute_robust_expander_mc,
)

EXACT_WITNESS_MAX_N = 14
EXACT_CLOSENESS_MAX_N = 24


def alpha_of(g: Graph) -> Fraction:
    """alpha with min-degree delta = (1/2 + alpha) n, exactly."""
    if g.n == 0:
        raise InputError("alpha undefined for the empty graph")
    return Fraction(g.min_degree(), g.n) - Fraction(1, 2)


@dataclass(frozen=True)
class ExtremalityReport:
    eta: Fraction
    alpha: Fraction
    partition: Partition | None
    e1: bool
    e2: bool
    e3: bool
    e4: bool
    mode: str  # "pair" | "exact" | "heuristic"
    quantities: dict

    @property
    def extremal(self) -> bool:
        return self.e1 and self.e2 and self.e3 and self.e4


def _pair_counts(g: Graph, amask: int, bmask: int) -> tuple[int, int, int, int]:
    size_a = amask.bit_count()
    size_b = bmask.bit_count()
    e_ab = 0
    e_b2 = 0
    for v in iter_bits(amask):
        e_ab += (g.adj[v] & bmask).bit_count()
    for v in iter_bits(bmask):
        e_b2 += (g.adj[v] & bmask).bit_count()
    return size_a, size_b, e_ab, e_b2 // 2


def _conditions(
    g: Graph, eta: Fraction, amask: int, bmask: int
) -> tuple[bool, bool, bool, bool, dict]:
    n = g.n
    alpha = alpha_of(g)
    ap = max(alpha, Fraction(0))
    size_a, size_b, e_ab, e_b = _pair_counts(g, amask, bmask)
    sq = ap / 2 * n * n  # (sqrt(alpha+/2) * n)^2
    half = Fraction(1, 2)
    e1 = (
        cmp_sqrt((half - eta) * n - size_a, sq) <= 0
        and cmp_sqrt((half + eta) * n - size_a, sq) >= 0
    )
    e2 = (
        cmp_sqrt(size_b - (half - eta) * n, sq) >= 0
        and cmp_sqrt(size_b - (half + eta) * n, sq) <= 0
    )
    e3 = Fraction(e_ab) > (1 - eta) * size_a * size_b
    q4 = Fraction(e_b) - (ap + eta) * n * size_b / 2
    a4 = ap / 2 * (Fraction(n) * size_b / 2) ** 2
    e4 = cmp_sqrt(q4, a4) < 0
    quantities = {
        "size_a": size_a,
        "size_b": size_b,
        "e_ab": e_ab,
        "e_b": e_b,
        "uncovered": n - size_a - size_b,
    }
    if eta >= 1:
        quantities["degenerate_eta"] = True
    return e1, e2, e3, e4, quantities


def check_eta_extremal_pair(
    g: Graph, eta: Fraction | float, part: Partition
) -> ExtremalityReport:
    """Evaluate (E1)-(E4) for an explicit disjoint pair, exactly."""
    eta = Fraction(eta)
    amask = mask_of(part.a, g.n)
    bmask = mask_of(part.b, g.n)
    if amask & bmask:
        raise InputError("A and B overlap")
    e1, e2, e3, e4, quantities = _conditions(g, eta, amask, bmask)
    report = ExtremalityReport(
        eta=eta,
        alpha=alpha_of(g),
        partition=part,
        e1=e1,
        e2=e2,
        e3=e3,
        e4=e4,
        mode="pair",
        quantities=quantities,
    )
    _assert_e5(g, eta, report)
    return report


def _assert_e5(g: Graph, eta: Fraction, report: ExtremalityReport) -> None:
    # (E1) and (E2) force n - |A u B| <= 2 eta n; violation means a bug
    if report.extremal:
        uncovered = report.quantities["uncovered"]
        if Fraction(uncovered) > 2 * eta * g.n:
            raise InternalError("positive report violates the coverage slack bound")


# ---------------------------------------------------------------------------
# Witness search
# ---------------------------------------------------------------------------

def _size_windows(g: Graph, eta: Fraction) -> tuple[int, int, int, int]:
    """Integer ranges [lo_a, hi_a], [lo_b, hi_b] implied by E1/E2."""
    n = g.n
    alpha = alpha_of(g)
    ap = max(alpha, Fraction(0))
    sq = ap / 2 * n * n
    half = Fraction(1, 2)

    def sat_a(k: int) -> bool:
        return (
            cmp_sqrt((half - eta) * n - k, sq) <= 0
            and cmp_sqrt((half + eta) * n - k, sq) >= 0
        )

    def sat_b(k: int) -> bool:
        return (
            cmp_sqrt(k - (half - eta) * n, sq) >= 0
            and cmp_sqrt(k - (half + eta) * n, sq) <= 0
        )

    a_ok = [k for k in range(n + 1) if sat_a(k)]
    b_ok = [k for k in range(n + 1) if sat_b(k)]
    lo_a, hi_a = (a_ok[0], a_ok[-1]) if a_ok else (1, 0)
    lo_b, hi_b = (b_ok[0], b_ok[-1]) if b_ok else (1, 0)
    return lo_a, hi_a, lo_b, hi_b


def find_eta_extremal_witness(
    g: Graph,
    eta: Fraction | float,
    seed: int = 0,
    restarts: int = 20,
) -> ExtremalityReport:
    """Search for a pair (A, B) witnessing eta-extremality.

    Exact 3^n enumeration with sound pruning for n <= 14 (a negative is
    then definitive); seeded local search above that (a negative only
    means no witness was found).
    """
    eta = Fraction(eta)
    if g.n <= EXACT_WITNESS_MAX_N:
        hit = _exact_witness(g, eta)
        mode = "exact"
    else:
        hit = _heuristic_witness(g, eta, seed, restarts)
        mode = "heuristic"
    if hit is None:
        return ExtremalityReport(
            eta=eta,
            alpha=alpha_of(g),
            partition=None,
            e1=False,
            e2=False,
            e3=False,
            e4=False,
            mode=mode,
            quantities={},
        )
    amask, bmask = hit
    e1, e2, e3, e4, quantities = _conditions(g, eta, amask, bmask)
    if not (e1 and e2 and e3 and e4):
        raise InternalError("witness search returned a non-witness")
    report = ExtremalityReport(
        eta=eta,
        alpha=alpha_of(g),
        partition=Partition(set_of(amask), set_of(bmask)),
        e1=e1,
        e2=e2,
        e3=e3,
        e4=e4,
        mode=mode,
        quantities=quantities,
    )
    _assert_e5(g, eta, report)
    return report


def _exact_witness(g: Graph, eta: Fraction) -> tuple[int, int] | None:
    n = g.n
    lo_a, hi_a, lo_b, hi_b = _size_windows(g, eta)
    if lo_a > hi_a or lo_b > hi_b:
        return None
    alpha = alpha_of(g)
    ap = max(alpha, Fraction(0))
    one_minus_eta = 1 - eta

    # E4 prune helper: e(B) already at least the bound for the largest
    # reachable |B| kills the branch (e(B) and the bound both grow).
    def e4_hopeless(e_b: int, b_max: int) -> bool:
        if b_max == 0:
            return e_b > 0
        q = Fraction(e_b) - (ap + eta) * n * b_max / 2
        a = ap / 2 * (Fraction(n) * b_max / 2) ** 2
        return cmp_sqrt(q, a) >= 0

    adj = g.adj
    m_total = g.m
    found: list[tuple[int, int]] = []

    def dfs(v: int, amask: int, bmask: int, e_ab: int, e_b2: int, e_assigned: int) -> bool:
        # e_b2 = 2*e(B); e_assigned = edges with both endpoints assigned
        size_a = amask.bit_count()
        size_b = bmask.bit_count()
        rem = n - v
        if size_a > hi_a or size_b > hi_b:
            return False
        if size_a + rem < lo_a or size_b + rem < lo_b:
            return False
        if e4_hopeless(e_b2 // 2, min(hi_b, size_b + rem)):
            return False
        # E3 prune: cross edges cannot exceed current + all unassigned-incident
        cross_max = e_ab + (m_total - e_assigned)
        if Fraction(cross_max) <= one_minus_eta * size_a * size_b:
            return False
        if v == n:
            e1, e2, e3, e4, _ = _conditions(g, eta, amask, bmask)
            if e1 and e2 and e3 and e4:
                found.append((amask, bmask))
                return True
            return False
        bit = 1 << v
        row = adj[v]
        inc_assigned = (row & ((1 << v) - 1)).bit_count()
        to_a = (row & amask).bit_count()
        to_b = (row & bmask).bit_count()
        # order: A, B, unassigned
        if dfs(v + 1, amask | bit, bmask, e_ab + to_b, e_b2, e_assigned + inc_assigned):
            return True
        if dfs(v + 1, amask, bmask | bit, e_ab + to_a, e_b2 + 2 * to_b, e_assigned + inc_assigned):
            return True
        return dfs(v + 1, amask, bmask, e_ab, e_b2, e_assigned + inc_assigned)

    return found[0] if dfs(0, 0, 0, 0, 0, 0) else None


def _heuristic_witness(
    g: Graph, eta: Fraction, seed: int, restarts: int
) -> tuple[int, int] | None:
    n = g.n
    lo_a, hi_a, lo_b, hi_b = _size_windows(g, eta)
    if lo_a > hi_a or lo_b > hi_b:
        return None
    rng = random.Random(seed)
    alpha_f = float(alpha_of(g))
    ap_f = max(alpha_f, 0.0)
    sqrt_term = (ap_f / 2) ** 0.5
    eta_f = float(eta)

    def violation(amask: int, bmask: int) -> float:
        size_a, size_b, e_ab, e_b = _pair_counts(g, amask, bmask)
        pen = 0.0
        pen += max(0, lo_a - size_a) + max(0, size_a - hi_a)
        pen += max(0, lo_b - size_b) + max(0, size_b - hi_b)
        target_cross = (1 - eta_f) * size_a * size_b
        pen += max(0.0, (target_cross - e_ab + 1) / max(1, n))
        e4_bound = (ap_f + sqrt_term + eta_f) * n * size_b / 2
        pen += max(0.0, (e_b - e4_bound + 1) / max(1, n))
        return pen

    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    target_a = max(lo_a, min(hi_a, round((0.5 - sqrt_term) * n)))
    starts = [order[:target_a]]
    for _ in range(max(0, restarts - 1)):
        starts.append(rng.sample(range(n), target_a))

    for start in starts:
        amask = mask_of(start, n)
        bmask = ((1 << n) - 1) & ~amask
        # trim B into its window deterministically (drop lowest-degree last)
        while bmask.bit_count() > hi_b:
            drop = min(iter_bits(bmask), key=lambda v: (g.degree(v), v))
            bmask &= ~(1 << drop)
        best = violation(amask, bmask)
        for _ in range(400):
            if best == 0.0:
                break
            improved = False
            verts = list(range(n))
            rng.shuffle(verts)
            for v in verts:
                bit = 1 << v
                in_a, in_b = bool(amask & bit), bool(bmask & bit)
                for na, nb in ((0, 0), (1, 0), (0, 1)):
                    if (na, nb) == (in_a, in_b):
                        continue
                    a2 = (amask & ~bit) | (bit if na else 0)
                    b2 = (bmask & ~bit) | (bit if nb else 0)
                    val = violation(a2, b2)
                    if val < best:
                        amask, bmask, best = a2, b2, val
                        improved = True
                        break
                if improved:
                    break
            if not improved:
                break
        if best == 0.0:
            e1, e2, e3, e4, _ = _conditions(g, eta, amask, bmask)
            if e1 and e2 and e3 and e4:
                return amask, bmask
    return None


# ---------------------------------------------------------------------------
# Almost-regularity audit of G[B]
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AlmostRegularReport:
    """Vertices of B falling below (alpha+sqrt(alpha/2)-3eta)n inner
    degree, vertices exceeding (alpha+sqrt(alpha/2)+2 sqrt(eta))n, and
    whether the exceeder count stays within 2 sqrt(eta) n."""

    lower_violations: tuple[int, ...]
    upper_exceeders: tuple[int, ...]
    exceeders_within_bound: bool
    lower_threshold: float
    upper_threshold: float
    count_bound: float


def almost_regular_audit(
    g: Graph, part: Partition, eta: Fraction | float
) -> AlmostRegularReport:
    """Audit the inner-degree regularity promises for a claimed witness
    pair.  Runs unconditionally and reports; nothing is assumed."""
    eta = Fraction(eta)
    n = g.n
    alpha = alpha_of(g)
    ap = max(alpha, Fraction(0))
    bmask = mask_of(part.b, g.n)
    sq = ap / 2 * n * n
    low_viol = []
    high = []
    for v in iter_bits(bmask):
        d_b = (g.adj[v] & bmask).bit_count()
        # d_B(v) < (alpha + sqrt(alpha+/2) - 3 eta) n ?
        if cmp_sqrt(d_b - (alpha - 3 * eta) * n, sq) < 0:
            low_viol.append(v)
        # d_B(v) > (alpha + sqrt(alpha+/2) + 2 sqrt(eta)) n ?
        if cmp_sqrt_sum(d_b - alpha * n, sq, 4 * eta * n * n) > 0:
            high.append(v)
    within = cmp_sqrt(len(high), 4 * eta * n * n) <= 0
    sqrt_ap2 = float(ap / 2) ** 0.5
    return AlmostRegularReport(
        lower_violations=tuple(low_viol),
        upper_exceeders=tuple(high),
        exceeders_within_bound=within,
        lower_threshold=float((alpha - 3 * eta) * n) + sqrt_ap2 * n,
        upper_threshold=float(alpha * n) + sqrt_ap2 * n + 2 * float(eta) ** 0.5 * n,
        count_bound=2 * float(eta) ** 0.5 * n,
    )


# ---------------------------------------------------------------------------
# Greedy sparsification inside a vertex set
# ---------------------------------------------------------------------------

def greedy_sparsify(g: Graph, inside: Iterable[int]) -> Graph:
    """Repeatedly delete an edge within ``inside`` whose endpoints both
    currently exceed the original minimum degree; the first such edge in
    (u, v) order goes first.  Preserves the minimum degree exactly."""
    amask = mask_of(inside, g.n)
    delta0 = g.min_degree()
    rows = list(g.adj)
    deg = [r.bit_count() for r in rows]
    while True:
        target = None
        for u in iter_bits(amask):
            if deg[u] <= delta0:
                continue
            cand = rows[u] & amask & ~((1 << (u + 1)) - 1)
            for v in iter_bits(cand):
                if deg[v] > delta0:
                    target = (u, v)
                    break
            if target:
                break
        if target is None:
            break
        u, v = target
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        deg[u] -= 1
        deg[v] -= 1
    out = Graph.from_adj(rows)
    if out.n and out.min_degree() != delta0:
        raise InternalError("sparsification changed the minimum degree")
    return out


# ---------------------------------------------------------------------------
# Closeness to the Dirac-extremal families
# ---------------------------------------------------------------------------

CLOSENESS_KINDS = ("bipartite", "two_cliques")


@dataclass(frozen=True)
class ClosenessReport:
    kind: str
    epsilon: Fraction
    a: frozenset[int]
    score: int
    close: bool
    exact: bool  # heuristic scores are only upper bounds on the minimum


def closeness(
    g: Graph,
    kind: str,
    epsilon: Fraction | float,
    seed: int = 0,
    restarts: int = 20,
) -> ClosenessReport:
    """Minimize e(A) (bipartite) or e(A, complement) (two_cliques) over
    all A with |A| = floor(n/2); exact by enumeration up to n = 24,
    seeded swap search with restarts above."""
    if kind not in CLOSENESS_KINDS:
        raise InputError(f"kind must be one of {CLOSENESS_KINDS}, got {kind!r}")
    epsilon = Fraction(epsilon)
    n = g.n
    k = n // 2
    if n == 0:
        return ClosenessReport(kind, epsilon, frozenset(), 0, True, True)
    if n <= EXACT_CLOSENESS_MAX_N:
        best_mask, best_score = _closeness_exact(g, kind, k)
        exact = True
    else:
        best_mask, best_score = _closeness_heuristic(g, kind, k, seed, restarts)
        exact = False
    close = Fraction(best_score) <= epsilon * n * n
    return ClosenessReport(kind, epsilon, set_of(best_mask), best_score, close, exact)


def _closeness_exact(g: Graph, kind: str, k: int) -> tuple[int, int]:
    n = g.n
    adj_mat = np.zeros((n, n), dtype=np.float32)
    for u in range(n):
        for v in iter_bits(g.adj[u]):
            adj_mat[u, v] = 1.0
    degs = np.array(g.degrees(), dtype=np.float32)
    # complement symmetry halves the two-cliques search when n is even
    fix_zero = kind == "two_cliques" and n % 2 == 0 and k >= 1
    if fix_zero:
        combos = (
            (0,) + rest for rest in itertools.combinations(range(1, n), k - 1)
        )
    else:
        combos = itertools.combinations(range(n), k)
    best_mask = -1
    best_score = None
    chunk_size = 65536
    while True:
        chunk = list(itertools.islice(combos, chunk_size))
        if not chunk:
            break
        arr = np.array(chunk, dtype=np.int64)
        rows = np.zeros((len(chunk), n), dtype=np.float32)
        rows[np.arange(len(chunk))[:, None], arr] = 1.0
        counts = rows @ adj_mat
        if kind == "bipartite":
            scores = (rows * counts).sum(axis=1) / 2
        else:
            scores = (rows * (degs - counts)).sum(axis=1)
        idx = int(np.argmin(scores))
        sc = int(round(float(scores[idx])))
        if best_score is None or sc < best_score:
            best_score = sc
            best_mask = mask_of(chunk[idx], n)
    assert best_score is not None
    return best_mask, best_score


def _score_mask(g: Graph, kind: str, amask: int) -> int:
    if kind == "bipartite":
        total = 0
        for v in iter_bits(amask):
            total += (g.adj[v] & amask).bit_count()
        return total // 2
    total = 0
    for v in iter_bits(amask):
        total += (g.adj[v] & ~amask).bit_count()
    return total


def _closeness_heuristic(
    g: Graph, kind: str, k: int, seed: int, restarts: int
) -> tuple[int, int]:
    n = g.n
    rng = random.Random(seed)
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    starts = [order[:k], order[::-1][:k]]
    components = sorted(g.components(), key=lambda c: -c.bit_count())
    greedy: list[int] = []
    for comp in components:
        for v in iter_bits(comp):
            if len(greedy) < k:
                greedy.append(v)
    starts.append(greedy)
    for _ in range(max(0, restarts - len(starts))):
        starts.append(rng.sample(range(n), k))
    best_mask = -1
    best_score: int | None = None
    for start in starts:
        amask = mask_of(start[:k], n)
        score = _score_mask(g, kind, amask)
        improved = True
        while improved:
            improved = False
            ins = list(iter_bits(((1 << n) - 1) & ~amask))
            outs = list(iter_bits(amask))
            rng.shuffle(ins)
            rng.shuffle(outs)
            for u in outs:
                for w in ins:
                    cand = (amask & ~(1 << u)) | (1 << w)
                    sc = _score_mask(g, kind, cand)
                    if sc < score:
                        amask, score = cand, sc
                        improved = True
                        break
                if improved:
                    break
        if best_score is None or score < best_score:
            best_mask, best_score = amask, score
    assert best_score is not None
    return best_mask, best_score


# ---------------------------------------------------------------------------
# The minimum-degree trichotomy
# ---------------------------------------------------------------------------

TRICHOTOMY_LABELS = (
    "close_bipartite",
    "close_cliques",
    "robust_expander",
    "unclassified",
    "hypothesis_violated",
)


@dataclass(frozen=True)
class TrichotomyResult:
    label: str
    bipartite: ClosenessReport | None
    cliques: ClosenessReport | None
    expander: ExpanderVerdict | None


def trichotomy_classify(
    g: Graph,
    kappa: Fraction | float,
    nu: Fraction | float,
    tau: Fraction | float,
    epsilon: Fraction | float,
    seed: int = 0,
    mc_samples: int = 1000,
) -> TrichotomyResult:
    """Order of evaluation: close to the bipartite family, close to the
    two-clique family, robust expansion.  When none is established
    (possible at small n, or when only Monte-Carlo expansion evidence is
    available) the result is explicitly unclassified with all three
    sub-results attached."""
    kappa, nu, tau, epsilon = map(Fraction, (kappa, nu, tau, epsilon))
    if kappa < 0:
        raise InputError(f"kappa must be nonnegative, got {kappa}")
    if Fraction(g.min_degree()) < (Fraction(1, 2) - kappa) * g.n:
        return TrichotomyResult("hypothesis_violated", None, None, None)
    bip = closeness(g, "bipartite", epsilon, seed=seed)
    if bip.close:
        return TrichotomyResult("close_bipartite", bip, None, None)
    cli = closeness(g, "two_cliques", epsilon, seed=seed)
    if cli.close:
        return TrichotomyResult("close_cliques", bip, cli, None)
    params = RobustParams(nu=nu, tau=tau)
    if g.n <= EXACT_EXPANDER_MAX_N:
        verdict = is_robust_expander_exact(g, params)
        if verdict.certified:
            return TrichotomyResult("robust_expander", bip, cli, verdict)
    else:
        verdict = refute_robust_expander_mc(g, params, samples=mc_samples, seed=seed)
    return TrichotomyResult("unclassified", bip, cli, verdict)
