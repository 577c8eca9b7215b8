"""Stability decompositions with machine-checkable certificates.

Three procedures share the same skeleton: either a long-cycle / pancyclic
branch is witnessed exactly, or low-degree vertices are peeled and a small
cut splits the remainder into two dense sides, certified by named
exact-arithmetic inequality checks.  When a step's required object does not
exist on a given instance (possible well below the asymptotic regime the
constants were designed for), the outcome is a first-class "stuck" report
naming the step, the missing object, and the partial state.

Certificates refer to host vertex ids and are reproducible byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from .cycles import cycle_of_length, longest_cycle, spectrum_up_to, validate_cycle
from .errors import (
    HypothesisViolatedError,
    InternalContradictionError,
    MalformedCertificateError,
    NoSuchPathError,
    ParameterError,
)
from .graph import (
    Graph,
    bipartition,
    bits,
    components,
    cut_vertices,
    induced,
    lowest_bit,
    mask_of,
)
from .paths import hamiltonian_path_between
from .reporting import (
    CheckReport,
    Comparison,
    NamedCheck,
    ceil_frac,
    frac_str,
    parse_frac,
    sqrt_bound_comparison,
)

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class DecompositionParams:
    """Procedure parameters; all rationals, compared exactly."""

    alpha: Fraction = Fraction(0)
    beta: Fraction = Fraction(0)
    gamma: Fraction = Fraction(0)
    enforce_paper_range: bool = False

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma"):
            value = Fraction(getattr(self, name))
            object.__setattr__(self, name, value)
            if value < 0:
                raise ParameterError(f"{name} must be nonnegative")

    def validate_range(self, procedure: str, n: int) -> None:
        """Paper-range gate; only active when enforce_paper_range is set."""
        if not self.enforce_paper_range:
            return
        bad = []
        if procedure == "two-parts":
            if not (0 < self.alpha < Fraction(1, 10 ** 5)):
                bad.append("alpha outside (0, 1e-5)")
            if not (0 <= self.beta < Fraction(1, 10 ** 5)):
                bad.append("beta outside [0, 1e-5)")
            if self.alpha > 0 and n < Fraction(1, 2 * self.alpha):
                bad.append("n below 1/(2 alpha)")
        elif procedure == "three-parts":
            if not (0 < self.alpha < Fraction(5, 10 ** 6)):
                bad.append("alpha outside (0, 5e-6)")
            if not (0 <= self.beta <= self.alpha / 25):
                bad.append("beta outside [0, alpha/25]")
            if self.alpha > 0 and n < Fraction(1, self.alpha):
                bad.append("n below 1/alpha")
        elif procedure == "vertex-split":
            if not (0 < self.gamma < Fraction(1, 10 ** 5)):
                bad.append("gamma outside (0, 1e-5)")
        if bad:
            raise ParameterError("; ".join(bad))

    def to_payload(self) -> dict:
        return {
            "alpha": frac_str(self.alpha),
            "beta": frac_str(self.beta),
            "gamma": frac_str(self.gamma),
            "enforce_paper_range": self.enforce_paper_range,
        }

    @staticmethod
    def from_payload(p: dict) -> "DecompositionParams":
        try:
            return DecompositionParams(
                parse_frac(p["alpha"]), parse_frac(p["beta"]), parse_frac(p["gamma"]),
                bool(p["enforce_paper_range"]))
        except KeyError as exc:
            raise MalformedCertificateError(f"parameters missing field {exc}") from exc


@dataclass(frozen=True)
class CycleBranch:
    """Witnessed cycle conclusion: one long cycle, or a full range."""

    claim: str                      # "long-cycle" | "pancyclic-range"
    threshold: Fraction             # required length bound, exact
    required_lengths: tuple[int, ...]
    witnesses: dict[int, tuple[int, ...]]

    kind = "cycle"

    def to_payload(self) -> dict:
        return {
            "kind": self.kind,
            "claim": self.claim,
            "threshold": frac_str(self.threshold),
            "required_lengths": list(self.required_lengths),
            "witnesses": {str(t): list(w) for t, w in sorted(self.witnesses.items())},
        }


@dataclass(frozen=True)
class PartitionBranch:
    """Removed set plus two sides, with the structure claim and checks."""

    removed: tuple[int, ...]
    part1: tuple[int, ...]
    part2: tuple[int, ...]
    structure: str                  # "split" | "bipartite"
    checks: tuple[Comparison, ...]

    kind = "partition"

    def to_payload(self) -> dict:
        return {
            "kind": self.kind,
            "removed": list(self.removed),
            "part1": list(self.part1),
            "part2": list(self.part2),
            "structure": self.structure,
            "checks": [c.to_payload() for c in self.checks],
        }


@dataclass(frozen=True)
class StuckReport:
    """A required object for some step is missing on this instance; data, not a crash."""

    step: str
    missing: str
    partial: dict = field(default_factory=dict)

    kind = "stuck"

    def to_payload(self) -> dict:
        return {
            "kind": self.kind,
            "step": self.step,
            "missing": self.missing,
            "partial": self.partial,
        }


Branch = Union[CycleBranch, PartitionBranch, StuckReport]


@dataclass(frozen=True)
class StabilityCertificate:
    procedure: str
    n: int
    params: DecompositionParams
    hypothesis: Comparison
    branch: Branch
    trace: tuple[str, ...]

    def to_payload(self) -> dict:
        return {
            "procedure": self.procedure,
            "n": self.n,
            "parameters": self.params.to_payload(),
            "hypothesis": self.hypothesis.to_payload(),
            "branch": self.branch.to_payload(),
            "trace": list(self.trace),
        }

    @staticmethod
    def from_payload(p: dict) -> "StabilityCertificate":
        try:
            kind = p["branch"]["kind"]
            if kind == "cycle":
                b = p["branch"]
                branch: Branch = CycleBranch(
                    b["claim"], parse_frac(b["threshold"]),
                    tuple(int(t) for t in b["required_lengths"]),
                    {int(t): tuple(w) for t, w in b["witnesses"].items()})
            elif kind == "partition":
                b = p["branch"]
                branch = PartitionBranch(
                    tuple(b["removed"]), tuple(b["part1"]), tuple(b["part2"]),
                    b["structure"],
                    tuple(Comparison.from_payload(c) for c in b["checks"]))
            elif kind == "stuck":
                b = p["branch"]
                branch = StuckReport(b["step"], b["missing"], dict(b["partial"]))
            else:
                raise MalformedCertificateError(f"unknown branch kind {kind!r}")
            return StabilityCertificate(
                p["procedure"], int(p["n"]),
                DecompositionParams.from_payload(p["parameters"]),
                Comparison.from_payload(p["hypothesis"]),
                branch, tuple(p["trace"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedCertificateError(f"bad certificate payload: {exc}") from exc


# -- shared machinery ---------------------------------------------------


def low_degree_mask(g: Graph, num: int, den: int, within: Optional[int] = None,
                    order_n: Optional[int] = None) -> int:
    """Vertices of ``within`` whose degree inside it is at most (num/den) *
    order_n (defaults: whole graph, original order)."""
    if den <= 0:
        raise ParameterError("denominator must be positive")
    scope = g.full_mask() if within is None else within
    n = g.n if order_n is None else order_n
    out = 0
    for v in bits(scope):
        if den * g.degree_within(v, scope) <= num * n:
            out |= 1 << v
    return out


def peel_low_degree(g: Graph, num: int, den: int) -> tuple[int, Graph]:
    """Single-pass peel: the low-degree vertex set and the induced remainder."""
    mask = low_degree_mask(g, num, den)
    return mask, induced(g, g.full_mask() & ~mask)


def _edges_within(g: Graph, mask: int) -> int:
    return sum((g.adj[v] & mask).bit_count() for v in bits(mask)) // 2


def _min_degree_within(g: Graph, mask: int) -> int:
    return min(((g.adj[v] & mask).bit_count() for v in bits(mask)), default=0)


def _sorted_parts(g: Graph, p1: int, p2: int) -> tuple[int, int]:
    k1 = (p1.bit_count(), lowest_bit(p1) if p1 else -1)
    k2 = (p2.bit_count(), lowest_bit(p2) if p2 else -1)
    return (p1, p2) if k1 <= k2 else (p2, p1)


def _set_payload(g: Graph, mask: int) -> list[int]:
    return sorted(g.host_ids(bits(mask)))


def _label_mask(g: Graph, labels) -> int:
    """Local vertex mask for a collection of host labels."""
    back = {g.label_of(v): v for v in range(g.n)}
    return mask_of(back[v] for v in labels)


def vertex_disjoint_cross_paths(g: Graph, a_mask: int, b_mask: int,
                                limit: int = 2) -> list[list[int]]:
    """Up to ``limit`` vertex-disjoint paths from a_mask to b_mask whose
    interiors avoid both sets (unit vertex capacities, BFS augmentation)."""
    if a_mask & b_mask:
        raise ParameterError("endpoint sets overlap")
    n = g.n
    src, snk = 2 * n, 2 * n + 1
    cap: dict[tuple[int, int], int] = {}
    nbr: dict[int, list[int]] = {}
    orig: set[tuple[int, int]] = set()

    def add(u: int, v: int) -> None:
        orig.add((u, v))
        cap[(u, v)] = cap.get((u, v), 0) + 1
        cap.setdefault((v, u), 0)
        nbr.setdefault(u, []).append(v)
        nbr.setdefault(v, []).append(u)

    for v in range(n):
        add(2 * v, 2 * v + 1)
    for u in range(n):
        for v in bits(g.adj[u]):
            # no transit out of b_mask, no transit into a_mask
            if not (b_mask >> u) & 1 and not (a_mask >> v) & 1:
                add(2 * u + 1, 2 * v)
    for a in bits(a_mask):
        add(src, 2 * a + 1)
    for b in bits(b_mask):
        add(2 * b, snk)

    flow = 0
    while flow < limit:
        parent: dict[int, int] = {src: src}
        queue = [src]
        while queue and snk not in parent:
            nxt = []
            for u in queue:
                for v in nbr.get(u, ()):
                    if v not in parent and cap.get((u, v), 0) > 0:
                        parent[v] = u
                        nxt.append(v)
            queue = nxt
        if snk not in parent:
            break
        v = snk
        while v != src:
            u = parent[v]
            cap[(u, v)] -= 1
            cap[(v, u)] += 1
            v = u
        flow += 1

    # walk saturated original arcs from each used source arc; unit vertex
    # capacities make the walk unique and loop-free
    paths = []
    for a in sorted(bits(a_mask)):
        if (src, 2 * a + 1) in orig and cap[(src, 2 * a + 1)] == 0:
            path = [a]
            node = 2 * a + 1
            while True:
                nxt = None
                for w in nbr.get(node, ()):
                    if (node, w) in orig and cap[(node, w)] == 0:
                        nxt = w
                        break
                if nxt is None or nxt == snk:
                    break
                if nxt % 2 == 0:
                    path.append(nxt // 2)
                    node = nxt + 1  # continue through the internal arc
                else:
                    node = nxt
            paths.append(path)
    return paths


def _density_hypothesis(g: Graph, beta: Fraction) -> Comparison:
    n, e = g.n, g.edge_count()
    return Comparison.make("edge-density", Fraction(e), ">",
                           (Fraction(1, 4) - beta) * n * n,
                           note="edge count above (1/4 - beta) n^2")


def _pancyclic_witnesses(g: Graph, top: int, deadline=None):
    """(witness dict over [3, top] in local ids, missing lengths)."""
    found = spectrum_up_to(g, top, deadline)
    missing = [t for t in range(3, top + 1) if t not in found]
    return found, missing


# -- two-parts procedure ------------------------------------------------


def decompose_two_parts(g: Graph, params: DecompositionParams,
                        deadline=None) -> StabilityCertificate:
    """Long cycle of length >= (1/2 + alpha) n, or a certified split into
    two dense components after removing M = M0 + K + M2."""
    n = g.n
    alpha, beta = params.alpha, params.beta
    params.validate_range("two-parts", n)
    hyp = _density_hypothesis(g, beta)
    if params.enforce_paper_range and not hyp.holds:
        raise HypothesisViolatedError("edge density below (1/4 - beta) n^2")
    trace = [f"order {n}, edges {g.edge_count()}, "
             f"density hypothesis {'holds' if hyp.holds else 'violated'}"]

    def done(branch: Branch) -> StabilityCertificate:
        return StabilityCertificate("two-parts", n, params, hyp, branch, tuple(trace))

    threshold = (HALF + alpha) * n
    c, cyc = longest_cycle(g, deadline)
    trace.append(f"longest cycle {c}, long-cycle threshold {frac_str(threshold)}")
    if c and Fraction(c) >= threshold:
        return done(CycleBranch("long-cycle", threshold, (c,),
                                {c: g.host_ids(cyc)}))

    full = g.full_mask()
    m0 = low_degree_mask(g, 9, 40)
    r0 = full & ~m0
    trace.append(f"first peel at 9n/40 removed {m0.bit_count()} vertices")
    if not r0:
        return done(StuckReport("first-peel", "nonempty remainder after the 9n/40 peel",
                                {"peeled": _set_payload(g, m0)}))

    comps = components(g, within=r0)
    if len(comps) > 1:
        k_set = 0
        trace.append("remainder already disconnected, no cut vertex needed")
    else:
        arts = cut_vertices(g, within=r0)
        if arts:
            k_set = 1 << lowest_bit(arts)
            trace.append(f"cut vertex {g.label_of(lowest_bit(arts))} removed")
        else:
            sub = induced(g, r0)
            n1, e1 = sub.n, sub.edge_count()
            c1, _ = longest_cycle(sub, deadline)
            if c1 == n1:
                corwo = Comparison("remainder-long-cycle-squared", Fraction(0),
                                   "<", Fraction(1), True,
                                   note="remainder hamiltonian, holds vacuously")
            elif 2 * n1 - c < 0:
                corwo = Comparison("remainder-long-cycle-squared",
                                   Fraction(2 * n1 - c), "<", Fraction(0), True,
                                   note="longest cycle already beyond twice the "
                                        "remainder order, holds by sign")
            else:
                corwo = Comparison.make(
                    "remainder-long-cycle-squared", (2 * n1 - c) ** 2, "<",
                    4 * (n1 * n1 - 2 * e1),
                    note="squared form of c(G) > 2n'(1 - sqrt(1 - 2e'/n'^2)) "
                         "on the two-connected remainder; both sides nonnegative")
            return done(StuckReport(
                "two-connected-remainder",
                "a cut set of size at most 1 (remainder is 2-connected)",
                {"remainder": _set_payload(g, r0),
                 "remainder_longest_cycle": c1,
                 "corollary_check": corwo.to_payload()}))

    gprime = r0 & ~k_set
    comps = components(g, within=gprime)
    sizes = [comp.bit_count() for comp in comps]
    trace.append(f"split component sizes {sizes}")
    small = [comp for comp in comps if 3 * comp.bit_count() <= n]
    if small:
        return done(StuckReport(
            "small-component", "all split components of order above n/3",
            {"component_sizes": sizes,
             "small_components": [_set_payload(g, comp) for comp in small]}))
    h1, h2 = _sorted_parts(g, comps[0], comps[1])

    union = h1 | h2
    m2 = low_degree_mask(g, 9, 20, within=union, order_n=n)
    g1m, g2m = h1 & ~m2, h2 & ~m2
    trace.append(f"second peel at 9n/20 removed {m2.bit_count()} vertices")
    if not g1m or not g2m:
        return done(StuckReport(
            "second-peel", "nonempty parts after the 9n/20 peel",
            {"peeled": _set_payload(g, m2),
             "part_sizes": [g1m.bit_count(), g2m.bit_count()]}))
    g1m, g2m = _sorted_parts(g, g1m, g2m)
    removed = m0 | k_set | m2

    coeff = alpha + 2 * beta
    checks = (
        Comparison.make("removed-size", removed.bit_count(), "<", 840 * coeff * n),
        Comparison.make("part1-size-lower", g1m.bit_count(), ">",
                        (HALF - 840 * coeff) * n),
        Comparison.make("part1-size-lower-as-printed", g1m.bit_count(), ">",
                        (HALF - 840 * coeff * beta) * n,
                        note="informational: the stated bound carries an extra "
                             "beta factor; the derived bound is part1-size-lower"),
        Comparison.make("part2-size-upper", g2m.bit_count(), "<",
                        (HALF + 20 * coeff) * n),
        Comparison.make("part1-min-degree", _min_degree_within(g, g1m), ">=",
                        Fraction(3 * n, 7)),
        Comparison.make("part2-min-degree", _min_degree_within(g, g2m), ">=",
                        Fraction(3 * n, 7)),
        Comparison.make("part1-components", len(components(g, within=g1m)), "==", 1),
        Comparison.make("part2-components", len(components(g, within=g2m)), "==", 1),
    )
    return done(PartitionBranch(
        tuple(_set_payload(g, removed)), tuple(_set_payload(g, g1m)),
        tuple(_set_payload(g, g2m)), "split", checks))


# -- vertex-split procedure ----------------------------------------------


def decompose_vertex_split(g: Graph, gamma, enforce_paper_range: bool = False,
                           deadline=None) -> StabilityCertificate:
    """Every cycle length up to ceil((1/2 + gamma) n), or one vertex whose
    removal splits the graph into two near-half sides."""
    gamma = Fraction(gamma)
    params = DecompositionParams(alpha=gamma, beta=Fraction(0), gamma=gamma,
                                 enforce_paper_range=enforce_paper_range)
    n = g.n
    params.validate_range("vertex-split", n)
    e = g.edge_count()
    hyp = Comparison.make("edge-density", 4 * e, ">", n * n,
                          note="edge count above n^2 / 4")
    if enforce_paper_range and not hyp.holds:
        raise HypothesisViolatedError("edge density below n^2 / 4")
    trace = [f"order {n}, edges {e}, "
             f"density hypothesis {'holds' if hyp.holds else 'violated'}"]

    def done(branch: Branch) -> StabilityCertificate:
        return StabilityCertificate("vertex-split", n, params, hyp, branch,
                                    tuple(trace))

    threshold = (HALF + gamma) * n
    top = ceil_frac(threshold)
    if top <= n:
        witnesses, missing = _pancyclic_witnesses(g, top, deadline)
        trace.append(f"pancyclicity check up to {top}: "
                     f"{'complete' if not missing else f'missing {missing}'}")
        if not missing:
            return done(CycleBranch(
                "pancyclic-range", threshold, tuple(range(3, top + 1)),
                {t: g.host_ids(w) for t, w in witnesses.items()}))
    else:
        trace.append(f"required top {top} exceeds the order, cycle branch impossible")

    inner = decompose_two_parts(g, DecompositionParams(alpha=gamma), deadline)
    trace.extend("two-parts: " + line for line in inner.trace)

    if isinstance(inner.branch, CycleBranch):
        if hyp.holds:
            raise InternalContradictionError(
                "long cycle at threshold although a required length is missing "
                "in a graph denser than n^2/4")
        return done(StuckReport(
            "inner-long-cycle",
            "a conclusion branch applicable below the density hypothesis",
            {"inner": inner.branch.to_payload()}))
    if isinstance(inner.branch, StuckReport):
        return done(StuckReport("two-parts:" + inner.branch.step,
                                inner.branch.missing, inner.branch.partial))

    part1 = _label_mask(g, inner.branch.part1)
    part2 = _label_mask(g, inner.branch.part2)
    removed_inner = _label_mask(g, inner.branch.removed)
    cross = vertex_disjoint_cross_paths(g, part1, part2, limit=2)
    trace.append(f"disjoint cross paths found: {len(cross)}")

    if len(cross) >= 2:
        partial = {"cross_paths": [list(map(g.label_of, p)) for p in cross[:2]]}
        sub1 = induced(g, part1)
        sub2 = induced(g, part2)
        verts1 = list(bits(part1))
        verts2 = list(bits(part2))
        pos1 = {v: i for i, v in enumerate(verts1)}
        pos2 = {v: i for i, v in enumerate(verts2)}
        (u1, v1), (u2, v2) = (cross[0][0], cross[0][-1]), (cross[1][0], cross[1][-1])
        try:
            q1 = hamiltonian_path_between(sub1, pos1[u1], pos1[u2], deadline).path
            q2 = hamiltonian_path_between(sub2, pos2[v2], pos2[v1], deadline).path
            cycle = [verts1[i] for i in q1.vertices] + cross[1][1:-1] + \
                    [verts2[i] for i in q2.vertices] + cross[0][1:-1][::-1]
            partial["glued_cycle"] = list(map(g.label_of, cycle))
            partial["glued_cycle_length"] = len(cycle)
        except NoSuchPathError:
            partial["glued_cycle"] = None
            partial["note"] = "spanning path inside a part does not exist at this order"
        return done(StuckReport(
            "single-separator",
            "a single vertex separating the two parts (two disjoint cross paths exist)",
            partial))

    if len(cross) == 0:
        pool = removed_inner if removed_inner else g.full_mask()
        sep = lowest_bit(pool)
        trace.append(f"parts disconnected in the whole graph, "
                     f"separator defaults to vertex {g.label_of(sep)}")
    else:
        sep = None
        for u in sorted(cross[0]):  # min-label candidate first
            a2, b2 = part1 & ~(1 << u), part2 & ~(1 << u)
            if not _cross_paths_avoiding(g, a2, b2, u):
                sep = u
                break
        if sep is None:
            raise InternalContradictionError(
                "no single vertex meets every cross path although at most one "
                "disjoint cross path exists")
        trace.append(f"separating vertex {g.label_of(sep)}")

    sep_bit = 1 << sep
    rest = g.full_mask() & ~sep_bit
    comps = components(g, within=rest)
    h1 = 0
    seed = part1 & ~sep_bit
    for comp in comps:
        if comp & seed:
            h1 |= comp
    h2 = rest & ~h1
    if not h1 or not h2:
        return done(StuckReport(
            "vertex-split-parts", "two nonempty sides after removing the separator",
            {"separator": g.label_of(sep),
             "side_sizes": [h1.bit_count(), h2.bit_count()]}))
    h1, h2 = _sorted_parts(g, h1, h2)
    checks = (
        Comparison.make("part1-size-lower", h1.bit_count(), ">",
                        (HALF - 900 * gamma) * n),
        Comparison.make("part2-size-upper", h2.bit_count(), "<",
                        (HALF + 900 * gamma) * n),
        Comparison.make("part1-size-upper-tight", h1.bit_count(), "<",
                        (HALF + 840 * gamma) * n,
                        note="informational tighter bound from the derivation"),
        Comparison.make("part2-size-lower-tight", h2.bit_count(), ">",
                        (HALF - 900 * gamma) * n,
                        note="informational tighter bound from the derivation"),
    )
    return done(PartitionBranch(
        (g.label_of(sep),), tuple(_set_payload(g, h1)), tuple(_set_payload(g, h2)),
        "split", checks))


def _cross_paths_avoiding(g: Graph, a_mask: int, b_mask: int, avoid: int):
    """Cross paths in g minus one vertex, implemented by masking it out."""
    adj = [g.adj[v] & ~(1 << avoid) if v != avoid else 0 for v in range(g.n)]
    masked = Graph(g.n, adj, g.labels)
    return vertex_disjoint_cross_paths(masked, a_mask, b_mask, limit=1)


# -- three-parts procedure -----------------------------------------------


def decompose_three_parts(g: Graph, params: DecompositionParams,
                          deadline=None) -> StabilityCertificate:
    """Every cycle length up to ceil((1/2 + alpha) n), or a partition
    V0 + V1 + V2 where the remainder is split or complete bipartite."""
    n = g.n
    alpha, beta = params.alpha, params.beta
    params.validate_range("three-parts", n)
    hyp = _density_hypothesis(g, beta)
    if params.enforce_paper_range and not hyp.holds:
        raise HypothesisViolatedError("edge density below (1/4 - beta) n^2")
    trace = [f"order {n}, edges {g.edge_count()}, "
             f"density hypothesis {'holds' if hyp.holds else 'violated'}"]

    def done(branch: Branch) -> StabilityCertificate:
        return StabilityCertificate("three-parts", n, params, hyp, branch,
                                    tuple(trace))

    top = ceil_frac((HALF + alpha) * n)
    full = g.full_mask()
    m = low_degree_mask(g, 9, 20)
    gate = Comparison.make("peel-size", m.bit_count(), "<", 20 * (alpha + 2 * beta) * n)
    trace.append(f"peel at 9n/20 removed {m.bit_count()} vertices, "
                 f"small-peel gate {'holds' if gate.holds else 'fails'}")

    if not gate.holds:
        want = ceil_frac(24 * beta * n)
        m_verts = sorted(bits(m))
        if want > len(m_verts):
            return done(StuckReport(
                "peel-majority-selection",
                f"a subset of {want} peeled vertices (only {len(m_verts)} exist)",
                {"peeled": _set_payload(g, m)}))
        m0 = mask_of(m_verts[:want])
        keep = full & ~m0
        n1 = keep.bit_count()
        e1 = _edges_within(g, keep)
        emin = Comparison.make("majority-remainder-density", 4 * e1, ">", n1 * n1,
                               note="remainder denser than a quarter square")
        trace.append(f"selected {want} lowest-label peeled vertices, "
                     f"density gate {'holds' if emin.holds else 'fails'}")
        if not emin.holds:
            return done(StuckReport(
                "peel-majority-density",
                "remainder density above (n - |M0|)^2 / 4",
                {"selected": _set_payload(g, m0), "check": emin.to_payload()}))
        sub = induced(g, keep)
        top2 = ceil_frac((HALF + 2 * alpha) * n1)
        wit2, missing2 = _pancyclic_witnesses(sub, min(top2, sub.n), deadline)
        if not missing2 and top2 <= sub.n:
            witnesses = {t: sub.host_ids(w) for t, w in wit2.items()}
            ok = True
            for t in range(min(top2, sub.n) + 1, top + 1):
                w = cycle_of_length(g, t, deadline) if t <= g.n else None
                if w is None:
                    ok = False
                    break
                witnesses[t] = g.host_ids(w)
            if ok and top >= 3:
                trace.append(f"remainder pancyclic up to {top2}, conclusion verified")
                return done(CycleBranch(
                    "pancyclic-range", (HALF + alpha) * n,
                    tuple(range(3, top + 1)),
                    {t: w for t, w in witnesses.items() if 3 <= t <= top}))
            return done(StuckReport(
                "peel-majority-extension",
                f"cycles of every length up to {top} in the whole graph",
                {"verified_up_to": min(top2, sub.n)}))
        inner = decompose_two_parts(
            sub, DecompositionParams(alpha=2 * alpha), deadline)
        trace.extend("two-parts: " + line for line in inner.trace)
        if isinstance(inner.branch, CycleBranch):
            raise InternalContradictionError(
                "long cycle at threshold although a required length is missing "
                "in a remainder denser than a quarter square")
        if isinstance(inner.branch, StuckReport):
            return done(StuckReport("two-parts:" + inner.branch.step,
                                    inner.branch.missing, inner.branch.partial))
        v0 = sorted(set(_set_payload(g, m0)) | set(inner.branch.removed))
        part1, part2 = inner.branch.part1, inner.branch.part2
        checks = _three_part_checks(g, params, _label_mask(g, v0),
                                    _label_mask(g, part1), _label_mask(g, part2))
        return done(PartitionBranch(tuple(v0), part1, part2, "split", checks))

    g0 = full & ~m
    if not g0:
        return done(StuckReport("peel", "nonempty remainder after the 9n/20 peel",
                                {"peeled": _set_payload(g, m)}))

    bip = bipartition(g, within=g0)
    if bip is not None:
        v1, v2 = bip
        trace.append("remainder bipartite, complete-bipartite structure claimed")
        checks = _three_part_checks(g, params, m, v1, v2)
        return done(PartitionBranch(
            tuple(_set_payload(g, m)), tuple(_set_payload(g, v1)),
            tuple(_set_payload(g, v2)), "bipartite", checks))

    comps = components(g, within=g0)
    arts = cut_vertices(g, within=g0) if len(comps) == 1 else 0
    if len(comps) > 1 or arts:
        k_set = 0 if len(comps) > 1 else (1 << lowest_bit(arts))
        if k_set:
            trace.append(f"cut vertex {g.label_of(lowest_bit(k_set))} removed "
                         f"from the remainder")
        else:
            trace.append("remainder disconnected, no cut vertex needed")
        g0k = g0 & ~k_set
        comps = components(g, within=g0k)
        if len(comps) != 2:
            return done(StuckReport(
                "low-connectivity-split", "exactly two components after the cut",
                {"component_sizes": [c.bit_count() for c in comps]}))
        v1, v2 = _sorted_parts(g, comps[0], comps[1])
        gate2 = sqrt_bound_comparison(
            "large-side-gate", Fraction(2 * v2.bit_count() - n),
            100 * (alpha + 2 * beta) * n * n, ">=",
            note="side at least (1/2 + 5 sqrt(alpha + 2 beta)) n;")
        trace.append(f"large-side gate {'holds' if gate2.holds else 'fails'}")
        if gate2.holds:
            witnesses, missing = _pancyclic_witnesses(g, top, deadline)
            if not missing and top <= n:
                return done(CycleBranch(
                    "pancyclic-range", (HALF + alpha) * n,
                    tuple(range(3, top + 1)),
                    {t: g.host_ids(w) for t, w in witnesses.items()}))
            return done(StuckReport(
                "large-side-pancyclicity",
                f"cycles of every length up to {top}",
                {"missing": missing, "gate": gate2.to_payload()}))
        v0 = m | k_set
        checks = _three_part_checks(g, params, v0, v1, v2) + (gate2,)
        return done(PartitionBranch(
            tuple(_set_payload(g, v0)), tuple(_set_payload(g, v1)),
            tuple(_set_payload(g, v2)), "split", checks))

    trace.append("remainder two-connected and nonbipartite, cycle branch claimed")
    witnesses, missing = _pancyclic_witnesses(g, top, deadline)
    if not missing and top <= n:
        return done(CycleBranch(
            "pancyclic-range", (HALF + alpha) * n, tuple(range(3, top + 1)),
            {t: g.host_ids(w) for t, w in witnesses.items()}))
    return done(StuckReport(
        "dense-remainder-pancyclicity", f"cycles of every length up to {top}",
        {"missing": missing}))


def _three_part_checks(g: Graph, params: DecompositionParams, v0: int, v1: int,
                       v2: int) -> tuple[Comparison, ...]:
    n = g.n
    alpha, beta = params.alpha, params.beta
    rest = v1 | v2
    return (
        Comparison.make("removed-size", v0.bit_count(), "<", 2000 * alpha * n),
        sqrt_bound_comparison(
            "class-balance-lower", Fraction(n - 2 * v1.bit_count()),
            400 * (alpha + beta) * n * n, "<",
            note="smaller side above (1/2 - 10 sqrt(alpha + beta)) n;"),
        sqrt_bound_comparison(
            "class-balance-upper", Fraction(2 * v2.bit_count() - n),
            400 * (alpha + beta) * n * n, "<",
            note="larger side below (1/2 + 10 sqrt(alpha + beta)) n;"),
        Comparison.make("min-degree-after-removal", _min_degree_within(g, rest),
                        ">=", Fraction(2 * n, 5)),
    )


# -- verification ---------------------------------------------------------


def verify_stability_certificate(g: Graph, cert: StabilityCertificate,
                                 params: Optional[DecompositionParams] = None,
                                 deadline=None) -> CheckReport:
    """Re-derive every claim of a certificate from the graph alone.

    Structural claims (partition, structure flag, witness validity) must
    hold; stored inequality checks must re-evaluate to their stored
    verdicts with the stored quantities matching recomputed ones.
    """
    params = params or cert.params
    checks: list[NamedCheck] = []
    label_to_local = {g.label_of(v): v for v in range(g.n)}

    def named(name: str, holds: bool, detail: str = "") -> None:
        checks.append(NamedCheck(name, holds, detail))

    named("order-matches", cert.n == g.n,
          f"certificate order {cert.n}, graph order {g.n}")

    e = g.edge_count()
    n = g.n
    if cert.procedure == "vertex-split":
        expected_hyp = (Fraction(4 * e), Fraction(n * n))
    else:
        expected_hyp = (Fraction(e), (Fraction(1, 4) - params.beta) * n * n)
    hyp_ok = (cert.hypothesis.lhs == expected_hyp[0]
              and cert.hypothesis.rhs == expected_hyp[1]
              and cert.hypothesis.holds == cert.hypothesis.reevaluate())
    named("hypothesis-consistent", hyp_ok,
          "stored density comparison matches the graph and re-evaluates")

    branch = cert.branch
    if isinstance(branch, StuckReport):
        raise MalformedCertificateError(
            "stuck outcome carries no verifiable certificate")

    if isinstance(branch, CycleBranch):
        _verify_cycle_branch(g, cert, branch, params, label_to_local, named)
    else:
        _verify_partition_branch(g, cert, branch, params, label_to_local, named)
    return CheckReport(tuple(checks))


def _expected_threshold(cert: StabilityCertificate,
                        params: DecompositionParams) -> Fraction:
    if cert.procedure == "vertex-split":
        return (HALF + params.gamma) * cert.n
    return (HALF + params.alpha) * cert.n


def _verify_cycle_branch(g, cert, branch, params, label_to_local, named) -> None:
    named("threshold-consistent",
          branch.threshold == _expected_threshold(cert, params),
          f"threshold {frac_str(branch.threshold)}")
    if branch.claim == "long-cycle":
        lengths_ok = len(branch.required_lengths) == 1
        named("required-lengths-shape", lengths_ok, "single long cycle expected")
        if not lengths_ok:
            return
        t = branch.required_lengths[0]
        named("length-meets-threshold", Fraction(t) >= branch.threshold,
              f"cycle length {t}")
        w = branch.witnesses.get(t)
        ok = w is not None and _witness_valid(g, w, t, label_to_local)
        named("witness-valid", ok, f"length {t}")
        return
    if branch.claim == "pancyclic-range":
        top = ceil_frac(branch.threshold)
        named("required-lengths-shape",
              branch.required_lengths == tuple(range(3, top + 1)),
              f"expected every length in [3, {top}]")
        for t in branch.required_lengths:
            w = branch.witnesses.get(t)
            ok = w is not None and _witness_valid(g, w, t, label_to_local)
            named(f"witness-valid-{t}", ok, f"length {t}")
        return
    named("claim-known", False, f"unknown claim {branch.claim!r}")


def _witness_valid(g, w, t, label_to_local) -> bool:
    try:
        local = [label_to_local[v] for v in w]
    except KeyError:
        return False
    return validate_cycle(g, local, t)


_PART_QUANTITY = {
    "removed-size": "removed_count",
    "peel-size": "removed_count",
    "part1-size-lower": "part1_count",
    "part1-size-lower-as-printed": "part1_count",
    "part1-size-upper-tight": "part1_count",
    "part2-size-upper": "part2_count",
    "part2-size-lower-tight": "part2_count",
    "part1-min-degree": "part1_mindeg",
    "part2-min-degree": "part2_mindeg",
    "part1-components": "part1_comps",
    "part2-components": "part2_comps",
    "class-balance-lower": "balance_lower",
    "class-balance-upper": "balance_upper",
    "large-side-gate": "balance_upper",
    "min-degree-after-removal": "rest_mindeg",
}


def _expected_rhs(procedure: str, name: str, params: DecompositionParams,
                  n: int) -> Optional[Fraction]:
    """Re-derive a stored check's bound from the parameters alone."""
    a, b, g = params.alpha, params.beta, params.gamma
    if procedure == "two-parts":
        coeff = a + 2 * b
        table = {
            "removed-size": 840 * coeff * n,
            "part1-size-lower": (HALF - 840 * coeff) * n,
            "part1-size-lower-as-printed": (HALF - 840 * coeff * b) * n,
            "part2-size-upper": (HALF + 20 * coeff) * n,
            "part1-min-degree": Fraction(3 * n, 7),
            "part2-min-degree": Fraction(3 * n, 7),
            "part1-components": Fraction(1),
            "part2-components": Fraction(1),
        }
    elif procedure == "vertex-split":
        table = {
            "part1-size-lower": (HALF - 900 * g) * n,
            "part2-size-upper": (HALF + 900 * g) * n,
            "part1-size-upper-tight": (HALF + 840 * g) * n,
            "part2-size-lower-tight": (HALF - 900 * g) * n,
        }
    elif procedure == "three-parts":
        table = {
            "removed-size": 2000 * a * n,
            "class-balance-lower": 400 * (a + b) * n * n,
            "class-balance-upper": 400 * (a + b) * n * n,
            "large-side-gate": 100 * (a + 2 * b) * n * n,
            "min-degree-after-removal": Fraction(2 * n, 5),
        }
    else:
        return None
    value = table.get(name)
    return Fraction(value) if value is not None else None


def _verify_partition_branch(g, cert, branch, params, label_to_local, named) -> None:
    removed = branch.removed
    p1, p2 = branch.part1, branch.part2
    all_sets = [removed, p1, p2]
    flat = [v for s in all_sets for v in s]
    distinct = len(set(flat)) == len(flat)
    named("partition-disjoint", distinct, "removed and parts pairwise disjoint")
    covers = set(flat) == set(g.host_ids(range(g.n)))
    named("partition-covers", covers, "removed and parts cover every vertex")
    in_range = all(v in label_to_local for v in flat)
    named("vertices-known", in_range, "every certificate vertex exists in the graph")
    if not (distinct and covers and in_range):
        return

    m1 = mask_of(label_to_local[v] for v in p1)
    m2 = mask_of(label_to_local[v] for v in p2)
    rest = m1 | m2
    n = g.n

    if branch.structure == "split":
        cross = any(g.adj[v] & m2 for v in bits(m1))
        named("structure-split", not cross, "no edges between the two parts")
    elif branch.structure == "bipartite":
        inside = any(g.adj[v] & m1 for v in bits(m1)) or \
                 any(g.adj[v] & m2 for v in bits(m2))
        named("structure-bipartite", not inside, "no edges inside either part")
    else:
        named("structure-known", False, f"unknown structure {branch.structure!r}")
        return

    sizes_ordered = len(p1) <= len(p2)
    named("parts-ordered", sizes_ordered, "part1 no larger than part2")

    quantities = {
        "removed_count": Fraction(len(removed)),
        "part1_count": Fraction(len(p1)),
        "part2_count": Fraction(len(p2)),
        "part1_mindeg": Fraction(_min_degree_within(g, m1)),
        "part2_mindeg": Fraction(_min_degree_within(g, m2)),
        "part1_comps": Fraction(len(components(g, within=m1))),
        "part2_comps": Fraction(len(components(g, within=m2))),
        "rest_mindeg": Fraction(_min_degree_within(g, rest)),
    }
    bal_low = Fraction(n - 2 * len(p1))
    bal_up = Fraction(2 * len(p2) - n)
    quantities["balance_lower"] = bal_low * abs(bal_low)
    quantities["balance_upper"] = bal_up * abs(bal_up)

    for cmp in branch.checks:
        key = _PART_QUANTITY.get(cmp.name)
        consistent = cmp.holds == cmp.reevaluate()
        if key is not None:
            consistent = consistent and cmp.lhs == quantities[key]
        rhs = _expected_rhs(cert.procedure, cmp.name, params, n)
        if rhs is not None:
            consistent = consistent and cmp.rhs == rhs
        named(f"check-{cmp.name}", consistent,
              "stored quantities and verdict match the partition and parameters")
