"""Stability procedures: peels, golden traces, verification, negatives."""

import dataclasses
from fractions import Fraction
from pathlib import Path

import pytest

from cyclestab.errors import (
    HypothesisViolatedError,
    MalformedCertificateError,
    ParameterError,
)
from cyclestab.graph import build_graph, mask_of
from cyclestab.reporting import canonical_json
from cyclestab.stability import (
    CycleBranch,
    DecompositionParams,
    PartitionBranch,
    StabilityCertificate,
    decompose_three_parts,
    decompose_two_parts,
    decompose_vertex_split,
    low_degree_mask,
    peel_low_degree,
    vertex_disjoint_cross_paths,
    verify_stability_certificate,
)

from conftest import (
    complete,
    complete_bipartite,
    cycle_graph,
    shared_cliques,
    two_cliques_shared,
    two_disjoint_cliques,
)

GOLDEN = Path(__file__).parent / "golden"


def _golden(name: str) -> str:
    return (GOLDEN / f"{name}.json").read_text()


# -- peel ------------------------------------------------------------------

def test_peel_k10_nothing():
    mask, rest = peel_low_degree(complete(10), 9, 40)
    assert mask == 0 and rest.n == 10


def test_peel_star_leaves():
    star = build_graph(10, [(0, v) for v in range(1, 10)])
    mask, rest = peel_low_degree(star, 9, 40)
    assert mask == mask_of(range(1, 10))
    assert rest.n == 1 and rest.labels == (0,)


def test_peel_shared_cliques_nothing():
    g = two_cliques_shared(12)  # order 23, internal degree 11, center 22
    mask, _ = peel_low_degree(g, 9, 20)
    assert mask == 0


def test_peel_threshold_uses_original_order():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert low_degree_mask(g, 9, 20, within=mask_of([0, 1]), order_n=4) == mask_of([0, 1])


# -- golden traces ----------------------------------------------------------

GOLDEN_CASES = [
    ("thdc_shared_k13", decompose_two_parts, lambda: two_cliques_shared(13),
     DecompositionParams(alpha=Fraction(2, 100))),
    ("thdc_disjoint_k13_beta1", decompose_two_parts,
     lambda: two_disjoint_cliques(13),
     DecompositionParams(alpha=Fraction(2, 100), beta=Fraction(1, 100))),
    ("thdc_disjoint_k13_beta5", decompose_two_parts,
     lambda: two_disjoint_cliques(13),
     DecompositionParams(alpha=Fraction(2, 100), beta=Fraction(5, 100))),
    ("th3par_k13_13", decompose_three_parts, lambda: complete_bipartite(13, 13),
     DecompositionParams(alpha=Fraction(4, 100), beta=Fraction(1, 100))),
    ("th3par_k26", decompose_three_parts, lambda: complete(26),
     DecompositionParams(alpha=Fraction(4, 100))),
    ("th3par_bridge_k13", decompose_three_parts,
     lambda: two_disjoint_cliques(13, bridge=True),
     DecompositionParams(alpha=Fraction(4, 100), beta=Fraction(5, 100))),
]


@pytest.mark.parametrize("name,proc,make,params",
                         GOLDEN_CASES, ids=[c[0] for c in GOLDEN_CASES])
def test_golden_byte_for_byte(name, proc, make, params):
    g = make()
    cert = proc(g, params)
    assert canonical_json(cert.to_payload()) == _golden(name)
    report = verify_stability_certificate(g, cert)
    assert report.passed, report.failing()


def test_golden_vertex_split_bridge_k7():
    g = two_cliques_shared(7, extra=[(1, 7)])
    cert = decompose_vertex_split(g, Fraction(3, 10))
    assert canonical_json(cert.to_payload()) == _golden("cycth_bridge_k7")
    assert isinstance(cert.branch, CycleBranch)
    assert cert.branch.required_lengths == tuple(range(3, 12))
    assert verify_stability_certificate(g, cert).passed


def test_golden_vertex_split_shared_k27_k25():
    g = shared_cliques(27, 25)
    cert = decompose_vertex_split(g, Fraction(1, 25))
    assert canonical_json(cert.to_payload()) == _golden("cycth_shared_k27_k25")
    assert isinstance(cert.branch, PartitionBranch)
    assert cert.branch.removed == (0,)
    assert (len(cert.branch.part1), len(cert.branch.part2)) == (24, 26)
    assert all(c.holds for c in cert.branch.checks)
    assert verify_stability_certificate(g, cert).passed


def test_reproducible_byte_for_byte():
    g = two_disjoint_cliques(13)
    params = DecompositionParams(alpha=Fraction(2, 100), beta=Fraction(5, 100))
    a = canonical_json(decompose_two_parts(g, params).to_payload())
    b = canonical_json(decompose_two_parts(g, params).to_payload())
    assert a == b


# -- branch behavior ---------------------------------------------------------

def test_two_parts_k25_cycle_branch():
    cert = decompose_two_parts(complete(25), DecompositionParams(alpha=Fraction(2, 100)))
    assert isinstance(cert.branch, CycleBranch)
    assert cert.branch.claim == "long-cycle"
    assert cert.branch.required_lengths == (25,)


def test_two_parts_shared_k13_hypothesis_flag():
    # order 25, 156 edges: just below the density line, flagged but still run
    cert = decompose_two_parts(two_cliques_shared(13),
                               DecompositionParams(alpha=Fraction(2, 100)))
    assert not cert.hypothesis.holds
    assert isinstance(cert.branch, CycleBranch)  # longest cycle 13 >= 13.0


def test_two_parts_enforce_gate():
    with pytest.raises(ParameterError):
        decompose_two_parts(complete(10), DecompositionParams(
            alpha=Fraction(2, 100), enforce_paper_range=True))


def test_two_parts_enforce_needs_large_order():
    # the paper-range gate also pins n >= 1/(2 alpha), unreachable at desk scale
    params = DecompositionParams(alpha=Fraction(1, 200000), beta=Fraction(0),
                                 enforce_paper_range=True)
    with pytest.raises(ParameterError, match="below"):
        decompose_two_parts(complete(10), params)


def test_two_parts_stuck_on_two_connected_remainder():
    # K_{3,10}: longest cycle 6 sits below the 6.63 threshold, every degree
    # survives the peel, and no single cut vertex exists
    g = complete_bipartite(3, 10)
    cert = decompose_two_parts(g, DecompositionParams(alpha=Fraction(1, 100)))
    assert cert.branch.kind == "stuck"
    assert cert.branch.step == "two-connected-remainder"
    assert not cert.hypothesis.holds


def test_vertex_split_k10_cycle_branch():
    cert = decompose_vertex_split(complete(10), Fraction(1, 100))
    assert isinstance(cert.branch, CycleBranch)
    assert cert.branch.required_lengths == (3, 4, 5, 6)
    assert verify_stability_certificate(g=complete(10), cert=cert).passed


def test_vertex_split_boundary_density():
    cert = decompose_vertex_split(complete_bipartite(5, 5), Fraction(1, 100))
    assert not cert.hypothesis.holds  # 4e = 100 is not > 100


def test_three_parts_enforce_gate():
    with pytest.raises(ParameterError):
        decompose_three_parts(complete(10), DecompositionParams(
            alpha=Fraction(4, 100), enforce_paper_range=True))


def test_three_parts_bridge_cut_vertex():
    cert = decompose_three_parts(two_disjoint_cliques(13, bridge=True),
                                 DecompositionParams(alpha=Fraction(4, 100),
                                                     beta=Fraction(5, 100)))
    assert isinstance(cert.branch, PartitionBranch)
    assert cert.branch.structure == "split"
    assert cert.branch.removed == (0,)
    assert (len(cert.branch.part1), len(cert.branch.part2)) == (12, 13)


def test_three_parts_majority_peel_pancyclic():
    # a K20 core with six pendants: the peel removes more vertices than the
    # small-peel gate allows, the remainder stays dense, and the conclusion
    # is verified on the whole graph
    edges = list(__import__("itertools").combinations(range(20), 2))
    edges += [(0, 20 + i) for i in range(6)]
    g = build_graph(26, edges)
    params = DecompositionParams(alpha=Fraction(1, 1000), beta=Fraction(1, 10000))
    cert = decompose_three_parts(g, params)
    assert isinstance(cert.branch, CycleBranch)
    assert cert.branch.required_lengths == tuple(range(3, 15))
    assert verify_stability_certificate(g, cert).passed


def test_three_parts_majority_peel_density_stuck():
    # pendants plus a whole peeled clique side: the selected low-degree
    # subset leaves a remainder below quarter density, a missing object
    g = shared_cliques(27, 25)
    edges = list(g.edges()) + [(1, 51 + i) for i in range(3)]
    g = build_graph(54, edges)
    params = DecompositionParams(alpha=Fraction(2, 100), beta=Fraction(1, 1000))
    cert = decompose_three_parts(g, params)
    assert cert.branch.kind == "stuck"
    assert cert.branch.step == "peel-majority-density"


def test_vertex_split_inner_long_cycle_stuck():
    # sparse ring: the density hypothesis fails (flagged, still run), the
    # required range is incomplete, yet the inner split finds a spanning
    # cycle, which certifies neither conclusion at this order
    cert = decompose_vertex_split(cycle_graph(12), Fraction(1, 100))
    assert not cert.hypothesis.holds
    assert cert.branch.kind == "stuck"
    assert cert.branch.step == "inner-long-cycle"


def test_cross_paths_counts():
    g = two_disjoint_cliques(4, bridge=True)
    a = mask_of(range(4))
    b = mask_of(range(4, 8))
    assert len(vertex_disjoint_cross_paths(g, a, b)) == 1
    g2 = build_graph(8, list(g.edges()) + [(1, 5)])
    paths = vertex_disjoint_cross_paths(g2, a, b)
    assert len(paths) == 2
    flat = [v for p in paths for v in p]
    assert len(flat) == len(set(flat))


# -- verification and negatives ----------------------------------------------

def _partition_golden():
    g = two_disjoint_cliques(13)
    params = DecompositionParams(alpha=Fraction(2, 100), beta=Fraction(5, 100))
    return g, decompose_two_parts(g, params)


def test_verify_rejects_moved_vertex():
    g, cert = _partition_golden()
    branch = cert.branch
    bad = dataclasses.replace(
        branch,
        part1=branch.part1[:-1],
        part2=branch.part2 + (branch.part1[-1],))
    bad_cert = dataclasses.replace(cert, branch=bad)
    report = verify_stability_certificate(g, bad_cert)
    assert not report.passed
    assert "structure-split" in report.failing()


def test_verify_rejects_tampered_verdict():
    g, cert = _partition_golden()
    branch = cert.branch
    flipped = tuple(
        dataclasses.replace(c, holds=not c.holds) if c.name == "removed-size" else c
        for c in branch.checks)
    bad_cert = dataclasses.replace(cert, branch=dataclasses.replace(branch, checks=flipped))
    report = verify_stability_certificate(g, bad_cert)
    assert not report.passed
    assert "check-removed-size" in report.failing()


def test_verify_rejects_broken_witness():
    g = complete(25)
    cert = decompose_two_parts(g, DecompositionParams(alpha=Fraction(2, 100)))
    branch = cert.branch
    t = branch.required_lengths[0]
    witness = list(branch.witnesses[t])
    witness[0], witness[1] = witness[1], witness[0]
    witness[2] = witness[0]  # duplicate vertex breaks validity
    bad_cert = dataclasses.replace(
        cert, branch=dataclasses.replace(branch, witnesses={t: tuple(witness)}))
    report = verify_stability_certificate(g, bad_cert)
    assert not report.passed
    assert "witness-valid" in report.failing()


def test_verify_rejects_stuck():
    g = complete_bipartite(3, 10)
    cert = decompose_two_parts(g, DecompositionParams(alpha=Fraction(1, 100)))
    assert cert.branch.kind == "stuck"
    with pytest.raises(MalformedCertificateError):
        verify_stability_certificate(g, cert)


def test_payload_round_trip():
    g, cert = _partition_golden()
    again = StabilityCertificate.from_payload(cert.to_payload())
    assert canonical_json(again.to_payload()) == canonical_json(cert.to_payload())
    assert verify_stability_certificate(g, again).passed
