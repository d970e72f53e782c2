"""Bound formulas, their gating, and verification against exact oracles."""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from expandercodes import bounds, graphs, polytope, subcodes, tanner
from expandercodes.errors import InconsistentParameters, InputError
from expandercodes.gf2 import BitMatrix

F = Fraction


def by_id(reports, bound_id):
    matches = [r for r in reports if r.bound_id == bound_id]
    assert len(matches) == 1
    return matches[0]


# -- biregular parity construction -----------------------------------------------------


def test_case_a_hand_values():
    dmin, smin, wbsc = bounds.case_a_bounds(F(1, 2), 20, F(3, 4), 8)
    assert dmin.value == 10 and dmin.applicable and not dmin.strict
    assert smin.value == 10 and smin.applicable
    # 2*(10-1)*(9/4-2)/(1/2) - 1 = 8
    assert wbsc.value == 8
    assert wbsc.applicable and wbsc.strict and wbsc.meaningful


def test_case_a_gates():
    # delta = 3/4 needs c > 4 for the weight theorem; at c = 4 the strict
    # inequality fails exactly
    _, _, wbsc = bounds.case_a_bounds(F(1, 2), 20, F(3, 4), 4)
    assert not wbsc.applicable
    assert [h.holds for h in wbsc.hypotheses] == [False, True]
    # delta = 1/2 kills the distance gate and the weight denominator
    dmin, smin, wbsc = bounds.case_a_bounds(F(1, 2), 20, F(1, 2), 8)
    assert not dmin.applicable and not smin.applicable
    assert wbsc.value is None
    # non-integral delta * c
    _, _, wbsc = bounds.case_a_bounds(F(1, 2), 20, F(7, 9), 8)
    assert not wbsc.applicable
    assert any(h.name.endswith("integer") and not h.holds
               for h in wbsc.hypotheses)


def test_case_b_reduces_to_case_a_at_local_distance_two():
    for delta in (F(3, 4), F(5, 6), F(11, 12)):
        a = bounds.case_a_bounds(F(1, 2), 24, delta, 12)
        b = bounds.case_b_bounds(F(1, 2), 24, delta, 12, 6, 2)
        for ra, rb in zip(a, b):
            assert ra.value == rb.value
            assert ra.applicable == rb.applicable


def test_case_b_input_validation():
    with pytest.raises(InconsistentParameters):
        bounds.case_b_bounds(F(1, 2), 20, F(3, 4), 4, 6, 7)
    with pytest.raises(InconsistentParameters):
        bounds.case_b_bounds(F(1, 2), 20, F(3, 4), 4, 6, 0)


@settings(max_examples=80, deadline=None)
@given(st.integers(5, 30), st.integers(0, 40), st.integers(20, 60))
def test_stronger_local_codes_never_weaken_the_weight_bound(c, slack, n):
    # with the same expansion, a local distance of 3+ must give at least the
    # local-distance-2 value whenever both theorems apply
    lowest = (2 * c + 1) // 3 + 1
    k = min(c, lowest + slack % (c - lowest + 1))
    delta = F(k, c)
    assume(delta > F(2, 3) + F(1, 3 * c))
    base = bounds.case_a_bounds(F(1, 2), n, delta, c)[2]
    assume(base.applicable)
    for ed in (3, 4, 5):
        stronger = bounds.case_b_bounds(F(1, 2), n, delta, c, 8, ed)[2]
        if stronger.applicable:
            assert stronger.value >= base.value


# -- one-sided edge-variable construction ------------------------------------------------


def test_case_c_hand_values():
    # complete graph on 8 vertices (mu = 1) with the [7,4,3] label
    dmin, improved, smin, wbsc = bounds.case_c_bounds(8, 7, 1, 3)
    assert dmin.value == F(28, 9)
    assert improved.value == 4
    assert smin.value == 4
    assert wbsc.value == 1
    assert all(r.applicable for r in (dmin, improved, smin, wbsc))
    assert all(r.meaningful for r in (dmin, improved, smin, wbsc))


def test_case_c_threshold_and_gates():
    # epsilon = 2 mu / d zeroes the weight bound exactly
    _, _, _, wbsc = bounds.case_c_bounds(4, 4, 1, 2)
    assert wbsc.value == 0
    assert wbsc.applicable and not wbsc.meaningful
    # epsilon = mu / d: the squared distance bound loses its gate, the
    # stopping-set value degrades to zero but stays applicable
    dmin, improved, smin, _ = bounds.case_c_bounds(4, 3, 2, 2)
    assert not dmin.applicable and not improved.applicable
    assert smin.applicable and smin.value == 0 and not smin.meaningful
    # mu >= d leaves no usable spectral gap at all
    dmin, _, smin, wbsc = bounds.case_c_bounds(4, 3, 3, 2)
    assert dmin.value is None and not dmin.applicable
    assert not smin.applicable and smin.value is None
    assert wbsc.value is None


def test_case_c_input_validation():
    with pytest.raises(InconsistentParameters):
        bounds.case_c_bounds(3, 3, 1, 2)  # odd edge count
    with pytest.raises(InconsistentParameters):
        bounds.case_c_bounds(4, 3, 1, 4)  # local distance above degree


@settings(max_examples=80, deadline=None)
@given(st.integers(3, 10), st.integers(1, 9), st.integers(1, 40))
def test_case_c_improved_bound_dominates(d, ed, mu_tenths):
    mu = F(mu_tenths, 10)
    assume(ed <= d)
    n = 2 * d
    dmin, improved, _, _ = bounds.case_c_bounds(n, d, mu, ed)
    if dmin.applicable:
        assert improved.value >= dmin.value


# -- two-sided edge-variable construction -------------------------------------------------


def test_case_d_hand_values():
    dmin, smin, wbsc, wswap, conj = bounds.case_d_bounds(
        3, 6, 10, 5, 2, 2, 4)
    assert dmin.value == F(10, 3) and dmin.applicable
    assert smin.value == F(10, 3)
    assert smin.applicable and smin.hypotheses == ()
    assert wbsc.applicable and wbsc.value == F(-10, 3) and not wbsc.meaningful
    assert not wswap.applicable
    assert not conj.applicable and conj.conjectural


def test_case_d_swapped_variant():
    # left side stronger: epsilon_1 c = 4 >= epsilon_2 d = 2 >= 2 mu = 1
    _, _, wbsc, wswap, conj = bounds.case_d_bounds(6, 3, 5, 10, F(1, 2), 4, 2)
    assert not wbsc.applicable
    assert wswap.applicable
    assert wswap.value == F(5, 3)
    assert wswap.meaningful
    assert not conj.applicable


def test_case_d_conjecture_flagged_not_failing():
    _, _, _, _, conj = bounds.case_d_bounds(3, 6, 10, 5, F(1, 2), 2, 4)
    assert conj.applicable and conj.conjectural
    assert conj.value == F(25, 6)


def test_case_d_input_validation():
    with pytest.raises(InconsistentParameters):
        bounds.case_d_bounds(3, 6, 10, 6, 1, 2, 4)
    with pytest.raises(InconsistentParameters):
        bounds.case_d_bounds(3, 6, 10, 5, 1, 4, 4)


# -- parity-oriented Gaussian-channel bound ----------------------------------------------


def ring_graph(n):
    rows = np.zeros((n, n), dtype=np.uint8)
    for i in range(n):
        rows[i, i] = 1
        rows[i, (i + 1) % n] = 1
    return tanner.from_parity_matrix(BitMatrix(rows))


def test_tanner_awgn_degree_two_collapses_to_n():
    for n in range(3, 9):
        rep = bounds.tanner_awgn_bound(ring_graph(n))
        assert rep.applicable
        assert rep.value == n


def test_tanner_awgn_k4_cycle_code():
    # incidence of K4: H H^T = A + 3I with spectrum {6, 2, 2, 2}, so the
    # bound is 6(8 - 3 mu2)/(3(6 - mu2)) = 1 at mu2 = 2
    edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    bits = np.zeros((4, 6), dtype=np.uint8)
    for t, (u, v) in enumerate(edges):
        bits[u, t] = 1
        bits[v, t] = 1
    g = tanner.from_parity_matrix(BitMatrix(bits))
    rep = bounds.tanner_awgn_bound(g)
    assert rep.applicable
    assert F(99, 100) < rep.value <= 1
    exact, _ = polytope.min_awgn_pseudoweight(g)
    assert exact >= rep.value


def test_tanner_awgn_hypothesis_gating():
    labelled = tanner.build_case_b(2, 4, 8, subcodes.builtin("spc4"), seed=1)
    rep = bounds.tanner_awgn_bound(labelled)
    assert not rep.applicable and rep.value is None
    ragged = tanner.from_parity_matrix(
        BitMatrix(np.array([[1, 1, 0], [0, 1, 1]], dtype=np.uint8)))
    rep = bounds.tanner_awgn_bound(ragged)
    assert not rep.applicable
    two_rings = BitMatrix(np.block(
        [[ring_graph(3).to_parity_matrix().bits, np.zeros((3, 3), np.uint8)],
         [np.zeros((3, 3), np.uint8), ring_graph(3).to_parity_matrix().bits]]))
    rep = bounds.tanner_awgn_bound(tanner.from_parity_matrix(two_rings))
    assert not rep.applicable
    assert any(h.name == "graph is connected" and not h.holds
               for h in rep.hypotheses)


# -- graph-level dispatch and verification ------------------------------------------------


def test_graph_bounds_requires_alpha_for_profile_cases():
    g = tanner.build_case_a(3, 6, 12, seed=0)
    with pytest.raises(InputError):
        bounds.graph_bounds(g)


def test_graph_bounds_imported_gets_only_the_awgn_row():
    reports, context = bounds.graph_bounds(ring_graph(4))
    assert [r.bound_id for r in reports] == ["T5.awgn"]
    assert reports[0].value == 4
    assert context == {"provenance": "imported"}


def test_verify_bounds_case_a_no_failures():
    g = tanner.build_case_a(3, 6, 10, seed=5)
    report = bounds.verify_bounds(g, alpha=F(1, 2))
    assert report.provenance == "case_a"
    assert report.failures == ()
    assert {r.bound_id for r in report.rows} == {"A.dmin", "A.smin",
                                                 "A.wbsc", "T5.awgn"}
    assert "delta" in report.context


def test_verify_bounds_case_c_rows():
    g = tanner.build_case_c(graphs.complete(4), subcodes.builtin("spc3"))
    report = bounds.verify_bounds(g)
    assert report.failures == ()
    rows = {r.bound_id: r for r in report.rows}
    assert rows["C.dmin"].holds is True
    assert rows["C.dmin_improved"].holds is True
    assert rows["C.smin"].holds is True
    assert rows["C.smin"].oracle_value == 3
    assert rows["C.wbsc"].skipped == "bound not positive"
    assert rows["T5.awgn"].skipped == "hypotheses not satisfied"
    assert report.checked == 3


def test_verify_bounds_case_d_runs_clean():
    base = graphs.complete_bipartite(3, 2)
    g = tanner.build_case_d(base, subcodes.builtin("rep2"),
                            subcodes.builtin("spc3"))
    report = bounds.verify_bounds(g)
    assert report.provenance == "case_d"
    assert report.failures == ()
    conj = [r for r in report.rows if r.bound_id == "D.conjecture"]
    assert conj[0].conjectural


def test_verification_report_never_counts_conjectural_failures():
    row = bounds.VerificationRow("D.conjecture", "bsc_pseudoweight",
                                 F(5), F(1), False, None, False, True)
    report = bounds.VerificationReport("case_d", (row,), {})
    assert report.failures == ()
    assert report.checked == 1


def test_integer_expansion_rate():
    assert bounds.integer_expansion_rate(F(3, 4), 8) == F(3, 4)
    assert bounds.integer_expansion_rate(F(7, 10), 3) == F(2, 3)
    assert bounds.integer_expansion_rate(F(1, 3), 2) == 0
