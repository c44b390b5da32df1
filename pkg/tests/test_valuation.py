import logging

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qvaluation.clinalg import ComplexMatrix, least_squares_solve
from qvaluation.errors import DimensionMismatchError, InvalidStateError, PayloadError
from qvaluation.sampling import haar_state, random_projector
from qvaluation.subspace import Projector, contains, kernel_of, range_of
from qvaluation.types import Membership, MembershipMethod, Semantics, TruthValue
from qvaluation.valuation import (
    StateVector,
    born_probability,
    check_consistency,
    decompose,
    linear_systems,
    membership,
    truth_from_probability,
    truth_of,
    valuate,
    valuation_report,
)

SQRT2 = np.sqrt(2.0)
SQRT3 = np.sqrt(3.0)

CASES = [
    ("ket_Y32", Membership.IN_RANGE, TruthValue.TRUE, TruthValue.TRUE, 1.0),
    ("ket_Y12", Membership.IN_KERNEL, TruthValue.FALSE, TruthValue.FALSE, 0.0),
    ("ket_X32", Membership.NEITHER, TruthValue.GAP, TruthValue.FALSE, 0.125),
]


class TestTruthValue:
    def test_gap_has_no_boolean_value(self):
        with pytest.raises(TypeError):
            bool(TruthValue.GAP)
        assert bool(TruthValue.TRUE) is True
        assert bool(TruthValue.FALSE) is False

    def test_negation(self):
        assert ~TruthValue.TRUE is TruthValue.FALSE
        assert ~TruthValue.FALSE is TruthValue.TRUE
        assert ~TruthValue.GAP is TruthValue.GAP

    @pytest.mark.parametrize(
        "a, b, conjunction, disjunction",
        [
            (TruthValue.TRUE, TruthValue.TRUE, TruthValue.TRUE, TruthValue.TRUE),
            (TruthValue.TRUE, TruthValue.FALSE, TruthValue.FALSE, TruthValue.TRUE),
            (TruthValue.TRUE, TruthValue.GAP, TruthValue.GAP, TruthValue.TRUE),
            (TruthValue.FALSE, TruthValue.FALSE, TruthValue.FALSE, TruthValue.FALSE),
            (TruthValue.FALSE, TruthValue.GAP, TruthValue.FALSE, TruthValue.GAP),
            (TruthValue.GAP, TruthValue.GAP, TruthValue.GAP, TruthValue.GAP),
        ],
    )
    def test_strong_kleene_tables(self, a, b, conjunction, disjunction):
        assert a & b is conjunction and b & a is conjunction
        assert a | b is disjunction and b | a is disjunction

    def test_joint_denial(self):
        assert TruthValue.FALSE.nor(TruthValue.FALSE) is TruthValue.TRUE
        assert TruthValue.TRUE.nor(TruthValue.FALSE) is TruthValue.FALSE
        assert TruthValue.GAP.nor(TruthValue.FALSE) is TruthValue.GAP

    def test_str_and_from_bool(self):
        assert str(TruthValue.GAP) == "gap"
        assert TruthValue.from_bool(True) is TruthValue.TRUE
        assert not TruthValue.GAP.is_bivalent


class TestStateVector:
    def test_rejects_zero(self):
        with pytest.raises(InvalidStateError):
            StateVector(ComplexMatrix.zeros(3, 1))

    def test_rejects_non_unit(self):
        with pytest.raises(InvalidStateError, match="unit norm"):
            StateVector([1.0, 1.0])

    def test_rejects_non_column(self):
        with pytest.raises(InvalidStateError):
            StateVector(ComplexMatrix.identity(2))

    def test_normalized(self):
        psi = StateVector.normalized([3.0, 4j])
        assert psi.vector.norm() == pytest.approx(1.0, abs=1e-15)
        with pytest.raises(InvalidStateError):
            StateVector.normalized([0.0, 0.0])

    def test_from_dict_forms(self, fx):
        labelled = StateVector.from_dict(fx.ket_X32.to_dict())
        assert labelled.label == "|X+3/2>"
        bare = StateVector.from_dict(fx.ket_X32.vector.to_dict())
        assert bare.label is None and bare.display_label == "psi"
        assert bare.vector.allclose(fx.ket_X32.vector)

    def test_from_dict_rejects_matrix(self):
        with pytest.raises(PayloadError) as excinfo:
            StateVector.from_dict(ComplexMatrix.identity(2).to_dict())
        assert excinfo.value.field == "cols"


@pytest.mark.parametrize("name, expected, sv, ql, probability", CASES)
@pytest.mark.parametrize("method", list(MembershipMethod))
def test_fixture_truth_table(fx, name, expected, sv, ql, probability, method):
    ket = fx.kets[name]
    p = fx.projector_Y32
    assert membership(ket, p, method).membership is expected
    assert valuate(ket, p, Semantics.SUPERVALUATION, method=method) is sv
    assert valuate(ket, p, Semantics.QUANTUM_LOGIC, method=method) is ql


@pytest.mark.parametrize("name, expected, sv, ql, probability", CASES)
def test_fixture_probabilities_and_consistency(fx, name, expected, sv, ql, probability):
    ket = fx.kets[name]
    p = fx.projector_Y32
    assert born_probability(ket, p) == pytest.approx(probability, abs=1e-9)
    report = check_consistency(ket, p)
    assert report.consistent
    assert report.truth is sv
    assert report.probability + report.complement_probability == pytest.approx(1.0, abs=1e-12)
    assert truth_from_probability(report.probability) is sv


def test_gap_probability_is_strictly_interior(fx, tol):
    report = check_consistency(fx.ket_X32, fx.projector_Y32, tol)
    band = tol.probability_band
    assert report.truth is TruthValue.GAP
    assert band < report.probability < 1.0 - band


def test_quantum_logic_consistency(fx):
    report = check_consistency(fx.ket_X32, fx.projector_Y32, semantics=Semantics.QUANTUM_LOGIC)
    assert report.truth is TruthValue.FALSE
    assert report.consistent


def test_membership_matches_joint_denial(fx):
    p = fx.projector_Y32
    for ket in fx.kets.values():
        outcome = membership(ket, p)
        in_range = TruthValue.from_bool(outcome.membership is Membership.IN_RANGE)
        in_kernel = TruthValue.from_bool(outcome.membership is Membership.IN_KERNEL)
        assert (in_range.nor(in_kernel) is TruthValue.TRUE) == (outcome.membership is Membership.NEITHER)


def test_truth_of():
    assert truth_of(Membership.NEITHER) is TruthValue.GAP
    assert truth_of(Membership.NEITHER, Semantics.QUANTUM_LOGIC) is TruthValue.FALSE
    assert truth_of(Membership.IN_RANGE, Semantics.QUANTUM_LOGIC) is TruthValue.TRUE


def test_truth_from_probability(tol):
    assert truth_from_probability(1.0, tol) is TruthValue.TRUE
    assert truth_from_probability(1.0 - 1e-12, tol) is TruthValue.TRUE
    assert truth_from_probability(0.0, tol) is TruthValue.FALSE
    assert truth_from_probability(0.5, tol) is TruthValue.GAP


def test_dimension_mismatch(fx):
    psi = StateVector.normalized([1.0, 1.0])
    with pytest.raises(DimensionMismatchError):
        valuate(psi, fx.projector_Y32)
    with pytest.raises(DimensionMismatchError):
        born_probability(psi, fx.projector_Y32)


def test_decompose_sums_to_state(fx):
    range_part, kernel_part = decompose(fx.ket_X32, fx.projector_Y32)
    np.testing.assert_allclose((range_part + kernel_part).data, fx.ket_X32.vector.data, atol=1e-15)
    assert abs(np.vdot(range_part.data, kernel_part.data)) < 1e-14


def test_linear_systems_shapes(fx):
    r, k = linear_systems(fx.projector_Y32)
    assert r.shape == (4, 1)
    assert k.shape == (4, 3)


def test_linear_system_outcome_carries_solutions(fx):
    outcome = membership(fx.ket_Y32, fx.projector_Y32, MembershipMethod.LINEAR_SYSTEM)
    assert outcome.range_solution is not None and outcome.kernel_solution is not None
    assert outcome.range_solution.x.shape == (1, 1)
    assert outcome.residual_range <= 1e-12
    assert outcome.residuals == (outcome.residual_range, outcome.residual_kernel)

    residual_outcome = membership(fx.ket_Y32, fx.projector_Y32, MembershipMethod.RESIDUAL)
    assert residual_outcome.range_solution is None


def test_range_system_solution(fx):
    r = ComplexMatrix(8.0 * fx.projector_Y32.matrix.data[:, [0]])
    solution = least_squares_solve(r, fx.ket_Y32.vector)
    assert solution.residual_norm <= 1e-12
    np.testing.assert_allclose(solution.x.data, [[1j / (2.0 * SQRT2)]], atol=1e-9)


def test_kernel_system_solution(fx):
    k = ComplexMatrix(8.0 * fx.projector_Y32.complement().matrix.data[:, :3])
    np.testing.assert_allclose(k.data[3], [1j, SQRT3, -1j * SQRT3], atol=1e-12)
    solution = least_squares_solve(k, fx.ket_Y12.vector)
    expected = np.array([[-1j * SQRT3], [2.0], [1j]]) / (8.0 * SQRT2)
    assert solution.residual_norm <= 1e-9
    np.testing.assert_allclose(solution.x.data, expected, atol=1e-9)


def test_gap_state_solves_neither_system(fx):
    outcome = membership(fx.ket_X32, fx.projector_Y32, MembershipMethod.LINEAR_SYSTEM)
    assert outcome.membership is Membership.NEITHER
    assert outcome.residual_range > 0.1 and outcome.residual_kernel > 0.1


def test_valuation_report(fx):
    report = valuation_report(fx.ket_X32, fx.projector_Y32)
    d = report.to_dict()
    assert d["truth"] == "gap"
    assert d["semantics"] == "SV"
    assert d["state"] == "|X+3/2>"
    assert d["proposition"] == "Y+3/2"
    assert d["probability"] == pytest.approx(0.125, abs=1e-9)
    assert d["method"] == "residual"


def test_haar_states_are_consistent():
    """Consistency on ten thousand random states in C^4, against two random rank-2 projectors."""
    projectors = [random_projector(4, 2, seed=3), random_projector(4, 2, seed=4)]
    for i, seed in enumerate(np.random.SeedSequence(11).spawn(10_000)):
        psi = haar_state(4, seed)
        report = check_consistency(psi, projectors[i % 2])
        assert report.consistent
        assert report.truth is TruthValue.GAP


def test_projector_identity_makes_everything_true():
    psi = StateVector.normalized([1.0, 2j, -1.0])
    assert valuate(psi, Projector.identity(3)) is TruthValue.TRUE
    assert valuate(psi, Projector.zero(3)) is TruthValue.FALSE


def _tilted(main, other, amplitude):
    vector = np.sqrt(1.0 - amplitude**2) * main.vector.data + amplitude * other.vector.data
    return StateVector.normalized(vector)


class TestGapConsistencyBand:
    def test_near_kernel_gap_is_inconsistent(self, fx, tol, caplog):
        psi = _tilted(fx.ket_Y12, fx.ket_Y32, 1e-6)
        with caplog.at_level(logging.WARNING, logger="qvaluation"):
            report = check_consistency(psi, fx.projector_Y32, tol)
        assert report.truth is TruthValue.GAP
        assert report.probability == pytest.approx(1e-12, rel=1e-3)
        assert report.probability < tol.probability_band
        assert not report.consistent
        assert any("inconsistent valuation" in record.getMessage() for record in caplog.records)

    def test_near_range_gap_is_inconsistent(self, fx, tol):
        psi = _tilted(fx.ket_Y32, fx.ket_Y12, 1e-6)
        report = check_consistency(psi, fx.projector_Y32, tol)
        assert report.truth is TruthValue.GAP
        assert report.complement_probability < tol.probability_band
        assert not report.consistent

    @pytest.mark.parametrize("main, other", [("ket_Y12", "ket_Y32"), ("ket_Y32", "ket_Y12")])
    def test_gap_outside_the_band_is_consistent(self, fx, tol, main, other):
        psi = _tilted(fx.kets[main], fx.kets[other], 1e-2)
        report = check_consistency(psi, fx.projector_Y32, tol)
        assert report.truth is TruthValue.GAP
        assert report.consistent

    def test_quantum_logic_reads_the_near_kernel_state_as_false(self, fx, tol):
        psi = _tilted(fx.ket_Y12, fx.ket_Y32, 1e-6)
        report = check_consistency(psi, fx.projector_Y32, tol, Semantics.QUANTUM_LOGIC)
        assert report.truth is TruthValue.FALSE
        assert report.consistent


STATE_KINDS = ["haar", "range", "kernel"]


def _random_case(seed, n, r, kind):
    projector_seed, state_seed = np.random.SeedSequence(seed).spawn(2)
    p = random_projector(n, r, projector_seed)
    psi = haar_state(n, state_seed)
    if kind == "range":
        psi = StateVector.normalized(p.matrix.data @ psi.vector.data)
    elif kind == "kernel":
        psi = StateVector.normalized(p.complement().matrix.data @ psi.vector.data)
    return psi, p


class TestRandomPropositions:
    @settings(max_examples=100, deadline=None)
    @given(seed=st.integers(0, 2**32 - 1), n=st.integers(2, 6), kind=st.sampled_from(STATE_KINDS), data=st.data())
    def test_decomposition_and_exclusive_membership(self, seed, n, kind, data):
        r = data.draw(st.integers(1, n - 1))
        psi, p = _random_case(seed, n, r, kind)
        range_part, kernel_part = decompose(psi, p)
        np.testing.assert_allclose((range_part + kernel_part).data, psi.vector.data, atol=1e-12)
        assert abs(np.vdot(range_part.data, kernel_part.data)) <= 1e-12
        np.testing.assert_allclose(p.matrix.data @ range_part.data, range_part.data, atol=1e-12)

        in_range = contains(range_of(p), psi.vector)
        in_kernel = contains(kernel_of(p), psi.vector)
        assert not (in_range and in_kernel)
        expected = {"haar": Membership.NEITHER, "range": Membership.IN_RANGE, "kernel": Membership.IN_KERNEL}[kind]
        for method in MembershipMethod:
            assert membership(psi, p, method).membership is expected

    @settings(max_examples=100, deadline=None)
    @given(seed=st.integers(0, 2**32 - 1), n=st.integers(2, 6), kind=st.sampled_from(STATE_KINDS), data=st.data())
    def test_probabilities_of_complements_sum_to_one(self, seed, n, kind, data):
        r = data.draw(st.integers(1, n - 1))
        psi, p = _random_case(seed, n, r, kind)
        probability = born_probability(psi, p)
        assert 0.0 <= probability <= 1.0
        assert probability + born_probability(psi, p.complement()) == pytest.approx(1.0, abs=1e-12)

    @settings(max_examples=100, deadline=None)
    @given(seed=st.integers(0, 2**32 - 1), n=st.integers(2, 6), kind=st.sampled_from(STATE_KINDS), data=st.data())
    def test_semantics_agree_off_the_gap(self, seed, n, kind, data):
        r = data.draw(st.integers(1, n - 1))
        psi, p = _random_case(seed, n, r, kind)
        sv = valuate(psi, p, Semantics.SUPERVALUATION)
        ql = valuate(psi, p, Semantics.QUANTUM_LOGIC)
        if sv is TruthValue.GAP:
            assert ql is TruthValue.FALSE
        else:
            assert ql is sv
            assert check_consistency(psi, p).consistent
            assert truth_from_probability(born_probability(psi, p)) is sv
        assert valuate(psi, p.complement(), Semantics.SUPERVALUATION) is ~sv

    @settings(max_examples=60, deadline=None)
    @given(
        seed=st.integers(0, 2**32 - 1),
        n=st.integers(2, 6),
        kind=st.sampled_from(STATE_KINDS),
        theta=st.floats(0.0, 2.0 * np.pi),
        data=st.data(),
    )
    def test_global_phase_does_not_change_the_valuation(self, seed, n, kind, theta, data):
        r = data.draw(st.integers(1, n - 1))
        psi, p = _random_case(seed, n, r, kind)
        rotated = StateVector.normalized(np.exp(1j * theta) * psi.vector.data)
        for method in MembershipMethod:
            assert membership(rotated, p, method).membership is membership(psi, p, method).membership
        assert born_probability(rotated, p) == pytest.approx(born_probability(psi, p), abs=1e-12)
