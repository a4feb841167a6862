"""Smoke tests for the Python bindings.

The heavy numerical coverage lives in the C++ suites; these check that the
module imports, the main operations round-trip through Python, and Python
callables work as oracles.
"""

import math

import pytest

import cptkit


@pytest.fixture
def space():
    return cptkit.StateSpace(["s1", "s2", "s3"])


@pytest.fixture
def capacity(space):
    table = [0.0] * 8
    table[0b001] = 2 / 3
    table[0b010] = 1 / 3
    table[0b011] = 2 / 3
    table[0b100] = 0.0
    table[0b101] = 1.0
    table[0b110] = 2 / 3
    table[0b111] = 1.0
    return cptkit.Capacity.validate(space, table)


def test_golden_values(space, capacity):
    f = cptkit.Act(space, [3, 4, 4])
    g = cptkit.Act(space, [0, 11, 0])
    h = cptkit.Act(space, [-3, 0, -1])

    assert cptkit.choquet(f, capacity) == pytest.approx(11 / 3, abs=1e-12)
    assert cptkit.sipos(g, capacity) == pytest.approx(11 / 3, abs=1e-12)
    assert cptkit.choquet(h, capacity) == pytest.approx(-4 / 3, abs=1e-12)
    assert cptkit.sipos(f + h, capacity) == pytest.approx(7 / 3, abs=1e-12)
    assert cptkit.sipos(g + h, capacity) == pytest.approx(4 / 3, abs=1e-12)

    params = cptkit.sipos_params(capacity)
    assert cptkit.prefers(f, g, params) == cptkit.Preference.indifferent
    assert cptkit.prefers(f + h, g + h, params) == cptkit.Preference.f_strict
    assert cptkit.hedging_gap(f, h, params) == pytest.approx(1.0, abs=1e-12)


def test_acts_and_comonotonicity(space):
    f = cptkit.Act(space, [3, 4, 4])
    h = cptkit.Act(space, [-3, 0, -1])
    assert cptkit.is_comonotonic(f, h)
    assert not cptkit.is_cosigned(f, h)
    assert cptkit.support(h) == 0b101
    assert cptkit.positive_part(h).payoffs == [0, 0, 0]
    assert cptkit.negative_part(h).payoffs == [3, 0, 1]
    assert (2 * f).payoffs == [6, 8, 8]

    with pytest.raises(cptkit.SpaceMismatchError):
        cptkit.is_comonotonic(f, cptkit.Act(cptkit.StateSpace(["a"]), [1.0]))


def test_capacity_validation(space):
    with pytest.raises(cptkit.CapacityError):
        cptkit.Capacity.validate(space, [0.1] + [0.5] * 6 + [1.0])
    dual = cptkit.conjugate(cptkit.Capacity.additive(space, [0.2, 0.3, 0.5]))
    assert dual.value(0b001) == pytest.approx(0.2, abs=1e-12)


def test_python_callable_oracle(space):
    weights = [0.2, 0.3, 0.5]

    def expectation(act):
        return sum(w * x for w, x in zip(weights, act.payoffs))

    oracle = cptkit.FunctionalOracle(space, expectation)
    result = cptkit.extract_cpt(oracle)
    assert result.params.loss_aversion == pytest.approx(1.0, abs=1e-9)
    assert result.params.v_plus.value(0b011) == pytest.approx(0.5, abs=1e-9)
    assert result.max_deviation <= 1e-9

    report = cptkit.check_restricted_comonotonic_additivity(oracle)
    assert report.restricted_clean()
    assert cptkit.check_monotonicity(oracle).clean()


def test_extraction_rejects_non_cpt(space):
    def cubed(act):
        e = sum(act.payoffs) / 3.0
        return e**3

    oracle = cptkit.FunctionalOracle(space, cubed)
    with pytest.raises(cptkit.ReconstructionMismatchError):
        cptkit.extract_cpt(oracle)


def test_extraction_round_trip(space):
    rng = cptkit.Rng(321)
    params = cptkit.random_cpt_params(space, rng, 0.25, 4.0)
    result = cptkit.extract_cpt(cptkit.make_cpt_oracle(params))
    assert result.params.loss_aversion == pytest.approx(params.loss_aversion, abs=1e-9)
    for mask in range(space.subset_count):
        assert result.params.v_minus.value(mask) == pytest.approx(
            params.v_minus.value(mask), abs=1e-9
        )


def test_symmetry_and_attitudes(capacity):
    sym = cptkit.check_symmetry(cptkit.sipos_params(capacity))
    assert sym.symmetric

    skew = cptkit.check_symmetry(cptkit.CptParams(capacity, capacity, 2.0))
    assert not skew.symmetric
    assert skew.witness.payoffs == [1, 1, 1]

    attitudes = cptkit.check_uncertainty_attitudes(cptkit.sipos_params(capacity))
    assert not attitudes.convex_gains
    assert attitudes.conjugate_loss_concave == attitudes.convex_losses

    convexity = cptkit.is_convex(capacity)
    assert not convexity.holds
    assert convexity.witness.a == 0b001


def test_layer_decomposition(space):
    h = cptkit.Act(space, [-3, 0, -1])
    layers = cptkit.layer_decomposition(h)
    assert [layer.payoffs for layer in layers] == [
        [-2, 0, 0],
        [-1, 0, -1],
        [0, 0, 0],
    ]
    with pytest.raises(cptkit.PositiveEntryError):
        cptkit.layer_decomposition(cptkit.Act(space, [1, 0, 0]))


def test_elicitation(space):
    result = cptkit.elicit_lambda(cptkit.ElicitationTriple(4, -1, 2))
    assert result.kind == cptkit.LossAversionKind.determined
    assert result.loss_aversion == pytest.approx(2.0, abs=1e-12)

    assert (
        cptkit.elicit_lambda(cptkit.ElicitationTriple(0, 0, 0)).kind
        == cptkit.LossAversionKind.indeterminate
    )
    with pytest.raises(cptkit.InconsistentTripleError):
        cptkit.elicit_lambda(cptkit.ElicitationTriple(1, -1, 3))

    uniform = cptkit.Capacity.additive(space, [1 / 3, 1 / 3, 1 / 3])
    params = cptkit.CptParams(uniform, uniform, 2.0)
    f = cptkit.Act(space, [6, 0, 0])
    g = cptkit.Act(space, [0, -3, 0])
    triple = cptkit.simulate_elicitation_triple(f, g, params)
    recovered = cptkit.elicit_lambda(triple)
    assert recovered.loss_aversion == pytest.approx(2.0, abs=1e-9)


def test_file_loading(tmp_path, space):
    capacity_path = tmp_path / "capacity.json"
    capacity_path.write_text(
        '{"states": ["s1", "s2", "s3"], "fractions": true, "values": {'
        '"": 0, "s1": "2/3", "s2": "1/3", "s3": 0, "s1,s2": "2/3", '
        '"s1,s3": 1, "s2,s3": "2/3", "s1,s2,s3": 1}}'
    )
    v = cptkit.load_capacity_json(capacity_path)
    assert v.value(0b001) == pytest.approx(2 / 3, abs=1e-15)

    acts_path = tmp_path / "acts.csv"
    acts_path.write_text("act,s1,s2,s3\nf,3,4,4\n")
    table = cptkit.load_acts_csv(acts_path)
    assert table.space == space
    assert table.acts[0].name == "f"
    assert cptkit.choquet(table.acts[0].act, v) == pytest.approx(11 / 3, abs=1e-12)

    assert '"fractions": true' in cptkit.capacity_to_json(v)


def test_math_consistency(space, capacity):
    rng = cptkit.Rng(7)
    for _ in range(50):
        act = cptkit.random_act(space, rng, -5.0, 5.0)
        lhs = cptkit.sipos(act, capacity)
        rhs = cptkit.cpt(act, cptkit.sipos_params(capacity))
        assert math.isclose(lhs, rhs, rel_tol=0, abs_tol=1e-12)
