import pytest
from hypothesis import given, strategies as st

from codebetti import (
    IdealParseError,
    PiercingStep,
    PseudoMonomial,
    SquarefreeIdeal,
    SquarefreeMonomial,
    canonical_form,
    depolarize,
    extend_ideal,
    ideal_from_steps,
    mask_of,
    parse_ideal,
    piercing_ideal,
    piercing_variables,
    polarize,
    polarized_ideal,
    random_pierced_code,
)
from conftest import code_of


def test_polarize_examples():
    assert polarize(PseudoMonomial(mask_of((5,)), mask_of((3,)))) == SquarefreeMonomial(
        mask_of((5,)), mask_of((3,))
    )
    assert polarize(PseudoMonomial(1, 0)).render() == "x1"
    assert polarize(PseudoMonomial(mask_of((1, 3)), 0)).render() == "x1*x3"


def test_depolarize_examples():
    assert depolarize(SquarefreeMonomial(mask_of((5,)), mask_of((3,)))).render() == "x5*(1-x3)"
    assert depolarize(SquarefreeMonomial(mask_of((1, 3)), 0)).render() == "x1*x3"
    with pytest.raises(ValueError):
        depolarize(SquarefreeMonomial(mask_of((2,)), mask_of((2,))))


@given(st.integers(0, 255), st.integers(0, 255))
def test_polarize_depolarize_inverse(a, b):
    f = PseudoMonomial(a & ~b, b & ~a)
    assert depolarize(polarize(f)) == f
    m = SquarefreeMonomial(a & ~b, b & ~a)
    assert polarize(depolarize(m)) == m


@given(st.integers(0, 255), st.integers(0, 255), st.integers(0, 255), st.integers(0, 255))
def test_polarize_preserves_divisibility_and_degree(a, b, c, d):
    f = PseudoMonomial(a & ~b, b & ~a)
    g = PseudoMonomial(c & ~d, d & ~c)
    assert polarize(f).degree == f.degree
    assert polarize(f).divides(polarize(g)) == f.divides(g)


def test_polarized_ideal_of_worked_code(worked_code):
    ideal = polarized_ideal(canonical_form(worked_code), worked_code.n)
    assert ideal.render() == "x1*x3, x3*x4, x5*y3, x1*x5, x4*x5"


def test_polarized_zero_ideal():
    assert polarized_ideal((), 3).is_zero


def test_polarized_nested_code():
    ideal = polarized_ideal(canonical_form(code_of((1,), (1, 2), (1, 2, 3))), 3)
    assert {g.render() for g in ideal.gens} == {"x3*y2", "x2*y1", "x3*y1"}


def test_ideal_rejects_non_antichain():
    with pytest.raises(ValueError):
        SquarefreeIdeal(2, (SquarefreeMonomial(1, 0), SquarefreeMonomial(3, 0)))


def test_ideal_rejects_xy_overlap():
    with pytest.raises(ValueError):
        SquarefreeIdeal(2, (SquarefreeMonomial(1, 1),))


def test_piercing_ideal_examples():
    step = PiercingStep(5, mask_of((3,)), mask_of((2, 3)))
    got = piercing_ideal(step, 5)
    assert [v.render() for v in got] == ["x1", "x4", "y3"]

    assert piercing_ideal(PiercingStep(1, 0, 0), 1) == ()

    step = PiercingStep(4, 0, mask_of((1, 2)))
    assert [v.render() for v in piercing_ideal(step, 4)] == ["x3"]


def test_piercing_ideal_cardinality():
    # (n-1-k-l) x's plus l y's
    step = PiercingStep(6, mask_of((1, 2)), mask_of((1, 2, 3)))
    got = piercing_ideal(step, 6)
    xs = [v for v in got if v.xsupp]
    ys = [v for v in got if v.ysupp]
    assert len(xs) == 6 - 1 - step.k - step.ell and len(ys) == step.ell


def test_extend_ideal_worked_final_step():
    J4 = SquarefreeIdeal.from_monomials(
        4, [SquarefreeMonomial(mask_of((1, 3)), 0), SquarefreeMonomial(mask_of((3, 4)), 0)]
    )
    got = extend_ideal(J4, PiercingStep(5, mask_of((3,)), mask_of((2, 3))))
    assert {g.render() for g in got.gens} == {"x1*x3", "x3*x4", "x1*x5", "x4*x5", "x5*y3"}


def test_extend_zero_by_first_step():
    got = extend_ideal(SquarefreeIdeal(0, ()), PiercingStep(1, 0, 0))
    assert got.is_zero


def test_extend_by_full_rank_piercing_adds_nothing():
    J = SquarefreeIdeal.from_monomials(3, [SquarefreeMonomial(mask_of((1, 2)), 0)])
    step = PiercingStep(4, 0, mask_of((1, 2, 3)))
    assert extend_ideal(J, step).gens == J.gens


def test_extend_rejects_inconsistent_step():
    J = SquarefreeIdeal.from_monomials(2, [SquarefreeMonomial(mask_of((1, 2)), 0)])
    with pytest.raises(ValueError):
        extend_ideal(J, PiercingStep(2, 0, mask_of((1,))))


def test_piercing_variables_general_existing_set():
    # adding neuron 2 when {1, 4} already exist
    step = PiercingStep(2, 0, mask_of((1, 4)))
    assert piercing_variables(step, mask_of((1, 4))) == ()
    step = PiercingStep(2, 0, mask_of((4,)))
    assert [v.render() for v in piercing_variables(step, mask_of((1, 4)))] == ["x1"]


@given(st.integers(0, 10_000), st.integers(1, 6))
def test_step_fold_matches_cf_pipeline(seed, n):
    order, code = random_pierced_code(n, seed=seed)
    via_steps = ideal_from_steps(order.steps)
    via_cf = polarized_ideal(canonical_form(code), code.n)
    assert via_steps == via_cf


def test_fold_along_non_label_order(worked_code):
    from codebetti import steps_for_order

    order = steps_for_order(worked_code, (1, 4, 2, 3, 5))
    assert order is not None
    assert ideal_from_steps(order.steps) == polarized_ideal(
        canonical_form(worked_code), worked_code.n
    )


def test_parse_ideal_roundtrip():
    ideal = parse_ideal("x1*x4\nx4*y3\n")
    assert ideal.n == 4
    assert {g.render() for g in ideal.gens} == {"x1*x4", "x4*y3"}
    assert parse_ideal("\n".join(g.render() for g in ideal.gens)) == ideal
    with pytest.raises(IdealParseError):
        parse_ideal("x1*z2\n")
    with pytest.raises(IdealParseError):
        parse_ideal("n=2\nx3\n")


def test_parse_ideal_reduces_redundant_generators():
    ideal = parse_ideal("x1\nx1*x2\n")
    assert ideal.render() == "x1"


def test_step_validation():
    with pytest.raises(ValueError):
        PiercingStep(2, mask_of((1, 2)), mask_of((1, 2)))  # tau contains the new neuron
    with pytest.raises(ValueError):
        PiercingStep(3, mask_of((1,)), mask_of((2,)))  # sigma not inside tau
