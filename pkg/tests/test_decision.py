import random
from fractions import Fraction

import pytest

from symten.combinatorics import enumerate_column_systems, enumerate_partitions
from symten.decision import (
    INDEPENDENCE_MISMATCH,
    PRODUCT_NOT_ONE,
    columns_independent,
    decide_equality,
    gamas_nonvanishing,
    gamas_standard,
)
from symten.group_algebra import isotypic_projector
from symten.linalg import VectorFamily
from symten.sampling import random_family, scaled_family
from symten.tensor import apply_element, decomposable, is_zero, tensor_equal

F = Fraction


def fam(*vectors):
    return VectorFamily(len(vectors[0]), tuple(tuple(F(x) for x in v) for v in vectors))


E1 = (1, 0, 0)
E2 = (0, 1, 0)
E3 = (0, 0, 1)


def test_columns_independent_examples():
    basis = fam(E1, E2, E3)
    for lam in enumerate_partitions(3):
        for system in enumerate_column_systems(lam):
            assert columns_independent(basis, system)
    repeated = fam(E1, E1, E1)
    for system in enumerate_column_systems((2, 1)):
        assert not columns_independent(repeated, system)
    mixed = fam(E1, E1, E2)
    assert columns_independent(mixed, ((1, 3), (2,)))
    assert not columns_independent(mixed, ((1, 2), (3,)))
    with pytest.raises(ValueError):
        columns_independent(mixed, ((1, 2),))


def test_gamas_nonvanishing_examples():
    assert gamas_nonvanishing(fam(E1, E2, E3), (1, 1, 1)) == (True, ((1, 2, 3),))
    assert gamas_nonvanishing(fam(E1, E1, E1), (2, 1)) == (False, None)
    nonzero, witness = gamas_nonvanishing(fam(E1, E1, E2), (2, 1))
    assert nonzero and witness[0] in {(1, 3), (2, 3)}


def test_gamas_standard_examples():
    nonzero, _ = gamas_standard(fam(E1, E2, E3), (3,))
    assert nonzero
    nonzero, tableau = gamas_standard(fam(E1, E1, E2), (2, 1))
    assert nonzero
    assert tableau == ((1, 2), (3,))  # its first column {1,3} is independent
    assert gamas_standard(fam(E1, E1, E1), (2, 1)) == (False, None)


def test_gamas_size_mismatch():
    with pytest.raises(ValueError):
        gamas_nonvanishing(fam(E1, E2), (2, 1))


def test_decide_equality_spec_examples():
    # unimodular triangular change of basis on a wedge
    v = fam((1, 0), (0, 1))
    verdict = decide_equality(v, fam((1, 0), (1, 1)), (1, 1))
    assert verdict.equal and verdict.mode == "witnessed"
    assert verdict.witnesses[0].sigma == (1,)
    assert verdict.witnesses[0].scalars == (F(1),)

    # scaling one wedge vector by 2: wedge(v) = (1/2) wedge(u)
    verdict = decide_equality(v, fam((2, 0), (0, 1)), (1, 1))
    assert not verdict.equal and verdict.mode == "failed"
    assert verdict.failures[0].reason == PRODUCT_NOT_ONE
    assert verdict.failures[0].product == F(1, 2)

    # compensating scalings on a symmetric tensor
    verdict = decide_equality(v, fam((2, 0), (0, F(1, 2))), (2,))
    assert verdict.equal
    assert sorted(verdict.witnesses[0].scalars) == [F(1, 2), F(2)]
    assert verdict.witnesses[0].product == 1

    # swapping the vectors of a symmetric tensor
    verdict = decide_equality(v, fam((0, 1), (1, 0)), (2,))
    assert verdict.equal
    assert verdict.witnesses[0].sigma == (2, 1)
    assert verdict.witnesses[0].scalars == (F(1), F(1))

    # both alternating tensors vanish
    verdict = decide_equality(fam((1, 0), (1, 0)), fam((0, 1), (0, 2)), (1, 1))
    assert verdict.equal and verdict.mode == "both_vanish"
    assert verdict.witnesses == () and verdict.failures == ()


def test_decide_equality_independence_mismatch():
    verdict = decide_equality(fam((1, 0), (1, 0)), fam((1, 0), (0, 1)), (1, 1))
    assert not verdict.equal
    assert verdict.failures[0].reason == INDEPENDENCE_MISMATCH


def test_decide_equality_input_errors():
    v = fam((1, 0), (0, 1))
    with pytest.raises(ValueError):
        decide_equality(v, fam((1, 0, 0), (0, 1, 0)), (2,))
    with pytest.raises(ValueError):
        decide_equality(v, v, (2, 1))


def test_exhaustive_failures_collects_all_systems():
    v = fam(E1, E2, E3)
    u = fam((2, 0, 0), E2, E3)
    lazy = decide_equality(v, u, (1, 1, 1))
    full = decide_equality(v, u, (1, 1, 1), exhaustive=True)
    assert not lazy.equal and not full.equal
    assert len(full.failures) >= len(lazy.failures)


@pytest.mark.parametrize("lam", [(2,), (1, 1), (2, 1), (2, 2), (3, 1)])
def test_reflexivity_and_symmetry(lam):
    rng = random.Random(sum(lam))
    n = sum(lam)
    for _ in range(10):
        fv = random_family(rng, n, rng.choice((2, 3)), adversarial=True)
        fu = random_family(rng, n, fv.dim, adversarial=True)
        assert decide_equality(fv, fv, lam).equal
        assert decide_equality(fv, fu, lam).equal == decide_equality(fu, fv, lam).equal


def test_per_vector_scaling_single_column():
    rng = random.Random(17)
    for n in (2, 3):
        lam = tuple([1] * n)
        for _ in range(10):
            fv = random_family(rng, n, 3)
            scaled_equal = scaled_family(rng, fv, unit_product=True)
            scaled_off = scaled_family(rng, fv, unit_product=False)
            oracle_nonzero, _ = gamas_nonvanishing(fv, lam)
            verdict_eq = decide_equality(fv, scaled_equal, lam)
            verdict_off = decide_equality(fv, scaled_off, lam)
            assert verdict_eq.equal
            if oracle_nonzero:
                assert not verdict_off.equal
            else:
                assert verdict_off.equal and verdict_off.mode == "both_vanish"


@pytest.mark.parametrize("n", [2, 3, 4])
def test_matches_tensor_oracle_random(n):
    rng = random.Random(50 + n)
    partitions = enumerate_partitions(n)
    projectors = {lam: isotypic_projector(lam) for lam in partitions}
    for trial in range(12):
        dim = rng.choice((2, 3))
        fv = random_family(rng, n, dim, adversarial=True)
        if trial % 3 == 0:
            fu = scaled_family(rng, fv, unit_product=bool(trial % 2))
        else:
            fu = random_family(rng, n, dim, adversarial=True)
        xv = decomposable(fv)
        xu = decomposable(fu)
        for lam in partitions:
            expected = tensor_equal(
                apply_element(xv, projectors[lam]),
                apply_element(xu, projectors[lam]),
            )
            assert decide_equality(fv, fu, lam).equal == expected
            nonzero, _ = gamas_nonvanishing(fv, lam)
            assert nonzero == (not is_zero(apply_element(xv, projectors[lam])))
            standard, _ = gamas_standard(fv, lam)
            assert standard == nonzero
