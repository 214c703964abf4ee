import random
from fractions import Fraction

import pytest

from symten.combinatorics import compose, enumerate_partitions, enumerate_permutations, identity
from symten.group_algebra import ga_multiply, isotypic_projector, unit, young_symmetrizer
from symten.linalg import VectorFamily
from symten.sampling import random_family
from symten.tensor import (
    SparseTensor,
    act,
    apply_element,
    decomposable,
    from_json_obj,
    is_zero,
    tensor_add,
    tensor_equal,
    tensor_scale,
    to_json_obj,
    zero_tensor,
)

F = Fraction


def fam(*vectors):
    return VectorFamily(len(vectors[0]), tuple(tuple(F(x) for x in v) for v in vectors))


def test_decomposable_examples():
    x = decomposable(fam((1, 0), (0, 1)))
    assert x.entries == {(1, 2): F(1)}
    x = decomposable(fam((2, 0), (1, 0)))
    assert x.entries == {(1, 1): F(2)}
    x = decomposable(fam((1, 1), (1, 0)))
    assert x.entries == {(1, 1): F(1), (2, 1): F(1)}


def test_act_examples():
    e12 = decomposable(fam((1, 0), (0, 1)))
    assert act(e12, (2, 1)).entries == {(2, 1): F(1)}
    assert tensor_equal(act(e12, identity(2)), e12)
    e123 = decomposable(fam((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    # the 3-cycle with one-line images [2,3,1] moves e1@e2@e3 to e2@e3@e1
    assert act(e123, (2, 3, 1)).entries == {(2, 3, 1): F(1)}


def test_act_degree_mismatch():
    with pytest.raises(ValueError):
        act(decomposable(fam((1, 0), (0, 1))), (1, 2, 3))


def test_apply_element_examples():
    e12 = decomposable(fam((1, 0), (0, 1)))
    sym = apply_element(e12, isotypic_projector((2,)))
    assert sym.entries == {(1, 2): F(1, 2), (2, 1): F(1, 2)}
    alt = apply_element(e12, isotypic_projector((1, 1)))
    assert alt.entries == {(1, 2): F(1, 2), (2, 1): F(-1, 2)}
    e11 = decomposable(fam((1, 0), (1, 0)))
    assert is_zero(apply_element(e11, isotypic_projector((1, 1))))


def test_is_zero_and_equal_examples():
    assert is_zero(zero_tensor(2, 2))
    x = decomposable(fam((1, 0), (0, 1)))
    assert tensor_equal(x, x)
    sym = apply_element(x, isotypic_projector((2,)))
    sym_swapped = apply_element(decomposable(fam((0, 1), (1, 0))), isotypic_projector((2,)))
    assert tensor_equal(sym, sym_swapped)
    with pytest.raises(ValueError):
        tensor_equal(x, zero_tensor(2, 3))


def test_canonical_form_drops_zeros():
    x = SparseTensor(2, 1, {(1,): F(0), (2,): F(3)})
    assert x.entries == {(2,): F(3)}
    assert is_zero(tensor_add(x, tensor_scale(x, -1)))


@pytest.mark.parametrize("n,r", [(2, 2), (3, 2), (3, 3), (4, 3)])
def test_right_action_law(n, r):
    rng = random.Random(n * 10 + r)
    perms = list(enumerate_permutations(n))
    for _ in range(20):
        x = tensor_add(
            decomposable(random_family(rng, n, r, adversarial=True)),
            tensor_scale(decomposable(random_family(rng, n, r)), F(rng.randint(1, 3), 2)),
        )
        s, t = rng.choice(perms), rng.choice(perms)
        assert tensor_equal(act(act(x, s), t), act(x, compose(s, t)))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_apply_element_respects_products(n):
    rng = random.Random(n)
    x = decomposable(random_family(rng, n, 3))
    for lam in enumerate_partitions(n):
        g = isotypic_projector(lam)
        h = young_symmetrizer(tuple(tuple(range(sum(lam[:i]) + 1, sum(lam[:i + 1]) + 1)) for i in range(len(lam))))
        assert tensor_equal(
            apply_element(x, ga_multiply(g, h)),
            apply_element(apply_element(x, g), h),
        )
        assert tensor_equal(apply_element(x, unit(n)), x)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_projector_idempotent_and_resolution_of_identity(n):
    rng = random.Random(100 + n)
    for _ in range(5):
        x = decomposable(random_family(rng, n, rng.choice((2, 3)), adversarial=True))
        total = zero_tensor(x.dim, x.order)
        for lam in enumerate_partitions(n):
            once = apply_element(x, isotypic_projector(lam))
            assert tensor_equal(apply_element(once, isotypic_projector(lam)), once)
            total = tensor_add(total, once)
        assert tensor_equal(total, x)


def test_json_round_trip():
    rng = random.Random(5)
    x = apply_element(
        decomposable(random_family(rng, 3, 3)), isotypic_projector((2, 1))
    )
    obj = to_json_obj(x)
    indices = [tuple(e["index"]) for e in obj["entries"]]
    assert indices == sorted(indices)
    assert all(isinstance(e["coeff"], str) for e in obj["entries"])
    assert tensor_equal(from_json_obj(obj), x)
