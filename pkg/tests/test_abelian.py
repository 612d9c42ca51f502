import random

import pytest

from gaugedecomp import (
    AbelianGroup,
    GroupElement,
    TRIVIAL_GROUP,
    Z,
    cardinality,
    cyclic,
    direct_sum,
    element_order,
)


class TestGroupConstruction:

    def test_chain_validated(self):
        with pytest.raises(ValueError):
            AbelianGroup(0, (4, 6))
        with pytest.raises(ValueError):
            AbelianGroup(0, (1,))
        with pytest.raises(ValueError):
            AbelianGroup(-1, ())

    def test_from_orders_normalizes(self):
        assert AbelianGroup.from_orders(0, (4, 6)) == AbelianGroup(0, (2, 12))
        assert AbelianGroup.from_orders(0, (0, 3)) == AbelianGroup(1, (3,))
        assert AbelianGroup.from_orders(2, (1, 1)) == AbelianGroup(2, ())

    def test_rendering(self):
        assert str(TRIVIAL_GROUP) == "0"
        assert str(Z) == "Z"
        assert str(AbelianGroup(2, (2, 12))) == "Z^2 (+) Z/2 (+) Z/12"
        assert str(cyclic(12)) == "Z/12"


class TestDirectSum:

    def test_examples(self):
        assert direct_sum([Z, Z]) == AbelianGroup(2, ())
        assert direct_sum([cyclic(2), cyclic(2), Z]) == AbelianGroup(1, (2, 2))
        assert direct_sum([cyclic(4), cyclic(6)]) == AbelianGroup(0, (2, 12))

    def test_empty_sum_is_trivial(self):
        assert direct_sum([]) == TRIVIAL_GROUP

    def test_associative_commutative(self):
        rng = random.Random(11)
        pool = [Z, cyclic(2), cyclic(4), cyclic(6), cyclic(9), cyclic(12),
                AbelianGroup(1, (3,))]
        for _ in range(100):
            a, b, c = (rng.choice(pool) for _ in range(3))
            left = direct_sum([direct_sum([a, b]), c])
            right = direct_sum([a, direct_sum([b, c])])
            assert left == right
            shuffled = direct_sum([c, a, b])
            assert shuffled == left


class TestElements:

    def test_coefficients_reduced(self):
        g = AbelianGroup(1, (4,))
        x = GroupElement(g, (-2, 9))
        assert x.coeffs == (-2, 1)

    def test_length_checked(self):
        with pytest.raises(ValueError):
            GroupElement(cyclic(4), (1, 2))

    def test_arithmetic(self):
        g = AbelianGroup(1, (5,))
        x = GroupElement(g, (2, 3))
        y = GroupElement(g, (1, 4))
        assert (x + y).coeffs == (3, 2)
        assert (x - y).coeffs == (1, 4)
        assert (3 * x).coeffs == (6, 4)
        assert (0 * x).is_zero

    def test_cross_group_addition_rejected(self):
        with pytest.raises(ValueError):
            GroupElement(cyclic(4), (1,)) + GroupElement(cyclic(8), (1,))


class TestElementOrder:

    def test_examples(self):
        assert element_order(cyclic(12).zero()) == 1
        assert element_order(GroupElement(cyclic(12), (3,))) == 4
        g = direct_sum([Z, cyclic(6)])
        assert element_order(GroupElement(g, (1, 2))) == 0

    def test_order_divides_cardinality(self):
        rng = random.Random(12)
        for _ in range(200):
            g = AbelianGroup.from_orders(0, [rng.randint(2, 20) for _ in range(3)])
            size = cardinality(g)
            assert size > 0
            x = GroupElement(
                g, tuple(rng.randint(0, 50) for _ in range(g.generator_count))
            )
            assert size % element_order(x) == 0


class TestCardinality:

    def test_examples(self):
        assert cardinality(cyclic(12)) == 12
        assert cardinality(TRIVIAL_GROUP) == 1
        assert cardinality(AbelianGroup(0, (2, 2))) == 4
        assert cardinality(Z) == 0
