import itertools

import pytest
from fractions import Fraction

from qfano.basket import (
    Basket,
    BasketError,
    SingularPointSpec,
    anticanonical_c2,
    expand_point,
    global_index,
    kawamata_sum,
    parse_basket,
    qw_equals_qq,
    torsion_basket_check,
    units_half,
)


def brute_kawamata(indices):
    # independent oracle: straight fraction summation, term by term
    total = Fraction(0)
    for r in indices:
        total += Fraction(r) - Fraction(1, r)
    return total


def test_kawamata_sum_oracle():
    for indices in ([2, 6, 10], [2, 2, 3, 4], []):
        assert kawamata_sum(Basket.from_indices(indices)) == brute_kawamata(indices)
    assert kawamata_sum(Basket.from_indices([2, 6, 10])) == Fraction(517, 30)
    assert kawamata_sum(Basket.from_indices([2, 2, 3, 4])) == Fraction(113, 12)


def test_anticanonical_c2():
    assert anticanonical_c2(Basket.from_indices([2, 2, 3, 4])) == Fraction(175, 12)
    assert anticanonical_c2(Basket.from_indices([2, 6, 10])) == Fraction(203, 30)
    assert anticanonical_c2(Basket()) == 24
    with pytest.raises(BasketError):
        anticanonical_c2(Basket.from_indices([2] * 16))


def test_global_index():
    assert global_index(Basket.from_indices([2, 2, 3, 4])) == 12
    assert global_index(Basket.from_indices([2, 3, 13])) == 78
    assert global_index(Basket.from_indices([5, 17])) == 85
    assert global_index(Basket()) == 1


def test_expand_point():
    assert expand_point(SingularPointSpec("cAx/4", r=4, aw=3)) == [4, 2, 2]
    assert expand_point(SingularPointSpec("cA/r", r=5, aw=2)) == [5, 5]
    assert expand_point(SingularPointSpec("cyclic", r=3)) == [3]
    assert expand_point(SingularPointSpec("gorenstein")) == []
    spec = SingularPointSpec("cAx/4", r=4, aw=5)
    assert len(expand_point(spec)) == spec.aw
    assert global_index(Basket.from_indices(expand_point(spec))) == 4


def brute_torsion(indices, n):
    # exhaustive sub-multiset oracle over eligible points
    eligible = [r for r in indices if r % n == 0]
    for size in range(1, len(eligible) + 1):
        for combo in itertools.combinations(eligible, size):
            ordered = tuple(sorted(combo))
            if n == 7 and ordered == (7, 7, 7):
                return True
            if n == 5 and ordered in ((5, 5, 5, 5), (5, 5, 10), (10, 10)):
                return True
            if n == 3 and sum(ordered) == 18:
                return True
            if n == 2 and sum(ordered) == 16:
                return True
    return False


def test_torsion_basket_examples():
    ok, witness = torsion_basket_check(Basket.from_indices([2, 6, 10]), 2)
    assert ok and witness == (6, 10)
    ok, witness = torsion_basket_check(Basket.from_indices([2, 9, 9]), 3)
    assert ok and witness == (9, 9)
    ok, _ = torsion_basket_check(Basket.from_indices([2, 2, 3, 4]), 2)
    assert not ok
    # indices (2,2,3,4,5) sum to 16 but 3 and 5 are ineligible for 2-torsion
    ok, _ = torsion_basket_check(Basket.from_indices([2, 2, 2, 3, 4, 5]), 2)
    assert not ok
    with pytest.raises(BasketError):
        torsion_basket_check(Basket.from_indices([2, 2]), 4)


def test_torsion_matches_bruteforce():
    pool = [2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14]
    import random

    rng = random.Random(7)
    for _ in range(300):
        indices = [rng.choice(pool) for _ in range(rng.randint(1, 8))]
        basket = Basket.from_indices(indices)
        for n in (2, 3, 5, 7):
            assert torsion_basket_check(basket, n)[0] == brute_torsion(indices, n)


def test_qw_equals_qq():
    assert qw_equals_qq(5, Basket.from_indices([2, 2, 3, 4]))
    assert not qw_equals_qq(3, Basket.from_indices([2, 3, 3, 12]))
    assert qw_equals_qq(7, Basket.from_indices([2, 3, 13]))


def test_units_half():
    assert units_half(2) == [1]
    assert units_half(10) == [1, 3]
    assert units_half(17) == list(range(1, 9))


def test_parser_and_serialization():
    basket = parse_basket("(2^3, 3, 4, 5)")
    assert basket.indices() == [2, 2, 2, 3, 4, 5]
    basket = parse_basket("2,6,10:3")
    assert basket.serialize() == [[2, 1, 1], [6, 1, 1], [10, 3, 1]]
    assert parse_basket("").size() == 0
    assert basket.index_str() == "(2,6,10)"
    with pytest.raises(BasketError):
        parse_basket("2,x")
    with pytest.raises(BasketError):
        parse_basket("4:2")  # gcd(b, r) must be 1
