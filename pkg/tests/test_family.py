import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import corollary_holds, least_successor_bruteforce
from wdcert.errors import InvalidFamily
from wdcert.family import FamilyMember, check_corollary_family, check_theorem_family, generate_family
from wdcert.moduli import ordering_key

coprime_pairs = st.tuples(st.integers(2, 40), st.integers(2, 40)).filter(
    lambda pq: pq[0] != pq[1] and math.gcd(*pq) == 1
).map(lambda pq: tuple(sorted(pq)))


def test_theorem_family_examples():
    ok = check_theorem_family([(2, 3, 1), (2, 3, 2)])
    assert ok.passed and ok.witness["keys"] == [30, 66]
    bad = check_theorem_family([(2, 3, 2), (2, 3, 1)])
    assert not bad.passed and bad.witness["index"] == [0, 1]
    assert (bad.witness["lhs"], bad.witness["rhs"]) == (66, 30)
    assert check_theorem_family([(2, 3, 1)]).passed


def test_corollary_family_examples():
    ok = check_corollary_family([(2, 3), (2, 7)])
    assert ok.passed and ok.witness["links"] == [[138, 182]]
    bad = check_corollary_family([(2, 3), (2, 5)])
    assert not bad.passed and bad.witness == {"index": [0, 1], "lhs": 138, "rhs": 90}
    assert check_corollary_family([(2, 3)]).passed


@pytest.mark.parametrize(
    "count, expected",
    [(1, [(2, 3)]), (2, [(2, 3), (2, 7)]), (3, [(2, 3), (2, 7), (2, 15)]), (4, [(2, 3), (2, 7), (2, 15), (2, 31)])],
)
def test_generate_family_examples(count, expected):
    assert generate_family((2, 3), count) == expected


@pytest.mark.parametrize("start", [(2, 3), (2, 5), (3, 4), (3, 5), (4, 7), (5, 6), (2, 9)])
def test_successor_matches_bruteforce(start):
    chain = generate_family(start, 3)
    for a, b in zip(chain, chain[1:]):
        assert b == least_successor_bruteforce(*a)


@settings(max_examples=40)
@given(coprime_pairs, st.integers(1, 6))
def test_generated_chains_pass(start, n):
    chain = generate_family(start, n)
    assert len(chain) == n and chain[0] == start
    assert check_corollary_family(chain).passed
    assert all(corollary_holds(a, b) for a, b in zip(chain, chain[1:]))
    assert generate_family(start, n) == chain


@settings(max_examples=60)
@given(st.lists(coprime_pairs, min_size=1, max_size=6), st.data())
def test_subchain_closure(pairs, data):
    if not check_corollary_family(pairs).passed:
        return
    i = data.draw(st.integers(0, len(pairs) - 1))
    j = data.draw(st.integers(i + 1, len(pairs)))
    assert check_corollary_family(pairs[i:j]).passed


@given(coprime_pairs, coprime_pairs)
def test_corollary_agrees_with_ordering_keys(a, b):
    passed = check_corollary_family([a, b]).passed
    assert passed == (ordering_key(*a, 4) < ordering_key(*b, 1))


def test_family_member_validation():
    assert FamilyMember(7, 2, r=3).pair == (2, 7)
    for bad in [dict(p=2, q=4), dict(p=1, q=3), dict(p=2, q=3, r=0), dict(p=2, q=3, k=0), dict(p=2.0, q=3)]:
        with pytest.raises(InvalidFamily):
            FamilyMember(**bad)
    with pytest.raises(InvalidFamily):
        FamilyMember.from_json({"p": 2})
    with pytest.raises(InvalidFamily):
        FamilyMember.from_json({"p": 2, "q": 3, "s": 1})
