from itertools import product

import pytest

from cfkit.contfrac import KSequence
from cfkit.errors import CapExceeded, DomainError
from cfkit.paths import (
    Edge,
    defect_by_enumeration,
    enumerate_paths,
    enumerate_paths_upto,
    is_normal_form,
    path_counts,
)


def small_sequences(max_h, max_entry):
    """All canonical nonzero k-sequences with support height <= max_h."""
    for h in range(1, max_h + 1):
        for entries in product(range(max_entry + 1), repeat=h):
            if entries[-1] > 0:
                yield KSequence(entries)


def test_edge_validation():
    with pytest.raises(DomainError):
        Edge("delta", 1)
    with pytest.raises(DomainError):
        Edge("alpha", 0)
    with pytest.raises(DomainError):
        Edge("alpha", 1, wall=1)
    with pytest.raises(DomainError):
        Edge("gamma", 1)
    with pytest.raises(DomainError):
        Edge("gamma", 1, wall=0)


def test_enumerate_single_level_walls():
    words = enumerate_paths(KSequence((2,)), 1)
    assert words == [(Edge("gamma", 1, 1),), (Edge("gamma", 1, 2),)]


def test_enumerate_two_levels():
    words = enumerate_paths(KSequence((1, 1)), 2)
    assert words == [
        (Edge("alpha", 1), Edge("gamma", 2, 1)),
        (Edge("beta", 1), Edge("gamma", 2, 1)),
        (Edge("gamma", 1, 1), Edge("gamma", 2, 1)),
    ]


def test_enumerate_length_zero_is_empty_word():
    assert enumerate_paths(KSequence((3, 1)), 0) == [()]
    assert enumerate_paths(KSequence(()), 0) == [()]


def test_enumerate_empty_when_no_wall_at_length():
    assert enumerate_paths(KSequence((0, 2)), 1) == []


def test_counts_examples():
    assert path_counts(KSequence((1, 1))).cumulative == (1, 2, 5)
    assert path_counts(KSequence((2,))).cumulative == (1, 3)
    assert path_counts(KSequence((0, 2))).cumulative == (1, 1, 5)


def test_counts_per_length_examples():
    assert path_counts(KSequence((2,))).per_length == (1, 2)
    assert path_counts(KSequence((1, 1))).per_length == (1, 1, 3)


def test_defect_examples():
    assert defect_by_enumeration(KSequence((1, 1))) == 3
    assert defect_by_enumeration(KSequence((2,))) == 1
    assert defect_by_enumeration(KSequence((0, 2))) == 2
    with pytest.raises(DomainError):
        defect_by_enumeration(KSequence(()))


def test_enumeration_matches_recurrence_small():
    for k in small_sequences(4, 2):
        counts = path_counts(k)
        for f in range(k.h + 1):
            assert len(enumerate_paths(k, f)) == counts.per_length[f]


def test_enumerated_words_are_valid_and_distinct():
    for k in small_sequences(3, 2):
        words = enumerate_paths_upto(k, k.h)
        assert len(set(words)) == len(words)
        for w in words:
            assert is_normal_form(w, k)


def test_normal_form_rejects_beta_before_alpha():
    k = KSequence((0, 0, 1))
    bad = (Edge("beta", 1), Edge("alpha", 2), Edge("gamma", 3, 1))
    good = (Edge("alpha", 1), Edge("beta", 2), Edge("gamma", 3, 1))
    assert not is_normal_form(bad, k)
    assert is_normal_form(good, k)
    assert good in enumerate_paths(k, 3)
    assert bad not in enumerate_paths(k, 3)


def test_normal_form_checks_levels_and_walls():
    k = KSequence((1,))
    assert not is_normal_form((Edge("gamma", 2, 1),), k)
    assert not is_normal_form((Edge("gamma", 1, 2),), k)


def test_coprimality_and_strict_bound():
    from math import gcd

    for k in small_sequences(4, 2):
        counts = path_counts(k)
        top = counts.cumulative[k.h]
        rest = sum(counts.cumulative[: k.h])
        assert gcd(top, rest) == 1
        assert rest < top


def test_defect_equals_recurrence_sum():
    for k in small_sequences(4, 2):
        counts = path_counts(k)
        assert defect_by_enumeration(k) == sum(counts.cumulative[: k.h])


def test_cap_is_enforced():
    with pytest.raises(CapExceeded):
        enumerate_paths(KSequence((2, 2, 2)), 3, cap=5)
    with pytest.raises(CapExceeded):
        defect_by_enumeration(KSequence((2, 2, 2, 2)), cap=10)


def test_counts_beyond_support_stay_flat():
    counts = path_counts(KSequence((2,)), upto=4)
    assert counts.per_length == (1, 2, 0, 0, 0)
    assert counts.cumulative == (1, 3, 3, 3, 3)
