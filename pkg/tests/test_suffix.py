import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kdegen.suffix import NaiveSuffixIndex, SuffixIndex

words = st.lists(st.integers(0, 9), min_size=1, max_size=8)


@pytest.fixture(params=[SuffixIndex, NaiveSuffixIndex])
def index(request):
    return request.param(50)


def test_suffix_examples(index):
    index.insert([3, 5, 7])
    assert index.is_suffix([5, 7])
    assert index.is_suffix([7])
    assert index.is_suffix([3, 5, 7])
    assert not index.is_suffix([3, 5])
    assert not index.is_suffix([5])


def test_empty_index(index):
    assert not index.is_suffix([1])
    assert not index.has_root_letter(0)


def test_multiple_words(index):
    index.insert([1, 2, 4])
    index.insert([2, 6])
    assert index.is_suffix([6])
    assert index.is_suffix([2, 4])
    assert not index.is_suffix([2, 4, 9])
    assert not index.is_suffix([1, 2])


def test_root_letter(index):
    index.insert([1, 2])
    assert index.has_root_letter(2)
    assert index.has_root_letter(1)
    assert not index.has_root_letter(3)


def test_letter_outside_alphabet(index):
    with pytest.raises(ValueError):
        index.insert([3, 50])
    with pytest.raises(ValueError):
        index.insert([-1])


def test_repeated_letters_inside_words():
    idx = SuffixIndex()
    idx.insert([2, 1, 1, 2])
    idx.insert([1, 1, 1])
    for w, want in [([1, 2], True), ([1, 1, 2], True), ([1, 1], True), ([2, 1], False), ([1, 1, 1, 1], False)]:
        assert idx.is_suffix(w) is want


@settings(max_examples=200)
@given(st.lists(words, max_size=10), st.lists(words, max_size=20))
def test_tree_matches_naive(inserted, queries):
    tree, naive = SuffixIndex(), NaiveSuffixIndex()
    for w in inserted:
        tree.insert(w)
        naive.insert(w)
    for w in inserted:
        for i in range(len(w)):
            assert tree.is_suffix(w[i:])
    for q in queries:
        assert tree.is_suffix(q) == naive.is_suffix(q)
    for a in range(10):
        assert tree.has_root_letter(a) == naive.has_root_letter(a)
        if tree.is_suffix([a]):
            assert tree.has_root_letter(a)


def test_root_letter_is_weaker_than_single_letter_suffix():
    idx = SuffixIndex()
    idx.insert([1, 2])
    assert idx.has_root_letter(1) and not idx.is_suffix([1])


@settings(max_examples=100)
@given(st.lists(words, max_size=8), st.lists(words, max_size=10))
def test_insert_idempotent(inserted, queries):
    once, twice = SuffixIndex(), SuffixIndex()
    for w in inserted:
        once.insert(w)
        twice.insert(w)
        twice.insert(w)
    for q in queries + inserted:
        assert once.is_suffix(q) == twice.is_suffix(q)


def test_root_letter_equals_single_letter_suffix_when_words_have_length_one():
    idx = SuffixIndex()
    for a in (4, 8, 4):
        idx.insert([a])
    for a in range(10):
        assert idx.has_root_letter(a) == idx.is_suffix([a])


def test_fuzz_many_operations():
    rng = random.Random(7)
    tree, naive = SuffixIndex(30), NaiveSuffixIndex(30)
    stored = []
    for _ in range(20000):
        w = [rng.randrange(30) for _ in range(rng.randint(1, 12))]
        if rng.random() < 0.3:
            tree.insert(w)
            naive.insert(w)
            stored.append(w)
        else:
            if stored and rng.random() < 0.5:
                s = rng.choice(stored)
                w = s[rng.randrange(len(s)):]
                if rng.random() < 0.3:
                    w = w[:-1] or w
            assert tree.is_suffix(w) == naive.is_suffix(w)
