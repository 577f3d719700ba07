import itertools
import random

import pytest

from nichols_lie.errors import DomainError
from nichols_lie.lyndon import (
    deglex_less,
    degree,
    is_convex_order,
    is_lyndon,
    lex_less,
    lyndon_factorize,
    root_word,
    root_words,
    shirshov_split,
    word,
    word_str,
)
from nichols_lie.presets import ROWS, RowPreset
from nichols_lie.rootsys import positive_roots
from nichols_lie.tensoralg import TensorElement, braided_bracket, hyperletter

ALL_WORDS = [w for n in range(1, 11) for w in itertools.product((1, 2), repeat=n)]
INSTANCES = [(r, d) for r, s in ROWS.items() for d in range(1, len(s["diagrams"]) + 1)]


def _brute_is_lyndon(w):
    """Strictly smaller than every proper rotation (an independent characterization)."""
    return all(w < w[k:] + w[:k] for k in range(1, len(w)))


def _brute_factorizations(w):
    """All ways to cut w into non-increasing Lyndon factors."""
    if not w:
        return [[]]
    out = []
    for k in range(1, len(w) + 1):
        head = w[:k]
        if _brute_is_lyndon(head):
            for rest in _brute_factorizations(w[k:]):
                if not rest or rest[0] <= head:
                    out.append([head] + rest)
    return out


def test_word_round_trip():
    assert word("112") == (1, 1, 2)
    assert word_str((1, 2, 2)) == "122"
    assert degree(word("11212")) == (3, 2)
    assert degree(()) == (0, 0)


def test_orders():
    assert lex_less(word("12"), word("2"))
    assert deglex_less(word("12"), word("2"))  # longer is smaller
    assert not deglex_less(word("2"), word("12"))
    assert deglex_less(word("12"), ())  # the empty word is maximal


def test_deglex_invariance_random_triples():
    rng = random.Random(11)

    def rw():
        return tuple(rng.choice((1, 2)) for _ in range(rng.randint(0, 6)))

    for _ in range(200):
        u, v, w = rw(), rw(), rw()
        if deglex_less(v, u):
            assert deglex_less(w + v, w + u)
            assert deglex_less(v + w, u + w)


def test_lyndon_examples():
    assert is_lyndon(word("112"))
    assert not is_lyndon(word("21"))
    with pytest.raises(DomainError):
        is_lyndon(())


def test_lyndon_agrees_with_rotation_check_up_to_length_10():
    for w in ALL_WORDS:
        assert is_lyndon(w) == _brute_is_lyndon(w)


def test_factorization_unique_and_found_up_to_length_10():
    for w in ALL_WORDS:
        options = _brute_factorizations(w)
        assert len(options) == 1
        assert lyndon_factorize(w) == options[0]


def test_factorization_examples():
    assert lyndon_factorize(word("2112")) == [(2,), (1, 1, 2)]
    assert lyndon_factorize(word("221")) == [(2,), (2,), (1,)]
    assert lyndon_factorize(word("11212")) == [(1, 1, 2, 1, 2)]
    assert lyndon_factorize(()) == []


def test_shirshov_examples():
    assert shirshov_split(word("112")) == ((1,), (1, 2))
    assert shirshov_split(word("12")) == ((1,), (2,))
    assert shirshov_split(word("11212")) == ((1, 1, 2), (1, 2))
    for bad in ("21", "1", "1212"):
        with pytest.raises(DomainError):
            shirshov_split(word(bad))


def test_shirshov_split_is_the_longest_lyndon_suffix():
    for w in ALL_WORDS:
        if len(w) >= 2 and is_lyndon(w):
            v, s = shirshov_split(w)
            assert v + s == w and is_lyndon(v) and is_lyndon(s)
            longest = next(w[k:] for k in range(1, len(w)) if is_lyndon(w[k:]))
            assert s == longest


def test_hyperletter_small_cases():
    q = RowPreset(1, 1, 5).matrix()
    F = q.field
    x1, x2 = TensorElement.letter(F, 1), TensorElement.letter(F, 2)
    assert hyperletter("12", q) == x1 * x2 - (x2 * x1).scale(q[1, 2])
    ad = braided_bracket(x1, braided_bracket(x1, x2, q), q)
    assert hyperletter("112", q) == ad
    assert hyperletter("21", q) == x2 * x1


@pytest.mark.parametrize("key", INSTANCES)
def test_hyperletter_leading_word(key):
    # [u]_c = u + (lexicographically larger words of the same degree)
    q = RowPreset(*key).matrix()
    rs = positive_roots(q)
    for w in rs.root_words.values():
        if len(w) > 9:
            continue
        h = hyperletter(w, q)
        assert h.coeff(w) == 1
        assert all(v > w for v in h.terms if v != w)
        assert all(degree(v) == degree(w) for v in h.terms)


def test_root_word_examples():
    rs = positive_roots(RowPreset(10).matrix())
    assert root_word(rs, (2, 1)) == word("112")
    assert root_word(rs, (3, 2)) == word("11212")
    rs3 = positive_roots(RowPreset(9).matrix())
    assert root_word(rs3, (1, 2)) == word("122")
    with pytest.raises(DomainError):
        root_word(rs, (5, 5))


def test_root_word_bracketing_matches_nested_hyperletters():
    q = RowPreset(10).matrix()
    assert hyperletter("11212", q) == braided_bracket(hyperletter("112", q), hyperletter("12", q), q)


@pytest.mark.parametrize("key", INSTANCES)
def test_root_words_order_is_convex(key):
    rs = positive_roots(RowPreset(*key).matrix())
    words = root_words(rs.roots)
    assert len(set(words.values())) == len(words)
    by_word = sorted(rs.roots, key=lambda r: words[r])
    assert is_convex_order(by_word)
    assert by_word == rs.roots


def test_convex_order_examples():
    assert is_convex_order([(1, 0), (2, 1), (1, 1), (0, 1)])
    assert not is_convex_order([(1, 0), (0, 1), (1, 1)])
    assert is_convex_order([(0, 1), (1, 0)])
