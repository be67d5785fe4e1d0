from collections import Counter

import pytest

from cncrystal.graphs import generate_closure, is_closed
from cncrystal.monomials import Monomial
from cncrystal.rootdata import Weight
from cncrystal.tableaux import (
    Column,
    Letter,
    column_crystal,
    column_is_admissible,
    letter_crystal,
    tensor_highest_weights,
)


def test_letter_lowering_path():
    assert Letter(4, 1).f(1) == Letter(4, 2)
    assert Letter(4, 4).f(4) == Letter(4, -4)
    assert Letter(4, -2).f(1) == Letter(4, -1)
    assert Letter(4, 1).f(2) is None
    assert Letter(4, -1).f(1) is None


def test_letter_raising_inverts_lowering():
    for x in letter_crystal(3):
        for i in (1, 2, 3):
            y = x.f(i)
            if y is not None:
                assert y.e(i) == x


def test_letter_crystal_is_the_labeled_path():
    letters = letter_crystal(3)
    assert [v.value for v in letters] == [1, 2, 3, -3, -2, -1]
    g = generate_closure([letters[0]])
    assert list(g.vertices) == list(letters)
    assert g.edge_labels() == (1, 2, 3, 2, 1)


def test_letter_weights():
    assert Letter(3, 2).weight() == Weight.from_epsilon((0, 1, 0))
    assert Letter(3, -2).weight() == Weight.from_epsilon((0, -1, 0))


def test_column_admissibility_examples():
    assert column_is_admissible(Column(4, (1, 2, 3)))
    assert not column_is_admissible(Column(2, (1, -1)))
    assert column_is_admissible(Column(2, (2, -2)))


def test_column_admissibility_requires_increasing():
    with pytest.raises(ValueError):
        column_is_admissible(Column(2, (2, 1)))


def test_column_crystal_rank2():
    cols = column_crystal(2, 2)
    assert {c.letters for c in cols} == {
        (1, 2),
        (1, -2),
        (2, -2),
        (2, -1),
        (-2, -1),
    }


def test_column_crystal_counts():
    assert len(column_crystal(2, 1)) == 4
    assert len(column_crystal(5, 3)) == 110


def test_column_crystal_closed_under_operators():
    for n, length in [(2, 1), (2, 2), (3, 2), (3, 3), (4, 3)]:
        cols = column_crystal(n, length)
        assert is_closed(cols)
        hw = [c for c in cols if c.is_highest_weight()]
        assert hw == [Column(n, tuple(range(1, length + 1)))]


def test_column_matches_monomial_component_sizes():
    for n in range(2, 6):
        for length in range(1, n + 1):
            cols = column_crystal(n, length)
            closure = generate_closure([Monomial.generator(n, length, 1)])
            assert len(cols) == len(closure)


def test_column_operator_example():
    top = Column(2, (1, 2))
    assert top.weight() == Weight.fundamental(2, 2)
    down = top.f(2)
    assert down == Column(2, (1, -2))
    assert down.e(2) == top


def test_tensor_highest_weights_rank2():
    result = tensor_highest_weights(2, 1, 1)
    assert len(result) == 3
    assert all(u == Column(2, (1,)) for u, _, _ in result)
    got = {(v.letters, w.coeffs) for _, v, w in result}
    assert got == {
        ((1,), (2, 0)),
        ((2,), (0, 1)),
        ((-1,), (0, 0)),
    }


def test_tensor_highest_weights_c5_example():
    result = tensor_highest_weights(5, 3, 3)
    assert len(result) == 9
    weights = Counter(w.coeffs for _, _, w in result)
    expected = Counter(
        {
            (0, 0, 2, 0, 0): 1,
            (0, 1, 0, 1, 0): 1,
            (1, 0, 0, 0, 1): 1,
            (1, 0, 1, 0, 0): 1,
            (0, 0, 0, 1, 0): 1,
            (0, 2, 0, 0, 0): 1,
            (0, 1, 0, 0, 0): 1,
            (2, 0, 0, 0, 0): 1,
            (0, 0, 0, 0, 0): 1,
        }
    )
    assert weights == expected


def test_tensor_highest_weights_top_pair():
    for n, p, q in [(2, 1, 2), (3, 2, 2), (4, 3, 2)]:
        result = tensor_highest_weights(n, p, q)
        top = (
            Column(n, tuple(range(1, p + 1))),
            Column(n, tuple(range(1, q + 1))),
        )
        entries = {(u, v): w for u, v, w in result}
        assert top in entries
        assert entries[top] == Weight.fundamental(n, p) + Weight.fundamental(n, q)


def test_first_factor_always_highest_weight():
    for n, p, q in [(2, 2, 1), (3, 2, 3), (4, 2, 2)]:
        for u, _, _ in tensor_highest_weights(n, p, q):
            assert u == Column(n, tuple(range(1, p + 1)))


def test_highest_weight_partner_shape():
    # second factors start with 1..a, continue p+1..b, close with bbar..(c+1)bar
    for n, p, q in [(3, 2, 2), (4, 3, 3), (4, 3, 2)]:
        for _, v, _w in tensor_highest_weights(n, p, q):
            positives = [x for x in v.letters if x > 0]
            negatives = [x for x in v.letters if x < 0]
            a = 0
            while a < len(positives) and positives[a] == a + 1:
                a += 1
            tail = positives[a:]
            assert tail == list(range(p + 1, p + 1 + len(tail)))
            if negatives:
                b = -negatives[0]
                expected = list(range(-b, -b + len(negatives)))
                assert negatives == expected
                if tail:
                    assert tail[-1] == b
    # (shape checked structurally; the weight bookkeeping is implied)


def test_column_text_and_json():
    col = Column(2, (2, -2))
    assert str(col) == "[2,2̄]"
    assert col.to_json() == [2, -2]
