import re

import pytest
from hypothesis import given, strategies as st

from abacore import (
    Node,
    add_node,
    addable_cells,
    boundary_nodes,
    content,
    count_nodes_by_residue,
    e_tilde,
    f_tilde,
    i_signature,
    remove_node,
    removable_cells,
    residue,
)
from abacore.partitions import partitions_of

import oracle

partition = st.integers(0, 8).flatmap(
    lambda n: st.sampled_from([p for p in partitions_of(n)])
)


@st.composite
def charged_mp(draw, max_level=3):
    l = draw(st.integers(1, max_level))
    mp = tuple(draw(partition) for _ in range(l))
    charges = tuple(draw(st.integers(-3, 3)) for _ in range(l))
    e = draw(st.integers(2, 4))
    return mp, charges, e


def test_content_and_residue():
    n = Node(2, 5, 1)
    assert content(n, (0, -1)) == 5 - 2 - 1
    assert residue(n, (0, -1), 3) == 2 % 3
    # residues are normalized even for very negative contents
    assert residue(Node(9, 1, 0), (0,), 4) == (1 - 9) % 4


def test_cells_against_brute_force():
    for n in range(10):
        for p in partitions_of(n):
            assert [(c.row, c.col) for c in addable_cells(p)] == oracle.brute_addable(p)
            assert [(c.row, c.col) for c in removable_cells(p)] == oracle.brute_removable(p)


def test_cells_tag_their_component():
    assert addable_cells((2,), 5) == [Node(1, 3, 5), Node(2, 1, 5)]
    assert removable_cells((2,), 5) == [Node(1, 2, 5)]


def test_boundary_nodes_filter_and_order():
    mp = ((2, 1), (1,))
    charges = (0, 2)
    for i in range(3):
        add, rem = boundary_nodes(mp, charges, 3, i)
        for n in add + rem:
            assert residue(n, charges, 3) == i
        for seq in (add, rem):
            keys = [(content(n, charges), -n.comp) for n in seq]
            assert keys == sorted(keys)


def test_boundary_nodes_rejects_bad_residue():
    with pytest.raises(ValueError):
        boundary_nodes(((1,),), (0,), 3, 3)


def test_signature_example():
    sig = i_signature(((2, 2), (2,)), (3, 4), 4, 1)
    assert sig.word == "ARA"
    assert sig.reduced_word == "A"
    assert sig.good_addable == Node(3, 1, 0)
    assert sig.good_removable is None
    add, rem = boundary_nodes(((2, 2), (2,)), (3, 4), 4, 1)
    assert add == [Node(3, 1, 0), Node(1, 3, 0)]
    assert rem == [Node(1, 2, 1)]


@given(charged_mp())
def test_reduced_word_shape(data):
    mp, charges, e = data
    for i in range(e):
        sig = i_signature(mp, charges, e, i)
        word, reduced = sig.word, sig.reduced_word
        assert re.fullmatch(r"A*R*", reduced)
        # the reduced word is what is left after deleting adjacent RA pairs
        while "RA" in word:
            word = word.replace("RA", "", 1)
        assert word == reduced


@given(charged_mp())
def test_crystal_operators_are_partial_inverses(data):
    mp, charges, e = data
    for i in range(e):
        up = e_tilde(i, mp, charges, e)
        if up is not None:
            assert f_tilde(i, up, charges, e) == mp
        down = f_tilde(i, mp, charges, e)
        if down is not None:
            assert e_tilde(i, down, charges, e) == mp


def test_add_remove_node_edges():
    mp = ((1,), ())
    grown = add_node(mp, Node(1, 1, 1))
    assert grown == ((1,), (1,))
    assert remove_node(grown, Node(1, 1, 1)) == mp
    taller = add_node(mp, Node(2, 1, 0))
    assert taller == ((1, 1), ())


@given(charged_mp())
def test_residue_counts(data):
    mp, charges, e = data
    counts = count_nodes_by_residue(mp, charges, e)
    assert len(counts) == e
    assert sum(counts) == sum(sum(p) for p in mp)
    brute = [0] * e
    for c, p in enumerate(mp):
        for (r, col) in oracle.cells(p):
            brute[(col - r + charges[c]) % e] += 1
    assert counts == tuple(brute)
