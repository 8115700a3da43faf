import pytest

import tilt


def square(w, h):
    return tilt.Polyomino([(x, y) for y in range(h) for x in range(w)])


def test_two_by_two():
    P = square(2, 2)
    assert len(P) == 4
    length, word = tilt.sgs(P)
    assert length == 2
    assert len(tilt.apply(P, P.pixels(), word)) == 1


def test_full_gathering_verifies():
    P = square(4, 3)
    word, target = tilt.full_gathering(P)
    assert tilt.apply(P, P.pixels(), word) == [target]


def test_blocking_keeps_particles():
    P = square(3, 3)
    C = [(0, 0), (1, 1), (2, 2)]
    assert len(tilt.apply(P, C, "LURD", "ft-block")) == 3


def test_normalize():
    assert tilt.normalize("RL") == "L"
    assert tilt.normalize("LL") == "L"


def test_tally_pair():
    assert tilt.tally_intersection_smallest([(7, [1, 3, 4], 3), (5, [2, 3], 4)]) == 8
    assert tilt.tally_intersection_smallest([(3, [1], 0), (3, [2], 0)], 100) is None


def test_supersequence_instance():
    P, starts = tilt.scs_binary(["10", "001", "01", "111"])
    assert P.classify()["maze"]
    assert tilt.sgs(P, starts)[0] == 11


def test_single_step():
    P = tilt.Polyomino.from_grid("###")
    word, _ = tilt.s1_gathering(P)
    assert len(word) == 2


def test_errors():
    with pytest.raises(tilt.TiltError):
        tilt.Polyomino.from_grid("#.#")
    with pytest.raises(ValueError):
        tilt.apply(square(2, 2), [(0, 0)], "L", "sideways")
