import pytest

from catroute import (
    CategorySystem,
    Graph,
    IdMismatchError,
    construct_path_categories,
    is_internally_connected,
    is_shattered,
    path_graph,
)


def test_memdim_small():
    s = CategorySystem(2, [[0], [1], [0, 1]])
    assert s.memdim() == 2


def test_memdim_empty_system():
    assert CategorySystem(3, []).memdim() == 0


def test_memdim_path_100():
    s = construct_path_categories(path_graph(100))
    # every vertex sits in one prefix or suffix per other position
    assert s.memdim() == 99
    assert all(len(s.cat(u)) == 99 for u in range(100))


def test_member_index_matches_categories():
    s = CategorySystem(4, [[0, 2], [1, 2, 3], [0]])
    for u in range(4):
        expected = tuple(
            ci for ci, c in enumerate(s.categories) if u in c
        )
        assert s.cat(u) == expected


def test_cat_distance():
    s = CategorySystem(3, [[0, 1], [1], [1, 2]])
    assert s.cat_distance(0, 1) == 2  # {1}, {1,2} contain 1 but not 0
    assert s.cat_distance(1, 1) == 0
    assert s.cat_distance(2, 0) == 1


def test_cat_distance_asymmetric_on_path_system():
    s = construct_path_categories(path_graph(3))
    assert s.cat_distance(0, 2) == 2
    assert s.cat_distance(1, 2) == 1
    assert s.cat_distance(2, 0) == 2  # not a metric


def test_duplicates_merge():
    once = CategorySystem(3, [[0, 1], [2]])
    twice = CategorySystem(3, [[0, 1], [2], [1, 0], [2]])
    assert once == twice
    assert len(twice) == 2


def test_empty_categories_dropped_with_warning():
    with pytest.warns(UserWarning, match="empty"):
        s = CategorySystem(3, [[0], []])
    assert s.categories == ((0,),)


def test_out_of_range_rejected():
    with pytest.raises(IdMismatchError):
        CategorySystem(2, [[0, 2]])
    with pytest.raises(IdMismatchError):
        CategorySystem(2, [[-1]])


def test_internally_connected_positive():
    g = path_graph(4)
    s = CategorySystem(4, [[0], [1], [2], [3], [0, 1, 2, 3]])
    assert is_internally_connected(g, s) == (True, None)


def test_internally_connected_violation():
    g = path_graph(4)
    # {0, 2} induces no edge; {1, 3} likewise — lowest index reported
    s = CategorySystem(4, [[0, 2], [1, 3], [2, 3]])
    ok, violation = is_internally_connected(g, s)
    assert not ok
    assert violation == 0


def test_internally_connected_split_category():
    # two vertex groups of one category joined only through outside vertices
    g = path_graph(5)
    s = CategorySystem(5, [[0, 1, 3, 4]])
    ok, violation = is_internally_connected(g, s)
    assert not ok and violation == 0


def test_shattered_two_vertex():
    g = path_graph(2)
    assert is_shattered(g, CategorySystem(2, [[0], [1]])) == (True, None)
    ok, violation = is_shattered(g, CategorySystem(2, [[0, 1]]))
    assert not ok
    assert violation == (0, 1)


def test_shattered_path_system():
    for n in (2, 3, 7):
        g = path_graph(n)
        assert is_shattered(g, construct_path_categories(g)).ok


def test_shattered_witness_may_be_target():
    # single edge, categories {0} and {1}: for (0,1) the witness is u = t = 1
    g = path_graph(2)
    assert is_shattered(g, CategorySystem(2, [[0], [1]])).ok


def test_checks_reject_mismatched_universe():
    g = path_graph(3)
    s = CategorySystem(4, [[0]])
    with pytest.raises(IdMismatchError):
        is_shattered(g, s)
    with pytest.raises(IdMismatchError):
        is_internally_connected(g, s)


def test_single_vertex_trivially_shattered():
    g = Graph.from_edges([], n=1)
    assert is_shattered(g, CategorySystem(1, [[0]])).ok
