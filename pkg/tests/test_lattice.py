import pytest
from hypothesis import given, strategies as st

from latticircle.lattice import check_path, l1_norm, l2_norm_sq, rotate90

points_st = st.tuples(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))


def test_norm_examples():
    assert l1_norm((3, -4)) == 7
    assert l1_norm((0, 0)) == 0
    assert l2_norm_sq((3, -4)) == 25
    assert l2_norm_sq((0, 0)) == 0


def test_rotate90_quarter_turns():
    assert rotate90((2, 1), 0) == (2, 1)
    assert rotate90((2, 1), 1) == (-1, 2)
    assert rotate90((2, 1), 2) == (-2, -1)
    assert rotate90((2, 1), 3) == (1, -2)


@given(points_st, st.integers(0, 12))
def test_rotate90_properties(p, k):
    q = rotate90(p, k)
    assert q == rotate90(p, k % 4)
    assert rotate90(q, (4 - k) % 4) == p
    assert l1_norm(q) == l1_norm(p)
    assert l2_norm_sq(q) == l2_norm_sq(p)


def test_open_path_accepts_quarter_turn():
    report = check_path([(2, 0), (2, 1), (1, 1), (1, 2)], "open")
    assert report.is_valid
    assert report.violations == ()


def test_closed_path_accepts_full_turn():
    quad = [(2, 0), (2, 1), (1, 1), (1, 2)]
    circle = []
    for k in range(4):
        circle.extend(rotate90(p, k) for p in quad)
    report = check_path(circle, "closed")
    assert report.is_closed_valid
    assert report.is_valid
    assert report.violations == ()


def test_diagonal_gap_is_open_valid_but_closed_invalid():
    pts = [(0, 0), (1, 1)]
    assert check_path(pts, "open").is_valid
    closed = check_path(pts, "closed")
    assert not closed.is_closed_valid
    assert closed.violations == ((0, 0), (1, 0))


def test_segment_is_open_valid_only():
    pts = [(0, 0), (1, 0), (2, 0)]
    assert check_path(pts, "open").is_valid
    closed = check_path(pts, "closed")
    assert not closed.is_closed_valid
    # the interior point has its two neighbors, the two ends have one each
    assert closed.violations == ((0, 1), (2, 1))


def test_three_neighbors_fail_open():
    pts = [(0, 0), (1, 0), (-1, 0), (0, 1)]
    report = check_path(pts, "open")
    assert not report.is_valid
    assert (0, 3) in report.violations


def test_duplicates_are_violations_in_both_modes():
    pts = [(0, 0), (1, 0), (0, 0)]
    for mode in ("open", "closed"):
        report = check_path(pts, mode)
        assert not report.is_valid
        assert not report.is_closed_valid
        assert any(index == 2 for index, _ in report.violations)


def test_empty_input_is_vacuously_valid():
    report = check_path([], "open")
    assert report.is_valid
    assert report.is_closed_valid
    assert report.note == "empty"
    assert report.violations == ()


def test_closed_valid_implies_open_valid_on_examples():
    for pts in ([(0, 0), (1, 1)], [(2, 0), (2, 1), (1, 1), (1, 2)]):
        report = check_path(pts, "open")
        assert report.is_closed_valid <= report.is_valid


def test_mode_is_checked():
    with pytest.raises(ValueError):
        check_path([(0, 0)], "loop")


@given(
    st.lists(
        st.tuples(st.integers(-6, 6), st.integers(-6, 6)),
        min_size=1,
        max_size=40,
    ),
    st.data(),
)
def test_verdict_ignores_input_order(pts, data):
    shuffled = data.draw(st.permutations(pts))
    for mode in ("open", "closed"):
        a = check_path(pts, mode)
        b = check_path(shuffled, mode)
        assert a.is_valid == b.is_valid
        assert a.is_closed_valid == b.is_closed_valid
        assert len(a.violations) == len(b.violations)


@given(
    st.lists(
        st.tuples(st.integers(-6, 6), st.integers(-6, 6)),
        min_size=1,
        max_size=40,
    )
)
def test_open_violations_empty_iff_valid(pts):
    report = check_path(pts, "open")
    assert report.is_valid == (report.violations == ())
