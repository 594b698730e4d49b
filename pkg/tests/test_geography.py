from canonical_covers.geography import GEOGRAPHY_CHECKS, check_canonical_cover_pair, check_geography, geq_from
from canonical_covers.surfaces import SurfaceInvariants, make_surface


def statuses(rep):
    return {c.name: c.status for c in rep.checks}


def test_example1_Y_k1():
    rep = check_geography(make_surface(0, 3, 12))
    assert statuses(rep) == dict.fromkeys(GEOGRAPHY_CHECKS, "pass")


def test_example3_T_symbolic(k):
    T = make_surface(0, 7 * k - 1, 24 * k - 9)
    assert check_geography(T, floor=1).ok
    assert geq_from(24 * k - 9, 14 * k - 6, 1)
    assert geq_from(63 * k, 24 * k - 9, 1)


def test_negative_control():
    rep = check_geography(SurfaceInvariants(1, 0, 3, 0, 9))
    assert statuses(rep)["chi>=1"] == "fail"
    assert not rep.ok


def test_skipped_is_not_failed():
    rep = check_geography(SurfaceInvariants(1, 0, 3, 0, 9), minimal_general_type=False)
    assert rep.ok
    assert set(statuses(rep).values()) == {"skipped"}
    assert [c.name for c in rep.checks] == list(GEOGRAPHY_CHECKS)


def test_half_line_comparison(k):
    assert geq_from(k, 5, floor=5)
    assert not geq_from(k, 5, floor=4)
    assert not geq_from(-k + 100, 0, floor=1)  # eventually negative


def test_canonical_cover_pair(k):
    Y = make_surface(0, 4 * k - 1, 24 * k - 12)
    T = make_surface(0, 4 * k - 1, 12 * k - 6)
    assert check_canonical_cover_pair(Y, T)
    assert check_canonical_cover_pair(T, Y)
    assert check_canonical_cover_pair(Y, Y)
    Y2 = make_surface(0, 5 * k - 1, 32 * k - 12)
    assert check_canonical_cover_pair(Y2, make_surface(0, 5 * k - 1, 16 * k - 6))
    assert not check_canonical_cover_pair(Y, make_surface(0, 4 * k, 12 * k - 6))
