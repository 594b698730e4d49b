import json

import pytest

from canonical_covers.numeric import LinForm
from canonical_covers.surfaces import (
    SingularLocus,
    SurfaceInvariants,
    check_identities,
    make_surface,
    values_equal,
)


def noether_e(chi, K2):
    return 12 * chi - K2


def test_make_surface_pair_I(n):
    S = make_surface(2, 4 * n - 3, 24 * n - 32, "pair I, X")
    assert S.chi == 4 * n - 4
    # 12(4n-4) - (24n-32)
    assert S.e == LinForm(24, -16, "n")
    assert S.e == noether_e(4 * n - 4, 24 * n - 32)


def test_make_surface_constant():
    S = make_surface(0, 0, 0)
    assert (S.chi, S.e) == (1, 12)


def test_make_surface_pair_III(n):
    S = make_surface(3, 7 * n - 4, 48 * n - 48)
    assert S.chi == 7 * n - 6
    assert S.e == 36 * n - 24


def test_identities_pass_pair_II(n):
    assert check_identities(make_surface(2, 5 * n - 3, 32 * n - 32)) == []


def test_identities_flag_tampered_chi(n):
    S = make_surface(2, 5 * n - 3, 32 * n - 32)
    bad = SurfaceInvariants(S.q, S.p_g, S.K2, S.chi + 1, S.e)
    assert len(check_identities(bad)) == 2  # chi identity and, through chi, Noether
    bad = SurfaceInvariants(S.q, S.p_g, S.K2, S.chi + 1, 12 * (S.chi + 1) - S.K2)
    assert len(check_identities(bad)) == 1


def test_identities_example3_Y(k):
    S = SurfaceInvariants(0, 7 * k - 1, 48 * k - 18, 7 * k, 12 * 7 * k - (48 * k - 18))
    assert check_identities(S) == []


def test_noether_skipped_for_unresolved_singular_model(n):
    S = SurfaceInvariants(0, 4 * n - 3, 12 * n - 16, 4 * n - 2, None,
                          singular=SingularLocus(a1_count=16 * n), resolved=False)
    assert check_identities(S) == []


def test_evaluation_matches_symbolic(n):
    S = make_surface(2, 4 * n - 3, 24 * n - 32)
    s3 = S.at(3)
    assert (s3.q, s3.p_g, s3.K2, s3.chi, s3.e) == (2, 9, 40, 8, 56)
    assert check_identities(s3) == []


def test_singular_locus_rejects_negative(k):
    with pytest.raises(ValueError):
        SingularLocus(a1_count=-1)
    with pytest.raises(ValueError):
        SingularLocus(a1_count=k - 5)


def test_json_shape(n):
    S = make_surface(2, 4 * n - 3, 24 * n - 32, "pair I, X")
    d = S.to_json()
    assert list(d) == ["label", "q", "pg", "k2", "chi", "e"]
    assert d["k2"] == {"slope_num": 24, "slope_den": 1, "offset_num": -32, "offset_den": 1, "param": "n"}
    back = SurfaceInvariants.from_json(json.loads(json.dumps(d)))
    assert back == S


def test_values_equal_mixed(k):
    assert values_equal(LinForm.const(3, "k"), 3)
    assert not values_equal(k, 1)
    assert not values_equal(k, LinForm.var("n"))
