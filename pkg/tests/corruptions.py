"""Deliberately broken catalogs used as negative controls."""

from canonical_covers.numeric import LinForm


def corrupted_catalogs():
    """Five deliberate catalog corruptions, keyed by what was broken."""
    from dataclasses import replace

    from canonical_covers.catalog import DEFAULT_CATALOG as C
    from canonical_covers.quotients import FixedPointProfile
    from canonical_covers.surfaces import make_surface

    n = LinForm.var("n")
    ex1, pair1 = C.example(1), C.pair("I")
    return {
        "wrong alpha": C.with_example(replace(ex1, X_profile=FixedPointProfile(5, 3))),
        "wrong q": C.with_example(replace(ex1, q_Y=1)),
        "off-by-one slope": C.with_pair(replace(pair1, X=make_surface(2, 4 * n - 3, 25 * n - 32))),
        "wrong fixed count": C.with_pair(replace(pair1, iota_fixed_points=17)),
        "wrong weight": C.with_example(replace(
            ex1, sections_X=replace(ex1.sections_X, weights=(0, 0, 1, 1)))),
    }
