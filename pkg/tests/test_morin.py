"""Iterated-determinant tower and singularity classification."""

from fractions import Fraction

import numpy as np
import pytest

from morin_census import (
    GeneralMap,
    Polynomial,
    classify,
    classify_from_values,
    corank_at,
    jet_tower_values,
    linear_conjugate,
    morin_tower,
    random_map,
)
from morin_census.linalg import random_unimodular_matrix

X1, X2, X3, X4 = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
ORIGIN = np.zeros(4)


def _poly4(terms):
    return Polynomial(4, terms)


def fold_form():
    return GeneralMap((_poly4({X1: 1}), _poly4({X2: 1}), _poly4({X3: 1}),
                       _poly4({(0, 0, 0, 2): 1})))


def cusp_form():
    return GeneralMap((_poly4({X1: 1}), _poly4({X2: 1}), _poly4({X3: 1}),
                       _poly4({(0, 0, 0, 3): 1, (1, 0, 0, 1): 1})))


def swallowtail_form():
    return GeneralMap((_poly4({X1: 1}), _poly4({X2: 1}), _poly4({X3: 1}),
                       _poly4({(0, 0, 0, 4): 1, (1, 0, 0, 2): 1, (0, 1, 0, 1): 1})))


def corank2_form():
    return GeneralMap((_poly4({X1: 1}), _poly4({X2: 1}),
                       _poly4({(0, 0, 2, 0): 1}), _poly4({(0, 0, 0, 2): 1})))


# ------------------------------------------------------------- tower algebra
def test_tower_base_is_jacobian_determinant():
    """Level zero of the tower is J itself: 2*x4 for the fold form."""
    t = morin_tower(fold_form(), k_max=1)
    assert t.base == _poly4({(0, 0, 0, 1): 2})


def test_tower_levels_fold():
    """J_{1,4} of the fold form is the constant 2."""
    t = morin_tower(fold_form(), k_max=1)
    assert t.level(1, 3) == _poly4({(0, 0, 0, 0): 2})


def test_tower_levels_cusp():
    """Hand-computed tower for the cusp form."""
    t = morin_tower(cusp_form(), k_max=2)
    assert t.base == _poly4({(0, 0, 0, 2): 3, X1: 1})
    assert t.level(1, 3) == _poly4({(0, 0, 0, 1): 6})
    assert t.level(2, 3) == _poly4({(0, 0, 0, 0): 6})
    # replacing a different row picks up the unfolding direction
    assert t.level(1, 0) == _poly4({X1: 1, (0, 0, 0, 2): -3})


def test_tower_swallowtail_top_level_constant():
    """The swallowtail form bottoms out at J_{3,4} = 24."""
    t = morin_tower(swallowtail_form(), k_max=3)
    assert t.level(3, 3) == _poly4({(0, 0, 0, 0): 24})


def test_graph_form_tower_is_iterated_partial():
    """For F = (x1,x2,x3,g), J_{r,4} equals the (r+1)-st x4-derivative of g."""
    rng = np.random.default_rng(12)
    for _ in range(5):
        terms = {}
        for _ in range(6):
            exps = tuple(int(e) for e in rng.integers(0, 3, size=4))
            terms[exps] = Fraction(int(rng.integers(-4, 5)))
        g = Polynomial(4, terms)
        F = GeneralMap((_poly4({X1: 1}), _poly4({X2: 1}), _poly4({X3: 1}), g))
        t = morin_tower(F, k_max=3)
        deriv = g.partial(3)
        assert t.base == deriv
        for r in range(1, 4):
            deriv = deriv.partial(3)
            assert t.level(r, 3) == deriv


def test_tower_k_max_guard():
    """Unreasonably deep towers are refused."""
    with pytest.raises(ValueError):
        morin_tower(fold_form(), k_max=7)


# ------------------------------------------------------------- classification
def test_normal_forms_classify_exactly():
    """The four reference germs classify to their textbook classes at 0."""
    assert classify(fold_form(), ORIGIN).label == "A1"
    assert classify(cusp_form(), ORIGIN).label == "A2"
    assert classify(swallowtail_form(), ORIGIN).label == "A3"
    assert classify(corank2_form(), ORIGIN).label == "corank_ge_2"


def test_regular_point_classification():
    """Nonvanishing Jacobian determinant short-circuits to 'regular'."""
    v = classify(fold_form(), np.array([0.0, 0.0, 0.0, 1.0]))
    assert v.label == "regular"
    assert v.to_dict()["class"] == "regular"


def test_indeterminate_when_tower_exhausts():
    """A germ deeper than k_max reports 'indeterminate'."""
    F = GeneralMap((_poly4({X1: 1}), _poly4({X2: 1}), _poly4({X3: 1}),
                    _poly4({(0, 0, 0, 6): 1})))
    v = classify(F, ORIGIN, k_max=4)
    assert v.label == "indeterminate"


def test_morin_class_serialization():
    """Morin verdicts serialize with class label, k, and diagnostics."""
    d = classify(cusp_form(), ORIGIN).to_dict()
    assert d["class"] == "A2" and d["k"] == 2
    assert d["diagnostics"]["corank"] == 1


def test_unimodular_conjugation_preserves_class():
    """Left-right composition with exact unimodular matrices keeps the class."""
    rng = np.random.default_rng(5)
    for form, label in ((fold_form(), "A1"), (cusp_form(), "A2")):
        for _ in range(5):
            M = random_unimodular_matrix(4, rng)
            L = random_unimodular_matrix(4, rng)
            G = GeneralMap(tuple(linear_conjugate(form.components, M, L)))
            assert classify(G, ORIGIN).label == label


def test_jet_values_match_symbolic_tower():
    """Jet-based tower values equal symbolic tower evaluation."""
    F = random_map((2, 2, 2, 2), seed=8, kind="complex")
    G = GeneralMap(F.components)
    p = np.array([0.3 - 0.1j, -0.7 + 0.2j, 0.5j, 1.1])
    base, levels = jet_tower_values(G, p, k_max=2)
    t = morin_tower(G, k_max=2)
    assert abs(base - t.base.evaluate(p)) < 1e-8 * (1 + abs(base))
    for k in range(1, 3):
        for i in range(4):
            ref = t.level(k, i).evaluate(p)
            assert abs(levels[k - 1][i] - ref) < 1e-6 * (1 + abs(ref))


def test_classify_from_values_round_trip():
    """Re-deciding from precomputed jet values gives the same class."""
    F = cusp_form()
    base, levels = jet_tower_values(F, ORIGIN, k_max=4)
    v = classify_from_values(F, ORIGIN, base, levels)
    assert v.label == classify(F, ORIGIN).label == "A2"


def test_classification_scale_invariant():
    """Scaling the point along the fold cone does not change the verdict."""
    F = random_map((2, 2, 2, 2), seed=8, kind="complex")
    G = GeneralMap(F.components)
    from morin_census import critical_points_on_lines
    p = np.asarray(critical_points_on_lines(F, lines=1, seed=0)[0])
    for scale in (1.0, 10.0, 1000.0):
        assert classify(G, scale * p).label == "A1"


def test_corank_at_exact_and_float():
    """corank is 1 on the fold form and 2 on the doubled form, both kinds."""
    assert corank_at(fold_form(), ORIGIN) == 1
    assert corank_at(corank2_form(), ORIGIN) == 2
    Fc = GeneralMap(tuple(c.as_complex() for c in corank2_form().components))
    assert corank_at(Fc, ORIGIN) == 2


def test_general_map_requires_square():
    """GeneralMap rejects component counts different from n_vars."""
    with pytest.raises(ValueError):
        GeneralMap((_poly4({X1: 1}),))
