"""Seifert data, group presentations, homology, and torsion certificates."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skeinmod.cyclotomic import CycNum
from skeinmod.mat2 import Mat2
from skeinmod.seifert import (
    BuildError,
    NoTorsionResult,
    Representation,
    SeifertData,
    TorsionCertificate,
    build_representation,
    certify,
    classify,
    format_word,
    homology,
    presentation,
    psi_evaluate,
    reverify_certificate,
    word_inverse,
    word_mul,
)

FIVE_INSTANCES = [
    SeifertData(0, 0, [(1, 2), (1, 2), (1, 3), (1, 3)]),
    SeifertData(0, 0, [(1, 2), (1, 3), (1, 5), (1, 7)]),
    SeifertData(-1, 0, [(1, 2), (1, 3), (1, 3)]),
    SeifertData(1, 0, []),
    SeifertData(2, 1, [(1, 2)]),
]


def seifert_datas(max_fibers=4):
    fibers = st.lists(
        st.tuples(st.integers(-5, 5), st.integers(2, 5)).filter(
            lambda f: __import__("math").gcd(f[0], f[1]) == 1
        ),
        max_size=max_fibers,
    )
    return st.builds(SeifertData, st.integers(-2, 2), st.integers(0, 2), fibers)


# ---------------------------------------------------------------------------
# data and words


def test_data_validation():
    d = SeifertData(0, 1, [(1, 2)])
    assert d.fibers == ((1, 2),)
    with pytest.raises(ValueError):
        SeifertData(0, 0, [(1, 1)])
    with pytest.raises(ValueError):
        SeifertData(0, 0, [(2, 4)])
    with pytest.raises(ValueError):
        SeifertData(0, -1)
    with pytest.raises(TypeError):
        SeifertData(0.0, 0)


def test_word_helpers():
    w = (("a", 1), ("b", -2))
    assert word_inverse(w) == (("b", 2), ("a", -1))
    assert word_mul(w, word_inverse(w)) == ()
    assert word_mul((("a", 2),), (("a", -1),)) == (("a", 1),)
    assert word_mul((("a", 1),), (("b", 1),)) == (("a", 1), ("b", 1))
    assert format_word(w) == "a b^-2"
    assert format_word(()) == "1"


@given(st.lists(st.tuples(st.sampled_from("abc"), st.integers(-2, 2).filter(bool)), max_size=6))
def test_word_inverse_cancels(letters):
    w = word_mul(tuple((s, e) for s, e in letters))
    assert word_mul(w, word_inverse(w)) == ()
    assert word_inverse(word_inverse(w)) == w


# ---------------------------------------------------------------------------
# presentations


def test_presentation_orientable():
    pres = presentation(SeifertData(0, 0, [(1, 2), (1, 3)]))
    assert pres.generators == ("q1", "q2", "h")
    # two centrality relators, two fiber relators, one long relator
    assert len(pres.relators) == 5
    assert (("q1", 2), ("h", 1)) in pres.relators
    assert (("q1", 1), ("q2", 1)) in pres.relators


def test_presentation_with_genus_and_boundary():
    pres = presentation(SeifertData(1, 1, [(1, 2)]))
    assert pres.generators == ("a1", "b1", "q1", "c1", "h")
    long = pres.relators[-1]
    assert long[:2] == (("q1", 1), ("c1", 1))
    assert long[2:] == (("a1", 1), ("b1", 1), ("a1", -1), ("b1", -1))


def test_presentation_nonorientable():
    pres = presentation(SeifertData(-1, 0, [(1, 2)]))
    assert pres.generators == ("a1", "q1", "h")
    assert (("a1", 1), ("h", 1), ("a1", -1), ("h", 1)) in pres.relators
    assert pres.relators[-1] == (("q1", 1), ("a1", 2))


# ---------------------------------------------------------------------------
# homology


HOMOLOGY_ANCHORS = [
    (SeifertData(1, 0, []), [0, 0, 0]),
    (SeifertData(0, 0, [(1, 2), (1, 2), (1, 3), (1, 3)]), [60]),
    (SeifertData(0, 0, [(1, 2), (1, 3), (1, 5), (1, 7)]), [247]),
    (SeifertData(-1, 0, [(1, 2), (1, 3), (1, 3)]), [3, 24]),
    (SeifertData(2, 1, [(1, 2)]), [0, 0, 0, 0, 0]),
    (SeifertData(-1, 0, [(1, 2), (1, 3)]), [24]),
    (SeifertData(-1, 1, [(1, 2)]), [4, 0]),
    (SeifertData(0, 0, [(1, 2), (1, 2), (1, 2), (1, 2)]), [2, 2, 8]),
    (SeifertData(-2, 0, [(1, 2)]), [8, 0]),
]


@pytest.mark.parametrize("data,expected", HOMOLOGY_ANCHORS, ids=repr)
def test_homology_anchors(data, expected):
    # closed orientable sphere-base cases double as an oracle: the order of
    # the torsion equals |alpha1*...*alphak * sum(beta/alpha)|
    assert homology(data) == expected


def test_homology_order_oracle():
    import math
    from fractions import Fraction

    for data, expected in HOMOLOGY_ANCHORS:
        if data.g != 0 or data.n != 0 or not data.fibers:
            continue
        e = sum(Fraction(b, a) for b, a in data.fibers)
        prod = math.prod(a for _b, a in data.fibers)
        assert math.prod(expected) == abs(prod * e)


@given(seifert_datas())
@settings(max_examples=60, deadline=None)
def test_homology_fiber_permutation_invariance(data):
    perm = SeifertData(data.g, data.n, tuple(reversed(data.fibers)))
    assert homology(data) == homology(perm)


@given(seifert_datas())
@settings(max_examples=60, deadline=None)
def test_homology_divisibility_chain(data):
    inv = homology(data)
    torsion = [d for d in inv if d]
    for x, y in zip(torsion, torsion[1:]):
        assert y % x == 0
    assert all(d == 0 for d in inv[len(torsion):])


# ---------------------------------------------------------------------------
# classification


def test_classification_table():
    assert classify(SeifertData(0, 0, [(1, 2), (1, 3), (1, 5)])) == "no_essential_torus"
    assert classify(SeifertData(0, 2, [])) == "no_essential_torus"
    assert classify(SeifertData(0, 1, [(1, 2)])) == "no_essential_torus"
    assert classify(SeifertData(0, 0, [(1, 2)] * 4)) == "sphere_base"
    assert classify(SeifertData(0, 2, [(1, 2), (1, 3)])) == "sphere_base"
    assert classify(SeifertData(1, 0, [])) == "positive_genus"
    assert classify(SeifertData(-2, 0, [])) == "positive_genus"
    assert classify(SeifertData(-1, 0, [(1, 2), (1, 3), (1, 3)])) == "rp2_base"
    assert classify(SeifertData(-1, 0, [(1, 2), (1, 3)])) == "closed_haken_noneffective"
    assert classify(SeifertData(-1, 1, [(1, 2)])) == "rp2_small"
    assert classify(SeifertData(-1, 0, [(1, 2)])) == "no_essential_torus"
    assert classify(SeifertData(-1, 0, [])) == "no_essential_torus"


# ---------------------------------------------------------------------------
# representations


@pytest.mark.parametrize("data", FIVE_INSTANCES, ids=repr)
def test_representation_satisfies_relators(data):
    rep = build_representation(data, classify(data))
    pres = presentation(data)
    assert rep.satisfies(pres.relators)
    assert rep.satisfies(pres.relators, evaluator=rep.word_image_alt)
    for m in rep.images.values():
        assert m.det() == 1


def test_representation_common_order():
    rep = Representation({"x": Mat2.diagonal(1, 1)})
    assert rep.order == 4  # i must stay available
    assert rep.word_image((("x", 3),)) == Mat2.identity()


def test_word_image_paths_agree():
    data = FIVE_INSTANCES[0]
    rep = build_representation(data, classify(data))
    pres = presentation(data)
    for rel in pres.relators:
        assert rep.word_image(rel) == rep.word_image_alt(rel)
    w = (("q1", 2), ("h", -1), ("q2", 1))
    assert rep.word_image(w) == rep.word_image_alt(w)


def test_psi_evaluate_is_minus_trace_product():
    data = FIVE_INSTANCES[0]
    rep = build_representation(data, classify(data))
    h = (("h", 1),)
    q = (("q1", 1),)
    th = -rep.word_image(h).trace()
    tq = -rep.word_image(q).trace()
    assert psi_evaluate([h], rep) == th
    assert psi_evaluate([h, q], rep) == th * tq
    assert psi_evaluate([], rep) == CycNum.one()


def test_build_representation_rejects_exhausted_schedule():
    data = SeifertData(0, 0, [(1, 2)] * 4)
    with pytest.raises(BuildError):
        build_representation(data, "sphere_base", params={"max_candidates": 0})


# ---------------------------------------------------------------------------
# certificates


@pytest.mark.parametrize("data", FIVE_INSTANCES[:3], ids=repr)
def test_separating_certificates(data):
    cert = certify(data)
    assert isinstance(cert, TorsionCertificate)
    assert cert.kind == "separating_torus"
    assert cert.verified
    assert reverify_certificate(cert, data)
    w = cert.witness
    assert not (w["trace_fwd"] == w["trace_swapped"])
    d = cert.as_dict()
    assert d["kind"] == "separating_torus"
    assert set(d) >= {"kind", "witness", "representation", "side_conditions", "verified"}


@pytest.mark.parametrize("data", FIVE_INSTANCES[3:], ids=repr)
def test_nonseparating_certificates(data):
    cert = certify(data)
    assert cert.kind == "nonseparating_torus"
    assert cert.verified
    assert reverify_certificate(cert, data)
    assert cert.side_conditions["torus_curve_doubled_class_nonzero"] is True


def test_noneffective_closed_certificate():
    data = SeifertData(-1, 0, [(1, 2), (1, 3)])
    cert = certify(data)
    assert cert.kind == "noneffective_closed"
    assert cert.representation is None and cert.witness is None
    assert cert.verified
    assert reverify_certificate(cert, data)
    assert cert.side_conditions["homology"] == [24]


def test_noneffective_boundary_certificate():
    data = SeifertData(-1, 1, [(1, 2)])
    cert = certify(data)
    assert cert.kind == "noneffective_boundary"
    assert cert.representation is not None and cert.witness is None
    assert cert.verified


def test_no_torsion_result():
    data = SeifertData(0, 1, [(1, 2)])
    out = certify(data)
    assert isinstance(out, NoTorsionResult)
    assert out.classification == "no_essential_torus"
    assert out.as_dict()["classification"] == "no_essential_torus"


def test_reverify_rejects_tampering():
    data = FIVE_INSTANCES[0]
    cert = certify(data)

    forged = dict(cert.witness)
    forged["trace_fwd"] = forged["trace_swapped"]
    bad = TorsionCertificate(
        kind=cert.kind,
        representation=cert.representation,
        witness=forged,
        criterion_ref=cert.criterion_ref,
        side_conditions=cert.side_conditions,
    )
    assert not reverify_certificate(bad, data)

    # breaking a generator image must break the relator re-check
    images = dict(cert.representation.images)
    images["h"] = Mat2.diagonal(2, 2)
    bad2 = TorsionCertificate(
        kind=cert.kind,
        representation=Representation(images),
        witness=cert.witness,
        criterion_ref=cert.criterion_ref,
        side_conditions=cert.side_conditions,
    )
    assert not reverify_certificate(bad2, data)

    bad3 = TorsionCertificate(
        kind="unknown_kind",
        representation=cert.representation,
        witness=cert.witness,
        criterion_ref=cert.criterion_ref,
        side_conditions=cert.side_conditions,
    )
    assert not reverify_certificate(bad3, data)
