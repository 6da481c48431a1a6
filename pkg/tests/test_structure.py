import re

import pytest

from arcnest import Arc, ArcDiagram, ObjectClass, decompose, deflate, inflate, is_admissible, parse
from arcnest.enumeration import involutions, objects
from arcnest.structure import (
    DeflationError,
    Interval,
    SplitKind,
    classify_interval,
    split_permutation,
    stitch_permutation,
)

from conftest import OCOC_SMALL, CHAINED_PARTITION, OC_BLOCK, OCOC_LARGE, PERM12, ENVELOPE

M, P, S = ObjectClass.MATCHING, ObjectClass.SET_PARTITION, ObjectClass.PERMUTATION


def spans(ivs):
    return [(iv.lo, iv.hi) for iv in ivs]


def test_decompose_examples():
    assert spans(decompose(parse(OCOC_SMALL)[1])) == [(1, 10)]
    assert spans(decompose(parse(PERM12)[1])) == [(1, 9), (10, 12)]
    assert spans(decompose(parse("M n=4; 1-2,3-4")[1])) == [(1, 2), (3, 4)]
    assert spans(decompose(parse("M n=4; 2-3")[1])) == [(1, 1), (2, 3), (4, 4)]


@pytest.mark.parametrize("cls", [M, P, S])
def test_decompose_partitions_the_line(cls):
    for d in objects(cls, 6):
        for layer in ("upper", "lower"):
            ivs = decompose(d, layer)
            assert [v for iv in ivs for v in range(iv.lo, iv.hi + 1)] == list(range(1, 7))
            for a in d.arcs(layer):
                assert any(a.left in iv and a.right in iv for iv in ivs)


def test_inflate_chained_partition():
    cls, d = parse(CHAINED_PARTITION)
    inflated, m = inflate(cls, d)
    assert inflated.n == 11
    assert [(s.vertex, s.kind) for s in m.splits] == [(3, SplitKind.TRANSITORY_CO), (8, SplitKind.TRANSITORY_CO)]
    # vertex 3 splits into positions 3 (closer of 1-3) and 4 (opener of 3-5)
    assert [a[:2] for a in inflated.upper] == [(1, 3), (4, 6), (5, 7), (8, 9), (10, 11)]


def test_inflate_permutation_enhanced():
    cls, d = parse(PERM12)
    inflated, m = inflate(cls, d, enhanced=True)
    kinds = {s.vertex: s.kind for s in m.splits}
    assert kinds == {5: SplitKind.TRANSITORY_OC, 11: SplitKind.LOOP_OC}
    assert inflated.n == 14
    assert (12, 13) in [a[:2] for a in inflated.upper]  # the inflated loop


def test_inflate_identity_without_transitories():
    cls, d = parse(OCOC_SMALL)
    inflated, m = inflate(cls, d)
    assert inflated == d and m.splits == ()


@pytest.mark.parametrize("cls,enhanced", [(P, False), (P, True), (S, True), (S, False), (M, True)])
def test_deflate_inflate_identity(cls, enhanced):
    for d in objects(cls, 6):
        for layer in ("upper", "lower") if cls is S else ("upper",):
            inflated, m = inflate(cls, d, enhanced and layer == "upper", layer)
            back = deflate(inflated, m)
            assert back.arcs(layer) == d.arcs(layer)
            if layer == "upper" and enhanced and cls is S:
                assert back.loops == d.loops


def test_deflate_rejects_broken_orientation():
    cls, d = parse("P n=3; {1,2,3}")
    inflated, m = inflate(cls, d)
    # swap the two halves of vertex 2 so the closer follows the opener
    broken = ArcDiagram(inflated.n, [Arc(1, 3), Arc(2, 4)])
    with pytest.raises(DeflationError):
        deflate(broken, m)


def _classify(text, enhanced=False):
    cls, d = parse(text)
    inflated, m = inflate(cls, d, enhanced)
    return [classify_interval(inflated, iv, m) for iv in decompose(inflated)]


def test_classify_examples():
    (oc,) = _classify(OC_BLOCK)
    assert oc.kind == "OC" and oc.n == 5
    (ococ,) = _classify(OCOC_LARGE)
    assert (ococ.kind, ococ.n, ococ.k, ococ.j) == ("OCOC", 2, 4, 3)
    (small,) = _classify(OCOC_SMALL)
    assert (small.kind, small.n, small.k, small.j) == ("OCOC", 1, 3, 1)
    assert _classify("M n=1;")[0].kind == "P"
    (env,) = _classify(ENVELOPE)
    assert env.kind == "Inadmissible"


def test_admissibility_reports():
    assert is_admissible(M, parse(OCOC_SMALL)[1]).admissible
    rep = is_admissible(P, parse("P n=3; {1,2,3}")[1])
    assert rep.admissible
    assert [r["type"] for r in rep.to_json()["intervals"]] == ["OC", "OC"]
    bad = is_admissible(M, parse(ENVELOPE)[1])
    assert not bad.admissible
    assert "enveloping arc spans 3 indecomposable intervals" in bad.reason
    js = bad.to_json()
    assert js["admissible"] is False and js["intervals"][0]["type"] == "Inadmissible"


@pytest.mark.parametrize("k", [4, 5])
def test_enveloping_arc_rejected(k):
    arcs = [Arc(1, 2 * k)] + [Arc(2 * i, 2 * i + 1) for i in range(1, k)]
    rep = is_admissible(M, ArcDiagram(2 * k, arcs))
    assert not rep.admissible
    assert f"spans {k - 1} indecomposable intervals" in rep.reason


def test_enveloping_two_intervals_is_ococ():
    rep = is_admissible(M, parse("M n=6; 1-6,2-3,4-5")[1])
    assert rep.to_json()["intervals"] == [{"lo": 1, "hi": 6, "type": "OCOC", "n": 1, "k": 1, "j": 1}]


def _oracle_admissible(n, arcs):
    """Independent shape check: every interval's role word is O+C+ or O+C+O+C+
    with the OCOC incidence pattern."""
    role = {}
    for a, b in arcs:
        role[a], role[b] = "O", "C"
    mate = {a: b for a, b in arcs}
    cover = [0] * (n + 2)
    for a, b in arcs:
        for v in range(a, b):
            cover[v] += 1
    start = 1
    for v in range(1, n + 1):
        if cover[v] == 0:
            verts = [u for u in range(start, v + 1) if u in role]
            start = v + 1
            word = "".join(role[u] for u in verts)
            if not word or re.fullmatch("O+C+", word):
                continue
            m = re.fullmatch("(O+)(C+)(O+)(C+)", word)
            if not m:
                return False
            cuts = [0]
            for g in m.groups():
                cuts.append(cuts[-1] + len(g))
            block = {u: i for i in range(4) for u in verts[cuts[i]:cuts[i + 1]]}
            pattern = {(block[a], block[mate[a]]) for a in verts if a in mate}
            if not pattern <= {(0, 1), (2, 3), (0, 3)} or (0, 3) not in pattern:
                return False
    return True


def test_admissibility_matches_shape_oracle():
    for n in range(9):
        for arcs in involutions(n):
            d = ArcDiagram(n, arcs)
            pairs = [a[:2] for a in arcs]
            assert is_admissible(M, d).admissible == _oracle_admissible(n, pairs), d


def test_admissible_count_n8():
    inv = list(involutions(8))
    assert len(inv) == 764
    assert sum(is_admissible(M, ArcDiagram(8, a)).admissible for a in inv) == 756


def _insert_fixed_point(d, p):
    shift = lambda v: v + 1 if v >= p else v
    return ArcDiagram(d.n + 1, [Arc(shift(a.left), shift(a.right)) for a in d.upper])


def test_verdict_stable_under_inner_fixed_points():
    for n in range(7):
        for arcs in involutions(n):
            d = ArcDiagram(n, arcs)
            before = is_admissible(M, d)
            kinds = [bt.kind for _, bt in before.layers[0].intervals if bt.kind != "P"]
            for p in range(1, n + 2):
                after = is_admissible(M, _insert_fixed_point(d, p))
                assert after.admissible == before.admissible
                assert [bt.kind for _, bt in after.layers[0].intervals if bt.kind != "P"] == kinds


def test_split_and_stitch():
    _, d = parse(PERM12)
    up, low = split_permutation(d)
    assert [a[:2] for a in low.lower] == [(1, 8), (2, 7), (3, 6), (4, 9), (10, 12)]
    assert up.upper == d.upper and up.loops == d.loops and up.lower == ()
    assert stitch_permutation(up, low) == d


def test_split_identity_permutation():
    _, d = parse("S n=3; 1 2 3")
    up, low = split_permutation(d)
    assert [lp.left for lp in up.loops] == [1, 2, 3]
    assert low.lower == ()


def test_stitch_rejects_incompatible_halves():
    up, _ = split_permutation(parse("S n=3; 2 3 1")[1])
    with pytest.raises(ValueError):
        stitch_permutation(up, ArcDiagram(3))


def test_permutation_layers_independent():
    rep = is_admissible(S, parse(PERM12)[1])
    assert [la.layer for la in rep.layers] == ["upper", "lower"]
    assert all(r["layer"] in ("upper", "lower") for r in rep.to_json()["intervals"])


def test_interval_contains():
    assert 3 in Interval(2, 4) and 5 not in Interval(2, 4)
