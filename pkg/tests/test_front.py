import random

import pytest

from legrack.front import (
    Cusp,
    CrossingPass,
    FrontCode,
    FrontError,
    builtin_fixtures,
    classical_invariants,
    cusp_operator,
    front_from_text,
    front_to_text,
    fundamental_presentation,
    kinked_unknot,
    left_trefoil,
    load_front,
    rotate_basepoint,
    save_front,
    stabilize,
    stabilized_unknot,
    standard_unknot,
    validate_front,
)


def test_validate_rejects_same_side_cusps():
    with pytest.raises(FrontError, match="alternation"):
        validate_front((Cusp("R", "U"), Cusp("R", "D")))
    # cyclic adjacency counts too
    with pytest.raises(FrontError, match="alternation"):
        validate_front((Cusp("L", "U"), Cusp("R", "D"),
                        Cusp("L", "U"), Cusp("L", "D")))


def test_validate_rejects_unbalanced_cusps():
    with pytest.raises(FrontError, match="up and one down"):
        validate_front((Cusp("R", "U"), Cusp("L", "U")))
    with pytest.raises(FrontError, match="even"):
        validate_front((Cusp("R", "U"), Cusp("L", "D"), Cusp("R", "D")))


def test_validate_rejects_bad_crossing_passes():
    base = (Cusp("R", "U"), Cusp("L", "D"))
    with pytest.raises(FrontError, match="over and one under"):
        validate_front(base + (CrossingPass(1, 1, "O"),))
    with pytest.raises(FrontError, match="repeated"):
        validate_front(base + (CrossingPass(1, 1, "O"), CrossingPass(1, 1, "O")))
    with pytest.raises(FrontError, match="inconsistent sign"):
        validate_front(base + (CrossingPass(1, 1, "O"), CrossingPass(1, -1, "U")))
    with pytest.raises(FrontError, match="malformed"):
        validate_front(base + (CrossingPass(1, 2, "O"),))
    with pytest.raises(FrontError, match="malformed"):
        validate_front((Cusp("X", "U"), Cusp("L", "D")))


def test_cusp_operator_convention():
    assert cusp_operator("L", "U") == "ul"
    assert cusp_operator("R", "U") == "ur"
    assert cusp_operator("L", "D") == "dl"
    assert cusp_operator("R", "D") == "dr"


def test_unknot_invariants():
    inv = classical_invariants(standard_unknot())
    assert (inv.tb, inv.rot) == (-1, 0)
    assert (inv.writhe, inv.up_cusps, inv.down_cusps) == (0, 1, 1)


def test_trefoil_invariants():
    inv = classical_invariants(left_trefoil())
    assert (inv.tb, inv.rot) == (-6, -1)
    assert (inv.writhe, inv.up_cusps, inv.down_cusps) == (-3, 4, 2)


def test_rot_plus_tb_is_writhe_minus_up_cusps():
    for code in builtin_fixtures().values():
        inv = classical_invariants(code)
        assert inv.rot + inv.tb == inv.writhe - inv.up_cusps
        assert inv.rot - inv.tb == inv.down_cusps - inv.writhe


def test_stabilization_bookkeeping():
    code = standard_unknot()
    inv = classical_invariants(code)
    plus = stabilize(code, 1)
    minus = stabilize(code, -1)
    for stabbed, drot in ((plus, 1), (minus, -1)):
        got = classical_invariants(stabbed)
        assert got.tb == inv.tb - 1
        assert got.rot == inv.rot + drot


def test_random_stabilization_sequences():
    rng = random.Random(11)
    for _ in range(20):
        code = standard_unknot()
        tb, rot = -1, 0
        for _ in range(rng.randrange(1, 9)):
            sign = rng.choice((1, -1))
            pos = rng.randrange(0, len(code.events) + 1)
            code = stabilize(code, sign, position=pos)
            tb -= 1
            rot += sign
        inv = classical_invariants(code)
        assert (inv.tb, inv.rot) == (tb, rot)


def test_stabilize_rejects_bad_arguments():
    with pytest.raises(FrontError):
        stabilize(standard_unknot(), 0)
    with pytest.raises(FrontError):
        stabilize(standard_unknot(), 1, position=99)


def test_basepoint_rotation_preserves_invariants():
    for code in builtin_fixtures().values():
        inv = classical_invariants(code)
        for k in range(len(code.events)):
            assert classical_invariants(rotate_basepoint(code, k)) == inv


def test_unknot_presentation():
    pres = fundamental_presentation(standard_unknot())
    assert pres.generators == 1
    assert pres.relations == ()
    assert pres.closure_word == ("ur", "dl")


def test_kinked_unknot_presentation():
    pres = fundamental_presentation(kinked_unknot((-1,)))
    assert pres.generators == 1
    (rel,) = pres.relations
    assert (rel.in_arc, rel.out_arc, rel.over_arc) == (0, 0, 0)
    assert rel.word == ("ur", "dl")
    assert rel.sign == -1


def relabelings(pres):
    """All cyclic arc relabelings of a presentation's relation set."""
    m = pres.generators
    out = []
    for shift in range(m):
        out.append({
            ((r.in_arc + shift) % m, (r.out_arc + shift) % m,
             (r.over_arc + shift) % m, r.word, r.sign)
            for r in pres.relations})
    return out


def test_trefoil_presentation_matches_known_relations():
    pres = fundamental_presentation(left_trefoil())
    assert pres.generators == 3
    expected = {
        (0, 1, 2, ("ur", "ul"), -1),
        (1, 2, 0, ("dr", "ul"), -1),
        (2, 0, 1, ("ur", "dl"), -1),
    }
    assert expected in relabelings(pres)


def test_presentation_invariant_under_basepoint_rotation():
    code = left_trefoil()
    reference = relabelings(fundamental_presentation(code))
    for k in range(len(code.events)):
        rotated = fundamental_presentation(rotate_basepoint(code, k))
        assert rotated.generators == 3
        got = {(r.in_arc, r.out_arc, r.over_arc, r.word, r.sign)
               for r in rotated.relations}
        assert got in reference


@pytest.mark.parametrize("name", sorted(builtin_fixtures()))
def test_presentation_letter_accounting(name):
    code = builtin_fixtures()[name]
    inv = classical_invariants(code)
    pres = fundamental_presentation(code)
    words = [r.word for r in pres.relations] or [pres.closure_word]
    letters = [letter for w in words for letter in w]
    assert len(letters) == inv.up_cusps + inv.down_cusps
    assert sum(letter in ("ul", "ur") for letter in letters) == inv.up_cusps
    assert sum(letter in ("dl", "dr") for letter in letters) == inv.down_cusps
    # cusp sides alternate, so letters alternate between left and right maps
    full = [letter for w in words for letter in w]
    sides = ["L" if letter in ("ul", "dl") else "R" for letter in full]
    for a, b in zip(sides, sides[1:] + sides[:1]):
        assert a != b


def test_presentation_arc_structure():
    for code in builtin_fixtures().values():
        pres = fundamental_presentation(code)
        if not pres.relations:
            continue
        m = pres.generators
        assert len(pres.relations) == m
        assert [r.in_arc for r in pres.relations] == list(range(m))
        assert [r.out_arc for r in pres.relations] == \
            [(i + 1) % m for i in range(m)]
        assert {r.over_arc for r in pres.relations} <= set(range(m))


def test_stabilized_unknot_variants_differ_but_agree_on_invariants():
    a = stabilized_unknot(2, 3)
    b = stabilized_unknot(2, 3, alternate=True)
    assert a.events != b.events
    assert classical_invariants(a) == classical_invariants(b)


def test_text_roundtrip(tmp_path):
    for name, code in builtin_fixtures().items():
        text = front_to_text(code)
        assert front_from_text(text).events == code.events
        path = tmp_path / f"{name}.front"
        save_front(code, path)
        assert load_front(path).events == code.events


def test_text_parse_errors():
    with pytest.raises(FrontError, match="unrecognized"):
        front_from_text("CUSP R U\nWIBBLE\n")
    with pytest.raises(FrontError, match="bad crossing id"):
        front_from_text("CUSP R U\nCUSP L D\nX q + O\n")
    with pytest.raises(FrontError):  # validation still applies
        front_from_text("CUSP R U\nCUSP R D\n")


def test_text_comments_ignored():
    text = "# unknot\nCUSP R U  # first\n\nCUSP L D\n"
    assert front_from_text(text).events == standard_unknot().events


def test_fixture_catalog():
    fixtures = builtin_fixtures()
    assert len(fixtures) == 12
    for code in fixtures.values():
        assert isinstance(code, FrontCode)
        validate_front(code.events)
