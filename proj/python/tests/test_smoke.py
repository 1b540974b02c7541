import pytest

import steinerloop as sl


def test_order_ten_loop():
    loop = sl.steiner_loop_10()
    assert loop.order == 10
    assert sl.is_steiner_loop(loop)
    assert sl.check_identity("ID4", loop) == (True, None, 1000)
    holds, witness, _ = sl.check_identity("MOUFANG", loop)
    assert not holds
    assert set(witness) == {"x", "y", "z"}
    assert sl.check_identity("EXTRA10", loop)[0]


def test_mt_deciders_agree():
    for loop in [sl.steiner_loop_10(), sl.sts_to_loop(sl.sts13_classes()[0]), sl.elementary_abelian_loop(3)]:
        verdicts = {sl.satisfies_mt(loop, m)[0] for m in ("def", "prop1", "fano")}
        assert len(verdicts) == 1


def test_round_trips():
    s = sl.affine_ag23()
    assert sl.quasigroup_to_sts(sl.sts_to_quasigroup(s)) == s
    assert sl.loop_to_sts(sl.sts_to_loop(s)) == s
    assert sl.read_sts(sl.format_sts(s)) == s
    loop = sl.steiner_loop_10()
    assert sl.LoopTable(loop.rows) == loop


def test_pasch_and_enumeration():
    assert len(sl.pasch_configs(sl.fano())) == 7
    assert sl.pasch_configs(sl.affine_ag23()) == []
    (nine,) = sl.enumerate_sts(9)
    assert sl.are_isomorphic(nine, sl.bose(1)) is not None
    with pytest.raises(sl.PreconditionError):
        sl.enumerate_sts(13)


def test_errors():
    with pytest.raises(sl.ValidationError):
        sl.TripleSystem(3, [(0, 1, 1)])
    with pytest.raises(sl.ParseError):
        sl.parse_identity("x(y = x")
    with pytest.raises(ValueError):
        sl.LoopTable([[0, 1], [1, 1]])
    assert sl.parse_identity("x(y(xz))=((xy)x)z") == "x(y(xz)) = xyxz"


def test_explorer_and_cli():
    found = sl.find_identities(sl.elementary_abelian_loop(3), [("loop10", sl.steiner_loop_10())], max_leaves=4)
    assert found
    for identity, witness in found:
        assert witness == "loop10"
        assert sl.check_identity(identity, sl.elementary_abelian_loop(3))[0]
        assert not sl.check_identity(identity, sl.steiner_loop_10())[0]
    code, out, _ = sl.run_cli(["construct", "fano"])
    assert code == 0
    assert sl.read_sts(out) == sl.fano()


def test_explorer_default_witnesses():
    found = sl.find_identities(sl.steiner_loop_10(), max_leaves=5)
    assert found
    assert {w for _, w in found} <= {"sts13-1", "sts13-2", "pg3", "bose2"}
