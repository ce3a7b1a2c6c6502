import os
import pathlib

import pytest

import lug

DATA = pathlib.Path(os.environ.get("LUG_DATA_DIR", pathlib.Path(__file__).resolve().parents[2] / "data"))


def test_starred_decomposition():
    a = lug.analyze_word("(1,4,2,1,3,5,3,2,1,2,0,5,2,6,4)")
    assert a["decomposition"] == "(1,4,2,1,3*,5,3,2*,1,2,0,5,2*,6,4*)"


def test_trivial_word():
    a = lug.analyze_word("(0)")
    assert a["crossings"] == 0
    assert a["fraction"] == "inf"
    assert a["verdict"]["kind"] == "splittable"


def test_solve_numerator_closure():
    r = lug.solve_word("(1,1)", "numerator", "unlinker")
    assert r["winner"] == "second_mover"
    assert r["winning_role"] == "linker"


def test_whitehead_shadow():
    a = lug.analyze_shadow((DATA / "whitehead.pd").read_text())
    assert (a["crossings"], a["nsi"], a["si"]) == (5, 4, 1)


def test_worked_game_replay():
    r = lug.replay_log((DATA / "worked_game.log").read_text(), str(DATA))
    assert r["winner"] == "unlinker"


def test_game_hint_and_play():
    g = lug.Game(word="(4)", closure="denominator", first="linker")
    assert g.mover == "linker"
    g.play(0, "/")
    h = g.hint("Thm1-2-second")
    assert h["move"] == "m 1 \\"
    g.play(1, "\\")
    assert len(g.legal_moves()) == 4
    assert g.state()["plk_twice"] == 0


def test_verify_and_errors():
    assert lug.verify("Thm6-Linker-second", word="(2)", closure="denominator")["losses"] == 0
    with pytest.raises(lug.LugError, match="invalid_argument"):
        lug.solve_word("(1,1)", "sideways")
    with pytest.raises(lug.LugError):
        lug.Game(word="(1,1)", closure="denominator")
    assert "Thm4-first" in lug.strategies()
