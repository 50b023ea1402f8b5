import os
from fractions import Fraction

import pytest

import bihom

SOURCE = os.environ.get("BIHOM_SOURCE_DIR", os.path.join(os.path.dirname(__file__), "..", ".."))


def test_corpus_and_axioms():
    assert "osp12_classical" in bihom.corpus_names()
    for name in bihom.corpus_names():
        report = bihom.check_axioms(bihom.corpus(name))
        assert report["passed"], name


def test_osp12_twist_bracket_is_exact():
    a = bihom.build_osp12(2, 3)
    assert a.names == ["H", "X", "Y", "F", "G"]
    assert a.degrees == ["0", "0", "0", "1", "1"]
    # {F, F} = [alpha F, beta F] = (1/2)(1/3) [F, F] = (1/6) 2Y
    assert bihom.structure(a, 3, 3) == [0, 0, Fraction(1, 3), 0, 0]
    assert bihom.matrix(a.alpha)[1][1] == 4


def test_yau_twist_matches_builder():
    a = bihom.corpus("osp12_classical")
    alpha = [[Fraction(0)] * 5 for _ in range(5)]
    for i, v in enumerate([1, 4, Fraction(1, 4), Fraction(1, 2), 2]):
        alpha[i][i] = v
    ident = [[int(i == j) for j in range(5)] for i in range(5)]
    assert bihom.yau_twist(a, alpha, ident) == bihom.build_osp12(2, 1)


def test_round_trip_and_errors():
    a = bihom.corpus("z2z2_colour_example")
    assert bihom.parse_algebra(a.serialize()) == a
    with pytest.raises(bihom.ParseError):
        bihom.parse_algebra("[group]\nZ2\n[basis]\nH 0\n[product]\nH H -> 2 ~Q\n")
    with pytest.raises(bihom.NotFoundError):
        bihom.corpus("nope")
    assert issubclass(bihom.ValidationError, bihom.Error)


def test_cohomology_and_derivations():
    osp = bihom.corpus("osp12_classical")
    h1 = bihom.cohomology(osp, 1)
    assert [r["dim_cohomology"] for r in h1] == [0, 0]
    assert bihom.derivations(osp)["dimension"] == 5
    zero = bihom.corpus("zero_3")
    assert bihom.derivations(zero, "gder", gamma="0")["dimension"] == 27


def test_g_associative():
    assert bihom.g_associative(bihom.corpus("mat2_assoc"), "G6")["passed"]


def test_cli_from_python():
    code, out, _ = bihom.run_cli(["check", os.path.join(SOURCE, "tests", "fixtures", "bad_jacobi.alg")])
    assert code == 1
    assert "bihom_jacobi" in out
