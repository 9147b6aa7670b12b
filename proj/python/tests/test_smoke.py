import json
from fractions import Fraction

import pytest

import chenruan


def test_bernoulli():
    assert chenruan.bernoulli(1) == Fraction(-1, 2)
    assert chenruan.bernoulli(2) == Fraction(1, 6)
    assert chenruan.bernoulli(3) == 0


def test_constants():
    assert chenruan.constants(2) == {"thaddeus_number": 4, "v": Fraction(1, 4)}
    assert chenruan.constants(3)["v"] == Fraction(7, 2)


def test_pairing_and_loci():
    assert chenruan.weil_pairing(2, "1000", "0100") == 1
    assert chenruan.weil_pairing(2, "1000", "0010") == 0
    assert chenruan.fixed_locus_relation(2, "1000", "1000") == "SameLocus"
    assert chenruan.fixed_locus_relation(2, "1000", "0100") == "FinitePoints(4)"
    assert len(chenruan.enumerate_labels(2)) == 16


def test_sector_data():
    assert chenruan.degree_shift([(Fraction(1, 2), 2), (0, 1)]) == 1
    assert chenruan.eigen_data_for(2, "1000") == [(0, 1), (Fraction(1, 2), 2)]
    assert chenruan.describe_sector(2, "1000")["w0_dim"] == 2
    assert chenruan.obstruction_rank(2, "1000", "0100", "1100") >= 0


def test_poincare():
    assert chenruan.untwisted_poincare(2) == [1, 0, 1, 4, 1, 0, 1]
    assert chenruan.cr_poincare(2) == [1, 0, 16, 4, 16, 0, 1]


def test_ring_operations():
    ring = chenruan.Ring(2)
    assert ring.product("2*k", "4*k") == "8*k^2"
    assert ring.pair("k^3", "1") == Fraction(1, 4)
    assert ring.three_point("[1000; 1]", "[0100; 1]", "[1100; 1]") != 0
    assert chenruan.normalize("k + k - [0101; e1.e1]", 2) == "2*k"


def test_parse_error():
    with pytest.raises(chenruan.ParseError):
        chenruan.normalize("[10; 1]", 2)
    with pytest.raises(ValueError):
        chenruan.normalize("k^", 2)


def test_verify():
    ring = chenruan.Ring(2)
    for suite in ("assoc", "frobenius", "graded", "pairing"):
        report = ring.verify(suite)
        assert report["violations"] == []
        assert report["checked"] > 0
    assert ring.verify("assoc", samples=50, seed=3)["checked"] == 50


def test_table_roundtrip():
    text = chenruan.table_json(2)
    doc = json.loads(text)
    assert doc["genus"] == 2 and len(doc["basis"]) == 34
    assert chenruan.replay_table(text)["mismatches"] == []


def test_cli():
    status, out, _ = chenruan.run_cli(["constants", "--genus", "2"])
    assert status == 0 and "v: 1/4" in out
    status, _, _ = chenruan.run_cli(["nonsense"])
    assert status == 1
