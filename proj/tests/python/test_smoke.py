import pytest

import sandwich


def test_info_counts():
    c = sandwich.info("c")
    assert len(c["roots"]) == 126
    assert c["weights"] == 56
    assert c["components"] == [1, 27, 27, 1]
    assert c["type"] == "second"
    b = sandwich.info("b")
    assert (len(b["roots"]), b["delta"], b["omega_plus"]) == (72, 40, 16)
    assert sandwich.info("a", 5)["weights"] == 16


def test_lemmas_pass():
    for s in sandwich.lemmas("a", 6, ring="z9"):
        assert s["pass"], s


def test_usage_errors():
    with pytest.raises(sandwich.UsageError):
        sandwich.info("a", 4)
    with pytest.raises(sandwich.UsageError):
        sandwich.level("b", gens=["nonsense:1"])
    with pytest.raises(ValueError):
        sandwich.pi_form("b")


def test_root_element_and_decompose():
    x = sandwich.root_element("b", "-max:3", ring="z4")
    assert len(x["rows"]) == 27
    d = sandwich.decompose(x)
    ident = [[1 if i == j else 0 for j in range(27)] for i in range(27)]
    assert [[e[0] for e in row] for row in d["g1"]["rows"]] == ident
    assert [[e[0] for e in row] for row in d["u"]["rows"]] == ident
    assert d["v"]["rows"] == x["rows"]


def test_level_certificate():
    r = sandwich.level("b", gens=["max:2"], target="(2),(0)", seed=7)
    assert r["verdict"] == "reached"
    assert r["lower"] == {"plus": "(2)", "minus": "(0)"}
    assert r["witnesses"]
    again = sandwich.level("b", gens=["max:2"], target="(2),(0)", seed=7)
    assert again == r
    assert sandwich.level("b", gens=["max:2"], target="(0),(0)")["verdict"] == "exceeds"


def test_pi_form_and_normcheck():
    q = sandwich.pi_form("c")
    assert all(a < b for a, b, _ in q["q"])
    assert all(e in (1, -1) for e in q["h_signs"])
    [s] = sandwich.normcheck("b", sigma="(2),(2)", samples=20, transporter=2)
    assert s["pass"]


def test_selftest():
    assert all(s["pass"] for s in sandwich.selftest())
