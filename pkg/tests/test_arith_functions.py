import pytest

from sunroots.arith_functions import (
    REGISTERED,
    ArithFnSpec,
    Kind,
    divisors,
    eval_gbar,
    eval_gell,
    eval_psi,
    eval_sigma,
    gbar,
    gell,
    sigma,
)


def test_divisors():
    assert divisors(1) == [1]
    assert divisors(6) == [1, 2, 3, 6]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(49) == [1, 7, 49]
    with pytest.raises(ValueError):
        divisors(0)


def test_divisors_brute_force():
    for n in range(1, 400):
        assert divisors(n) == [d for d in range(1, n + 1) if n % d == 0]


def test_examples():
    assert eval_sigma(1, 2) == 3
    assert eval_sigma(2, 2) == 5
    assert eval_sigma(2, 3) == 10
    assert eval_psi(0, 7) == 1
    assert eval_psi(1, 2) == 2
    assert eval_psi(2, 3) == 9
    assert eval_gbar(1) == 1
    assert eval_gbar(2) == 2
    assert eval_gbar(4) == 4
    assert eval_gell(1, 10) == 1
    assert eval_gell(2, 6) == 12
    assert eval_gell(3, 2) == 7


def test_domain_errors():
    for fn in (lambda: eval_sigma(1, 0), lambda: eval_psi(1, 0), lambda: eval_gbar(0),
               lambda: eval_gell(2, 0), lambda: eval_gell(0, 3)):
        with pytest.raises(ValueError):
            fn()


@pytest.mark.parametrize("g", REGISTERED, ids=lambda g: g.name)
def test_normalized_and_positive(g):
    assert g(1) == 1
    assert all(g(n) >= 1 for n in range(1, 500))


def test_g2_is_sigma():
    s = sigma(1)
    g2 = gell(2)
    assert all(g2(n) == s(n) for n in range(1, 10**4 + 1))


def test_gbar_parity():
    s = sigma(1)
    for n in range(1, 2000):
        if n % 2:
            assert gbar()(n) == s(n)
        else:
            assert gbar()(n) < s(n)


def test_parse_roundtrip():
    for text in ("sigma:0", "sigma:2", "psi:0", "psi:1", "gbar", "gell:1", "gell:4"):
        spec = ArithFnSpec.parse(text)
        assert spec.name == text
        assert ArithFnSpec.parse(spec.name) == spec
    assert ArithFnSpec.parse(" sigma:1 ").kind is Kind.SIGMA


@pytest.mark.parametrize("text", ["", "sigma", "sigma:", "sigma:-1", "sigma:x", "gbar:1",
                                  "gell:0", "psi:1.5", "tau:1"])
def test_parse_errors(text):
    with pytest.raises(ValueError):
        ArithFnSpec.parse(text)


def test_specs_are_hashable_values():
    assert sigma(1) == ArithFnSpec(Kind.SIGMA, 1)
    assert len({sigma(1), sigma(1), gbar()}) == 2
