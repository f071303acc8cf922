import itertools
from fractions import Fraction

import pytest

from superlink import (UnsupportedInputError, WhittakerCharacter, classify_simple,
                       dominant_partner, dot, in_X, in_X0, is_nonsingular,
                       orbit_dot, upsilon_of, weyl_subgroup_of)
from superlink.weights import Weight


def zeta(datum, spec):
    return WhittakerCharacter.from_indices(datum, spec)


def test_support_validation(p2):
    with pytest.raises(UnsupportedInputError):
        WhittakerCharacter.from_indices(p2, "2")  # p(2) has one simple root
    with pytest.raises(UnsupportedInputError):
        WhittakerCharacter.make(p2, p2.simple_even, {p2.simple_even[0]: Fraction(0)})
    z = WhittakerCharacter.make(p2, p2.simple_even, {p2.simple_even[0]: Fraction(2, 3)})
    assert z.values[0][1] == Fraction(2, 3)


def test_weyl_subgroup_of(p2, gl22):
    assert weyl_subgroup_of(p2, zeta(p2, "none")) == ()
    assert weyl_subgroup_of(p2, zeta(p2, "all")) == p2.simple_even
    z = zeta(gl22, "1")
    assert weyl_subgroup_of(gl22, z) == (gl22.simple_even[0],)


def test_is_nonsingular(p2, gl11):
    assert is_nonsingular(p2, zeta(p2, "all"))
    assert not is_nonsingular(p2, zeta(p2, "none"))
    # gl(1|1) has empty Pi_0, so the zero character is non-singular
    assert is_nonsingular(gl11, zeta(gl11, "none"))


def test_classify_simple_examples(p2, gl21):
    lam = Weight([0, 0])
    z0 = zeta(p2, "none")
    assert classify_simple(p2, lam, z0).rep == lam
    zall = zeta(p2, "all")
    assert classify_simple(p2, lam, zall).rep == Weight([-1, 1])
    z1 = zeta(gl21, "1")
    assert classify_simple(gl21, gl21.parse_weight("0,-2|5"), z1).rep \
        == gl21.parse_weight("-3,1|5")


def test_classify_requires_integral(osp22):
    with pytest.raises(UnsupportedInputError):
        classify_simple(osp22, osp22.parse_weight("0;1/2"), zeta(osp22, "none"))


def test_classify_constant_on_orbits_injective_across(p3, gl22):
    for datum in (p3, gl22):
        n_simple = len(datum.simple_even)
        for mask in itertools.product([0, 1], repeat=n_simple):
            support = [datum.simple_even[i] for i in range(n_simple) if mask[i]]
            z = WhittakerCharacter.make(datum, support)
            seen = {}
            for coords in itertools.product(range(-2, 3), repeat=datum.dim):
                lam = Weight(coords)
                param = classify_simple(datum, lam, z)
                orbit = orbit_dot(datum, lam, z.support)
                assert all(classify_simple(datum, mu, z) == param for mu in orbit)
                if param.rep in seen:
                    assert lam in seen[param.rep]
                else:
                    seen[param.rep] = orbit


def test_upsilon_examples(p2, osp22):
    assert upsilon_of(p2, Weight([3, 0])) == ()
    assert [r.weight for r in upsilon_of(p2, Weight([-1, 0]))] == [Weight([1, -1])]
    assert [r.weight for r in upsilon_of(osp22, osp22.parse_weight("7;-1"))] \
        == [osp22.parse_weight("0;2")]
    with pytest.raises(UnsupportedInputError):
        upsilon_of(p2, Weight([-3, 0]))  # not dominant


def test_dominant_partner_examples(p2, gl22):
    assert dominant_partner(p2, zeta(p2, "none")) == Weight([0, 0])
    assert dominant_partner(p2, zeta(p2, "all")) == Weight([-1, 0])
    nu = dominant_partner(gl22, zeta(gl22, "1"))
    assert upsilon_of(gl22, nu) == (gl22.simple_even[0],)


@pytest.mark.parametrize("key", ["gl:2,2", "gl:3,1", "gl:2,1", "osp2:2", "osp2:3",
                                 "p:3", "p:4", "osp32", "red:A1,C2", "red:A2"])
def test_dominant_partner_round_trip_all_subsets(key):
    from superlink import build_root_datum
    if key == "osp32":
        datum = build_root_datum("osp32")
    else:
        fam, _, params = key.partition(":")
        if fam == "gl":
            m, n = map(int, params.split(","))
            datum = build_root_datum("gl", m=m, n=n)
        elif fam == "osp2":
            datum = build_root_datum("osp2", n=int(params))
        elif fam == "p":
            datum = build_root_datum("p", n=int(params))
        else:
            datum = build_root_datum("reductive", factors=params)
    n_simple = len(datum.simple_even)
    for mask in itertools.product([0, 1], repeat=n_simple):
        support = [datum.simple_even[i] for i in range(n_simple) if mask[i]]
        z = WhittakerCharacter.make(datum, support)
        nu = dominant_partner(datum, z)
        assert upsilon_of(datum, nu) == z.support


def test_in_x0(p2, gl22):
    nu = dominant_partner(p2, zeta(p2, "all"))  # (-1, 0)
    assert in_X0(p2, nu, nu)
    assert not in_X0(p2, nu, nu + Weight([Fraction(1, 2), 0]))  # off the coset
    assert in_X0(p2, nu, Weight([-3, 2]))  # lam+rho0 = (-2, 2): anti-dominant for W_nu
    assert not in_X0(p2, nu, Weight([2, -3]))
    # integral difference must hold coordinate-wise through the pairings
    nu2 = dominant_partner(gl22, zeta(gl22, "1"))
    assert in_X0(gl22, nu2, nu2)


def test_in_x_type_I_identity(p3, gl22, osp24):
    for datum in (p3, gl22, osp24):
        z = WhittakerCharacter.make(datum, datum.simple_even[:1])
        nu = dominant_partner(datum, z)
        for coords in itertools.product(range(-2, 2), repeat=datum.dim):
            lam = Weight(coords)
            assert in_X(datum, nu, lam) == in_X0(datum, nu, lam)


def test_in_x_osp32(osp32):
    nu = -osp32.rho0
    lam = Weight([Fraction(-1, 2), Fraction(-3, 2)]) - osp32.rho
    assert in_X(osp32, nu, lam)
    lam2 = Weight([Fraction(1, 2), Fraction(-1, 2)]) - osp32.rho
    assert not in_X(osp32, nu, lam2)
    with pytest.raises(UnsupportedInputError):
        in_X(osp32, Weight([0, 0]), lam)  # only the full-stabilizer nu is supported


def test_in_x_members_have_integral_difference(osp32):
    nu = -osp32.rho0
    for a in range(-3, 3):
        for b in range(-3, 3):
            lam = Weight([a, Fraction(2 * b - 1, 2)])
            if in_X0(osp32, nu, lam):
                from superlink import is_integral
                assert is_integral(osp32, lam - nu)
