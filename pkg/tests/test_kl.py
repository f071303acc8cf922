from fractions import Fraction

import pytest

from superlink import (MissingTableEntryError, SuperlinkError, UnsupportedInputError,
                       WhittakerCharacter, builtin_verma_table, gamma_summation_set,
                       verma_mult, whittaker_length, whittaker_mult)
from superlink.kl import (FiniteWeylGroup, KLPolynomial, bruhat_leq, kl_polynomial,
                          parse_mult_table)
from superlink.weights import Weight
from superlink.weyl import dot, is_dominant, longest_element


def test_polynomial_basics():
    p = KLPolynomial.of((1, 1, 0))
    assert p.coeffs == (1, 1)
    assert str(p) == "1 + q"
    assert p.evaluate(1) == 2
    assert KLPolynomial.of(()).is_zero
    assert str(KLPolynomial.of((1, 0, 2))) == "1 + 2q^2"


def test_bruhat_examples():
    S3 = FiniteWeylGroup.symmetric(3)
    e = S3.identity
    s1, s2 = S3.reflections
    for w in S3.elements():
        assert bruhat_leq(S3, e, w)
    assert bruhat_leq(S3, s1, s1.compose(s2))
    assert not bruhat_leq(S3, s1, s2)
    w0 = S3.longest()
    assert all(bruhat_leq(S3, x, w0) for x in S3.elements())


def test_kl_s3_all_one():
    S3 = FiniteWeylGroup.symmetric(3)
    for x in S3.elements():
        for w in S3.elements():
            p = kl_polynomial(S3, x, w)
            if bruhat_leq(S3, x, w):
                assert p.coeffs == (1,)
            else:
                assert p.is_zero


def test_kl_s4_pinned_pair():
    S4 = FiniteWeylGroup.symmetric(4)
    s = S4.reflections
    w = s[1].compose(s[0]).compose(s[2]).compose(s[1])  # 3412
    assert kl_polynomial(S4, s[1], w).coeffs == (1, 1)
    assert kl_polynomial(S4, S4.identity, w).coeffs == (1, 1)


def test_kl_s4_full_nontrivial_set():
    """Both singular Schubert classes of S4 and nothing else carry 1 + q."""
    S4 = FiniteWeylGroup.symmetric(4)
    nontrivial = {}
    for x in S4.elements():
        for w in S4.elements():
            p = kl_polynomial(S4, x, w)
            if not p.is_zero and p.coeffs != (1,):
                nontrivial[(x.images, w.images)] = p.coeffs
    assert all(c == (1, 1) for c in nontrivial.values())
    assert len(nontrivial) == 6
    w3412 = (3, 4, 1, 2)
    w4231 = (4, 2, 3, 1)
    xs = {w: sorted(x for (x, ww) in nontrivial if ww == w) for w in (w3412, w4231)}
    assert xs[w3412] == [(1, 2, 3, 4), (1, 3, 2, 4)]
    assert xs[w4231] == [(1, 2, 3, 4), (1, 2, 4, 3), (2, 1, 3, 4), (2, 1, 4, 3)]


def test_kl_dihedral_all_one():
    C2 = FiniteWeylGroup.type_c(2)
    for x in C2.elements():
        for w in C2.elements():
            if bruhat_leq(C2, x, w):
                assert kl_polynomial(C2, x, w).coeffs == (1,)


def test_kl_constant_term_and_degree_bound():
    for W in (FiniteWeylGroup.symmetric(4), FiniteWeylGroup.type_c(2)):
        for x in W.elements():
            for w in W.elements():
                p = kl_polynomial(W, x, w)
                if bruhat_leq(W, x, w):
                    assert p.coeffs[0] == 1
                    if x != w:
                        assert p.degree <= (W.length(w) - W.length(x) - 1) // 2


def _antidominant_regular(datum):
    return {"A1": Weight([-1, 1]), "A2": Weight([-2, 0, 2]),
            "C2": Weight([-4, -2])}[datum.describe()]


def test_verma_mult_rank1(red_a1):
    lam = _antidominant_regular(red_a1)
    W = FiniteWeylGroup(red_a1)
    e, s = W.identity, W.reflections[0]
    assert verma_mult(red_a1, lam, e, e) == 1
    assert verma_mult(red_a1, lam, s, e) == 1
    assert verma_mult(red_a1, lam, e, s) == 0
    assert verma_mult(red_a1, lam, s, s) == 1


def test_verma_mult_validations(red_a1):
    W = FiniteWeylGroup(red_a1)
    e = W.identity
    with pytest.raises(UnsupportedInputError):
        verma_mult(red_a1, Weight([0, 1]), e, e)  # singular
    with pytest.raises(UnsupportedInputError):
        verma_mult(red_a1, Weight([1, -1]), e, e)  # dominant, not anti-dominant
    with pytest.raises(UnsupportedInputError):
        verma_mult(red_a1, Weight([Fraction(1, 3), 0]), e, e)


def test_builtin_table_reductive_only(p2):
    with pytest.raises(UnsupportedInputError):
        builtin_verma_table(p2, Weight([0, 0]))


def test_gamma_summation_singleton(red_a2, p3):
    for datum in (red_a2, p3):
        zall = WhittakerCharacter.from_indices(datum, "all")
        z0 = WhittakerCharacter.from_indices(datum, "none")
        for coords in [(0, 0, 0), (1, 0, -1), (-2, 1, 0)]:
            mu = Weight(coords)
            assert len(gamma_summation_set(datum, mu, zall)) == 1
            assert gamma_summation_set(datum, mu, z0) == [mu]


def test_whittaker_mult_degenerates_at_zero(red_a2):
    lam0 = _antidominant_regular(red_a2)
    z0 = WhittakerCharacter.from_indices(red_a2, "none")
    table = builtin_verma_table(red_a2, lam0)
    for (l, gamma), value in table.entries.items():
        if l == lam0:
            assert whittaker_mult(red_a2, lam0, gamma, z0, table) == value


def test_kostant_simplicity(red_a1, red_a2, red_c2):
    for datum in (red_a1, red_a2, red_c2):
        lam0 = _antidominant_regular(datum)
        w0 = longest_element(datum)
        dom = dot(datum, w0, lam0)
        assert is_dominant(datum, dom)
        zall = WhittakerCharacter.from_indices(datum, "all")
        assert whittaker_length(datum, dom, zall) == 1
        # an anti-dominant base is already simple for every zeta
        z0 = WhittakerCharacter.from_indices(datum, "none")
        assert whittaker_length(datum, lam0, zall) == 1
        assert whittaker_length(datum, lam0, z0) == 1


def test_whittaker_length_rank1_zero_zeta(red_a1):
    z0 = WhittakerCharacter.from_indices(red_a1, "none")
    dom = Weight([0, 0])  # dominant regular: dom+rho0 = (1/2,-1/2)... check below
    assert is_dominant(red_a1, dom)
    assert whittaker_length(red_a1, dom, z0) == 2


def test_nonsingular_mult_matches_antidominant_entry(red_a2):
    lam0 = _antidominant_regular(red_a2)
    zall = WhittakerCharacter.from_indices(red_a2, "all")
    w0 = longest_element(red_a2)
    dom = dot(red_a2, w0, lam0)
    table = builtin_verma_table(red_a2, dom)
    assert whittaker_mult(red_a2, dom, dom, zall, table) \
        == table.get(dom, lam0)


def test_user_table_parsing_and_missing(red_a1):
    text = """
    # lam gamma count
    0,0 0,0 1
    0,0 -1,1 1
    """
    table = parse_mult_table(red_a1, text)
    assert table.provenance == "user-supplied"
    z0 = WhittakerCharacter.from_indices(red_a1, "none")
    assert whittaker_mult(red_a1, Weight([0, 0]), Weight([-1, 1]), z0, table) == 1
    with pytest.raises(MissingTableEntryError) as err:
        whittaker_mult(red_a1, Weight([0, 0]), Weight([5, -5]), z0, table)
    assert err.value.missing
    with pytest.raises(UnsupportedInputError):
        parse_mult_table(red_a1, "0,0 0,0 -1")
    with pytest.raises(UnsupportedInputError):
        parse_mult_table(red_a1, "0,0 0,0")
    with pytest.raises(UnsupportedInputError):
        parse_mult_table(red_a1, "0,0 0,0 2")  # diagonal must be 1


def test_length_regressions_rank2(red_a2, red_c2):
    """Recorded regressions: composition length is constant on the
    W_zeta dot orbit of the base weight and weakly decreases as the
    support grows."""
    import itertools

    from superlink import orbit_dot

    for datum in (red_a2, red_c2):
        lam0 = _antidominant_regular(datum)
        n_simple = len(datum.simple_even)
        supports = []
        for mask in itertools.product([0, 1], repeat=n_simple):
            supports.append(tuple(datum.simple_even[i]
                                  for i in range(n_simple) if mask[i]))
        for lam in sorted(orbit_dot(datum, lam0)):
            lengths = {}
            for support in supports:
                z = WhittakerCharacter.make(datum, support)
                value = whittaker_length(datum, lam, z)
                lengths[support] = value
                for mate in orbit_dot(datum, lam, support):
                    assert whittaker_length(datum, mate, z) == value
            for small, big in itertools.product(supports, supports):
                if set(small) <= set(big):
                    assert lengths[big] <= lengths[small]


def test_group_cap():
    from superlink.errors import CapExceededError
    with pytest.raises(CapExceededError):
        FiniteWeylGroup.symmetric(9)  # 9! > default cap


def test_whittaker_length_with_user_table_for_super(gl21):
    """Super families take plug-in tables; the zeta-filter still applies."""
    z1 = WhittakerCharacter.from_indices(gl21, "1")
    lam = gl21.parse_weight("0,-2|5")
    rep = gl21.parse_weight("-3,1|5")
    text = f"0,-2|5 -3,1|5 1\n0,-2|5 0,-2|5 1\n"
    table = parse_mult_table(gl21, text)
    # only the W_zeta-anti-dominant gamma counts toward the length
    assert whittaker_length(gl21, lam, z1, table) == 1
    assert whittaker_mult(gl21, lam, rep, z1, table) == 1
