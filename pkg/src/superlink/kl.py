"""Kazhdan-Lusztig polynomials and standard-module composition multiplicities.

The KL engine works over a finite Weyl group presented as a parabolic
subgroup of a datum's signed-permutation group (type A / type C products).
Bruhat order uses the subword lifting property on reduced words; the KL
recursion is the classical one on a left descent s of w:

    P_{x,w} = q^{1-c} P_{sx,sw} + q^c P_{x,sw}
              - sum_z mu(z, sw) q^{(l(w)-l(z))/2} P_{x,z}

with c = 1 iff sx < x, the sum over x <= z <= sw with sz < z, and mu(z, v)
the coefficient of q^{(l(v)-l(z)-1)/2} in P_{z,v}.  An independent
R-polynomial inversion of the same table lives in the oracle module.

Multiplicity conventions, pinned by the rank-1 sanity triple (an
anti-dominant Verma is simple; the dominant rank-1 Verma has length 2):
for anti-dominant regular integral lam,

    [M(w . lam) : L(x . lam)] = P_{w0 w, w0 x}(1).

Standard Whittaker multiplicities reduce to these: for integral mu the sum

    [M(lam, zeta) : L(mu, zeta)] = sum_gamma [M(lam) : L(gamma)]

runs over W_zeta-anti-dominant gamma with mu in the W_zeta dot orbit, and
that set is asserted to be a singleton.  Built-in tables exist only for
reductive data with regular integral lam; anything else takes a
user-supplied table (`<weight> <weight> <count>` lines, `#` comments).

Concurrency: the per-group memo dicts are the only shared state.  Entries
are pure values keyed by element images and are written through single
atomic dict assignments, so concurrent calls return identical results;
at worst two threads duplicate a computation before one wins the insert.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (CapExceededError, MissingTableEntryError, SuperlinkError,
                     UnsupportedInputError)
from .root_data import Root, RootDatum, build_reductive, is_integral
from .weights import Weight
from .weyl import (WeylElement, antidominant_rep, is_antidominant, length,
                   longest_element, orbit_dot, reduced_word,
                   reflection_element, stabilizer_roots, weyl_order)

KL_GROUP_CAP = 40320  # memory guard on |W| for the memoized recursion


def _padd(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    m = max(len(a), len(b))
    return tuple((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                 for i in range(m))


def _pshift(a: tuple[int, ...], k: int) -> tuple[int, ...]:
    return ((0,) * k + a) if a != () else ()


def _pscale(a: tuple[int, ...], c: int) -> tuple[int, ...]:
    return tuple(c * v for v in a)


def _pnorm(a: Iterable[int]) -> tuple[int, ...]:
    out = list(a)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class KLPolynomial:
    """Polynomial in q with nonnegative integer coefficients, constant first."""

    coeffs: tuple[int, ...]

    @staticmethod
    def of(coeffs: Iterable[int]) -> "KLPolynomial":
        return KLPolynomial(_pnorm(coeffs))

    @property
    def is_zero(self) -> bool:
        return self.coeffs == ()

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def evaluate(self, value: int = 1) -> int:
        total = 0
        for c in reversed(self.coeffs):
            total = total * value + c
        return total

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                q = "q" if i == 1 else f"q^{i}"
                terms.append(q if c == 1 else f"{c}{q}")
        return " + ".join(terms)


class FiniteWeylGroup:
    """A parabolic Weyl group with cached lengths, words and KL data."""

    def __init__(self, datum: RootDatum, sub: Sequence[Root] | None = None,
                 cap: int = KL_GROUP_CAP):
        self.datum = datum
        self.sub = tuple(sub) if sub is not None else datum.simple_even
        self.order = weyl_order(datum, self.sub)
        if self.order > cap:
            raise CapExceededError(f"|W| = {self.order} exceeds the cap {cap}")
        self.simple = list(self.sub)
        self.reflections = [reflection_element(datum, r) for r in self.simple]
        self.identity = WeylElement.identity(datum.dim)
        self._pos = frozenset(r.weight for r in datum.even_positive)
        self._elements: list[WeylElement] | None = None
        self._length: dict[tuple[int, ...], int] = {}
        self._word: dict[tuple[int, ...], tuple[int, ...]] = {}
        self._bruhat: dict[tuple[tuple[int, ...], tuple[int, ...]], bool] = {}
        self._kl: dict[tuple[tuple[int, ...], tuple[int, ...]], KLPolynomial] = {}

    @staticmethod
    def symmetric(n: int) -> "FiniteWeylGroup":
        """The symmetric group S_n as the type A_{n-1} Weyl group."""
        return FiniteWeylGroup(build_reductive([("A", n - 1)]))

    @staticmethod
    def type_c(n: int) -> "FiniteWeylGroup":
        """The hyperoctahedral group of rank n."""
        return FiniteWeylGroup(build_reductive([("C", n)]))

    def elements(self) -> list[WeylElement]:
        if self._elements is None:
            seen = {self.identity}
            frontier = [self.identity]
            while frontier:
                nxt = []
                for w in frontier:
                    for g in self.reflections:
                        prod = g.compose(w)
                        if prod not in seen:
                            seen.add(prod)
                            nxt.append(prod)
                frontier = nxt
            self._elements = sorted(seen, key=lambda w: (self.length(w), w.images))
        return self._elements

    def length(self, w: WeylElement) -> int:
        key = w.images
        if key not in self._length:
            self._length[key] = length(self.datum, w, self.sub)
        return self._length[key]

    def word(self, w: WeylElement) -> tuple[int, ...]:
        """Reduced word as indices into the simple list."""
        key = w.images
        if key not in self._word:
            roots = reduced_word(self.datum, w, self.sub)
            self._word[key] = tuple(self.simple.index(r) for r in roots)
        return self._word[key]

    def from_word(self, word: Iterable[int]) -> WeylElement:
        w = self.identity
        for i in word:
            if not 0 <= int(i) < len(self.simple):
                raise UnsupportedInputError(
                    f"word letter {i} out of range 0..{len(self.simple) - 1}")
            w = w.compose(self.reflections[int(i)])
        return w

    def left_mult(self, i: int, w: WeylElement) -> WeylElement:
        return self.reflections[i].compose(w)

    def left_descent(self, w: WeylElement) -> int | None:
        """Some i with l(s_i w) < l(w), or None for the identity."""
        inv = w.inverse()
        for i, alpha in enumerate(self.simple):
            if inv.apply(alpha.weight) not in self._pos:
                return i
        return None

    def longest(self) -> WeylElement:
        return longest_element(self.datum, self.sub)


def bruhat_leq(W: FiniteWeylGroup, x: WeylElement, y: WeylElement) -> bool:
    """Bruhat order via the lifting property on a reduced word of y."""
    key = (x.images, y.images)
    if key in W._bruhat:
        return W._bruhat[key]
    lx, ly = W.length(x), W.length(y)
    if lx > ly:
        result = False
    elif x == y:
        result = True
    elif lx == ly:
        result = False
    else:
        i = W.left_descent(y)
        yy = W.left_mult(i, y)
        sx = W.left_mult(i, x)
        if W.length(sx) < lx:
            result = bruhat_leq(W, sx, yy)
        else:
            result = bruhat_leq(W, x, yy)
    W._bruhat[key] = result
    return result


def kl_polynomial(W: FiniteWeylGroup, x: WeylElement, w: WeylElement) -> KLPolynomial:
    """The Kazhdan-Lusztig polynomial P_{x,w}, memoized per group."""
    key = (x.images, w.images)
    cached = W._kl.get(key)
    if cached is not None:
        return cached
    if not bruhat_leq(W, x, w):
        result = KLPolynomial.of(())
    elif x == w:
        result = KLPolynomial.of((1,))
    else:
        i = W.left_descent(w)
        v = W.left_mult(i, w)
        sx = W.left_mult(i, x)
        c = 1 if W.length(sx) < W.length(x) else 0
        acc = _padd(_pshift(kl_polynomial(W, sx, v).coeffs, 1 - c),
                    _pshift(kl_polynomial(W, x, v).coeffs, c))
        lw, lv = W.length(w), W.length(v)
        for z in W.elements():
            lz = W.length(z)
            if lz > lv or (lv - lz) % 2 == 0:
                continue
            if W.length(W.left_mult(i, z)) >= lz:
                continue
            if not (bruhat_leq(W, x, z) and bruhat_leq(W, z, v)):
                continue
            mu = kl_polynomial(W, z, v).coeffs
            deg = (lv - lz - 1) // 2
            mu_c = mu[deg] if deg < len(mu) else 0
            if mu_c == 0:
                continue
            term = _pscale(_pshift(kl_polynomial(W, x, z).coeffs, (lw - lz) // 2), -mu_c)
            acc = _padd(acc, term)
        result = KLPolynomial.of(acc)
        if result.coeffs and any(cf < 0 for cf in result.coeffs):
            raise SuperlinkError(f"negative KL coefficient at {key}: {result.coeffs}")
    W._kl[key] = result
    return result


@dataclass
class MultTable:
    """Composition multiplicities [M(lam) : L(gamma)], keyed by weight pairs."""

    entries: dict[tuple[Weight, Weight], int]
    provenance: str = "user-supplied"

    def get(self, lam: Weight, gamma: Weight) -> int:
        try:
            return self.entries[(lam, gamma)]
        except KeyError:
            raise MissingTableEntryError([(lam, gamma)]) from None

    def gammas_for(self, lam: Weight) -> list[Weight]:
        return sorted(g for (l, g) in self.entries if l == lam)


def _require_regular_antidominant(datum: RootDatum, lam: Weight) -> None:
    if not is_integral(datum, lam):
        raise UnsupportedInputError("multiplicities need an integral weight")
    if stabilizer_roots(datum, lam):
        raise UnsupportedInputError("singular orbits are out of scope; weight must be regular")
    if not is_antidominant(datum, lam):
        raise UnsupportedInputError("the base weight must be anti-dominant")


def verma_mult(datum: RootDatum, lam: Weight, w: WeylElement, x: WeylElement) -> int:
    """[M(w . lam) : L(x . lam)] for anti-dominant regular integral lam."""
    _require_regular_antidominant(datum, lam)
    W = FiniteWeylGroup(datum)
    w0 = W.longest()
    return kl_polynomial(W, w0.compose(w), w0.compose(x)).evaluate(1)


def builtin_verma_table(datum: RootDatum, lam: Weight) -> MultTable:
    """The KL-backed table over the full dot orbit of a regular integral
    weight of a reductive datum."""
    if datum.family != "reductive":
        raise UnsupportedInputError(
            "built-in multiplicity tables exist only for reductive data; "
            "supply a table for super families")
    if not is_integral(datum, lam):
        raise UnsupportedInputError("multiplicities need an integral weight")
    if stabilizer_roots(datum, lam):
        raise UnsupportedInputError("singular orbits are out of scope; weight must be regular")
    base, _ = antidominant_rep(datum, lam)
    W = FiniteWeylGroup(datum)
    w0 = W.longest()
    orbit = sorted(orbit_dot(datum, base))
    towards: dict[Weight, WeylElement] = {}
    for mu in orbit:
        _, witness = antidominant_rep(datum, mu)
        towards[mu] = witness.inverse()  # mu = towards[mu] . base
    entries = {}
    for mu in orbit:
        for gamma in orbit:
            value = kl_polynomial(W, w0.compose(towards[mu]),
                                  w0.compose(towards[gamma])).evaluate(1)
            entries[(mu, gamma)] = value
    return MultTable(entries, provenance="builtin-KL")


def gamma_summation_set(datum: RootDatum, mu: Weight, zeta) -> list[Weight]:
    """W_zeta-anti-dominant gamma with mu in their W_zeta dot orbit."""
    sub = zeta.support
    return sorted(g for g in orbit_dot(datum, mu, sub)
                  if is_antidominant(datum, g, sub))


def whittaker_mult(datum: RootDatum, lam: Weight, mu: Weight, zeta,
                   table: MultTable | None = None) -> int:
    """[M(lam, zeta) : L(mu, zeta)] by reduction to highest-weight data."""
    if not is_integral(datum, lam) or not is_integral(datum, mu):
        raise UnsupportedInputError("Whittaker multiplicities need integral weights")
    gammas = gamma_summation_set(datum, mu, zeta)
    if len(gammas) != 1:
        raise SuperlinkError(
            f"gamma summation set is not a singleton for integral input: {gammas}")
    if table is None:
        table = builtin_verma_table(datum, lam)
    missing = [(lam, g) for g in gammas if (lam, g) not in table.entries]
    if missing:
        raise MissingTableEntryError(missing)
    return sum(table.get(lam, g) for g in gammas)


def whittaker_length(datum: RootDatum, lam: Weight, zeta,
                     table: MultTable | None = None) -> int:
    """Composition length of the standard Whittaker module at (lam, zeta)."""
    if not is_integral(datum, lam):
        raise UnsupportedInputError("Whittaker multiplicities need integral weights")
    if table is None:
        table = builtin_verma_table(datum, lam)
    total = 0
    for gamma in table.gammas_for(lam):
        if is_antidominant(datum, gamma, zeta.support):
            total += table.get(lam, gamma)
    return total


def parse_mult_table(datum: RootDatum, text: str) -> MultTable:
    """Parse `<weight-literal> <weight-literal> <integer>` lines."""
    entries: dict[tuple[Weight, Weight], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 3:
            raise UnsupportedInputError(
                f"line {lineno}: expected '<weight> <weight> <integer>', got {raw!r}")
        lam = datum.parse_weight(parts[0])
        gamma = datum.parse_weight(parts[1])
        try:
            count = int(parts[2])
        except ValueError:
            raise UnsupportedInputError(f"line {lineno}: bad multiplicity {parts[2]!r}")
        if count < 0:
            raise UnsupportedInputError(f"line {lineno}: negative multiplicity")
        if lam == gamma and count != 1:
            raise UnsupportedInputError(
                f"line {lineno}: diagonal multiplicities are always 1")
        entries[(lam, gamma)] = count
    return MultTable(entries, provenance="user-supplied")


def load_mult_table(datum: RootDatum, path: str) -> MultTable:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_mult_table(datum, handle.read())
