"""Root data for the supported families, with exact arithmetic throughout.

Families and their coordinate conventions on h*:

* ``gl`` (m|n):   basis e_1..e_{m+n}; form +1 on the first m coordinates and
  -1 on the last n; even roots e_i - e_j within a block, odd roots across
  blocks (all isotropic).
* ``osp2`` (2|2n): basis (e; d_1..d_n); form (+1, (-1)^n); even roots are the
  type-C system on the d's, odd roots +-e +- d_i (all isotropic).
* ``p`` (n):      basis e_1..e_n, form (+1)^n; even roots e_i - e_j; odd
  roots e_i + e_j (i <= j) on one side and -(e_i + e_j) (i < j) on the
  other, none isotropic for this form.
* ``osp32``:      fixed rank-2 datum with basis (d, e), <d,d> = -1,
  <e,e> = +1; even positive roots {2d, e}, odd positive {d+e, d-e, d} with
  d+-e isotropic.
* ``reductive``:  products of type A and type C factors, e.g. A2 x C1.

The Weyl vector rho0 is half the sum of the even positive roots except for
p(n), which uses the normalized rho0 = (n-1, n-2, ..., 1, 0): the dot action
only sees rho0 up to a W-fixed vector, and every downstream p(n) statement
is phrased against this representative.  rho = rho0 - rho1 always holds
coordinate-exactly.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import ConstructionError, DimensionMismatchError, UnsupportedInputError
from .weights import Weight, format_weight, parse_weight

EVEN = "even"
ODD = "odd"

# Weyl-group coordinate blocks: kind "A" permutes the window, kind "C"
# signed-permutes it.  A window of size 1 with kind "A" is fixed pointwise.
Block = tuple[str, int, int]  # (kind, start, size)


@dataclass(frozen=True)
class Root:
    weight: Weight
    parity: str  # "even" | "odd"
    isotropic: bool

    def __repr__(self):
        tag = "iso" if self.isotropic else self.parity
        return f"Root({format_weight(self.weight)}, {tag})"


@dataclass(frozen=True)
class RootDatum:
    family: str
    params: tuple[int, ...]
    dim: int
    form_signature: tuple[Fraction, ...]
    simple_even: tuple[Root, ...]        # Pi_0
    even_positive: tuple[Root, ...]      # Phi_0^+
    odd_roots: tuple[Root, ...]          # all of Phi_1 (p(n) is not +- symmetric)
    odd_positive: tuple[Root, ...]       # roots of the odd part of n^+
    isotropic_roots: tuple[Root, ...]
    rho0: Weight
    rho1: Weight
    rho: Weight
    blocks: tuple[Block, ...]
    literal_seps: tuple[tuple[int, str], ...]  # block markers for weight literals

    def describe(self) -> str:
        if self.family == "gl":
            return f"gl({self.params[0]}|{self.params[1]})"
        if self.family == "osp2":
            return f"osp(2|{2 * self.params[0]})"
        if self.family == "p":
            return f"p({self.params[0]})"
        if self.family == "osp32":
            return "osp(3|2)"
        return "x".join(f"{k}{s if k == 'C' else s - 1}"
                        for k, _, s in self.blocks)

    def format_weight(self, w: Weight) -> str:
        return format_weight(w, self.literal_seps)

    def parse_weight(self, text: str) -> Weight:
        return parse_weight(text, self.dim)

    def check_dim(self, w: Weight) -> None:
        if len(w) != self.dim:
            raise DimensionMismatchError(
                f"{self.describe()} expects {self.dim} coordinates, got {len(w)}")


def _basis(dim: int, entries: dict[int, Fraction | int]) -> Weight:
    coords = [Fraction(0)] * dim
    for i, v in entries.items():
        coords[i] = Fraction(v)
    return Weight(coords)


def bilinear(datum: RootDatum, lam: Weight, mu: Weight) -> Fraction:
    """The family's W-invariant form: sum_i s_i lam_i mu_i with s_i = +-1."""
    datum.check_dim(lam)
    datum.check_dim(mu)
    return sum((s * a * b for s, a, b in zip(datum.form_signature, lam, mu)),
               Fraction(0))


def is_isotropic_weight(datum: RootDatum, alpha: Weight) -> bool:
    return bilinear(datum, alpha, alpha) == 0


def is_isotropic(datum: RootDatum, alpha: Root | Weight) -> bool:
    w = alpha.weight if isinstance(alpha, Root) else alpha
    return is_isotropic_weight(datum, w)


def pairing_coroot(datum: RootDatum, lam: Weight, alpha: Root | Weight) -> Fraction:
    """<lam, alpha^vee> with alpha^vee = 2 alpha / <alpha, alpha>."""
    w = alpha.weight if isinstance(alpha, Root) else alpha
    norm = bilinear(datum, w, w)
    if norm == 0:
        raise UnsupportedInputError("coroot pairing is undefined for an isotropic root")
    return 2 * bilinear(datum, lam, w) / norm


def is_integral(datum: RootDatum, lam: Weight) -> bool:
    """True iff <lam, alpha^vee> is an integer for every even positive root."""
    datum.check_dim(lam)
    return all(pairing_coroot(datum, lam, a).denominator == 1
               for a in datum.even_positive)


def _half_sum(dim: int, roots: Sequence[Root]) -> Weight:
    total = Weight.zero(dim)
    for r in roots:
        total = total + r.weight
    return total.scale(Fraction(1, 2))


def _finish(family, params, dim, signature, simple, even_pos, odd_pos, odd_neg,
            blocks, seps, rho0=None) -> RootDatum:
    signature = tuple(Fraction(s) for s in signature)
    odd_all = tuple(odd_pos) + tuple(odd_neg)

    def norm(w: Weight) -> Fraction:
        return sum((s * a * a for s, a in zip(signature, w)), Fraction(0))

    def mk(w: Weight, parity: str) -> Root:
        return Root(w, parity, norm(w) == 0)

    even_roots = tuple(mk(w, EVEN) for w in even_pos)
    # keep Pi_0 in the order the family lists it
    by_weight = {r.weight: r for r in even_roots}
    simple_roots = tuple(by_weight[w] for w in simple)
    odd_roots = tuple(mk(w, ODD) for w in odd_all)
    odd_positive = tuple(mk(w, ODD) for w in odd_pos)
    iso = tuple(r for r in odd_roots if r.isotropic)
    if any(r.isotropic for r in even_roots):
        raise ConstructionError("even roots must be non-isotropic")

    rho0 = rho0 if rho0 is not None else _half_sum(dim, even_roots)
    rho1 = _half_sum(dim, odd_positive)
    return RootDatum(
        family=family, params=tuple(params), dim=dim, form_signature=signature,
        simple_even=simple_roots, even_positive=even_roots,
        odd_roots=odd_roots, odd_positive=odd_positive, isotropic_roots=iso,
        rho0=rho0, rho1=rho1, rho=rho0 - rho1,
        blocks=tuple(blocks), literal_seps=tuple(seps))


def build_gl(m: int, n: int) -> RootDatum:
    if m < 1 or n < 1:
        raise ConstructionError(f"gl(m|n) needs positive m, n; got ({m}|{n})")
    dim = m + n
    e = lambda i: _basis(dim, {i: 1})
    even_pos = [e(i) - e(j) for i in range(m) for j in range(i + 1, m)]
    even_pos += [e(i) - e(j) for i in range(m, dim) for j in range(i + 1, dim)]
    simple = [e(i) - e(i + 1) for i in range(m - 1)]
    simple += [e(i) - e(i + 1) for i in range(m, dim - 1)]
    odd_pos = [e(i) - e(j) for i in range(m) for j in range(m, dim)]
    odd_neg = [-w for w in odd_pos]
    signature = [1] * m + [-1] * n
    blocks = [("A", 0, m), ("A", m, n)]
    return _finish("gl", (m, n), dim, signature, simple, even_pos, odd_pos,
                   odd_neg, blocks, [(m, "|")])


def build_osp2(n: int) -> RootDatum:
    if n < 1:
        raise ConstructionError(f"osp(2|2n) needs positive n; got n={n}")
    dim = n + 1
    d = lambda i: _basis(dim, {i + 1: 1})  # delta_i at coordinate i+1
    eps = _basis(dim, {0: 1})
    even_pos = []
    for i in range(n):
        for j in range(i + 1, n):
            even_pos += [d(i) - d(j), d(i) + d(j)]
        even_pos.append(d(i).scale(2))
    simple = [d(i) - d(i + 1) for i in range(n - 1)] + [d(n - 1).scale(2)]
    odd_pos = [eps - d(i) for i in range(n)] + [eps + d(i) for i in range(n)]
    odd_neg = [-w for w in odd_pos]
    signature = [1] + [-1] * n
    blocks = [("A", 0, 1), ("C", 1, n)]
    return _finish("osp2", (n,), dim, signature, simple, even_pos, odd_pos,
                   odd_neg, blocks, [(1, ";")])


def build_p(n: int) -> RootDatum:
    if n < 2:
        raise ConstructionError(f"p(n) needs n >= 2; got n={n}")
    dim = n
    e = lambda i: _basis(dim, {i: 1})
    even_pos = [e(i) - e(j) for i in range(n) for j in range(i + 1, n)]
    simple = [e(i) - e(i + 1) for i in range(n - 1)]
    # odd part of n^+ is symmetric matrices (weights e_i + e_j, i <= j);
    # the opposite side is antisymmetric, so -2e_i is not a root
    odd_pos = [e(i) + e(j) for i in range(n) for j in range(i, n)]
    odd_neg = [-(e(i) + e(j)) for i in range(n) for j in range(i + 1, n)]
    rho0 = Weight([n - 1 - i for i in range(n)])
    return _finish("p", (n,), dim, [1] * n, simple, even_pos, odd_pos, odd_neg,
                   [("A", 0, n)], [], rho0=rho0)


def build_osp32() -> RootDatum:
    # basis (d, e) with <d,d> = -1, <e,e> = 1; Pi_0 = {2d, e}
    dim = 2
    d = _basis(dim, {0: 1})
    e = _basis(dim, {1: 1})
    even_pos = [d.scale(2), e]
    simple = list(even_pos)
    odd_pos = [d + e, d - e, d]
    odd_neg = [-w for w in odd_pos]
    blocks = [("C", 0, 1), ("C", 1, 1)]
    return _finish("osp32", (), dim, [-1, 1], simple, even_pos, odd_pos,
                   odd_neg, blocks, [])


def _parse_factor(token) -> tuple[str, int]:
    if isinstance(token, tuple):
        kind, rank = token
    else:
        text = str(token).strip().upper()
        kind, rank = text[:1], text[1:]
    kind = str(kind).upper()
    try:
        rank = int(rank)
    except (TypeError, ValueError):
        raise ConstructionError(f"bad reductive factor {token!r}")
    if kind not in ("A", "C") or rank < 1:
        raise ConstructionError(f"bad reductive factor {token!r}; use A<k> or C<k>")
    return kind, rank


def build_reductive(factors) -> RootDatum:
    """Product of type A_k (on k+1 coordinates) and type C_k factors."""
    if isinstance(factors, str):
        factors = [f for f in factors.replace("x", ",").split(",") if f.strip()]
    parsed = [_parse_factor(f) for f in factors]
    if not parsed:
        raise ConstructionError("reductive datum needs at least one factor")
    even_pos, simple, blocks, seps, signature = [], [], [], [], []
    dim = sum(rank + 1 if kind == "A" else rank for kind, rank in parsed)
    e = lambda i: _basis(dim, {i: 1})
    start = 0
    for kind, rank in parsed:
        size = rank + 1 if kind == "A" else rank
        idx = range(start, start + size)
        if kind == "A":
            even_pos += [e(i) - e(j) for i in idx for j in idx if i < j]
            simple += [e(i) - e(i + 1) for i in idx if i + 1 in idx]
        else:
            for i in idx:
                for j in idx:
                    if i < j:
                        even_pos += [e(i) - e(j), e(i) + e(j)]
                even_pos.append(e(i).scale(2))
            simple += [e(i) - e(i + 1) for i in idx if i + 1 in idx]
            simple.append(e(start + size - 1).scale(2))
        blocks.append((kind, start, size))
        if start:
            seps.append((start, "|"))
        signature += [1] * size
        start += size
    return _finish("reductive", tuple(r for _, r in parsed), dim, signature,
                   simple, even_pos, [], [], blocks, seps)


def build_root_datum(family: str, *, m: int | None = None, n: int | None = None,
                     factors=None) -> RootDatum:
    """Construct a root datum; raises ConstructionError for bad requests."""
    family = family.lower()
    if family == "gl":
        if m is None or n is None:
            raise ConstructionError("gl(m|n) needs both m and n")
        return build_gl(m, n)
    if family == "osp2":
        if n is None:
            raise ConstructionError("osp(2|2n) needs n")
        return build_osp2(n)
    if family == "p":
        if n is None:
            raise ConstructionError("p(n) needs n")
        return build_p(n)
    if family == "osp32":
        return build_osp32()
    if family == "reductive":
        if factors is None:
            raise ConstructionError("reductive datum needs factors, e.g. 'A2,C1'")
        return build_reductive(factors)
    raise ConstructionError(f"unsupported family {family!r}")


