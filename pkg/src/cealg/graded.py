"""Free bigraded-commutative polynomial algebras over exact rationals.

Generators carry a bidegree (n, parity) with n a nonnegative cohomological
degree and parity in {0, 1}.  Two generators g, h commute up to the Koszul
sign (-1)^(deg(g)*deg(h) + par(g)*par(h)), and a generator squares to zero
exactly when deg + par is odd.  Elements are stored canonically: a hash map
from sorted monomials to nonzero Fraction coefficients, with every sign
incurred by sorting absorbed into the coefficient.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

EVEN = 0
ODD = 1

#: A monomial is a tuple of (generator id, exponent) pairs, sorted by id.
Monomial = tuple[tuple[int, int], ...]

ONE_MONOMIAL: Monomial = ()


class GradedError(Exception):
    """Base class for errors raised by the graded core."""


class DuplicateName(GradedError):
    pass


class UnknownGenerator(GradedError):
    pass


class SignatureMismatch(GradedError):
    pass


@dataclass(frozen=True, order=True)
class GeneratorDecl:
    """A named generator with a bidegree and optional integer index tags.

    The canonical total order on generators is lexicographic on
    (family, indices); it is fixed at signature construction and stable
    across runs.
    """

    family: str
    indices: tuple[int, ...] = ()
    degree: int = 1
    parity: int = EVEN

    def __post_init__(self):
        if not self.family or any(ch in self.family for ch in "^,| "):
            raise GradedError(f"bad family name {self.family!r}")
        if self.degree < 0:
            raise GradedError("degree must be nonnegative")
        if self.parity not in (EVEN, ODD):
            raise GradedError("parity must be 0 (even) or 1 (odd)")

    @property
    def name(self) -> str:
        if not self.indices:
            return self.family
        return self.family + "^" + ",".join(str(i) for i in self.indices)

    @property
    def bidegree(self) -> tuple[int, int]:
        return (self.degree, self.parity)

    @property
    def squares_to_zero(self) -> bool:
        return (self.degree + self.parity) % 2 == 1


class AlgebraSignature:
    """An ordered list of generator declarations; the monomial order follows it."""

    def __init__(self, decls: Iterable[GeneratorDecl]):
        ordered = tuple(sorted(decls, key=lambda d: (d.family, d.indices)))
        names = [d.name for d in ordered]
        if len(set(names)) != len(names):
            seen = set()
            for n in names:
                if n in seen:
                    raise DuplicateName(f"duplicate generator {n!r}")
                seen.add(n)
        self.decls: tuple[GeneratorDecl, ...] = ordered
        self.names: tuple[str, ...] = tuple(names)
        self._ids: dict[str, int] = {n: i for i, n in enumerate(names)}
        self.degrees: tuple[int, ...] = tuple(d.degree for d in ordered)
        self.parities: tuple[int, ...] = tuple(d.parity for d in ordered)
        # bit tables driving Koszul signs
        self.odd_bits: tuple[int, ...] = tuple(d.degree & 1 for d in ordered)
        self.sqz: tuple[bool, ...] = tuple(d.squares_to_zero for d in ordered)

    def __len__(self) -> int:
        return len(self.decls)

    def __eq__(self, other) -> bool:
        return isinstance(other, AlgebraSignature) and self.decls == other.decls

    def __hash__(self) -> int:
        return hash(self.decls)

    def __repr__(self) -> str:
        return f"AlgebraSignature({len(self.decls)} generators)"

    def gen_id(self, name: str) -> int:
        try:
            return self._ids[name]
        except KeyError:
            raise UnknownGenerator(f"unknown generator {name!r}") from None

    def decl(self, name: str) -> GeneratorDecl:
        return self.decls[self.gen_id(name)]

    def family_ids(self, family: str) -> list[int]:
        return [i for i, d in enumerate(self.decls) if d.family == family]

    def monomial_bidegree(self, mono: Monomial) -> tuple[int, int]:
        deg = sum(self.degrees[g] * e for g, e in mono)
        par = sum(self.parities[g] * e for g, e in mono) & 1
        return (deg, par)

    def monomial_name_pairs(self, mono: Monomial) -> list[tuple[str, int]]:
        return [(self.names[g], e) for g, e in mono]

    def to_json(self) -> list[dict]:
        return [
            {
                "family": d.family,
                "indices": list(d.indices),
                "degree": d.degree,
                "parity": d.parity,
            }
            for d in self.decls
        ]

    @staticmethod
    def from_json(data: list[dict]) -> "AlgebraSignature":
        return AlgebraSignature(
            GeneratorDecl(d["family"], tuple(d["indices"]), d["degree"], d["parity"])
            for d in data
        )


def make_signature(decls: Iterable[GeneratorDecl]) -> AlgebraSignature:
    """Build a signature with the deterministic canonical generator order."""
    return AlgebraSignature(decls)


def monomial_mul(m1: Monomial, m2: Monomial, sig: AlgebraSignature):
    """Multiply two canonical monomials.

    Returns (sign, monomial) with sign in {+1, -1}, or None when the product
    vanishes because a square-zero generator is repeated.
    """
    if not m1:
        return 1, m2
    if not m2:
        return 1, m1
    odd = sig.odd_bits
    par = sig.parities
    sqz = sig.sqz
    # U, V: parities of summed odd-degree / odd-parity weights of the m1
    # items not yet consumed; an m2 item crosses exactly those.
    u = 0
    v = 0
    for g, e in m1:
        if e & 1:
            u ^= odd[g]
            v ^= par[g]
    sign = 0
    out = []
    i = 0
    j = 0
    n1 = len(m1)
    n2 = len(m2)
    while i < n1 and j < n2:
        g1, e1 = m1[i]
        g2, e2 = m2[j]
        if g1 < g2:
            if e1 & 1:
                u ^= odd[g1]
                v ^= par[g1]
            out.append(m1[i])
            i += 1
        elif g1 > g2:
            if e2 & 1:
                sign ^= (u & odd[g2]) ^ (v & par[g2])
            out.append(m2[j])
            j += 1
        else:
            if sqz[g1]:
                return None
            if e1 & 1:
                u ^= odd[g1]
                v ^= par[g1]
            if e2 & 1:
                sign ^= (u & odd[g2]) ^ (v & par[g2])
            out.append((g1, e1 + e2))
            i += 1
            j += 1
    if i < n1:
        out.extend(m1[i:])
    if j < n2:
        out.extend(m2[j:])
    return (1 if sign == 0 else -1), tuple(out)


def sort_sign(pairs: Sequence[tuple[int, int]], sig: AlgebraSignature):
    """Canonicalize an arbitrarily ordered list of (gen id, exponent) pairs.

    Returns (sign, monomial) or None if a square-zero generator ends up with
    exponent >= 2.  The sign is the Koszul sign of the sorting permutation,
    counted transposition by transposition.
    """
    odd = sig.odd_bits
    par = sig.parities
    sign = 0
    items = [(g, e) for g, e in pairs if e != 0]
    for g, e in items:
        if e < 0:
            raise GradedError("negative exponent")
    n = len(items)
    for a in range(n):
        ga, ea = items[a]
        ua = odd[ga] & ea & 1
        va = par[ga] & ea & 1
        for b in range(a + 1, n):
            gb, eb = items[b]
            if ga > gb:
                sign ^= (ua & odd[gb] & eb & 1) ^ (va & par[gb] & eb & 1)
    merged: dict[int, int] = {}
    for g, e in items:
        merged[g] = merged.get(g, 0) + e
    for g, e in merged.items():
        if e >= 2 and sig.sqz[g]:
            return None
    mono = tuple(sorted(merged.items()))
    return (1 if sign == 0 else -1), mono


class Element:
    """An exact linear combination of canonical monomials in a fixed signature.

    Immutable by convention: every operation returns a new Element, zero
    coefficients are never stored, and equality is map equality.
    """

    __slots__ = ("sig", "terms")

    def __init__(self, sig: AlgebraSignature, terms: dict[Monomial, Fraction]):
        self.sig = sig
        self.terms = terms

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(sig: AlgebraSignature) -> "Element":
        return Element(sig, {})

    @staticmethod
    def one(sig: AlgebraSignature) -> "Element":
        return Element(sig, {ONE_MONOMIAL: Fraction(1)})

    @staticmethod
    def scalar(sig: AlgebraSignature, c) -> "Element":
        c = Fraction(c)
        return Element(sig, {ONE_MONOMIAL: c} if c else {})

    @staticmethod
    def generator(sig: AlgebraSignature, name: str) -> "Element":
        return Element(sig, {((sig.gen_id(name), 1),): Fraction(1)})

    @staticmethod
    def from_terms(sig: AlgebraSignature, terms) -> "Element":
        """Build from [(coeff, [(name, exp), ...]), ...] with normalization."""
        acc: dict[Monomial, Fraction] = {}
        for coeff, pairs in terms:
            coeff = Fraction(coeff)
            if not coeff:
                continue
            idpairs = [(sig.gen_id(n), e) for n, e in pairs]
            res = sort_sign(idpairs, sig)
            if res is None:
                continue
            s, mono = res
            c = acc.get(mono, _ZERO) + (coeff if s > 0 else -coeff)
            if c:
                acc[mono] = c
            elif mono in acc:
                del acc[mono]
        return Element(sig, acc)

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def bidegrees(self) -> set[tuple[int, int]]:
        return {self.sig.monomial_bidegree(m) for m in self.terms}

    def is_homogeneous(self, bidegree: tuple[int, int] | None = None) -> bool:
        degs = self.bidegrees()
        if bidegree is not None:
            return degs <= {tuple(bidegree)}
        return len(degs) <= 1

    def coefficient(self, mono: Monomial) -> Fraction:
        return self.terms.get(mono, _ZERO)

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "Element"):
        if self.sig is not other.sig and self.sig != other.sig:
            raise SignatureMismatch("elements live in different signatures")

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        acc = dict(self.terms)
        for m, c in other.terms.items():
            s = acc.get(m, _ZERO) + c
            if s:
                acc[m] = s
            elif m in acc:
                del acc[m]
        return Element(self.sig, acc)

    def __sub__(self, other: "Element") -> "Element":
        self._check(other)
        acc = dict(self.terms)
        for m, c in other.terms.items():
            s = acc.get(m, _ZERO) - c
            if s:
                acc[m] = s
            elif m in acc:
                del acc[m]
        return Element(self.sig, acc)

    def __neg__(self) -> "Element":
        return Element(self.sig, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Element):
            self._check(other)
            sig = self.sig
            acc: dict[Monomial, Fraction] = {}
            mm = monomial_mul
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    res = mm(m1, m2, sig)
                    if res is None:
                        continue
                    s, mono = res
                    c = c1 * c2
                    if s < 0:
                        c = -c
                    t = acc.get(mono, _ZERO) + c
                    if t:
                        acc[mono] = t
                    elif mono in acc:
                        del acc[mono]
            return Element(sig, acc)
        return self._scaled(Fraction(other))

    def __rmul__(self, other):
        return self._scaled(Fraction(other))

    def _scaled(self, c: Fraction) -> "Element":
        if not c:
            return Element.zero(self.sig)
        return Element(self.sig, {m: c * v for m, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.sig == other.sig and self.terms == other.terms

    def __hash__(self):
        raise TypeError("Element is not hashable")

    # -- rendering and serialization ---------------------------------------

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self.terms.items())

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for mono, coeff in self.sorted_terms()[:12]:
            word = "*".join(
                f"{self.sig.names[g]}" + (f"**{e}" if e > 1 else "")
                for g, e in mono
            )
            bits.append(f"({coeff})*{word}" if word else f"({coeff})")
        more = "" if len(self.terms) <= 12 else f" ... [{len(self.terms)} terms]"
        return " + ".join(bits) + more

    def to_json(self) -> list[dict]:
        return [
            {
                "monomial": [[self.sig.names[g], e] for g, e in mono],
                "coeff": f"{coeff.numerator}/{coeff.denominator}",
            }
            for mono, coeff in self.sorted_terms()
        ]

    @staticmethod
    def from_json(sig: AlgebraSignature, data: list[dict]) -> "Element":
        return Element.from_terms(
            sig,
            [
                (Fraction(t["coeff"]), [(n, e) for n, e in t["monomial"]])
                for t in data
            ],
        )

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))


_ZERO = Fraction(0)


def normalize(sig: AlgebraSignature, raw, coeff=1) -> Element:
    """Canonicalize one raw word: a list of (generator name, exponent) pairs
    in arbitrary order, times a rational coefficient."""
    return Element.from_terms(sig, [(coeff, list(raw))])


def linear_combine(terms: Sequence[tuple[object, Element]]) -> Element:
    """Exact linear combination of elements over a common signature."""
    if not terms:
        raise GradedError("linear_combine needs at least one term")
    sig = terms[0][1].sig
    acc: dict[Monomial, Fraction] = {}
    for coeff, el in terms:
        coeff = Fraction(coeff)
        if el.sig != sig:
            raise SignatureMismatch("mixed signatures in linear_combine")
        if not coeff:
            continue
        for m, c in el.terms.items():
            s = acc.get(m, _ZERO) + coeff * c
            if s:
                acc[m] = s
            elif m in acc:
                del acc[m]
    return Element(sig, acc)


def transport(el: Element, new_sig: AlgebraSignature) -> Element:
    """Re-express an element in a signature sharing the generators it uses.

    Relative generator order is preserved automatically because both
    signatures are canonically sorted, so no signs arise; generators of the
    old signature that the element does not mention need not exist in the
    new one.
    """
    names = el.sig.names
    cache: dict[int, int] = {}
    acc = {}
    for mono, c in el.terms.items():
        new = []
        for g, e in mono:
            ng = cache.get(g)
            if ng is None:
                ng = new_sig.gen_id(names[g])
                cache[g] = ng
            new.append((ng, e))
        for a, b in zip(new, new[1:]):
            assert a[0] < b[0], "generator order not preserved"
        acc[tuple(new)] = c
    return Element(new_sig, acc)
