"""Semifree differential bigraded commutative algebras and their morphisms.

A SemifreeDGCA is a free bigraded-commutative algebra equipped with a
degree-(1, even) differential given on generators and extended by the graded
Leibniz rule.  Morphisms are algebra maps given on generators; chain
homotopies are degree -1 (f, g)-derivations.  The homotopy-fiber extension
(adjoining a generator killing a closed element) and the generator-killing
pushout are the two algebra constructors everything downstream relies on.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .graded import (
    AlgebraSignature,
    Element,
    GeneratorDecl,
    GradedError,
    Monomial,
    SignatureMismatch,
    make_signature,
    monomial_mul,
    transport,
)


class DgcaError(GradedError):
    pass


class InhomogeneousImage(DgcaError):
    pass


class BidegreeMismatch(DgcaError):
    pass


class NotClosed(DgcaError):
    def __init__(self, msg, residual: Element | None = None):
        super().__init__(msg)
        self.residual = residual


class ChainMapViolation(DgcaError):
    def __init__(self, msg, residual: Element | None = None):
        super().__init__(msg)
        self.residual = residual


@dataclass
class Report:
    """Outcome of one verification: pass / fail / capped, plus forensics.

    Failing reports carry a concrete nonzero residual.  `pinned` holds the
    exactly-reproducible scalars a golden report compares bit-for-bit;
    `stats` holds term counts and similar diagnostics; timing lives outside
    the pinned data.
    """

    task_id: str
    verdict: str  # "pass" | "fail" | "capped"
    details: str = ""
    witness: str | None = None
    residual: Element | None = None
    stats: dict = field(default_factory=dict)
    pinned: dict = field(default_factory=dict)
    duration_s: float = 0.0

    @property
    def ok(self) -> bool:
        return self.verdict == "pass"

    def to_json(self) -> dict:
        out = {
            "task_id": self.task_id,
            "verdict": self.verdict,
            "details": self.details,
            "witness": self.witness,
            "stats": self.stats,
            "pinned": self.pinned,
            "duration_s": round(self.duration_s, 3),
        }
        if self.residual is not None:
            out["residual"] = self.residual.to_json()
        return out


class SemifreeDGCA:
    """Generators plus differential images; free as a graded algebra."""

    def __init__(self, sig: AlgebraSignature, d_images: tuple[Element, ...]):
        self.sig = sig
        self.d_images = d_images

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SemifreeDGCA)
            and self.sig == other.sig
            and list(self.d_images) == list(other.d_images)
        )

    def __repr__(self) -> str:
        return f"SemifreeDGCA({len(self.sig)} generators)"

    def d_of(self, name: str) -> Element:
        return self.d_images[self.sig.gen_id(name)]

    def gen(self, name: str) -> Element:
        return Element.generator(self.sig, name)

    def zero(self) -> Element:
        return Element.zero(self.sig)

    def one(self) -> Element:
        return Element.one(self.sig)

    def d(self, x: Element) -> Element:
        return apply_d(self, x)

    def to_json(self) -> dict:
        return {
            "generators": self.sig.to_json(),
            "differential": {
                self.sig.names[i]: img.to_json()
                for i, img in enumerate(self.d_images)
                if img
            },
        }

    @staticmethod
    def from_json(data: dict) -> "SemifreeDGCA":
        sig = AlgebraSignature.from_json(data["generators"])
        images = {
            name: Element.from_json(sig, img)
            for name, img in data["differential"].items()
        }
        return make_dgca(sig, images)


def make_dgca(sig: AlgebraSignature, images: Mapping[str, Element]) -> SemifreeDGCA:
    """Assemble an algebra from generator differentials.

    Each image must be homogeneous of bidegree (deg+1, parity) for its
    generator; d**2 = 0 is not asserted here (see check_d_squared).
    Missing generators get differential zero.
    """
    d_list: list[Element] = []
    for gid, decl in enumerate(sig.decls):
        img = images.get(decl.name)
        if img is None:
            img = Element.zero(sig)
        if img.sig != sig:
            raise SignatureMismatch(f"image of {decl.name} in wrong signature")
        if img:
            if not img.is_homogeneous():
                raise InhomogeneousImage(f"d({decl.name}) is not homogeneous")
            (bd,) = img.bidegrees()
            if bd != (decl.degree + 1, decl.parity):
                raise BidegreeMismatch(
                    f"d({decl.name}) has bidegree {bd}, expected "
                    f"{(decl.degree + 1, decl.parity)}"
                )
        d_list.append(img)
    return SemifreeDGCA(sig, tuple(d_list))


def apply_d(A: SemifreeDGCA, x: Element) -> Element:
    """Extend the generator differential by the graded Leibniz rule.

    d crosses a factor of degree n at the cost of (-1)^n; parity does not
    enter because d itself has even parity.  Per slot the e equal-factor
    terms collapse to a single term with multiplicity e (their relative
    signs cancel whenever e can exceed 1), and each d-image monomial is
    multiplied into the once-built "hole" monomial, with the Koszul cost of
    moving it left past the suffix restored as a scalar sign.
    """
    sig = A.sig
    if x.sig != sig:
        raise SignatureMismatch("element not in this algebra")
    degs = sig.degrees
    pars = sig.parities
    d_images = A.d_images
    acc: dict[Monomial, Fraction] = {}
    for mono, coeff in x.terms.items():
        n = len(mono)
        deg_suf = [0] * (n + 1)
        par_suf = [0] * (n + 1)
        for i in range(n - 1, -1, -1):
            g, e = mono[i]
            deg_suf[i] = (deg_suf[i + 1] + degs[g] * e) & 1
            par_suf[i] = (par_suf[i + 1] + pars[g] * e) & 1
        deg_prefix = 0
        for idx, (g, e) in enumerate(mono):
            dg = d_images[g]
            if dg:
                if e > 1:
                    hole = mono[:idx] + ((g, e - 1),) + mono[idx + 1 :]
                    rest_deg = (deg_suf[idx + 1] + degs[g] * (e - 1)) & 1
                    rest_par = (par_suf[idx + 1] + pars[g] * (e - 1)) & 1
                else:
                    hole = mono[:idx] + mono[idx + 1 :]
                    rest_deg = deg_suf[idx + 1]
                    rest_par = par_suf[idx + 1]
                dm_deg = (degs[g] + 1) & 1
                dm_par = pars[g]
                cross = (dm_deg & rest_deg) ^ (dm_par & rest_par)
                sign = -1 if (deg_prefix ^ cross) & 1 else 1
                ecoeff = (sign * e) * coeff
                for dm, dc in dg.terms.items():
                    r = monomial_mul(hole, dm, sig)
                    if r is None:
                        continue
                    s, m2 = r
                    c = ecoeff * dc if s > 0 else -(ecoeff * dc)
                    t = acc.get(m2)
                    t = c if t is None else t + c
                    if t:
                        acc[m2] = t
                    elif m2 in acc:
                        del acc[m2]
            deg_prefix = (deg_prefix + degs[g] * e) & 1
    return Element(sig, acc)


def check_d_squared(A: SemifreeDGCA, task_id: str = "d_squared") -> Report:
    """Verify d(d(g)) = 0 for every generator, reporting the first residual."""
    t0 = time.monotonic()
    max_terms = 0
    for gid, decl in enumerate(A.sig.decls):
        img = A.d_images[gid]
        if not img:
            continue
        max_terms = max(max_terms, len(img))
        res = apply_d(A, img)
        if res:
            return Report(
                task_id,
                "fail",
                details=f"d**2 != 0 on generator {decl.name}",
                witness=decl.name,
                residual=res,
                stats={"residual_terms": len(res)},
                duration_s=time.monotonic() - t0,
            )
    return Report(
        task_id,
        "pass",
        details="d**2 = 0 on all generators",
        stats={"generators": len(A.sig), "max_image_terms": max_terms},
        pinned={"generators": len(A.sig)},
        duration_s=time.monotonic() - t0,
    )


class DGCAMorphism:
    """An algebra map determined by generator images of matching bidegree."""

    def __init__(self, source: SemifreeDGCA, target: SemifreeDGCA,
                 images: tuple[Element, ...]):
        self.source = source
        self.target = target
        self.images = images

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, DGCAMorphism)
            and self.source.sig == other.source.sig
            and self.target.sig == other.target.sig
            and list(self.images) == list(other.images)
        )

    def image_of(self, name: str) -> Element:
        return self.images[self.source.sig.gen_id(name)]

    def __call__(self, x: Element) -> Element:
        if x.sig != self.source.sig:
            raise SignatureMismatch("element not in the morphism source")
        tsig = self.target.sig
        out = Element.zero(tsig)
        pow_cache: dict[tuple[int, int], Element] = {}
        for mono, coeff in x.terms.items():
            acc = Element.scalar(tsig, coeff)
            for g, e in mono:
                key = (g, e)
                p = pow_cache.get(key)
                if p is None:
                    p = self.images[g]
                    for _ in range(e - 1):
                        p = p * self.images[g]
                    pow_cache[key] = p
                acc = acc * p
                if not acc:
                    break
            out = out + acc
        return out

    def to_json(self) -> dict:
        return {
            "source": self.source.to_json(),
            "target": self.target.to_json(),
            "images": {
                self.source.sig.names[i]: img.to_json()
                for i, img in enumerate(self.images)
            },
        }

    @staticmethod
    def from_json(data: dict, validate: bool = True) -> "DGCAMorphism":
        source = SemifreeDGCA.from_json(data["source"])
        target = SemifreeDGCA.from_json(data["target"])
        images = {
            name: Element.from_json(target.sig, img)
            for name, img in data["images"].items()
        }
        return make_morphism(source, target, images, validate=validate)


def make_morphism(source: SemifreeDGCA, target: SemifreeDGCA,
                  images: Mapping[str, Element], validate: bool = True
                  ) -> DGCAMorphism:
    """Build a morphism; by default verify the chain-map property on generators.

    Pass validate=False to construct deliberately broken morphisms for
    negative tests, then call check_chain_map on them.
    """
    img_list: list[Element] = []
    for decl in source.sig.decls:
        img = images.get(decl.name)
        if img is None:
            img = Element.zero(target.sig)
        if img.sig != target.sig:
            raise SignatureMismatch(f"image of {decl.name} not in target")
        if img and not img.is_homogeneous(decl.bidegree):
            raise BidegreeMismatch(
                f"image of {decl.name} is not homogeneous of bidegree "
                f"{decl.bidegree}: got {sorted(img.bidegrees())}"
            )
        img_list.append(img)
    f = DGCAMorphism(source, target, tuple(img_list))
    if validate:
        rep = check_chain_map(f)
        if not rep.ok:
            raise ChainMapViolation(rep.details, residual=rep.residual)
    return f


def check_chain_map(f: DGCAMorphism, task_id: str = "chain_map") -> Report:
    """Verify d(f(g)) = f(d(g)) on every source generator."""
    t0 = time.monotonic()
    for gid, decl in enumerate(f.source.sig.decls):
        lhs = apply_d(f.target, f.images[gid])
        rhs = f(f.source.d_images[gid])
        res = lhs - rhs
        if res:
            return Report(
                task_id,
                "fail",
                details=f"chain map fails on generator {decl.name}",
                witness=decl.name,
                residual=res,
                stats={"residual_terms": len(res)},
                duration_s=time.monotonic() - t0,
            )
    return Report(task_id, "pass", details="chain map on all generators",
                  duration_s=time.monotonic() - t0)


def identity_morphism(A: SemifreeDGCA) -> DGCAMorphism:
    return DGCAMorphism(
        A, A, tuple(Element.generator(A.sig, n) for n in A.sig.names)
    )


def compose(f: DGCAMorphism, g: DGCAMorphism, validate: bool = False
            ) -> DGCAMorphism:
    """Composite g-after-f; f.target must be g.source."""
    if f.target.sig != g.source.sig:
        raise SignatureMismatch("compose: f.target != g.source")
    images = tuple(g(img) for img in f.images)
    out = DGCAMorphism(f.source, g.target, images)
    if validate:
        rep = check_chain_map(out)
        if not rep.ok:
            raise ChainMapViolation(rep.details, residual=rep.residual)
    return out


class ChainHomotopy:
    """A degree (-1, parity-preserving) map given on generators, extended as
    an (f, g)-derivation: s(ab) = s(a) g(b) + (-1)^deg(a) f(a) s(b)."""

    def __init__(self, f: DGCAMorphism, g: DGCAMorphism,
                 images: Mapping[str, Element]):
        if f.source.sig != g.source.sig or f.target.sig != g.target.sig:
            raise SignatureMismatch("homotopy needs parallel morphisms")
        self.f = f
        self.g = g
        src = f.source.sig
        tsig = f.target.sig
        img_list: list[Element] = []
        for decl in src.decls:
            img = images.get(decl.name)
            if img is None:
                img = Element.zero(tsig)
            if img.sig != tsig:
                raise SignatureMismatch(f"s({decl.name}) not in target")
            if img and not img.is_homogeneous((decl.degree - 1, decl.parity)):
                raise BidegreeMismatch(
                    f"s({decl.name}) must have bidegree "
                    f"{(decl.degree - 1, decl.parity)}"
                )
            img_list.append(img)
        self.images = tuple(img_list)

    def __call__(self, x: Element) -> Element:
        src = self.f.source.sig
        if x.sig != src:
            raise SignatureMismatch("element not in the homotopy source")
        tsig = self.f.target.sig
        degs = src.degrees
        out = Element.zero(tsig)
        for mono, coeff in x.terms.items():
            flat: list[int] = []
            for g, e in mono:
                flat.extend([g] * e)
            deg_prefix = 0
            for i, gid in enumerate(flat):
                si = self.images[gid]
                if si:
                    left = _monomial_from_flat(flat[:i])
                    right = _monomial_from_flat(flat[i + 1 :])
                    term = (
                        self.f(Element(src, {left: Fraction(1)}))
                        * si
                        * self.g(Element(src, {right: Fraction(1)}))
                    )
                    sign = -1 if deg_prefix & 1 else 1
                    out = out + (coeff * sign) * term
                deg_prefix += degs[gid]
        return out


def _monomial_from_flat(flat: list[int]) -> Monomial:
    out: list[tuple[int, int]] = []
    for g in flat:
        if out and out[-1][0] == g:
            out[-1] = (g, out[-1][1] + 1)
        else:
            out.append((g, 1))
    return tuple(out)


def check_homotopy(f: DGCAMorphism, g: DGCAMorphism, s: ChainHomotopy,
                   task_id: str = "homotopy") -> Report:
    """Verify f - g = d s + s d on every generator of the common source."""
    t0 = time.monotonic()
    src = f.source
    tgt = f.target
    for gid, decl in enumerate(src.sig.decls):
        x = Element.generator(src.sig, decl.name)
        lhs = f.images[gid] - g.images[gid]
        rhs = apply_d(tgt, s(x)) + s(src.d_images[gid])
        res = lhs - rhs
        if res:
            return Report(
                task_id,
                "fail",
                details=f"homotopy identity fails on {decl.name}",
                witness=decl.name,
                residual=res,
                duration_s=time.monotonic() - t0,
            )
    return Report(task_id, "pass", details="homotopy identity on all generators",
                  duration_s=time.monotonic() - t0)


def adjoin_generator(A: SemifreeDGCA, decl: GeneratorDecl, d_image: Element,
                     lam=1) -> SemifreeDGCA:
    """Extend by one generator with d(gen) = lam * d_image.

    The image must be a closed element of A, homogeneous of bidegree
    (decl.degree + 1, decl.parity); this is the algebra of the homotopy
    fiber of the cocycle d_image.
    """
    if d_image.sig != A.sig:
        raise SignatureMismatch("d_image not in the base algebra")
    if d_image and not d_image.is_homogeneous((decl.degree + 1, decl.parity)):
        raise BidegreeMismatch(
            f"d({decl.name}) must be homogeneous of bidegree "
            f"{(decl.degree + 1, decl.parity)}"
        )
    res = apply_d(A, d_image)
    if res:
        raise NotClosed(f"image of the new generator {decl.name} is not closed",
                        residual=res)
    new_sig = make_signature(list(A.sig.decls) + [decl])
    images = {
        d.name: transport(A.d_images[i], new_sig)
        for i, d in enumerate(A.sig.decls)
    }
    images[decl.name] = Fraction(lam) * transport(d_image, new_sig)
    return make_dgca(new_sig, images)


def set_generators_to_zero(A: SemifreeDGCA, names: Iterable[str]
                           ) -> SemifreeDGCA:
    """Quotient by sending the named generators to zero (semifree pushout).

    The induced differential is the substituted one; d**2 survives
    substitution automatically and is revalidated here.
    """
    kill = {A.sig.gen_id(n) for n in names}
    keep = [d for i, d in enumerate(A.sig.decls) if i not in kill]
    new_sig = make_signature(keep)
    images = {}
    for gid, decl in enumerate(A.sig.decls):
        if gid in kill:
            continue
        img = A.d_images[gid]
        surviving = {
            m: c for m, c in img.terms.items()
            if not any(g in kill for g, _ in m)
        }
        images[decl.name] = transport(Element(A.sig, surviving), new_sig)
    out = make_dgca(new_sig, images)
    rep = check_d_squared(out)
    assert rep.ok, "substitution broke d**2 (cannot happen)"
    return out
