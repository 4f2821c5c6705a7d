"""The tensor product of permutative categories as a term category.

Objects are formal sums of atoms a.b (no relations); morphisms are terms
generated by pairs f.g, the adjoined distribution and unit isomorphisms, and
symmetries, modulo the standard relations.  Equality of morphisms is
three-valued: syntactic normal forms decide the easy cases, a pluggable
prover (registered by the coherence module) certifies formal cases, and
everything else is Unknown.

Also here: bilinear maps and their calculus (sum, pre/post composition),
evaluation of terms under a bilinear map (the universal property),
currying/uncurrying, strictification, and the tensor-hom correspondence.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Callable, Iterator

from .perms import Permutation, block_permutation, block_transposition, interleave_two
from .perm_core import (
    HomCat, MonTransform, PermCategory, SymMonFunctor, Verdict,
    constant_unit_functor, hom_category, strict_functor,
)


class IllTyped(Exception):
    pass


# ---------------------------------------------------------------------------
# objects


@dataclass(frozen=True)
class Dot:
    """One summand a.b of a tensor object."""
    left: Any
    right: Any

    def __repr__(self):
        return f"{self.left!r}.{self.right!r}"


# a tensor object is a tuple of Dot atoms; () is the zero object


def ten_obj(*pairs) -> tuple:
    return tuple(Dot(a, b) for a, b in pairs)


# ---------------------------------------------------------------------------
# morphism terms


class TenMor:
    """Base class for morphism terms; nodes are immutable and hashable."""
    __slots__ = ()


@dataclass(frozen=True, repr=False)
class DotMor(TenMor):
    """f.g on a single summand."""
    f: Any
    g: Any

    def __repr__(self):
        return f"({self.f!r}.{self.g!r})"


@dataclass(frozen=True, repr=False)
class DeltaL(TenMor):
    """a.b + a.b' -> a.(b+b')."""
    a: Any
    b: Any
    bp: Any

    def __repr__(self):
        return f"dL({self.a!r};{self.b!r},{self.bp!r})"


@dataclass(frozen=True, repr=False)
class DeltaR(TenMor):
    """a.b + a'.b -> (a+a').b."""
    b: Any
    a: Any
    ap: Any

    def __repr__(self):
        return f"dR({self.b!r};{self.a!r},{self.ap!r})"


@dataclass(frozen=True, repr=False)
class BetaGen(TenMor):
    """a.b + a'.b' -> a'.b' + a.b."""
    p: Dot
    q: Dot

    def __repr__(self):
        return f"beta({self.p!r},{self.q!r})"


@dataclass(frozen=True, repr=False)
class ZetaL(TenMor):
    """0 -> a.0."""
    a: Any

    def __repr__(self):
        return f"zL({self.a!r})"


@dataclass(frozen=True, repr=False)
class ZetaR(TenMor):
    """0 -> 0.b."""
    b: Any

    def __repr__(self):
        return f"zR({self.b!r})"


@dataclass(frozen=True, repr=False)
class InvGen(TenMor):
    """Formal inverse of an adjoined generator."""
    gen: TenMor

    def __repr__(self):
        return f"inv({self.gen!r})"


@dataclass(frozen=True, repr=False)
class IdT(TenMor):
    obj: tuple

    def __repr__(self):
        return f"id({list(self.obj)!r})"


@dataclass(frozen=True, repr=False)
class PermT(TenMor):
    """A permutation of the summands, identity on each."""
    perm: Permutation
    obj: tuple

    def __repr__(self):
        return f"perm[{self.perm}]({list(self.obj)!r})"


@dataclass(frozen=True, repr=False)
class SumT(TenMor):
    parts: tuple

    def __repr__(self):
        return "(" + " + ".join(map(repr, self.parts)) + ")"


@dataclass(frozen=True, repr=False)
class CompT(TenMor):
    """steps[0] applied first."""
    steps: tuple

    def __repr__(self):
        return "(" + " ; ".join(map(repr, reversed(self.steps))) + ")"


ADJOINED = (DeltaL, DeltaR, BetaGen, ZetaL, ZetaR)


# ---------------------------------------------------------------------------
# the tensor category


class TensorCat(PermCategory):
    def __init__(self, a: PermCategory, b: PermCategory):
        self.a = a
        self.b = b
        self.name = f"({a.name}(x){b.name})"
        self._ends: dict = {}

    # -- endpoints --
    def atom_src(self, t: TenMor) -> tuple:
        return self.endpoints(t)[0]

    def endpoints(self, t: TenMor) -> tuple:
        """(source, target) of a term; raises IllTyped on inconsistency."""
        hit = self._ends.get(t)
        if hit is not None:
            return hit
        a, b = self.a, self.b
        if isinstance(t, DotMor):
            out = ((Dot(a.mor_src(t.f), b.mor_src(t.g)),),
                   (Dot(a.mor_tgt(t.f), b.mor_tgt(t.g)),))
        elif isinstance(t, DeltaL):
            out = ((Dot(t.a, t.b), Dot(t.a, t.bp)),
                   (Dot(t.a, b.sum_obj(t.b, t.bp)),))
        elif isinstance(t, DeltaR):
            out = ((Dot(t.a, t.b), Dot(t.ap, t.b)),
                   (Dot(a.sum_obj(t.a, t.ap), t.b),))
        elif isinstance(t, BetaGen):
            out = ((t.p, t.q), (t.q, t.p))
        elif isinstance(t, ZetaL):
            out = ((), (Dot(t.a, b.unit_obj),))
        elif isinstance(t, ZetaR):
            out = ((), (Dot(a.unit_obj, t.b),))
        elif isinstance(t, InvGen):
            s, g = self.endpoints(t.gen)
            out = (g, s)
        elif isinstance(t, IdT):
            out = (t.obj, t.obj)
        elif isinstance(t, PermT):
            if t.perm.size != len(t.obj):
                raise IllTyped(f"permutation size {t.perm.size} vs {len(t.obj)} summands")
            out = (t.obj, tuple(t.perm.permute(list(t.obj))))
        elif isinstance(t, SumT):
            ends = [self.endpoints(p) for p in t.parts]
            out = (sum((e[0] for e in ends), ()), sum((e[1] for e in ends), ()))
        elif isinstance(t, CompT):
            if not t.steps:
                raise IllTyped("empty composite")
            ends = [self.endpoints(s) for s in t.steps]
            for i in range(len(ends) - 1):
                if ends[i][1] != ends[i + 1][0]:
                    raise IllTyped(
                        f"composite mismatch at step {i}: {ends[i][1]} vs {ends[i+1][0]}")
            out = (ends[0][0], ends[-1][1])
        else:
            raise IllTyped(f"unknown term node {t!r}")
        self._ends[t] = out
        return out

    # -- PermCategory interface --
    @property
    def unit_obj(self):
        return ()

    def sum_obj(self, x, y):
        return tuple(x) + tuple(y)

    def id_of(self, w):
        return IdT(tuple(w))

    def compose(self, g, f):
        fs, ft = self.endpoints(f)
        gs, gt = self.endpoints(g)
        if ft != gs:
            raise IllTyped(f"compose mismatch: {ft} vs {gs}")
        steps = (f.steps if isinstance(f, CompT) else (f,)) + \
                (g.steps if isinstance(g, CompT) else (g,))
        return CompT(steps)

    def sum_mor(self, f, g):
        parts = (f.parts if isinstance(f, SumT) else (f,)) + \
                (g.parts if isinstance(g, SumT) else (g,))
        return SumT(parts)

    def symmetry(self, x, y):
        x, y = tuple(x), tuple(y)
        return PermT(block_transposition(len(x), len(y)), x + y)

    def block_symmetry(self, objs, perm):
        words = [tuple(w) for w in objs]
        src = sum(words, ())
        return PermT(block_permutation([len(w) for w in words], perm), src)

    def mor_src(self, t):
        return self.endpoints(t)[0]

    def mor_tgt(self, t):
        return self.endpoints(t)[1]

    def mor_eq(self, f, g) -> Verdict:
        if self.endpoints(f) != self.endpoints(g):
            return Verdict.DISTINCT
        nf, ng = normalize(self, f), normalize(self, g)
        if nf == ng:
            return Verdict.EQUAL
        if _PROVER_HOOK is not None:
            v = _PROVER_HOOK(self, nf, ng)
            if v is not None:
                return v
        return Verdict.UNKNOWN

    def try_invert(self, t):
        return invert_term(self, t)

    def enum_objects(self, bound: int) -> Iterator:
        atoms = [Dot(a, b)
                 for a in self.a.enum_objects(bound)
                 for b in self.b.enum_objects(bound)]
        for n in range(bound + 1):
            for w in itertools.product(atoms, repeat=n):
                yield w

    def enum_homs(self, x, y) -> Iterator:
        raise NotImplementedError("tensor homs are not enumerable in general")


def tensor_category(a: PermCategory, b: PermCategory) -> TensorCat:
    return TensorCat(a, b)


# prover hook: wired by the coherence module to avoid an import cycle
_PROVER_HOOK: Callable | None = None


def set_prover_hook(hook) -> None:
    global _PROVER_HOOK
    _PROVER_HOOK = hook


# ---------------------------------------------------------------------------
# normalization and inversion


def is_identity_term(cat: TensorCat, t: TenMor) -> bool:
    """Syntactic identity detection; conservative (never guesses)."""
    if isinstance(t, IdT):
        return True
    if isinstance(t, PermT):
        return t.perm.is_identity()
    if isinstance(t, DotMor):
        src, _ = cat.endpoints(t)
        return (cat.a.mor_eq(t.f, cat.a.id_of(src[0].left)).holds
                and cat.b.mor_eq(t.g, cat.b.id_of(src[0].right)).holds)
    if isinstance(t, SumT):
        return all(is_identity_term(cat, p) for p in t.parts)
    if isinstance(t, CompT):
        return all(is_identity_term(cat, s) for s in t.steps)
    return False


def _coalesce_perm_parts(parts):
    """Merge adjacent pure-permutation summands into single PermT nodes."""
    runs = []
    for p in parts:
        if isinstance(p, (IdT, PermT)):
            perm = p.perm if isinstance(p, PermT) else Permutation.identity(len(p.obj))
            if runs and isinstance(runs[-1], tuple):
                q, w = runs[-1]
                runs[-1] = (q + perm, w + tuple(p.obj))
            else:
                runs.append((perm, tuple(p.obj)))
        else:
            runs.append(p)
    out = []
    for p in runs:
        if isinstance(p, tuple):
            perm, obj = p
            out.append(IdT(obj) if perm.is_identity() else PermT(perm, obj))
        else:
            out.append(p)
    return out


def normalize(cat: TensorCat, t: TenMor) -> TenMor:
    """Flatten sums/composites, drop identity steps, cancel syntactically
    adjacent inverse pairs, fuse adjacent permutation blocks.  Not a
    decision procedure."""
    if isinstance(t, BetaGen):
        # the symmetry generator on singletons is the letter transposition
        return PermT(block_transposition(1, 1), (t.p, t.q))
    if isinstance(t, SumT):
        parts = []
        for p in t.parts:
            p = normalize(cat, p)
            if isinstance(p, SumT):
                parts.extend(p.parts)
            elif isinstance(p, IdT) and p.obj == ():
                continue
            else:
                parts.append(p)
        parts = _coalesce_perm_parts(parts)
        if not parts:
            return IdT(())
        if len(parts) == 1:
            return parts[0]
        return SumT(tuple(parts))
    if isinstance(t, CompT):
        steps = []
        for s in t.steps:
            s = normalize(cat, s)
            if isinstance(s, CompT):
                steps.extend(s.steps)
            elif is_identity_term(cat, s):
                continue
            else:
                steps.append(s)
        # cancel adjacent inverse pairs, fuse adjacent permutation steps
        changed = True
        while changed:
            changed = False
            for i in range(len(steps) - 1):
                u, v = steps[i], steps[i + 1]
                if (isinstance(v, InvGen) and v.gen == u) or \
                        (isinstance(u, InvGen) and u.gen == v):
                    del steps[i:i + 2]
                    changed = True
                    break
                if isinstance(u, PermT) and isinstance(v, PermT):
                    merged = u.perm.then(v.perm)
                    if merged.is_identity():
                        del steps[i:i + 2]
                    else:
                        steps[i:i + 2] = [PermT(merged, u.obj)]
                    changed = True
                    break
        if not steps:
            return IdT(cat.endpoints(t)[0])
        if len(steps) == 1:
            return steps[0]
        return CompT(tuple(steps))
    if isinstance(t, InvGen):
        g = normalize(cat, t.gen)
        if isinstance(g, InvGen):
            return g.gen
        if isinstance(g, PermT):
            return PermT(g.perm.inverse(), cat.endpoints(g)[1])
        if is_identity_term(cat, g):
            return g
        return InvGen(g)
    if isinstance(t, PermT) and t.perm.is_identity():
        return IdT(t.obj)
    return t


def invert_term(cat: TensorCat, t: TenMor):
    if isinstance(t, IdT):
        return t
    if isinstance(t, PermT):
        return PermT(t.perm.inverse(), cat.endpoints(t)[1])
    if isinstance(t, ADJOINED):
        return InvGen(t)
    if isinstance(t, InvGen):
        return t.gen
    if isinstance(t, DotMor):
        fi = cat.a.try_invert(t.f)
        gi = cat.b.try_invert(t.g)
        if fi is None or gi is None:
            return None
        return DotMor(fi, gi)
    if isinstance(t, SumT):
        parts = [invert_term(cat, p) for p in t.parts]
        if any(p is None for p in parts):
            return None
        return SumT(tuple(parts))
    if isinstance(t, CompT):
        steps = [invert_term(cat, s) for s in reversed(t.steps)]
        if any(s is None for s in steps):
            return None
        return CompT(tuple(steps))
    return None


def check_term(cat: TensorCat, t: TenMor) -> tuple:
    """Recompute endpoints, raising IllTyped on any inconsistency."""
    return cat.endpoints(t)


# ---------------------------------------------------------------------------
# bilinear maps


@dataclass(frozen=True)
class BilinearMap:
    """A functor of two variables, linear in each, with invertible
    distribution constraints.

    constraint_a(a, b, b'): H(a,b) + H(a,b') -> H(a, b+b')
    constraint_b(b, a, a'): H(a,b) + H(a',b) -> H(a+a', b)
    unit_a(a): e -> H(a, 0);  unit_b(b): e -> H(0, b)
    """
    source_a: PermCategory
    source_b: PermCategory
    target: PermCategory
    obj_map: Callable[[Any, Any], Any]
    mor_map: Callable[[Any, Any], Any]
    constraint_a: Callable[[Any, Any, Any], Any]
    constraint_b: Callable[[Any, Any, Any], Any]
    unit_a: Callable[[Any], Any]
    unit_b: Callable[[Any], Any]
    name: str = ""

    def __call__(self, a, b):
        return self.obj_map(a, b)

    def on_mors(self, f, g):
        return self.mor_map(f, g)

    def fix_a(self, a) -> SymMonFunctor:
        """The symmetric monoidal functor H(a, -)."""
        c, b = self.target, self.source_b
        return SymMonFunctor(
            b, c,
            lambda y: self.obj_map(a, y),
            lambda g: self.mor_map(self.source_a.id_of(a), g),
            lambda y, yp: self.constraint_a(a, y, yp),
            self.unit_a(a), strict=False, name=f"{self.name}({a!r},-)")

    def fix_b(self, b) -> SymMonFunctor:
        c, a = self.target, self.source_a
        return SymMonFunctor(
            a, c,
            lambda x: self.obj_map(x, b),
            lambda f: self.mor_map(f, self.source_b.id_of(b)),
            lambda x, xp: self.constraint_b(b, x, xp),
            self.unit_b(b), strict=False, name=f"{self.name}(-,{b!r})")


def validate_bilinear(h: BilinearMap, bound: int):
    """All bilinear axioms on enumerated objects: both fixed-variable functor
    families, the interchange square, agreement of the two unit constraints at
    the units, and the two unit/distribution squares."""
    from .perm_core import ValidationReport, validate_functor
    rep = ValidationReport(subject=f"bilinear:{h.name}")
    a_objs = list(h.source_a.enum_objects(bound))
    b_objs = list(h.source_b.enum_objects(bound))
    c = h.target

    ok, wit = True, None
    for a in a_objs:
        sub = validate_functor(h.fix_a(a), bound)
        if not sub.passed:
            ok, wit = False, (a, sub.failures())
            break
    rep.add("fixed-first-argument-functors", ok, wit)

    ok, wit = True, None
    for b in b_objs:
        sub = validate_functor(h.fix_b(b), bound)
        if not sub.passed:
            ok, wit = False, (b, sub.failures())
            break
    rep.add("fixed-second-argument-functors", ok, wit)

    ok, wit = True, None
    for a, ap in itertools.product(a_objs, repeat=2):
        for b, bp in itertools.product(b_objs, repeat=2):
            # source order H(a,b), H(a,b'), H(a',b), H(a',b')
            left = c.compose(
                h.constraint_b(h.source_b.sum_obj(b, bp), a, ap),
                c.sum_mor(h.constraint_a(a, b, bp), h.constraint_a(ap, b, bp)))
            shuffle = c.sum_mor_list([
                c.id_of(h(a, b)),
                c.symmetry(h(a, bp), h(ap, b)),
                c.id_of(h(ap, bp))])
            right = c.compose(
                h.constraint_a(h.source_a.sum_obj(a, ap), b, bp),
                c.compose(
                    c.sum_mor(h.constraint_b(b, a, ap), h.constraint_b(bp, a, ap)),
                    shuffle))
            if not c.mor_eq(left, right).holds:
                ok, wit = False, (a, ap, b, bp)
                break
    rep.add("interchange", ok, wit)

    rep.add("units-agree-at-unit",
            c.mor_eq(h.unit_a(h.source_a.unit_obj), h.unit_b(h.source_b.unit_obj)).holds)

    ok, wit = True, None
    for a, ap in itertools.product(a_objs, repeat=2):
        lhs = c.compose(h.constraint_b(h.source_b.unit_obj, a, ap),
                        c.sum_mor(h.unit_a(a), h.unit_a(ap)))
        if not c.mor_eq(lhs, h.unit_a(h.source_a.sum_obj(a, ap))).holds:
            ok, wit = False, (a, ap)
            break
    rep.add("unit-distribution-first", ok, wit)

    ok, wit = True, None
    for b, bp in itertools.product(b_objs, repeat=2):
        lhs = c.compose(h.constraint_a(h.source_a.unit_obj, b, bp),
                        c.sum_mor(h.unit_b(b), h.unit_b(bp)))
        if not c.mor_eq(lhs, h.unit_b(h.source_b.sum_obj(b, bp))).holds:
            ok, wit = False, (b, bp)
            break
    rep.add("unit-distribution-second", ok, wit)
    return rep


def canonical_bilinear(a: PermCategory, b: PermCategory,
                       ten: TensorCat | None = None) -> BilinearMap:
    """(a, b) -> the one-summand object a.b of the tensor category; the
    constraints are the adjoined generators themselves."""
    ten = ten or tensor_category(a, b)
    return BilinearMap(
        a, b, ten,
        lambda x, y: (Dot(x, y),),
        lambda f, g: DotMor(f, g),
        lambda x, y, yp: DeltaL(x, y, yp),
        lambda y, x, xp: DeltaR(y, x, xp),
        lambda x: ZetaL(x),
        lambda y: ZetaR(y),
        name=f"pair({a.name},{b.name})")


def eval_bilinear_obj(h: BilinearMap, w) -> Any:
    return h.target.sum_obj_list([h(d.left, d.right) for d in w])


def eval_bilinear(h: BilinearMap, cat: TensorCat, t: TenMor):
    """The strict functor out of the tensor determined by a bilinear map,
    applied to one term."""
    c = h.target
    if isinstance(t, DotMor):
        return h.on_mors(t.f, t.g)
    if isinstance(t, DeltaL):
        return h.constraint_a(t.a, t.b, t.bp)
    if isinstance(t, DeltaR):
        return h.constraint_b(t.b, t.a, t.ap)
    if isinstance(t, BetaGen):
        return c.symmetry(h(t.p.left, t.p.right), h(t.q.left, t.q.right))
    if isinstance(t, ZetaL):
        return h.unit_a(t.a)
    if isinstance(t, ZetaR):
        return h.unit_b(t.b)
    if isinstance(t, InvGen):
        inner = eval_bilinear(h, cat, t.gen)
        inv = c.try_invert(inner)
        if inv is None:
            raise IllTyped(f"target cannot invert the image of {t.gen!r}")
        return inv
    if isinstance(t, IdT):
        return c.id_of(eval_bilinear_obj(h, t.obj))
    if isinstance(t, PermT):
        return c.block_symmetry([h(d.left, d.right) for d in t.obj], t.perm)
    if isinstance(t, SumT):
        return c.sum_mor_list([eval_bilinear(h, cat, p) for p in t.parts])
    if isinstance(t, CompT):
        return c.compose_list([eval_bilinear(h, cat, s) for s in t.steps])
    raise IllTyped(f"unknown term node {t!r}")


def strict_of_bilinear(h: BilinearMap, cat: TensorCat | None = None) -> SymMonFunctor:
    """The universal property, one direction: a bilinear map induces a strict
    functor out of the tensor category."""
    cat = cat or tensor_category(h.source_a, h.source_b)
    return strict_functor(cat, h.target,
                          lambda w: eval_bilinear_obj(h, w),
                          lambda t: eval_bilinear(h, cat, t),
                          name=f"eval[{h.name}]")


def bilinear_of_strict(f: SymMonFunctor) -> BilinearMap:
    """The universal property, other direction: restrict a strict functor out
    of a tensor category along the canonical bilinear map."""
    if not f.strict:
        raise ValueError("NotStrict: the universal property needs a strict functor")
    cat: TensorCat = f.source
    return BilinearMap(
        cat.a, cat.b, f.target,
        lambda a, b: f((Dot(a, b),)),
        lambda m, n: f.on_mor(DotMor(m, n)),
        lambda a, b, bp: f.on_mor(DeltaL(a, b, bp)),
        lambda b, a, ap: f.on_mor(DeltaR(b, a, ap)),
        lambda a: f.on_mor(ZetaL(a)),
        lambda b: f.on_mor(ZetaR(b)),
        name=f"restrict[{f.name}]")


def bilin_sum(h: BilinearMap, j: BilinearMap) -> BilinearMap:
    """Pointwise sum; constraints regroup the middle summands first."""
    if (h.source_a, h.source_b, h.target) != (j.source_a, j.source_b, j.target):
        raise ValueError("SourceMismatch: bilinear sum needs parallel maps")
    c = h.target

    def ca(a, b, bp):
        shuffle = c.sum_mor_list([
            c.id_of(h(a, b)), c.symmetry(j(a, b), h(a, bp)), c.id_of(j(a, bp))])
        return c.compose(c.sum_mor(h.constraint_a(a, b, bp), j.constraint_a(a, b, bp)),
                         shuffle)

    def cb(b, a, ap):
        shuffle = c.sum_mor_list([
            c.id_of(h(a, b)), c.symmetry(j(a, b), h(ap, b)), c.id_of(j(ap, b))])
        return c.compose(c.sum_mor(h.constraint_b(b, a, ap), j.constraint_b(b, a, ap)),
                         shuffle)

    return BilinearMap(
        h.source_a, h.source_b, c,
        lambda a, b: c.sum_obj(h(a, b), j(a, b)),
        lambda f, g: c.sum_mor(h.on_mors(f, g), j.on_mors(f, g)),
        ca, cb,
        lambda a: c.sum_mor(h.unit_a(a), j.unit_a(a)),
        lambda b: c.sum_mor(h.unit_b(b), j.unit_b(b)),
        name=f"({h.name}+{j.name})")


def unit_bilinear(a: PermCategory, b: PermCategory, c: PermCategory) -> BilinearMap:
    e = c.unit_obj
    ident = c.id_of(e)
    return BilinearMap(a, b, c,
                       lambda x, y: e, lambda f, g: ident,
                       lambda x, y, yp: ident, lambda y, x, xp: ident,
                       lambda x: ident, lambda y: ident, name="const_unit")


def bilin_pre(h: BilinearMap, p: SymMonFunctor, q: SymMonFunctor) -> BilinearMap:
    """H(P-, Q-); each constraint is H's constraint followed by H applied to
    the functor constraint in the relevant coordinate."""
    if p.target is not h.source_a or q.target is not h.source_b:
        raise ValueError("SourceMismatch: precomposition endpoints")
    c = h.target
    ida = h.source_a.id_of
    idb = h.source_b.id_of

    def ca(a, b, bp):
        return c.compose(h.on_mors(ida(p(a)), q.f2(b, bp)),
                         h.constraint_a(p(a), q(b), q(bp)))

    def cb(b, a, ap):
        return c.compose(h.on_mors(p.f2(a, ap), idb(q(b))),
                         h.constraint_b(q(b), p(a), p(ap)))

    def ua(a):
        return c.compose(h.on_mors(ida(p(a)), q.f0), h.unit_a(p(a)))

    def ub(b):
        return c.compose(h.on_mors(p.f0, idb(q(b))), h.unit_b(q(b)))

    return BilinearMap(p.source, q.source, c,
                       lambda a, b: h(p(a), q(b)),
                       lambda f, g: h.on_mors(p.on_mor(f), q.on_mor(g)),
                       ca, cb, ua, ub, name=f"{h.name}({p.name}-,{q.name}-)")


def bilin_post(r: SymMonFunctor, h: BilinearMap) -> BilinearMap:
    """R(H(-,-)); constraints R2 then R of H's constraint."""
    if r.source is not h.target:
        raise ValueError("SourceMismatch: postcomposition endpoints")
    c = r.target

    def ca(a, b, bp):
        return c.compose(r.on_mor(h.constraint_a(a, b, bp)),
                         r.f2(h(a, b), h(a, bp)))

    def cb(b, a, ap):
        return c.compose(r.on_mor(h.constraint_b(b, a, ap)),
                         r.f2(h(a, b), h(ap, b)))

    return BilinearMap(h.source_a, h.source_b, c,
                       lambda a, b: r(h(a, b)),
                       lambda f, g: r.on_mor(h.on_mors(f, g)),
                       ca, cb,
                       lambda a: c.compose(r.on_mor(h.unit_a(a)), r.f0),
                       lambda b: c.compose(r.on_mor(h.unit_b(b)), r.f0),
                       name=f"{r.name}{h.name}")


@dataclass(frozen=True)
class BilinTransform:
    src_map: BilinearMap
    tgt_map: BilinearMap
    component: Callable[[Any, Any], Any]
    name: str = ""

    def at(self, a, b):
        return self.component(a, b)

    def fix_a(self, a) -> MonTransform:
        return MonTransform(self.src_map.fix_a(a), self.tgt_map.fix_a(a),
                            lambda b: self.component(a, b), name=self.name)

    def fix_b(self, b) -> MonTransform:
        return MonTransform(self.src_map.fix_b(b), self.tgt_map.fix_b(b),
                            lambda a: self.component(a, b), name=self.name)


# ---------------------------------------------------------------------------
# functorial tensor of functors and transformations


def tensor_functor(f: SymMonFunctor, g: SymMonFunctor,
                   src: TensorCat | None = None,
                   tgt: TensorCat | None = None) -> SymMonFunctor:
    """F(x)G between tensor categories, strict on formal sums; the adjoined
    generators pick up the functor constraints of F and G."""
    src = src or tensor_category(f.source, g.source)
    tgt = tgt or tensor_category(f.target, g.target)
    ida = f.target.id_of
    idb = g.target.id_of

    def on_obj(w):
        return tuple(Dot(f(d.left), g(d.right)) for d in w)

    def on_mor(t):
        if isinstance(t, DotMor):
            return DotMor(f.on_mor(t.f), g.on_mor(t.g))
        if isinstance(t, DeltaL):
            return CompT((DeltaL(f(t.a), g(t.b), g(t.bp)),
                          DotMor(ida(f(t.a)), g.f2(t.b, t.bp))))
        if isinstance(t, DeltaR):
            return CompT((DeltaR(g(t.b), f(t.a), f(t.ap)),
                          DotMor(f.f2(t.a, t.ap), idb(g(t.b)))))
        if isinstance(t, BetaGen):
            return BetaGen(Dot(f(t.p.left), g(t.p.right)),
                           Dot(f(t.q.left), g(t.q.right)))
        if isinstance(t, ZetaL):
            return CompT((ZetaL(f(t.a)), DotMor(ida(f(t.a)), g.f0)))
        if isinstance(t, ZetaR):
            return CompT((ZetaR(g(t.b)), DotMor(f.f0, idb(g(t.b)))))
        if isinstance(t, InvGen):
            img = on_mor(t.gen)
            inv = invert_term(tgt, img)
            if inv is None:
                raise IllTyped(f"image of {t.gen!r} is not invertible")
            return inv
        if isinstance(t, IdT):
            return IdT(on_obj(t.obj))
        if isinstance(t, PermT):
            return PermT(t.perm, on_obj(t.obj))
        if isinstance(t, SumT):
            return SumT(tuple(on_mor(p) for p in t.parts))
        if isinstance(t, CompT):
            return CompT(tuple(on_mor(s) for s in t.steps))
        raise IllTyped(f"unknown term node {t!r}")

    return strict_functor(src, tgt, on_obj, on_mor, name=f"({f.name}(x){g.name})")


def tensor_transform(phi: MonTransform, psi: MonTransform,
                     src: TensorCat | None = None,
                     tgt: TensorCat | None = None) -> MonTransform:
    """Component at a formal sum: the sum of paired components; 1 at zero."""
    fsrc = tensor_functor(phi.src_fun, psi.src_fun, src, tgt)
    ftgt = tensor_functor(phi.tgt_fun, psi.tgt_fun, src, tgt)

    def at(w):
        if not w:
            return IdT(())
        return SumT(tuple(DotMor(phi.at(d.left), psi.at(d.right)) for d in w))

    return MonTransform(fsrc, ftgt, at, name=f"({phi.name}(x){psi.name})")


# ---------------------------------------------------------------------------
# curry / uncurry


def curry(h: BilinearMap, probe_objects=(), seeds=(), hom_cat=None) -> SymMonFunctor:
    """A bilinear map as a functor into the hom category: a |-> H(a, -).

    Pass the same `hom_cat` to several calls when the results must be
    parallel functors (functor identity is by category instance).
    """
    a_cat, b_cat, c = h.source_a, h.source_b, h.target
    hc = hom_cat if hom_cat is not None else \
        hom_category(b_cat, c, seeds=seeds, probe_objects=probe_objects)

    def on_obj(a):
        return h.fix_a(a)

    def on_mor(f):
        a0, a1 = a_cat.mor_src(f), a_cat.mor_tgt(f)
        return MonTransform(on_obj(a0), on_obj(a1),
                            lambda b: h.on_mors(f, b_cat.id_of(b)),
                            name=f"{h.name}({f!r},-)")

    def f2(a, ap):
        return MonTransform(
            hc.sum_obj(on_obj(a), on_obj(ap)), on_obj(a_cat.sum_obj(a, ap)),
            lambda b: h.constraint_b(b, a, ap), name="c2")

    f0 = MonTransform(hc.unit_obj, on_obj(a_cat.unit_obj),
                      lambda b: h.unit_b(b), name="c0")
    return SymMonFunctor(a_cat, hc, on_obj, on_mor, f2, f0,
                         strict=False, name=f"curry[{h.name}]")


def uncurry(f: SymMonFunctor) -> BilinearMap:
    """Inverse of `curry`, reading every field back off the functor."""
    hc: HomCat = f.target
    a_cat, b_cat, c = f.source, hc.a, hc.b
    return BilinearMap(
        a_cat, b_cat, c,
        lambda a, b: f(a)(b),
        lambda m, n: c.compose(f(a_cat.mor_tgt(m)).on_mor(n), f.on_mor(m).at(b_cat.mor_src(n))),
        lambda a, b, bp: f(a).f2(b, bp),
        lambda b, a, ap: f.f2(a, ap).at(b),
        lambda a: f(a).f0,
        lambda b: f.f0.at(b),
        name=f"uncurry[{f.name}]")


# ---------------------------------------------------------------------------
# strictification


def _multi_constraint(f: SymMonFunctor, pieces: list) -> Any:
    """The canonical left-associated constraint sum F(p1)+...+F(pn) -> F(p1+...+pn).

    pieces are source objects; empty list gives f0, singleton the identity.
    """
    t = f.target
    if not pieces:
        return f.f0
    acc_obj = pieces[0]
    acc = t.id_of(f(pieces[0]))
    src = f.source
    for p in pieces[1:]:
        step = f.f2(acc_obj, p)
        acc = t.compose(step, t.sum_mor(acc, t.id_of(f(p))))
        acc_obj = src.sum_obj(acc_obj, p)
    return acc


def strictify(f: SymMonFunctor) -> SymMonFunctor:
    """Replace a functor out of a tensor category by a strict one sending a
    formal sum to the sum of its one-summand images; generators compose with
    the canonical constraint first."""
    cat: TensorCat = f.source
    c = f.target

    def on_obj(w):
        return c.sum_obj_list([f((d,)) for d in w])

    def pre_constraint(w):
        return _multi_constraint(f, [(d,) for d in w])

    def on_mor(t):
        if isinstance(t, (DeltaL, DeltaR, ZetaL, ZetaR)):
            src, _ = cat.endpoints(t)
            return c.compose(f.on_mor(t), pre_constraint(src))
        if isinstance(t, BetaGen):
            return c.symmetry(f((t.p,)), f((t.q,)))
        if isinstance(t, DotMor):
            return f.on_mor(t)
        if isinstance(t, InvGen):
            inner = on_mor(t.gen)
            inv = c.try_invert(inner)
            if inv is None:
                raise IllTyped(f"target cannot invert the strictified image of {t.gen!r}")
            return inv
        if isinstance(t, IdT):
            return c.id_of(on_obj(t.obj))
        if isinstance(t, PermT):
            return c.block_symmetry([f((d,)) for d in t.obj], t.perm)
        if isinstance(t, SumT):
            return c.sum_mor_list([on_mor(p) for p in t.parts])
        if isinstance(t, CompT):
            return c.compose_list([on_mor(s) for s in t.steps])
        raise IllTyped(f"unknown term node {t!r}")

    return strict_functor(cat, c, on_obj, on_mor, name=f"{f.name}^s")


def mu(f: SymMonFunctor) -> MonTransform:
    """The canonical comparison strictify(F) => F, componentwise the
    left-associated constraint composite (f0 at zero, identity at one summand)."""
    return MonTransform(strictify(f), f,
                        lambda w: _multi_constraint(f, [(d,) for d in w]),
                        name=f"mu[{f.name}]")


def strictify_transform(alpha: MonTransform) -> MonTransform:
    """Sum of one-summand components."""
    c = alpha.src_fun.target
    return MonTransform(
        strictify(alpha.src_fun), strictify(alpha.tgt_fun),
        lambda w: c.sum_mor_list([alpha.at((d,)) for d in w]),
        name=f"{alpha.name}^s")


# ---------------------------------------------------------------------------
# the strict-functor sum and its comparison with the pointwise sum


def boxplus(f: SymMonFunctor, g: SymMonFunctor) -> SymMonFunctor:
    """Sum of strict functors out of a tensor category that is again strict:
    summand images are interleaved atomwise rather than grouped."""
    if not (f.strict and g.strict):
        raise ValueError("NotStrict: this sum is defined for strict functors")
    if f.source is not g.source or f.target is not g.target:
        raise ValueError("SourceMismatch: parallel functors required")
    cat: TensorCat = f.source
    c = f.target

    def on_obj(w):
        return c.sum_obj_list([c.sum_obj(f((d,)), g((d,))) for d in w])

    def both(t):
        return c.sum_mor(f.on_mor(t), g.on_mor(t))

    def on_mor(t):
        if isinstance(t, (DeltaL, DeltaR)):
            src, _ = cat.endpoints(t)
            d0, d1 = src
            shuffle = c.sum_mor_list([
                c.id_of(f((d0,))), c.symmetry(g((d0,)), f((d1,))), c.id_of(g((d1,)))])
            return c.compose(both(t), shuffle)
        if isinstance(t, (ZetaL, ZetaR)):
            return both(t)
        if isinstance(t, BetaGen):
            pair_p = c.sum_obj(f((t.p,)), g((t.p,)))
            pair_q = c.sum_obj(f((t.q,)), g((t.q,)))
            return c.symmetry(pair_p, pair_q)
        if isinstance(t, DotMor):
            return both(t)
        if isinstance(t, InvGen):
            inner = on_mor(t.gen)
            inv = c.try_invert(inner)
            if inv is None:
                raise IllTyped(f"target cannot invert the image of {t.gen!r}")
            return inv
        if isinstance(t, IdT):
            return c.id_of(on_obj(t.obj))
        if isinstance(t, PermT):
            objs = [c.sum_obj(f((d,)), g((d,))) for d in t.obj]
            return c.block_symmetry(objs, t.perm)
        if isinstance(t, SumT):
            return c.sum_mor_list([on_mor(p) for p in t.parts])
        if isinstance(t, CompT):
            return c.compose_list([on_mor(s) for s in t.steps])
        raise IllTyped(f"unknown term node {t!r}")

    return strict_functor(cat, c, on_obj, on_mor, name=f"({f.name}#{g.name})")


def box_vs_oplus_iso(f: SymMonFunctor, g: SymMonFunctor) -> MonTransform:
    """The regrouping isomorphism from the interleaved strict sum to the
    pointwise sum: at n summands, the inverse perfect shuffle of blocks."""
    from .perm_core import oplus_functors
    c = f.target

    def at_box(w):
        n = len(w)
        inter = [x for d in w for x in (f((d,)), g((d,)))]
        return c.block_symmetry(inter, interleave_two(n, n).inverse())

    return MonTransform(boxplus(f, g), oplus_functors(f, g), at_box,
                        name=f"regroup[{f.name},{g.name}]")


# ---------------------------------------------------------------------------
# tensor-hom correspondence


def curry_tensor(f: SymMonFunctor, probe_objects=(), seeds=()) -> SymMonFunctor:
    """From a functor out of a tensor category to a functor into the hom
    category: strictify, restrict to a bilinear map, curry."""
    return curry(bilinear_of_strict(strictify(f)), probe_objects, seeds)


def uncurry_tensor(g: SymMonFunctor, cat: TensorCat | None = None) -> SymMonFunctor:
    """The reverse: uncurry to a bilinear map, then the induced strict functor."""
    return strict_of_bilinear(uncurry(g), cat)


def uncurry_psnat_cell(r: SymMonFunctor, g: SymMonFunctor,
                       cat: TensorCat) -> MonTransform:
    """Pseudonaturality of uncurrying in the target: the comparison between
    "postcompose pointwise with R, then uncurry" and "uncurry, then
    postcompose with R".  Components are R's canonical multi-constraints
    sum of R(...) pieces -> R(sum of pieces); identity when R is."""
    from .perm_core import compose_functors
    lhs = strict_of_bilinear(bilin_post(r, uncurry(g)), cat)
    rhs = compose_functors(r, uncurry_tensor(g, cat))

    def at(w):
        pieces = [g(d.left)(d.right) for d in w]
        return _multi_constraint(r, pieces)

    return MonTransform(lhs, rhs, at, name=f"psnat[{r.name}]")
