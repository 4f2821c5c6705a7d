"""Equality proving for formal tensor terms.

A term over an (iterated) tensor is *formal* when it is built from the
adjoined generators, permutations, and identity simple pieces.  Such a term
lifts to the same shape of tensors taken over free categories on fresh
letters, one letter per object occurrence in the source (unit occurrences
carry no letters).  Flattening the lift into the free category on paired
letters exposes an underlying permutation, and parallel formal terms with
equal underlying permutations are equal morphisms.  The criterion is
sufficient only: every failure reports Unknown, never inequality.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .perms import (Permutation, block_permutation, block_transposition,
                    interleave_two)
from .perm_core import (MonTransform, PermCategory, SymMonFunctor, Verdict,
                        compose_functors, identity_functor, strict_functor)
from .free_perm import FreeCat, FreeMor, discrete_fincat, free_cat, \
    induced_strict, product_fincat
from .tensor import (BetaGen, CompT, DeltaL, DeltaR, Dot, DotMor, IdT, IllTyped,
                     InvGen, PermT, SumT, TenMor, TensorCat, ZetaL, ZetaR,
                     set_prover_hook, tensor_category, tensor_functor)

__all__ = [
    "IterShape", "leaf_shape", "pair_shape", "shape_of",
    "FormalTerm", "NotFormal", "UnderlyingPerm", "NotParallel",
    "classify_formal", "underlying_perm", "prove_equal", "lift_embedding",
    "flatten_term", "flatten_functor", "flatten_iter",
    "pair_embed", "flatten_counit",
    "merge_left_chain", "merge_right_chain",
]


# ---------------------------------------------------------------------------
# shapes of iterated tensors


@dataclass(frozen=True)
class IterShape:
    """A bracketing of an iterated tensor; leaves are plain categories."""
    left: "IterShape | None"
    right: "IterShape | None"
    cat: PermCategory

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    @property
    def length(self) -> int:
        if self.is_leaf:
            return 1
        return self.left.length + self.right.length

    def leaf_paths(self, prefix=()):
        if self.is_leaf:
            yield prefix, self.cat
        else:
            yield from self.left.leaf_paths(prefix + ("L",))
            yield from self.right.leaf_paths(prefix + ("R",))


def leaf_shape(cat: PermCategory) -> IterShape:
    return IterShape(None, None, cat)


def pair_shape(left: IterShape, right: IterShape,
               cat: TensorCat | None = None) -> IterShape:
    cat = cat or tensor_category(left.cat, right.cat)
    if cat.a is not left.cat or cat.b is not right.cat:
        raise ValueError("shape node category does not match its children")
    return IterShape(left, right, cat)


def shape_of(cat: PermCategory) -> IterShape:
    """The fully unfolded shape of a (possibly iterated) tensor category."""
    if isinstance(cat, TensorCat):
        return pair_shape(shape_of(cat.a), shape_of(cat.b), cat)
    return leaf_shape(cat)


# ---------------------------------------------------------------------------
# letters of the lift


@dataclass(frozen=True)
class Label:
    """A letter naming one object occurrence at one leaf of the shape."""
    path: tuple
    index: int
    obj: Any

    def __repr__(self):
        return f"{self.obj}#{self.index}"


@dataclass(frozen=True)
class _DotDec:
    """Decoration of one summand: each side is a letter word (leaf) or a
    word of decorated summands (node)."""
    left: tuple
    right: tuple


@dataclass(frozen=True)
class _LeafId:
    """Placeholder for an identity simple component; resolved once the
    lift's free categories exist."""
    word: tuple


class _CannotLift(Exception):
    def __init__(self, path, reason):
        self.path = path
        self.reason = reason
        super().__init__(f"{reason} (at term path {path})")


@dataclass(frozen=True)
class NotFormal:
    """Why a term failed to lift; `path` indexes into the term tree."""
    path: tuple
    reason: str


@dataclass(frozen=True)
class FormalTerm:
    """A term together with its unique fresh-letter lift."""
    term: Any
    shape: IterShape
    lift: Any
    lift_shape: IterShape
    lift_src: Any
    lift_tgt: Any


@dataclass(frozen=True)
class UnderlyingPerm:
    """A permutation of the flattened source letters of a formal term."""
    source: tuple
    target: tuple
    perm: Permutation


class NotParallel(ValueError):
    pass


# ---------------------------------------------------------------------------
# the lifting walk


class _Lifter:
    """Single-use state for one classification: fresh letters, the union of
    letters forced equal by merges, and letter creation order per leaf."""

    def __init__(self, shape: IterShape):
        self.shape = shape
        self.counter = 0
        self.created: dict = {path: [] for path, _ in shape.leaf_paths()}
        self.parent: dict = {}

    # -- letters --
    def fresh(self, path, obj) -> Label:
        lbl = Label(path, self.counter, obj)
        self.counter += 1
        self.created[path].append(lbl)
        self.parent[lbl] = lbl
        return lbl

    def find(self, lbl: Label) -> Label:
        root = lbl
        while self.parent[root] is not root:
            root = self.parent[root]
        while self.parent[lbl] is not root:
            self.parent[lbl], lbl = root, self.parent[lbl]
        return root

    def union(self, a: Label, b: Label) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra is rb:
            return
        # keep the older letter as representative for determinism
        if ra.index <= rb.index:
            self.parent[rb] = ra
        else:
            self.parent[ra] = rb

    # -- decorations --
    def init_dec(self, shape, obj, spath):
        if shape.is_leaf:
            # one letter per indivisible summand, so later inverse steps can
            # split a merged factor anywhere a real boundary exists
            return tuple(self.fresh(spath, a)
                         for a in shape.cat.obj_atoms(obj))
        return tuple(_DotDec(self.init_dec(shape.left, d.left, spath + ("L",)),
                             self.init_dec(shape.right, d.right, spath + ("R",)))
                     for d in obj)

    def chi(self, shape, v):
        """The original object a decorated side stands for."""
        if shape.is_leaf:
            return shape.cat.sum_obj_list([lbl.obj for lbl in v])
        return tuple(Dot(self.chi(shape.left, d.left),
                         self.chi(shape.right, d.right)) for d in v)

    def decs_match(self, shape, v, w) -> bool:
        if len(v) != len(w):
            return False
        if shape.is_leaf:
            return all(shape.cat.obj_eq(a.obj, b.obj) for a, b in zip(v, w))
        return all(self.decs_match(shape.left, a.left, b.left)
                   and self.decs_match(shape.right, a.right, b.right)
                   for a, b in zip(v, w))

    def union_decs(self, shape, v, w) -> None:
        if shape.is_leaf:
            for a, b in zip(v, w):
                self.union(a, b)
            return
        for a, b in zip(v, w):
            self.union_decs(shape.left, a.left, b.left)
            self.union_decs(shape.right, a.right, b.right)

    def split(self, shape, v, want_first, want_second, tpath) -> int:
        """Leftmost split of a decorated side matching the two stated objects."""
        if not shape.is_leaf:
            k = len(want_first)
            if (k <= len(v)
                    and self.chi(shape, v[:k]) == tuple(want_first)
                    and self.chi(shape, v[k:]) == tuple(want_second)):
                return k
            raise _CannotLift(tpath, "merged factor does not split at the stated boundary")
        cat = shape.cat
        for k in range(len(v) + 1):
            if (cat.obj_eq(self.chi(shape, v[:k]), want_first)
                    and cat.obj_eq(self.chi(shape, v[k:]), want_second)):
                return k
        raise _CannotLift(tpath, "merged factor does not split at the stated boundary")

    # -- forward walk: dec covers the source of t --
    def walk(self, shape, t, dec, tpath, spath):
        if shape.is_leaf:
            cat = shape.cat
            if not cat.mor_eq(t, cat.id_of(cat.mor_src(t))).holds:
                raise _CannotLift(tpath, "simple component is not an identity")
            return dec, _LeafId(dec)
        cat = shape.cat
        L, R = shape.left, shape.right
        if isinstance(t, IdT):
            return dec, IdT(dec)
        if isinstance(t, PermT):
            return tuple(t.perm.permute(list(dec))), PermT(t.perm, dec)
        if isinstance(t, BetaGen):
            d1, d2 = dec
            return (d2, d1), BetaGen(d1, d2)
        if isinstance(t, DotMor):
            (d,) = dec
            ld, lf = self.walk(L, t.f, d.left, tpath + ("f",), spath + ("L",))
            rd, rg = self.walk(R, t.g, d.right, tpath + ("g",), spath + ("R",))
            return (_DotDec(ld, rd),), DotMor(lf, rg)
        if isinstance(t, DeltaL):
            d1, d2 = dec
            if not self.decs_match(L, d1.left, d2.left):
                raise _CannotLift(tpath, "left factors carry different letters")
            self.union_decs(L, d1.left, d2.left)
            pre = DeltaL(d1.left, d1.right, d2.right)
            return (_DotDec(d1.left, d1.right + d2.right),), pre
        if isinstance(t, DeltaR):
            d1, d2 = dec
            if not self.decs_match(R, d1.right, d2.right):
                raise _CannotLift(tpath, "right factors carry different letters")
            self.union_decs(R, d1.right, d2.right)
            pre = DeltaR(d1.right, d1.left, d2.left)
            return (_DotDec(d1.left + d2.left, d1.right),), pre
        if isinstance(t, ZetaL):
            side = self.init_dec(L, t.a, spath + ("L",))
            return (_DotDec(side, ()),), ZetaL(side)
        if isinstance(t, ZetaR):
            side = self.init_dec(R, t.b, spath + ("R",))
            return (_DotDec((), side),), ZetaR(side)
        if isinstance(t, SumT):
            out, parts, i = [], [], 0
            for k, p in enumerate(t.parts):
                w = len(cat.endpoints(p)[0])
                nd, lp = self.walk(shape, p, dec[i:i + w], tpath + ("parts", k), spath)
                out.extend(nd)
                parts.append(lp)
                i += w
            return tuple(out), SumT(tuple(parts))
        if isinstance(t, CompT):
            cur, steps = dec, []
            for k, s in enumerate(t.steps):
                cur, ls = self.walk(shape, s, cur, tpath + ("steps", k), spath)
                steps.append(ls)
            return cur, CompT(tuple(steps))
        if isinstance(t, InvGen):
            return self.walk_inverse(shape, t.gen, dec, tpath + ("gen",), spath)
        raise _CannotLift(tpath, f"unrecognized term node {type(t).__name__}")

    # -- backward walk: dec covers the target of g; lifts the inverse of g --
    def walk_inverse(self, shape, g, dec, tpath, spath):
        if shape.is_leaf:
            cat = shape.cat
            if not cat.mor_eq(g, cat.id_of(cat.mor_src(g))).holds:
                raise _CannotLift(tpath, "simple component is not an identity")
            return dec, _LeafId(dec)
        cat = shape.cat
        L, R = shape.left, shape.right
        if isinstance(g, IdT):
            return dec, IdT(dec)
        if isinstance(g, PermT):
            nd = tuple(g.perm.inverse().permute(list(dec)))
            return nd, PermT(g.perm.inverse(), dec)
        if isinstance(g, BetaGen):
            dq, dp = dec
            return (dp, dq), InvGen(BetaGen(dp, dq))
        if isinstance(g, DotMor):
            (d,) = dec
            ld, lf = self.walk_inverse(L, g.f, d.left, tpath + ("f",), spath + ("L",))
            rd, rg = self.walk_inverse(R, g.g, d.right, tpath + ("g",), spath + ("R",))
            return (_DotDec(ld, rd),), DotMor(lf, rg)
        if isinstance(g, DeltaL):
            (d,) = dec
            k = self.split(R, d.right, g.b, g.bp, tpath)
            nd = (_DotDec(d.left, d.right[:k]), _DotDec(d.left, d.right[k:]))
            return nd, InvGen(DeltaL(d.left, d.right[:k], d.right[k:]))
        if isinstance(g, DeltaR):
            (d,) = dec
            k = self.split(L, d.left, g.a, g.ap, tpath)
            nd = (_DotDec(d.left[:k], d.right), _DotDec(d.left[k:], d.right))
            return nd, InvGen(DeltaR(d.right, d.left[:k], d.left[k:]))
        if isinstance(g, ZetaL):
            (d,) = dec
            if d.right != ():
                raise _CannotLift(tpath, "unit side carries letters")
            return (), InvGen(ZetaL(d.left))
        if isinstance(g, ZetaR):
            (d,) = dec
            if d.left != ():
                raise _CannotLift(tpath, "unit side carries letters")
            return (), InvGen(ZetaR(d.right))
        if isinstance(g, SumT):
            out, parts, i = [], [], 0
            for k, p in enumerate(g.parts):
                w = len(cat.endpoints(p)[1])
                nd, lp = self.walk_inverse(shape, p, dec[i:i + w],
                                           tpath + ("parts", k), spath)
                out.extend(nd)
                parts.append(lp)
                i += w
            return tuple(out), SumT(tuple(parts))
        if isinstance(g, CompT):
            cur, steps = dec, []
            for k, s in enumerate(reversed(g.steps)):
                cur, ls = self.walk_inverse(shape, s, cur,
                                            tpath + ("steps", len(g.steps) - 1 - k), spath)
                steps.append(ls)
            return cur, CompT(tuple(steps))
        if isinstance(g, InvGen):
            return self.walk(shape, g.gen, dec, tpath + ("gen",), spath)
        raise _CannotLift(tpath, f"unrecognized term node {type(g).__name__}")

    # -- resolution: replace letters by their representatives --
    def build_lift_shape(self, shape, path=()):
        if shape.is_leaf:
            roots, seen = [], set()
            for lbl in self.created[path]:
                r = self.find(lbl)
                if r not in seen:
                    seen.add(r)
                    roots.append(r)
            gens = discrete_fincat(roots, name="lift(" + "/".join(path) + ")")
            return leaf_shape(free_cat(gens))
        return pair_shape(self.build_lift_shape(shape.left, path + ("L",)),
                          self.build_lift_shape(shape.right, path + ("R",)))

    def sub_side(self, shape, v):
        if shape.is_leaf:
            return tuple(self.find(lbl) for lbl in v)
        return tuple(Dot(self.sub_side(shape.left, d.left),
                         self.sub_side(shape.right, d.right)) for d in v)

    def sub_dot(self, shape, d):
        return Dot(self.sub_side(shape.left, d.left),
                   self.sub_side(shape.right, d.right))

    def sub_component(self, shape, lshape, x):
        if isinstance(x, _LeafId):
            return lshape.cat.id_of(self.sub_side(shape, x.word))
        return self.sub_term(shape, lshape, x)

    def sub_term(self, shape, lshape, t):
        L, R = shape.left, shape.right
        if isinstance(t, IdT):
            return IdT(self.sub_side(shape, t.obj))
        if isinstance(t, PermT):
            return PermT(t.perm, self.sub_side(shape, t.obj))
        if isinstance(t, BetaGen):
            return BetaGen(self.sub_dot(shape, t.p), self.sub_dot(shape, t.q))
        if isinstance(t, DotMor):
            return DotMor(self.sub_component(L, lshape.left, t.f),
                          self.sub_component(R, lshape.right, t.g))
        if isinstance(t, DeltaL):
            return DeltaL(self.sub_side(L, t.a),
                          self.sub_side(R, t.b), self.sub_side(R, t.bp))
        if isinstance(t, DeltaR):
            return DeltaR(self.sub_side(R, t.b),
                          self.sub_side(L, t.a), self.sub_side(L, t.ap))
        if isinstance(t, ZetaL):
            return ZetaL(self.sub_side(L, t.a))
        if isinstance(t, ZetaR):
            return ZetaR(self.sub_side(R, t.b))
        if isinstance(t, SumT):
            return SumT(tuple(self.sub_term(shape, lshape, p) for p in t.parts))
        if isinstance(t, CompT):
            return CompT(tuple(self.sub_term(shape, lshape, s) for s in t.steps))
        if isinstance(t, InvGen):
            return InvGen(self.sub_term(shape, lshape, t.gen))
        raise AssertionError(f"unexpected lifted node {t!r}")


def _term_endpoints(shape: IterShape, t):
    cat = shape.cat
    if isinstance(cat, TensorCat):
        return cat.endpoints(t)
    return (cat.mor_src(t), cat.mor_tgt(t))


def classify_formal(t, shape: IterShape):
    """Lift a term over fresh letters, or report why none exists.

    The lift decorates every leaf object occurrence in the source with a
    fresh letter (unit occurrences with none), threads the decorations
    through the term, and fails on any simple component that is not an
    identity, on a merge of differently lettered factors, or on an inverse
    merge whose boundary cannot be recovered.  The result is deterministic.
    """
    src, _ = _term_endpoints(shape, t)
    lifter = _Lifter(shape)
    dec0 = lifter.init_dec(shape, src, ())
    try:
        dec1, pre = lifter.walk(shape, t, dec0, (), ())
    except _CannotLift as err:
        return NotFormal(tuple(err.path), err.reason)
    lift_shape = lifter.build_lift_shape(shape)
    if shape.is_leaf:
        lift = lifter.sub_component(shape, lift_shape, pre)
    else:
        lift = lifter.sub_term(shape, lift_shape, pre)
    lift_src = lifter.sub_side(shape, dec0)
    lift_tgt = lifter.sub_side(shape, dec1)
    ends = _term_endpoints(lift_shape, lift)
    if ends != (lift_src, lift_tgt):
        raise AssertionError(f"lift endpoints {ends} disagree with decorations")
    return FormalTerm(term=t, shape=shape, lift=lift, lift_shape=lift_shape,
                      lift_src=lift_src, lift_tgt=lift_tgt)


def lift_embedding(ft: FormalTerm) -> SymMonFunctor:
    """The strict functor sending the lift back onto the original term's
    tensor: letters to the objects they name, their identities along."""
    return _chi_functor(ft.shape, ft.lift_shape)


def _chi_functor(shape: IterShape, lshape: IterShape) -> SymMonFunctor:
    if shape.is_leaf:
        free: FreeCat = lshape.cat
        return induced_strict(free, shape.cat,
                              lambda lbl: lbl.obj,
                              lambda nm: shape.cat.id_of(free.x.mors[nm][0].obj),
                              name="relabel")
    return tensor_functor(_chi_functor(shape.left, lshape.left),
                          _chi_functor(shape.right, lshape.right),
                          lshape.cat, shape.cat)


# ---------------------------------------------------------------------------
# flattening a tensor of free categories


def _flat_obj(w) -> tuple:
    return tuple((x, y) for d in w for x in d.left for y in d.right)


def _pair_perm(sf: Permutation, sg: Permutation, n: int) -> Permutation:
    m = sf.size
    img = [0] * (m * n)
    for i in range(m):
        for j in range(n):
            img[i * n + j] = sf(i) * n + sg(j)
    return Permutation(tuple(img))


def flatten_term(ten: TensorCat, t, target: FreeCat) -> FreeMor:
    """Row-major image of a term over two free categories in the free
    category on paired letters: simple pieces to componentwise pairs, the
    left merge to the block interleaving, the right merge and both unit
    inclusions to identities, the symmetry to the block transposition."""
    px: FreeCat = ten.a
    py: FreeCat = ten.b
    if isinstance(t, DotMor):
        f, g = t.f, t.g
        n = len(g.src)
        src = tuple((x, y) for x in f.src for y in g.src)
        tgt = tuple((x, y) for x in f.tgt for y in g.tgt)
        comps = tuple((cf, cg) for cf in f.components for cg in g.components)
        return target.make_mor(src, tgt, _pair_perm(f.perm, g.perm, n), comps)
    if isinstance(t, DeltaL):
        m, n1, n2 = len(t.a), len(t.b), len(t.bp)
        src = _flat_obj((Dot(t.a, t.b), Dot(t.a, t.bp)))
        return target.perm_mor(
            src, block_permutation([n1] * m + [n2] * m, interleave_two(m, m)))
    if isinstance(t, DeltaR):
        src = _flat_obj((Dot(t.a, t.b), Dot(t.ap, t.b)))
        return target.id_of(src)
    if isinstance(t, BetaGen):
        np_, nq = len(t.p.left) * len(t.p.right), len(t.q.left) * len(t.q.right)
        return target.perm_mor(_flat_obj((t.p, t.q)), block_transposition(np_, nq))
    if isinstance(t, (ZetaL, ZetaR)):
        return target.id_of(())
    if isinstance(t, IdT):
        return target.id_of(_flat_obj(t.obj))
    if isinstance(t, PermT):
        sizes = [len(d.left) * len(d.right) for d in t.obj]
        return target.perm_mor(_flat_obj(t.obj), block_permutation(sizes, t.perm))
    if isinstance(t, SumT):
        return target.sum_mor_list([flatten_term(ten, p, target) for p in t.parts])
    if isinstance(t, CompT):
        return target.compose_list([flatten_term(ten, s, target) for s in t.steps])
    if isinstance(t, InvGen):
        inv = target.try_invert(flatten_term(ten, t.gen, target))
        if inv is None:
            raise IllTyped(f"image of {t.gen!r} has no inverse")
        return inv
    raise IllTyped(f"unknown term node {t!r}")


def flatten_functor(ten: TensorCat, target: FreeCat | None = None) -> SymMonFunctor:
    """The strict equivalence from a tensor of two free categories to the
    free category on paired letters."""
    px, py = ten.a, ten.b
    if not (isinstance(px, FreeCat) and isinstance(py, FreeCat)):
        raise TypeError("flattening needs free categories on both factors")
    target = target or free_cat(product_fincat(px.x, py.x))
    return strict_functor(ten, target, _flat_obj,
                          lambda t: flatten_term(ten, t, target),
                          name="flatten")


def flatten_iter(shape: IterShape) -> SymMonFunctor:
    """Flatten an iterated tensor of free categories leaf-first: tensor the
    child flattenings, then flatten the resulting pair."""
    if shape.is_leaf:
        if not isinstance(shape.cat, FreeCat):
            raise TypeError("flattening needs free categories at the leaves")
        return identity_functor(shape.cat)
    if shape.left.is_leaf and shape.right.is_leaf:
        return flatten_functor(shape.cat)
    fl = flatten_iter(shape.left)
    fr = flatten_iter(shape.right)
    mid = tensor_category(fl.target, fr.target)
    inner = tensor_functor(fl, fr, shape.cat, mid)
    return compose_functors(flatten_functor(mid), inner)


def underlying_perm(ft: FormalTerm, shape: IterShape | None = None) -> UnderlyingPerm:
    """The permutation of flattened source letters a formal term induces."""
    m = flatten_iter(ft.lift_shape).on_mor(ft.lift)
    return UnderlyingPerm(m.src, m.tgt, m.perm)


# ---------------------------------------------------------------------------
# the section of flattening and the comparison back


def pair_embed(ten: TensorCat, pxy: FreeCat | None = None) -> SymMonFunctor:
    """The strict section of flattening: a paired letter to its one-summand
    tensor object, a paired generator to the simple piece on singletons."""
    px: FreeCat = ten.a
    py: FreeCat = ten.b
    pxy = pxy or free_cat(product_fincat(px.x, py.x))

    def on_letter(pair):
        x, y = pair
        return (Dot((x,), (y,)),)

    def on_gen(name):
        f, g = name
        fs, ft = px.x.mors[f]
        gs, gt = py.x.mors[g]
        one = Permutation.identity(1)
        return DotMor(px.make_mor((fs,), (ft,), one, (f,)),
                      py.make_mor((gs,), (gt,), one, (g,)))

    return induced_strict(pxy, ten, on_letter, on_gen, name="pair_embed")


def merge_left_chain(ten: TensorCat, a, bs) -> TenMor:
    """a.b1 + ... + a.bn -> a.(b1+...+bn) by repeated left merges; the unit
    inclusion when n = 0."""
    bs = list(bs)
    if not bs:
        return ZetaL(a)
    if len(bs) == 1:
        return IdT((Dot(a, bs[0]),))
    steps = []
    acc = bs[0]
    for i in range(1, len(bs)):
        step = DeltaL(a, acc, bs[i])
        rest = tuple(Dot(a, b) for b in bs[i + 1:])
        steps.append(SumT((step, IdT(rest))) if rest else step)
        acc = ten.b.sum_obj(acc, bs[i])
    return CompT(tuple(steps))


def merge_right_chain(ten: TensorCat, b, as_) -> TenMor:
    """a1.b + ... + an.b -> (a1+...+an).b by repeated right merges; the unit
    inclusion when n = 0."""
    as_ = list(as_)
    if not as_:
        return ZetaR(b)
    if len(as_) == 1:
        return IdT((Dot(as_[0], b),))
    steps = []
    acc = as_[0]
    for i in range(1, len(as_)):
        step = DeltaR(b, acc, as_[i])
        rest = tuple(Dot(a, b) for a in as_[i + 1:])
        steps.append(SumT((step, IdT(rest))) if rest else step)
        acc = ten.a.sum_obj(acc, as_[i])
    return CompT(tuple(steps))


def _dot_counit(ten: TensorCat, d: Dot) -> TenMor:
    if not d.left and not d.right:
        return ZetaL(())
    if not d.right:
        return ZetaL(d.left)
    if not d.left:
        return ZetaR(d.right)
    rows = SumT(tuple(merge_left_chain(ten, (x,), [(y,) for y in d.right])
                      for x in d.left))
    cols = merge_right_chain(ten, d.right, [(x,) for x in d.left])
    return ten.compose(cols, rows)


def flatten_counit(ten: TensorCat, pxy: FreeCat | None = None,
                   fl: SymMonFunctor | None = None,
                   pe: SymMonFunctor | None = None) -> MonTransform:
    """The comparison from embed-after-flatten back to the identity: at each
    summand, merge the single-letter grid rows left, then the rows right;
    unit inclusions where a side is empty."""
    fl = fl or flatten_functor(ten, pxy)
    pe = pe or pair_embed(ten, fl.target)
    round_trip = compose_functors(pe, fl)

    def at(s):
        if not s:
            return IdT(())
        return SumT(tuple(_dot_counit(ten, d) for d in s))

    return MonTransform(round_trip, identity_functor(ten), at, name="merge_back")


# ---------------------------------------------------------------------------
# the prover


def _position_objs(x):
    if isinstance(x, tuple):
        return (_position_objs(x[0]), _position_objs(x[1]))
    return x.obj


def prove_equal(t1, t2, shape: IterShape) -> Verdict:
    """Proven when both terms lift and their flattened permutations agree;
    Unknown otherwise.  Never decides inequality.

    The two lifts may identify letters differently (each term forces only its
    own merges), but which positions exist and where each one is sent never
    depend on those identifications, so both terms also lift over the common
    coarsening and the comparison there is position against position.
    """
    e1 = _term_endpoints(shape, t1)
    e2 = _term_endpoints(shape, t2)
    if e1 != e2:
        raise NotParallel(f"terms are not parallel: {e1} vs {e2}")
    f1 = classify_formal(t1, shape)
    if isinstance(f1, NotFormal):
        return Verdict.UNKNOWN
    f2 = classify_formal(t2, shape)
    if isinstance(f2, NotFormal):
        return Verdict.UNKNOWN
    u1 = underlying_perm(f1)
    u2 = underlying_perm(f2)
    if (tuple(map(_position_objs, u1.source)) == tuple(map(_position_objs, u2.source))
            and u1.perm == u2.perm):
        return Verdict.PROVEN
    return Verdict.UNKNOWN


def _term_prover(cat: TensorCat, t1, t2):
    v = prove_equal(t1, t2, shape_of(cat))
    return Verdict.PROVEN if v is Verdict.PROVEN else None


set_prover_hook(_term_prover)
