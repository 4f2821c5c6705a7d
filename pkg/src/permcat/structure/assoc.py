"""Swap and reassociation functors for iterated tensors, with their counits.

Objects of A (x) B are formal sums of dots a.b, so the tensor is neither
strictly associative nor strictly symmetric on the nose; it is so up to the
strict functors built here.  Swap reverses every dot.  The two reassociators
regroup dots: the rightward one turns (sum_i b_i.c_i).d into
sum_i b_i.(c_i.d), the leftward one turns b.(sum_i c_i.d_i) into
sum_i (b.c_i).d_i.  Both are bijective on objects only up to the delta
merges, which is what the counit transformations record.
"""

from __future__ import annotations

from ..perm_core import (MonTransform, SymMonFunctor, compose_functors,
                         identity_functor, strict_functor)
from ..perms import block_transposition, interleave_two
from ..tensor import (BetaGen, CompT, DeltaL, DeltaR, Dot, DotMor, IdT,
                      IllTyped, InvGen, PermT, SumT, TenMor, TensorCat,
                      ZetaL, ZetaR, invert_term, tensor_category)
from ..coherence import merge_left_chain, merge_right_chain
from .cells import invert_transform

__all__ = [
    "swap_tensor",
    "assoc_right",
    "assoc_left",
    "assoc_counit",
    "coassoc_counit",
    "assoc_unit",
    "coassoc_unit",
]


# ---------------------------------------------------------------------------
# swap


def swap_tensor(src: TensorCat, tgt: TensorCat | None = None) -> SymMonFunctor:
    """The strict functor A (x) B -> B (x) A reversing every dot.

    Involutive: applying it twice gives back the original term node for node.
    """
    if tgt is None:
        tgt = tensor_category(src.b, src.a)

    def on_obj(w):
        return tuple(Dot(d.right, d.left) for d in w)

    def on_mor(t: TenMor) -> TenMor:
        if isinstance(t, DotMor):
            return DotMor(t.g, t.f)
        if isinstance(t, DeltaL):
            # a.b + a.b' -> a.(b+b') becomes b.a + b'.a -> (b+b').a
            return DeltaR(t.a, t.b, t.bp)
        if isinstance(t, DeltaR):
            return DeltaL(t.b, t.a, t.ap)
        if isinstance(t, BetaGen):
            return BetaGen(Dot(t.p.right, t.p.left), Dot(t.q.right, t.q.left))
        if isinstance(t, ZetaL):
            return ZetaR(t.a)
        if isinstance(t, ZetaR):
            return ZetaL(t.b)
        if isinstance(t, InvGen):
            return InvGen(on_mor(t.gen))
        if isinstance(t, IdT):
            return IdT(on_obj(t.obj))
        if isinstance(t, PermT):
            return PermT(t.perm, on_obj(t.obj))
        if isinstance(t, SumT):
            return SumT(tuple(on_mor(p) for p in t.parts))
        if isinstance(t, CompT):
            return CompT(tuple(on_mor(s) for s in t.steps))
        raise IllTyped(f"swap: unrecognized term node {type(t).__name__}")

    return strict_functor(src, tgt, on_obj, on_mor, name="swap")


# ---------------------------------------------------------------------------
# rightward reassociation


def assoc_right(src: TensorCat, tgt: TensorCat | None = None) -> SymMonFunctor:
    """Strict reassociation (B (x) C) (x) D -> B (x) (C (x) D)."""
    bc = src.a
    if not isinstance(bc, TensorCat):
        raise IllTyped("assoc_right needs a tensor category as left factor")
    b_cat, c_cat, d_cat = bc.a, bc.b, src.b
    if tgt is None:
        tgt = tensor_category(b_cat, tensor_category(c_cat, d_cat))

    def expand_dot(x: Dot) -> tuple:
        return tuple(Dot(p.left, (Dot(p.right, x.right),)) for p in x.left)

    def on_obj(w):
        out = []
        for x in w:
            out.extend(expand_dot(x))
        return tuple(out)

    def ride(w, h):
        # h applied in the d-slot of every dot of the expansion of Dot(w, -)
        if not w:
            return IdT(())
        return SumT(tuple(
            DotMor(b_cat.id_of(p.left), DotMor(c_cat.id_of(p.right), h))
            for p in w))

    def dot_img(k: TenMor, h) -> TenMor:
        # image of the dot morphism k.h, k a morphism of B (x) C, h of D
        d0 = d_cat.mor_src(h)
        if isinstance(k, SumT):
            return SumT(tuple(dot_img(p, h) for p in k.parts))
        if isinstance(k, CompT):
            steps = [dot_img(s, d_cat.id_of(d0)) for s in k.steps[:-1]]
            steps.append(dot_img(k.steps[-1], h))
            return CompT(tuple(steps))
        if isinstance(k, InvGen):
            base = invert_term(tgt, dot_img(k.gen, d_cat.id_of(d0)))
            if base is None:
                raise IllTyped("assoc_right: inverse image not invertible")
            return tgt.compose(ride(bc.mor_src(k.gen), h), base)
        if isinstance(k, IdT):
            return ride(k.obj, h)
        if isinstance(k, PermT):
            if not k.obj:
                return IdT(())
            src_dots = tuple(Dot(p.left, (Dot(p.right, d0),)) for p in k.obj)
            permuted = tuple(k.perm.permute(list(k.obj)))
            return CompT((PermT(k.perm, src_dots), ride(permuted, h)))
        if isinstance(k, DotMor):
            return DotMor(k.f, DotMor(k.g, h))
        if isinstance(k, BetaGen):
            p, q = k.p, k.q
            swap = BetaGen(Dot(p.left, (Dot(p.right, d0),)),
                           Dot(q.left, (Dot(q.right, d0),)))
            return CompT((swap, ride((q, p), h)))
        if isinstance(k, DeltaL):
            b, c1, c2 = k.a, k.b, k.bp
            csum = c_cat.sum_obj(c1, c2)
            return CompT((
                DeltaL(b, (Dot(c1, d0),), (Dot(c2, d0),)),
                DotMor(b_cat.id_of(b), DeltaR(d0, c1, c2)),
                DotMor(b_cat.id_of(b), DotMor(c_cat.id_of(csum), h)),
            ))
        if isinstance(k, DeltaR):
            c, b1, b2 = k.b, k.a, k.ap
            bsum = b_cat.sum_obj(b1, b2)
            return CompT((
                DeltaR((Dot(c, d0),), b1, b2),
                DotMor(b_cat.id_of(bsum), DotMor(c_cat.id_of(c), h)),
            ))
        if isinstance(k, ZetaL):
            b = k.a
            return CompT((
                ZetaL(b),
                DotMor(b_cat.id_of(b), ZetaR(d0)),
                DotMor(b_cat.id_of(b),
                       DotMor(c_cat.id_of(c_cat.unit_obj), h)),
            ))
        if isinstance(k, ZetaR):
            c = k.b
            return CompT((
                ZetaR((Dot(c, d0),)),
                DotMor(b_cat.id_of(b_cat.unit_obj),
                       DotMor(c_cat.id_of(c), h)),
            ))
        raise IllTyped(f"assoc_right: unrecognized dot component {type(k).__name__}")

    def on_mor(t: TenMor) -> TenMor:
        if isinstance(t, IdT):
            return IdT(on_obj(t.obj))
        if isinstance(t, PermT):
            return tgt.block_symmetry([expand_dot(x) for x in t.obj], t.perm)
        if isinstance(t, SumT):
            return SumT(tuple(on_mor(p) for p in t.parts))
        if isinstance(t, CompT):
            return CompT(tuple(on_mor(s) for s in t.steps))
        if isinstance(t, InvGen):
            img = invert_term(tgt, on_mor(t.gen))
            if img is None:
                raise IllTyped("assoc_right: generator image not invertible")
            return img
        if isinstance(t, DotMor):
            return dot_img(t.f, t.g)
        if isinstance(t, BetaGen):
            left, right = expand_dot(t.p), expand_dot(t.q)
            return PermT(block_transposition(len(left), len(right)),
                         left + right)
        if isinstance(t, DeltaL):
            # X.d + X.d' -> X.(d+d') for X a word of the inner tensor
            xw, d1, d2 = t.a, t.b, t.bp
            n = len(xw)
            if n == 0:
                return IdT(())
            steps = []
            if n > 1:
                src_dots = ([Dot(p.left, (Dot(p.right, d1),)) for p in xw]
                            + [Dot(p.left, (Dot(p.right, d2),)) for p in xw])
                steps.append(PermT(interleave_two(n, n), tuple(src_dots)))
            steps.append(SumT(tuple(
                DeltaL(p.left, (Dot(p.right, d1),), (Dot(p.right, d2),))
                for p in xw)))
            steps.append(SumT(tuple(
                DotMor(b_cat.id_of(p.left), DeltaL(p.right, d1, d2))
                for p in xw)))
            return CompT(tuple(steps))
        if isinstance(t, DeltaR):
            # X.d + X'.d -> (X+X').d expands to a plain concatenation
            return IdT(on_obj((Dot(t.a, t.b),)) + on_obj((Dot(t.ap, t.b),)))
        if isinstance(t, ZetaL):
            xw = t.a
            if not xw:
                return IdT(())
            return CompT((
                SumT(tuple(ZetaL(p.left) for p in xw)),
                SumT(tuple(DotMor(b_cat.id_of(p.left), ZetaL(p.right))
                           for p in xw)),
            ))
        if isinstance(t, ZetaR):
            return IdT(())
        raise IllTyped(f"assoc_right: unrecognized term node {type(t).__name__}")

    return strict_functor(src, tgt, on_obj, on_mor, name="assoc_right")


# ---------------------------------------------------------------------------
# leftward reassociation


def assoc_left(src: TensorCat, tgt: TensorCat | None = None) -> SymMonFunctor:
    """Strict reassociation B (x) (C (x) D) -> (B (x) C) (x) D."""
    cd = src.b
    if not isinstance(cd, TensorCat):
        raise IllTyped("assoc_left needs a tensor category as right factor")
    b_cat, c_cat, d_cat = src.a, cd.a, cd.b
    if tgt is None:
        tgt = tensor_category(tensor_category(b_cat, c_cat), d_cat)
    bc = tgt.a

    def expand_dot(x: Dot) -> tuple:
        return tuple(Dot((Dot(x.left, p.left),), p.right) for p in x.right)

    def on_obj(w):
        out = []
        for x in w:
            out.extend(expand_dot(x))
        return tuple(out)

    def ride(f, y):
        # f applied in the b-slot of every dot of the expansion of Dot(-, y)
        if not y:
            return IdT(())
        return SumT(tuple(
            DotMor(DotMor(f, c_cat.id_of(p.left)), d_cat.id_of(p.right))
            for p in y))

    def dot_img(f, k: TenMor) -> TenMor:
        # image of the dot morphism f.k, f a morphism of B, k of C (x) D
        b0 = b_cat.mor_src(f)
        if isinstance(k, SumT):
            return SumT(tuple(dot_img(f, p) for p in k.parts))
        if isinstance(k, CompT):
            steps = [dot_img(b_cat.id_of(b0), s) for s in k.steps[:-1]]
            steps.append(dot_img(f, k.steps[-1]))
            return CompT(tuple(steps))
        if isinstance(k, InvGen):
            base = invert_term(tgt, dot_img(b_cat.id_of(b0), k.gen))
            if base is None:
                raise IllTyped("assoc_left: inverse image not invertible")
            return tgt.compose(ride(f, cd.mor_src(k.gen)), base)
        if isinstance(k, IdT):
            return ride(f, k.obj)
        if isinstance(k, PermT):
            if not k.obj:
                return IdT(())
            src_dots = tuple(Dot((Dot(b0, p.left),), p.right) for p in k.obj)
            permuted = tuple(k.perm.permute(list(k.obj)))
            return CompT((PermT(k.perm, src_dots), ride(f, permuted)))
        if isinstance(k, DotMor):
            return DotMor(DotMor(f, k.f), k.g)
        if isinstance(k, BetaGen):
            p, q = k.p, k.q
            swap = BetaGen(Dot((Dot(b0, p.left),), p.right),
                           Dot((Dot(b0, q.left),), q.right))
            return CompT((swap, ride(f, (q, p))))
        if isinstance(k, DeltaL):
            c, dd1, dd2 = k.a, k.b, k.bp
            dsum = d_cat.sum_obj(dd1, dd2)
            return CompT((
                DeltaL((Dot(b0, c),), dd1, dd2),
                DotMor(DotMor(f, c_cat.id_of(c)), d_cat.id_of(dsum)),
            ))
        if isinstance(k, DeltaR):
            dd, c1, c2 = k.b, k.a, k.ap
            csum = c_cat.sum_obj(c1, c2)
            return CompT((
                DeltaR(dd, (Dot(b0, c1),), (Dot(b0, c2),)),
                DotMor(DeltaL(b0, c1, c2), d_cat.id_of(dd)),
                DotMor(DotMor(f, c_cat.id_of(csum)), d_cat.id_of(dd)),
            ))
        if isinstance(k, ZetaL):
            c = k.a
            return CompT((
                ZetaL((Dot(b0, c),)),
                DotMor(DotMor(f, c_cat.id_of(c)),
                       d_cat.id_of(d_cat.unit_obj)),
            ))
        if isinstance(k, ZetaR):
            dd = k.b
            return CompT((
                ZetaR(dd),
                DotMor(ZetaL(b0), d_cat.id_of(dd)),
                DotMor(DotMor(f, c_cat.id_of(c_cat.unit_obj)),
                       d_cat.id_of(dd)),
            ))
        raise IllTyped(f"assoc_left: unrecognized dot component {type(k).__name__}")

    def on_mor(t: TenMor) -> TenMor:
        if isinstance(t, IdT):
            return IdT(on_obj(t.obj))
        if isinstance(t, PermT):
            return tgt.block_symmetry([expand_dot(x) for x in t.obj], t.perm)
        if isinstance(t, SumT):
            return SumT(tuple(on_mor(p) for p in t.parts))
        if isinstance(t, CompT):
            return CompT(tuple(on_mor(s) for s in t.steps))
        if isinstance(t, InvGen):
            img = invert_term(tgt, on_mor(t.gen))
            if img is None:
                raise IllTyped("assoc_left: generator image not invertible")
            return img
        if isinstance(t, DotMor):
            return dot_img(t.f, t.g)
        if isinstance(t, BetaGen):
            left, right = expand_dot(t.p), expand_dot(t.q)
            return PermT(block_transposition(len(left), len(right)),
                         left + right)
        if isinstance(t, DeltaL):
            # b.Y + b.Y' -> b.(Y+Y') expands to a plain concatenation
            return IdT(on_obj((Dot(t.a, t.b),)) + on_obj((Dot(t.a, t.bp),)))
        if isinstance(t, DeltaR):
            yw, b1, b2 = t.b, t.a, t.ap
            n = len(yw)
            if n == 0:
                return IdT(())
            steps = []
            if n > 1:
                src_dots = ([Dot((Dot(b1, p.left),), p.right) for p in yw]
                            + [Dot((Dot(b2, p.left),), p.right) for p in yw])
                steps.append(PermT(interleave_two(n, n), tuple(src_dots)))
            steps.append(SumT(tuple(
                DeltaR(p.right, (Dot(b1, p.left),), (Dot(b2, p.left),))
                for p in yw)))
            steps.append(SumT(tuple(
                DotMor(DeltaR(p.left, b1, b2), d_cat.id_of(p.right))
                for p in yw)))
            return CompT(tuple(steps))
        if isinstance(t, ZetaL):
            return IdT(())
        if isinstance(t, ZetaR):
            yw = t.b
            if not yw:
                return IdT(())
            return CompT((
                SumT(tuple(ZetaR(p.right) for p in yw)),
                SumT(tuple(DotMor(ZetaR(p.left), d_cat.id_of(p.right))
                           for p in yw)),
            ))
        raise IllTyped(f"assoc_left: unrecognized term node {type(t).__name__}")

    return strict_functor(src, tgt, on_obj, on_mor, name="assoc_left")


# ---------------------------------------------------------------------------
# counits of the reassociation adjoint equivalence


def assoc_counit(ten: TensorCat) -> MonTransform:
    """Rightward-after-leftward reassociation back to the identity.

    ten is B (x) (C (x) D).  At a dot b.(sum of c_i.d_i) the component is the
    left merge chain collecting the scattered copies of b; at a dot with an
    empty inner word it degenerates to the left unit inclusion.
    """
    fwd = assoc_left(ten)
    back = assoc_right(fwd.target, ten)
    src_fun = compose_functors(back, fwd)

    def component(w):
        if not w:
            return IdT(())
        return SumT(tuple(
            merge_left_chain(ten, x.left, [(p,) for p in x.right])
            for x in w))

    return MonTransform(src_fun, identity_functor(ten), component,
                        name="assoc_counit")


def coassoc_counit(ten: TensorCat) -> MonTransform:
    """Leftward-after-rightward reassociation back to the identity.

    ten is (B (x) C) (x) D; components are right merge chains.
    """
    fwd = assoc_right(ten)
    back = assoc_left(fwd.target, ten)
    src_fun = compose_functors(back, fwd)

    def component(w):
        if not w:
            return IdT(())
        return SumT(tuple(
            merge_right_chain(ten, x.right, [(p,) for p in x.left])
            for x in w))

    return MonTransform(src_fun, identity_functor(ten), component,
                        name="coassoc_counit")


def assoc_unit(ten: TensorCat) -> MonTransform:
    """Unit of the reassociation adjoint equivalence on (B (x) C) (x) D:
    the inverse of coassoc_counit."""
    return invert_transform(ten, coassoc_counit(ten), name="assoc_unit")


def coassoc_unit(ten: TensorCat) -> MonTransform:
    """Unit of the reverse reassociation on B (x) (C (x) D)."""
    return invert_transform(ten, assoc_counit(ten), name="coassoc_unit")
