"""Scalar action on a tensor product with the permutation category.

`scalar_action` collapses S (x) A onto A by reading a dot m.a as the m-fold
sum a + ... + a; `scalar_insert` is the one-sided inverse a |-> 1.a.  The
unit and regrouping 2-cells witness that the two are inverse up to canonical
isomorphism, and `scalar_action_psnat` packages how the collapse commutes
with an arbitrary sum-preserving functor.  The right-handed versions act on
A (x) S.
"""

from __future__ import annotations

from ..perm_core import (
    MonTransform,
    SymMonFunctor,
    compose_functors,
    identity_functor,
    strict_functor,
)
from ..free_perm import (
    ScalarCat,
    iterated_sum,
    perfect_shuffle,
    twisted_power,
)
from ..tensor import (
    BetaGen,
    CompT,
    DeltaL,
    DeltaR,
    Dot,
    DotMor,
    IdT,
    IllTyped,
    InvGen,
    PermT,
    SumT,
    TensorCat,
    ZetaL,
    ZetaR,
    invert_term,
    tensor_functor,
    tensor_category,
)
from ..coherence import merge_left_chain, merge_right_chain
from .cells import Report, invert_transform

__all__ = [
    "scalar_action",
    "scalar_insert",
    "scalar_unit_cell",
    "regroup_cell",
    "scalar_action_psnat",
    "scalar_factorization_check",
    "right_scalar_action",
    "right_scalar_insert",
    "right_action_via_swap_check",
    "scaled_assoc_cell",
    "run_scalar_adjunction_check",
]


def _require_scalar(cat, side):
    if not isinstance(cat, ScalarCat):
        raise TypeError(f"TypeMismatch: expected the scalar category on the {side}")


def scalar_action(src: TensorCat) -> SymMonFunctor:
    """The strict collapse S (x) A -> A sending m.a to the m-fold sum of a.

    Left coordinates must be scalar: dot morphisms sigma.f go to the twisted
    power of f, a left merge becomes the perfect shuffle, a right merge is an
    identity because iterated sums concatenate strictly.
    """
    _require_scalar(src.a, "left")
    a = src.b

    def on_obj(w):
        out = a.unit_obj
        for d in w:
            out = a.sum_obj(out, iterated_sum(a, d.left, d.right))
        return out

    def on_mor(t):
        if isinstance(t, IdT):
            return a.id_of(on_obj(t.obj))
        if isinstance(t, PermT):
            return a.block_symmetry([on_obj((d,)) for d in t.obj], t.perm)
        if isinstance(t, SumT):
            if not t.parts:
                return a.id_of(a.unit_obj)
            return a.sum_mor_list([on_mor(p) for p in t.parts])
        if isinstance(t, CompT):
            out = on_mor(t.steps[0])
            for step in t.steps[1:]:
                out = a.compose(on_mor(step), out)
            return out
        if isinstance(t, InvGen):
            inv = a.try_invert(on_mor(t.gen))
            if inv is None:
                raise IllTyped("NotInvertible: image has no inverse")
            return inv
        if isinstance(t, DotMor):
            return twisted_power(a, t.g, t.f)
        if isinstance(t, BetaGen):
            return a.symmetry(on_obj((t.p,)), on_obj((t.q,)))
        if isinstance(t, DeltaL):
            return perfect_shuffle(a, t.a, t.b, t.bp)
        if isinstance(t, DeltaR):
            return a.id_of(iterated_sum(a, t.a + t.ap, t.b))
        if isinstance(t, (ZetaL, ZetaR)):
            return a.id_of(a.unit_obj)
        raise IllTyped(f"UnknownTerm: {type(t).__name__}")

    return strict_functor(src, a, on_obj, on_mor, name="scalar_action")


def scalar_insert(a, src: TensorCat) -> SymMonFunctor:
    """The inclusion A -> S (x) A tagging everything with multiplicity one.

    Strong, not strict: the sum constraint merges 1.x + 1.y into 1.(x+y) and
    the unit constraint is the left unit inclusion.
    """
    _require_scalar(src.a, "left")
    if src.b is not a:
        raise TypeError("TypeMismatch: insertion target must contain the domain")

    def on_obj(x):
        return (Dot(1, x),)

    def on_mor(f):
        return SumT((DotMor(src.a.id_of(1), f),))

    def f2(x, y):
        return SumT((DeltaL(1, x, y),))

    return SymMonFunctor(a, src, on_obj, on_mor, f2, ZetaL(1),
                         strict=False, name="scalar_insert")


def _unit_cell_dot(sx: TensorCat, d: Dot):
    # 1.(m*a) <- m.a: collapse then re-insert, as a formal term.
    m, aobj = d.left, d.right
    if m == 0:
        return CompT((InvGen(ZetaR(aobj)), ZetaL(1)))
    if m == 1:
        return sx.id_of((d,))
    up = merge_left_chain(sx, 1, [aobj] * m)
    down = merge_right_chain(sx, aobj, [1] * m)
    return sx.compose(up, invert_term(sx, down))


def scalar_unit_cell(sx: TensorCat) -> MonTransform:
    """Unit of the collapse/insert adjunction: 1 => insert . collapse.

    At m1.a1 + ... + mn.an the component splits each dot into m copies of
    1.a, regroups them as 1.(m*a), then merges the leading scalars.
    """
    _require_scalar(sx.a, "left")
    a = sx.b
    ell = scalar_action(sx)
    ins = scalar_insert(a, sx)
    tgt_fun = compose_functors(ins, ell)

    def component(w):
        if not w:
            return ZetaL(1)
        parts = tuple(_unit_cell_dot(sx, d) for d in w)
        if len(w) == 1:
            return parts[0]
        summed = [iterated_sum(a, d.left, d.right) for d in w]
        final = merge_left_chain(sx, 1, summed)
        return sx.compose(final, SumT(parts))

    return MonTransform(identity_functor(sx), tgt_fun, component,
                        name="scalar_unit_cell")


def regroup_cell(sx: TensorCat) -> MonTransform:
    """Collapse of a doubly tagged word: collapse . (1 (x) insert) => 1.

    At m1.a1 + ... the source is the m-fold repetition of each 1.a; the
    component merges each run back into a single dot.
    """
    _require_scalar(sx.a, "left")
    s, a = sx.a, sx.b
    ssx = tensor_category(s, sx)
    doubled = tensor_functor(identity_functor(s), scalar_insert(a, sx),
                             src=sx, tgt=ssx)
    src_fun = compose_functors(scalar_action(ssx), doubled)

    def component(w):
        if not w:
            return IdT(())
        return SumT(tuple(merge_right_chain(sx, d.right, [1] * d.left)
                          for d in w))

    return MonTransform(src_fun, identity_functor(sx), component,
                        name="regroup_cell")


def scalar_action_psnat(f: SymMonFunctor, sx: TensorCat | None = None,
                        tx: TensorCat | None = None) -> MonTransform:
    """How the collapse commutes with f: collapse . (1 (x) f) => f . collapse.

    The component at m1.a1 + ... folds f's sum constraint over the flattened
    summand list; it is an identity whenever f is strict.
    """
    a, b = f.source, f.target
    s = sx.a if sx is not None else (tx.a if tx is not None else None)
    if s is None:
        from ..free_perm import scalar_cat
        s = scalar_cat()
    sx = sx if sx is not None else tensor_category(s, a)
    tx = tx if tx is not None else tensor_category(s, b)
    _require_scalar(sx.a, "left")
    _require_scalar(tx.a, "left")

    lifted = tensor_functor(identity_functor(sx.a), f, src=sx, tgt=tx)
    src_fun = compose_functors(scalar_action(tx), lifted)
    tgt_fun = compose_functors(f, scalar_action(sx))

    def component(w):
        flat = []
        for d in w:
            flat.extend([d.right] * d.left)
        if not flat:
            return f.f0
        acc_obj = flat[0]
        acc = b.id_of(f(acc_obj))
        for x in flat[1:]:
            acc = b.compose(f.f2(acc_obj, x),
                            b.sum_mor(acc, b.id_of(f(x))))
            acc_obj = a.sum_obj(acc_obj, x)
        return acc

    return MonTransform(src_fun, tgt_fun, component, name="scalar_action_psnat")


def _probe_morphisms(cat, objects, bound=3):
    """Identity morphisms plus whatever small homs the category can list."""
    mors = [cat.id_of(x) for x in objects]
    for x in objects:
        for y in objects:
            try:
                for h in cat.enum_homs(x, y):
                    mors.append(h)
                    if len(mors) > 24:
                        return mors
            except NotImplementedError:
                return mors
    return mors


def scalar_factorization_check(f: SymMonFunctor, sx: TensorCat | None = None,
                               objects=None, morphisms=None,
                               bound: int = 2) -> Report:
    """Check f = collapse . (1 (x) f) . insert, field by field."""
    a, b = f.source, f.target
    if sx is None:
        from ..free_perm import scalar_cat
        sx = tensor_category(scalar_cat(), a)
    tx = tensor_category(sx.a, b)
    ins = scalar_insert(a, sx)
    lifted = tensor_functor(identity_functor(sx.a), f, src=sx, tgt=tx)
    ell = scalar_action(tx)
    g = compose_functors(ell, compose_functors(lifted, ins))

    if objects is None:
        objects = list(a.enum_objects(bound))
    if morphisms is None:
        morphisms = _probe_morphisms(a, objects)

    rep = Report(f"factorization of {f.name or 'functor'}")
    bad = next((x for x in objects if not b.obj_eq(f(x), g(x))), None)
    rep.add("objects agree", bad is None, witness=bad)
    bad = next((t for t in morphisms
                if not b.mor_eq(f.on_mor(t), g.on_mor(t)).holds), None)
    rep.add("morphisms agree", bad is None, witness=bad)
    bad = None
    for x in objects:
        for y in objects:
            if not b.mor_eq(f.f2(x, y), g.f2(x, y)).holds:
                bad = (x, y)
                break
        if bad:
            break
    rep.add("sum constraints agree", bad is None, witness=bad)
    rep.add("unit constraint agrees", b.mor_eq(f.f0, g.f0).holds)
    return rep


def right_scalar_action(src: TensorCat) -> SymMonFunctor:
    """The mirror collapse A (x) S -> A reading a.m as the m-fold sum of a."""
    _require_scalar(src.b, "right")
    a = src.a

    def on_obj(w):
        out = a.unit_obj
        for d in w:
            out = a.sum_obj(out, iterated_sum(a, d.right, d.left))
        return out

    def on_mor(t):
        if isinstance(t, IdT):
            return a.id_of(on_obj(t.obj))
        if isinstance(t, PermT):
            return a.block_symmetry([on_obj((d,)) for d in t.obj], t.perm)
        if isinstance(t, SumT):
            if not t.parts:
                return a.id_of(a.unit_obj)
            return a.sum_mor_list([on_mor(p) for p in t.parts])
        if isinstance(t, CompT):
            out = on_mor(t.steps[0])
            for step in t.steps[1:]:
                out = a.compose(on_mor(step), out)
            return out
        if isinstance(t, InvGen):
            inv = a.try_invert(on_mor(t.gen))
            if inv is None:
                raise IllTyped("NotInvertible: image has no inverse")
            return inv
        if isinstance(t, DotMor):
            return twisted_power(a, t.f, t.g)
        if isinstance(t, BetaGen):
            return a.symmetry(on_obj((t.p,)), on_obj((t.q,)))
        if isinstance(t, DeltaL):
            return a.id_of(iterated_sum(a, t.b + t.bp, t.a))
        if isinstance(t, DeltaR):
            return perfect_shuffle(a, t.b, t.a, t.ap)
        if isinstance(t, (ZetaL, ZetaR)):
            return a.id_of(a.unit_obj)
        raise IllTyped(f"UnknownTerm: {type(t).__name__}")

    return strict_functor(src, a, on_obj, on_mor, name="right_scalar_action")


def right_scalar_insert(a, src: TensorCat) -> SymMonFunctor:
    """The inclusion A -> A (x) S tagging everything on the right."""
    _require_scalar(src.b, "right")
    if src.a is not a:
        raise TypeError("TypeMismatch: insertion target must contain the domain")

    def on_obj(x):
        return (Dot(x, 1),)

    def on_mor(f):
        return SumT((DotMor(f, src.b.id_of(1)),))

    def f2(x, y):
        return SumT((DeltaR(1, x, y),))

    return SymMonFunctor(a, src, on_obj, on_mor, f2, ZetaR(1),
                         strict=False, name="right_scalar_insert")


def right_action_via_swap_check(xs: TensorCat, objects=None, morphisms=None,
                                bound: int = 2) -> Report:
    """The right collapse equals swap followed by the left collapse."""
    from .assoc import swap_tensor

    right = right_scalar_action(xs)
    swap = swap_tensor(xs)
    left = scalar_action(swap.target)
    composite = compose_functors(left, swap)
    a = xs.a

    if objects is None:
        objects = list(xs.enum_objects(bound))
    if morphisms is None:
        morphisms = []
        for w in objects:
            morphisms.append(xs.id_of(w))
            if len(w) >= 2:
                morphisms.append(BetaGen(w[0], w[1]))
            for d in w:
                morphisms.append(DeltaR(d.right, d.left, d.left))
                morphisms.append(ZetaL(d.left))
                morphisms.append(ZetaR(d.right))

    rep = Report("right collapse via swap")
    bad = next((w for w in objects
                if not a.obj_eq(right(w), composite(w))), None)
    rep.add("objects agree", bad is None, witness=bad)
    bad = next((t for t in morphisms
                if not a.mor_eq(right.on_mor(t), composite.on_mor(t)).holds),
               None)
    rep.add("morphisms agree", bad is None, witness=bad)
    return rep


def scaled_assoc_cell(ten: TensorCat) -> MonTransform:
    """Collapse-then-tensor versus tensor-then-collapse on (S (x) X) (x) Y.

    Components regroup (m1*x1 + ...).y from the sum of the xi.y blocks; all
    are invertible formal terms.
    """
    sx = ten.a
    _require_scalar(sx.a, "left")
    s, x_cat = sx.a, sx.b
    y_cat = ten.b
    xy = tensor_category(x_cat, y_cat)
    s_xy = tensor_category(s, xy)

    from .assoc import assoc_right

    src_fun = tensor_functor(scalar_action(sx), identity_functor(y_cat),
                             src=ten, tgt=xy)
    tgt_fun = compose_functors(scalar_action(s_xy), assoc_right(ten, s_xy))

    def dot_component(d: Dot):
        flat = []
        for p in d.left:
            flat.extend([p.right] * p.left)
        return invert_term(xy, merge_right_chain(xy, d.right, flat))

    def component(w):
        if not w:
            return IdT(())
        return SumT(tuple(dot_component(d) for d in w))

    return MonTransform(src_fun, tgt_fun, component, name="scaled_assoc_cell")


def run_scalar_adjunction_check(bound: int = 2, seed: int = 0) -> Report:
    """Exercise the collapse/insert biadjunction on small free examples."""
    import random

    from ..free_perm import discrete_fincat, free_cat, scalar_cat
    from ..perm_core import oplus_functors

    rng = random.Random(seed)
    s = scalar_cat()
    a = free_cat(discrete_fincat(["u", "v"], name="A"))
    sx = tensor_category(s, a)
    ell = scalar_action(sx)
    ins = scalar_insert(a, sx)
    eta = scalar_unit_cell(sx)
    d = regroup_cell(sx)

    rep = Report("scalar biadjunction")

    a_objs = [(), ("u",), ("v",), ("u", "v"), ("v", "v", "u")]
    sx_objs = [(), (Dot(0, ("u",)),), (Dot(1, ("v",)),),
               (Dot(2, ("u", "v")),), (Dot(1, ()), Dot(3, ("u",))),
               (Dot(2, ("v",)), Dot(0, ()), Dot(1, ("u", "u")))]
    for _ in range(4):
        n = rng.randint(1, 3)
        sx_objs.append(tuple(
            Dot(rng.randint(0, 2),
                tuple(rng.choice(["u", "v"]) for _ in range(rng.randint(0, 2))))
            for _ in range(n)))

    # collapse . insert is the identity on the nose
    bad = next((x for x in a_objs if not a.obj_eq(ell(ins(x)), x)), None)
    rep.add("collapse.insert fixes objects", bad is None, witness=bad)
    from ..perms import Permutation
    mors = []
    for x in a_objs:
        mors.append(a.id_of(x))
        if len(x) >= 2:
            sw = Permutation.transposition(len(x), 0, 1)
            mors.append(a.perm_mor(x, sw))
    bad = next((f for f in mors
                if not a.mor_eq(ell.on_mor(ins.on_mor(f)), f).holds), None)
    rep.add("collapse.insert fixes morphisms", bad is None, witness=bad)

    # triangle: whiskering the unit with the collapse gives an identity
    bad = None
    for w in sx_objs:
        img = ell.on_mor(eta.at(w))
        if not a.mor_eq(img, a.id_of(ell(w))).holds:
            bad = w
            break
    rep.add("unit collapses to identity", bad is None, witness=bad)

    # triangle: the unit at an inserted object is an identity
    bad = None
    for x in a_objs:
        if not sx.mor_eq(eta.at(ins(x)), sx.id_of(ins(x))).holds:
            bad = x
            break
    rep.add("unit restricts to identity on insertions", bad is None,
            witness=bad)

    # regrouping components are invertible and natural against doubling
    bad = None
    for w in sx_objs:
        t = d.at(w)
        inv = sx.try_invert(t)
        if (inv is None
                or not sx.mor_eq(sx.compose(t, inv),
                                 sx.id_of(d.tgt_fun(w))).holds
                or not sx.mor_eq(sx.compose(inv, t),
                                 sx.id_of(d.src_fun(w))).holds):
            bad = w
            break
    rep.add("regrouping components invertible", bad is None, witness=bad)

    # factorization round trip, strict and strong
    strict_f = identity_functor(a)
    rep.extend(scalar_factorization_check(strict_f, sx, objects=a_objs,
                                          morphisms=mors))
    doubler = oplus_functors(strict_f, strict_f)
    rep_d = scalar_factorization_check(doubler, sx, objects=a_objs,
                                       morphisms=mors)
    rep.extend(rep_d)

    # reverse round trip: collapse is natural in strict functors out of S(x)A
    k = scalar_action(sx)
    tx = tensor_category(s, a)
    lifted = tensor_functor(identity_functor(s), k,
                            src=tensor_category(s, sx), tgt=tx)
    lhs = compose_functors(scalar_action(tx), lifted)
    rhs = compose_functors(k, scalar_action(tensor_category(s, sx)))
    ssx_objs = [(), (Dot(2, (Dot(1, ("u",)),)),),
                (Dot(1, (Dot(0, ("v",)), Dot(2, ("u",)))), Dot(0, ()))]
    bad = next((w for w in ssx_objs if not a.obj_eq(lhs(w), rhs(w))), None)
    rep.add("collapse natural against strict functors", bad is None,
            witness=bad)

    # modification square for the regrouping cell against a strict functor
    sxb = sx
    lift_k = tensor_functor(identity_functor(s), strict_f, src=sx, tgt=sxb)
    d_b = regroup_cell(sxb)
    bad = None
    for w in sx_objs:
        if not sxb.mor_eq(lift_k.on_mor(d.at(w)), d_b.at(lift_k(w))).holds:
            bad = w
            break
    rep.add("regrouping commutes with strict functors", bad is None,
            witness=bad)

    return rep
