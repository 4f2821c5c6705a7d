"""Two-cell calculus for the associativity, swap, and unit structure.

A `PathCell` is a 2-cell between two composable chains of structure
functors, carried by its components.  The four `strip_*` rules transpose an
invertible edge from one side of a cell to the other (the mate under the
edge's up-to-isomorphism inverse), and the derived cells here are exactly
what the seven axiom checks in `run_axiom_suite` consume.

Conventions: a path (f1, f2, f3) applies f1 first; `compose(g, f)` runs f
first everywhere; every component equality is settled by the permutation
prover, so each check is a real proof, not a spot evaluation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Any, Callable

from ..perm_core import (
    MonTransform,
    SymMonFunctor,
    Verdict,
    compose_functors,
    identity_functor,
    identity_transform,
)
from ..perms import Permutation, all_permutations
from ..free_perm import FreeCat, ScalarCat, discrete_fincat, free_cat, scalar_cat
from ..tensor import (
    BetaGen,
    CompT,
    DeltaL,
    DeltaR,
    Dot,
    DotMor,
    IdT,
    PermT,
    SumT,
    TensorCat,
    ZetaL,
    ZetaR,
    tensor_category,
    tensor_functor,
    tensor_transform,
)
from ..coherence import NotParallel, prove_equal, shape_of
from .assoc import (
    assoc_counit,
    assoc_left,
    assoc_right,
    coassoc_counit,
    swap_tensor,
)
from .cells import Report, invert_transform
from .scalar import scalar_action, right_scalar_insert, scaled_assoc_cell

__all__ = [
    "PathCell",
    "Adjoint",
    "apply_path",
    "apply_path_mor",
    "identity_cell",
    "invert_cell",
    "strip_src_front",
    "strip_src_back",
    "strip_tgt_front",
    "strip_tgt_back",
    "assoc_adjoint",
    "coassoc_adjoint",
    "swap_adjoint",
    "adj_tensor_id",
    "id_tensor_adj",
    "pentagon_system",
    "pentagon_mate",
    "hex1_system",
    "hex2_system",
    "mate_r1_pair",
    "mate_r1_single",
    "mate_r2_pair",
    "mate_r2_single",
    "mate_r3",
    "curated_objects",
    "random_object",
    "random_structural_mor",
    "run_axiom_suite",
]


def apply_path(path, u):
    for f in path:
        u = f(u)
    return u


def apply_path_mor(path, t):
    for f in path:
        t = f.on_mor(t)
    return t


@dataclass
class PathCell:
    """A 2-cell src-path => tgt-path given by components in `cod`."""
    src: tuple
    tgt: tuple
    at: Callable[[Any], Any]
    cod: Any

    def check_endpoints(self, u) -> bool:
        t = self.at(u)
        return (self.cod.obj_eq(self.cod.mor_src(t), apply_path(self.src, u))
                and self.cod.obj_eq(self.cod.mor_tgt(t),
                                    apply_path(self.tgt, u)))


def identity_cell(src, tgt, cod) -> PathCell:
    return PathCell(tuple(src), tuple(tgt),
                    lambda u: cod.id_of(apply_path(src, u)), cod)


def invert_cell(cell: PathCell) -> PathCell:
    def at(u):
        inv = cell.cod.try_invert(cell.at(u))
        if inv is None:
            raise ValueError("NotInvertible: cell component has no inverse")
        return inv
    return PathCell(cell.tgt, cell.src, at, cell.cod)


@dataclass
class Adjoint:
    """An adjoint equivalence edge: fwd -| back with invertible unit/counit.

    unit: 1 => back.fwd     counit: fwd.back => 1
    unit_inv and counit_inv are the same cells read backwards.
    """
    fwd: SymMonFunctor
    back: SymMonFunctor
    unit: MonTransform
    counit: MonTransform
    unit_inv: MonTransform
    counit_inv: MonTransform


def assoc_adjoint(ten_left: TensorCat, tgt: TensorCat | None = None) -> Adjoint:
    """Reassociation (B(x)C)(x)D <-> B(x)(C(x)D) as an adjoint equivalence."""
    fwd = assoc_right(ten_left, tgt)
    back = assoc_left(fwd.target, ten_left)
    eps = assoc_counit(fwd.target)
    epsp = coassoc_counit(ten_left)
    return Adjoint(fwd, back,
                   unit=invert_transform(ten_left, epsp, "assoc_unit"),
                   counit=eps,
                   unit_inv=epsp,
                   counit_inv=invert_transform(fwd.target, eps,
                                               "assoc_counit_inv"))


def coassoc_adjoint(ten_right: TensorCat, tgt: TensorCat | None = None) -> Adjoint:
    """The same equivalence oriented B(x)(C(x)D) -> (B(x)C)(x)D."""
    fwd = assoc_left(ten_right, tgt)
    back = assoc_right(fwd.target, ten_right)
    eps = coassoc_counit(fwd.target)
    epsu = assoc_counit(ten_right)
    return Adjoint(fwd, back,
                   unit=invert_transform(ten_right, epsu, "coassoc_unit"),
                   counit=eps,
                   unit_inv=epsu,
                   counit_inv=invert_transform(fwd.target, eps,
                                               "coassoc_counit_inv"))


def swap_adjoint(ten: TensorCat, tgt: TensorCat | None = None) -> Adjoint:
    """The swap is self-inverse on the nose; unit and counit are identities."""
    fwd = swap_tensor(ten, tgt)
    back = swap_tensor(fwd.target, ten)
    unit = MonTransform(identity_functor(ten), compose_functors(back, fwd),
                        lambda u: ten.id_of(u), name="swap_unit")
    counit = MonTransform(compose_functors(fwd, back),
                          identity_functor(fwd.target),
                          lambda u: fwd.target.id_of(u), name="swap_counit")
    return Adjoint(fwd, back, unit=unit, counit=counit,
                   unit_inv=MonTransform(unit.tgt_fun, unit.src_fun,
                                         unit.component),
                   counit_inv=MonTransform(counit.tgt_fun, counit.src_fun,
                                           counit.component))


def adj_tensor_id(adj: Adjoint, c) -> Adjoint:
    """Tensor an adjoint edge with an identity on the right: adj (x) 1_c."""
    idc = identity_functor(c)
    idt = identity_transform(idc)
    return Adjoint(tensor_functor(adj.fwd, idc), tensor_functor(adj.back, idc),
                   unit=tensor_transform(adj.unit, idt),
                   counit=tensor_transform(adj.counit, idt),
                   unit_inv=tensor_transform(adj.unit_inv, idt),
                   counit_inv=tensor_transform(adj.counit_inv, idt))


def id_tensor_adj(c, adj: Adjoint) -> Adjoint:
    """Tensor an adjoint edge with an identity on the left: 1_c (x) adj."""
    idc = identity_functor(c)
    idt = identity_transform(idc)
    return Adjoint(tensor_functor(idc, adj.fwd), tensor_functor(idc, adj.back),
                   unit=tensor_transform(idt, adj.unit),
                   counit=tensor_transform(idt, adj.counit),
                   unit_inv=tensor_transform(idt, adj.unit_inv),
                   counit_inv=tensor_transform(idt, adj.counit_inv))


# -- the four transposition rules ------------------------------------------
#
# Each takes a cell whose source or target path begins or ends with the
# forward functor of `adj` and moves that edge across, replacing it by the
# backward functor on the other side.

def strip_src_front(cell: PathCell, adj: Adjoint) -> PathCell:
    rest = cell.src[1:]
    cod = cell.cod

    def at(u):
        return cod.compose(cell.at(adj.back(u)),
                           apply_path_mor(rest, adj.counit_inv.at(u)))

    return PathCell(rest, (adj.back,) + cell.tgt, at, cod)


def strip_src_back(cell: PathCell, adj: Adjoint) -> PathCell:
    rest = cell.src[:-1]
    ncod = adj.fwd.source

    def at(u):
        return ncod.compose(adj.back.on_mor(cell.at(u)),
                            adj.unit.at(apply_path(rest, u)))

    return PathCell(rest, cell.tgt + (adj.back,), at, ncod)


def strip_tgt_front(cell: PathCell, adj: Adjoint) -> PathCell:
    rest = cell.tgt[1:]
    cod = cell.cod

    def at(u):
        return cod.compose(apply_path_mor(rest, adj.counit.at(u)),
                           cell.at(adj.back(u)))

    return PathCell((adj.back,) + cell.src, rest, at, cod)


def strip_tgt_back(cell: PathCell, adj: Adjoint) -> PathCell:
    rest = cell.tgt[:-1]
    ncod = adj.fwd.source

    def at(u):
        return ncod.compose(adj.unit_inv.at(apply_path(rest, u)),
                            adj.back.on_mor(cell.at(u)))

    return PathCell(cell.src + (adj.back,), rest, at, ncod)


# -- whiskering components with identity tensor factors ---------------------

def whisker_component_right(x_cat, component, w):
    """Component of 1_x (x) phi at the word w."""
    if not w:
        return IdT(())
    return SumT(tuple(DotMor(x_cat.id_of(d.left), component(d.right))
                      for d in w))


def whisker_component_left(component, y_cat, w):
    """Component of phi (x) 1_y at the word w."""
    if not w:
        return IdT(())
    return SumT(tuple(DotMor(component(d.left), y_cat.id_of(d.right))
                      for d in w))


# -- pentagon: edges, adjoints, and the ten useful mates --------------------

@dataclass
class PentagonSystem:
    f: tuple    # adjoints for the three-step side, in order
    g: tuple    # adjoints for the two-step side
    base: PathCell
    top: TensorCat


def pentagon_system(x, y, z, w) -> PentagonSystem:
    xy = tensor_category(x, y)
    xy_z = tensor_category(xy, z)
    top = tensor_category(xy_z, w)
    adj_f1 = adj_tensor_id(assoc_adjoint(xy_z), w)
    adj_f2 = assoc_adjoint(adj_f1.fwd.target)
    adj_f3 = id_tensor_adj(x, assoc_adjoint(adj_f2.fwd.target.b))
    adj_g1 = assoc_adjoint(top)
    adj_g2 = assoc_adjoint(adj_g1.fwd.target)
    fs = (adj_f1.fwd, adj_f2.fwd, adj_f3.fwd)
    gs = (adj_g1.fwd, adj_g2.fwd)
    base = identity_cell(fs, gs, adj_f3.fwd.target)
    return PentagonSystem((adj_f1, adj_f2, adj_f3), (adj_g1, adj_g2),
                          base, top)


_PENTAGON_SCRIPTS = {
    1: (("sb", "f3"), ("sb", "f2"), ("sb", "f1"), ("tf", "g1"), ("tf", "g2")),
    2: (("tf", "g1"), ("sb", "f3"), ("sb", "f2"), ("sb", "f1")),
    3: (("sb", "f3"), ("tf", "g1"), ("inv", None)),
    4: (("sf", "f1"), ("inv", None), ("sb", "g2"), ("sb", "g1")),
    5: (("sb", "f3"), ("sb", "f2"), ("tf", "g1")),
    6: (("sf", "f1"), ("sf", "f2"), ("tb", "g2")),
    7: (("tb", "g2"), ("sf", "f1"), ("inv", None)),
    8: (("sb", "f3"), ("sf", "f1")),
    9: (("sf", "f1"), ("sf", "f2"), ("tb", "g2"), ("tb", "g1")),
    10: (("sf", "f1"),),
}

_STRIP_OPS = {
    "sf": strip_src_front,
    "sb": strip_src_back,
    "tf": strip_tgt_front,
    "tb": strip_tgt_back,
}


def _run_script(cell: PathCell, script, adjoints) -> PathCell:
    for op, which in script:
        if op == "inv":
            cell = invert_cell(cell)
        else:
            cell = _STRIP_OPS[op](cell, adjoints[which])
    return cell


def pentagon_mate(which: int, x, y, z, w) -> PathCell:
    """One of the ten transposed forms of the pentagon identity cell."""
    sysd = pentagon_system(x, y, z, w)
    adjoints = {"f1": sysd.f[0], "f2": sysd.f[1], "f3": sysd.f[2],
                "g1": sysd.g[0], "g2": sysd.g[1]}
    return _run_script(sysd.base, _PENTAGON_SCRIPTS[which], adjoints)


# -- hexagons ----------------------------------------------------------------

@dataclass
class HexSystem:
    s: tuple
    t: tuple
    base: PathCell
    top: TensorCat


def hex1_system(b, c, d) -> HexSystem:
    """(swap (x) 1); assoc; (1 (x) swap)  =>  assoc; swap; assoc
    on (B(x)C)(x)D."""
    bc = tensor_category(b, c)
    top = tensor_category(bc, d)
    adj_s1 = adj_tensor_id(swap_adjoint(bc), d)
    adj_s2 = assoc_adjoint(adj_s1.fwd.target)
    adj_s3 = id_tensor_adj(c, swap_adjoint(adj_s2.fwd.target.b))
    adj_t1 = assoc_adjoint(top)
    adj_t2 = swap_adjoint(adj_t1.fwd.target)
    adj_t3 = assoc_adjoint(adj_t2.fwd.target)
    ss = (adj_s1, adj_s2, adj_s3)
    ts = (adj_t1, adj_t2, adj_t3)
    base = identity_cell(tuple(a.fwd for a in ss), tuple(a.fwd for a in ts),
                         adj_s3.fwd.target)
    return HexSystem(ss, ts, base, top)


def hex2_system(b, c, d) -> HexSystem:
    """(1 (x) swap); unassoc; (swap (x) 1)  =>  unassoc; swap; unassoc
    on B(x)(C(x)D)."""
    cd = tensor_category(c, d)
    top = tensor_category(b, cd)
    adj_s1 = id_tensor_adj(b, swap_adjoint(cd))
    adj_s2 = coassoc_adjoint(adj_s1.fwd.target)
    adj_s3 = adj_tensor_id(swap_adjoint(adj_s2.fwd.target.a), c)
    adj_t1 = coassoc_adjoint(top)
    adj_t2 = swap_adjoint(adj_t1.fwd.target)
    adj_t3 = coassoc_adjoint(adj_t2.fwd.target)
    ss = (adj_s1, adj_s2, adj_s3)
    ts = (adj_t1, adj_t2, adj_t3)
    base = identity_cell(tuple(a.fwd for a in ss), tuple(a.fwd for a in ts),
                         adj_s3.fwd.target)
    return HexSystem(ss, ts, base, top)


def mate_r1_pair(c, d, e) -> PathCell:
    """Hexagon 2 on (C,D,E) with its final unassoc transposed away."""
    h = hex2_system(c, d, e)
    return strip_tgt_back(h.base, h.t[2])


def mate_r1_single(x, z, w) -> PathCell:
    """Hexagon 1 on (X,Z,W) with its leading assoc transposed away."""
    h = hex1_system(x, z, w)
    return strip_tgt_front(h.base, h.t[0])


def mate_r2_pair(x, y, w) -> PathCell:
    """Hexagon 2 on (X,Y,W) with its leading unassoc transposed away."""
    h = hex2_system(x, y, w)
    return strip_tgt_front(h.base, h.t[0])


def mate_r2_single(x, y, z) -> PathCell:
    """Hexagon 1 on (X,Y,Z) with its final assoc transposed away."""
    h = hex1_system(x, y, z)
    return strip_tgt_back(h.base, h.t[2])


def mate_r3(x, y, z) -> PathCell:
    """Hexagon 2 on (X,Y,Z) with both unassoc edges transposed away."""
    h = hex2_system(x, y, z)
    cell = strip_tgt_back(h.base, h.t[2])
    return strip_tgt_front(cell, h.t[0])


# -- probe generation --------------------------------------------------------

def curated_objects(cat):
    """A few structurally interesting objects of a nested tensor category."""
    if isinstance(cat, TensorCat):
        la = curated_objects(cat.a)
        lb = curated_objects(cat.b)
        out = [()]
        out.append((Dot(la[-1], lb[-1]),))
        if len(la) > 1 and len(lb) > 1:
            out.append((Dot(la[0], lb[-1]),))
            out.append((Dot(la[-1], lb[1]), Dot(la[1], lb[-1])))
        return out
    if isinstance(cat, ScalarCat):
        return [0, 1, 2]
    if isinstance(cat, FreeCat):
        gens = list(cat.x.objects)
        out = [()]
        if gens:
            out.append((gens[0],))
            out.append(tuple(gens[:2]) if len(gens) > 1 else (gens[0], gens[0]))
        return out
    return [cat.unit_obj]


def random_object(rng, cat, max_len=2, leaf_len=2):
    if isinstance(cat, TensorCat):
        n = rng.randint(0, max_len)
        return tuple(Dot(random_object(rng, cat.a, max_len, leaf_len),
                         random_object(rng, cat.b, max_len, leaf_len))
                     for _ in range(n))
    if isinstance(cat, ScalarCat):
        return rng.randint(0, 3)
    if isinstance(cat, FreeCat):
        gens = list(cat.x.objects)
        if not gens:
            return ()
        return tuple(rng.choice(gens) for _ in range(rng.randint(0, leaf_len)))
    return cat.unit_obj


def random_structural_mor(rng, cat, depth=3, max_len=2, leaf_len=2):
    """A random formal term with identity leaf components, so the prover
    always decides equality of parallel images."""
    if isinstance(cat, ScalarCat):
        return Permutation.identity(rng.randint(0, 3))
    if isinstance(cat, FreeCat):
        return cat.id_of(random_object(rng, cat, max_len, leaf_len))
    if not isinstance(cat, TensorCat):
        return cat.id_of(cat.unit_obj)

    def rand_dot():
        return Dot(random_object(rng, cat.a, max_len, leaf_len),
                   random_object(rng, cat.b, max_len, leaf_len))

    kind = rng.choice(
        ["dot", "dl", "dr", "beta", "zl", "zr", "perm", "sum", "comp", "id"]
        if depth > 0 else ["dl", "dr", "beta", "zl", "zr", "perm", "id"])
    if kind == "dot":
        return SumT((DotMor(random_structural_mor(rng, cat.a, depth - 1,
                                                  max_len, leaf_len),
                            random_structural_mor(rng, cat.b, depth - 1,
                                                  max_len, leaf_len)),))
    if kind == "dl":
        return DeltaL(random_object(rng, cat.a, max_len, leaf_len),
                      random_object(rng, cat.b, max_len, leaf_len),
                      random_object(rng, cat.b, max_len, leaf_len))
    if kind == "dr":
        return DeltaR(random_object(rng, cat.b, max_len, leaf_len),
                      random_object(rng, cat.a, max_len, leaf_len),
                      random_object(rng, cat.a, max_len, leaf_len))
    if kind == "beta":
        return BetaGen(rand_dot(), rand_dot())
    if kind == "zl":
        return ZetaL(random_object(rng, cat.a, max_len, leaf_len))
    if kind == "zr":
        return ZetaR(random_object(rng, cat.b, max_len, leaf_len))
    if kind == "perm":
        w = random_object(rng, cat, max_len, leaf_len)
        perm = rng.choice(list(all_permutations(len(w)))) if w \
            else Permutation.identity(0)
        return PermT(perm, w)
    if kind == "sum":
        return SumT(tuple(random_structural_mor(rng, cat, depth - 1,
                                                max_len, leaf_len)
                          for _ in range(rng.randint(1, 2))))
    if kind == "comp":
        t = random_structural_mor(rng, cat, depth - 1, max_len, leaf_len)
        tgt = cat.mor_tgt(t)
        perm = rng.choice(list(all_permutations(len(tgt)))) if tgt \
            else Permutation.identity(0)
        return CompT((t, PermT(perm, tgt)))
    return IdT(random_object(rng, cat, max_len, leaf_len))


# -- equality drivers --------------------------------------------------------

def _paths_agree(cod, path1, path2, objects, morphisms, rep, label):
    bad = next((u for u in objects
                if not cod.obj_eq(apply_path(path1, u), apply_path(path2, u))),
               None)
    if bad is not None:
        rep.add(label, False, detail="object images differ", witness=bad)
        return
    for t in morphisms:
        if not cod.mor_eq(apply_path_mor(path1, t),
                          apply_path_mor(path2, t)).holds:
            rep.add(label, False, detail="morphism images differ", witness=t)
            return
    rep.add(label, True)


def _cells_agree(cod, lhs_at, rhs_at, objects, rep, label,
                 also_identity=False, id_path=None):
    shape = shape_of(cod)
    bad, detail = None, ""
    for u in objects:
        try:
            lterm, rterm = lhs_at(u), rhs_at(u)
            verdict = prove_equal(lterm, rterm, shape)
        except NotParallel as exc:
            bad, detail = u, f"not parallel: {exc}"
            break
        if verdict is not Verdict.PROVEN:
            bad, detail = u, "prover could not match the sides"
            break
        if also_identity:
            ident = cod.id_of(apply_path(id_path, u))
            if prove_equal(lterm, ident, shape) is not Verdict.PROVEN:
                bad, detail = u, "side is not the identity cell"
                break
    rep.add(label, bad is None, detail=detail, witness=bad)


# -- the seven axioms --------------------------------------------------------

def _axiom_left_normalization(x, y, z, objects, rep):
    """Inserting a unit scalar in the middle and collapsing it is invisible:
    the scaled reassociation comes back to the plain one."""
    s = scalar_cat()
    xs = tensor_category(x, s)
    sy = tensor_category(s, y)
    amb = tensor_category(tensor_category(x, y), z)

    a1 = tensor_functor(tensor_functor(right_scalar_insert(x, xs),
                                       identity_functor(y)),
                        identity_functor(z))
    a2 = tensor_functor(assoc_right(a1.target.a), identity_functor(z),
                        src=a1.target)
    a3 = tensor_functor(
        tensor_functor(identity_functor(x), scalar_action(sy),
                       src=a2.target.a, tgt=tensor_category(x, y)),
        identity_functor(z), src=a2.target, tgt=amb)
    a4 = assoc_right(amb)
    m3 = assoc_right(a2.target)

    lam = scaled_assoc_cell(tensor_category(sy, z))

    def lhs(u):
        v = apply_path((a1, a2, m3), u)
        return whisker_component_right(x, lam.at, v)

    def rhs(u):
        return a4.target.id_of(a4(u))

    _cells_agree(a4.target, lhs, rhs, objects, rep, "left normalization",
                 also_identity=True, id_path=(a1, a2, a3, a4))


def _axiom_31_crossing(x, y, z, w, objects, rep):
    """Carrying a block of three past one factor, sliced two ways."""
    xy = tensor_category(x, y)
    zw = tensor_category(z, w)
    yz = tensor_category(y, z)
    amb = tensor_category(xy, zw)

    s1 = tensor_functor(identity_functor(xy), swap_tensor(zw))
    s2 = assoc_left(s1.target)
    s3 = tensor_functor(assoc_right(s2.target.a), identity_functor(z),
                        src=s2.target)
    s4 = tensor_functor(
        tensor_functor(identity_functor(x), swap_tensor(tensor_category(y, w)),
                       src=s3.target.a),
        identity_functor(z), src=s3.target)
    s5 = tensor_functor(assoc_left(s4.target.a), identity_functor(z),
                        src=s4.target)
    s6 = tensor_functor(
        tensor_functor(swap_tensor(tensor_category(x, w)), identity_functor(y),
                       src=s5.target.a),
        identity_functor(z), src=s5.target)

    t1 = assoc_left(amb)
    t2 = swap_tensor(t1.target)
    t3 = assoc_left(t2.target)
    t4 = tensor_functor(assoc_left(t3.target.a), identity_functor(z),
                        src=t3.target)
    cod = s6.target

    pi2 = pentagon_mate(2, x, y, z, w)
    pi1_inv = invert_cell(pentagon_mate(1, w, x, y, z))
    r1yz = invert_cell(mate_r1_pair(y, z, w))
    pi3 = pentagon_mate(3, x, y, w, z)
    pi4_inv = invert_cell(pentagon_mate(4, x, w, y, z))
    r2xy = invert_cell(mate_r2_pair(x, y, w))

    e_xyzw = assoc_right(amb)
    e_v1 = tensor_functor(identity_functor(x),
                          assoc_left(tensor_category(y, zw)),
                          src=e_xyzw.target)
    e_v2 = assoc_left(e_v1.target)
    e_v3 = swap_tensor(e_v2.target)
    e5 = assoc_left(tensor_category(x, tensor_category(w, yz)))
    e6 = tensor_functor(swap_tensor(tensor_category(x, w)),
                        identity_functor(yz), src=e5.target)
    e7 = assoc_left(e6.target)
    m1 = tensor_functor(
        identity_functor(x),
        tensor_functor(swap_tensor(tensor_category(y, w)),
                       identity_functor(z)))
    m2 = tensor_functor(identity_functor(x), assoc_right(m1.target.b),
                        src=m1.target)

    def lhs(u):
        total = None

        def push(term):
            nonlocal total
            total = term if total is None else cod.compose(term, total)

        push(apply_path_mor((t2, t3, t4), pi2.at(u)))
        push(pi1_inv.at(apply_path((e_xyzw, e_v1, e_v2, e_v3), u)))
        push(apply_path_mor((e5, e6, e7),
                            whisker_component_right(x, r1yz.at,
                                                    e_xyzw(u))))
        push(apply_path_mor((m1, m2, e5, e6, e7), pi3.at(s1(u))))
        push(apply_path_mor((s6,),
                            pi4_inv.at(apply_path((s1, s2, s3, s4), u))))
        return total

    def rhs(u):
        return whisker_component_left(r2xy.at, z, apply_path((s1, s2), u))

    _cells_agree(cod, lhs, rhs, objects, rep, "three-one crossing")


def _axiom_13_crossing(x, y, z, w, objects, rep):
    """Carrying one factor past a block of three, sliced two ways."""
    xy = tensor_category(x, y)
    zw = tensor_category(z, w)
    yz = tensor_category(y, z)
    amb = tensor_category(xy, zw)

    s1 = tensor_functor(swap_tensor(xy), identity_functor(zw))
    s2 = assoc_right(s1.target)
    s3 = tensor_functor(identity_functor(y),
                        assoc_left(tensor_category(x, zw)), src=s2.target)
    s4 = tensor_functor(
        identity_functor(y),
        tensor_functor(swap_tensor(tensor_category(x, z)),
                       identity_functor(w), src=s3.target.b),
        src=s3.target)
    s5 = tensor_functor(identity_functor(y), assoc_right(s4.target.b),
                        src=s4.target)
    s6 = tensor_functor(
        identity_functor(y),
        tensor_functor(identity_functor(z),
                       swap_tensor(tensor_category(x, w)),
                       src=s5.target.b),
        src=s5.target)
    spath = (s1, s2, s3, s4, s5, s6)

    t1 = assoc_right(amb)
    t2 = swap_tensor(t1.target)
    cod = s6.target

    pi10 = pentagon_mate(10, y, z, w, x)
    pi3 = pentagon_mate(3, x, y, z, w)
    r2x = invert_cell(mate_r2_single(x, y, z))
    pi5 = pentagon_mate(5, y, x, z, w)
    pi6_inv = invert_cell(pentagon_mate(6, y, z, x, w))
    eps = assoc_counit(
        tensor_category(y, tensor_category(z, tensor_category(w, x))))
    r1x = invert_cell(mate_r1_single(x, z, w))

    n1 = swap_tensor(tensor_category(x, tensor_category(yz, w)))
    n2 = assoc_right(n1.target)
    n3 = assoc_right(n2.target)
    p1 = assoc_right(tensor_category(tensor_category(yz, x), w))
    p2 = tensor_functor(identity_functor(yz),
                        swap_tensor(tensor_category(x, w)), src=p1.target)
    q1 = tensor_functor(
        tensor_functor(identity_functor(y), swap_tensor(tensor_category(x, z))),
        identity_functor(w))
    q2 = tensor_functor(assoc_left(q1.target.a), identity_functor(w),
                        src=q1.target)

    def lhs(u):
        total = None

        def push(term):
            nonlocal total
            total = term if total is None else cod.compose(term, total)

        push(pi10.at(apply_path((t1, t2), u)))
        push(apply_path_mor((n1, n2, n3), pi3.at(u)))
        push(apply_path_mor((p1, p2, n3),
                            whisker_component_left(r2x.at, w,
                                                   assoc_left(amb)(u))))
        push(apply_path_mor((q1, q2, p1, p2, n3), pi5.at(s1(u))))
        push(apply_path_mor((p2, n3),
                            pi6_inv.at(apply_path((s1, s2, s3, s4), u))))
        push(eps.at(apply_path(spath, u)))
        return total

    def rhs(u):
        return whisker_component_right(y, r1x.at, apply_path((s1, s2), u))

    _cells_agree(cod, lhs, rhs, objects, rep, "one-three crossing")


def _axiom_22_crossing(x, y, z, w, objects, rep):
    """Crossing two pairs, the single-mate side against the six-slice side."""
    yz = tensor_category(y, z)
    zw = tensor_category(z, w)
    xy = tensor_category(x, y)
    xz = tensor_category(x, z)
    wx = tensor_category(w, x)
    x_yz = tensor_category(x, yz)
    amb = tensor_category(x_yz, w)

    e1 = tensor_functor(
        tensor_functor(identity_functor(x), swap_tensor(yz)),
        identity_functor(w))
    e2 = tensor_functor(assoc_left(e1.target.a), identity_functor(w),
                        src=e1.target)
    e3 = assoc_right(e2.target)
    e4 = tensor_functor(swap_tensor(xz),
                        identity_functor(tensor_category(y, w)),
                        src=e3.target)
    e5 = tensor_functor(identity_functor(tensor_category(z, x)),
                        swap_tensor(tensor_category(y, w)), src=e4.target)
    e6 = assoc_right(e5.target)
    e7 = tensor_functor(identity_functor(z), assoc_left(e6.target.b),
                        src=e6.target)
    e8 = tensor_functor(
        identity_functor(z),
        tensor_functor(swap_tensor(tensor_category(x, w)),
                       identity_functor(y), src=e7.target.b),
        src=e7.target)

    b1 = tensor_functor(assoc_left(x_yz), identity_functor(w))
    b2 = assoc_right(b1.target)
    b3 = swap_tensor(b2.target)
    b4 = assoc_right(b3.target)
    b5 = tensor_functor(identity_functor(z), assoc_left(b4.target.b),
                        src=b4.target)
    cod = e8.target

    # single-mate side: one pentagon mate between exact hexagon rewrites
    pi8 = pentagon_mate(8, z, x, y, w)
    v_edge = tensor_functor(swap_tensor(tensor_category(xy, z)),
                            identity_functor(w), src=b1.target)
    q1 = tensor_functor(identity_functor(z),
                        swap_tensor(tensor_category(xy, w)))
    q2 = tensor_functor(identity_functor(z), assoc_left(q1.target.b),
                        src=q1.target)

    def side_p(u):
        v = v_edge(b1(u))
        return apply_path_mor((q1, q2), pi8.at(v))

    # six-slice side
    pi7 = pentagon_mate(7, x, y, z, w)
    pi3 = pentagon_mate(3, z, w, x, y)
    r1x = invert_cell(mate_r1_single(x, z, w))
    pi9_inv = invert_cell(pentagon_mate(9, x, z, w, y))
    pi7_inv = invert_cell(pentagon_mate(7, x, z, y, w))
    pi3_inv = invert_cell(pentagon_mate(3, z, x, w, y))

    g1 = assoc_right(amb)
    g2 = tensor_functor(identity_functor(x),
                        assoc_right(tensor_category(yz, w)), src=g1.target)
    g3 = tensor_functor(identity_functor(x),
                        swap_tensor(tensor_category(y, zw)), src=g2.target)
    g4 = assoc_left(g3.target)
    g5 = assoc_right(tensor_category(tensor_category(z, wx), y))
    h2 = assoc_left(g2.target)
    h3 = swap_tensor(h2.target)
    d1 = tensor_functor(
        tensor_functor(swap_tensor(xz), identity_functor(w)),
        identity_functor(y))
    d2 = tensor_functor(assoc_right(d1.target.a), identity_functor(y),
                        src=d1.target)
    d3 = tensor_functor(
        tensor_functor(identity_functor(z), swap_tensor(tensor_category(x, w)),
                       src=d2.target.a),
        identity_functor(y), src=d2.target)
    r1 = tensor_functor(identity_functor(xz),
                        swap_tensor(tensor_category(y, w)))
    r2 = assoc_left(r1.target)

    def side_q(u):
        total = None

        def push(term):
            nonlocal total
            total = term if total is None else cod.compose(term, total)

        push(apply_path_mor((b3, b4, b5), pi7.at(u)))
        push(pi3.at(apply_path((g1, g2, h2, h3), u)))
        push(apply_path_mor((g5,),
                            whisker_component_left(
                                r1x.at, y,
                                g4(g3(apply_path((g1, g2), u))))))
        push(apply_path_mor((d1, d2, d3, g5),
                            pi9_inv.at(g3(apply_path((g1, g2), u)))))
        push(apply_path_mor((r1, r2, d1, d2, d3, g5), pi7_inv.at(e1(u))))
        push(apply_path_mor((e8,),
                            pi3_inv.at(apply_path((e1, e2, e3, e4, e5), u))))
        return total

    _cells_agree(cod, side_p, side_q, objects, rep, "two-two crossing")


def _axiom_yang_baxter(x, y, z, objects, rep):
    """The two ways of fully reversing three factors agree."""
    xy = tensor_category(x, y)
    yz = tensor_category(y, z)
    zy = tensor_category(z, y)
    amb = tensor_category(xy, z)

    a_amb = assoc_right(amb)
    swap_yz_r = tensor_functor(identity_functor(x), swap_tensor(yz),
                               src=a_amb.target)
    b_xyz = swap_tensor(a_amb.target)
    b_xzy = swap_tensor(swap_yz_r.target)
    a_zyx = assoc_right(tensor_category(zy, x))
    swap_yz_l = tensor_functor(swap_tensor(yz), identity_functor(x))
    eps_xzy = assoc_counit(tensor_category(x, zy))
    epsp_yzx_inv = invert_transform(
        tensor_category(yz, x), coassoc_counit(tensor_category(yz, x)),
        "epsp_inv")
    cod = a_zyx.target

    def lhs(u):
        au = a_amb(u)
        first = a_zyx.on_mor(b_xzy.on_mor(eps_xzy.at(swap_yz_r(au))))
        second = a_zyx.on_mor(swap_yz_l.on_mor(epsp_yzx_inv.at(b_xyz(au))))
        return cod.compose(second, first)

    swap_xy_l = tensor_functor(swap_tensor(xy), identity_functor(z))
    a_yxz = assoc_right(swap_xy_l.target)
    epsp_yxz_inv = invert_transform(
        swap_xy_l.target, coassoc_counit(swap_xy_l.target), "epsp_inv")
    b_yx_z = swap_tensor(swap_xy_l.target)
    eps_zyx_inv = invert_transform(
        b_yx_z.target, assoc_counit(b_yx_z.target), "eps_inv")
    r3 = mate_r3(x, y, z)
    b_amb = swap_tensor(amb)
    swap_xy_r_final = tensor_functor(identity_functor(z), swap_tensor(xy),
                                     src=b_amb.target)

    def rhs(u):
        first = swap_xy_r_final.on_mor(r3.at(u))
        v = swap_xy_l(u)
        second = b_yx_z.on_mor(epsp_yxz_inv.at(v))
        w3 = b_yx_z(assoc_left(a_yxz.target, swap_xy_l.target)(a_yxz(v)))
        third = eps_zyx_inv.at(w3)
        return cod.compose(third, cod.compose(second, first))

    _cells_agree(cod, lhs, rhs, objects, rep, "braided interchange")


def _axiom_21_syllepsis(x, y, z, objects, rep):
    """Looping a pair around one factor and back is no loop at all."""
    yz = tensor_category(y, z)
    amb = tensor_category(x, yz)

    unassoc = assoc_left(amb)
    swap_top = swap_tensor(unassoc.target)
    eps_zxy = assoc_counit(swap_top.target)
    swap_back = swap_tensor(swap_top.target)
    reassoc = assoc_right(swap_back.target, amb)
    eps_amb = assoc_counit(amb)

    swap_yz = tensor_functor(identity_functor(x), swap_tensor(yz))
    eps_xzy = assoc_counit(swap_yz.target)
    swap_zy = tensor_functor(identity_functor(x),
                             swap_tensor(tensor_category(z, y)),
                             src=swap_yz.target, tgt=amb)
    cod = amb

    def lhs(u):
        v = swap_top(unassoc(u))
        inner = reassoc.on_mor(swap_back.on_mor(eps_zxy.at(v)))
        return cod.compose(eps_amb.at(u), inner)

    def rhs(u):
        return swap_zy.on_mor(eps_xzy.at(swap_yz(u)))

    _cells_agree(cod, lhs, rhs, objects, rep, "left syllepsis")


def _axiom_12_syllepsis(x, y, z, objects, rep):
    """The mirror loop, phrased with the opposite reassociation."""
    xy = tensor_category(x, y)
    amb = tensor_category(xy, z)

    swap_xy = tensor_functor(swap_tensor(xy), identity_functor(z))
    epsp_yxz = coassoc_counit(swap_xy.target)
    swap_yx = tensor_functor(swap_tensor(tensor_category(y, x)),
                             identity_functor(z), src=swap_xy.target, tgt=amb)

    reassoc = assoc_right(amb)
    swap_x_yz = swap_tensor(reassoc.target)
    epsp_yzx = coassoc_counit(swap_x_yz.target)
    swap_yz_x = swap_tensor(swap_x_yz.target)
    unassoc = assoc_left(swap_yz_x.target, amb)
    epsp_amb = coassoc_counit(amb)
    cod = amb

    def lhs(u):
        return swap_yx.on_mor(epsp_yxz.at(swap_xy(u)))

    def rhs(u):
        v = swap_x_yz(reassoc(u))
        inner = unassoc.on_mor(swap_yz_x.on_mor(epsp_yzx.at(v)))
        return cod.compose(epsp_amb.at(u), inner)

    _cells_agree(cod, lhs, rhs, objects, rep, "right syllepsis")


# -- suite -------------------------------------------------------------------

def _suite_probes(amb, rng, n_random=2):
    objs = list(curated_objects(amb))
    for _ in range(n_random):
        objs.append(random_object(rng, amb, max_len=2, leaf_len=1))
    seen, out = set(), []
    for o in objs:
        k = repr(o)
        if k not in seen:
            seen.add(k)
            out.append(o)
    return out


def run_axiom_suite(bound: int = 2, seed: int = 0) -> Report:
    """Prove the structural axioms over small free leaf categories."""
    rng = random.Random(seed)
    x = free_cat(discrete_fincat(["x1", "x2"], name="X"))
    y = free_cat(discrete_fincat(["y1"], name="Y"))
    z = free_cat(discrete_fincat(["z1"], name="Z"))
    w = free_cat(discrete_fincat(["w1"], name="W"))

    rep = Report("structure axiom suite")

    xy = tensor_category(x, y)
    xy_z = tensor_category(xy, z)
    top4 = tensor_category(xy_z, w)
    probes4 = _suite_probes(top4, rng)
    mors4 = [random_structural_mor(rng, top4, depth=2, max_len=2, leaf_len=1)
             for _ in range(bound * 3)]

    f1 = tensor_functor(assoc_right(xy_z), identity_functor(w))
    f2 = assoc_right(f1.target)
    f3 = tensor_functor(identity_functor(x), assoc_right(f2.target.b),
                        src=f2.target)
    g1 = assoc_right(top4)
    g2 = assoc_right(g1.target)
    _paths_agree(f3.target, (f1, f2, f3), (g1, g2), probes4, mors4, rep,
                 "pentagon composite")

    probes3 = _suite_probes(xy_z, rng)
    mors3 = [random_structural_mor(rng, xy_z, depth=2, max_len=2, leaf_len=1)
             for _ in range(bound * 3)]
    h_s1 = tensor_functor(swap_tensor(xy), identity_functor(z))
    h_s2 = assoc_right(h_s1.target)
    h_s3 = tensor_functor(identity_functor(y),
                          swap_tensor(tensor_category(x, z)), src=h_s2.target)
    h_t1 = assoc_right(xy_z)
    h_t2 = swap_tensor(h_t1.target)
    h_t3 = assoc_right(h_t2.target)
    _paths_agree(h_s3.target, (h_s1, h_s2, h_s3), (h_t1, h_t2, h_t3),
                 probes3, mors3, rep, "hexagon composite")

    x_yz = tensor_category(x, tensor_category(y, z))
    probes3r = _suite_probes(x_yz, rng)
    mors3r = [random_structural_mor(rng, x_yz, depth=2, max_len=2, leaf_len=1)
              for _ in range(bound * 3)]
    k_s1 = tensor_functor(identity_functor(x),
                          swap_tensor(tensor_category(y, z)))
    k_s2 = assoc_left(k_s1.target)
    k_s3 = tensor_functor(swap_tensor(tensor_category(x, z)),
                          identity_functor(y), src=k_s2.target)
    k_t1 = assoc_left(x_yz)
    k_t2 = swap_tensor(k_t1.target)
    k_t3 = assoc_left(k_t2.target)
    _paths_agree(k_s3.target, (k_s1, k_s2, k_s3), (k_t1, k_t2, k_t3),
                 probes3r, mors3r, rep, "opposite hexagon composite")

    sw = swap_tensor(xy)
    sw_back = swap_tensor(sw.target, xy)
    probes2 = _suite_probes(xy, rng)
    mors2 = [random_structural_mor(rng, xy, depth=2, max_len=2, leaf_len=1)
             for _ in range(bound * 3)]
    _paths_agree(xy, (sw, sw_back), (), probes2, mors2, rep,
                 "swap involutive")

    s = scalar_cat()
    xs = tensor_category(x, s)
    mu1 = tensor_functor(right_scalar_insert(x, xs), identity_functor(y))
    mu2 = assoc_right(mu1.target)
    mu3 = tensor_functor(identity_functor(x),
                         scalar_action(tensor_category(s, y)),
                         src=mu2.target, tgt=xy)
    _paths_agree(xy, (mu1, mu2, mu3), (), probes2, mors2, rep,
                 "unit insertion triangle")

    rho_l1 = right_scalar_insert(xy, tensor_category(xy, s))
    rho_l2 = assoc_right(rho_l1.target)
    rho_r = tensor_functor(identity_functor(x),
                           right_scalar_insert(y, tensor_category(y, s)),
                           src=xy, tgt=rho_l2.target)
    bad = next((u for u in probes2
                if not rho_l2.target.obj_eq(rho_l2(rho_l1(u)), rho_r(u))),
               None)
    if bad is None:
        for t in mors2:
            l_img = rho_l2.on_mor(rho_l1.on_mor(t))
            if not rho_l2.target.mor_eq(l_img, rho_r.on_mor(t)).holds:
                bad = t
                break
    rep.add("right insertion associativity", bad is None, witness=bad)

    # counit whiskerings collapse to identities
    eps = assoc_counit(x_yz)
    back = assoc_left(x_yz)
    fwd = assoc_right(back.target, x_yz)
    epsp = coassoc_counit(back.target)
    shape3 = shape_of(x_yz)
    shape3l = shape_of(back.target)
    bad = None
    for u in probes3r:
        v = back(u)
        if prove_equal(eps.at(fwd(v)), x_yz.id_of(fwd(v)),
                       shape3) is not Verdict.PROVEN:
            bad = u
            break
        if prove_equal(back.on_mor(eps.at(u)), back.target.id_of(back(u)),
                       shape3l) is not Verdict.PROVEN:
            bad = u
            break
        if prove_equal(epsp.at(v), back.target.id_of(v),
                       shape3l) is not Verdict.PROVEN:
            bad = u
            break
        if prove_equal(fwd.on_mor(epsp.at(v)), x_yz.id_of(fwd(v)),
                       shape3) is not Verdict.PROVEN:
            bad = u
            break
    rep.add("counit whiskerings are identities", bad is None, witness=bad)

    # the seven 2-cell axioms
    amb_ln = tensor_category(xy, z)
    _axiom_left_normalization(x, y, z, _suite_probes(amb_ln, rng), rep)
    probes22 = _suite_probes(
        tensor_category(tensor_category(x, tensor_category(y, z)), w), rng)
    _axiom_22_crossing(x, y, z, w, probes22, rep)
    probes4c = _suite_probes(tensor_category(xy, tensor_category(z, w)), rng)
    _axiom_31_crossing(x, y, z, w, probes4c, rep)
    _axiom_13_crossing(x, y, z, w, probes4c, rep)
    _axiom_yang_baxter(x, y, z, _suite_probes(amb_ln, rng), rep)
    _axiom_21_syllepsis(x, y, z, probes3r, rep)
    _axiom_12_syllepsis(x, y, z, probes3, rep)

    return rep
