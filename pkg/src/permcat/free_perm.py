"""Free permutative categories on a small generator category.

Objects are words (tuples) of generator objects; a morphism is a permutation
together with a component generator morphism per source position, with
component i running from source[i] to target[perm(i)].  Concatenation is the
strict sum, the empty word the unit, and the symmetry is a block
transposition with identity components.

Also here: the scalar category (naturals, permutations as endomorphisms),
iterated sums m*a, permutation actions, and perfect shuffles, all phrased for
an arbitrary permutative category.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Callable, Iterator

from .perms import (
    Permutation, all_permutations, block_permutation, block_transposition,
    interleave_two,
)
from .perm_core import PermCategory, SymMonFunctor, MonTransform, Verdict, strict_functor


# ---------------------------------------------------------------------------
# generator categories


class FinCat:
    """A small category given by tables; the generators under a free
    permutative category.  Morphisms are names; identities are explicit."""

    def __init__(self, name, objects, mors, compose, ids, inverses=None):
        self.name = name
        self.objects = list(objects)
        self.mors = dict(mors)            # name -> (src, tgt)
        self._compose = dict(compose)     # (g, f) -> name, f then g
        self.ids = dict(ids)              # obj -> name
        self.inverses = dict(inverses or {})
        for x, i in self.ids.items():
            if self.mors[i] != (x, x):
                raise ValueError(f"identity {i!r} not an endomorphism of {x!r}")

    def mor_src(self, f):
        return self.mors[f][0]

    def mor_tgt(self, f):
        return self.mors[f][1]

    def id_of(self, x):
        return self.ids[x]

    def compose(self, g, f):
        if f == self.ids[self.mor_src(f)] and self.mor_tgt(f) == self.mor_src(g):
            return g
        if g == self.ids[self.mor_tgt(g)] and self.mor_tgt(f) == self.mor_src(g):
            return f
        return self._compose[(g, f)]

    def invert(self, f):
        if f == self.ids.get(self.mor_src(f)):
            return f
        return self.inverses.get(f)

    def homs_between(self, x, y):
        return [m for m, (s, t) in self.mors.items() if s == x and t == y]


def discrete_fincat(labels, name=None) -> FinCat:
    labels = list(labels)
    mors = {f"1_{x}": (x, x) for x in labels}
    ids = {x: f"1_{x}" for x in labels}
    return FinCat(name or f"disc({','.join(map(str, labels))})", labels, mors, {}, ids)


def point_fincat() -> FinCat:
    return discrete_fincat(["*"], name="pt")


def product_fincat(x: FinCat, y: FinCat) -> FinCat:
    """Product of generator categories; used for flattening targets."""
    objects = [(a, b) for a in x.objects for b in y.objects]
    mors, compose, ids, inverses = {}, {}, {}, {}
    for f, (fs, ft) in x.mors.items():
        for g, (gs, gt) in y.mors.items():
            mors[(f, g)] = ((fs, gs), (ft, gt))
    by_src: dict = {}
    for name, (s, _) in mors.items():
        by_src.setdefault(s, []).append(name)
    for (f, g), (_, t) in mors.items():
        for (f2, g2) in by_src.get(t, ()):
            compose[((f2, g2), (f, g))] = (x.compose(f2, f), y.compose(g2, g))
    for a in x.objects:
        for b in y.objects:
            ids[(a, b)] = (x.id_of(a), y.id_of(b))
    for (f, g) in mors:
        fi, gi = x.invert(f), y.invert(g)
        if fi is not None and gi is not None:
            inverses[(f, g)] = (fi, gi)
    return FinCat(f"({x.name}*{y.name})", objects, mors, compose, ids, inverses)


def disjoint_union_fincat(x: FinCat, y: FinCat) -> FinCat:
    objects = [("L", a) for a in x.objects] + [("R", b) for b in y.objects]
    mors, compose, ids, inverses = {}, {}, {}, {}
    for f, (s, t) in x.mors.items():
        mors[("L", f)] = (("L", s), ("L", t))
    for g, (s, t) in y.mors.items():
        mors[("R", g)] = (("R", s), ("R", t))
    for (side, f), _ in mors.items():
        base = x if side == "L" else y
        for (side2, f2), _ in mors.items():
            if side2 != side:
                continue
            if base.mor_tgt(f) == base.mor_src(f2):
                compose[((side, f2), (side, f))] = (side, base.compose(f2, f))
        inv = base.invert(f)
        if inv is not None:
            inverses[(side, f)] = (side, inv)
    for a in x.objects:
        ids[("L", a)] = ("L", x.id_of(a))
    for b in y.objects:
        ids[("R", b)] = ("R", y.id_of(b))
    return FinCat(f"({x.name}|{y.name})", objects, mors, compose, ids, inverses)


# ---------------------------------------------------------------------------
# the free permutative category


@dataclass(frozen=True)
class FreeMor:
    src: tuple
    tgt: tuple
    perm: Permutation
    components: tuple

    def __repr__(self):
        return f"FreeMor({self.src}->{self.tgt}, {self.perm}, {self.components})"


class FreeCat(PermCategory):
    def __init__(self, x: FinCat):
        self.x = x
        self.name = f"P({x.name})"

    # -- construction helpers --
    def make_mor(self, src, tgt, perm: Permutation, components) -> FreeMor:
        src, tgt, components = tuple(src), tuple(tgt), tuple(components)
        if not (len(src) == len(tgt) == perm.size == len(components)):
            raise ValueError("LengthMismatch: word/permutation/component counts differ")
        for i, f in enumerate(components):
            if self.x.mors[f] != (src[i], tgt[perm(i)]):
                raise ValueError(
                    f"TypeMismatch: component {i} is {f!r}: {self.x.mors[f]}, "
                    f"needs {src[i]!r} -> {tgt[perm(i)]!r}")
        return FreeMor(src, tgt, perm, components)

    def perm_mor(self, word, perm: Permutation) -> FreeMor:
        """The permutation morphism: identity components, target = permuted word."""
        word = tuple(word)
        tgt = tuple(perm.permute(list(word)))
        return self.make_mor(word, tgt, perm, tuple(self.x.id_of(a) for a in word))

    # -- PermCategory interface --
    @property
    def unit_obj(self):
        return ()

    def sum_obj(self, x, y):
        return tuple(x) + tuple(y)

    def obj_atoms(self, w):
        return [(a,) for a in w]

    def id_of(self, w):
        w = tuple(w)
        return FreeMor(w, w, Permutation.identity(len(w)),
                       tuple(self.x.id_of(a) for a in w))

    def compose(self, g: FreeMor, f: FreeMor) -> FreeMor:
        if f.tgt != g.src:
            raise ValueError(f"ComposeMismatch: {f.tgt} vs {g.src}")
        perm = f.perm.then(g.perm)
        comps = tuple(self.x.compose(g.components[f.perm(i)], f.components[i])
                      for i in range(perm.size))
        return FreeMor(f.src, g.tgt, perm, comps)

    def sum_mor(self, f: FreeMor, g: FreeMor) -> FreeMor:
        return FreeMor(f.src + g.src, f.tgt + g.tgt, f.perm + g.perm,
                       f.components + g.components)

    def symmetry(self, x, y):
        x, y = tuple(x), tuple(y)
        perm = block_transposition(len(x), len(y))
        return FreeMor(x + y, y + x, perm,
                       tuple(self.x.id_of(a) for a in x + y))

    def block_symmetry(self, objs, perm):
        words = [tuple(w) for w in objs]
        src = sum(words, ())
        expanded = block_permutation([len(w) for w in words], perm)
        return self.perm_mor(src, expanded)

    def mor_src(self, f: FreeMor):
        return f.src

    def mor_tgt(self, f: FreeMor):
        return f.tgt

    def mor_eq(self, f: FreeMor, g: FreeMor) -> Verdict:
        return Verdict.EQUAL if f == g else Verdict.DISTINCT

    def try_invert(self, f: FreeMor):
        inv_perm = f.perm.inverse()
        comps = []
        for j in range(inv_perm.size):
            c = self.x.invert(f.components[inv_perm(j)])
            if c is None:
                return None
            comps.append(c)
        return FreeMor(f.tgt, f.src, inv_perm, tuple(comps))

    def enum_objects(self, bound: int) -> Iterator:
        for n in range(bound + 1):
            for w in itertools.product(self.x.objects, repeat=n):
                yield w

    def enum_homs(self, w, wp) -> Iterator:
        w, wp = tuple(w), tuple(wp)
        if len(w) != len(wp):
            return
        n = len(w)
        for perm in all_permutations(n):
            pools = [self.x.homs_between(w[i], wp[perm(i)]) for i in range(n)]
            if any(not p for p in pools):
                continue
            for comps in itertools.product(*pools):
                yield FreeMor(w, wp, perm, comps)


def free_cat(x: FinCat) -> FreeCat:
    return FreeCat(x)


def induced_strict(free: FreeCat, target: PermCategory,
                   obj_map: Callable, mor_map: Callable, name="") -> SymMonFunctor:
    """The unique strict symmetric monoidal extension of a generator assignment.

    A word goes to the sum of its letter images; a morphism (perm, components)
    goes to the sum of component images followed by the block symmetry
    realizing the permutation.
    """
    def on_obj(w):
        return target.sum_obj_list([obj_map(a) for a in w])

    def on_mor(m: FreeMor):
        if m.perm.size == 0:
            return target.id_of(target.unit_obj)
        summed = target.sum_mor_list([mor_map(f) for f in m.components])
        blocks = [obj_map(free.x.mor_tgt(m.components[i])) for i in range(m.perm.size)]
        return target.compose(target.block_symmetry(blocks, m.perm), summed)

    return strict_functor(free, target, on_obj, on_mor, name=name or f"ext({free.name})")


def free_map(src: FreeCat, tgt: FreeCat, obj_map, mor_map, name="") -> SymMonFunctor:
    """P applied to a generator functor: letterwise on words and components."""
    def on_obj(w):
        return tuple(obj_map(a) for a in w)

    def on_mor(m: FreeMor):
        return FreeMor(on_obj(m.src), on_obj(m.tgt), m.perm,
                       tuple(mor_map(f) for f in m.components))

    return strict_functor(src, tgt, on_obj, on_mor, name=name or "P(map)")


def free_transform(src_fun: SymMonFunctor, tgt_fun: SymMonFunctor,
                   component: Callable, name="") -> MonTransform:
    """P applied to a generator natural transformation: at a word, the sum of
    letterwise components with the identity permutation."""
    free: FreeCat = src_fun.source
    tgt: FreeCat = src_fun.target

    def at(w):
        letters_src = src_fun(w)
        letters_tgt = tgt_fun(w)
        comps = tuple(component(a) for a in w)
        return tgt.make_mor(letters_src, letters_tgt,
                            Permutation.identity(len(w)), comps)

    return MonTransform(src_fun, tgt_fun, at, name=name or "P(alpha)")


def eval_functor(c: PermCategory, bound: int = 0):
    """The canonical evaluation from the free category on c's objects to c.

    Returns (free category on the discrete generator category of c-objects,
    the strict functor sending a word to its sum).  `bound` limits which
    objects seed the generator table.
    """
    labels = list(c.enum_objects(bound)) if bound else list(c.enum_objects(10 ** 6))
    x = discrete_fincat(labels, name=f"ob({c.name})")
    free = FreeCat(x)
    return free, induced_strict(free, c, lambda a: a,
                                lambda m: c.id_of(x.mor_src(m)),
                                name=f"eval({c.name})")


# ---------------------------------------------------------------------------
# the scalar category: naturals with permutations


class ScalarCat(PermCategory):
    """Objects naturals; endomorphisms of m are the permutations of m letters;
    no morphisms between distinct naturals.  Sum is addition / block sum."""

    name = "S"

    @property
    def unit_obj(self):
        return 0

    def sum_obj(self, x, y):
        return x + y

    def obj_atoms(self, n):
        return [1] * n

    def id_of(self, n):
        return Permutation.identity(n)

    def compose(self, g: Permutation, f: Permutation) -> Permutation:
        return f.then(g)

    def sum_mor(self, f, g):
        return f + g

    def symmetry(self, m, n):
        return block_transposition(m, n)

    def block_symmetry(self, objs, perm):
        return block_permutation(list(objs), perm)

    def mor_src(self, f: Permutation):
        return f.size

    def mor_tgt(self, f: Permutation):
        return f.size

    def mor_eq(self, f, g) -> Verdict:
        return Verdict.EQUAL if f == g else Verdict.DISTINCT

    def try_invert(self, f: Permutation):
        return f.inverse()

    def enum_objects(self, bound: int) -> Iterator:
        return iter(range(bound + 1))

    def enum_homs(self, m, n) -> Iterator:
        if m != n:
            return iter(())
        return all_permutations(m)


def scalar_cat() -> ScalarCat:
    return ScalarCat()


def scalar_as_free():
    """The scalar category realized as the free category on a point, with the
    translation functors both ways (mutually inverse on the nose)."""
    s = ScalarCat()
    free = FreeCat(point_fincat())

    def to_free_obj(n):
        return ("*",) * n

    def to_free_mor(p: Permutation):
        return free.perm_mor(to_free_obj(p.size), p)

    to_free = strict_functor(s, free, to_free_obj, to_free_mor, name="S->P(pt)")
    to_scalar = strict_functor(free, s, lambda w: len(w), lambda m: m.perm,
                               name="P(pt)->S")
    return s, free, to_free, to_scalar


# ---------------------------------------------------------------------------
# iterated sums, permutation actions, shuffles


def iterated_sum(c: PermCategory, m: int, a):
    """m*a: the m-fold sum, unit when m = 0."""
    return c.sum_obj_list([a] * m)


def power_mor(c: PermCategory, m: int, f):
    """m*f: the m-fold sum of a morphism, identity of the unit when m = 0."""
    return c.sum_mor_list([f] * m)


def symmetry_action(c: PermCategory, perm: Permutation, a):
    """The canonical symmetry of m*a realizing a permutation of the summands."""
    return c.block_symmetry([a] * perm.size, perm)


def twisted_power(c: PermCategory, f, perm: Permutation):
    """f twisted by a permutation: m*f followed by the summand shuffle on the
    target.  Naturality makes this equal the other composite (shuffle first);
    `twisted_power_square` exposes both for checking."""
    first, _ = twisted_power_square(c, f, perm)
    return first


def twisted_power_square(c: PermCategory, f, perm: Permutation):
    m = perm.size
    a, b = c.mor_src(f), c.mor_tgt(f)
    via_target = c.compose(symmetry_action(c, perm, b), power_mor(c, m, f))
    via_source = c.compose(power_mor(c, m, f), symmetry_action(c, perm, a))
    return via_target, via_source


def perfect_shuffle(c: PermCategory, m: int, a, ap):
    """ma + ma' -> m(a + a'): the summand interleaving a,a',a,a',...

    Identity when m <= 1 or either object is the unit (strictly so in
    categories whose unit really erases, e.g. free ones)."""
    return c.block_symmetry([a] * m + [ap] * m, interleave_two(m, m))


def perfect_shuffle_mixed(c: PermCategory, xs, xps):
    """sum(xs) + sum(xps) -> sum(xs[i] + xps[i]): pairwise interleaving of two
    equal-length summand lists; the uniform case is `perfect_shuffle`."""
    xs, xps = list(xs), list(xps)
    if len(xs) != len(xps):
        raise ValueError("LengthMismatch: shuffle needs equal-length lists")
    return c.block_symmetry(xs + xps, interleave_two(len(xs), len(xs)))


def enumerate_objects(c: PermCategory, bound: int) -> list:
    return list(c.enum_objects(bound))


def enumerate_homs(c: PermCategory, w, wp) -> list:
    return list(c.enum_homs(w, wp))
