"""Shared test fixtures: seeded random generators for finite permutative
categories, symmetric monoidal functors, bilinear maps, and tensor terms.

The bilinear family below is exhaustively parametrized rather than guessed:
over cyclic-group table categories with trivial symmetry, functoriality
forces the morphism part to vanish and the constraint tables to be the
coboundary of an arbitrary two-variable table rho, which is what we sample.
"""

import itertools
import math
import random

from permcat.perm_core import (
    FiniteTablePermCat, SymMonFunctor, cyclic_group_cat,
)
from permcat.perms import Permutation
from permcat.tensor import (
    BetaGen, BilinearMap, CompT, DeltaL, DeltaR, Dot, DotMor, IdT, InvGen,
    PermT, SumT, TensorCat, ZetaL, ZetaR,
)


def zero_form_cat(n_obj, n_hom, name=None) -> FiniteTablePermCat:
    return cyclic_group_cat(n_obj, n_hom, form=lambda x, y: 0,
                            name=name or f"Z{n_obj}h{n_hom}")


def mor_name(obj, val):
    return f"m{obj}_{val}"


def random_bilinear(rng: random.Random, na=None, nb=None, nc=None, h=None):
    """A valid bilinear map between freshly built zero-form cyclic categories."""
    na = na or rng.choice([2, 3, 4])
    nb = nb or rng.choice([2, 3])
    nc = nc or rng.choice([2, 3, 4])
    h = h or rng.choice([2, 3, 4])
    a, b, c = zero_form_cat(na, h, "A"), zero_form_cat(nb, h, "B"), zero_form_cat(nc, h, "C")
    return random_bilinear_on(rng, a, b, c)


def random_bilinear_on(rng: random.Random, a, b, c):
    """A valid bilinear map between GIVEN zero-form cyclic categories; use this
    to sample several maps sharing sources and target.

    Objects map through a strict bihomomorphism (x, y) -> k*x*y; morphisms map
    to zero; constraints are the coboundary of a random table rho, units its
    negated edge values.  Every bilinear axiom holds by construction (and is
    validator-checked in the tests that use this).
    """
    na, nb, nc = len(a.objects), len(b.objects), len(c.objects)
    h = len(c.homs[(0, 0)])
    ks = [k for k in range(nc) if (k * na) % nc == 0 and (k * nb) % nc == 0]
    k = rng.choice(ks)
    rho = {(x, y): rng.randrange(h) for x in range(na) for y in range(nb)}

    def obj(x, y):
        return (k * x * y) % nc

    def mor(f, g):
        fx = int(f[1:].split("_")[0])
        gy = int(g[1:].split("_")[0])
        return mor_name(obj(fx, gy), 0)

    def ca(x, y, yp):
        val = (rho[(x, y)] + rho[(x, yp)] - rho[(x, (y + yp) % nb)]) % h
        return mor_name((obj(x, y) + obj(x, yp)) % nc, val)

    def cb(y, x, xp):
        val = (rho[(x, y)] + rho[(xp, y)] - rho[((x + xp) % na, y)]) % h
        return mor_name((obj(x, y) + obj(xp, y)) % nc, val)

    def ua(x):
        return mor_name(0, (-rho[(x, 0)]) % h)

    def ub(y):
        return mor_name(0, (-rho[(0, y)]) % h)

    return BilinearMap(a, b, c, obj, mor, ca, cb, ua, ub,
                       name=f"H[{na},{nb},{nc},{h},k={k}]")


def coboundary_functor(c: FiniteTablePermCat, phi: dict, name="twist") -> SymMonFunctor:
    """Identity on objects and morphisms with constraint the coboundary of phi;
    a valid nonstrict endofunctor of a zero-form cyclic category."""
    n = len(c.objects)
    h = len(c.homs[(0, 0)])

    def f2(x, y):
        return mor_name((x + y) % n, (phi[(x + y) % n] - phi[x] - phi[y]) % h)

    return SymMonFunctor(c, c, lambda x: x, lambda m: m, f2,
                         mor_name(0, phi[0] % h), strict=False, name=name)


def random_coboundary_functor(rng: random.Random, c: FiniteTablePermCat,
                              name="twist") -> SymMonFunctor:
    h = len(c.homs[(0, 0)])
    phi = {x: rng.randrange(h) for x in c.objects}
    return coboundary_functor(c, phi, name)


# ---------------------------------------------------------------------------
# random well-typed tensor terms


def random_term(rng: random.Random, cat: TensorCat, a_objs, b_objs, depth=5):
    """A random well-typed term over the tensor of two categories, built by
    growing a pool of typed pieces and combining with sums, composites,
    and inverses."""
    def rand_a():
        return rng.choice(a_objs)

    def rand_b():
        return rng.choice(b_objs)

    def atomic():
        kind = rng.randrange(7)
        if kind == 0:
            a, b, bp = rand_a(), rand_b(), rand_b()
            return DeltaL(a, b, bp)
        if kind == 1:
            b, a, ap = rand_b(), rand_a(), rand_a()
            return DeltaR(b, a, ap)
        if kind == 2:
            return BetaGen(Dot(rand_a(), rand_b()), Dot(rand_a(), rand_b()))
        if kind == 3:
            return ZetaL(rand_a())
        if kind == 4:
            return ZetaR(rand_b())
        if kind == 5:
            n = rng.randrange(0, 3)
            obj = tuple(Dot(rand_a(), rand_b()) for _ in range(n))
            return IdT(obj)
        n = rng.randrange(1, 4)
        obj = tuple(Dot(rand_a(), rand_b()) for _ in range(n))
        images = list(range(n))
        rng.shuffle(images)
        return PermT(Permutation(tuple(images)), obj)

    pool = [atomic() for _ in range(4)]
    for _ in range(depth):
        op = rng.randrange(4)
        if op == 0:
            pool.append(atomic())
        elif op == 1:
            t1, t2 = rng.choice(pool), rng.choice(pool)
            pool.append(SumT(tuple(
                (t1.parts if isinstance(t1, SumT) else (t1,)) +
                (t2.parts if isinstance(t2, SumT) else (t2,)))))
        elif op == 2:
            t1 = rng.choice(pool)
            tgt = cat.mor_tgt(t1)
            images = list(range(len(tgt)))
            rng.shuffle(images)
            step = PermT(Permutation(tuple(images)), tgt)
            pool.append(cat.compose(step, t1))
        else:
            t1 = rng.choice(pool)
            if isinstance(t1, (DeltaL, DeltaR, ZetaL, ZetaR)):
                pool.append(CompT((t1, InvGen(t1))))
    return rng.choice(pool)
