"""Behavioral tests for the formal-term equality prover.

Covers the canonical lift, the positional permutation of a formal term, the
flattening functor into a free category of letter pairs, the merge-back
transformation, and the Proven/Unknown verdicts built on top.  Every
permutation is cross-checked against the independent positional oracle in
oracles.py, which shares no code with the production implementation.
"""

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from permcat.coherence import (
    FormalTerm,
    NotFormal,
    NotParallel,
    classify_formal,
    flatten_counit,
    flatten_functor,
    flatten_iter,
    leaf_shape,
    lift_embedding,
    merge_left_chain,
    merge_right_chain,
    pair_embed,
    pair_shape,
    prove_equal,
    shape_of,
    underlying_perm,
)
from permcat.free_perm import discrete_fincat, free_cat, product_fincat
from permcat.perm_core import Verdict, compose_functors
from permcat.perms import Permutation, block_transposition
from permcat.tensor import (
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
    ZetaL,
    ZetaR,
    canonical_bilinear,
    eval_bilinear,
    tensor_category,
    validate_bilinear,
)

from helpers import random_bilinear_on, random_term, zero_form_cat
from oracles import CannotHandle, LeafSpec, letter_objs, oracle_perm

# Table-category factors with three objects so that 1 and 2 are not the unit.
A = zero_form_cat(3, 4, "A")
B = zero_form_cat(3, 4, "B")
C = zero_form_cat(3, 4, "C")
TAB = tensor_category(A, B)
SH = shape_of(TAB)
OAB = (LeafSpec(A), LeafSpec(B))
OBJS = (0, 1, 2)
DOTS = tuple(Dot(a, b) for a in OBJS for b in OBJS)

TABC = tensor_category(TAB, C)
SH3 = shape_of(TABC)
OABC = ((LeafSpec(A), LeafSpec(B)), LeafSpec(C))
AB_WORDS = ((), (Dot(1, 1),), (Dot(0, 1),), (Dot(2, 1), Dot(1, 2)))

# Free factors on two letters each; objects are words, so sums never collapse.
PX = free_cat(discrete_fincat(("x1", "x2"), name="X"))
PY = free_cat(discrete_fincat(("y1", "y2"), name="Y"))
TXY = tensor_category(PX, PY)
SHXY = shape_of(TXY)
PXY = free_cat(product_fincat(PX.x, PY.x))
FLXY = flatten_functor(TXY, PXY)
PE = pair_embed(TXY, PXY)
OXY = (LeafSpec(PX, words=True), LeafSpec(PY, words=True))

XW = ((), ("x1",), ("x2",), ("x1", "x2"))
YW = ((), ("y1",), ("y2",), ("y1", "y2"))


def nested_objs(x):
    if isinstance(x, tuple):
        return (nested_objs(x[0]), nested_objs(x[1]))
    return x.obj


def assert_matches_oracle(t, shape, oshape, cat):
    """Classification and the oracle must agree bit for bit: same accept or
    reject decision, same source and target letter sequences, same images."""
    src = cat.endpoints(t)[0]
    ft = classify_formal(t, shape)
    try:
        src_l, tgt_l, operm = oracle_perm(t, oshape, src)
    except CannotHandle:
        assert isinstance(ft, NotFormal), (t, ft)
        return False
    assert isinstance(ft, FormalTerm), (t, getattr(ft, "reason", None))
    u = underlying_perm(ft)
    assert u.perm == operm, t
    assert [nested_objs(x) for x in u.source] == [letter_objs(p) for p in src_l], t
    assert [nested_objs(x) for x in u.target] == [letter_objs(p) for p in tgt_l], t
    return True


def double_merge_two_ways(cat, a, ap, b, bp):
    """The two factorizations of the four-summand merge into (a+a').(b+b').

    Both sides start from a.b + a'.b + a.b' + a'.b'.  The left route shuffles
    the middle summands, merges second factors, then first factors; the right
    route merges first factors, then second factors.  They are equal, and the
    comparison exercises the prover rather than syntactic normalization.
    """
    lhs = CompT((
        SumT((IdT((Dot(a, b),)),
              BetaGen(Dot(ap, b), Dot(a, bp)),
              IdT((Dot(ap, bp),)))),
        SumT((DeltaL(a, b, bp), DeltaL(ap, b, bp))),
        DeltaR(cat.b.sum_obj(b, bp), a, ap),
    ))
    rhs = CompT((
        SumT((DeltaR(b, a, ap), DeltaR(bp, a, ap))),
        DeltaL(cat.a.sum_obj(a, ap), b, bp),
    ))
    return lhs, rhs


# ---------------------------------------------------------------------------
# shapes


def test_shape_of_unfolds_nested_tensors():
    assert SH.length == 2
    assert SH.left.is_leaf and SH.left.cat is A
    assert SH3.length == 3
    assert SH3.left.cat is TAB and SH3.right.cat is C
    assert [p for p, _ in SH3.leaf_paths()] == [("L", "L"), ("L", "R"), ("R",)]
    assert [c for _, c in SH3.leaf_paths()] == [A, B, C]


def test_pair_shape_rejects_mismatched_factors():
    with pytest.raises(ValueError):
        pair_shape(leaf_shape(B), leaf_shape(A), cat=TAB)


# ---------------------------------------------------------------------------
# classification


def test_merge_generator_is_formal():
    ft = classify_formal(DeltaL(1, 1, 2), SH)
    assert isinstance(ft, FormalTerm)
    assert isinstance(ft.lift, DeltaL)
    u = underlying_perm(ft)
    assert u.perm == Permutation.identity(2)


def test_identity_components_are_formal():
    ft = classify_formal(DotMor(A.id_of(1), B.id_of(2)), SH)
    assert isinstance(ft, FormalTerm)
    assert underlying_perm(ft).perm == Permutation.identity(1)


def test_nonidentity_component_is_rejected_with_path():
    bad = DotMor("m1_1", B.id_of(1))  # nonidentity endomorphism on the left
    ft = classify_formal(bad, SH)
    assert isinstance(ft, NotFormal)
    assert ft.path == ("f",)
    assert "identity" in ft.reason

    wrapped = CompT((IdT((Dot(1, 1),)), bad))
    ft2 = classify_formal(wrapped, SH)
    assert isinstance(ft2, NotFormal)
    assert ft2.path == ("steps", 1, "f")


def test_nonidentity_letter_permutation_is_rejected():
    f = PX.perm_mor(("x1", "x2"), Permutation((1, 0)))
    ft = classify_formal(DotMor(f, PY.id_of(("y1",))), SHXY)
    assert isinstance(ft, NotFormal)
    assert ft.path == ("f",)


def test_mismatched_merge_granularity_is_rejected():
    # The first factor of the top summand arrives as two letters, the second
    # as one, so the final merge has no common refinement.
    t = CompT((SumT((DeltaR(1, 1, 1), IdT((Dot(2, 2),)))), DeltaL(2, 1, 2)))
    ft = classify_formal(t, SH)
    assert isinstance(ft, NotFormal)
    assert ft.path == ("steps", 1)
    assert "different letters" in ft.reason
    assert prove_equal(t, t, SH) is Verdict.UNKNOWN


def test_unit_sided_unit_deletion_is_formal():
    # Inverse unit insertion at a dot whose other side is the additive unit.
    ft = classify_formal(InvGen(ZetaR(1)), SH)
    assert isinstance(ft, FormalTerm)
    u = underlying_perm(ft)
    assert u.source == () and u.perm == Permutation.identity(0)

    ft2 = classify_formal(InvGen(ZetaR(("y1", "y2"))), SHXY)
    assert isinstance(ft2, FormalTerm)
    assert underlying_perm(ft2).source == ()


def test_ill_typed_composite_raises():
    with pytest.raises(IllTyped):
        classify_formal(CompT((ZetaL(1), ZetaL(1))), SH)


def test_lift_embedding_reproduces_the_term():
    rng = random.Random(7)
    for _ in range(25):
        t = random_term(rng, TAB, OBJS, OBJS, depth=3)
        ft = classify_formal(t, SH)
        assert isinstance(ft, FormalTerm)
        emb = lift_embedding(ft)
        src, tgt = TAB.endpoints(t)
        assert emb(ft.lift_src) == src
        assert emb(ft.lift_tgt) == tgt
        img = emb.on_mor(ft.lift)
        assert TAB.mor_eq(img, t).holds


# ---------------------------------------------------------------------------
# flattening into letter pairs


def test_flatten_objects_row_major():
    w = (Dot(("x1", "x2"), ("y1", "y2")),)
    assert FLXY(w) == (("x1", "y1"), ("x1", "y2"), ("x2", "y1"), ("x2", "y2"))
    assert FLXY(()) == ()


def test_flatten_left_merge_single_row_is_identity():
    m = FLXY.on_mor(DeltaL(("x1",), ("y1",), ("y2",)))
    assert m.perm == Permutation.identity(2)


def test_flatten_left_merge_two_rows_is_middle_transposition():
    m = FLXY.on_mor(DeltaL(("x1", "x2"), ("y1",), ("y2",)))
    assert m.perm == Permutation.from_one_line((1, 3, 2, 4))


def test_flatten_right_merge_and_units_are_identities():
    m = FLXY.on_mor(DeltaR(("y1",), ("x1", "x2"), ("x2",)))
    assert m.perm == Permutation.identity(3)
    for t in (ZetaL(("x1", "x2")), ZetaR(("y1",))):
        z = FLXY.on_mor(t)
        assert z.src == () and z.perm == Permutation.identity(0)


def test_flatten_symmetry_is_a_block_transposition():
    t = BetaGen(Dot(("x1",), ("y1", "y2")), Dot(("x2",), ("y1",)))
    m = FLXY.on_mor(t)
    assert m.perm == block_transposition(2, 1)


def test_flatten_pairs_letter_permutations_row_major():
    f = PX.perm_mor(("x1", "x2"), Permutation((1, 0)))
    g = PY.perm_mor(("y1", "y2"), Permutation((1, 0)))
    m = FLXY.on_mor(DotMor(f, g))
    assert m.perm == Permutation((3, 2, 1, 0))


def test_flatten_distributes_over_sums_and_composites():
    rng = random.Random(11)
    seen_comp = seen_sum = 0
    for _ in range(120):
        t = random_term(rng, TXY, XW, YW, depth=4)
        m = FLXY.on_mor(t)
        if isinstance(t, CompT):
            seen_comp += 1
            step = None
            for s in t.steps:
                part = FLXY.on_mor(s)
                step = part if step is None else PXY.compose(part, step)
            assert m == step
        if isinstance(t, SumT):
            seen_sum += 1
            parts = [FLXY.on_mor(p) for p in t.parts]
            acc = PXY.id_of(())
            for p in parts:
                acc = PXY.sum_mor(acc, p)
            assert m == acc
    assert seen_comp > 10 and seen_sum > 10


def test_block_sum_of_underlying_permutations():
    t1 = DeltaL(1, 1, 2)
    t2 = BetaGen(Dot(2, 1), Dot(1, 2))
    whole = underlying_perm(classify_formal(SumT((t1, t2)), SH))
    p1 = underlying_perm(classify_formal(t1, SH))
    p2 = underlying_perm(classify_formal(t2, SH))
    assert whole.perm == p1.perm + p2.perm


# ---------------------------------------------------------------------------
# underlying permutations of the two merge orders


def test_merge_second_factors_first_has_identity_permutation():
    t = CompT((SumT((DeltaL(1, 1, 2), DeltaL(2, 1, 2))),
               DeltaR(B.sum_obj(1, 2), 1, 2)))
    u = underlying_perm(classify_formal(t, SH))
    assert len(u.source) == 4
    assert u.perm == Permutation.from_one_line((1, 2, 3, 4))
    assert_matches_oracle(t, SH, OAB, TAB)


def test_merge_first_factors_first_swaps_the_middle():
    t = CompT((SumT((DeltaR(1, 1, 2), DeltaR(2, 1, 2))),
               DeltaL(A.sum_obj(1, 2), 1, 2)))
    u = underlying_perm(classify_formal(t, SH))
    assert u.perm == Permutation.from_one_line((1, 3, 2, 4))
    assert_matches_oracle(t, SH, OAB, TAB)


def test_identity_term_has_identity_permutation():
    w = (Dot(1, 1), Dot(2, 2), Dot(0, 1))
    u = underlying_perm(classify_formal(IdT(w), SH))
    assert u.perm == Permutation.identity(2)  # the unit-sided dot is empty
    assert u.source == u.target


# ---------------------------------------------------------------------------
# verdicts


def test_double_merge_orders_are_proven_equal():
    lhs, rhs = double_merge_two_ways(TAB, 1, 2, 1, 2)
    assert prove_equal(lhs, rhs, SH) is Verdict.PROVEN


def test_double_merge_proven_over_free_factors():
    lhs, rhs = double_merge_two_ways(TXY, ("x1",), ("x2",), ("y1",), ("y2", "y1"))
    assert prove_equal(lhs, rhs, SHXY) is Verdict.PROVEN


def test_double_merge_proven_on_three_factor_shape():
    lhs, rhs = double_merge_two_ways(TABC, (Dot(1, 1),), (Dot(2, 1),), 1, 2)
    assert prove_equal(lhs, rhs, SH3) is Verdict.PROVEN


def test_term_is_proven_equal_to_itself():
    t = CompT((DeltaL(1, 1, 2), InvGen(DeltaL(1, 1, 2))))
    assert prove_equal(t, t, SH) is Verdict.PROVEN


def test_symmetry_is_not_proven_equal_to_identity():
    d = Dot(1, 1)
    assert prove_equal(BetaGen(d, d), IdT((d, d)), SH) is Verdict.UNKNOWN


def test_symmetry_at_letterless_dots_is_provably_trivial():
    # A dot whose first factor is the unit carries no letters, so swapping two
    # such dots is the identity: conjugate the empty swap by unit insertions.
    d0 = Dot(0, 1)
    assert prove_equal(BetaGen(d0, d0), IdT((d0, d0)), SH) is Verdict.PROVEN


def test_prove_equal_requires_parallel_terms():
    with pytest.raises(NotParallel):
        prove_equal(ZetaL(1), ZetaL(2), SH)


def test_inverse_merge_round_trip_is_proven_trivial():
    t = CompT((DeltaR(1, 1, 1), InvGen(DeltaR(1, 1, 1))))
    assert prove_equal(t, IdT((Dot(1, 1), Dot(1, 1))), SH) is Verdict.PROVEN


# ---------------------------------------------------------------------------
# oracle agreement


def test_oracle_agreement_on_all_small_generators():
    handled = 0
    terms = []
    for a, b, bp in itertools.product(OBJS, repeat=3):
        terms.append(DeltaL(a, b, bp))
        terms.append(InvGen(DeltaL(a, b, bp)))
        terms.append(DeltaR(b, a, bp))
        terms.append(InvGen(DeltaR(b, a, bp)))
    for p, q in itertools.product(DOTS, repeat=2):
        terms.append(BetaGen(p, q))
    for a in OBJS:
        terms.append(ZetaL(a))
        terms.append(InvGen(ZetaL(a)))
        terms.append(ZetaR(a))
        terms.append(InvGen(ZetaR(a)))
    for t in terms:
        handled += assert_matches_oracle(t, SH, OAB, TAB)
    # standalone inverse merges are rejected unless one half is the unit,
    # so a portion of the corpus is rejected by both implementations
    assert handled >= 170


def test_oracle_agreement_on_permutation_terms():
    for n in (0, 1, 2):
        for word in itertools.product(DOTS, repeat=n):
            for perm in itertools.permutations(range(n)):
                t = PermT(Permutation(perm), word)
                assert assert_matches_oracle(t, SH, OAB, TAB)
    rng = random.Random(3)
    for _ in range(40):
        word = tuple(rng.choice(DOTS) for _ in range(3))
        images = [0, 1, 2]
        rng.shuffle(images)
        t = PermT(Permutation(tuple(images)), word)
        assert assert_matches_oracle(t, SH, OAB, TAB)


def test_oracle_agreement_on_random_composites():
    rng = random.Random(20260819)
    handled = 0
    for _ in range(300):
        t = random_term(rng, TAB, OBJS, OBJS, depth=5)
        handled += assert_matches_oracle(t, SH, OAB, TAB)
    assert handled >= 280  # merges of collapsing sums may reject, rarely


@given(st.integers(0, 2**32 - 1))
@settings(max_examples=60, deadline=None)
def test_oracle_agreement_property(seed):
    rng = random.Random(seed)
    t = random_term(rng, TAB, OBJS, OBJS, depth=4)
    assert_matches_oracle(t, SH, OAB, TAB)


def test_oracle_agreement_on_three_factor_terms():
    rng = random.Random(99)
    for a, cobj, cp in itertools.product(AB_WORDS, OBJS, OBJS):
        assert_matches_oracle(DeltaL(a, cobj, cp), SH3, OABC, TABC)
        assert_matches_oracle(DeltaR(cobj, a, a), SH3, OABC, TABC)
    for _ in range(150):
        t = random_term(rng, TABC, AB_WORDS, OBJS, depth=4)
        assert_matches_oracle(t, SH3, OABC, TABC)


def test_flatten_matches_oracle_on_words():
    """The flattening functor agrees with the positional oracle when letters
    are word positions rather than whole objects."""
    rng = random.Random(4242)
    gens = []
    for a, b, bp in itertools.product(XW[1:3], YW, YW):
        gens.append(DeltaL(a, b, bp))
        gens.append(DeltaR(b, a, a))
    for t in gens:
        src = TXY.endpoints(t)[0]
        m = FLXY.on_mor(t)
        src_l, tgt_l, operm = oracle_perm(t, OXY, src)
        assert m.perm == operm
        assert list(m.src) == [letter_objs(p) for p in src_l]
        assert list(m.tgt) == [letter_objs(p) for p in tgt_l]
    for _ in range(200):
        t = random_term(rng, TXY, XW, YW, depth=4)
        src = TXY.endpoints(t)[0]
        m = FLXY.on_mor(t)
        src_l, tgt_l, operm = oracle_perm(t, OXY, src)
        assert m.perm == operm
        assert list(m.src) == [letter_objs(p) for p in src_l]


def test_iterated_flatten_matches_oracle():
    pz = free_cat(discrete_fincat(("z1", "z2"), name="Z"))
    t3 = tensor_category(TXY, pz)
    fl3 = flatten_iter(shape_of(t3))
    oshape = ((LeafSpec(PX, words=True), LeafSpec(PY, words=True)),
              LeafSpec(pz, words=True))
    w = (Dot((Dot(("x1",), ("y1",)), Dot(("x2",), ("y2",))), ("z1",)),)
    assert fl3(w) == ((("x1", "y1"), "z1"), (("x2", "y2"), "z1"))

    rng = random.Random(5)
    ab_words = ((), (Dot(("x1",), ("y1",)),),
                (Dot(("x1", "x2"), ("y2",)), Dot((), ("y1",))))
    zw = ((), ("z1",), ("z2", "z1"))
    for _ in range(100):
        t = random_term(rng, t3, ab_words, zw, depth=3)
        src = t3.endpoints(t)[0]
        m = fl3.on_mor(t)
        src_l, tgt_l, operm = oracle_perm(t, oshape, src)
        assert m.perm == operm
        assert list(m.src) == [letter_objs(p) for p in src_l]


# ---------------------------------------------------------------------------
# the embedding of letter pairs and the merge-back transformation


def test_flatten_then_embed_is_the_identity():
    rt = compose_functors(FLXY, PE)  # embed first, then flatten
    for n in range(4):
        for w in itertools.product(PXY.x.objects, repeat=n):
            assert rt(w) == w
    for v in PXY.enum_objects(2):
        for wp in itertools.permutations(v):
            for m in PXY.enum_homs(v, tuple(wp)):
                assert rt.on_mor(m) == m


def test_embed_then_flatten_collapses_to_single_letters():
    v = PE((("x1", "y2"), ("x2", "y1")))
    assert v == (Dot(("x1",), ("y2",)), Dot(("x2",), ("y1",)))
    assert FLXY(v) == (("x1", "y2"), ("x2", "y1"))


def test_merge_back_components_are_formal_with_identity_permutation():
    fc = flatten_counit(TXY, PXY, FLXY, PE)
    words = [w for n in range(3)
             for w in itertools.product(tuple(Dot(a, b) for a in XW for b in YW),
                                        repeat=n)]
    for w in words:
        comp = fc.at(w)
        src, tgt = TXY.endpoints(comp)
        assert src == PE(FLXY(w))
        assert tgt == w
        m = FLXY.on_mor(comp)
        assert m == PXY.id_of(m.src)  # flattening absorbs the merge-back


def test_merge_back_at_embedded_words_is_the_identity():
    fc = flatten_counit(TXY, PXY, FLXY, PE)
    for v in PXY.enum_objects(2):
        comp = fc.at(PE(v))
        assert TXY.mor_eq(comp, TXY.id_of(PE(v))).holds


def test_merge_back_is_natural():
    fc = flatten_counit(TXY, PXY, FLXY, PE)
    rt = compose_functors(PE, FLXY)
    rng = random.Random(31)
    for _ in range(20):
        t = random_term(rng, TXY, XW, YW, depth=3)
        src, tgt = TXY.endpoints(t)
        lhs = TXY.compose(fc.at(tgt), rt.on_mor(t))
        rhs = TXY.compose(t, fc.at(src))
        assert TXY.mor_eq(lhs, rhs).holds


# ---------------------------------------------------------------------------
# merge chains


def test_merge_left_chain_endpoints_and_triviality():
    assert merge_left_chain(TXY, ("x1",), []) == ZetaL(("x1",))
    one = merge_left_chain(TXY, ("x1",), [("y1",)])
    assert TXY.endpoints(one) == ((Dot(("x1",), ("y1",)),),) * 2

    bs = [("y1",), ("y2",), ("y1", "y2")]
    t = merge_left_chain(TXY, ("x1",), bs)
    src, tgt = TXY.endpoints(t)
    assert src == tuple(Dot(("x1",), b) for b in bs)
    assert tgt == (Dot(("x1",), ("y1", "y2", "y1", "y2")),)
    m = FLXY.on_mor(t)
    assert m.perm == Permutation.identity(4)
    assert isinstance(classify_formal(t, SHXY), FormalTerm)


def test_merge_right_chain_endpoints_and_triviality():
    assert merge_right_chain(TXY, ("y1",), []) == ZetaR(("y1",))
    t = merge_right_chain(TXY, ("y1",), [("x1",), ("x2",)])
    src, tgt = TXY.endpoints(t)
    assert src == (Dot(("x1",), ("y1",)), Dot(("x2",), ("y1",)))
    assert tgt == (Dot(("x1", "x2"), ("y1",)),)
    assert FLXY.on_mor(t).perm == Permutation.identity(2)


# ---------------------------------------------------------------------------
# prover hook integration


def test_mor_eq_uses_the_prover_for_merge_reorderings():
    lhs, rhs = double_merge_two_ways(TAB, 1, 2, 1, 2)
    assert TAB.mor_eq(lhs, rhs) is Verdict.PROVEN


def test_canonical_pairing_constraint_axioms_are_proven():
    # The interchange and unit axioms of the canonical pairing are composites
    # of adjoined generators, so the prover decides them.  The fixed-argument
    # functor checks also compare against images of factor symmetries, which
    # are simple components rather than generators; those stay undecided and
    # the validator reports them as failures, which we pin down here.
    rep = validate_bilinear(canonical_bilinear(A, B, TAB), bound=2)
    status = {c.name: c.passed for c in rep.checks}
    assert status["interchange"]
    assert status["units-agree-at-unit"]
    assert status["unit-distribution-first"]
    assert status["unit-distribution-second"]
    assert not status["fixed-first-argument-functors"]


# ---------------------------------------------------------------------------
# soundness: proven pairs evaluate equally in finite targets


def proven_pair(rng, cat, a_objs, b_objs):
    kind = rng.randrange(4)
    if kind == 0:
        a, ap = rng.choice(a_objs), rng.choice(a_objs)
        b, bp = rng.choice(b_objs), rng.choice(b_objs)
        return double_merge_two_ways(cat, a, ap, b, bp)
    if kind == 1:
        # naturality of the block swap under a sum of two random terms
        f = random_term(rng, cat, a_objs, b_objs, depth=2)
        g = random_term(rng, cat, a_objs, b_objs, depth=2)
        fs, ft = cat.endpoints(f)
        gs, gt = cat.endpoints(g)
        swap_t = PermT(block_transposition(len(ft), len(gt)), ft + gt)
        swap_s = PermT(block_transposition(len(fs), len(gs)), fs + gs)
        return (CompT((SumT((f, g)), swap_t)),
                CompT((swap_s, SumT((g, f)))))
    if kind == 2:
        p = Dot(rng.choice(a_objs), rng.choice(b_objs))
        q = Dot(rng.choice(a_objs), rng.choice(b_objs))
        return BetaGen(p, q), PermT(Permutation((1, 0)), (p, q))
    # insert a unit summand and delete it again
    t = random_term(rng, cat, a_objs, b_objs, depth=2)
    s, tg = cat.endpoints(t)
    z = ZetaL(rng.choice(a_objs)) if rng.randrange(2) else ZetaR(rng.choice(b_objs))
    padded = CompT((SumT((z, t)), SumT((InvGen(z), IdT(tg)))))
    return padded, t


def test_proven_pairs_evaluate_equally_in_random_targets():
    rng = random.Random(13)
    targets = [random_bilinear_on(rng, A, B, zero_form_cat(n, 4, f"T{n}"))
               for n in (2, 3, 4)]
    for _ in range(1000):
        t1, t2 = proven_pair(rng, TAB, OBJS, OBJS)
        assert prove_equal(t1, t2, SH) is Verdict.PROVEN
        for h in targets:
            img1 = eval_bilinear(h, TAB, t1)
            img2 = eval_bilinear(h, TAB, t2)
            assert h.target.mor_eq(img1, img2).holds


@given(st.integers(0, 2**32 - 1))
@settings(max_examples=40, deadline=None)
def test_proven_pair_property(seed):
    rng = random.Random(seed)
    t1, t2 = proven_pair(rng, TAB, OBJS, OBJS)
    assert prove_equal(t1, t2, SH) is Verdict.PROVEN
