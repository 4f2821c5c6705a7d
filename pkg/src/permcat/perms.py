"""Finite permutations in one-line notation, acting on positions.

Conventions used across the package:

- a Permutation of size n maps source position i to target position sigma(i),
  both 0-indexed internally; the display form is 1-indexed one-line notation.
- `then` composes left-to-right: (p.then(q))(i) == q(p(i)).  This matches the
  "f then g" composition convention used for morphisms everywhere else.
- block sum concatenates: the second summand acts on positions shifted past
  the first.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass


@dataclass(frozen=True)
class Permutation:
    image: tuple[int, ...]

    def __post_init__(self):
        n = len(self.image)
        if sorted(self.image) != list(range(n)):
            raise ValueError(f"not a permutation of 0..{n - 1}: {self.image}")

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(tuple(range(n)))

    @staticmethod
    def from_one_line(images_1idx) -> "Permutation":
        """Build from 1-indexed one-line notation, e.g. [2, 3, 1]."""
        return Permutation(tuple(i - 1 for i in images_1idx))

    @staticmethod
    def transposition(n: int, i: int, j: int) -> "Permutation":
        img = list(range(n))
        img[i], img[j] = j, i
        return Permutation(tuple(img))

    @property
    def size(self) -> int:
        return len(self.image)

    def __call__(self, i: int) -> int:
        return self.image[i]

    def then(self, other: "Permutation") -> "Permutation":
        """self first, then other."""
        if other.size != self.size:
            raise ValueError("size mismatch in composition")
        return Permutation(tuple(other.image[x] for x in self.image))

    def inverse(self) -> "Permutation":
        inv = [0] * self.size
        for i, x in enumerate(self.image):
            inv[x] = i
        return Permutation(tuple(inv))

    def __add__(self, other: "Permutation") -> "Permutation":
        off = self.size
        return Permutation(self.image + tuple(x + off for x in other.image))

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.image))

    def permute(self, items):
        """Reorder a sequence: the item at source position i lands at position sigma(i)."""
        if len(items) != self.size:
            raise ValueError("length mismatch")
        out = [None] * self.size
        for i, item in enumerate(items):
            out[self.image[i]] = item
        return out

    def one_line(self) -> tuple[int, ...]:
        return tuple(x + 1 for x in self.image)

    def __str__(self) -> str:
        return "[" + " ".join(str(x) for x in self.one_line()) + "]"


def block_sum(perms) -> Permutation:
    out = Permutation.identity(0)
    for p in perms:
        out = out + p
    return out


def block_permutation(sizes, block_perm: Permutation) -> Permutation:
    """Expand a permutation of blocks to a permutation of elements.

    sizes[i] is the length of source block i; block i moves (contiguously,
    order-preserved) to target slot block_perm(i).
    """
    if len(sizes) != block_perm.size:
        raise ValueError("sizes/block_perm length mismatch")
    # target offset of each target slot: blocks arrive ordered by target index
    tgt_sizes = [0] * len(sizes)
    for i, s in enumerate(sizes):
        tgt_sizes[block_perm(i)] = s
    tgt_off = list(itertools.accumulate([0] + tgt_sizes[:-1]))
    img = []
    for i, s in enumerate(sizes):
        base = tgt_off[block_perm(i)]
        img.extend(range(base, base + s))
    return Permutation(tuple(img))


def block_transposition(m: int, n: int) -> Permutation:
    """The symmetry m+n -> n+m: the first m elements jump past the last n."""
    return block_permutation((m, n), Permutation((1, 0)))


def interleave_two(m: int, n: int) -> Permutation:
    """x1..xm y1..yn -> pairs interleaved as x1 y1 x2 y2 ... (requires m == n).

    This is the block pattern of the perfect shuffle: source block i < m goes
    to slot 2i, source block m+j goes to slot 2j+1.
    """
    if m != n:
        raise ValueError("interleave_two needs equal halves")
    img = [0] * (2 * m)
    for i in range(m):
        img[i] = 2 * i
        img[m + i] = 2 * i + 1
    return Permutation(tuple(img))


def all_permutations(n: int):
    """Deterministic enumeration of S_n (lexicographic in one-line notation)."""
    for img in itertools.permutations(range(n)):
        yield Permutation(img)
