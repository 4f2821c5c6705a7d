"""permcat: a symbolic kernel for permutative categories.

Builds tensor products, direct sums, and free permutative categories with all
structure morphisms as explicit terms, and proves equalities of structure
morphisms by comparing underlying permutations.
"""

# importing the coherence module installs the term-equality prover used by
# TensorCat.mor_eq; keep it in the package root so the hook is always live
from . import coherence as coherence  # noqa: F401

__version__ = "0.1.0"
