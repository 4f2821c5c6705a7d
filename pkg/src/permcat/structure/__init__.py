"""Structure 1-cells and 2-cells for the tensor of permutative categories,
plus the axiom suites that certify them."""
