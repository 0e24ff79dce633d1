"""
Self-dual codes from group rings.

Codes over 𝔽₂ and the R_k rings generated by the rows of σ(v) for group ring
elements v, with duality predicates, weight enumerators and exhaustive
searches over parameterized candidate sets.
"""
