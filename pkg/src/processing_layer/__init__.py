"""
processing_layer package
-----------------------
Protocols, algebra and the problem registry

Subpackages:
- algebra: exact arithmetic, primes, convolution, finite fields, polynomials
- proof_core: codec, transcripts, composer, runner, adversarial harness
- lp_proof: linear programming proof
- fine_grained: 3-SUM, Hitting Set, OV, ZWT, model checking, k-Clique
"""
