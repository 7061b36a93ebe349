"""
Pseudo-Deterministic Proofs

Doubly-efficient pseudo-deterministic interactive proofs: the verifier
outputs one canonical solution (or rejects) whatever the prover does.
Covers linear programming and fine-grained problems (3-SUM, hitting set,
orthogonal vectors, zero-weight triangle, first-order model checking,
k-clique).
"""

__version__ = "1.0.0"
__license__ = "MIT"
