"""
lp_proof package
-----------------------
Pseudo-deterministic proof for linear programming

Components:
- lp_types.py: instances, size bound, certificates, solver results
- size_bound.py: L and the objective perturbation
- simplex.py: exact two-phase simplex (Bland's rule)
- lex_oracle.py: sequential lexicographic oracle
- lp_protocol.py: prover, verifier and registry entry
"""

from .lp_types import (
    LpInstance,
    SizeBound,
    LpCertificate,
    InfeasibilityCertificate,
    UnboundednessCertificate,
    Optimal,
    Infeasible,
    Unbounded,
)
from .size_bound import compute_size_bound, perturb_objective
from .simplex import solve_exact, solve_lp
from .lex_oracle import lex_greatest_oracle
from .lp_protocol import lp_prover, lp_verifier, lp_psd, LpProver, LpVerifier

__all__ = [
    'LpInstance',
    'SizeBound',
    'LpCertificate',
    'InfeasibilityCertificate',
    'UnboundednessCertificate',
    'Optimal',
    'Infeasible',
    'Unbounded',
    'compute_size_bound',
    'perturb_objective',
    'solve_exact',
    'solve_lp',
    'lex_greatest_oracle',
    'lp_prover',
    'lp_verifier',
    'lp_psd',
    'LpProver',
    'LpVerifier',
]
