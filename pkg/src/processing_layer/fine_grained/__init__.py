"""
fine_grained package
-----------------------
Pseudo-deterministic proofs for fine-grained problems

Components:
- instances.py: instance types and their text bodies
- threesum.py: 3-SUM with mod-p nonexistence certificates
- hitting_set.py: Hitting Set existence/nonexistence proofs
- orthogonal_vectors.py: OV counting polynomial (MA)
- zero_weight_triangle.py: Zero-Weight Triangle
- fo_formula.py / model_checking.py: first-order model checking
- kclique.py: k-Clique through the lex-first composer
- brute_oracle.py: exhaustive canonical oracles
"""

from .instances import (
    ThreeSumInstance,
    HittingSetInstance,
    OvInstance,
    ZwtInstance,
    Graph,
    CliqueInstance,
)
from .threesum import (
    count_mod_p,
    threesum_nonexistence_prove,
    threesum_nonexistence_verify,
    threesum_prime_pool_profile,
    threesum_psd,
)
from .hitting_set import (
    hittingset_exists_prove,
    hittingset_exists_verify,
    hittingset_nonexistence_prove,
    hittingset_nonexistence_verify,
    hittingset_psd,
)
from .orthogonal_vectors import ov_build_polynomial, ov_certify_counts, ov_psd
from .zero_weight_triangle import zwt_count_mod_p, zwt_psd
from .fo_formula import Formula, parse_formula
from .model_checking import FoModelInstance, modelcheck_psd, register_checker
from .kclique import kclique_psd
from .brute_oracle import brute_oracle

__all__ = [
    'ThreeSumInstance',
    'HittingSetInstance',
    'OvInstance',
    'ZwtInstance',
    'Graph',
    'CliqueInstance',
    'count_mod_p',
    'threesum_nonexistence_prove',
    'threesum_nonexistence_verify',
    'threesum_prime_pool_profile',
    'threesum_psd',
    'hittingset_exists_prove',
    'hittingset_exists_verify',
    'hittingset_nonexistence_prove',
    'hittingset_nonexistence_verify',
    'hittingset_psd',
    'ov_build_polynomial',
    'ov_certify_counts',
    'ov_psd',
    'zwt_count_mod_p',
    'zwt_psd',
    'Formula',
    'parse_formula',
    'FoModelInstance',
    'modelcheck_psd',
    'register_checker',
    'kclique_psd',
    'brute_oracle',
]
