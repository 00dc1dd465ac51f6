"""Public-key constructions over a twisted dihedral group algebra.

The package provides field and group primitives, the twisted algebra with
its reversible subspace, a two-message key exchange, a probabilistic
public-key encryption scheme, an FO-transformed KEM with implicit
rejection, and a desk-scale cryptanalysis toolkit.
"""

from .errors import CapacityError, ParameterError
from .field import (FieldElement, FieldParams, field_arith, get_lambda,
                    is_square, mult_order)
from .group import DihedralGroup
from .cocycle import (BetaMap, Cocycle, CocycleCheck, coboundary_of,
                      equivalence_search, verify_cocycle)
from .algebra import (AlgebraElement, AlgebraParams, SecretPair, adjunct,
                      alg_add, alg_product, in_gamma, index_h, index_h_inv,
                      iter_gamma, phi, phi_inv, rep_deserialize,
                      rep_serialize, sample_gamma, sample_secret_pair,
                      sample_subspace)
from .kex import (PublicParams, Session, derive_public, derive_shared,
                  setup_public_params)
from .pke import PkeCiphertext, PkeKeyPair, pke_dec, pke_enc, pke_gen
from .kem import (KemKeyPair, hash_g1, hash_g2, kem_decaps, kem_encaps,
                  kem_keygen)
from .attacks import (AttackResult, DpdInstance, MitmTable, dpd_verify,
                      exhaustive_dpd, key_recovery_check, mitm_offline,
                      mitm_online, run_attack_game)

__version__ = "0.1.0"
