# LND module: derivations of B and their classification

from .derivation import Derivation, canonical_D, make_derivation, apply, power_apply, nilpotency_index
from .classifier import LNDKind, LNDClassification, classify_lnd, kernel_member, invariants_report

__all__ = [
    'Derivation', 'canonical_D', 'make_derivation', 'apply', 'power_apply', 'nilpotency_index',
    'LNDKind', 'LNDClassification', 'classify_lnd', 'kernel_member', 'invariants_report',
]
