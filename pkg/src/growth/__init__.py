"""Torsion growth from K to its maximal elementary abelian 2-extension F."""

from ..ecurve.halving import knapp_halving
from .burt import verify_burt_compatibility
from .classifier import classify_growth, replay_certificate
from .halving import TwoPowerGrowth, decide_square_in_F, two_power_growth
from .odd_part import OddTwistWitness, odd_growth, odd_part_F, odd_twist_witnesses
from .ono import brute_force_twist_order4, exists_twist_order4, ono_order4, ono_order8
from .rules import RULES, CertificateStep, GrowthCertificate, GrowthResult, Rule

__all__ = [
    "knapp_halving",
    "verify_burt_compatibility",
    "classify_growth",
    "replay_certificate",
    "TwoPowerGrowth",
    "decide_square_in_F",
    "two_power_growth",
    "OddTwistWitness",
    "odd_growth",
    "odd_part_F",
    "odd_twist_witnesses",
    "brute_force_twist_order4",
    "exists_twist_order4",
    "ono_order4",
    "ono_order8",
    "RULES",
    "CertificateStep",
    "GrowthCertificate",
    "GrowthResult",
    "Rule",
]
