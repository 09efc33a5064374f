"""Partitions into exactly two part sizes: enumeration, parity classes,
the bijections of the combinatorial proof that nu_2(16n+14) = 0 mod 4,
and checks of each step at concrete n."""

from .arith import OddEvenDecomposition, decompose_pow2, divisor_count, divisor_sum, divisors
from .classes import MarkedParityClass, ParityClass, class_census, classify
from .identities import CongruenceFamily, IdentityReport, check_conjecture, verify_identity
from .maps import MapDomainError, conj_rho_conj, conjugate, phi_bar, rho, tau
from .partitions import (
    FrequencyPartition,
    TwoSizePartition,
    count_k_sizes,
    enumerate_two_size,
    format_partition,
    nu2_closed_form,
    nu_k_series,
    parse_partition,
)

__version__ = "0.1.0"
