"""Bethe-vector counting for the spin-1/2 XXX chain via string configurations.

A string configuration on N sites with n down spins is a partition of n;
its part multiplicities m_l count strings of length l.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .crystal import DomainError
from .partitions import Partition, partitions_of


@dataclass(frozen=True)
class StringConfiguration:
    nu: Partition
    sites: int

    def __post_init__(self):
        if not isinstance(self.nu, Partition):
            object.__setattr__(self, "nu", Partition(self.nu))
        if self.sites < 1:
            raise DomainError("number of sites must be positive")

    @property
    def down(self) -> int:
        return self.nu.size()


def p_ell(sc: StringConfiguration, ell: int) -> int:
    """P_l = N - 2 sum_{l'} min(l, l') m_{l'}."""
    if ell < 1:
        raise DomainError("string length must be >= 1")
    return sc.sites - 2 * sum(min(ell, x) for x in sc.nu)


def is_admissible(sc: StringConfiguration) -> bool:
    return all(p_ell(sc, ell) >= 0 for ell in set(sc.nu))


def count_for_configuration(sc: StringConfiguration) -> int:
    """Z(N, n | {m_l}) = prod_l binom(P_l + m_l, m_l)."""
    total = 1
    for ell, m in sc.nu.multiplicities().items():
        p = p_ell(sc, ell)
        if p < 0:
            raise DomainError(f"inadmissible configuration {list(sc.nu)}: P_{ell} = {p}")
        total *= comb(p + m, m)
    return total


def string_configurations(N: int, n: int) -> list[StringConfiguration]:
    """Admissible string configurations with n down spins on N sites."""
    out = []
    for nu in partitions_of(n):
        sc = StringConfiguration(nu, N)
        if is_admissible(sc):
            out.append(sc)
    return out


def count_total(N: int, n: int) -> int:
    """Z(N, n): total number of Bethe vectors with n down spins."""
    if N < 1:
        raise DomainError("number of sites must be positive")
    if n < 0 or 2 * n > N:
        raise DomainError(f"need 0 <= n <= N/2, got N={N}, n={n}")
    return sum(count_for_configuration(sc) for sc in string_configurations(N, n))
