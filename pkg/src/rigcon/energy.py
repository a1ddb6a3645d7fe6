"""Local energy on B^{1,1} (x) B^{1,1}, path energy and one-dimensional sums.

Two sign conventions live here. ``energy`` is the crystal energy, built from
a local energy H <= 0, so it is never positive. ``energy_su2`` is the
nonnegative descent statistic for A_1^(1) words; the two satisfy
``energy_su2(p) == -energy(p)``.
"""

from __future__ import annotations

from .crystal import CartanType, DomainError, Path, TensorSpec, enumerate_paths, letter_less
from .qseries import LaurentPoly


def local_energy(b: int, b2: int, t: CartanType) -> int:
    """H(b (x) b2), normalized so that H(1 (x) 1) = 0."""
    t.check_letter(b)
    t.check_letter(b2)
    if t.family == "A":
        return -1 if b > b2 else 0
    n = t.rank
    if (b, b2) in ((n, -n), (-n, n)):
        return -1
    if (b, b2) == (-1, 1):
        return -2
    if letter_less(b2, b, t):
        return -1
    return 0


def energy(p: Path) -> int:
    """sum_{j=1}^{L-1} (L - j) H(b_{j+1} (x) b_j), positions counted from the right."""
    letters = p.letters
    L = len(letters)
    t = p.ctype
    total = 0
    # letters[L - j] is b_j
    for j in range(1, L):
        total += (L - j) * local_energy(letters[L - j - 1], letters[L - j], t)
    return total


def energy_su2(p: Path) -> int:
    """Descent energy of an A_1^(1) word: sum (N - j) [p_{j+1} > p_j]."""
    t = p.ctype
    if (t.family, t.rank) != ("A", 1):
        raise DomainError(f"energy_su2 needs an A1 path, got type {t}")
    w = p.letters
    N = len(w)
    return sum(N - j for j in range(1, N) if w[N - j - 1] > w[N - j])


def one_dim_sum(ts: TensorSpec, lam, jobs: int = 1) -> LaurentPoly:
    """X(B, lam; q) = sum of q^{energy(b)} over highest weight paths of weight lam."""
    terms: dict[int, int] = {}
    for p in enumerate_paths(ts, lam, jobs=jobs):
        e = energy(p)
        terms[e] = terms.get(e, 0) + 1
    return LaurentPoly(terms)
