"""Configurations, vacancy numbers, rigged configurations and the fermionic formula.

Colors are numbered 1..n. A rigged configuration stores, for each color,
its rows as a partition together with one integer rigging per row. Rows
are kept in canonical order: longer rows first, and within rows of equal
length the riggings weakly decrease. Vacancy numbers are never stored;
they are recomputed from the partitions on demand.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Sequence

from .crystal import CartanType, DomainError, TensorSpec, check_weight, spec as make_spec
from .partitions import Partition, complement_in_box, partitions_in_box, partitions_of
from .qseries import LaurentPoly, q_binomial


def cartan_pairing(a: int, b: int, t: CartanType) -> int:
    """(alpha_a | alpha_b) for classical simple roots."""
    n = t.rank
    if not (1 <= a <= n and 1 <= b <= n):
        raise DomainError(f"color out of range for {t}: ({a}, {b})")
    if a == b:
        return 2
    if t.family == "D" and max(a, b) == n:
        return -1 if min(a, b) == n - 2 else 0
    return -1 if abs(a - b) == 1 else 0


def neighbours(a: int, t: CartanType) -> list[int]:
    return [b for b in range(1, t.rank + 1) if b != a and cartan_pairing(a, b, t) == -1]


@dataclass(frozen=True)
class Configuration:
    spec: TensorSpec
    nu: tuple

    def __post_init__(self):
        nu = tuple(p if isinstance(p, Partition) else Partition(p) for p in self.nu)
        if len(nu) != self.spec.rank:
            raise DomainError(f"need {self.spec.rank} partitions, got {len(nu)}")
        object.__setattr__(self, "nu", nu)

    @property
    def ctype(self) -> CartanType:
        return self.spec.ctype

    def partition(self, a: int) -> Partition:
        return self.nu[a - 1]

    def sizes(self) -> tuple[int, ...]:
        return tuple(p.size() for p in self.nu)

    def __str__(self):
        return " | ".join(str(list(p)) for p in self.nu)


def _canonical_rows(parts: Sequence[int], rigs: Sequence[int]):
    rows = sorted(zip(parts, rigs), key=lambda r: (-r[0], -r[1]))
    return Partition(x for x, _ in rows), tuple(r for _, r in rows)


@dataclass(frozen=True)
class RiggedConfiguration:
    """Configuration with one rigging per row, kept in canonical row order."""

    spec: TensorSpec
    nu: tuple
    riggings: tuple

    def __post_init__(self):
        if len(self.nu) != self.spec.rank or len(self.riggings) != self.spec.rank:
            raise DomainError(f"need {self.spec.rank} colors")
        nu, rig = [], []
        for parts, rigs in zip(self.nu, self.riggings):
            parts, rigs = tuple(int(x) for x in parts), tuple(int(r) for r in rigs)
            if len(parts) != len(rigs):
                raise DomainError("every row needs exactly one rigging")
            if any(x < 1 for x in parts):
                raise DomainError(f"row lengths must be positive: {parts}")
            p, r = _canonical_rows(parts, rigs)
            nu.append(p)
            rig.append(r)
        object.__setattr__(self, "nu", tuple(nu))
        object.__setattr__(self, "riggings", tuple(rig))

    @classmethod
    def empty(cls, ts: TensorSpec) -> "RiggedConfiguration":
        return cls(ts, ((),) * ts.rank, ((),) * ts.rank)

    @property
    def ctype(self) -> CartanType:
        return self.spec.ctype

    @property
    def config(self) -> Configuration:
        return Configuration(self.spec, self.nu)

    def partition(self, a: int) -> Partition:
        return self.nu[a - 1]

    def rows(self, a: int) -> list[tuple[int, int]]:
        return list(zip(self.nu[a - 1], self.riggings[a - 1]))

    def blocks(self, a: int) -> dict[int, list[int]]:
        """Riggings of color a grouped by row length: the partitions J^{(a,i)}."""
        out: dict[int, list[int]] = {}
        for x, r in self.rows(a):
            out.setdefault(x, []).append(r)
        return out

    def is_empty(self) -> bool:
        return not any(self.nu)

    def weight(self) -> tuple[int, ...]:
        return weight_of_configuration(self.config)

    def validate(self) -> None:
        """Raise DomainError unless every rigging lies in [0, vacancy]."""
        for a in range(1, self.spec.rank + 1):
            for x, r in self.rows(a):
                p = vacancy(self, a, x)
                if not 0 <= r <= p:
                    raise DomainError(
                        f"rigging {r} on a length-{x} row of color {a} outside [0, {p}]"
                    )

    def is_valid(self) -> bool:
        try:
            self.validate()
        except DomainError:
            return False
        return True

    def to_json(self) -> dict:
        t = self.ctype
        return {
            "type": t.family,
            "rank": t.rank,
            "length": self.spec.length,
            "nu": [list(p) for p in self.nu],
            "riggings": [list(r) for r in self.riggings],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "RiggedConfiguration":
        ts = make_spec(obj["type"], int(obj["rank"]), int(obj["length"]))
        return cls(ts, tuple(tuple(p) for p in obj["nu"]), tuple(tuple(r) for r in obj["riggings"]))

    def format(self, with_vacancy: bool = True) -> str:
        out = []
        for a in range(1, self.spec.rank + 1):
            if not self.nu[a - 1]:
                out.append("-")
                continue
            cells = []
            for x, r in self.rows(a):
                cells.append(f"{x}[{r}]{vacancy(self, a, x)}" if with_vacancy else f"{x}[{r}]")
            out.append(" ".join(cells))
        return " | ".join(out)

    def __str__(self):
        return self.format()


# --- vacancy numbers -----------------------------------------------------------

def _Q(p: Partition, i: int) -> int:
    return sum(min(x, i) for x in p)


def vacancy(c, a: int, i: int) -> int:
    """p_i^{(a)} from the explicit column-count formulas.

    ``c`` may be a Configuration or a RiggedConfiguration.
    """
    t = c.spec.ctype
    n = t.rank
    if not 1 <= a <= n:
        raise DomainError(f"color {a} out of range for {t}")
    nu = c.nu
    L = c.spec.length

    def Q(b):
        return _Q(nu[b - 1], i) if 1 <= b <= n else 0

    base = L if a == 1 else 0
    if t.family == "A" or a < n - 2:
        return Q(a - 1) - 2 * Q(a) + Q(a + 1) + base
    if a == n - 2:
        return Q(n - 3) - 2 * Q(n - 2) + Q(n - 1) + Q(n) + base
    return Q(n - 2) - 2 * Q(a)


def vacancy_general(c, a: int, i: int) -> int:
    """p_i^{(a)} from the defining sum over tensor factors and Cartan pairings."""
    t = c.spec.ctype
    n = t.rank
    # only L_1^{(1)} = L is nonzero for (B^{1,1})^{(x) L}
    total = c.spec.multiplicity(a, 1) * min(i, 1)
    for b in range(1, n + 1):
        pair = cartan_pairing(a, b, t)
        if pair:
            total -= pair * _Q(c.nu[b - 1], i)
    return total


# --- weights and admissibility --------------------------------------------------

def weight_of_configuration(c) -> tuple[int, ...]:
    """The epsilon-coordinate weight lambda fixed by the partition sizes."""
    t = c.spec.ctype
    n, L = t.rank, c.spec.length
    s = [p.size() for p in c.nu]
    if t.family == "A":
        prev = [L] + s
        return tuple(prev[k] - prev[k + 1] for k in range(n)) + (s[n - 1],)
    prev = [L] + s[: n - 2]
    lam = [prev[k] - prev[k + 1] for k in range(n - 2)]
    lam.append(s[n - 3] - s[n - 2] - s[n - 1])
    lam.append(s[n - 2] - s[n - 1])
    return tuple(lam)


def forced_sizes(ts: TensorSpec, lam: Sequence[int]) -> tuple[int, ...] | None:
    """|nu^{(a)}| dictated by lam, or None if they are not nonnegative integers."""
    t = ts.ctype
    lam = check_weight(lam, t)
    n, L = t.rank, ts.length
    partial = list(itertools.accumulate(lam))
    if t.family == "A":
        if partial[-1] != L:
            return None
        sizes = [L - partial[a - 1] for a in range(1, n + 1)]
    else:
        sizes = [L - partial[a - 1] for a in range(1, n - 1)]
        twice_spin_m = L - partial[n - 2] + lam[n - 1]
        twice_spin_p = L - partial[n - 1]
        if twice_spin_m % 2 or twice_spin_p % 2:
            return None
        sizes += [twice_spin_m // 2, twice_spin_p // 2]
    if any(x < 0 for x in sizes):
        return None
    return tuple(sizes)


def _vacancies_nonnegative(c) -> bool:
    for a in range(1, c.spec.rank + 1):
        for i in range(1, c.nu[a - 1].largest() + 1):
            if vacancy(c, a, i) < 0:
                return False
    return True


def is_admissible(c, lam) -> bool:
    """Weight matches lam and p_i^{(a)} >= 0 for 1 <= i <= largest part of nu^{(a)}."""
    if tuple(lam) != weight_of_configuration(c):
        return False
    return _vacancies_nonnegative(c)


# --- cocharge ------------------------------------------------------------------

def cocharge_config(c) -> int:
    """1/2 sum_{a,b} (alpha_a|alpha_b) sum_{j,k} min(j,k) m_j^{(a)} m_k^{(b)}."""
    t = c.spec.ctype
    n = t.rank
    mults = [p.multiplicities() for p in c.nu]
    twice = 0
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            pair = cartan_pairing(a, b, t)
            if not pair:
                continue
            for j, mj in mults[a - 1].items():
                for k, mk in mults[b - 1].items():
                    twice += pair * min(j, k) * mj * mk
    assert twice % 2 == 0
    return twice // 2


def cocharge_columns(c) -> int:
    """Column-height form: sum of squared column heights minus adjacent overlaps."""
    t = c.spec.ctype
    n = t.rank
    cols = [p.conjugate() for p in c.nu]
    total = sum(h * h for col in cols for h in col)
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            if cartan_pairing(a, b, t) == -1:
                total -= sum(x * y for x, y in zip(cols[a - 1], cols[b - 1]))
    return total


def cocharge(rc: RiggedConfiguration) -> int:
    return cocharge_config(rc) + sum(sum(r) for r in rc.riggings)


# --- enumeration -----------------------------------------------------------------

def enumerate_configurations(ts: TensorSpec, lam) -> list[Configuration]:
    """Admissible (B, lam)-configurations, lexicographic in (nu^{(1)}, ..., nu^{(n)})."""
    sizes = forced_sizes(ts, lam)
    if sizes is None:
        return []
    choices = [list(partitions_of(s)) for s in sizes]
    out = []
    for nu in itertools.product(*choices):
        c = Configuration(ts, nu)
        if _vacancies_nonnegative(c):
            out.append(c)
    return out


def _riggings_for(c: Configuration) -> Iterator[RiggedConfiguration]:
    ts = c.spec
    n = ts.rank
    blocks = []  # (color, length, multiplicity, vacancy)
    for a in range(1, n + 1):
        for i, m in sorted(c.nu[a - 1].multiplicities().items(), reverse=True):
            blocks.append((a, i, m, vacancy(c, a, i)))
    options = [partitions_in_box(p, m) for _, _, m, p in blocks]
    for choice in itertools.product(*options):
        parts = [[] for _ in range(n)]
        rigs = [[] for _ in range(n)]
        for (a, i, m, _), J in zip(blocks, choice):
            parts[a - 1].extend([i] * m)
            rigs[a - 1].extend(list(J) + [0] * (m - len(J)))
        yield RiggedConfiguration(ts, tuple(map(tuple, parts)), tuple(map(tuple, rigs)))


def _riggings_task(c):
    return list(_riggings_for(c))


def enumerate_rc(ts: TensorSpec, lam, jobs: int = 1) -> list[RiggedConfiguration]:
    """RC(B, lam): configurations in canonical order, each with all its riggings."""
    configs = enumerate_configurations(ts, lam)
    if jobs > 1 and len(configs) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return [rc for chunk in ex.map(_riggings_task, configs) for rc in chunk]
    return [rc for c in configs for rc in _riggings_for(c)]


def fermionic_M(ts: TensorSpec, lam) -> LaurentPoly:
    """M(B, lam; q) = sum_nu q^{cc(nu)} prod_{a,i} [p_i^{(a)} + m_i^{(a)} choose m_i^{(a)}]_q."""
    total = LaurentPoly()
    for c in enumerate_configurations(ts, lam):
        term = LaurentPoly.monomial(cocharge_config(c))
        for a in range(1, ts.rank + 1):
            for i, m in c.nu[a - 1].multiplicities().items():
                term = term * q_binomial(vacancy(c, a, i), m)
        total = total + term
    return total


def fermionic_M_from_rc(ts: TensorSpec, lam) -> LaurentPoly:
    terms: dict[int, int] = {}
    for rc in enumerate_rc(ts, lam):
        k = cocharge(rc)
        terms[k] = terms.get(k, 0) + 1
    return LaurentPoly(terms)


def complement(rc: RiggedConfiguration) -> RiggedConfiguration:
    """Complement every J^{(a,i)} inside its m_i^{(a)} x p_i^{(a)} rectangle."""
    n = rc.spec.rank
    parts, rigs = [], []
    for a in range(1, n + 1):
        pa, ra = [], []
        for i, J in rc.blocks(a).items():
            p = vacancy(rc, a, i)
            comp = complement_in_box(Partition.from_unsorted(J), p, len(J))
            pa.extend([i] * len(J))
            ra.extend(list(comp) + [0] * (len(J) - len(comp)))
        parts.append(tuple(pa))
        rigs.append(tuple(ra))
    return RiggedConfiguration(rc.spec, tuple(parts), tuple(rigs))
