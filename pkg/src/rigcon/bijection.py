"""The rank map and delta for types A and D, the bijections Phi and Phi-tilde
from rigged configurations to paths, and the A_1^(1) insertion map Psi."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .crystal import DomainError, Path, TensorSpec, enumerate_paths, is_classically_highest
from .rigged import Configuration, RiggedConfiguration, complement, enumerate_rc, vacancy


@dataclass(frozen=True)
class DeltaResult:
    rank: int
    rest: RiggedConfiguration
    # color -> selected row length; ``selected_bar`` holds the backward sweep (type D)
    selected: dict = field(default_factory=dict)
    selected_bar: dict = field(default_factory=dict)


class _Rows:
    """Row lookup on a fixed rigged configuration with vacancies of the original."""

    def __init__(self, rc: RiggedConfiguration, pick: str):
        self.rc = rc
        self.pick = pick
        self.rows = [rc.rows(a) for a in range(1, rc.spec.rank + 1)]

    def singular(self, a: int, k: int) -> bool:
        x, r = self.rows[a - 1][k]
        return r == vacancy(self.rc, a, x)

    def find(self, a: int, min_len: int, exclude=()) -> int | None:
        """Index of a singular row of color a with the smallest length >= min_len."""
        best = None
        for k, (x, _) in enumerate(self.rows[a - 1]):
            if x < min_len or k in exclude or not self.singular(a, k):
                continue
            if best is None or x < self.rows[a - 1][best][0]:
                best = k
            elif x == self.rows[a - 1][best][0] and self.pick == "last":
                best = k
        return best

    def length(self, a: int, k: int) -> int:
        return self.rows[a - 1][k][0]


def _shrink(rc: RiggedConfiguration, chosen: list[tuple[int, int]]) -> RiggedConfiguration:
    """Remove one box from every chosen row (simultaneously) and reset their riggings."""
    ts = rc.spec.with_length(rc.spec.length - 1)
    n = ts.rank
    rows = [list(rc.rows(a)) for a in range(1, n + 1)]
    touched = [set() for _ in range(n)]
    for a, k in chosen:
        touched[a - 1].add(k)
    parts = [[x - 1 if k in touched[a] else x for k, (x, _) in enumerate(rows[a])]
             for a in range(n)]
    nu_new = tuple(tuple(x for x in p if x > 0) for p in parts)
    shape = Configuration(ts, tuple(tuple(sorted(p, reverse=True)) for p in nu_new))
    new_parts, new_rigs = [], []
    for a in range(n):
        pa, ra = [], []
        for k, (x, r) in enumerate(rows[a]):
            if k in touched[a]:
                if x - 1 > 0:
                    pa.append(x - 1)
                    ra.append(vacancy(shape, a + 1, x - 1))
            else:
                pa.append(x)
                ra.append(r)
        new_parts.append(tuple(pa))
        new_rigs.append(tuple(ra))
    return RiggedConfiguration(ts, tuple(new_parts), tuple(new_rigs))


def delta_A(rc: RiggedConfiguration, pick: str = "first") -> DeltaResult:
    t = rc.ctype
    if t.family != "A":
        raise DomainError("delta_A needs a type A rigged configuration")
    if rc.spec.length < 1:
        raise DomainError("delta needs L >= 1")
    n = t.rank
    R = _Rows(rc, pick)
    chosen, ell = [], {}
    prev = 0
    b = n + 1
    for a in range(1, n + 1):
        k = R.find(a, prev)
        if k is None:
            b = a
            break
        prev = ell[a] = R.length(a, k)
        chosen.append((a, k))
    return DeltaResult(b, _shrink(rc, chosen), ell)


def delta_D(rc: RiggedConfiguration, pick: str = "first") -> DeltaResult:
    t = rc.ctype
    if t.family != "D":
        raise DomainError("delta_D needs a type D rigged configuration")
    if rc.spec.length < 1:
        raise DomainError("delta needs L >= 1")
    n = t.rank
    R = _Rows(rc, pick)
    chosen, ell, ellbar = [], {}, {}
    forward = {}
    prev = 0
    b = None
    for a in range(1, n - 1):
        k = R.find(a, prev)
        if k is None:
            b = a
            break
        prev = ell[a] = R.length(a, k)
        forward[a] = k
        chosen.append((a, k))
    if b is None:
        ki = R.find(n - 1, prev)
        kj = R.find(n, prev)
        if ki is None and kj is None:
            b = n - 1
        elif kj is None:
            ell[n - 1] = R.length(n - 1, ki)
            chosen.append((n - 1, ki))
            b = n
        elif ki is None:
            ell[n] = R.length(n, kj)
            chosen.append((n, kj))
            b = -n
        else:
            ell[n - 1] = R.length(n - 1, ki)
            ell[n] = R.length(n, kj)
            chosen += [(n - 1, ki), (n, kj)]
            lbar = max(ell[n - 1], ell[n])
            b = -1
            for a in range(n - 2, 0, -1):
                # the row taken in the forward sweep cannot be used twice, so
                # reusing its length needs a second singular row of that length
                k = R.find(a, lbar, exclude=(forward[a],))
                if k is None:
                    b = -(a + 1)
                    break
                lbar = ellbar[a] = R.length(a, k)
                chosen.append((a, k))
    return DeltaResult(b, _shrink(rc, chosen), ell, ellbar)


def delta(rc: RiggedConfiguration, pick: str = "first") -> DeltaResult:
    if rc.ctype.family == "A":
        return delta_A(rc, pick)
    return delta_D(rc, pick)


def phi_steps(rc: RiggedConfiguration, pick: str = "first") -> list[DeltaResult]:
    """All delta iterates of rc, one per tensor factor, leftmost first."""
    steps = []
    cur = rc
    for _ in range(rc.spec.length):
        res = delta(cur, pick)
        if not res.rest.is_valid():
            raise RuntimeError(f"delta produced an invalid rigged configuration: {res.rest}")
        steps.append(res)
        cur = res.rest
    return steps


def phi(rc: RiggedConfiguration, pick: str = "first") -> Path:
    return Path(rc.spec, tuple(s.rank for s in phi_steps(rc, pick)))


def phi_tilde(rc: RiggedConfiguration, pick: str = "first") -> Path:
    return phi(complement(rc), pick)


# --- A_1^(1): Psi -----------------------------------------------------------------

def _su2_vacancy(rows, N, ell):
    return N - 2 * sum(min(ell, x) for x, _ in rows)


@dataclass(frozen=True)
class PsiStep:
    prefix: str
    rows: tuple  # (length, label, vacancy) with vacancies at the current prefix length


def psi_su2_trace(p: Path) -> tuple[RiggedConfiguration, list[PsiStep]]:
    t = p.ctype
    if (t.family, t.rank) != ("A", 1):
        raise DomainError(f"psi_su2 needs an A1 path, got type {t}")
    if not is_classically_highest(p):
        raise DomainError(f"{p} is not classically highest weight")
    w = p.letters
    N = len(w)
    rows: list[list[int]] = []
    steps = [PsiStep("", ())]
    for i in range(1, N + 1):
        if w[N - i] == 2:
            # singularity is judged on the previous configuration (N = i - 1);
            # a length-0 string is always singular
            target, best = None, 0
            for k, (x, r) in enumerate(rows):
                if r == _su2_vacancy(rows, i - 1, x) and x > best:
                    target, best = k, x
            if target is None:
                rows.append([0, 0])
                target = len(rows) - 1
            rows[target][0] += 1
            rows[target][1] = _su2_vacancy(rows, i, rows[target][0])
            rows.sort(key=lambda r: (-r[0], -r[1]))
        prefix = "".join(str(x) for x in w[N - i:])
        steps.append(PsiStep(prefix, tuple((x, r, _su2_vacancy(rows, i, x)) for x, r in rows)))
    rc = RiggedConfiguration(
        p.spec, (tuple(x for x, _ in rows),), (tuple(r for _, r in rows),)
    )
    return complement(rc), steps


def psi_su2(p: Path) -> RiggedConfiguration:
    """Insertion bijection from Yamanouchi words to RC(N, n)."""
    return psi_su2_trace(p)[0]


# --- inverse by tabulation ------------------------------------------------------------

@lru_cache(maxsize=64)
def _inverse_table(ts: TensorSpec, lam: tuple) -> dict:
    table = {}
    for rc in enumerate_rc(ts, lam):
        word = phi_tilde(rc).letters
        if word in table:
            raise RuntimeError(f"phi_tilde is not injective at {word}")
        table[word] = rc
    return table


def rc_from_path(p: Path) -> RiggedConfiguration:
    """The rigged configuration mapped to p by phi_tilde."""
    table = _inverse_table(p.spec, p.weight())
    try:
        return table[p.letters]
    except KeyError:
        raise RuntimeError(f"{p} is not in the image of phi_tilde") from None
