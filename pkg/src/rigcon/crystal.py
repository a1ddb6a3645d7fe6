"""The crystal B^{1,1} of types A_n^(1) and D_n^(1) and its tensor powers.

Letters are plain ints. In type D the barred letter k-bar is encoded as
``-k``. Paths store their factors leftmost first: ``b_L, ..., b_1``.

Tensor product convention: for ``b1 (x) b2``,

    e_i(b1 (x) b2) = e_i b1 (x) b2   if eps_i(b1) > phi_i(b2)
                   = b1 (x) e_i b2   otherwise

which is the reverse of Kashiwara's ordering. The matching rule for f_i
follows from ``e_i b' = b  <=>  b' = f_i b``: applying e_i to
``f_i b1 (x) b2`` must land back on ``b1``, which (using
eps(f b1) = eps(b1) + 1) happens exactly when ``eps_i(b1) >= phi_i(b2)``.
So f_i acts on the left factor iff ``eps_i(b1) >= phi_i(b2)``.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
import re
from typing import Iterable, Sequence

Letter = int
Weight = tuple


class DomainError(ValueError):
    """Input outside the domain of an operation (bad letter, weight, rank...)."""


@dataclass(frozen=True, order=True)
class CartanType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in ("A", "D"):
            raise DomainError(f"unsupported Cartan family {self.family!r}")
        if self.family == "A" and self.rank < 1:
            raise DomainError("type A needs rank >= 1")
        if self.family == "D" and self.rank < 4:
            raise DomainError("type D needs rank >= 4")

    @property
    def n(self) -> int:
        return self.rank

    @property
    def weight_length(self) -> int:
        return self.rank + 1 if self.family == "A" else self.rank

    def alphabet(self) -> tuple[int, ...]:
        """Letters of B^{1,1} in canonical order (n before n-bar in type D)."""
        n = self.rank
        if self.family == "A":
            return tuple(range(1, n + 2))
        return tuple(range(1, n + 1)) + tuple(-k for k in range(n, 0, -1))

    def contains(self, b: int) -> bool:
        n = self.rank
        if self.family == "A":
            return 1 <= b <= n + 1
        return 1 <= abs(b) <= n

    def check_letter(self, b: int) -> None:
        if not isinstance(b, int) or not self.contains(b):
            raise DomainError(f"letter {b!r} is not in B^{{1,1}} of type {self}")

    def classical_indices(self) -> range:
        return range(1, self.rank + 1)

    def simple_root(self, i: int) -> tuple[int, ...]:
        """Classical simple root in epsilon coordinates (i = 0 gives the classical projection)."""
        n, size = self.rank, self.weight_length
        v = [0] * size
        if i == 0:
            if self.family == "A":
                v[n] = 1
                v[0] = -1
            else:
                v[0] = v[1] = -1
        elif self.family == "D" and i == n:
            v[n - 2] = v[n - 1] = 1
        elif 1 <= i <= n:
            v[i - 1] = 1
            v[i] = -1
        else:
            raise DomainError(f"index {i} out of range for {self}")
        return tuple(v)

    def pairing(self, i: int, wt: Sequence[int]) -> int:
        """<h_i, wt> for a classical index i."""
        n = self.rank
        if self.family == "D" and i == n:
            return wt[n - 2] + wt[n - 1]
        return wt[i - 1] - wt[i]

    def __str__(self):
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class TensorSpec:
    """The tensor power (B^{1,1})^{(x) L} of a given Cartan type."""

    ctype: CartanType
    length: int

    def __post_init__(self):
        if self.length < 0:
            raise DomainError("tensor length must be nonnegative")

    @property
    def rank(self) -> int:
        return self.ctype.rank

    def with_length(self, length: int) -> "TensorSpec":
        return TensorSpec(self.ctype, length)

    def multiplicity(self, a: int, k: int) -> int:
        """L_k^{(a)}: number of B^{a,k} factors."""
        return self.length if (a, k) == (1, 1) else 0


def spec(family: str, rank: int, length: int) -> TensorSpec:
    return TensorSpec(CartanType(family, rank), length)


# --- letters -----------------------------------------------------------------

def letter_weight(b: Letter, t: CartanType) -> tuple[int, ...]:
    t.check_letter(b)
    v = [0] * t.weight_length
    v[abs(b) - 1] = 1 if b > 0 else -1
    return tuple(v)


def f_letter(b: Letter, i: int, t: CartanType) -> Letter | None:
    t.check_letter(b)
    n = t.rank
    if t.family == "A":
        if i == 0:
            return 1 if b == n + 1 else None
        if 1 <= i <= n:
            return i + 1 if b == i else None
        raise DomainError(f"index {i} out of range for {t}")
    if i == 0:
        return {-2: 1, -1: 2}.get(b)
    if 1 <= i <= n - 1:
        return {i: i + 1, -(i + 1): -i}.get(b)
    if i == n:
        return {n - 1: -n, n: -(n - 1)}.get(b)
    raise DomainError(f"index {i} out of range for {t}")


def e_letter(b: Letter, i: int, t: CartanType) -> Letter | None:
    t.check_letter(b)
    for b0 in t.alphabet():
        if f_letter(b0, i, t) == b:
            return b0
    return None


def eps_phi_letter(b: Letter, i: int, t: CartanType) -> tuple[int, int]:
    eps = 0
    x = e_letter(b, i, t)
    while x is not None:
        eps += 1
        x = e_letter(x, i, t)
    phi = 0
    x = f_letter(b, i, t)
    while x is not None:
        phi += 1
        x = f_letter(x, i, t)
    return eps, phi


_EPS_PHI_CACHE: dict = {}


def _ep(b: int, i: int, t: CartanType) -> tuple[int, int]:
    key = (b, i, t)
    r = _EPS_PHI_CACHE.get(key)
    if r is None:
        r = _EPS_PHI_CACHE[key] = eps_phi_letter(b, i, t)
    return r


def letter_key(b: Letter, t: CartanType) -> int:
    """Position of b in the canonical alphabet order."""
    return t.alphabet().index(b)


def letter_level(b: Letter, t: CartanType) -> int:
    """Rank in the partial order; n and n-bar share a level in type D."""
    if t.family == "A" or b > 0:
        return b
    n = t.rank
    return n if b == -n else 2 * n - abs(b)


def letter_less(b: Letter, b2: Letter, t: CartanType) -> bool:
    """Strict order b < b2; in type D neither of n, n-bar is less than the other."""
    return letter_level(b, t) < letter_level(b2, t)


def letter_str(b: Letter) -> str:
    return f"{-b}b" if b < 0 else str(b)


def parse_letter(s: str) -> Letter:
    s = s.strip()
    if s.endswith("b"):
        return -int(s[:-1])
    return int(s)


# --- paths ------------------------------------------------------------------

@dataclass(frozen=True)
class Path:
    """A tensor word ``b_L (x) ... (x) b_1`` stored leftmost factor first."""

    spec: TensorSpec
    letters: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(b) for b in self.letters))
        if len(self.letters) != self.spec.length:
            raise DomainError(
                f"path has {len(self.letters)} letters but spec length is {self.spec.length}"
            )
        for b in self.letters:
            self.spec.ctype.check_letter(b)

    @classmethod
    def of(cls, family: str, rank: int, letters: Iterable[int]) -> "Path":
        letters = tuple(letters)
        return cls(spec(family, rank, len(letters)), letters)

    @property
    def ctype(self) -> CartanType:
        return self.spec.ctype

    def __len__(self):
        return len(self.letters)

    def weight(self) -> tuple[int, ...]:
        return path_weight(self.letters, self.ctype)

    def rest(self) -> "Path":
        """Drop the leftmost factor."""
        return Path(self.spec.with_length(self.spec.length - 1), self.letters[1:])

    def __str__(self):
        return " ".join(letter_str(b) for b in self.letters)

    def to_json(self) -> dict:
        t = self.ctype
        return {"type": t.family, "rank": t.rank, "letters": list(self.letters)}

    @classmethod
    def from_json(cls, obj: dict) -> "Path":
        return cls.of(obj["type"], int(obj["rank"]), obj["letters"])


def path_weight(letters: Sequence[int], t: CartanType) -> tuple[int, ...]:
    v = [0] * t.weight_length
    for b in letters:
        v[abs(b) - 1] += 1 if b > 0 else -1
    return tuple(v)


def eps_phi_word(letters: Sequence[int], i: int, t: CartanType) -> tuple[int, int]:
    """(eps_i, phi_i) of a tensor word, folded from the right."""
    eps = phi = 0
    for b in reversed(letters):
        e1, p1 = _ep(b, i, t)
        eps, phi = eps + max(0, e1 - phi), p1 + max(0, phi - e1)
    return eps, phi


def _suffix_phi(letters: Sequence[int], i: int, t: CartanType) -> list[int]:
    # out[k] = phi_i of letters[k:], out[L] = 0
    L = len(letters)
    out = [0] * (L + 1)
    eps = phi = 0
    for k in range(L - 1, -1, -1):
        e1, p1 = _ep(letters[k], i, t)
        eps, phi = eps + max(0, e1 - phi), p1 + max(0, phi - e1)
        out[k] = phi
    return out


def _act(p: Path, i: int, strict: bool, op) -> Path | None:
    letters = p.letters
    if not letters:
        return None
    t = p.ctype
    sphi = _suffix_phi(letters, i, t)
    L = len(letters)
    for k in range(L):
        if k < L - 1:
            e1 = _ep(letters[k], i, t)[0]
            ok = e1 > sphi[k + 1] if strict else e1 >= sphi[k + 1]
            if not ok:
                continue
        new = op(letters[k], i, t)
        if new is None:
            return None
        return Path(p.spec, letters[:k] + (new,) + letters[k + 1:])
    return None


def e_path(p: Path, i: int) -> Path | None:
    return _act(p, i, True, e_letter)


def f_path(p: Path, i: int) -> Path | None:
    return _act(p, i, False, f_letter)


def is_classically_highest(p: Path) -> bool:
    return all(e_path(p, i) is None for i in p.ctype.classical_indices())


# --- weights ----------------------------------------------------------------

def is_dominant(wt: Sequence[int], t: CartanType) -> bool:
    if len(wt) != t.weight_length:
        return False
    if t.family == "A":
        return all(wt[k] >= wt[k + 1] for k in range(len(wt) - 1)) and wt[-1] >= 0
    n = t.rank
    return all(wt[k] >= wt[k + 1] for k in range(n - 2)) and wt[n - 2] >= abs(wt[n - 1])


def check_weight(wt: Sequence[int], t: CartanType) -> tuple[int, ...]:
    if len(wt) != t.weight_length:
        raise DomainError(
            f"weight {tuple(wt)} has {len(wt)} coordinates; type {t} needs {t.weight_length}"
        )
    return tuple(int(x) for x in wt)


def fundamental_weight(a: int, t: CartanType) -> tuple[Fraction, ...]:
    """Lambda_a in epsilon coordinates.

    Type A uses gl_{n+1} conventions, so Lambda_{n+1} = (1, ..., 1) is
    also accepted.
    """
    n, size = t.rank, t.weight_length
    if t.family == "A":
        if not 1 <= a <= n + 1:
            raise DomainError(f"no fundamental weight Lambda_{a} in {t}")
        return tuple(Fraction(1 if k < a else 0) for k in range(size))
    if not 1 <= a <= n:
        raise DomainError(f"no fundamental weight Lambda_{a} in {t}")
    if a <= n - 2:
        return tuple(Fraction(1 if k < a else 0) for k in range(size))
    half = Fraction(1, 2)
    last = -half if a == n - 1 else half
    return tuple([half] * (n - 1) + [last])


_FUND_TERM = re.compile(r"^\s*(\d*)\s*\*?\s*[LΛ]_?(\d+)\s*$")


def parse_weight(text: str, t: CartanType) -> tuple[int, ...]:
    """Parse a weight given in epsilon coordinates ("1,1,1,-1") or as a
    sum of fundamental weights ("2L3", "L3+L4", "0" for the zero weight)."""
    text = text.strip()
    if "L" in text or "Λ" in text:
        total = [Fraction(0)] * t.weight_length
        for term in text.split("+"):
            m = _FUND_TERM.match(term)
            if not m:
                raise DomainError(f"cannot parse weight term {term!r}")
            coeff = int(m.group(1)) if m.group(1) else 1
            fw = fundamental_weight(int(m.group(2)), t)
            total = [x + coeff * y for x, y in zip(total, fw)]
        if any(x.denominator != 1 for x in total):
            raise DomainError(f"weight {text!r} is not integral in epsilon coordinates")
        return tuple(int(x) for x in total)
    if text in ("0", ""):
        return (0,) * t.weight_length
    try:
        coords = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise DomainError(f"cannot parse weight {text!r}") from None
    return check_weight(coords, t)


def dominant_weights(t: CartanType, length: int) -> list[tuple[int, ...]]:
    """Dominant weights that can occur in (B^{1,1})^{(x) length}, sorted descending."""
    size = t.weight_length
    out = []
    if t.family == "A":
        for parts in _bounded_partitions(length, size):
            out.append(tuple(parts) + (0,) * (size - len(parts)))
    else:
        for total in range(length % 2, length + 1, 2):
            for parts in _bounded_partitions(total, size):
                wt = tuple(parts) + (0,) * (size - len(parts))
                out.append(wt)
                if wt[-1] > 0:
                    out.append(wt[:-1] + (-wt[-1],))
    return sorted(set(out), reverse=True)


def _bounded_partitions(n: int, max_len: int):
    def rec(remaining, bound, slots):
        if remaining == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(bound, remaining), 0, -1):
            for rest in rec(remaining - first, first, slots - 1):
                yield (first,) + rest

    yield from rec(n, n, max_len)


# --- enumeration -------------------------------------------------------------

def _can_prepend(b: int, wt: Sequence[int], t: CartanType) -> bool:
    # R highest weight => e_i(b (x) R) = 0 iff eps_i(b) <= phi_i(R) = <h_i, wt R>
    for i in t.classical_indices():
        if _ep(b, i, t)[0] > t.pairing(i, wt):
            return False
    return True


def _reachable(wt: Sequence[int], target: Sequence[int], remaining: int, family: str) -> bool:
    if family == "A":
        diff = 0
        for w, x in zip(wt, target):
            if w > x:
                return False
            diff += x - w
        return diff == remaining
    dist = sum(abs(x - w) for w, x in zip(wt, target))
    return dist <= remaining and (remaining - dist) % 2 == 0


def _grow(suffix: tuple, wt: tuple, target: tuple, remaining: int, t: CartanType, out: list):
    if remaining == 0:
        if wt == target:
            out.append(suffix)
        return
    for b in t.alphabet():
        if not _can_prepend(b, wt, t):
            continue
        k = abs(b) - 1
        new = list(wt)
        new[k] += 1 if b > 0 else -1
        new = tuple(new)
        if _reachable(new, target, remaining - 1, t.family):
            _grow((b,) + suffix, new, target, remaining - 1, t, out)


def _grow_task(args):
    suffix, wt, target, remaining, t = args
    out: list = []
    _grow(suffix, wt, target, remaining, t, out)
    return out


def _seeds(target, t: CartanType, length: int, depth: int):
    seeds = [((), (0,) * t.weight_length)]
    for _ in range(min(depth, length)):
        nxt = []
        for suffix, wt in seeds:
            for b in t.alphabet():
                if not _can_prepend(b, wt, t):
                    continue
                new = list(wt)
                new[abs(b) - 1] += 1 if b > 0 else -1
                new = tuple(new)
                if _reachable(new, target, length - len(suffix) - 1, t.family):
                    nxt.append(((b,) + suffix, new))
        seeds = nxt
    return seeds


def enumerate_paths(ts: TensorSpec, lam: Sequence[int], jobs: int = 1) -> list[Path]:
    """Classically highest weight paths of weight ``lam``, in canonical order.

    Canonical order is lexicographic on the word read leftmost factor first,
    letters compared by their position in ``CartanType.alphabet()``.
    Paths are grown right to left: a word is highest weight only if its
    right suffixes are, and prepending ``b`` to a highest weight ``R`` keeps
    it highest iff ``eps_i(b) <= <h_i, wt R>`` for every classical i.
    """
    t = ts.ctype
    target = check_weight(lam, t)
    L = ts.length
    words: list = []
    if jobs > 1 and L > 3:
        seeds = _seeds(target, t, L, 3)
        tasks = [(s, w, target, L - len(s), t) for s, w in seeds]
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            for chunk in ex.map(_grow_task, tasks):
                words.extend(chunk)
    else:
        _grow((), (0,) * t.weight_length, target, L, t, words)
    order = {b: k for k, b in enumerate(t.alphabet())}
    words.sort(key=lambda w: [order[b] for b in w])
    return [Path(ts, w) for w in words]


def all_words(ts: TensorSpec):
    """Every element of (B^{1,1})^{(x) L}; brute force helper."""
    for w in itertools.product(ts.ctype.alphabet(), repeat=ts.length):
        yield Path(ts, w)
