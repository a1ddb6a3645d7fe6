import itertools

import pytest

from rigcon.crystal import CartanType, DomainError, Path, all_words, dominant_weights, enumerate_paths, is_classically_highest, spec
from rigcon.energy import energy, energy_su2, local_energy, one_dim_sum
from rigcon.qseries import LaurentPoly, eval_at_one, invert_q

D4 = CartanType("D", 4)


def word(s):
    return Path.of("A", 1, [int(c) for c in s])


def test_local_energy_examples():
    for t in (CartanType("A", 3), D4):
        assert local_energy(1, 1, t) == 0
    assert local_energy(-1, 1, D4) == -2
    assert local_energy(4, -4, D4) == -1
    assert local_energy(-4, 4, D4) == -1
    assert local_energy(4, 4, D4) == 0
    assert local_energy(3, -3, D4) == 0
    assert local_energy(-3, 3, D4) == -1
    assert local_energy(2, 1, CartanType("A", 2)) == -1


@pytest.mark.parametrize("t", [CartanType("A", n) for n in (1, 2, 3)] + [D4, CartanType("D", 5)], ids=str)
def test_local_energy_range(t):
    allowed = {-1, 0} if t.family == "A" else {-2, -1, 0}
    for b, b2 in itertools.product(t.alphabet(), repeat=2):
        assert local_energy(b, b2, t) in allowed


def test_energy_examples():
    assert energy(Path.of("A", 3, [2])) == 0
    assert energy(Path(spec("A", 3, 0))) == 0
    assert energy(Path.of("A", 4, [3, 4, 2, 3, 1, 2, 1])) == -12
    assert energy(Path.of("D", 4, [-4, 3, -1, 2, 1, 1])) == -8


def test_energy_su2_examples():
    got = {w: energy_su2(word(w)) for w in ["22111", "21211", "12211", "21121", "12121"]}
    assert got == {"22111": 2, "21211": 4, "12211": 3, "21121": 5, "12121": 6}
    assert energy_su2(word("11111")) == 0
    with pytest.raises(DomainError):
        energy_su2(Path.of("A", 2, [1]))


@pytest.mark.parametrize("L", range(9))
def test_su2_energy_conventions_agree(L):
    for p in all_words(spec("A", 1, L)):
        assert energy_su2(p) == -energy(p)


def test_one_dim_sum_examples():
    assert one_dim_sum(spec("A", 2, 0), (0, 0, 0)) == LaurentPoly({0: 1})
    assert one_dim_sum(spec("A", 1, 5), (3, 2)) == LaurentPoly({-k: 1 for k in range(2, 7)})
    assert invert_q(one_dim_sum(spec("A", 1, 5), (3, 2))) == LaurentPoly({k: 1 for k in range(2, 7)})


def test_one_dim_sum_a2_brute_force():
    ts = spec("A", 2, 3)
    terms = {}
    for p in all_words(ts):
        if is_classically_highest(p) and p.weight() == (1, 1, 1):
            terms[energy(p)] = terms.get(energy(p), 0) + 1
    brute = LaurentPoly(terms)
    assert brute == LaurentPoly({-3: 1})  # only 3 (x) 2 (x) 1
    assert one_dim_sum(ts, (1, 1, 1)) == brute


@pytest.mark.parametrize("family,rank,L", [("A", 2, 6), ("D", 4, 4)])
def test_one_dim_sum_counts_paths(family, rank, L):
    ts = spec(family, rank, L)
    for lam in dominant_weights(ts.ctype, L):
        x = one_dim_sum(ts, lam)
        assert eval_at_one(x) == len(enumerate_paths(ts, lam))
        assert all(e <= 0 for e, _ in x.items())
