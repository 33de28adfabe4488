"""Acceptance suite: one test per shipped criterion, at the stated ranges.

Each test prints a single PASS line on success; pytest -v adds the
corresponding PASSED/FAILED line per criterion.  Ranges and time budgets
are part of the contract and asserted, not just observed.
"""

import itertools
import random
import time

import abacore as ab
from abacore.partitions import mp_size, multipartitions_of, partitions_of

from test_blocks import BLOCKS_4, UGLOV_4


def best_of(fn, runs=5):
    fn()  # warm caches before timing
    times = []
    for _ in range(runs):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def closed_domain_tuples(l, e, m):
    out = []
    lo = m // l - e - 1
    hi = m // l + e + 1
    for t in itertools.product(range(lo, hi + 1), repeat=l):
        if sum(t) == m and ab.in_closed_domain(t, e):
            out.append(t)
    return out


def test_01_quotient_goldens():
    assert ab.tau_e((6, 3, 2, 1, 1), 0, 3) == (((), (2,), (1,)), (0, -1, 1))
    assert ab.e_core_partition((6, 3, 2, 1, 1), 3) == (3, 1)
    assert ab.tau_e_inverse(((2, 1), (2,), (2, 1, 1)), (0, 1, -1)) == (
        (8, 5, 5, 2, 2, 2, 2, 1, 1, 1),
        0,
    )
    assert best_of(lambda: ab.tau_e((6, 3, 2, 1, 1), 0, 3)) < 1e-3
    assert (
        best_of(lambda: ab.tau_e_inverse(((2, 1), (2,), (2, 1, 1)), (0, 1, -1)))
        < 1e-3
    )
    print("criterion 01 (quotient goldens, < 1 ms): PASS")


def test_02_splitting_and_transpose_goldens():
    assert ab.tau_l((6, 3, 2, 1, 1), 0, 3, 2) == (((3, 1), (2, 1)), (0, 0))
    assert ab.level_rank_transpose(((3, 1), (2, 1)), (0, 0), 3) == (
        ((), (2,), (1,)),
        (0, -1, 1),
    )
    assert best_of(lambda: ab.tau_l((6, 3, 2, 1, 1), 0, 3, 2)) < 1e-3
    assert (
        best_of(lambda: ab.level_rank_transpose(((3, 1), (2, 1)), (0, 0), 3))
        < 1e-3
    )
    print("criterion 02 (splitting and transpose goldens, < 1 ms): PASS")


def test_03_generalized_core_golden():
    g = ab.generalized_core(((3, 1), (2, 1)), (0, 0), 3)
    assert g.core_mp == ((1,), (2,))
    assert g.core_charges == (-1, 1)
    assert g.weight == 3
    print("criterion 03 (generalized core golden): PASS")


def test_04_round_trips():
    t0 = time.perf_counter()
    parts = [p for n in range(15) for p in partitions_of(n)]
    for p in parts:
        for m in range(-3, 4):
            for rows in (len(p), len(p) + 3):
                assert ab.partition_of_symbol(ab.beta_set(p, m, rows), m) == p
            for e in (2, 3, 4):
                q, s = ab.tau_e(p, m, e)
                assert ab.tau_e_inverse(q, s) == (p, m)
                for l in (1, 2, 3):
                    mp, sl = ab.tau_l(p, m, e, l)
                    assert ab.tau_l_inverse(mp, sl, e) == (p, m)
    took = time.perf_counter() - t0
    assert took < 60
    print("criterion 04 (round trips, %d partitions, %.1fs < 60s): PASS" % (len(parts), took))


def test_05_rank_property():
    # both splittings' charge tuples are fixed alongside the level size;
    # within such a group the e-quotient size is constant
    parts = [p for n in range(15) for p in partitions_of(n)]
    for e, l in ((2, 2), (3, 2), (2, 3), (3, 3)):
        groups = {}
        for p in parts:
            for m in range(-3, 4):
                mp, sl = ab.tau_l(p, m, e, l)
                q, se = ab.tau_e(p, m, e)
                key = (sl, se, mp_size(mp))
                val = mp_size(q)
                assert groups.setdefault(key, val) == val, (e, l, p, m)
    print("criterion 05 (rank property): PASS")


def test_06_core_routes_agree():
    checked = 0
    for e in (2, 3, 4):
        for l in (1, 2, 3):
            charge_pool = set()
            for lo in (-1, 0, 1):
                for steps in itertools.product(range(e), repeat=l - 1):
                    s = [lo]
                    for d in steps:
                        s.append(s[-1] + d)
                    if s[-1] - s[0] < e:
                        charge_pool.add(tuple(s))
            for n in range(9):
                for mp in multipartitions_of(n, l):
                    for s in charge_pool:
                        assert ab.is_core(mp, s, e) == ab.is_core_nodewise(mp, s, e)
                        checked += 1
    print("criterion 06 (core test two routes, %d checks): PASS" % checked)


def test_07_uglov_and_blocks_goldens():
    assert ab.uglov_set((0, 1), 4, 4) == UGLOV_4
    got = ab.blocks_of(4, (0, 1), 4)
    assert {
        (b.core_multicharge, b.weight): set(members) for b, members in got.items()
    } == BLOCKS_4
    print("criterion 07 (uglov set and block goldens): PASS")


def test_08_sigma_golden_and_involution():
    assert ab.sigma_ordinary(2, ((3, 2, 1, 1),), (0,), 3) == ((2, 2, 2, 1, 1),)
    rng = random.Random(20260823)

    def random_partition():
        rows = rng.randrange(6)
        out = []
        cur = 7
        for _ in range(rows):
            cur = rng.randint(1, cur)
            out.append(cur)
        return tuple(out)

    for _ in range(10000):
        l = rng.randint(1, 3)
        e = rng.choice((2, 3, 4))
        i = rng.randrange(e)
        mp = tuple(random_partition() for _ in range(l))
        charges = tuple(rng.randint(-3, 3) for _ in range(l))
        out = ab.sigma_ordinary(i, mp, charges, e)
        assert ab.sigma_ordinary(i, out, charges, e) == mp
    print("criterion 08 (sigma golden, involution on 10000 inputs): PASS")


def test_09_duality():
    t0 = time.perf_counter()
    tested = 0
    for e in (2, 3, 4):
        for m in (0, 1):
            for d in range(e):
                if (m - d) % 2:
                    continue
                charges = ((m - d) // 2, (m + d) // 2)
                assert ab.in_strict_domain(charges, e)
                for n in range(7):
                    for mp in ab.uglov_set(charges, e, n):
                        for i in range(e):
                            star = ab.sigma_star(i, mp, charges, e)
                            trans = ab.duality_transport(i, mp, charges, e)
                            assert star == trans, (e, charges, i, mp)
                            tested += 1
    took = time.perf_counter() - t0
    assert took < 300
    print("criterion 09 (duality, %d cases, %.1fs < 300s): PASS" % (tested, took))


def test_10_scopes_routes_agree():
    seen = set()
    checked = 0
    for e in (2, 3):
        for l in (1, 2):
            if l == 1:
                charge_list = [(m,) for m in (-1, 0, 1)]
            else:
                charge_list = [
                    (s0, s1)
                    for s0 in range(-2, 3)
                    for s1 in range(-2, 3)
                    if ab.in_closed_domain((s0, s1), e) and -1 <= s0 + s1 <= 1
                ]
            for charges in charge_list:
                for n in range(9):
                    for mp in multipartitions_of(n, l):
                        b = ab.block_id(mp, charges, e)
                        if b.weight > 3 or b in seen:
                            continue
                        seen.add(b)
                        for i in range(e):
                            assert ab.is_scopes(b, i, l) == ab.is_scopes_exhaustive(b, i, l)
                            checked += 1
    print("criterion 10 (scopes two routes, %d checks on %d blocks): PASS" % (checked, len(seen)))


def test_11_multicharge_classification():
    w = ab.realize_multicharge((-3, -1, 0, 0, 4), (-2, -2, 0, 1, 3), 7)
    g = ab.generalized_core(w, (-3, -1, 0, 0, 4), 7)
    assert g.core_charges == (-2, -2, 0, 1, 3)

    for l in (1, 2, 3):
        for e in (2, 3):
            for m in range(-2, 3):
                domain = set(closed_domain_tuples(l, e, m))
                for start in domain:
                    need = 0
                    for target in domain:
                        wit = ab.realize_multicharge(start, target, e)
                        got = ab.generalized_core(wit, start, e).core_charges
                        assert got == target, (start, target, wit)
                        need = max(need, mp_size(wit))
                    assert ab.reachable_multicharges(start, e, need) == domain, start
    print("criterion 11 (realize and reachable saturate the domain): PASS")


def test_12_pairing_and_psi():
    universe = list(range(8))
    subsets = []
    for r in range(9):
        subsets.extend(itertools.combinations(universe, r))
    for X in subsets:
        for Y in subsets:
            Xp, Yp = ab.pair_symbols(X, Y)
            assert len(Xp) == len(Y) and len(Yp) == len(X)
            assert sorted(Xp + Yp) == sorted(X + Y)
            assert ab.pair_symbols(Xp, Yp) == (X, Y)

    rng = random.Random(7)
    for _ in range(400):
        l = rng.randint(1, 3)
        e = rng.choice((2, 3, 4))
        charges = tuple(rng.randint(-3, 3) for _ in range(l))
        mp = tuple(
            tuple(sorted((rng.randint(1, 3) for _ in range(rng.randint(0, 3))), reverse=True))
            for _ in range(l)
        )
        word = [rng.choice(["t", "T"] + ["s%d" % c for c in range(l)])
                for _ in range(rng.randint(0, 5))]
        out_charges = ab.psi(mp, charges, word, e)[1]
        assert out_charges == ab.act_charge_l(charges, word, e)

    for e in (2, 3):
        for l in (2, 3):
            for charges in itertools.product(range(-2, 3), repeat=l):
                if sum(charges) not in (0, 1):
                    continue
                for c in range(l):
                    word = ["s%d" % c]
                    target = ab.act_charge_l(charges, word, e)
                    for n in range(7):
                        image = {ab.psi(mp, charges, word, e)[0]
                                 for mp in ab.uglov_set(charges, e, n)}
                        assert image == ab.uglov_set(target, e, n), (e, charges, word, n)
    print("criterion 12 (pairing involution, psi equivariance and transport): PASS")


def test_13_modular_block_compatibility():
    checked = 0
    for e in (2, 3):
        for s0 in range(-2, 3):
            for s1 in range(s0, s0 + e):
                charges = (s0, s1)
                for n in range(6):
                    blocks = {}
                    for mp in ab.uglov_set(charges, e, n):
                        blocks.setdefault(ab.block_id(mp, charges, e), set()).add(mp)
                    for i in range(e):
                        word = "s%d" % i
                        for b, members in blocks.items():
                            target = ab.block_action(word, b, 2)
                            image = {ab.sigma_star(i, mp, charges, e) for mp in members}
                            sizes = {mp_size(mp) for mp in image}
                            assert len(sizes) == 1, (b, i)
                            n2 = sizes.pop()
                            expect = {
                                mp
                                for mp in ab.uglov_set(charges, e, n2)
                                if ab.block_id(mp, charges, e) == target
                            }
                            assert image == expect, (e, charges, n, i, b)
                            checked += 1
    print("criterion 13 (modular blocks move with the action, %d blocks): PASS" % checked)
