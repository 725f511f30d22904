"""Release acceptance suite.

Every criterion is exact (integer equality, no tolerances) and prints one
pass/fail line; run with `pytest tests/test_acceptance.py -v -s` to see the
lines for passing criteria too.
"""

import itertools
import time
from contextlib import contextmanager

import pytest

from magic3 import (
    ELEMENTS,
    GEN1,
    GEN2,
    GEN3,
    ONES,
    SEED_F1,
    SEED_F2,
    Decomposition,
    DihedralElement,
    DuplicateEntriesError,
    Family,
    Square,
    add,
    apply,
    construct,
    count_closed,
    count_families,
    decompose,
    expand,
    is_canonical,
    iter_brute_grids,
    iter_brute_squares,
    iter_decompositions,
    iter_family_grids,
    iter_family_squares,
    magic_gf,
    reduce,
    scale,
    validate,
)


@contextmanager
def criterion(number: int, name: str):
    try:
        yield
    except BaseException:
        print(f"criterion {number} ({name}): FAIL")
        raise
    print(f"criterion {number} ({name}): PASS")


def test_criterion_1_count_sequence_reproduction():
    with criterion(1, "count sequence t^4..t^12, four ways"):
        start = time.perf_counter()
        expected = [8, 24, 32, 56, 80, 104, 136, 176, 208]
        coeffs = expand(magic_gf(), 13)
        assert coeffs[4:13] == expected
        for s, count in zip(range(4, 13), expected):
            assert count_closed(s) == count
            assert count_families(s) == count
            assert sum(1 for _ in iter_brute_grids(s)) == count
        assert time.perf_counter() - start < 1.0


def test_criterion_2_four_way_agreement_extended():
    with criterion(2, "closed = series = families <= 200, = brute <= 50"):
        start = time.perf_counter()
        coeffs = expand(magic_gf(), 201)
        for s in range(201):
            closed = count_closed(s)
            assert closed == coeffs[s], f"series disagrees at s={s}"
            assert closed == count_families(s), f"families disagree at s={s}"
        for s in range(51):
            brute = sum(1 for _ in iter_brute_grids(s))
            assert brute == count_closed(s), f"brute force disagrees at s={s}"
        assert time.perf_counter() - start < 30.0


def test_criterion_3_round_trip():
    with criterion(3, "decompose . construct = id on 21296 tuples and back"):
        cases = 0
        for family, i, j, k, g in itertools.product(
            Family, range(11), range(11), range(11), ELEMENTS
        ):
            d = Decomposition(family, i, j, k, g)
            assert decompose(construct(d)) == d
            cases += 1
        assert cases == 21296
        for s in range(31):
            for m in iter_brute_squares(s):
                assert construct(decompose(m)) == m


def test_criterion_4_disjointness():
    with criterion(4, "no square produced twice across s <= 30"):
        seen = set()
        total = 0
        for s in range(31):
            for grid in iter_family_grids(s):
                assert grid not in seen
                seen.add(grid)
                total += 1
        assert total == sum(count_closed(s) for s in range(31))


def test_criterion_5_reduced_form_invariants():
    with criterion(5, "reduced squares pinned; excluded diagonal degenerate"):
        for s in range(31):
            for m in iter_brute_squares(s):
                reduced, _, _ = reduce(m)
                assert reduced.square.square.a2 == 0
                assert reduced.square.square.c2 == 2 * reduced.s
        for beta in range(21):
            grid = Square(
                (
                    5 + 5 * beta, 0, 4 + 4 * beta,
                    2 + 2 * beta, 3 + 3 * beta, 4 + 4 * beta,
                    2 + 2 * beta, 6 + 6 * beta, 1 + beta,
                )
            )
            with pytest.raises(DuplicateEntriesError):
                validate(grid)


def test_criterion_6_basis_relations():
    with criterion(6, "generator and seed identities hold entry-wise"):
        assert add(GEN1, GEN2) == GEN3
        assert add(GEN3, GEN1) == SEED_F1
        assert add(GEN3, GEN2) == SEED_F2
        assert add(GEN1, apply(DihedralElement.FV, GEN1)) == GEN2
        assert SEED_F1.entries == (7, 0, 5, 2, 4, 6, 3, 8, 1)
        assert SEED_F2.entries == (8, 0, 7, 4, 5, 6, 3, 10, 2)


def test_criterion_7_uniqueness_at_magic_sum_twelve():
    with criterion(7, "s = 4 is exactly the orbit of the smallest square"):
        orbit = {apply(g, SEED_F1).entries for g in ELEMENTS}
        assert len(orbit) == 8
        assert {m.entries for m in iter_brute_squares(4)} == orbit


def test_criterion_8_traditional_positive_squares():
    with criterion(8, "positive canonical squares = positive generator combos, s <= 20"):
        canonical_positive = set()
        for s in range(21):
            for m in iter_family_squares(s):
                if min(m.entries) > 0 and is_canonical(m.square):
                    canonical_positive.add(m.entries)
        combos = set()
        for gen, k_step in ((GEN1, 1), (GEN2, 2)):
            for i in range(1, 21):
                for j in range(1, 21):
                    for k in range(1, 21):
                        if i + 3 * j + k_step * k > 20:
                            break
                        combo = add(add(scale(i, ONES), scale(j, GEN3)), scale(k, gen))
                        combos.add(combo.entries)
        assert canonical_positive == combos
