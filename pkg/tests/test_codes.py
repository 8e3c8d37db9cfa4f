import random

import pytest

from orbitcodes import (
    GF,
    CyclicGroup,
    Mat,
    Poly,
    SingularMatrixError,
    act,
    block_bound,
    block_bound_refined,
    block_structure,
    blockdiag_coprime_check,
    companion,
    component_codes,
    conjugate_code,
    distance_distribution,
    fullrank_coprime_check,
    intersection_dim,
    is_invertible,
    min_distance,
    orbit_code,
    orbit_period,
    stabilizer_order,
    subspace,
    subspace_distance,
)

F2 = GF(2)
F3 = GF(3)

GEN3 = companion(Poly(F2, [1, 1, 0, 1]))
SINGER_DIVISORS = ((Poly(F2, [1, 1, 0, 1]), 1), (Poly(F2, [1, 1, 1]), 1))


def mat2(rows):
    return Mat.from_rows(F2, rows)


def line(*coords):
    return subspace(mat2([list(coords)]))


def rand_invertible(rng, field, n):
    while True:
        m = Mat(field, n, n, [rng.randrange(field.q) for _ in range(n * n)])
        if is_invertible(m):
            return m


def test_subspace_canonicalizes():
    u = subspace(mat2([[1, 1, 0], [1, 0, 0]]))
    assert u.basis.to_lists() == [[1, 0, 0], [0, 1, 0]]
    assert (u.n, u.k) == (3, 2)


def test_subspace_already_canonical_is_unchanged():
    m = mat2([[1, 0, 0, 1], [0, 1, 0, 0]])
    assert subspace(m).basis == m


def test_subspace_collapses_duplicate_rows():
    u = subspace(mat2([[1, 0], [1, 0]]))
    assert u.k == 1


def test_subspace_rejects_zero():
    with pytest.raises(ValueError):
        subspace(Mat.zeros(F2, 2, 3))


def test_act_identity():
    u = line(1, 0, 0)
    assert act(u, Mat.identity(F2, 3)) == u


def test_act_moves_line():
    assert act(line(1, 0, 0), GEN3) == line(0, 1, 0)


def test_act_composes():
    rng = random.Random(1)
    u = subspace(mat2([[1, 1, 0], [0, 1, 1]]))
    a = rand_invertible(rng, F2, 3)
    b = rand_invertible(rng, F2, 3)
    assert act(act(u, a), b) == act(u, a * b)


def test_act_rejects_singular():
    with pytest.raises(SingularMatrixError):
        act(line(1, 0), Mat.zeros(F2, 2, 2))


def test_act_rejects_wrong_ambient():
    with pytest.raises(ValueError):
        act(line(1, 0, 0), Mat.identity(F2, 2))
    with pytest.raises(ValueError):
        act(line(1, 0, 0), Mat.identity(F3, 3))


def test_distance_to_self_is_zero():
    u = line(1, 0)
    assert subspace_distance(u, u) == 0


def test_distance_complementary_lines():
    assert subspace_distance(line(1, 0), line(0, 1)) == 2


def test_distance_nested():
    plane = subspace(mat2([[1, 0, 0], [0, 1, 0]]))
    assert subspace_distance(line(1, 0, 0), plane) == 1
    assert intersection_dim(line(1, 0, 0), plane) == 1


def test_distance_rejects_mixed_ambient():
    with pytest.raises(ValueError):
        subspace_distance(line(1, 0), line(1, 0, 0))
    with pytest.raises(ValueError):
        subspace_distance(line(1, 0), subspace(Mat.from_rows(F3, [[1, 0]])))


def test_orbit_of_line_under_order_seven_group():
    code = orbit_code(line(1, 0, 0), CyclicGroup(GEN3))
    assert len(code) == 7
    assert code.stab_order == 1
    # the orbit sweeps out every line of the ambient space
    assert len({v.basis for v in code.codebook}) == 7


def test_orbit_under_trivial_group():
    code = orbit_code(line(1, 0, 0), CyclicGroup(Mat.identity(F2, 3)))
    assert len(code) == 1
    assert code.stab_order == 1


def test_whole_space_is_fixed():
    u = subspace(Mat.identity(F2, 2))
    g = CyclicGroup(companion(Poly(F2, [1, 1, 1])))
    code = orbit_code(u, g)
    assert len(code) == 1
    assert code.stab_order == g.order == 3


def test_stabilizer_order_examples():
    assert stabilizer_order(line(1, 0, 0), CyclicGroup(Mat.identity(F2, 3))) == 1
    assert stabilizer_order(line(1, 0, 0), CyclicGroup(GEN3)) == 1
    g = CyclicGroup(companion(Poly(F2, [1, 1, 1])))
    assert stabilizer_order(subspace(Mat.identity(F2, 2)), g) == 3


def test_min_distance_singer_line_code():
    code = orbit_code(line(1, 0, 0), CyclicGroup(GEN3))
    assert min_distance(code) == 2


def test_min_distance_equals_pairwise_minimum():
    rng = random.Random(14)
    for _ in range(12):
        field = rng.choice((F2, F3))
        n = rng.randint(2, 5)
        g = CyclicGroup(rand_invertible(rng, field, n))
        k = rng.randint(1, n - 1)
        u = subspace(
            next(
                m
                for m in iter(lambda: Mat(field, k, n, [rng.randrange(field.q) for _ in range(k * n)]), None)
                if any(m.entries)
            )
        )
        code = orbit_code(u, g)
        if len(code) < 2:
            continue
        pairwise = min(
            subspace_distance(a, b)
            for i, a in enumerate(code.codebook)
            for b in code.codebook[i + 1 :]
        )
        assert min_distance(code) == pairwise


def test_min_distance_two_element_code():
    g = CyclicGroup(companion(Poly(F2, [1, 0, 1])))  # order 2
    u = line(1, 0)
    code = orbit_code(u, g)
    assert len(code) == 2
    assert min_distance(code) == subspace_distance(u, act(u, g.generator))


def test_min_distance_rejects_singleton():
    code = orbit_code(line(1, 0, 0), CyclicGroup(Mat.identity(F2, 3)))
    with pytest.raises(ValueError):
        min_distance(code)


def test_distribution_singer_line_code():
    code = orbit_code(line(1, 0, 0), CyclicGroup(GEN3))
    assert distance_distribution(code) == (1, 6)


def test_distribution_singleton():
    # the tuple always has k+1 entries, so a singleton line code gives (1, 0)
    code = orbit_code(line(1, 0, 0), CyclicGroup(Mat.identity(F2, 3)))
    assert distance_distribution(code) == (1, 0)


def test_distribution_starts_at_one():
    rng = random.Random(15)
    for _ in range(10):
        g = CyclicGroup(rand_invertible(rng, F2, 4))
        u = subspace(
            Mat(F2, 2, 4, [1, 0, rng.randrange(2), rng.randrange(2), 0, 1, rng.randrange(2), rng.randrange(2)])
        )
        dist = distance_distribution(orbit_code(u, g))
        assert dist[0] == 1
        assert sum(dist) == len(orbit_code(u, g))


def test_conjugate_code_by_identity():
    code = orbit_code(line(1, 0, 0), CyclicGroup(GEN3))
    same = conjugate_code(code, Mat.identity(F2, 3))
    assert set(same.codebook) == set(code.codebook)


def test_conjugate_code_preserves_parameters():
    rng = random.Random(16)
    code = orbit_code(line(1, 0, 0), CyclicGroup(GEN3))
    for _ in range(5):
        l = rand_invertible(rng, F2, 3)
        other = conjugate_code(code, l)  # internal assertions check parameters
        assert len(other) == 7
        assert distance_distribution(other) == (1, 6)


def test_block_structure_single_block_keeps_basis():
    u = subspace(mat2([[1, 0, 0], [0, 1, 0]]))
    bs = block_structure(u, [(Poly(F2, [1, 1, 0, 1]), 1)])
    assert len(bs.blocks) == 1
    assert bs.blocks[0].matrix == u.basis


def test_block_structure_block_diagonal_subspace():
    u = subspace(mat2([[1, 0, 0, 0, 0], [0, 0, 0, 1, 0]]))
    bs = block_structure(u, SINGER_DIVISORS)
    assert [blk.k for blk in bs.blocks] == [1, 1]
    assert bs.blocks[0].matrix.to_lists() == [[1, 0, 0]]
    assert bs.blocks[1].matrix.to_lists() == [[1, 0]]


def test_block_structure_reduces_before_splitting():
    u = subspace(mat2([[1, 0, 0, 1, 1], [0, 0, 0, 1, 0]]))
    bs = block_structure(u, SINGER_DIVISORS)
    assert [blk.k for blk in bs.blocks] == [1, 1]
    # pivot rows restricted to their block columns
    assert bs.blocks[0].matrix.to_lists() == [[1, 0, 0]]
    assert bs.blocks[1].matrix.to_lists() == [[1, 0]]


def test_block_structure_rejects_degree_mismatch():
    with pytest.raises(ValueError):
        block_structure(line(1, 0, 0), SINGER_DIVISORS)


def test_component_codes_sizes():
    u = subspace(mat2([[1, 0, 0, 0, 0], [0, 0, 0, 1, 0]]))
    comps = component_codes(block_structure(u, SINGER_DIVISORS))
    assert [len(c) for c in comps] == [7, 3]


def test_component_codes_full_block_is_singleton():
    u = subspace(mat2([[1, 0], [0, 1]]))
    comps = component_codes(block_structure(u, [(Poly(F2, [1, 1, 1]), 1)]))
    assert len(comps) == 1 and len(comps[0]) == 1


def test_component_codes_report_empty_blocks():
    u = subspace(mat2([[1, 0, 0, 0, 0]]))
    comps = component_codes(block_structure(u, SINGER_DIVISORS))
    assert len(comps[0]) == 7
    assert comps[1] is None


def test_block_bound_single_block_matches_distance():
    u = line(1, 0, 0)
    bs = block_structure(u, [(Poly(F2, [1, 1, 0, 1]), 1)])
    bound, lcm_card = block_bound(bs)
    code = orbit_code(u, CyclicGroup(bs.generator))
    assert bound == min_distance(code) == 2
    assert lcm_card == len(code) == 7
    assert block_bound_refined(bs) == bound


def test_block_bound_three_plus_two():
    u = subspace(mat2([[1, 0, 0, 0, 0], [0, 0, 0, 1, 0]]))
    bs = block_structure(u, SINGER_DIVISORS)
    assert block_bound(bs) == (4, 21)
    assert block_bound_refined(bs) == 2
    code = orbit_code(u, CyclicGroup(bs.generator))
    assert len(code) == 21
    assert min_distance(code) == 2


def test_block_bound_fully_stabilized():
    u = subspace(mat2([[1, 0, 0, 1, 0], [0, 1, 0, 0, 0], [0, 0, 1, 0, 0], [0, 0, 0, 0, 1]]))
    divisors = ((Poly(F2, [1, 1, 0, 1]), 1), (Poly(F2, [1, 1]), 2))
    bs = block_structure(u, divisors)
    if all(blk.k == blk.degree for blk in bs.blocks):
        bound, lcm_card = block_bound(bs)
        assert bound == 0 and lcm_card == 1
        assert block_bound_refined(bs) == 0


def test_block_bound_all_blocks_full():
    u = subspace(Mat.identity(F2, 5))
    bs = block_structure(u, SINGER_DIVISORS)
    assert block_bound(bs) == (0, 1)
    assert block_bound_refined(bs) == 0


def test_refined_bound_valid_when_period_exceeds_component_lcm():
    # spread sub-block with an adversarial tail: the whole-space orbit is
    # longer than the component lcm, so the refined bound falls back to 0
    divisors = ((Poly(F2, [1, 1, 0, 0, 1]), 1), (Poly(F2, [1, 1]), 2))
    u = subspace(mat2([[1, 0, 0, 0, 1, 1], [0, 1, 1, 0, 0, 0]]))
    bs = block_structure(u, divisors)
    refined = block_bound_refined(bs)
    code = orbit_code(u, CyclicGroup(bs.generator))
    assert orbit_period(u, bs.generator) == len(code) == 15
    assert refined == 0
    assert min_distance(code) == 2 >= refined


def test_orbit_period_matches_code_size():
    u = subspace(mat2([[1, 0, 0, 0, 0], [0, 0, 0, 1, 0]]))
    bs = block_structure(u, SINGER_DIVISORS)
    assert orbit_period(u, bs.generator) == 21


def test_fullrank_check_single_block_trivially_equal():
    report = fullrank_coprime_check(line(1, 0, 0), [(Poly(F2, [1, 1, 0, 1]), 1)])
    assert report.ok
    assert report.values["code_distance"] == report.values["component_min"] == 2


def test_fullrank_check_three_plus_two():
    report = fullrank_coprime_check(line(1, 0, 0, 1, 0), SINGER_DIVISORS)
    assert report.ok
    assert report.values["component_sizes"] == [7, 3]
    assert report.values["code_distance"] == 2


def test_fullrank_check_three_plus_four():
    divisors = ((Poly(F2, [1, 1, 0, 1]), 1), (Poly(F2, [1, 1, 0, 0, 1]), 1))
    report = fullrank_coprime_check(line(1, 0, 0, 1, 0, 0, 0), divisors)
    assert report.ok
    assert sorted(report.values["component_sizes"]) == [7, 15]


def test_fullrank_check_skips_unmet_hypotheses():
    # k = 2 exceeds the width-1 second block
    divisors = ((Poly(F2, [1, 1, 0, 1]), 1), (Poly(F2, [1, 1]), 1))
    u = subspace(mat2([[1, 0, 0, 0], [0, 1, 0, 1]]))
    assert fullrank_coprime_check(u, divisors).skipped

    # rank-deficient slice
    u2 = subspace(mat2([[1, 0, 0, 0, 0], [0, 1, 0, 0, 0]]))
    assert fullrank_coprime_check(u2, SINGER_DIVISORS).skipped


def test_fullrank_check_reports_known_counterexample():
    divisors = ((Poly(F2, [1, 0, 1, 1]), 1), (Poly(F2, [1, 1, 1, 1, 1]), 1))
    u = subspace(mat2([[1, 0, 0, 1, 0, 0, 0], [0, 1, 0, 1, 0, 1, 1]]))
    report = fullrank_coprime_check(u, divisors)
    assert report.status == "mismatch"
    assert report.values["code_distance"] == 4
    assert report.values["component_min"] == 2
    assert report.instance["divisors"] == [
        {"p": "1,0,1,1", "e": 1},
        {"p": "1,1,1,1,1", "e": 1},
    ]


def test_blockdiag_check_single_block():
    report = blockdiag_coprime_check([mat2([[1, 0, 0]])], [(Poly(F2, [1, 1, 0, 1]), 1)])
    assert report.ok
    assert report.values["brute_distance"] == report.values["bound_refined"] == 2


def test_blockdiag_check_three_plus_two():
    report = blockdiag_coprime_check(
        [mat2([[1, 0, 0]]), mat2([[1, 0]])], SINGER_DIVISORS
    )
    assert report.ok
    assert report.values["brute_distance"] == 2
    assert report.values["bound_refined"] == 2
    assert report.values["bound_literal"] == 4
    assert report.values["literal_matches"] is False


def test_blockdiag_check_skips_equal_cardinalities():
    divisors = ((Poly(F2, [1, 1, 0, 1]), 1), (Poly(F2, [1, 0, 1, 1]), 1))
    report = blockdiag_coprime_check([mat2([[1, 0, 0]]), mat2([[1, 0, 0]])], divisors)
    assert report.skipped
    assert "coprime" in report.reason
