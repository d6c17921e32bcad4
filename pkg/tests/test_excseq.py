import pytest
from hypothesis import given, settings

from nakaseq.algebra import Indec, hereditary_a, linear_rad2, parse_algebra_spec, selfinjective
from nakaseq.excseq import (
    NodeBudgetExceeded,
    enumerate_sequences,
    is_orthogonal,
    is_standard_exceptional,
    is_standard_pair,
    is_weak_exceptional,
    is_weak_pair,
    pair_table,
    validate_sequence,
)
from nakaseq.homology import ext_dim, is_periodic
from nakaseq.modcat import gamma_inv, is_projective, sigma
from strategies import algebra_with_modules, algebras

C332 = parse_algebra_spec("cyclic:3,3,2")


def bracket(*parts):
    """``bracket((3,), (2, 3))`` -> [S_3, (2,2)]: composition factors listed top to socle."""
    return [Indec(p[0], len(p)) for p in parts]


def test_weak_exceptional_examples():
    assert is_weak_exceptional(selfinjective(3, 2), Indec(3, 1))
    assert is_weak_exceptional(C332, Indec(1, 1))
    assert not is_standard_exceptional(C332, Indec(1, 1))


@given(algebras())
def test_short_projectives_are_weak_exceptional(A):
    for i in range(1, A.n + 1):
        P = A.projective(i)
        assert is_weak_exceptional(A, P) == (P.length <= A.n)


def test_weak_pair_examples():
    assert is_weak_pair(C332, Indec(2, 1), Indec(1, 2))
    n = 4
    A = selfinjective(n, n)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                assert not is_weak_pair(A, A.projective(i), A.projective(j))


@given(algebra_with_modules(count=1))
def test_module_never_pairs_with_itself(data):
    A, M = data
    assert not is_weak_pair(A, M, M)
    assert not is_standard_pair(A, M, M)


def test_validate_bone_for_three_vertices():
    A = selfinjective(3, 2)
    assert validate_sequence(A, "weak", bracket((3,), (2, 3), (1, 2), (1,))).valid


def test_validate_reports_first_violation():
    A = selfinjective(4, 2)
    res = validate_sequence(A, "weak", bracket((4,), (3, 4), (2, 3), (2,), (1,)))
    assert not res.valid
    assert (res.first_violation.i, res.first_violation.j) == (3, 4)
    assert "Ext^1" in res.first_violation.reason


def test_validate_singleton_and_nonexceptional():
    A = selfinjective(2, 3)
    assert validate_sequence(A, "weak", [Indec(1, 1)]).valid
    bad = validate_sequence(A, "weak", [Indec(1, 1), Indec(1, 3)])
    # (0, 1) precedes the singleton check (1, 1) lexicographically
    assert (bad.first_violation.i, bad.first_violation.j) == (0, 1)
    assert validate_sequence(A, "weak", [Indec(1, 3)]).first_violation.j == 0
    with pytest.raises(ValueError):
        validate_sequence(A, "sideways", [Indec(1, 1)])


@pytest.mark.parametrize(
    "seq, valid",
    [
        (bracket((4,), (3, 4), (2, 3), (2,), (1, 2)), True),
        (bracket((4,), (3, 4), (2, 3), (1, 2), (1,)), True),
        (bracket((3, 4), (3,), (2, 3), (1, 2), (1,)), True),
        (bracket((4,), (3, 4), (2, 3), (2,), (1,)), False),
        (bracket((4,), (3, 4), (2, 3), (1,), (2,)), True),
    ],
)
def test_four_vertex_collections(seq, valid):
    assert validate_sequence(selfinjective(4, 2), "weak", seq).valid == valid


def test_six_vertex_collections_are_full_witnesses():
    A = selfinjective(6, 2)
    listed = [
        bracket((6,), (5, 6), (4, 5), (4,), (3, 4), (2, 3), (2,), (1, 2)),
        bracket((6,), (5, 6), (4, 5), (4,), (3, 4), (2, 3), (1, 2), (1,)),
        bracket((6,), (5, 6), (4, 5), (3, 4), (3,), (2, 3), (1, 2), (1,)),
        bracket((6,), (5, 6), (4, 5), (3,), (4,), (2, 3), (1, 2), (1,)),
        bracket((5, 6), (5,), (4, 5), (3, 4), (3,), (2, 3), (1, 2), (1,)),
    ]
    full = {s.modules for s in enumerate_sequences(A, "weak", materialize=True).sequences}
    for seq in listed:
        assert tuple(seq) in full


@pytest.mark.parametrize("n", range(2, 7))
def test_socle_n_column_is_a_weak_sequence(n):
    A = selfinjective(n, n)
    assert validate_sequence(A, "weak", [gamma_inv(A, (0, b)) for b in range(n)]).valid


def test_standard_exceptional_over_332():
    excluded = {Indec(1, 1), Indec(2, 2)}
    for M in C332.indecomposables():
        assert is_standard_exceptional(C332, M) == (M not in excluded)


@pytest.mark.parametrize("n, k", [(2, 2), (3, 2), (4, 3), (3, 3), (5, 4)])
def test_selfinjective_has_no_standard_nonprojective(n, k):
    A = selfinjective(n, k)
    for M in A.indecomposables():
        if not is_projective(A, M):
            assert not is_standard_exceptional(A, M)


@pytest.mark.parametrize("spec", ["cyclic:3,3,2", "cyclic:3,3,3", "selfinjective:n=4,k=4", "selfinjective:n=5,k=3"])
def test_standard_matches_periodicity_criterion(spec):
    A = parse_algebra_spec(spec)
    for M in A.indecomposables():
        assert is_standard_exceptional(A, M) == (not is_periodic(A, M) and M.length <= A.n)


@pytest.mark.parametrize("spec, M", [("cyclic:4,3,3,2", Indec(2, 1)), ("cyclic:2,2,3", Indec(1, 1))])
def test_periodicity_criterion_fails_with_finite_projective_dimension(spec, M):
    A = parse_algebra_spec(spec)
    assert M.length <= A.n and not is_periodic(A, M)
    assert not is_standard_exceptional(A, M)
    assert any(ext_dim(A, M, M, r) for r in range(1, 6))


@given(algebra_with_modules())
def test_standard_implies_weak(data):
    A, M, N = data
    if is_standard_exceptional(A, M):
        assert is_weak_exceptional(A, M)
    if is_standard_pair(A, M, N):
        assert is_weak_pair(A, M, N)


def test_orthogonality():
    assert not is_orthogonal(selfinjective(3, 2), bracket((3,), (2, 3), (1, 2), (1,)))
    assert is_orthogonal(linear_rad2(3), [Indec(1, 1), Indec(2, 1), Indec(3, 1)])
    assert is_orthogonal(C332, [Indec(1, 2)])


@pytest.mark.parametrize(
    "A, mode, size, count",
    [
        (selfinjective(3, 3), "weak", 3, 27),
        (selfinjective(4, 3), "weak", 6, 4),
        (selfinjective(5, 2), "weak", 7, 5),
        (selfinjective(4, 2), "weak", 5, 24),
        (hereditary_a(3), "standard", 3, 16),
        (linear_rad2(3), "standard", 3, 10),
        (selfinjective(2, 2), "weak", 2, 4),
    ],
)
def test_enumerate_examples(A, mode, size, count):
    res = enumerate_sequences(A, mode)
    assert (res.max_size, res.count) == (size, count)


def test_enumerate_two_vertex_witnesses():
    A = selfinjective(2, 2)
    res = enumerate_sequences(A, "weak", materialize=True)
    P1, P2, S1, S2 = A.projective(1), A.projective(2), A.simple(1), A.simple(2)
    assert {s.modules for s in res.sequences} == {(P1, S1), (P2, S2), (S2, P1), (S1, P2)}


ENUM_CASES = [
    selfinjective(3, 2), selfinjective(4, 2), selfinjective(4, 4), selfinjective(5, 3),
    C332, hereditary_a(4), linear_rad2(4), parse_algebra_spec("linear:3,3,2,1"),
    parse_algebra_spec("cyclic:4,3,3,2"),
]


@pytest.mark.parametrize("A", ENUM_CASES, ids=str)
@pytest.mark.parametrize("mode", ["weak", "standard"])
def test_enumeration_soundness_and_maximality(A, mode):
    res = enumerate_sequences(A, mode, materialize=True)
    assert len(res.sequences) == res.count
    assert res.sequences == sorted(res.sequences, key=lambda s: s.modules)
    for s in res.sequences:
        assert len(s) == res.max_size == s.size
        assert validate_sequence(A, mode, s.modules).valid
    assert enumerate_sequences(A, mode, fixed_size=res.max_size + 1).count == 0
    assert enumerate_sequences(A, mode, fixed_size=res.max_size).count == res.count


@pytest.mark.parametrize("A", ENUM_CASES[:6], ids=str)
def test_prefix_closure(A):
    res = enumerate_sequences(A, "weak", materialize=True)
    shorter = {s.modules for s in enumerate_sequences(A, "weak", fixed_size=res.max_size - 1, materialize=True).sequences}
    assert all(s.modules[:-1] in shorter for s in res.sequences)
    counts = [enumerate_sequences(A, "weak", fixed_size=r).count for r in range(res.max_size + 1)]
    assert counts[0] == 1 and all(c > 0 for c in counts)


def test_fixed_size_counts_against_brute_force():
    from itertools import permutations

    A = selfinjective(3, 2)
    mods = A.indecomposables()
    for r in range(0, 5):
        brute = sum(validate_sequence(A, "weak", p).valid for p in permutations(mods, r))
        assert enumerate_sequences(A, "weak", fixed_size=r).count == brute


@pytest.mark.parametrize("n, k", [(4, 2), (6, 2), (4, 4), (5, 4)])
def test_symmetry_reduction_gives_same_totals(n, k):
    A = selfinjective(n, k)
    plain = enumerate_sequences(A, "weak", materialize=True)
    fast = enumerate_sequences(A, "weak", materialize=True, use_symmetry=True)
    assert (fast.max_size, fast.count) == (plain.max_size, plain.count)
    assert fast.sequences == plain.sequences


def test_symmetry_needs_selfinjective():
    with pytest.raises(ValueError):
        enumerate_sequences(C332, "weak", use_symmetry=True)


@pytest.mark.parametrize("n, k", [(6, 2), (4, 4), (5, 3)])
def test_start_counts_constant_on_sigma_orbits(n, k):
    A = selfinjective(n, k)
    res = enumerate_sequences(A, "weak", materialize=True)
    starts = {}
    for s in res.sequences:
        starts[s.modules[0]] = starts.get(s.modules[0], 0) + 1
    for M, c in starts.items():
        assert starts.get(sigma(A, M), 0) == c


@pytest.mark.parametrize("n", range(2, 6))
def test_one_projective_in_every_full_sequence(n):
    A = selfinjective(n, n)
    for s in enumerate_sequences(A, "weak", materialize=True).sequences:
        assert sum(is_projective(A, M) for M in s) == 1


def test_parallel_matches_serial():
    A = selfinjective(6, 2)
    serial = enumerate_sequences(A, "weak", materialize=True)
    par = enumerate_sequences(A, "weak", materialize=True, workers=3)
    assert (par.max_size, par.count, par.sequences) == (serial.max_size, serial.count, serial.sequences)


def test_witness_limit():
    res = enumerate_sequences(selfinjective(4, 4), "weak", materialize=True, max_witnesses=5)
    assert res.count == 256 and len(res.sequences) == 5


def test_node_budget():
    with pytest.raises(NodeBudgetExceeded):
        enumerate_sequences(selfinjective(5, 5), "weak", node_budget=10)
    assert enumerate_sequences(selfinjective(3, 3), "weak", node_budget=10_000).count == 27


def test_size_zero():
    res = enumerate_sequences(selfinjective(3, 2), "weak", fixed_size=0, materialize=True)
    assert res.count == 1 and res.sequences[0].modules == ()


@settings(max_examples=25, deadline=None)
@given(algebras())
def test_pair_table_excludes_self(A):
    for mode in ("weak", "standard"):
        table = pair_table(A, mode)
        for i, mask in enumerate(table.after):
            assert not mask >> i & 1
