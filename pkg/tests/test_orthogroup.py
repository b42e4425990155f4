import random
from fractions import Fraction as Q

import pytest

from orthoweyl.errors import RegimeError
from orthoweyl.hasse import build_hasse
from orthoweyl.linform import LinearForm
from orthoweyl.orthogroup import (
    LeviFactor,
    LeviSubgroup,
    MaximalParabolic,
    crossed_simple_roots,
    cuspidal_degrees,
    group_spec,
    levi_rho_coefficient,
    levi_subgroups,
    nilradical_dim,
    parabolic_choice,
    restrict,
    restriction_basis,
    vanishing_bounds,
)
from orthoweyl.rootsystem import DynkinKind, Weight, rho

P1, P2 = MaximalParabolic.P1, MaximalParabolic.P2


def test_group_spec():
    g5 = group_spec(5)
    assert (g5.k, g5.datum.kind, g5.is_odd) == (3, DynkinKind.B, True)
    g6 = group_spec(6)
    assert (g6.k, g6.datum.kind, g6.is_odd) == (4, DynkinKind.D, False)
    with pytest.raises(RegimeError):
        group_spec(4)


def test_crossed_sets():
    g = group_spec(5)
    assert crossed_simple_roots(g, P1) == frozenset({1})
    assert crossed_simple_roots(g, P2) == frozenset({2})
    # Levi simple roots are the complement of the crossed node
    for p in (P1, P2):
        levi = set(range(1, g.k + 1)) - crossed_simple_roots(g, p)
        assert len(levi) == g.k - 1


def test_restrict_symbolic_odd_first():
    g = group_spec(5)
    lam = Weight.symbolic(3)
    r = restrict(g, P1, lam)
    assert r.a_coefficient == LinearForm.make(3, 0, {1: 1, 2: 1, 3: Q(1, 2)})
    assert r.b_coords == (lam.coords[1], lam.coords[2])


def test_restrict_symbolic_second_keeps_first_slot():
    g = group_spec(7)
    lam = Weight.symbolic(4)
    r = restrict(g, P2, lam)
    assert r.a_coefficient == LinearForm.make(4, 0, {1: Q(1, 2), 2: 1, 3: 1, 4: Q(1, 2)})
    assert r.b_coords == (lam.coords[0], lam.coords[2], lam.coords[3])


def test_restrict_rho_matches_levi_rho():
    # ρ|_𝔞 equals the stated scalars, odd and even case
    for n, p, expected in [(5, P1, Q(5, 2)), (5, P2, 2), (6, P1, 3), (6, P2, Q(5, 2))]:
        g = group_spec(n)
        got = restrict(g, p, rho(g.datum)).a_coefficient
        assert got == LinearForm.const(expected, g.k)
        assert levi_rho_coefficient(g, p) == expected


def test_nilradical_dims():
    for n in range(5, 21):
        g = group_spec(n)
        assert nilradical_dim(g, P1) == n
        assert nilradical_dim(g, P2) == 2 * n - 3
        for p in (P1, P2):
            h = build_hasse(parabolic_choice(g, p))
            assert h.max_length == nilradical_dim(g, p)


def test_levi_lists():
    g7 = group_spec(7)  # k = 4
    odd_first = levi_subgroups(g7, P1)
    assert odd_first[1] == LeviSubgroup(
        1, (LeviFactor("SO", (2,)), LeviFactor("SO+", (4, 1)))
    )
    assert odd_first[-1] == LeviSubgroup(3, (LeviFactor("SO", (2,)),) * 3)
    assert len(odd_first) == g7.k

    g8 = group_spec(8)  # k = 5
    even_first = levi_subgroups(g8, P1)
    assert even_first[-1] == LeviSubgroup(
        3, (LeviFactor("SO", (2,)),) * 3 + (LeviFactor("SO+", (1, 1)),)
    )
    assert len(even_first) == g8.k - 1

    for g in (g7, g8):
        second = levi_subgroups(g, P2)
        assert len(second) == 2
        assert second[0].factors == (LeviFactor("SL2R", ()), LeviFactor("SO", (g.n - 2,)))
        assert second[1] == LeviSubgroup(g.k - 1, (LeviFactor("SO", (2,)),) * (g.k - 1))


def test_levi_render():
    g = group_spec(7)
    assert levi_subgroups(g, P1)[2].render() == "SO(2)^2xSO(2,1)^+"
    assert levi_subgroups(g, P2)[0].render() == "SL2(R)xSO(5)"


def test_cuspidal_degrees():
    assert cuspidal_degrees(group_spec(5), P1) == {2}
    assert cuspidal_degrees(group_spec(6), P1) == {2, 3}
    assert cuspidal_degrees(group_spec(6), P2) == {1}
    assert cuspidal_degrees(group_spec(9), P2) == {1}


def test_vanishing_bounds():
    b5 = vanishing_bounds(group_spec(5))
    assert (b5.l0, b5.q0, b5.vcd) == (0, 5, 8)
    b6 = vanishing_bounds(group_spec(6))
    assert (b6.l0, b6.q0, b6.vcd) == (0, 6, 10)
    for n in range(5, 30):
        b = vanishing_bounds(group_spec(n))
        assert b.q0 <= b.vcd


def _random_symbolic_weight(rng, k):
    coords = []
    for _ in range(k):
        coeffs = {i: Q(rng.randint(-5, 5), rng.randint(1, 3)) for i in range(1, k + 1)}
        coords.append(LinearForm.make(k, Q(rng.randint(-5, 5), rng.randint(1, 3)), coeffs))
    return Weight(tuple(coords))


@pytest.mark.parametrize("n", [5, 7, 6, 8])
@pytest.mark.parametrize("p", [P1, P2])
def test_recombination_identity(n, p):
    # a·ϖ_{i1} + Σ b_j·ϖ_{i,j+1} reconstructs the weight, for random symbolic input
    g = group_spec(n)
    head, tail = restriction_basis(g, p)
    rng = random.Random(1000 * n + p.value)
    for _ in range(100):
        w = _random_symbolic_weight(rng, g.k)
        r = restrict(g, p, w)
        coords = []
        for i in range(g.k):
            acc = r.a_coefficient.scale(head.coords[i].constant)
            for form, basis in zip(r.b_coords, tail):
                acc = acc + form.scale(basis.coords[i].constant)
            coords.append(acc)
        assert Weight(tuple(coords)) == w
