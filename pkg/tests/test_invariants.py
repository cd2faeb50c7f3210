import math

import numpy as np
import pytest

from estrada.eigen import Spectrum, jacobi_eigen
from estrada.errors import NotPSD, OverflowGuard, UnsupportedMoment
from estrada.graph import FamilySpec, Graph, adjacency_matrix, generate, is_bipartite
from estrada.harness import random_graphs
from estrada.invariants import (
    compute_invariants,
    count_eigen_classes,
    estrada_index,
    graph_energy,
    half_energy_identity_check,
    signless_laplacian_energy,
    slee,
    spectral_moment,
)

from conftest import small_corpus, triangles_bruteforce

E = math.e


def spec(*vals):
    return Spectrum(np.array(sorted(vals, reverse=True), dtype=float))


def fam(kind, *params):
    return generate(FamilySpec(kind, params))


class TestMoments:
    def test_k3_third_moment(self):
        assert spectral_moment(spec(2, -1, -1), 3) == pytest.approx(6)

    def test_zeroth(self):
        assert spectral_moment(spec(0.3, -2, 5, 1), 0) == 4

    def test_c4_second(self):
        assert spectral_moment(spec(2, 0, 0, -2), 2) == 8

    def test_order_guard(self):
        with pytest.raises(UnsupportedMoment):
            spectral_moment(spec(1, -1), 13)


class TestEstrada:
    def test_empty(self):
        assert estrada_index(spec(0, 0, 0, 0, 0)) == 5

    def test_k2(self):
        assert estrada_index(spec(1, -1)) == pytest.approx(E + 1 / E, abs=1e-14)
        assert estrada_index(spec(1, -1)) == pytest.approx(3.08616, abs=1e-5)

    def test_k4(self):
        assert estrada_index(spec(3, -1, -1, -1)) == pytest.approx(E**3 + 3 / E)
        assert E**3 + 3 / E == pytest.approx(21.18918, abs=1e-5)

    def test_overflow_guard(self):
        with pytest.raises(OverflowGuard):
            estrada_index(spec(701, 0))


class TestEnergy:
    def test_values(self):
        assert graph_energy(spec(1, -1)) == 2
        assert graph_energy(spec(4, -1, -1, -1, -1)) == 8
        assert graph_energy(spec(2, 0, 0, -2)) == 4

    def test_half_identity(self):
        assert half_energy_identity_check(spec(1, -1))
        assert half_energy_identity_check(spec(2, -1, -1))
        assert not half_energy_identity_check(spec(2, 1))

    def test_half_identity_corpus(self):
        for g in small_corpus(5):
            assert half_energy_identity_check(jacobi_eigen(adjacency_matrix(g)), tol=1e-9)


class TestSignless:
    def test_slee(self):
        assert slee(spec(0, 0, 0)) == 3
        assert slee(spec(2, 0)) == pytest.approx(E**2 + 1)
        assert slee(spec(4, 1, 1)) == pytest.approx(E**4 + 2 * E)
        assert E**4 + 2 * E == pytest.approx(60.035, abs=1e-3)

    def test_slee_rejects_negative(self):
        with pytest.raises(NotPSD):
            slee(spec(2, -0.1))

    def test_qe(self):
        assert signless_laplacian_energy(spec(0, 0, 0), 3, 0) == 0
        assert signless_laplacian_energy(spec(2, 0), 2, 1) == 2
        assert signless_laplacian_energy(spec(4, 2, 2, 0), 4, 4) == 4


class TestClasses:
    def test_c4(self):
        assert count_eigen_classes(spec(2, 0, 0, -2)) == (3, 1)

    def test_empty(self):
        assert count_eigen_classes(spec(0, 0, 0, 0)) == (4, 0)

    def test_k2(self):
        assert count_eigen_classes(spec(1, -1)) == (1, 1)

    def test_noise_counts_as_zero(self):
        assert count_eigen_classes(spec(2, 1e-14, -1e-14, -2)) == (3, 1)


class TestComputeInvariants:
    def test_empty4(self):
        inv = compute_invariants(Graph(4))
        assert (inv.EE, inv.energy, inv.SLEE, inv.QE, inv.k_nonneg) == (4, 0, 4, 0, 4)

    def test_k2(self):
        inv = compute_invariants(fam("complete", 2))
        assert inv.EE == pytest.approx(E + 1 / E)
        assert inv.energy == pytest.approx(2)
        assert inv.SLEE == pytest.approx(E**2 + 1)
        assert inv.QE == pytest.approx(2)
        assert inv.det_A == pytest.approx(-1)

    def test_c4(self):
        inv = compute_invariants(fam("cycle", 4))
        assert inv.EE == pytest.approx(E**2 + 2 + E**-2)
        assert inv.EE == pytest.approx(9.52439, abs=1e-5)
        assert inv.energy == pytest.approx(4)
        assert inv.singular

    def test_as_dict_flattens_moments(self):
        d = compute_invariants(fam("complete", 3)).as_dict()
        assert d["M3"] == pytest.approx(6) and "moments" not in d

    def test_moment_identities(self):
        graphs = small_corpus(5) + list(random_graphs(200, 12, seed=11))
        for g in graphs:
            inv = compute_invariants(g)
            m0, m1, m2, m3 = inv.moments
            t = triangles_bruteforce(g)
            assert m0 == g.n
            assert abs(m1) <= 1e-8
            assert abs(m2 - 2 * g.m) <= 1e-8 * max(1, 2 * g.m)
            assert abs(m3 - 6 * t) <= 1e-8 * max(1, 6 * t + 1)
            assert inv.t == t

    def test_structural_invariants(self):
        for g in small_corpus(5):
            inv = compute_invariants(g)
            qs = jacobi_eigen(adjacency_matrix(g) + np.diag(g.degrees()))
            assert abs(qs.values.sum() - 2 * g.m) <= 1e-8 * max(1, 2 * g.m)
            assert inv.EE >= g.n - 1e-12
            assert inv.energy >= 0 and inv.QE >= 0 and inv.SLEE >= g.n - 1e-12
            assert inv.k_pos <= inv.k_nonneg <= g.n
            # de la Pena sandwich
            lo, hi = math.sqrt(g.n**2 + 4 * g.m), g.n - 1 + math.exp(math.sqrt(2 * g.m))
            assert lo - 1e-9 <= inv.EE <= hi + 1e-9
            if g.m == 0:
                assert inv.EE == pytest.approx(lo, abs=1e-9) and inv.EE == pytest.approx(hi, abs=1e-9)
            else:
                assert inv.EE - lo > 1e-9 and hi - inv.EE > 1e-9

    def test_bipartite_spectrum_symmetric(self):
        for g in small_corpus(5) + list(random_graphs(100, 10, seed=5)):
            if is_bipartite(g) is None:
                continue
            vals = jacobi_eigen(adjacency_matrix(g)).values
            np.testing.assert_allclose(vals, -vals[::-1], atol=1e-8)

    @pytest.mark.parametrize("n", [1, 2, 7, 30])
    def test_edgeless_estrada_exact(self, n):
        assert abs(compute_invariants(Graph(n)).EE - n) <= 1e-12
