"""
Tests unitaires pour les opérateurs de translation sur graphe
"""

import logging
from itertools import combinations_with_replacement

import numpy as np
import pytest

from isoshift.core import (
    BasisSource, DimensionMismatchError, FrequencyVariant, IncompatibleBasisError,
    InvalidParameterError, NonFiniteError, SpectralBasis, custom_basis, default_phases,
    dft_basis, frequencies, gft, graph_basis, gto, power_spectrum, shift_permutation,
    translate, unitarity_defect, warn_if_degenerate,
)

KAPPAS = (0.5, 1.0, 2.7)


def _basis_for(g, variant):
    """Base adaptée à la variante (adjacence pour les variantes à phases)"""
    if variant in (FrequencyVariant.GAVILI_UNIFORM, FrequencyVariant.GAVILI_PHASES):
        b = graph_basis(g, BasisSource.ADJACENCY)
    else:
        b = graph_basis(g)
    phi = default_phases(b.n) if variant == FrequencyVariant.GAVILI_PHASES else None
    return b, frequencies(variant, b, phi=phi)


ALL_VARIANTS = (
    FrequencyVariant.LAPLACIAN_SQRT,
    FrequencyVariant.GIRAULT_REDUCED,
    FrequencyVariant.GAVILI_UNIFORM,
    FrequencyVariant.GAVILI_PHASES,
)


class TestFrequencies:
    """Tests pour les diagonales de fréquences"""

    def test_laplacian_sqrt_p2(self, p2):
        """√λ sur P2: [0, √2]"""
        f = frequencies(FrequencyVariant.LAPLACIAN_SQRT, graph_basis(p2))
        np.testing.assert_allclose(f.values, [0, np.sqrt(2)], atol=1e-12)

    def test_girault_p2_default_rho(self, p2):
        """π√(λ/ρ) sur P2 avec ρ = 2 par défaut: [0, π]"""
        f = frequencies(FrequencyVariant.GIRAULT_REDUCED, graph_basis(p2))
        np.testing.assert_allclose(f.values, [0, np.pi], atol=1e-12)
        assert f.rho == pytest.approx(2.0)

    def test_girault_explicit_rho(self, p2):
        """ρ > λ_max accepté, ρ < λ_max refusé"""
        b = graph_basis(p2)
        f = frequencies(FrequencyVariant.GIRAULT_REDUCED, b, rho=8.0)
        np.testing.assert_allclose(f.values, [0, np.pi / 2], atol=1e-12)
        with pytest.raises(InvalidParameterError):
            frequencies(FrequencyVariant.GIRAULT_REDUCED, b, rho=1.0)
        with pytest.raises(InvalidParameterError):
            frequencies(FrequencyVariant.GIRAULT_REDUCED, b, rho=-1.0)

    def test_girault_values_in_zero_pi(self, er10):
        """Fréquences réduites dans [0, π]"""
        f = frequencies(FrequencyVariant.GIRAULT_REDUCED, graph_basis(er10))
        assert np.all(f.values >= 0)
        assert np.all(f.values <= np.pi + 1e-12)

    def test_gavili_uniform_n4(self):
        """2πℓ/N pour N = 4 dans l'ordre des colonnes"""
        b = custom_basis(dft_basis(4).psi)
        f = frequencies(FrequencyVariant.GAVILI_UNIFORM, b)
        np.testing.assert_allclose(f.values, [0, np.pi / 2, np.pi, 3 * np.pi / 2])
        assert f.ordering == "columns"

    def test_gavili_uniform_descending_on_adjacency(self, p2):
        """Base d'adjacence: la plus grande valeur propre reçoit la phase 0"""
        b = graph_basis(p2, BasisSource.ADJACENCY)
        f = frequencies(FrequencyVariant.GAVILI_UNIFORM, b)
        assert f.ordering == "descending"
        np.testing.assert_allclose(f.values, [np.pi, 0])
        f_columns = frequencies(FrequencyVariant.GAVILI_UNIFORM, b, ordering="columns")
        np.testing.assert_allclose(f_columns.values, [0, np.pi])
        for unknown in ("random", "ascending"):
            with pytest.raises(InvalidParameterError):
                frequencies(FrequencyVariant.GAVILI_UNIFORM, b, ordering=unknown)

    def test_gavili_phases_validation(self, c4):
        """Phases distinctes dans [0, 2π] et de la bonne longueur"""
        b = graph_basis(c4, BasisSource.ADJACENCY)
        f = frequencies(FrequencyVariant.GAVILI_PHASES, b, phi=[0.1, 0.2, 0.3, 0.4])
        np.testing.assert_allclose(f.values, [0.1, 0.2, 0.3, 0.4])
        with pytest.raises(InvalidParameterError):
            frequencies(FrequencyVariant.GAVILI_PHASES, b)
        with pytest.raises(InvalidParameterError):
            frequencies(FrequencyVariant.GAVILI_PHASES, b, phi=[0.1, 0.1, 0.3, 0.4])
        with pytest.raises(InvalidParameterError):
            frequencies(FrequencyVariant.GAVILI_PHASES, b, phi=[0.1, 0.2, 0.3, 7.0])
        with pytest.raises(DimensionMismatchError):
            frequencies(FrequencyVariant.GAVILI_PHASES, b, phi=[0.1, 0.2])

    def test_default_phases(self):
        """Phases par défaut distinctes et dans ]0, 2π["""
        phases = default_phases(6)
        assert np.unique(phases).size == 6
        assert np.all(phases > 0)
        assert np.all(phases < 2 * np.pi)

    def test_custom_values(self, c4):
        """Diagonale libre de la bonne longueur"""
        b = graph_basis(c4)
        f = frequencies(FrequencyVariant.CUSTOM, b, values=[0, 1, 2, 3])
        np.testing.assert_array_equal(f.values, [0, 1, 2, 3])
        with pytest.raises(InvalidParameterError):
            frequencies(FrequencyVariant.CUSTOM, b)
        with pytest.raises(DimensionMismatchError):
            frequencies(FrequencyVariant.CUSTOM, b, values=[0, 1])

    def test_incompatible_bases(self, c4):
        """Variante laplacienne sur l'adjacence et inversement"""
        adjacency_basis = graph_basis(c4, BasisSource.ADJACENCY)
        with pytest.raises(IncompatibleBasisError):
            frequencies(FrequencyVariant.LAPLACIAN_SQRT, adjacency_basis)
        with pytest.raises(IncompatibleBasisError):
            frequencies(FrequencyVariant.GAVILI_UNIFORM, graph_basis(c4))
        with pytest.raises(IncompatibleBasisError):
            frequencies(FrequencyVariant.GAVILI_UNIFORM, dft_basis(4))


class TestGTO:
    """Tests pour l'opérateur T_G^κ"""

    def test_kappa_zero_is_identity(self, c8):
        """κ = 0 -> identité"""
        b = graph_basis(c8)
        op = gto(b, frequencies(FrequencyVariant.LAPLACIAN_SQRT, b), 0.0)
        np.testing.assert_allclose(op.t, np.eye(8), atol=1e-12)

    def test_p2_swap(self, p2):
        """P2, κ = π/√2: matrice d'échange"""
        b = graph_basis(p2)
        op = gto(b, frequencies(FrequencyVariant.LAPLACIAN_SQRT, b), np.pi / np.sqrt(2))
        assert np.max(np.abs(op.t - np.array([[0, 1], [1, 0]]))) <= 1e-10
        np.testing.assert_allclose(translate(op, [1, 0]), [0, 1], atol=1e-10)

    def test_unitarity_all_variants(self, reference_graphs):
        """‖T·T* - I‖ <= 1e-10 pour chaque variante, graphe et κ"""
        for name, g in reference_graphs.items():
            for variant in ALL_VARIANTS:
                b, f = _basis_for(g, variant)
                for kappa in KAPPAS:
                    assert unitarity_defect(gto(b, f, kappa).t) <= 1e-10, (name, variant, kappa)

    def test_group_law_all_variants(self, reference_graphs):
        """T^κ1·T^κ2 = T^κ2·T^κ1 = T^(κ1+κ2)"""
        for name, g in reference_graphs.items():
            for variant in ALL_VARIANTS:
                b, f = _basis_for(g, variant)
                for k1, k2 in combinations_with_replacement(KAPPAS, 2):
                    t1, t2, t12 = gto(b, f, k1).t, gto(b, f, k2).t, gto(b, f, k1 + k2).t
                    assert np.max(np.abs(t1 @ t2 - t12)) <= 1e-9, (name, variant, k1, k2)
                    assert np.max(np.abs(t2 @ t1 - t12)) <= 1e-9, (name, variant, k1, k2)

    def test_spectral_form(self, grid3):
        """T = Ψ·Diag(exp(-iκ·M))·Ψ*"""
        b = graph_basis(grid3)
        f = frequencies(FrequencyVariant.GIRAULT_REDUCED, b)
        kappa = 1.7
        expected = b.psi @ np.diag(np.exp(-1j * kappa * f.values)) @ b.psi.conj().T
        assert np.max(np.abs(gto(b, f, kappa).t - expected)) <= 1e-10

    def test_degenerate_eigenspace_independence(self, c4):
        """C4: même opérateur pour deux bases orthonormées de l'espace propre λ = 2"""
        b = graph_basis(c4)
        psi = np.array(b.psi)
        c1, c2 = psi[:, 1].copy(), psi[:, 2].copy()
        psi[:, 1] = (c1 + c2) / np.sqrt(2)
        psi[:, 2] = (c1 - c2) / np.sqrt(2)
        rotated = SpectralBasis(psi, b.lam, BasisSource.LAPLACIAN)
        assert np.max(np.abs(rotated.psi - b.psi)) > 0.1

        for kappa in KAPPAS:
            t1 = gto(b, frequencies(FrequencyVariant.LAPLACIAN_SQRT, b), kappa).t
            t2 = gto(rotated, frequencies(FrequencyVariant.LAPLACIAN_SQRT, rotated), kappa).t
            assert np.max(np.abs(t1 - t2)) <= 1e-9

    def test_cycle_dft_correspondence(self):
        """Phases uniformes sur la base DFT de C8, κ = 1: permutation circulaire"""
        b = custom_basis(dft_basis(8).psi)
        op = gto(b, frequencies(FrequencyVariant.GAVILI_UNIFORM, b), 1.0)
        assert np.max(np.abs(op.t - shift_permutation(8))) <= 1e-10

    def test_eigenvector_gets_phase(self, c8):
        """ψ_ℓ -> e^{-iκ·M_ℓ}·ψ_ℓ"""
        b = graph_basis(c8)
        f = frequencies(FrequencyVariant.LAPLACIAN_SQRT, b)
        op = gto(b, f, 1.3)
        for k in range(b.n):
            expected = np.exp(-1j * 1.3 * f.values[k]) * b.psi[:, k]
            np.testing.assert_allclose(translate(op, b.psi[:, k]), expected, atol=1e-10)

    def test_metadata(self, p2):
        """Métadonnées de provenance"""
        b = graph_basis(p2)
        op = gto(b, frequencies(FrequencyVariant.GIRAULT_REDUCED, b), 0.5)
        meta = op.metadata()
        assert meta["variant"] == "girault_reduced"
        assert meta["kappa"] == 0.5
        assert meta["basis_source"] == "laplacian"
        assert meta["rho"] == pytest.approx(2.0)

    def test_errors(self, c4, p2):
        """Dimensions incompatibles et κ non fini"""
        b = graph_basis(c4)
        f = frequencies(FrequencyVariant.LAPLACIAN_SQRT, graph_basis(p2))
        with pytest.raises(DimensionMismatchError):
            gto(b, f, 1.0)
        f4 = frequencies(FrequencyVariant.LAPLACIAN_SQRT, b)
        with pytest.raises(NonFiniteError):
            gto(b, f4, np.nan)
        with pytest.raises(DimensionMismatchError):
            translate(gto(b, f4, 1.0), np.ones(3))


class TestTranslateAndSpectrum:
    """Tests pour l'isométrie et l'invariance du spectre de puissance"""

    def test_kappa_zero_keeps_signal(self, er10, rng):
        """κ = 0: x inchangé"""
        b = graph_basis(er10)
        op = gto(b, frequencies(FrequencyVariant.LAPLACIAN_SQRT, b), 0.0)
        x = rng.standard_normal(er10.n)
        np.testing.assert_allclose(translate(op, x), x, atol=1e-12)

    def test_isometry_and_spectrum_invariance(self, reference_graphs, rng):
        """‖T·x‖ = ‖x‖ et |Ψ*·T·x|² = |Ψ*·x|²"""
        for name, g in reference_graphs.items():
            x = rng.standard_normal(g.n) + 1j * rng.standard_normal(g.n)
            for variant in ALL_VARIANTS:
                b, f = _basis_for(g, variant)
                reference = power_spectrum(x, b)
                for kappa in KAPPAS:
                    moved = translate(gto(b, f, kappa), x)
                    assert abs(np.linalg.norm(moved) - np.linalg.norm(x)) <= 1e-10, name
                    assert np.max(np.abs(power_spectrum(moved, b) - reference)) <= 1e-10, name

    def test_power_spectrum_of_basis_vector(self, c8):
        """x = ψ_k -> e_k"""
        b = graph_basis(c8)
        np.testing.assert_allclose(power_spectrum(b.psi[:, 3], b), np.eye(8)[3], atol=1e-10)
        np.testing.assert_array_equal(power_spectrum(np.zeros(8), b), np.zeros(8))
        np.testing.assert_allclose(np.abs(gft(b.psi[:, 3], b)) ** 2, np.eye(8)[3], atol=1e-10)


class TestDegeneracyWarning:
    """Tests pour l'avertissement de base d'adjacence dégénérée"""

    def test_warning_on_degenerate_adjacency(self, c4, caplog):
        """C4: valeurs propres d'adjacence multiples"""
        b = graph_basis(c4, BasisSource.ADJACENCY)
        with caplog.at_level(logging.WARNING, logger="isoshift"):
            assert warn_if_degenerate(b, FrequencyVariant.GAVILI_UNIFORM)
        assert "écart spectral" in caplog.text

    def test_no_warning_otherwise(self, p2, c4):
        """Spectre simple ou variante laplacienne: pas d'avertissement"""
        assert not warn_if_degenerate(graph_basis(p2, BasisSource.ADJACENCY), FrequencyVariant.GAVILI_UNIFORM)
        assert not warn_if_degenerate(graph_basis(c4), FrequencyVariant.LAPLACIAN_SQRT)
