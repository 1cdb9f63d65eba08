"""
Suites de vérification exécutées par `isoshift check`

Chaque suite renvoie une liste de CheckResult (résidu max-abs et seuil).
"""

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import List, Optional, Sequence, Tuple

import numpy as np

from isoshift.config import get_settings
from isoshift.core import (
    BasisSource, FrequencySpec, FrequencyVariant, Graph, InvalidParameterError, SpectralBasis,
    convolutivity_defect, default_phases, dft_basis, evolve, frequencies, graph_basis, gto,
    hamiltonian, joint_power_spectrum, jto_kronecker, jto_spectral, max_abs, power_spectrum,
    transition_series, transition_spectral, translate, unitarity_defect, warn_if_degenerate,
)

# noms de la ligne de commande -> variantes
CLI_VARIANTS = {
    "laplacian-sqrt": FrequencyVariant.LAPLACIAN_SQRT,
    "girault": FrequencyVariant.GIRAULT_REDUCED,
    "gavili-e": FrequencyVariant.GAVILI_UNIFORM,
    "gavili-phi": FrequencyVariant.GAVILI_PHASES,
    "custom": FrequencyVariant.CUSTOM,
}

ALL_GTO_VARIANTS = (
    FrequencyVariant.LAPLACIAN_SQRT,
    FrequencyVariant.GIRAULT_REDUCED,
    FrequencyVariant.GAVILI_UNIFORM,
    FrequencyVariant.GAVILI_PHASES,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    residual: float
    threshold: float

    @property
    def passed(self) -> bool:
        return bool(self.residual <= self.threshold)


def parse_floats(text: str) -> List[float]:
    """'0.5,1,2.7' -> [0.5, 1.0, 2.7]"""
    try:
        return [float(item) for item in text.split(",") if item.strip()]
    except ValueError:
        raise InvalidParameterError(f"liste de réels invalide: {text!r}")


def parse_grid(text: str) -> List[Tuple[float, float]]:
    """'1,1;2,0' -> [(1.0, 1.0), (2.0, 0.0)]"""
    grid = []
    for item in text.split(";"):
        if not item.strip():
            continue
        values = parse_floats(item)
        if len(values) != 2:
            raise InvalidParameterError(f"couple (κ,υ) invalide: {item!r}")
        grid.append((values[0], values[1]))
    if not grid:
        raise InvalidParameterError("grille de translations vide")
    return grid


def prepare_variant(g: Graph, variant, rho: Optional[float] = None, phi=None, values=None,
                    basis: Optional[str] = None,
                    ordering: Optional[str] = None) -> Tuple[SpectralBasis, FrequencySpec]:
    """Choisit la base adaptée à la variante et construit la diagonale de fréquences"""
    variant = FrequencyVariant(variant)
    if variant in (FrequencyVariant.GAVILI_UNIFORM, FrequencyVariant.GAVILI_PHASES):
        source = BasisSource.ADJACENCY
    elif variant == FrequencyVariant.CUSTOM and basis is not None:
        source = BasisSource(basis)
    else:
        source = BasisSource.LAPLACIAN
    b = graph_basis(g, source)
    warn_if_degenerate(b, variant)
    if variant == FrequencyVariant.GAVILI_PHASES and phi is None:
        phi = default_phases(b.n)
    return b, frequencies(variant, b, rho=rho, phi=phi, values=values, ordering=ordering)


def suite_unitarity(g: Graph, kappas: Sequence[float]) -> List[CheckResult]:
    tol = get_settings().unitary_tol
    results = []
    for variant in ALL_GTO_VARIANTS:
        b, f = prepare_variant(g, variant)
        for kappa in kappas:
            op = gto(b, f, kappa)
            results.append(CheckResult(f"unitarité {variant.value} κ={kappa:g}", unitarity_defect(op.t), tol))
    return results


def suite_group(g: Graph, kappas: Sequence[float]) -> List[CheckResult]:
    tol = get_settings().group_tol
    results = []
    for variant in ALL_GTO_VARIANTS:
        b, f = prepare_variant(g, variant)
        for k1, k2 in combinations_with_replacement(kappas, 2):
            t1, t2, t12 = gto(b, f, k1).t, gto(b, f, k2).t, gto(b, f, k1 + k2).t
            residual = max(max_abs(t1 @ t2 - t12), max_abs(t2 @ t1 - t12))
            results.append(CheckResult(f"groupe {variant.value} κ1={k1:g} κ2={k2:g}", residual, tol))
    return results


def suite_spectrum_invariance(g: Graph, kappas: Sequence[float], seed: int = 0) -> List[CheckResult]:
    tol = get_settings().unitary_tol
    rng = np.random.default_rng(seed)
    x = rng.standard_normal(g.n) + 1j * rng.standard_normal(g.n)
    results = []
    for variant in ALL_GTO_VARIANTS:
        b, f = prepare_variant(g, variant)
        reference = power_spectrum(x, b)
        for kappa in kappas:
            moved = power_spectrum(translate(gto(b, f, kappa), x), b)
            results.append(CheckResult(f"spectre invariant {variant.value} κ={kappa:g}",
                                       max_abs(moved - reference), tol))
    return results


def suite_theorem1(g: Graph, m: int, grid: Sequence[Tuple[float, float]], seed: int = 0) -> List[CheckResult]:
    settings = get_settings()
    bg = graph_basis(g)
    fg = frequencies(FrequencyVariant.LAPLACIAN_SQRT, bg)
    bd = dft_basis(m)
    rng = np.random.default_rng(seed)
    X = rng.standard_normal((g.n, m)) + 1j * rng.standard_normal((g.n, m))
    reference = joint_power_spectrum(X, bg, bd)

    results = []
    for kappa, upsilon in grid:
        label = f"(κ={kappa:g}, υ={upsilon:g})"
        kron = jto_kronecker(gto(bg, fg, kappa), m, upsilon)
        spectral = jto_spectral(bg, bd, fg, kappa, upsilon)
        moved = (kron.t @ X.reshape(-1, order="F")).reshape((g.n, m), order="F")
        results.extend([
            CheckResult(f"kronecker = spectral {label}", max_abs(kron.t - spectral.t), settings.group_tol),
            CheckResult(f"unitarité kronecker {label}", unitarity_defect(kron.t), settings.unitary_tol),
            CheckResult(f"unitarité spectral {label}", unitarity_defect(spectral.t), settings.unitary_tol),
            CheckResult(f"convolutivité {label}", convolutivity_defect(kron, bg, bd), settings.unitary_tol),
            CheckResult(f"spectre conjoint invariant {label}",
                        max_abs(joint_power_spectrum(moved, bg, bd) - reference), settings.unitary_tol),
        ])
    return results


def suite_transition(g: Graph, times: Sequence[float] = (1, 2, 5),
                     tols: Sequence[float] = (1e-8, 1e-12), seed: int = 0) -> List[CheckResult]:
    settings = get_settings()
    b, f = prepare_variant(g, FrequencyVariant.LAPLACIAN_SQRT)
    h = hamiltonian(b, f)
    results = []
    for t in times:
        residual = max_abs(transition_spectral(h, t) - gto(b, f, t).t)
        results.append(CheckResult(f"transition = GTO t={t:g}", residual, settings.unitary_tol))
    reference = transition_spectral(h, 1.0)
    for tol in tols:
        residual = max_abs(transition_series(h, 1.0, tol=tol) - reference)
        results.append(CheckResult(f"série = spectrale tol={tol:g}", residual, 10 * tol))

    rng = np.random.default_rng(seed)
    u0 = rng.standard_normal(g.n) + 1j * rng.standard_normal(g.n)
    for t in (0.3, 1.0, 7.5):
        drift = abs(np.linalg.norm(evolve(u0, h, t)) - np.linalg.norm(u0))
        results.append(CheckResult(f"conservation de la norme t={t:g}", drift, settings.unitary_tol))
    composed = transition_spectral(h, 0.3) @ transition_spectral(h, 1.0)
    results.append(CheckResult("composition t1=0.3 t2=1",
                               max_abs(composed - transition_spectral(h, 1.3)), settings.group_tol))
    return results
