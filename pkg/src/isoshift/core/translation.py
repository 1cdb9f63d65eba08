"""
Module core pour les opérateurs de translation sur graphe (GTO)

T_G^κ = Ψ·exp(-iκ·M_G)·Ψ* pour une base spectrale Ψ et une diagonale de
fréquences M_G. Quatre manifestations sont fournies: fréquences angulaires
√λ, fréquences réduites π√(λ/ρ), et les deux variantes de phases sur la
base d'adjacence (uniforme et arbitraire), plus une diagonale libre.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Optional

import numpy as np

from ..config import get_settings
from .errors import DimensionMismatchError, IncompatibleBasisError, InvalidParameterError, NonFiniteError
from .spectral import (
    BasisSource, SpectralBasis, as_complex, check_length, clamp_eigenvalues, eigengap, gft,
)

logger = logging.getLogger(__name__)


class FrequencyVariant(str, Enum):
    """Manière d'attribuer une fréquence à chaque vecteur de base"""
    LAPLACIAN_SQRT = "laplacian_sqrt"
    GIRAULT_REDUCED = "girault_reduced"
    GAVILI_UNIFORM = "gavili_uniform"
    GAVILI_PHASES = "gavili_phases"
    CUSTOM = "custom"


ORDERINGS = ("descending", "columns")

_LAPLACIAN_ONLY = (FrequencyVariant.LAPLACIAN_SQRT, FrequencyVariant.GIRAULT_REDUCED)
_ADJACENCY_OR_CUSTOM = (FrequencyVariant.GAVILI_UNIFORM, FrequencyVariant.GAVILI_PHASES)


@dataclass(frozen=True, eq=False)
class FrequencySpec:
    """Diagonale de M_G, ordonnée comme les colonnes de la base"""
    variant: FrequencyVariant
    values: np.ndarray
    rho: Optional[float] = None
    phi: Optional[np.ndarray] = None
    ordering: Optional[str] = None

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        if values.ndim != 1:
            raise DimensionMismatchError("les fréquences doivent former un vecteur")
        if not np.all(np.isfinite(values)):
            raise NonFiniteError("fréquences non finies")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "variant", FrequencyVariant(self.variant))

    @property
    def n(self) -> int:
        return self.values.shape[0]


@dataclass(frozen=True, eq=False)
class TranslationOperator:
    """Opérateur unitaire T_G^κ avec sa provenance"""
    t: np.ndarray
    basis: SpectralBasis
    freq: FrequencySpec
    kappa: float

    def metadata(self) -> Dict[str, Any]:
        meta: Dict[str, Any] = {
            "variant": self.freq.variant.value,
            "kappa": float(self.kappa),
            "basis_source": self.basis.source.value,
        }
        if self.freq.rho is not None:
            meta["rho"] = float(self.freq.rho)
        if self.freq.phi is not None:
            meta["phi"] = [float(v) for v in self.freq.phi]
        if self.freq.ordering is not None:
            meta["ordering"] = self.freq.ordering
        return meta


def default_phases(n: int) -> np.ndarray:
    """Phases distinctes 2π(ℓ+1)/(n+1), toutes dans ]0, 2π["""
    return 2 * np.pi * np.arange(1, n + 1) / (n + 1)


def _uniform_phases(b: SpectralBasis, ordering: str) -> np.ndarray:
    n = b.n
    if ordering == "columns":
        rank = np.arange(n)
    else:
        # la plus grande valeur propre d'adjacence reçoit la phase 0
        order = np.argsort(-b.lam, kind="stable")
        rank = np.empty(n, dtype=int)
        rank[order] = np.arange(n)
    return 2 * np.pi * rank / n


def frequencies(variant, b: SpectralBasis, rho: Optional[float] = None, phi=None,
                values=None, ordering: Optional[str] = None) -> FrequencySpec:
    """
    Construit la diagonale M_G pour une variante et une base

    laplacian_sqrt: √λ_ℓ; girault_reduced: π√(λ_ℓ/ρ), ρ = λ_max par défaut;
    gavili_uniform: 2πℓ/N selon `ordering`; gavili_phases: `phi`;
    custom: `values`.
    """
    variant = FrequencyVariant(variant)

    if variant in _LAPLACIAN_ONLY and b.source != BasisSource.LAPLACIAN:
        raise IncompatibleBasisError(
            f"{variant.value} exige une base laplacienne (reçu {b.source.value})")
    if variant in _ADJACENCY_OR_CUSTOM and b.source not in (BasisSource.ADJACENCY, BasisSource.CUSTOM):
        raise IncompatibleBasisError(
            f"{variant.value} exige une base d'adjacence ou personnalisée (reçu {b.source.value})")

    if variant == FrequencyVariant.LAPLACIAN_SQRT:
        lam = clamp_eigenvalues(b.lam)
        if np.any(lam < 0):
            raise InvalidParameterError("valeur propre laplacienne négative")
        return FrequencySpec(variant, np.sqrt(lam))

    if variant == FrequencyVariant.GIRAULT_REDUCED:
        lam = clamp_eigenvalues(b.lam)
        if np.any(lam < 0):
            raise InvalidParameterError("valeur propre laplacienne négative")
        lam_max = float(lam[-1])
        if rho is None:
            # graphe trivial: λ_max = 0, tout ρ > 0 est admissible
            rho = lam_max if lam_max > 0 else 1.0
        if not np.isfinite(rho) or rho <= 0 or rho < lam_max:
            raise InvalidParameterError(f"rho={rho!r} doit être >= λ_max={lam_max!r} et > 0")
        return FrequencySpec(variant, np.pi * np.sqrt(lam / rho), rho=float(rho))

    if variant == FrequencyVariant.GAVILI_UNIFORM:
        if ordering is None:
            ordering = "descending" if b.source == BasisSource.ADJACENCY else "columns"
        if ordering not in ORDERINGS:
            raise InvalidParameterError(f"ordre inconnu {ordering!r}, attendu {ORDERINGS}")
        return FrequencySpec(variant, _uniform_phases(b, ordering), ordering=ordering)

    if variant == FrequencyVariant.GAVILI_PHASES:
        if phi is None:
            raise InvalidParameterError("gavili_phases exige un vecteur de phases phi")
        phi = np.asarray(phi, dtype=float)
        if phi.shape != (b.n,):
            raise DimensionMismatchError(f"phi: forme {phi.shape} au lieu de ({b.n},)")
        if not np.all(np.isfinite(phi)) or np.any(phi < 0) or np.any(phi > 2 * np.pi):
            raise InvalidParameterError("les phases doivent appartenir à [0, 2π]")
        if np.unique(phi).size != phi.size:
            raise InvalidParameterError("les phases doivent être deux à deux distinctes")
        return FrequencySpec(variant, phi, phi=phi)

    if values is None:
        raise InvalidParameterError("la variante custom exige un vecteur de valeurs")
    values = np.asarray(values, dtype=float)
    if values.shape != (b.n,):
        raise DimensionMismatchError(f"values: forme {values.shape} au lieu de ({b.n},)")
    return FrequencySpec(variant, values)


def spectral_operator(b: SpectralBasis, phases) -> np.ndarray:
    """Ψ·Diag(exp(-i·phases))·Ψ*"""
    return (b.psi * np.exp(-1j * np.asarray(phases))) @ b.psi.conj().T


def gto(b: SpectralBasis, f: FrequencySpec, kappa: float) -> TranslationOperator:
    """Opérateur de translation T_G^κ = Ψ·exp(-iκ·M_G)·Ψ*"""
    if f.n != b.n:
        raise DimensionMismatchError(f"{f.n} fréquences pour une base de dimension {b.n}")
    if not np.isfinite(kappa):
        raise NonFiniteError(f"kappa non fini: {kappa!r}")
    t = spectral_operator(b, kappa * f.values)
    t.setflags(write=False)
    return TranslationOperator(t, b, f, float(kappa))


def translate(op: TranslationOperator, x) -> np.ndarray:
    """Signal translaté T_G^κ·x"""
    x = as_complex(x)
    check_length(x, op.t.shape[0])
    return op.t @ x


def power_spectrum(x, b: SpectralBasis) -> np.ndarray:
    """Spectre de puissance |Ψ*·x|²"""
    return np.abs(gft(x, b)) ** 2


def warn_if_degenerate(b: SpectralBasis, variant) -> bool:
    """Signale une base d'adjacence dégénérée pour les variantes à phases"""
    variant = FrequencyVariant(variant)
    if variant not in _ADJACENCY_OR_CUSTOM or b.source != BasisSource.ADJACENCY:
        return False
    gap = eigengap(b)
    threshold = get_settings().eigengap_warning
    if gap < threshold:
        logger.warning("écart spectral d'adjacence %.2e < %.0e: %s dépend de la base choisie "
                       "dans les sous-espaces propres dégénérés", gap, threshold, variant.value)
        return True
    return False
