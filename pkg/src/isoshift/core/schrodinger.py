"""
Évolution de Schrödinger d'un signal sur graphe

Hamiltonien H_G = Ψ·M_G·Ψ*, fonction de transition exp(-itH_G/α) calculée
par voie spectrale, par série entière tronquée et par scipy.linalg.expm,
et évolution u(t) par développement sur les vecteurs propres.
"""

import logging
import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
import scipy.linalg

from ..config import get_settings
from .errors import DimensionMismatchError, InvalidParameterError, NonFiniteError, SeriesConvergenceError
from .spectral import SpectralBasis, as_complex, check_length
from .translation import FrequencySpec, spectral_operator

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Hamiltonian:
    """Matrice auto-adjointe h = Ψ·Diag(gamma)·Ψ*"""
    h: np.ndarray
    basis: SpectralBasis
    gamma: np.ndarray

    @property
    def n(self) -> int:
        return self.h.shape[0]


def _check_time(t: float, alpha: float) -> float:
    if not np.isfinite(t) or not np.isfinite(alpha):
        raise NonFiniteError(f"t={t!r} et alpha={alpha!r} doivent être finis")
    if alpha == 0:
        raise InvalidParameterError("alpha doit être non nul")
    return t / alpha


def hamiltonian(b: SpectralBasis, f: FrequencySpec) -> Hamiltonian:
    """Hamiltonien construit sur la base b avec la diagonale f.values"""
    if f.n != b.n:
        raise DimensionMismatchError(f"{f.n} fréquences pour une base de dimension {b.n}")
    gamma = np.array(f.values, dtype=float)
    h = (b.psi * gamma) @ b.psi.conj().T
    h = 0.5 * (h + h.conj().T)
    h.setflags(write=False)
    gamma.setflags(write=False)
    return Hamiltonian(h, b, gamma)


def transition_spectral(h: Hamiltonian, t: float, alpha: float = 1.0) -> np.ndarray:
    """exp(-i·t·H/α) = Ψ·Diag(exp(-i·t·γ/α))·Ψ*"""
    tau = _check_time(t, alpha)
    return spectral_operator(h.basis, tau * h.gamma)


def transition_series(h: Hamiltonian, t: float, alpha: float = 1.0, tol: float = 1e-12,
                      max_terms: Optional[int] = None) -> np.ndarray:
    """
    Série entière Σ_r (-it/α)^r/r!·H^r tronquée, avec mise à l'échelle et élévation au carré

    A = -i·t·H/α est divisé par 2^s pour que ‖A/2^s‖₂ <= 1, la série de A/2^s est
    sommée puis élevée au carré s fois. La série s'arrête quand le dernier terme a
    une norme max-abs <= tol/2^s et qu'au moins ⌈e·‖A/2^s‖₂⌉ termes ont été sommés.
    """
    tau = _check_time(t, alpha)
    if not tol > 0:
        raise InvalidParameterError(f"tol doit être > 0 (reçu {tol!r})")
    max_terms = get_settings().series_max_terms if max_terms is None else max_terms

    a = (-1j * tau) * h.h
    result = np.eye(h.n, dtype=complex)
    if not np.any(a):
        return result
    norm = abs(tau) * np.linalg.norm(h.h, 2)
    squarings = math.ceil(math.log2(norm)) if norm > 1 else 0
    a = a / 2.0 ** squarings
    term_tol = tol / 2.0 ** squarings
    min_terms = math.ceil(math.e * norm / 2.0 ** squarings)

    term = result.copy()
    n_terms = 1
    while True:
        term = term @ a / n_terms
        result += term
        n_terms += 1
        if n_terms >= min_terms and np.max(np.abs(term)) <= term_tol:
            break
        if n_terms > max_terms:
            raise SeriesConvergenceError(
                f"série non convergée après {max_terms} termes (|t/α|·‖H‖ trop grand)")
    for _ in range(squarings):
        result = result @ result
    logger.debug("transition_series: %d termes, %d élévations au carré", n_terms, squarings)
    return result


def transition_expm(h: Hamiltonian, t: float, alpha: float = 1.0) -> np.ndarray:
    """Troisième voie de calcul par scipy.linalg.expm"""
    tau = _check_time(t, alpha)
    return scipy.linalg.expm(-1j * tau * h.h)


def evolve(u0, h: Hamiltonian, t: float, alpha: float = 1.0) -> np.ndarray:
    """u(t) = Σ_k exp(-itγ_k/α)·⟨u(0), ψ_k⟩·ψ_k"""
    tau = _check_time(t, alpha)
    u0 = as_complex(u0, "u0")
    check_length(u0, h.n, "u0")
    psi = h.basis.psi
    coefficients = psi.conj().T @ u0
    return psi @ (np.exp(-1j * tau * h.gamma) * coefficients)


def trajectory(u0, h: Hamiltonian, t: float, steps: int = 10,
               alpha: float = 1.0) -> Tuple[np.ndarray, np.ndarray]:
    """Instantanés u(t·j/k) pour j = 0..k (un seul instantané si t = 0)"""
    if int(steps) != steps or steps < 1:
        raise InvalidParameterError(f"steps doit être un entier >= 1 (reçu {steps!r})")
    times = np.array([0.0]) if t == 0 else t * np.arange(int(steps) + 1) / int(steps)
    states = np.stack([evolve(u0, h, tau, alpha) for tau in times])
    return times, states
