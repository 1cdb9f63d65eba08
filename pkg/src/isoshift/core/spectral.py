"""
Module core pour la décomposition spectrale

Bases spectrales (Laplacien, adjacence, DFT, personnalisée), transformée
de Fourier sur graphe et son inverse.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np
import scipy.linalg

from ..config import get_settings
from .errors import DecompositionError, DimensionMismatchError, InvalidParameterError, NonFiniteError
from .graph import Graph, adjacency, laplacian

logger = logging.getLogger(__name__)


class BasisSource(str, Enum):
    """Origine d'une base spectrale"""
    LAPLACIAN = "laplacian"
    ADJACENCY = "adjacency"
    DFT = "dft"
    CUSTOM = "custom"


def max_abs(a) -> float:
    """Norme max-abs (0 pour un tableau vide)"""
    a = np.asarray(a)
    return float(np.max(np.abs(a))) if a.size else 0.0


def unitarity_defect(u) -> float:
    """max(‖U·U* - I‖_max, ‖U*·U - I‖_max)"""
    u = np.asarray(u)
    eye = np.eye(u.shape[0])
    return max(max_abs(u @ u.conj().T - eye), max_abs(u.conj().T @ u - eye))


def as_complex(x, name: str = "x") -> np.ndarray:
    """Convertit en tableau complexe dense en refusant NaN/Inf"""
    arr = np.asarray(x, dtype=complex)
    if arr.size == 0:
        raise DimensionMismatchError(f"{name} est vide")
    if not np.all(np.isfinite(arr)):
        raise NonFiniteError(f"{name} contient des valeurs non finies")
    return arr


def check_length(x: np.ndarray, n: int, name: str = "x") -> None:
    if x.shape[0] != n:
        raise DimensionMismatchError(f"{name}: longueur {x.shape[0]} au lieu de {n}")


@dataclass(frozen=True, eq=False)
class SpectralBasis:
    """Base unitaire de vecteurs propres et valeurs propres réelles croissantes"""
    psi: np.ndarray
    lam: np.ndarray
    source: BasisSource = BasisSource.CUSTOM

    def __post_init__(self):
        psi = as_complex(self.psi, "psi")
        lam = np.asarray(self.lam, dtype=float)
        if psi.ndim != 2 or psi.shape[0] != psi.shape[1]:
            raise DimensionMismatchError(f"psi doit être carrée, forme {psi.shape}")
        if lam.shape != (psi.shape[0],):
            raise DimensionMismatchError(f"lam: forme {lam.shape} au lieu de ({psi.shape[0]},)")
        if not np.all(np.isfinite(lam)):
            raise NonFiniteError("valeurs propres non finies")
        if np.any(np.diff(lam) < 0):
            raise InvalidParameterError("les valeurs propres doivent être croissantes")
        defect = unitarity_defect(psi)
        if defect > get_settings().unitary_tol:
            raise InvalidParameterError(f"psi n'est pas unitaire (défaut {defect:.3e})")
        psi.setflags(write=False)
        lam.setflags(write=False)
        object.__setattr__(self, "psi", psi)
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "source", BasisSource(self.source))

    @property
    def n(self) -> int:
        return self.psi.shape[0]


def eig_sym(a, source=BasisSource.CUSTOM) -> SpectralBasis:
    """
    Décomposition d'une matrice réelle symétrique A = Ψ·Diag(λ)·Ψ*

    Valeurs propres croissantes; la première composante de module > 1e-12
    de chaque vecteur propre est rendue positive.
    """
    settings = get_settings()
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatchError(f"matrice carrée attendue, forme {a.shape}")
    if not np.all(np.isfinite(a)):
        raise NonFiniteError("matrice non finie")
    scale = max(1.0, max_abs(a))
    if max_abs(a - a.T) > settings.sign_tol * scale:
        raise InvalidParameterError("la matrice n'est pas symétrique")

    try:
        lam, vecs = scipy.linalg.eigh(a)
    except (np.linalg.LinAlgError, ValueError) as e:
        raise DecompositionError(f"eigh n'a pas convergé pour une matrice {a.shape[0]}x{a.shape[0]}: {e}")

    for k in range(vecs.shape[1]):
        column = vecs[:, k]
        significant = np.flatnonzero(np.abs(column) > settings.sign_tol)
        if significant.size and column[significant[0]] < 0:
            vecs[:, k] = -column

    residual = max_abs(a - (vecs * lam) @ vecs.T)
    if residual > settings.reconstruction_tol * scale:
        raise DecompositionError(
            f"résidu de reconstruction {residual:.3e} trop grand (n={a.shape[0]})")
    logger.debug("eig_sym n=%d source=%s résidu=%.2e", a.shape[0], BasisSource(source).value, residual)
    return SpectralBasis(vecs.astype(complex), lam, BasisSource(source))


def graph_basis(g: Graph, source=BasisSource.LAPLACIAN) -> SpectralBasis:
    """Base spectrale du Laplacien ou de l'adjacence d'un graphe"""
    source = BasisSource(source)
    if source == BasisSource.LAPLACIAN:
        return eig_sym(laplacian(g), source)
    if source == BasisSource.ADJACENCY:
        return eig_sym(adjacency(g), source)
    raise InvalidParameterError(f"source {source.value!r} non dérivable d'un graphe")


def dft_basis(m: int) -> SpectralBasis:
    """Matrice DFT unitaire Ψ_D[n,k] = e^{i·ω_k·n}/√m avec ω_k = 2πk/m"""
    if int(m) != m or m < 1:
        raise InvalidParameterError(f"m doit être un entier >= 1 (reçu {m!r})")
    m = int(m)
    omega = 2 * np.pi * np.arange(m) / m
    psi = np.exp(1j * np.outer(np.arange(m), omega)) / np.sqrt(m)
    return SpectralBasis(psi, omega, BasisSource.DFT)


def custom_basis(psi, lam=None) -> SpectralBasis:
    """Base unitaire fournie par l'utilisateur (valeurs propres nulles par défaut)"""
    psi = np.asarray(psi)
    if lam is None:
        lam = np.zeros(psi.shape[0])
    return SpectralBasis(psi, lam, BasisSource.CUSTOM)


def eigengap(b: SpectralBasis) -> float:
    """Plus petit écart entre valeurs propres consécutives"""
    if b.n < 2:
        return float("inf")
    return float(np.min(np.diff(b.lam)))


def clamp_eigenvalues(lam, zero_clamp: Optional[float] = None) -> np.ndarray:
    """Ramène à 0 les valeurs propres de module inférieur au seuil"""
    zero_clamp = get_settings().zero_clamp if zero_clamp is None else zero_clamp
    lam = np.asarray(lam, dtype=float)
    return np.where(np.abs(lam) < zero_clamp, 0.0, lam)


def gft(x, b: SpectralBasis) -> np.ndarray:
    """Transformée de Fourier sur graphe x̂ = Ψ*·x"""
    x = as_complex(x)
    check_length(x, b.n)
    return b.psi.conj().T @ x


def igft(xhat, b: SpectralBasis) -> np.ndarray:
    """Transformée inverse x = Ψ·x̂"""
    xhat = as_complex(xhat, "xhat")
    check_length(xhat, b.n, "xhat")
    return b.psi @ xhat
