"""
Module core pour le domaine conjoint temps-sommet

Transformée de Fourier conjointe (JFT), translation conjointe (JTO) sous
forme de Kronecker et sous forme spectrale, opérateur de décalage de
Segarra et sa reformulation bivariée, et vérificateur empirique de
stationnarité conjointe au sens large (JWSS).

Convention de vectorisation: empilement des colonnes (indice de sommet le
plus rapide), de sorte que Ψ_J = Ψ_D ⊗ Ψ_G et A ⊕ B = A ⊗ I + I ⊗ B.
"""

import concurrent.futures
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
import psutil

from ..config import get_settings
from .discrete_time import dt_translation
from .errors import DenseLimitError, DimensionMismatchError, IncompatibleBasisError, InvalidParameterError
from .graph import Graph, joint_graph, validate_weights
from .spectral import BasisSource, SpectralBasis, as_complex, graph_basis, max_abs
from .translation import FrequencySpec, FrequencyVariant, TranslationOperator, frequencies, gto

logger = logging.getLogger(__name__)


class JointForm(str, Enum):
    KRONECKER = "kronecker"
    SPECTRAL = "spectral"
    SEGARRA = "segarra"
    SEGARRA_BIVARIATE = "segarra_bivariate"


@dataclass(frozen=True, eq=False)
class TimeVertexSignal:
    """Signal N×M: lignes = sommets, colonnes = instants"""
    x: np.ndarray

    def __post_init__(self):
        x = as_complex(self.x, "X")
        if x.ndim != 2:
            raise DimensionMismatchError(f"signal temps-sommet 2D attendu, forme {x.shape}")
        object.__setattr__(self, "x", x)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.x.shape

    def vec(self) -> np.ndarray:
        """vec(X): empilement des colonnes"""
        return self.x.reshape(-1, order="F")

    @classmethod
    def from_vec(cls, v, n: int, m: int) -> "TimeVertexSignal":
        v = as_complex(v, "v")
        if v.shape != (n * m,):
            raise DimensionMismatchError(f"vecteur de longueur {v.shape} au lieu de {n * m}")
        return cls(v.reshape((n, m), order="F"))


@dataclass(frozen=True, eq=False)
class JointOperator:
    """Opérateur (N·M)×(N·M) et ses paramètres"""
    t: np.ndarray
    kappa: float
    upsilon: float
    form: JointForm
    meta: Dict[str, Any] = field(default_factory=dict)

    def metadata(self) -> Dict[str, Any]:
        meta = {"form": self.form.value, "kappa": float(self.kappa), "upsilon": float(self.upsilon)}
        meta.update(self.meta)
        return meta


def _as_signal(X) -> TimeVertexSignal:
    return X if isinstance(X, TimeVertexSignal) else TimeVertexSignal(X)


def _require_dft(bd: SpectralBasis) -> None:
    if bd.source != BasisSource.DFT:
        raise IncompatibleBasisError(f"base temporelle DFT attendue (reçu {bd.source.value})")


def ensure_dense_allowed(n: int, m: int) -> None:
    """Refuse les opérateurs conjoints denses au-delà de la limite configurée"""
    size = n * m
    limit = get_settings().dense_limit
    if size > limit:
        raise DenseLimitError(
            f"N·M = {size} > {limit}: utiliser jto_apply (forme bilatérale T_G·X·T_D^T)")
    needed = 16 * size * size * 3   # opérateur + deux temporaires complexes
    available = psutil.virtual_memory().available
    if needed > available:
        logger.warning("opérateur conjoint %dx%d: %.1f Go requis, %.1f Go disponibles",
                       size, size, needed / 1024**3, available / 1024**3)


def jft(X, bg: SpectralBasis, bd: SpectralBasis) -> TimeVertexSignal:
    """X̂ = Ψ_G*·X·conj(Ψ_D)"""
    X = _as_signal(X)
    _require_dft(bd)
    n, m = X.shape
    if bg.n != n or bd.n != m:
        raise DimensionMismatchError(f"signal {n}x{m} pour des bases {bg.n} et {bd.n}")
    return TimeVertexSignal(bg.psi.conj().T @ X.x @ bd.psi.conj())


def ijft(Xhat, bg: SpectralBasis, bd: SpectralBasis) -> TimeVertexSignal:
    """X = Ψ_G·X̂·Ψ_D^T"""
    Xhat = _as_signal(Xhat)
    _require_dft(bd)
    n, m = Xhat.shape
    if bg.n != n or bd.n != m:
        raise DimensionMismatchError(f"spectre {n}x{m} pour des bases {bg.n} et {bd.n}")
    return TimeVertexSignal(bg.psi @ Xhat.x @ bd.psi.T)


def joint_basis(bg: SpectralBasis, bd: SpectralBasis) -> np.ndarray:
    """Ψ_J = Ψ_D ⊗ Ψ_G"""
    ensure_dense_allowed(bg.n, bd.n)
    return np.kron(bd.psi, bg.psi)


def joint_power_spectrum(X, bg: SpectralBasis, bd: SpectralBasis) -> np.ndarray:
    """|X̂[ℓ,k]|²"""
    return np.abs(jft(X, bg, bd).x) ** 2


def jto_kronecker(tg: TranslationOperator, m: int, upsilon: float) -> JointOperator:
    """T_J^(κ,υ) = T_D^υ ⊗ T_G^κ"""
    n = tg.t.shape[0]
    ensure_dense_allowed(n, m)
    t = np.kron(dt_translation(m, upsilon), tg.t)
    meta = dict(tg.metadata())
    meta["time_length"] = int(m)
    return JointOperator(t, tg.kappa, float(upsilon), JointForm.KRONECKER, meta)


def jto_apply(tg: TranslationOperator, X, upsilon: float) -> TimeVertexSignal:
    """Forme bilatérale T_G^κ·X·(T_D^υ)^T, sans matérialiser l'opérateur conjoint"""
    X = _as_signal(X)
    n, m = X.shape
    if tg.t.shape[0] != n:
        raise DimensionMismatchError(f"T_G de dimension {tg.t.shape[0]} pour {n} sommets")
    return TimeVertexSignal(tg.t @ X.x @ dt_translation(m, upsilon).T)


def joint_phases(fg: FrequencySpec, bd: SpectralBasis, kappa: float, upsilon: float) -> np.ndarray:
    """ζ[j·N + i] = κ·ϖ_i + υ·ω_j (diagonale de υM_D ⊕ κM_G)"""
    return np.add.outer(upsilon * bd.lam, kappa * fg.values).ravel()


def jto_spectral(bg: SpectralBasis, bd: SpectralBasis, fg: FrequencySpec,
                 kappa: float, upsilon: float) -> JointOperator:
    """T_J^(κ,υ) = Ψ_J·exp(-i·M_J^(κ,υ))·Ψ_J*"""
    _require_dft(bd)
    if fg.n != bg.n:
        raise DimensionMismatchError(f"{fg.n} fréquences pour une base de dimension {bg.n}")
    psi_j = joint_basis(bg, bd)
    zeta = joint_phases(fg, bd, kappa, upsilon)
    t = (psi_j * np.exp(-1j * zeta)) @ psi_j.conj().T
    meta = {"variant": fg.variant.value, "basis_source": bg.source.value, "time_length": bd.n}
    return JointOperator(t, float(kappa), float(upsilon), JointForm.SPECTRAL, meta)


def convolutivity_defect(op: JointOperator, bg: SpectralBasis, bd: SpectralBasis) -> float:
    """Plus grand module hors diagonale de Ψ_J*·T·Ψ_J"""
    psi_j = joint_basis(bg, bd)
    response = psi_j.conj().T @ op.t @ psi_j
    np.fill_diagonal(response, 0)
    return max_abs(response)


def _check_cycle_adjacency(wd: np.ndarray) -> None:
    m = wd.shape[0]
    if m >= 3:
        rows_ok = np.all(np.sum(wd == 1, axis=1) == 2) and np.all((wd == 0) | (wd == 1))
        if not rows_ok:
            raise InvalidParameterError("wd n'est pas l'adjacence d'un cycle (deux 1 par ligne attendus)")
    report = validate_weights(wd)
    if not report.ok:
        raise InvalidParameterError("wd n'est pas l'adjacence d'un cycle: " + "; ".join(report.messages()))


def segarra_shift(wg, wd) -> JointOperator:
    """S_J = W_D ⊕ W_G (réel, non isométrique en général)"""
    wg = np.asarray(wg, dtype=float)
    wd = np.asarray(wd, dtype=float)
    if wg.ndim != 2 or wg.shape[0] != wg.shape[1]:
        raise DimensionMismatchError(f"wg doit être carrée, forme {wg.shape}")
    if wd.ndim != 2 or wd.shape[0] != wd.shape[1]:
        raise DimensionMismatchError(f"wd doit être carrée, forme {wd.shape}")
    _check_cycle_adjacency(wd)
    n, m = wg.shape[0], wd.shape[0]
    ensure_dense_allowed(n, m)
    t = np.kron(wd, np.eye(n)) + np.kron(np.eye(m), wg)
    return JointOperator(t, 1.0, 1.0, JointForm.SEGARRA, {"time_length": m})


def isometry_defect(op: JointOperator, x) -> float:
    """| ‖T·x‖₂/‖x‖₂ - 1 |"""
    x = as_complex(x)
    if x.shape != (op.t.shape[1],):
        raise DimensionMismatchError(f"vecteur de longueur {x.shape} pour un opérateur {op.t.shape}")
    norm = np.linalg.norm(x)
    if norm == 0:
        raise InvalidParameterError("le vecteur nul n'a pas de défaut d'isométrie")
    return float(abs(np.linalg.norm(op.t @ x) / norm - 1.0))


def _nonnegative_integer(value, name: str) -> int:
    if int(value) != value or value < 0:
        raise InvalidParameterError(f"{name} doit être un entier >= 0 (reçu {value!r})")
    return int(value)


def segarra_bivariate(bg_adj: SpectralBasis, bd_adj: SpectralBasis, kappa: int, upsilon: int) -> JointOperator:
    """(Φ_D ⊗ Φ_G)·(Γ_D^υ ⊕ Γ_G^κ)·(Φ_D ⊗ Φ_G)*, puissances entières (0^0 = 1)"""
    kappa = _nonnegative_integer(kappa, "kappa")
    upsilon = _nonnegative_integer(upsilon, "upsilon")
    for name, b in (("bg_adj", bg_adj), ("bd_adj", bd_adj)):
        if b.source != BasisSource.ADJACENCY:
            raise IncompatibleBasisError(f"{name}: base d'adjacence attendue (reçu {b.source.value})")
    ensure_dense_allowed(bg_adj.n, bd_adj.n)
    phi = np.kron(bd_adj.psi, bg_adj.psi)
    diagonal = np.add.outer(np.power(bd_adj.lam, upsilon), np.power(bg_adj.lam, kappa)).ravel()
    t = (phi * diagonal) @ phi.conj().T
    return JointOperator(t, float(kappa), float(upsilon), JointForm.SEGARRA_BIVARIATE,
                         {"time_length": bd_adj.n})


def joint_graph_gto(g: Graph, m: int, kappa: float) -> TranslationOperator:
    """GTO à fréquences √λ sur le graphe conjoint 𝖩 = 𝖦 □ 𝖣"""
    ensure_dense_allowed(g.n, m)
    b = graph_basis(joint_graph(g, m))
    return gto(b, frequencies(FrequencyVariant.LAPLACIAN_SQRT, b), kappa)


def joint_graph_deviation(g: Graph, m: int, kappa: float, upsilon: float) -> float:
    """
    ‖GTO_𝖩(κ) - T_J^(κ,υ)‖_max avec des fréquences √λ des deux côtés

    Les deux opérateurs diffèrent en général: la phase du GTO sur 𝖩 est
    √(λ_g + λ_d) alors que celle du JTO est ϖ_g + ω_d.
    """
    bg = graph_basis(g)
    tg = gto(bg, frequencies(FrequencyVariant.LAPLACIAN_SQRT, bg), kappa)
    jto = jto_kronecker(tg, m, upsilon)
    return max_abs(joint_graph_gto(g, m, kappa).t - jto.t)


@dataclass(frozen=True)
class JWSSEntry:
    """Écarts de moments pour une translation (κ, υ)"""
    kappa: float
    upsilon: float
    mean_deviation: float
    moment_deviation: float
    passed: bool


@dataclass
class JWSSReport:
    """Diagnostic empirique de stationnarité conjointe (pas un test statistique)"""
    n_signals: int
    tol: float
    entries: List[JWSSEntry] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(entry.passed for entry in self.entries)


def _partial_moments(block: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    return block.sum(axis=1), block @ block.conj().T


def _tree_sum(parts: List[Tuple[np.ndarray, np.ndarray]]) -> Tuple[np.ndarray, np.ndarray]:
    """Réduction par paires dans un ordre fixe (indépendant du nombre de workers)"""
    while len(parts) > 1:
        merged = []
        for i in range(0, len(parts) - 1, 2):
            merged.append((parts[i][0] + parts[i + 1][0], parts[i][1] + parts[i + 1][1]))
        if len(parts) % 2:
            merged.append(parts[-1])
        parts = merged
    return parts[0]


def sample_moments(signals: Sequence, max_workers: Optional[int] = None,
                   progress_callback: Optional[Callable[[int, int], None]] = None
                   ) -> Tuple[np.ndarray, np.ndarray]:
    """Moyenne μ̂ et second moment non centré Ŝ = (1/K)·Σ x·x* des signaux vectorisés"""
    settings = get_settings()
    vectors = [_as_signal(s) for s in signals]
    if len(vectors) < 2:
        raise InvalidParameterError("au moins deux signaux sont nécessaires")
    shape = vectors[0].shape
    for index, s in enumerate(vectors):
        if s.shape != shape:
            raise DimensionMismatchError(f"signal {index}: forme {s.shape} au lieu de {shape}")

    data = np.stack([s.vec() for s in vectors], axis=1)
    k = data.shape[1]
    chunk = settings.jwss_chunk_size
    blocks = [data[:, i:i + chunk] for i in range(0, k, chunk)]
    parts: List[Optional[Tuple[np.ndarray, np.ndarray]]] = [None] * len(blocks)

    workers = max_workers or settings.max_workers
    with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as executor:
        future_to_index = {executor.submit(_partial_moments, block): i for i, block in enumerate(blocks)}
        done = 0
        for future in concurrent.futures.as_completed(future_to_index):
            parts[future_to_index[future]] = future.result()
            done += blocks[future_to_index[future]].shape[1]
            if progress_callback:
                progress_callback(done, k)

    total, second = _tree_sum(parts)
    return total / k, second / k


OperatorBuilder = Callable[[float, float], Union[JointOperator, np.ndarray]]


def jwss_check(signals: Sequence, shifts: Sequence[Tuple[float, float]], tg_builder: OperatorBuilder,
               tol: float = 1e-10, max_workers: Optional[int] = None,
               progress_callback: Optional[Callable[[int, int], None]] = None) -> JWSSReport:
    """
    Compare les moments empiriques avant et après chaque translation conjointe

    tg_builder(κ, υ) renvoie l'opérateur T_J (JointOperator ou matrice).
    Pour chaque (κ, υ): ‖T_J·μ̂ - μ̂‖_∞ et ‖T_J·Ŝ·T_J* - Ŝ‖_max.
    """
    if not shifts:
        raise InvalidParameterError("la liste des translations est vide")
    mean, second = sample_moments(signals, max_workers, progress_callback)

    report = JWSSReport(n_signals=len(signals), tol=float(tol))
    for kappa, upsilon in shifts:
        op = tg_builder(kappa, upsilon)
        t = op.t if isinstance(op, JointOperator) else np.asarray(op)
        if t.shape != second.shape:
            raise DimensionMismatchError(f"opérateur {t.shape} pour des signaux de dimension {mean.shape[0]}")
        mean_dev = max_abs(t @ mean - mean)
        moment_dev = max_abs(t @ second @ t.conj().T - second)
        report.entries.append(JWSSEntry(float(kappa), float(upsilon), mean_dev, moment_dev,
                                        mean_dev <= tol and moment_dev <= tol))
        logger.debug("jwss (κ=%g, υ=%g): moyenne %.2e, second moment %.2e",
                     kappa, upsilon, mean_dev, moment_dev)
    return report
