"""
Configuration globale d'isoshift

Les valeurs par défaut correspondent aux tolérances de double précision
utilisées par toutes les vérifications. Chaque champ peut être surchargé
par une variable d'environnement ISOSHIFT_<CHAMP> (en majuscules).
"""

import os
from dataclasses import dataclass, field, fields, replace
from functools import lru_cache
from typing import Mapping, Optional


def _default_workers() -> int:
    return min(os.cpu_count() or 4, 16)


@dataclass(frozen=True)
class Settings:
    """Réglages numériques partagés par les modules"""
    unitary_tol: float = 1e-10        # identités unitaires, Parseval
    reconstruction_tol: float = 1e-9  # résidu A - ΨΛΨ*
    group_tol: float = 1e-9           # loi de groupe, compositions
    zero_clamp: float = 1e-10         # |λ| sous ce seuil ramené à 0 avant sqrt
    sign_tol: float = 1e-12           # convention de signe des vecteurs propres
    eigengap_warning: float = 1e-8
    dense_limit: int = 4096           # N·M maximal pour un opérateur conjoint dense
    series_max_terms: int = 10_000
    er_max_retries: int = 100
    jwss_chunk_size: int = 256
    max_workers: int = field(default_factory=_default_workers)


def load_settings(environ: Optional[Mapping[str, str]] = None) -> Settings:
    """Construit les réglages à partir des variables ISOSHIFT_*"""
    from .core.errors import InvalidParameterError

    environ = os.environ if environ is None else environ
    overrides = {}
    for f in fields(Settings):
        key = f"ISOSHIFT_{f.name.upper()}"
        if key not in environ:
            continue
        raw = environ[key]
        caster = int if f.type in (int, "int") else float
        try:
            value = caster(raw)
        except ValueError:
            raise InvalidParameterError(f"{key}={raw!r} n'est pas un {caster.__name__} valide")
        if value <= 0:
            raise InvalidParameterError(f"{key} doit être strictement positif (reçu {raw!r})")
        overrides[f.name] = value
    return replace(Settings(), **overrides)


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Réglages du processus courant (lus une seule fois)"""
    return load_settings()
