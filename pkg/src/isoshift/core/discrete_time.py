"""
Translation circulaire en temps discret

Forme permutation (décalage circulaire à droite) et forme spectrale
T_D^υ = Ψ_D·exp(-iυ·M_D)·Ψ_D*, qui sert d'ancre à toutes les équivalences.
"""

import numpy as np

from .errors import InvalidParameterError, NonFiniteError
from .spectral import dft_basis
from .translation import spectral_operator


def shift_permutation(m: int) -> np.ndarray:
    """Matrice de colonnes [e_1, ..., e_{m-1}, e_0]: (T·x)[n] = x[(n-1) mod m]"""
    if int(m) != m or m < 1:
        raise InvalidParameterError(f"m doit être un entier >= 1 (reçu {m!r})")
    return np.roll(np.eye(int(m)), 1, axis=0)


def dt_translation(m: int, upsilon: float) -> np.ndarray:
    """Translation de υ échantillons (υ réel quelconque, décalage fractionnaire à bande limitée)"""
    if not np.isfinite(upsilon):
        raise NonFiniteError(f"upsilon non fini: {upsilon!r}")
    b = dft_basis(m)
    return spectral_operator(b, upsilon * b.lam)
