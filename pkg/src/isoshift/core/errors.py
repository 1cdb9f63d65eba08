"""
Exceptions du package isoshift
"""

from typing import Optional


class IsoShiftError(Exception):
    """Erreur de base du package"""


class InvalidParameterError(IsoShiftError, ValueError):
    """Paramètre hors de son domaine de validité"""


class DimensionMismatchError(IsoShiftError, ValueError):
    """Dimensions incompatibles entre opérandes"""


class NonFiniteError(IsoShiftError, ValueError):
    """Entrée contenant NaN ou Inf"""


class GraphValidationError(IsoShiftError):
    """Graphe ne respectant pas les invariants (symétrie, poids, connexité)"""

    def __init__(self, report):
        self.report = report
        super().__init__("graphe invalide: " + "; ".join(report.messages()))


class EdgeListParseError(IsoShiftError):
    """Ligne mal formée ou arête en conflit dans une liste d'arêtes"""

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        prefix = f"ligne {line_number}: " if line_number is not None else ""
        super().__init__(prefix + message)


class GraphGenerationError(IsoShiftError):
    """Échec de génération (ex. Erdős–Rényi jamais connexe)"""


class IncompatibleBasisError(IsoShiftError):
    """Variante de fréquences incompatible avec la source de la base"""


class DecompositionError(IsoShiftError):
    """Échec de la décomposition spectrale"""


class SeriesConvergenceError(IsoShiftError):
    """Série exponentielle tronquée sans convergence"""


class DenseLimitError(IsoShiftError):
    """Opérateur conjoint trop grand pour être matérialisé"""


class SignalFormatError(IsoShiftError):
    """Fichier de signal ou de matrice illisible"""
