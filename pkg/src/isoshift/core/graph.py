"""
Module core pour les graphes non orientés pondérés

Construction, validation, génération et sérialisation (liste d'arêtes)
des graphes, ainsi que leurs matrices structurelles (adjacence, Laplacien).
Les indices de sommets commencent à 0.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import networkx as nx
import numpy as np
from scipy.sparse.csgraph import connected_components

from ..config import get_settings
from .errors import (
    EdgeListParseError, GraphGenerationError, GraphValidationError,
    InvalidParameterError,
)

logger = logging.getLogger(__name__)

GRAPH_KINDS = ("cycle", "path", "complete", "grid", "erdos_renyi")


@dataclass(frozen=True)
class ValidationIssue:
    """Invariant violé, avec les indices fautifs"""
    kind: str                        # asymmetry | negative_weight | self_loop | disconnected | shape
    indices: Tuple[int, ...] = ()
    message: str = ""


@dataclass
class ValidationReport:
    """Rapport de validation d'une matrice de poids"""
    issues: List[ValidationIssue] = field(default_factory=list)
    components: Optional[np.ndarray] = None   # étiquette de composante par sommet

    @property
    def ok(self) -> bool:
        return not self.issues

    def kinds(self) -> List[str]:
        return [issue.kind for issue in self.issues]

    def messages(self) -> List[str]:
        return [issue.message for issue in self.issues]


def validate_weights(weights) -> ValidationReport:
    """Vérifie chaque invariant de Graph et rapporte toutes les violations"""
    report = ValidationReport()
    w = np.asarray(weights, dtype=float)

    if w.ndim != 2 or w.shape[0] != w.shape[1] or w.shape[0] < 1:
        report.issues.append(ValidationIssue("shape", tuple(w.shape),
                                             f"matrice de poids non carrée {w.shape}"))
        return report
    if not np.all(np.isfinite(w)):
        i, j = map(int, np.argwhere(~np.isfinite(w))[0])
        report.issues.append(ValidationIssue("non_finite", (i, j), f"poids non fini en ({i},{j})"))
        return report

    n = w.shape[0]
    for i, j in np.argwhere(np.triu(w != w.T, k=1)):
        report.issues.append(ValidationIssue(
            "asymmetry", (int(i), int(j)),
            f"asymétrie en ({i},{j}): {w[i, j]!r} != {w[j, i]!r}"))
    for i, j in np.argwhere(w < 0):
        report.issues.append(ValidationIssue("negative_weight", (int(i), int(j)),
                                             f"poids négatif en ({i},{j})"))
    for i in np.flatnonzero(np.diag(w) != 0):
        report.issues.append(ValidationIssue("self_loop", (int(i),), f"boucle sur le sommet {i}"))

    # Connexité par parcours en largeur sur les poids non nuls (symétrisés)
    mask = (w != 0) | (w.T != 0)
    n_components, labels = connected_components(mask.astype(np.int8), directed=False)
    report.components = labels
    if n > 1 and n_components > 1:
        groups: Dict[int, List[int]] = {}
        for vertex, label in enumerate(labels):
            groups.setdefault(int(label), []).append(vertex)
        detail = " | ".join(f"{label}: {members}" for label, members in groups.items())
        report.issues.append(ValidationIssue("disconnected", tuple(int(v) for v in labels),
                                             f"graphe non connexe ({n_components} composantes: {detail})"))
    return report


@dataclass(frozen=True, eq=False)
class Graph:
    """Graphe non orienté, pondéré et connexe"""
    weights: np.ndarray

    def __post_init__(self):
        w = np.array(self.weights, dtype=float)
        report = validate_weights(w)
        if not report.ok:
            raise GraphValidationError(report)
        w.setflags(write=False)
        object.__setattr__(self, "weights", w)

    @property
    def n(self) -> int:
        return self.weights.shape[0]

    def edges(self) -> List[Tuple[int, int, float]]:
        """Arêtes (i, j, w) avec i < j, dans l'ordre lexicographique"""
        rows, cols = np.nonzero(np.triu(self.weights, k=1))
        return [(int(i), int(j), float(self.weights[i, j])) for i, j in zip(rows, cols)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return np.array_equal(self.weights, other.weights)

    __hash__ = None


def validate(g: Graph) -> ValidationReport:
    """Rapport de validation d'un graphe existant (vide si tout va bien)"""
    return validate_weights(g.weights)


def adjacency(g: Graph) -> np.ndarray:
    """Matrice d'adjacence pondérée W_G (copie modifiable)"""
    return np.array(g.weights)


def laplacian(g: Graph) -> np.ndarray:
    """Laplacien combinatoire L_G = Diag(W·1) - W"""
    w = g.weights
    return np.diag(w.sum(axis=1)) - w


def _from_networkx(nx_graph: "nx.Graph", weight: float) -> Graph:
    nodes = sorted(nx_graph.nodes())
    w = nx.to_numpy_array(nx_graph, nodelist=nodes, weight=None, dtype=float)
    return Graph(w * weight)


def generate(kind: str, n: int, m: Optional[int] = None, p: Optional[float] = None,
             seed: Optional[int] = None, weight: float = 1.0) -> Graph:
    """
    Génère un graphe de référence

    kind: cycle | path | complete | grid (n × m, m = n par défaut) | erdos_renyi
    Les poids d'arêtes valent `weight` (1 par défaut). Erdős–Rényi exige une graine
    et recommence jusqu'à obtenir un graphe connexe.
    """
    kind = kind.replace("-", "_")
    if kind not in GRAPH_KINDS:
        raise InvalidParameterError(f"type de graphe inconnu: {kind!r}")
    if int(n) != n or n < 1:
        raise InvalidParameterError(f"n doit être un entier positif (reçu {n!r})")
    if not np.isfinite(weight) or weight <= 0:
        raise InvalidParameterError(f"poids d'arête invalide: {weight!r}")
    n = int(n)

    if kind == "cycle":
        # n <= 2: le cycle dégénère en chemin (ni boucle ni arête double)
        return _from_networkx(nx.cycle_graph(n) if n >= 3 else nx.path_graph(n), weight)
    if kind == "path":
        return _from_networkx(nx.path_graph(n), weight)
    if kind == "complete":
        return _from_networkx(nx.complete_graph(n), weight)
    if kind == "grid":
        m = n if m is None else m
        if int(m) != m or m < 1:
            raise InvalidParameterError(f"m doit être un entier positif (reçu {m!r})")
        return _from_networkx(nx.grid_2d_graph(n, int(m)), weight)

    # erdos_renyi
    if p is None or not 0 < p <= 1:
        raise InvalidParameterError(f"probabilité d'arête hors de ]0, 1]: {p!r}")
    if seed is None:
        raise InvalidParameterError("une graine (seed) est obligatoire pour erdos_renyi")
    retries = get_settings().er_max_retries
    rng = np.random.default_rng(seed)
    for attempt in range(retries):
        attempt_seed = int(rng.integers(0, 2**32 - 1))
        candidate = nx.gnp_random_graph(n, p, seed=attempt_seed)
        if n == 1 or nx.is_connected(candidate):
            logger.debug("erdos_renyi(n=%d, p=%g) connexe après %d essai(s)", n, p, attempt + 1)
            return _from_networkx(candidate, weight)
    raise GraphGenerationError(
        f"erdos_renyi(n={n}, p={p}) non connexe après {retries} essais: p trop petit pour n")


def load_edges(text: str) -> Graph:
    """
    Lit une liste d'arêtes "i j w" (une par ligne)

    Les lignes commençant par '#' sont des commentaires; une première ligne
    '#n=<N>' fixe le nombre de sommets, sinon N = 1 + indice maximal.
    """
    declared_n: Optional[int] = None
    edges: Dict[Tuple[int, int], float] = {}
    first_content = True

    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            header = line[1:].replace(" ", "")
            if first_content and header.startswith("n="):
                try:
                    declared_n = int(header[2:])
                except ValueError:
                    raise EdgeListParseError(f"en-tête invalide {line!r}", line_number)
                if declared_n < 1:
                    raise EdgeListParseError(f"nombre de sommets invalide {declared_n}", line_number)
            first_content = False
            continue
        first_content = False

        tokens = line.split()
        if len(tokens) != 3:
            raise EdgeListParseError(f"3 champs attendus 'i j w', reçu {line!r}", line_number)
        try:
            i, j, w = int(tokens[0]), int(tokens[1]), float(tokens[2])
        except ValueError:
            raise EdgeListParseError(f"valeur non numérique dans {line!r}", line_number)
        if i < 0 or j < 0:
            raise EdgeListParseError(f"indice de sommet négatif dans {line!r}", line_number)
        if not np.isfinite(w):
            raise EdgeListParseError(f"poids non fini dans {line!r}", line_number)

        key = (min(i, j), max(i, j))
        if key in edges and edges[key] != w:
            raise EdgeListParseError(
                f"arête {key} dupliquée avec des poids en conflit ({edges[key]!r} et {w!r})",
                line_number)
        edges[key] = w

    inferred_n = 1 + max((max(key) for key in edges), default=-1)
    if declared_n is None:
        if inferred_n == 0:
            raise EdgeListParseError("liste d'arêtes vide sans en-tête '#n='")
        n = inferred_n
    else:
        if declared_n < inferred_n:
            raise EdgeListParseError(f"en-tête n={declared_n} mais indice {inferred_n - 1} utilisé")
        n = declared_n

    w = np.zeros((n, n))
    for (i, j), value in edges.items():
        w[i, j] = value
        w[j, i] = value
    return Graph(w)


def save_edges(g: Graph) -> str:
    """Sérialise un graphe en liste d'arêtes (chaque arête une seule fois, i < j)"""
    lines = []
    edges = g.edges()
    if not edges:
        lines.append(f"#n={g.n}")
    for i, j, w in edges:
        lines.append(f"{i} {j} {w!r}")
    return "\n".join(lines) + "\n"


def joint_graph(g: Graph, m: int) -> Graph:
    """Produit cartésien de g et du cycle à m sommets: W_J = W_D ⊕ W_G"""
    if int(m) != m or m < 1:
        raise InvalidParameterError(f"m doit être un entier positif (reçu {m!r})")
    w_d = generate("cycle", int(m)).weights
    w_j = np.kron(w_d, np.eye(g.n)) + np.kron(np.eye(int(m)), g.weights)
    return Graph(w_j)
