"""
Utilitaires pour isoshift
Formats de fichiers (JSON de matrices complexes, CSV), journalisation et
informations système
"""

import csv
import json
import logging
import os
import platform
from pathlib import Path
from typing import Any, Dict, Optional, Sequence, Tuple, Union

import numpy as np
import psutil
import scipy
from colorama import Fore, Style

from isoshift.core import SignalFormatError

logger = logging.getLogger(__name__)

PathLike = Union[str, os.PathLike]

_LEVEL_COLORS = {
    logging.DEBUG: Fore.CYAN,
    logging.INFO: Fore.GREEN,
    logging.WARNING: Fore.YELLOW,
    logging.ERROR: Fore.RED,
    logging.CRITICAL: Fore.RED + Style.BRIGHT,
}


class ColorFormatter(logging.Formatter):
    """Colore le niveau de chaque message avec colorama"""

    def format(self, record: logging.LogRecord) -> str:
        color = _LEVEL_COLORS.get(record.levelno, "")
        message = super().format(record)
        return f"{color}[{record.levelname}]{Style.RESET_ALL} {message}"


def setup_logging(verbose: bool = False, stream=None) -> logging.Logger:
    """Installe un unique handler stderr pour le logger 'isoshift'"""
    root = logging.getLogger("isoshift")
    for handler in list(root.handlers):
        root.removeHandler(handler)
    handler = logging.StreamHandler(stream)
    handler.setFormatter(ColorFormatter("%(name)s: %(message)s"))
    root.addHandler(handler)
    root.setLevel(logging.DEBUG if verbose else logging.INFO)
    root.propagate = False
    return root


def format_float(value: float) -> str:
    """Représentation décimale la plus courte qui relit le même double"""
    return repr(float(value))


def format_residual(value: float) -> str:
    """Résidu lisible (notation scientifique)"""
    return f"{value:.3e}"


def matrix_to_dict(matrix, meta: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
    """Format JSON {"n_rows", "n_cols", "re", "im", "meta"} (lignes d'abord)"""
    a = np.asarray(matrix, dtype=complex)
    if a.ndim == 1:
        a = a.reshape(-1, 1)
    if a.ndim != 2:
        raise SignalFormatError(f"matrice 2D attendue, forme {a.shape}")
    return {
        "n_rows": int(a.shape[0]),
        "n_cols": int(a.shape[1]),
        "re": a.real.tolist(),
        "im": a.imag.tolist(),
        "meta": meta or {},
    }


def matrix_from_dict(data: Dict[str, Any]) -> Tuple[np.ndarray, Dict[str, Any]]:
    """Inverse de matrix_to_dict; vérifie les dimensions annoncées"""
    try:
        rows, cols = int(data["n_rows"]), int(data["n_cols"])
        re = np.asarray(data["re"], dtype=float)
        im = np.asarray(data.get("im", np.zeros((rows, cols))), dtype=float)
    except (KeyError, TypeError, ValueError) as e:
        raise SignalFormatError(f"JSON de matrice invalide: {e}")
    if re.shape != (rows, cols) or im.shape != (rows, cols):
        raise SignalFormatError(f"dimensions annoncées {rows}x{cols}, reçu {re.shape} / {im.shape}")
    return re + 1j * im, dict(data.get("meta") or {})


def export_matrix_json(matrix, output_path: PathLike, meta: Optional[Dict[str, Any]] = None) -> bool:
    """Exporte une matrice complexe en JSON (17 chiffres significatifs, sans perte)"""
    try:
        payload = matrix_to_dict(matrix, meta)
        with open(output_path, 'w', encoding='utf-8') as f:
            json.dump(payload, f, indent=2, ensure_ascii=False, allow_nan=False)
            f.write("\n")
        return True
    except (OSError, ValueError, SignalFormatError) as e:
        logger.error("échec de l'export JSON vers %s: %s", output_path, e)
        return False


def load_matrix_json(path: PathLike) -> Tuple[np.ndarray, Dict[str, Any]]:
    """Relit une matrice écrite par export_matrix_json"""
    try:
        with open(path, 'r', encoding='utf-8') as f:
            data = json.load(f)
    except (OSError, UnicodeDecodeError, json.JSONDecodeError) as e:
        raise SignalFormatError(f"lecture de {path} impossible: {e}")
    return matrix_from_dict(data)


def export_vector_csv(values: Sequence[float], output_path: PathLike) -> bool:
    """Exporte un vecteur réel, une valeur par ligne"""
    try:
        with open(output_path, 'w', newline='', encoding='utf-8') as f:
            writer = csv.writer(f, lineterminator="\n")
            for value in np.asarray(values, dtype=float).ravel():
                writer.writerow([format_float(value)])
        return True
    except (OSError, ValueError, TypeError) as e:
        logger.error("échec de l'export CSV vers %s: %s", output_path, e)
        return False


def export_grid_csv(grid, output_path: PathLike) -> bool:
    """Exporte une grille réelle N×M (lignes = sommets, colonnes = instants)"""
    try:
        a = np.asarray(grid, dtype=float)
        if a.ndim == 1:
            a = a.reshape(-1, 1)
        with open(output_path, 'w', newline='', encoding='utf-8') as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerows([[format_float(v) for v in row] for row in a])
        return True
    except (OSError, ValueError, TypeError) as e:
        logger.error("échec de l'export CSV vers %s: %s", output_path, e)
        return False


def export_trajectory_csv(times, states, output_path: PathLike) -> bool:
    """Une ligne par instantané: t, parties réelles, parties imaginaires"""
    try:
        states = np.asarray(states, dtype=complex)
        n = states.shape[1]
        header = ["t"] + [f"re_{i}" for i in range(n)] + [f"im_{i}" for i in range(n)]
        with open(output_path, 'w', newline='', encoding='utf-8') as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(header)
            for t, state in zip(times, states):
                writer.writerow([format_float(t)]
                                + [format_float(v) for v in state.real]
                                + [format_float(v) for v in state.imag])
        return True
    except (OSError, ValueError, TypeError, IndexError) as e:
        logger.error("échec de l'export de trajectoire vers %s: %s", output_path, e)
        return False


def load_csv_grid(path: PathLike) -> np.ndarray:
    """Lit un CSV réel: une valeur par ligne (vecteur) ou une grille N×M"""
    rows = []
    try:
        with open(path, 'r', newline='', encoding='utf-8') as f:
            for line_number, row in enumerate(csv.reader(f), start=1):
                cells = [cell.strip() for cell in row if cell.strip()]
                if not cells or cells[0].startswith("#"):
                    continue
                try:
                    rows.append([float(cell) for cell in cells])
                except ValueError:
                    raise SignalFormatError(f"{path}, ligne {line_number}: valeur non numérique")
    except (OSError, UnicodeDecodeError) as e:
        raise SignalFormatError(f"lecture de {path} impossible: {e}")
    if not rows:
        raise SignalFormatError(f"{path}: aucun échantillon")
    width = len(rows[0])
    if any(len(row) != width for row in rows):
        raise SignalFormatError(f"{path}: lignes de longueurs différentes")
    grid = np.asarray(rows, dtype=float)
    return grid[:, 0] if width == 1 else grid


def load_signal(path: PathLike) -> np.ndarray:
    """Signal depuis .csv (réel) ou .json (complexe); une colonne donne un vecteur"""
    suffix = Path(path).suffix.lower()
    if suffix == ".json":
        matrix, _ = load_matrix_json(path)
        return matrix[:, 0] if matrix.shape[1] == 1 else matrix
    if suffix == ".csv":
        return load_csv_grid(path)
    raise SignalFormatError(f"extension non reconnue pour {path} (attendu .csv ou .json)")


def get_system_info() -> Dict[str, Any]:
    """Informations système pour documenter la reproductibilité d'un calcul"""
    memory = psutil.virtual_memory()
    return {
        "platform": platform.system(),
        "platform_version": platform.version(),
        "machine": platform.machine(),
        "python": platform.python_version(),
        "cpu_count": os.cpu_count(),
        "memory_total": memory.total,
        "memory_available": memory.available,
        "numpy": np.__version__,
        "scipy": scipy.__version__,
    }


def format_bytes(size_bytes: int) -> str:
    """Formate une taille en unités lisibles"""
    if size_bytes <= 0:
        return "0 B"
    size_names = ["B", "KB", "MB", "GB", "TB"]
    i = min(int(np.floor(np.log(size_bytes) / np.log(1024))), len(size_names) - 1)
    return f"{round(size_bytes / 1024 ** i, 2)} {size_names[i]}"
