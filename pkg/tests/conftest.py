"""
Configuration pour les tests pytest
"""

import logging
import sys
from pathlib import Path

import numpy as np
import pytest

# Ajouter le répertoire src au Python path
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from isoshift.config import get_settings
from isoshift.core import generate


def pytest_configure(config):
    """Configuration globale des tests"""
    # Les réglages sont relus depuis l'environnement pour chaque session
    get_settings.cache_clear()


@pytest.fixture(autouse=True)
def reset_logging():
    """Remet le logger 'isoshift' dans son état initial après chaque test"""
    yield
    logger = logging.getLogger("isoshift")
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    logger.setLevel(logging.NOTSET)
    logger.propagate = True


@pytest.fixture
def rng():
    """Générateur aléatoire à graine fixe"""
    return np.random.default_rng(20240601)


@pytest.fixture
def p2():
    return generate("path", 2)


@pytest.fixture
def c4():
    return generate("cycle", 4)


@pytest.fixture
def c8():
    return generate("cycle", 8)


@pytest.fixture
def grid3():
    return generate("grid", 3, 3)


@pytest.fixture
def er10():
    return generate("erdos_renyi", 10, p=0.5, seed=7)


@pytest.fixture
def reference_graphs(p2, c4, c8, grid3, er10):
    """Graphes de référence des propriétés de groupe et d'unitarité"""
    return {"P2": p2, "C4": c4, "C8": c8, "grid3x3": grid3, "ER10": er10}


@pytest.fixture
def write_graph(tmp_path):
    """Écrit un graphe en liste d'arêtes et renvoie le chemin"""
    from isoshift.core import save_edges

    def _write(g, name="g.edges"):
        path = tmp_path / name
        path.write_text(save_edges(g), encoding="utf-8")
        return path

    return _write
