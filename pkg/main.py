#!/usr/bin/env python3
"""
isoshift - Opérateurs de translation isométriques
Point d'entrée principal (ligne de commande)
"""

import sys
from pathlib import Path

# Ajouter le répertoire src au path pour les imports
sys.path.insert(0, str(Path(__file__).parent / "src"))

from isoshift.cli.main import main

if __name__ == "__main__":
    sys.exit(main())
