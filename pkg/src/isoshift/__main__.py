"""
Point d'entrée principal pour l'exécution en module
python -m isoshift
"""

import sys

from .cli.main import main

if __name__ == "__main__":
    sys.exit(main())
