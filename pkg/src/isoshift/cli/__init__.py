"""
Module cli - ligne de commande et suites de vérification
"""

from .main import main, build_parser

__all__ = ['main', 'build_parser']
