"""
Package isoshift
Opérateurs de translation isométriques sur graphes, en temps discret
et dans le domaine conjoint temps-sommet
"""

__version__ = "1.0.0"
__author__ = "isoshift Team"
