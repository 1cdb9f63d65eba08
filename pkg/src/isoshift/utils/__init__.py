"""
Module utils pour les fonctions utilitaires
"""

from .helpers import (
    setup_logging, format_float, format_residual, format_bytes,
    matrix_to_dict, matrix_from_dict, export_matrix_json, load_matrix_json,
    export_vector_csv, export_grid_csv, export_trajectory_csv,
    load_csv_grid, load_signal, get_system_info,
)

__all__ = [
    "setup_logging", "format_float", "format_residual", "format_bytes",
    "matrix_to_dict", "matrix_from_dict", "export_matrix_json", "load_matrix_json",
    "export_vector_csv", "export_grid_csv", "export_trajectory_csv",
    "load_csv_grid", "load_signal", "get_system_info",
]
