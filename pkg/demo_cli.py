#!/usr/bin/env python3
"""
Démo d'isoshift - Tour des opérateurs de translation sans passer par la CLI
"""

import sys
from pathlib import Path

import numpy as np

# Ajouter src au path
sys.path.insert(0, str(Path(__file__).parent / "src"))

from isoshift.core import (
    BasisSource, FrequencyVariant, custom_basis, dft_basis, dt_translation, frequencies,
    generate, graph_basis, gto, hamiltonian, joint_graph_deviation, jto_kronecker,
    jto_spectral, jwss_check, power_spectrum, segarra_shift, isometry_defect,
    shift_permutation, transition_series, transition_spectral, translate, unitarity_defect,
    evolve, adjacency,
)
from isoshift.utils import format_bytes, format_residual, get_system_info


def print_header(title):
    """Affiche un en-tête formaté"""
    print("\n" + "=" * 60)
    print(f" {title}")
    print("=" * 60)


def demo_system_info():
    """Démo des informations système"""
    print_header("INFORMATIONS SYSTÈME")

    info = get_system_info()
    print(f"Plateforme: {info['platform']} ({info['machine']})")
    print(f"Mémoire disponible: {format_bytes(info['memory_available'])}")
    print(f"numpy {info['numpy']}, scipy {info['scipy']}")


def demo_discrete_time():
    """Translation en temps discret: permutation circulaire et décalage fractionnaire"""
    print_header("TEMPS DISCRET")

    x = np.array([1.0, 2.0, 3.0, 4.0])
    print(f"x = {x}")
    print(f"décalage circulaire: {shift_permutation(4) @ x}")
    print(f"écart T_D^1 / permutation (m=8): "
          f"{format_residual(np.max(np.abs(dt_translation(8, 1) - shift_permutation(8))))}")
    print(f"décalage de 0.5 échantillon: {np.round((dt_translation(4, 0.5) @ x).real, 4)}")


def demo_graph_translation():
    """GTO sur P2 et sur un cycle"""
    print_header("TRANSLATION SUR GRAPHE")

    p2 = generate("path", 2)
    b = graph_basis(p2)
    f = frequencies(FrequencyVariant.LAPLACIAN_SQRT, b)
    swap = gto(b, f, np.pi / np.sqrt(2))
    print("P2, κ = π/√2:")
    print(np.round(swap.t.real, 10))

    c8 = generate("cycle", 8)
    x = np.zeros(8)
    x[0] = 1.0
    for variant in (FrequencyVariant.LAPLACIAN_SQRT, FrequencyVariant.GIRAULT_REDUCED):
        bl = graph_basis(c8)
        op = gto(bl, frequencies(variant, bl), 1.0)
        moved = translate(op, x)
        print(f"\n{variant.value}: défaut d'unitarité {format_residual(unitarity_defect(op.t))}")
        print(f"  |T·δ_0| = {np.round(np.abs(moved), 3)}")
        print(f"  spectre conservé: "
              f"{format_residual(np.max(np.abs(power_spectrum(moved, bl) - power_spectrum(x, bl))))}")

    bd = custom_basis(dft_basis(8).psi)
    uniform = gto(bd, frequencies(FrequencyVariant.GAVILI_UNIFORM, bd), 1.0)
    print(f"\nPhases uniformes sur la base DFT: écart à la permutation "
          f"{format_residual(np.max(np.abs(uniform.t - shift_permutation(8))))}")

    ba = graph_basis(generate("erdos_renyi", 10, p=0.5, seed=7), BasisSource.ADJACENCY)
    op = gto(ba, frequencies(FrequencyVariant.GAVILI_UNIFORM, ba), 1.0)
    print(f"Erdős–Rényi (10, 0.5), base d'adjacence: unitarité {format_residual(unitarity_defect(op.t))}")


def demo_schrodinger():
    """Évolution de Schrödinger et équivalence avec le GTO aux temps entiers"""
    print_header("ÉVOLUTION DE SCHRÖDINGER")

    c8 = generate("cycle", 8)
    b = graph_basis(c8)
    f = frequencies(FrequencyVariant.LAPLACIAN_SQRT, b)
    h = hamiltonian(b, f)
    for t in (1, 2, 5):
        residual = np.max(np.abs(transition_spectral(h, t) - gto(b, f, t).t))
        print(f"t = {t}: transition vs GTO {format_residual(residual)}")
    residual = np.max(np.abs(transition_series(h, 1.0, tol=1e-12) - transition_spectral(h, 1.0)))
    print(f"série tronquée vs spectrale: {format_residual(residual)}")

    u0 = np.zeros(8)
    u0[0] = 1.0
    for t in (0.5, 1.0, 2.0):
        u = evolve(u0, h, t)
        print(f"u({t}): norme {np.linalg.norm(u):.12f}, |u| = {np.round(np.abs(u), 3)}")


def demo_joint():
    """Translation conjointe temps-sommet"""
    print_header("DOMAINE CONJOINT TEMPS-SOMMET")

    c4 = generate("cycle", 4)
    bg, bd = graph_basis(c4), dft_basis(3)
    fg = frequencies(FrequencyVariant.LAPLACIAN_SQRT, bg)
    for kappa, upsilon in ((1, 1), (0.5, 2), (3, 0)):
        kron = jto_kronecker(gto(bg, fg, kappa), 3, upsilon)
        spectral = jto_spectral(bg, bd, fg, kappa, upsilon)
        print(f"(κ={kappa}, υ={upsilon}): Kronecker vs spectrale "
              f"{format_residual(np.max(np.abs(kron.t - spectral.t)))}, "
              f"unitarité {format_residual(unitarity_defect(kron.t))}")

    print(f"\nGTO sur le graphe conjoint vs JTO (1, 1): {joint_graph_deviation(c4, 3, 1.0, 1.0):.4f}")

    p2 = generate("path", 2)
    shift = segarra_shift(adjacency(p2), generate("cycle", 3).weights)
    x = np.ones(6) / np.sqrt(6)
    print(f"Décalage de Segarra sur P2 × 3: défaut d'isométrie {isometry_defect(shift, x):.3f}")

    rng = np.random.default_rng(0)
    builder = lambda k, u: jto_kronecker(gto(bg, fg, k), 3, u)
    print("\nBruit blanc, écart du second moment sous T_J(1, 1):")
    ensemble = [rng.standard_normal((4, 3)) for _ in range(2000)]
    for k in (100, 500, 2000):
        report = jwss_check(ensemble[:k], [(1.0, 1.0)], builder)
        print(f"  K = {k:4d}: {format_residual(report.entries[0].moment_deviation)}")


def main():
    """Fonction principale de démonstration"""
    print("🔁 isoshift - Démonstration des opérateurs de translation")
    print("Cette démo parcourt les quatre domaines sans écrire de fichier.")

    try:
        demo_system_info()
        demo_discrete_time()
        demo_graph_translation()
        demo_schrodinger()
        demo_joint()

        print_header("DÉMO TERMINÉE")
        print("✅ Tous les calculs ont été exécutés.")
        print("Pour la ligne de commande: python main.py --help")

    except KeyboardInterrupt:
        print("\n\n❌ Démo interrompue par l'utilisateur")
    except Exception as e:
        print(f"\n\n❌ Erreur pendant la démo: {e}")
        import traceback
        traceback.print_exc()


if __name__ == "__main__":
    main()
