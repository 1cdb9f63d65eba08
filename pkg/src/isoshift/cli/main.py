"""
Interface en ligne de commande d'isoshift

Codes de sortie: 0 succès, 1 vérification en échec, 2 erreur d'usage ou
de validation.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional

import numpy as np
from colorama import Fore, Style
from colorama import init as colorama_init
from tqdm import tqdm

from isoshift import __version__
from isoshift.core import (
    BasisSource, FrequencyVariant, Graph, IsoShiftError, InvalidParameterError, DimensionMismatchError,
    adjacency, dft_basis, dt_translation, eig_sym, generate, graph_basis, gto, hamiltonian, jto_kronecker,
    jto_spectral, jwss_check, load_edges, power_spectrum, save_edges, segarra_bivariate, segarra_shift,
    trajectory,
)
from isoshift.core.translation import ORDERINGS
from isoshift.utils import (
    export_matrix_json, export_trajectory_csv, export_vector_csv, format_bytes, get_system_info,
    load_csv_grid, load_matrix_json, load_signal, setup_logging,
)

from .checks import (
    CLI_VARIANTS, CheckResult, parse_floats, parse_grid, prepare_variant, suite_group,
    suite_spectrum_invariance, suite_theorem1, suite_transition, suite_unitarity,
)

logger = logging.getLogger("isoshift.cli")

EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE = 0, 1, 2

OP_KINDS = ("gto", "dt", "jto", "jto-spectral", "segarra", "segarra-biv")
CHECK_SUITES = ("unitarity", "group", "spectrum-invariance", "theorem1", "transition", "jwss")


def _read_graph(path: str) -> Graph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise InvalidParameterError(f"lecture du graphe {path} impossible: {e}")
    return load_edges(text)


def _require(args, *names: str) -> None:
    missing = [f"--{name.replace('_', '-')}" for name in names if getattr(args, name) is None]
    if missing:
        raise InvalidParameterError(f"option(s) requise(s) pour {args.command}: {', '.join(missing)}")


def _variant_inputs(args) -> Dict:
    """Options de variante lues sur la ligne de commande"""
    variant = CLI_VARIANTS[args.variant]
    phi = load_csv_grid(args.phi_file) if args.phi_file else None
    values = load_csv_grid(args.values_file) if args.values_file else None
    if variant == FrequencyVariant.CUSTOM and values is None:
        raise InvalidParameterError("--variant custom exige --values-file")
    return {"variant": variant, "rho": args.rho, "phi": phi, "values": values,
            "basis": args.basis, "ordering": args.ordering}


def _write_output(ok: bool, path: str) -> int:
    if not ok:
        print(f"❌ Écriture impossible: {path}", file=sys.stderr)
        return EXIT_USAGE
    logger.info("📁 %s écrit", path)
    return EXIT_OK


# --- graph -------------------------------------------------------------------

def cmd_graph(args) -> int:
    g = generate(args.kind, args.n, m=args.m, p=args.p, seed=args.seed, weight=args.weight)
    text = save_edges(g)
    if args.output is None:
        sys.stdout.write(text)
        return EXIT_OK
    try:
        with open(args.output, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
    except OSError as e:
        logger.error("%s", e)
        return _write_output(False, args.output)
    return _write_output(True, args.output)


# --- op ----------------------------------------------------------------------

def cmd_operator(args) -> int:
    kind = args.kind
    if kind == "dt":
        _require(args, "time")
        matrix = dt_translation(args.time, args.upsilon)
        meta = {"kind": kind, "time_length": args.time, "upsilon": args.upsilon, "basis_source": "dft"}
        return _write_output(export_matrix_json(matrix, args.output, meta), args.output)

    _require(args, "graph")
    g = _read_graph(args.graph)

    if kind == "gto":
        b, f = prepare_variant(g, **_variant_inputs(args))
        op = gto(b, f, args.kappa)
        meta = {"kind": kind, **op.metadata()}
        return _write_output(export_matrix_json(op.t, args.output, meta), args.output)

    _require(args, "time")
    if kind in ("jto", "jto-spectral"):
        b, f = prepare_variant(g, **_variant_inputs(args))
        if kind == "jto":
            op = jto_kronecker(gto(b, f, args.kappa), args.time, args.upsilon)
        else:
            op = jto_spectral(b, dft_basis(args.time), f, args.kappa, args.upsilon)
    elif kind == "segarra":
        op = segarra_shift(adjacency(g), generate("cycle", args.time).weights)
    else:
        bd = eig_sym(generate("cycle", args.time).weights, BasisSource.ADJACENCY)
        bg = graph_basis(g, BasisSource.ADJACENCY)
        op = segarra_bivariate(bg, bd, _as_int(args.kappa, "--kappa"), _as_int(args.upsilon, "--upsilon"))
    meta = {"kind": kind, **op.metadata()}
    return _write_output(export_matrix_json(op.t, args.output, meta), args.output)


def _as_int(value: float, flag: str) -> int:
    if int(value) != value or value < 0:
        raise InvalidParameterError(f"{flag} doit être un entier >= 0 pour segarra-biv (reçu {value!r})")
    return int(value)


# --- apply / spectrum / evolve -------------------------------------------------

def _apply_snapshots(matrix: np.ndarray, x: np.ndarray, steps: int) -> np.ndarray:
    """États T^j·x pour j = 0..steps"""
    if matrix.shape[0] != matrix.shape[1]:
        raise DimensionMismatchError(f"--steps demande un opérateur carré (reçu {matrix.shape})")
    states = [np.asarray(x, dtype=complex)]
    for _ in range(steps):
        states.append(matrix @ states[-1])
    return np.stack(states)


def cmd_apply(args) -> int:
    matrix, meta = load_matrix_json(args.op)
    signal = load_signal(args.signal)
    if signal.ndim == 1:
        if signal.shape[0] != matrix.shape[1]:
            raise DimensionMismatchError(f"signal de longueur {signal.shape[0]} pour un opérateur {matrix.shape}")
        x = signal
    else:
        n, m = signal.shape
        if n * m != matrix.shape[1]:
            raise DimensionMismatchError(f"signal {n}x{m} pour un opérateur {matrix.shape}")
        x = signal.reshape(-1, order="F")

    if args.steps is not None:
        if args.steps < 1:
            raise InvalidParameterError(f"--steps doit être >= 1 (reçu {args.steps})")
        states = _apply_snapshots(matrix, x, args.steps)
        ok = export_trajectory_csv(np.arange(args.steps + 1), states, args.output)
        return _write_output(ok, args.output)

    result = matrix @ x
    if signal.ndim == 2:
        result = result.reshape(signal.shape, order="F")
    out_meta = {"operator": meta, "signal": str(Path(args.signal).name)}
    return _write_output(export_matrix_json(result, args.output, out_meta), args.output)


def cmd_spectrum(args) -> int:
    g = _read_graph(args.graph)
    b = graph_basis(g, BasisSource(args.basis or "laplacian"))
    spectrum = power_spectrum(load_signal(args.signal), b)
    return _write_output(export_vector_csv(spectrum, args.output), args.output)


def cmd_evolve(args) -> int:
    g = _read_graph(args.graph)
    b, f = prepare_variant(g, **_variant_inputs(args))
    h = hamiltonian(b, f)
    times, states = trajectory(load_signal(args.signal), h, args.t, args.steps, args.alpha)
    return _write_output(export_trajectory_csv(times, states, args.output), args.output)


# --- check ---------------------------------------------------------------------

def _print_results(results: List[CheckResult]) -> int:
    failures = 0
    for result in results:
        if result.passed:
            status = f"{Fore.GREEN}PASS{Style.RESET_ALL}"
        else:
            status = f"{Fore.RED}FAIL{Style.RESET_ALL}"
            failures += 1
        print(f"{status}  {result.name:<48} résidu={result.residual:.3e}  seuil={result.threshold:.0e}")
    if failures:
        print(f"❌ {failures} vérification(s) en échec sur {len(results)}")
        return EXIT_CHECK_FAILED
    print(f"✅ {len(results)} vérification(s) réussie(s)")
    return EXIT_OK


def _check_jwss(args) -> List[CheckResult]:
    _require(args, "signals_dir")
    directory = Path(args.signals_dir)
    if not directory.is_dir():
        raise InvalidParameterError(f"{directory}: répertoire de signaux introuvable")
    paths = sorted(p for p in directory.iterdir() if p.suffix.lower() in (".csv", ".json"))
    signals = []
    for path in paths:
        signal = load_signal(path)
        signals.append(signal.reshape(-1, 1) if signal.ndim == 1 else signal)
    if len(signals) < 2:
        raise InvalidParameterError(f"{directory}: au moins deux signaux requis ({len(signals)} trouvés)")
    n, m = signals[0].shape

    if args.graph is None:
        logger.info("pas de --graph: cycle à %d sommets", n)
        g = generate("cycle", n)
    else:
        g = _read_graph(args.graph)
    b, f = prepare_variant(g, **_variant_inputs(args))

    def builder(kappa: float, upsilon: float):
        return jto_kronecker(gto(b, f, kappa), m, upsilon)

    with tqdm(total=len(signals), desc="moments", unit="signal", disable=not args.progress) as bar:
        def progress(done: int, total: int) -> None:
            bar.update(done - bar.n)

        report = jwss_check(signals, parse_grid(args.grid), builder, tol=args.tol,
                            progress_callback=progress)

    results = []
    for entry in report.entries:
        label = f"(κ={entry.kappa:g}, υ={entry.upsilon:g})"
        results.append(CheckResult(f"jwss moyenne {label}", entry.mean_deviation, report.tol))
        results.append(CheckResult(f"jwss second moment {label}", entry.moment_deviation, report.tol))
    return results


def cmd_check(args) -> int:
    suite = args.suite
    if suite == "jwss":
        return _print_results(_check_jwss(args))

    _require(args, "graph")
    g = _read_graph(args.graph)
    kappas = parse_floats(args.kappas)
    if suite == "unitarity":
        results = suite_unitarity(g, kappas)
    elif suite == "group":
        results = suite_group(g, kappas)
    elif suite == "spectrum-invariance":
        results = suite_spectrum_invariance(g, kappas, args.seed)
    elif suite == "theorem1":
        results = suite_theorem1(g, args.time or 3, parse_grid(args.grid), args.seed)
    else:
        results = suite_transition(g, seed=args.seed)
    return _print_results(results)


# --- info ----------------------------------------------------------------------

def cmd_info(args) -> int:
    info = get_system_info()
    print(f"🖥️  Plateforme: {info['platform']} ({info['machine']})")
    print(f"🐍 Python: {info['python']}")
    print(f"⚡ CPU: {info['cpu_count']}")
    print(f"🧠 RAM: {format_bytes(info['memory_total'])} (disponible {format_bytes(info['memory_available'])})")
    print(f"🔢 numpy {info['numpy']}, scipy {info['scipy']}")
    return EXIT_OK


# --- parser --------------------------------------------------------------------

def _add_variant_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--variant", choices=sorted(CLI_VARIANTS), default="laplacian-sqrt",
                        help="fréquences du GTO (défaut: laplacian-sqrt)")
    parser.add_argument("--rho", type=float, help="borne ρ >= λ_max pour girault")
    parser.add_argument("--phi-file", help="CSV des phases pour gavili-phi")
    parser.add_argument("--values-file", help="CSV de la diagonale M_G pour custom")
    parser.add_argument("--basis", choices=("laplacian", "adjacency"), help="base pour custom")
    parser.add_argument("--ordering", choices=ORDERINGS,
                        help="ordre des phases gavili-e")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="isoshift", description="Opérateurs de translation isométriques sur graphes et en temps-sommet")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="journal détaillé")
    commands = parser.add_subparsers(dest="command", required=True)

    graph = commands.add_parser("graph", help="génération de graphes")
    graph_actions = graph.add_subparsers(dest="action", required=True)
    gen = graph_actions.add_parser("gen", help="génère une liste d'arêtes")
    gen.add_argument("--kind", required=True, choices=("cycle", "path", "complete", "grid", "erdos-renyi"))
    gen.add_argument("--n", type=int, required=True, help="nombre de sommets (lignes pour grid)")
    gen.add_argument("--m", type=int, help="colonnes pour grid")
    gen.add_argument("--p", type=float, help="probabilité d'arête (erdos-renyi)")
    gen.add_argument("--seed", type=int, help="graine (erdos-renyi)")
    gen.add_argument("--weight", type=float, default=1.0, help="poids des arêtes")
    gen.add_argument("-o", "--output", help="fichier de sortie (stdout par défaut)")
    gen.set_defaults(handler=cmd_graph)

    op = commands.add_parser("op", help="construit un opérateur (JSON)")
    op.add_argument("kind", choices=OP_KINDS)
    op.add_argument("--graph", help="liste d'arêtes du graphe")
    op.add_argument("--time", type=int, help="longueur M de l'axe temporel")
    _add_variant_options(op)
    op.add_argument("--kappa", type=float, default=0.0, help="translation sur le graphe")
    op.add_argument("--upsilon", type=float, default=0.0, help="translation temporelle")
    op.add_argument("-o", "--output", required=True)
    op.set_defaults(handler=cmd_operator)

    apply = commands.add_parser("apply", help="applique un opérateur JSON à un signal")
    apply.add_argument("--op", required=True)
    apply.add_argument("--signal", required=True)
    apply.add_argument("-o", "--output", required=True)
    apply.add_argument("--steps", type=int,
                       help="instantanés T^j·x pour j = 0..steps, en CSV de trajectoire")
    apply.set_defaults(handler=cmd_apply)

    spectrum = commands.add_parser("spectrum", help="spectre de puissance d'un signal")
    spectrum.add_argument("--graph", required=True)
    spectrum.add_argument("--signal", required=True)
    spectrum.add_argument("--basis", choices=("laplacian", "adjacency"))
    spectrum.add_argument("-o", "--output", required=True)
    spectrum.set_defaults(handler=cmd_spectrum)

    evolve_parser = commands.add_parser("evolve", help="trajectoire de Schrödinger (CSV)")
    evolve_parser.add_argument("--graph", required=True)
    _add_variant_options(evolve_parser)
    evolve_parser.add_argument("--t", type=float, required=True, help="temps d'évolution final")
    evolve_parser.add_argument("--alpha", type=float, default=1.0)
    evolve_parser.add_argument("--steps", type=int, default=10)
    evolve_parser.add_argument("--signal", required=True)
    evolve_parser.add_argument("-o", "--output", required=True)
    evolve_parser.set_defaults(handler=cmd_evolve)

    check = commands.add_parser("check", help="exécute une suite de vérifications")
    check.add_argument("suite", choices=CHECK_SUITES)
    check.add_argument("--graph")
    check.add_argument("--time", type=int)
    _add_variant_options(check)
    check.add_argument("--kappas", default="0.5,1,2.7")
    check.add_argument("--grid", default="1,1;0.5,2;3,0", help="couples κ,υ séparés par ';'")
    check.add_argument("--seed", type=int, default=0)
    check.add_argument("--signals-dir")
    check.add_argument("--tol", type=float, default=1e-10)
    check.add_argument("--progress", action="store_true", help="barre de progression (jwss)")
    check.set_defaults(handler=cmd_check)

    info = commands.add_parser("info", help="informations système")
    info.set_defaults(handler=cmd_info)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Point d'entrée principal de la ligne de commande"""
    colorama_init()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    setup_logging(args.verbose, sys.stderr)

    handler: Callable = args.handler
    try:
        return handler(args)
    except IsoShiftError as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
