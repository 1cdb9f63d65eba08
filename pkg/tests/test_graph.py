"""
Tests unitaires pour les graphes (validation, génération, liste d'arêtes)
"""

import numpy as np
import pytest

from isoshift.core import (
    EdgeListParseError, Graph, GraphGenerationError, GraphValidationError,
    InvalidParameterError, adjacency, generate, joint_graph, laplacian,
    load_edges, save_edges, validate, validate_weights,
)


class TestLaplacian:
    """Tests pour le Laplacien combinatoire"""

    def test_laplacian_p2(self, p2):
        """P2: [[1,-1],[-1,1]]"""
        np.testing.assert_array_equal(laplacian(p2), [[1, -1], [-1, 1]])

    def test_laplacian_c4(self, c4):
        """C4: diagonale 2, -1 sur les arêtes du cycle"""
        L = laplacian(c4)
        np.testing.assert_array_equal(np.diag(L), [2, 2, 2, 2])
        for i in range(4):
            assert L[i, (i + 1) % 4] == -1
            assert L[i, (i + 2) % 4] == 0

    def test_laplacian_weighted_triangle(self):
        """Triangle pondéré: Diag(W·1) - W calculé à la main"""
        W = np.array([[0, 1, 2], [1, 0, 3], [2, 3, 0]], dtype=float)
        expected = np.diag([3.0, 4.0, 5.0]) - W
        np.testing.assert_array_equal(laplacian(Graph(W)), expected)

    def test_laplacian_annihilates_constant(self, reference_graphs):
        """L·1 = 0 pour chaque graphe de référence"""
        for name, g in reference_graphs.items():
            assert np.max(np.abs(laplacian(g) @ np.ones(g.n))) <= 1e-12, name

    def test_adjacency_is_a_copy(self, c4):
        """adjacency renvoie une copie modifiable"""
        W = adjacency(c4)
        W[0, 1] = 5.0
        assert c4.weights[0, 1] == 1.0


class TestValidation:
    """Tests pour la validation des graphes"""

    def test_valid_cycle_has_empty_report(self, c4):
        """C4: rapport vide"""
        report = validate(c4)
        assert report.ok
        assert report.issues == []

    def test_two_disjoint_edges_disconnected(self):
        """Deux arêtes disjointes: non connexe avec étiquettes de composantes"""
        W = np.zeros((4, 4))
        W[0, 1] = W[1, 0] = 1
        W[2, 3] = W[3, 2] = 1
        report = validate_weights(W)
        assert report.kinds() == ["disconnected"]
        labels = report.components
        assert labels[0] == labels[1]
        assert labels[2] == labels[3]
        assert labels[0] != labels[2]

    def test_negative_weight_reported(self):
        """Poids négatif en (0,1)"""
        W = np.array([[0, -1], [-1, 0]], dtype=float)
        report = validate_weights(W)
        assert "negative_weight" in report.kinds()
        assert any("(0,1)" in message for message in report.messages())

    def test_every_violation_reported(self):
        """Toutes les violations sont rapportées, pas seulement la première"""
        W = np.array([[1, 2, 0], [1, 0, 0], [0, 0, 0]], dtype=float)
        kinds = validate_weights(W).kinds()
        assert "asymmetry" in kinds
        assert "self_loop" in kinds
        assert "disconnected" in kinds

    def test_non_square_and_non_finite(self):
        """Forme invalide et NaN"""
        assert validate_weights(np.zeros((2, 3))).kinds() == ["shape"]
        assert validate_weights(np.array([[0, np.nan], [np.nan, 0]])).kinds() == ["non_finite"]

    def test_graph_constructor_rejects_invalid(self):
        """Graph lève GraphValidationError avec le rapport"""
        W = np.zeros((3, 3))
        W[0, 1] = W[1, 0] = 1
        with pytest.raises(GraphValidationError) as excinfo:
            Graph(W)
        assert excinfo.value.report.kinds() == ["disconnected"]

    def test_graph_is_immutable(self, c4):
        """Les poids d'un graphe ne sont pas modifiables"""
        with pytest.raises(ValueError):
            c4.weights[0, 1] = 3.0

    def test_single_vertex_graph(self):
        """Un sommet isolé est un graphe connexe trivial"""
        g = Graph(np.zeros((1, 1)))
        assert g.n == 1
        assert g.edges() == []


class TestGenerate:
    """Tests pour les générateurs de graphes"""

    def test_cycle_m4(self):
        """Cycle à 4 sommets: 4 arêtes, degré 2 partout"""
        g = generate("cycle", 4)
        assert len(g.edges()) == 4
        np.testing.assert_array_equal(g.weights.sum(axis=1), [2, 2, 2, 2])

    def test_path_n2(self, p2):
        """Chemin à 2 sommets: une seule arête"""
        assert generate("path", 2).edges() == [(0, 1, 1.0)]
        assert p2.n == 2

    def test_small_cycle_degenerates_to_path(self):
        """Cycle à 2 sommets: pas d'arête double"""
        assert generate("cycle", 2) == generate("path", 2)

    def test_complete_and_grid(self):
        """Graphe complet et grille n × m"""
        assert len(generate("complete", 5).edges()) == 10
        grid = generate("grid", 2, 3)
        assert grid.n == 6
        assert len(grid.edges()) == 7

    def test_erdos_renyi_deterministic(self, er10):
        """Même graine: graphes identiques"""
        again = generate("erdos-renyi", 10, p=0.5, seed=7)
        assert again == er10
        assert validate(er10).ok

    def test_erdos_renyi_requires_seed_and_probability(self):
        """Graine obligatoire, p dans ]0, 1]"""
        with pytest.raises(InvalidParameterError):
            generate("erdos_renyi", 10, p=0.5)
        with pytest.raises(InvalidParameterError):
            generate("erdos_renyi", 10, p=0.0, seed=1)
        with pytest.raises(InvalidParameterError):
            generate("erdos_renyi", 10, p=1.5, seed=1)

    def test_erdos_renyi_never_connected(self):
        """p trop petit: échec explicite après les essais"""
        with pytest.raises(GraphGenerationError):
            generate("erdos_renyi", 20, p=0.01, seed=1)

    def test_custom_weight(self):
        """Poids d'arête uniforme personnalisé"""
        g = generate("path", 3, weight=2.5)
        assert g.edges() == [(0, 1, 2.5), (1, 2, 2.5)]

    def test_invalid_parameters(self):
        """Type inconnu, n nul, poids négatif"""
        with pytest.raises(InvalidParameterError):
            generate("star", 4)
        with pytest.raises(InvalidParameterError):
            generate("cycle", 0)
        with pytest.raises(InvalidParameterError):
            generate("cycle", 4, weight=-1.0)


class TestEdgeList:
    """Tests pour le format liste d'arêtes"""

    def test_load_weighted_path(self):
        """'0 1 1.0 / 1 2 2.0' -> P3 de poids 1 et 2"""
        g = load_edges("0 1 1.0\n1 2 2.0")
        assert g.n == 3
        assert g.edges() == [(0, 1, 1.0), (1, 2, 2.0)]

    def test_consistent_duplicate_accepted(self):
        """Doublon symétrique cohérent accepté"""
        g = load_edges("0 1 1.0\n1 0 1.0")
        assert g.edges() == [(0, 1, 1.0)]

    def test_conflicting_duplicate_rejected(self):
        """Doublon en conflit: erreur avec numéro de ligne"""
        with pytest.raises(EdgeListParseError) as excinfo:
            load_edges("0 1 1.0\n1 0 2.0")
        assert excinfo.value.line_number == 2

    def test_malformed_line(self):
        """Ligne mal formée signalée avec son numéro"""
        with pytest.raises(EdgeListParseError) as excinfo:
            load_edges("# commentaire\n0 1 1.0\n1 x 2.0\n")
        assert excinfo.value.line_number == 3
        with pytest.raises(EdgeListParseError):
            load_edges("0 1\n")

    def test_header_overrides_vertex_count(self):
        """'#n=' fixe le nombre de sommets"""
        with pytest.raises(GraphValidationError):
            load_edges("#n=3\n0 1 1.0\n")
        with pytest.raises(EdgeListParseError):
            load_edges("#n=1\n0 1 1.0\n")
        assert load_edges("#n=1\n").n == 1

    def test_empty_list_rejected(self):
        """Liste vide sans en-tête"""
        with pytest.raises(EdgeListParseError):
            load_edges("\n# rien\n")

    def test_round_trip(self, reference_graphs):
        """load(save(g)) == g"""
        for name, g in reference_graphs.items():
            assert load_edges(save_edges(g)) == g, name

    def test_save_cycle_has_one_line_per_edge(self, c8):
        """C8: 8 lignes, chaque arête une seule fois"""
        text = save_edges(c8)
        lines = text.splitlines()
        assert len(lines) == 8
        assert lines[0] == "0 1 1.0"
        assert text.endswith("\n")

    def test_save_keeps_full_precision(self):
        """Les poids sont écrits sans perte"""
        W = np.array([[0, 0.1 + 0.2], [0.1 + 0.2, 0]])
        g = Graph(W)
        assert load_edges(save_edges(g)) == g

    def test_save_single_vertex_writes_header(self):
        """Sans arête, l'en-tête garde le nombre de sommets"""
        g = Graph(np.zeros((1, 1)))
        assert save_edges(g) == "#n=1\n"
        assert load_edges(save_edges(g)) == g


class TestJointGraph:
    """Tests pour le produit cartésien avec le cycle temporel"""

    def test_joint_graph_laplacian_is_kronecker_sum(self, c4):
        """L_J = L_D ⊗ I + I ⊗ L_G"""
        m = 3
        j = joint_graph(c4, m)
        L_D = laplacian(generate("cycle", m))
        expected = np.kron(L_D, np.eye(4)) + np.kron(np.eye(m), laplacian(c4))
        assert j.n == 12
        np.testing.assert_allclose(laplacian(j), expected, atol=1e-12)

    def test_joint_graph_with_single_instant(self, c4):
        """M = 1: le graphe conjoint est le graphe lui-même"""
        assert joint_graph(c4, 1) == c4
