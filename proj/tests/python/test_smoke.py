"""End-to-end smoke tests for the schemefusion Python module.

The heavy correctness checks live in the C++ unit and acceptance suites;
these tests pin the binding surface: argument conventions, JSON-ish shapes,
exact string entries, and error translation.
"""

import pytest

import schemefusion as sf


def labels_of(results):
    table = sf.fusion_labels()
    by_blocks = {str(blocks): label for label, blocks in table.items()}
    return {by_blocks[str(r["blocks"])] for r in results}


def test_catalog_and_scheme_properties():
    p9 = sf.catalog("paley", [9])
    assert p9.order == 9
    assert p9.rank == 3
    assert p9.valencies == [1, 4, 4]
    assert p9.symmetric
    assert p9.class_of(0, 0) == 0
    assert p9.p(1, 1, 1) == 1  # lambda of srg(9,4,1,2)
    assert "order=9" in repr(p9)

    names = {entry["name"] for entry in sf.catalog_list()}
    assert {"paley", "petersen", "clebsch", "rook"} <= names


def test_text_round_trip_and_verify():
    p5 = sf.catalog("paley", [5])
    again = sf.from_text(p5.text())
    assert again.relation_matrix() == p5.relation_matrix()

    matrices = [
        [[1, 0], [0, 1]],
        [[0, 1], [1, 0]],
    ]
    report = sf.verify(matrices)
    assert report["pass"] is True
    assert report["rank"] == 2
    assert [ax["pass"] for ax in report["axioms"]] == [True] * 5


def test_graph6_strongly_regular_check():
    pentagon = sf.from_graph6("Dhc")
    assert pentagon.valencies == [1, 2, 2]
    with pytest.raises(sf.SchemeError, match="AxiomViolation"):
        sf.from_graph6("D?{")  # a star is not strongly regular


def test_character_table_exact_strings():
    table = sf.character_table(sf.catalog("paley", [5]))
    assert table["rank"] == 3
    assert table["radicand"] == 5
    assert table["multiplicities"] == [1, 2, 2]
    assert table["entries"][0] == ["1", "2", "2"]
    assert table["entries"][1][1] == "-1/2+1/2*sqrt(5)"
    assert table["entries"][2][1] == "-1/2-1/2*sqrt(5)"


def test_hamming_and_products():
    h23 = sf.hamming(2, 3)
    assert h23.order == 9 and h23.valencies == [1, 4, 4]

    base = sf.catalog("paley", [9])
    h2, compositions = sf.generalized_hamming(base, 2)
    assert h2.order == 81
    assert h2.rank == 6
    assert len(compositions) == 6
    assert compositions[0] == [2, 0, 0]

    square = sf.tensor(base, base)
    assert square.rank == 9
    tower = sf.wreath(sf.catalog("complete", [2]), sf.catalog("complete", [2]))
    assert tower.valencies == [1, 1, 2]


def test_enumerate_fusions_matches_known_counts():
    base = sf.catalog("paley", [9])
    h2, _ = sf.generalized_hamming(base, 2)
    results = sf.enumerate_fusions(h2, method="both", threads=2)
    assert len(results) == 11
    assert labels_of(results) == {
        "identity", "trivial", "homogeneous",
        "(5)", "(5')", "(6)", "(7)", "(8)", "(9)", "(10)", "(10')",
    }

    petersen2, _ = sf.generalized_hamming(sf.catalog("petersen"), 2)
    assert len(sf.enumerate_fusions(petersen2)) == 3

    isolating = sf.isolating_fusions(h2, [3])
    assert labels_of(isolating) == {"(5)"}


def test_fused_scheme_and_lift_round_trip():
    base = sf.catalog("paley", [9])
    h2, _ = sf.generalized_hamming(base, 2)
    lifted = sf.fusion_lift([[0], [1, 2]], base_rank=3, n=2)
    assert lifted == [[0], [1, 2], [3, 4, 5]]

    fused = sf.fused_scheme(h2, lifted)
    assert fused.rank == 3
    assert fused.valencies == [1, 16, 64]  # srg(81, 16, 7, 2)
    table = sf.character_table(fused)
    assert table["entries"] == [["1", "16", "64"], ["1", "7", "-8"], ["1", "-2", "1"]]

    with pytest.raises(sf.SchemeError, match="NotAFusion"):
        sf.fused_scheme(h2, [[0], [1], [2], [3], [4, 5]])


def test_classify_and_feasibility():
    report = sf.classify(16, 5, 0, 2)  # the Clebsch graph
    assert report["spectrum"]["r"] == "1"
    assert report["spectrum"]["s"] == "-3"
    assert [fam["tag"] for fam in report["families"]] == ["T56ii", "T57ii"]
    assert report["predictedFusions"] == ["(10')", "(11')", "homogeneous"]
    assert report["feasibility"]["feasible"] is True

    infeasible = sf.feasibility(10, 3, 1, 1)
    assert infeasible["countingIdentity"] is False
    assert infeasible["feasible"] is False

    with pytest.raises(sf.SchemeError, match="BadParameter"):
        sf.catalog("paley", [8])


def test_universal_fusions_and_switch_partner():
    assert len(sf.universal_tensor_fusions(True)) == 13
    assert len(sf.universal_tensor_fusions(symmetric=False)) == 16

    labels = sf.fusion_labels()
    assert len(labels) == 21
    assert sf.switch_partner(labels["(5)"]) == labels["(5')"]
    assert sf.switch_partner(labels["homogeneous"]) == labels["homogeneous"]
