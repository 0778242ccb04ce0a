import json

import pytest

from conftest import T3_THIN, hg
from hyperfactor.exceptions import EXIT_CAP, EXIT_OK, EXIT_REJECTED, EXIT_USAGE
from hyperfactor.main import cli
from hyperfactor.models import ProductKind
from hyperfactor.services.formats import parse_text
from hyperfactor.services.hypergraphs import complete_graph, cycle_graph, path_graph
from hyperfactor.services.products import product


@pytest.fixture
def king(P3):
    return product(P3, P3, ProductKind.STRONG)[0]


def test_validate_accepts_a_thin_hypergraph(runner, hg_file):
    result = runner.invoke(cli, ["validate", str(hg_file(T3_THIN))])
    assert result.exit_code == EXIT_OK
    assert "thin: yes" in result.output


def test_validate_rejects_twins(runner, hg_file, T3):
    result = runner.invoke(cli, ["validate", str(hg_file(T3))])
    assert result.exit_code == EXIT_REJECTED
    assert "thin: no (N[0] = N[1])" in result.output
    assert "not thin" in result.output


def test_validate_rejects_disconnected_input(runner, hg_file):
    result = runner.invoke(cli, ["validate", str(hg_file(hg(4, (0, 1), (2, 3))))])
    assert result.exit_code == EXIT_REJECTED
    assert "not connected" in result.output


def test_validate_json(runner, hg_file):
    result = runner.invoke(cli, ["validate", "--json", str(hg_file(T3_THIN))])
    document = json.loads(result.output)
    assert document["simple"] and document["connected"] and document["thin"]


def test_malformed_input_is_a_usage_error(runner, tmp_path):
    path = tmp_path / "bad.hg"
    path.write_text("hypergraph 3 2\ne 0 1\n", encoding="utf-8")
    result = runner.invoke(cli, ["validate", str(path)])
    assert result.exit_code == EXIT_USAGE
    assert "header announces 2 edges" in result.output


def test_product_writes_the_text_format(runner, hg_file, K2):
    path = str(hg_file(K2))
    result = runner.invoke(cli, ["product", "--kind", "strong", path, path])
    assert result.exit_code == EXIT_OK
    assert parse_text(result.output) == complete_graph(4)


def test_product_json_carries_coordinates_and_classes(runner, hg_file, K2):
    path = str(hg_file(K2))
    result = runner.invoke(cli, ["product", "--kind", "cartesian", "--json", path, path])
    document = json.loads(result.output)
    assert document["kind"] == "cartesian"
    assert document["coordinates"]["dims"] == [2, 2]
    assert document["classification"] == [1, 0, 0, 1]


def test_product_vertex_cap_exits_with_cap_code(runner, hg_file, K2):
    path = str(hg_file(K2))
    result = runner.invoke(cli, ["--max-vertices", "3", "product", "--kind", "strong", path, path])
    assert result.exit_code == EXIT_CAP
    assert "cap exceeded: max_vertices=4 > 3" in result.output


def test_count_reports_the_overlap_discrepancy(runner, hg_file, K2):
    first = str(hg_file(K2, "k2.hg"))
    second = str(hg_file(hg(4, (0, 1, 2), (0, 1, 3)), "overlap.hg"))
    result = runner.invoke(cli, ["count", "--kind", "normal", first, second])
    assert result.exit_code == EXIT_OK
    assert "formula: 12" in result.output
    assert "enumerated: 10" in result.output
    assert "discrepancy: 2" in result.output


def test_count_formula_only(runner, hg_file, K2, T3):
    result = runner.invoke(
        cli, ["count", "--kind", "strong", "--formula-only", str(hg_file(K2, "a.hg")), str(hg_file(T3, "b.hg"))]
    )
    assert result.exit_code == EXIT_OK
    assert "formula: 6" in result.output
    assert "enumerated" not in result.output


def test_skeleton_of_the_king_graph(runner, hg_file, king, tmp_path):
    removed = tmp_path / "removed.hg"
    result = runner.invoke(cli, ["skeleton", "--json", "--removed", str(removed), str(hg_file(king))])
    document = json.loads(result.output)
    assert len(document["removed"]) == 8
    assert parse_text(removed.read_text(encoding="utf-8")).m == 8


def test_factorize_strong(runner, hg_file, king, tmp_path, P3):
    out_dir = tmp_path / "factors"
    result = runner.invoke(
        cli, ["factorize", "--kind", "strong", "--certificate", "--out-dir", str(out_dir), str(hg_file(king))]
    )
    assert result.exit_code == EXIT_OK
    assert "factors: 2" in result.output
    assert "certificate: valid" in result.output
    assert "time " not in result.output
    for i in range(2):
        assert parse_text((out_dir / f"factor_{i}.hg").read_text(encoding="utf-8")) == P3


def test_factorize_json_with_timing(runner, hg_file, king):
    result = runner.invoke(cli, ["factorize", "--kind", "normal", "--json", "--timing", str(hg_file(king))])
    document = json.loads(result.output)
    assert len(document["factors"]) == 2
    assert set(document["timings"]) == {"skeleton", "cartesian_pfd", "recombination", "certificate"}


def test_factorize_rejects_non_thin_input(runner, hg_file):
    result = runner.invoke(cli, ["factorize", "--kind", "strong", str(hg_file(complete_graph(4)))])
    assert result.exit_code == EXIT_REJECTED
    assert "not thin" in result.output


def test_factorize_cartesian(runner, hg_file, tmp_path):
    coords = tmp_path / "coords.json"
    result = runner.invoke(
        cli, ["factorize", "--kind", "cartesian", "--coords", str(coords), str(hg_file(cycle_graph(4)))]
    )
    assert result.exit_code == EXIT_OK
    assert "factors: 2" in result.output
    assert json.loads(coords.read_text(encoding="utf-8"))["dims"] == [2, 2]


def test_factorize_colour_class_cap(runner, hg_file):
    path = str(hg_file(cycle_graph(4)))
    result = runner.invoke(cli, ["--max-classes", "1", "factorize", "--kind", "cartesian", path])
    assert result.exit_code == EXIT_CAP
    assert "max_classes=2 > 1" in result.output


def test_factorize_help_mentions_the_colour_class_cap(runner):
    result = runner.invoke(cli, ["factorize", "--help"])
    assert result.exit_code == EXIT_OK
    assert "max_classes" in result.output


def test_factorize_prints_the_nesting(runner, hg_file, king):
    result = runner.invoke(cli, ["factorize", "--kind", "strong", str(hg_file(king))])
    assert "bracketing: H0 * H1" in result.output
    document = json.loads(runner.invoke(cli, ["factorize", "--kind", "strong", "--json", str(hg_file(king))]).output)
    assert document["bracketing"] == "H0 * H1"


def test_factorize_requires_a_kind(runner, hg_file):
    result = runner.invoke(cli, ["factorize", str(hg_file(T3_THIN))])
    assert result.exit_code == EXIT_USAGE


def test_iso_distance_and_two_section(runner, hg_file, T3):
    p3 = str(hg_file(path_graph(3), "p3.hg"))
    relabeled = str(hg_file(hg(3, (0, 2), (1, 2)), "q3.hg"))
    result = runner.invoke(cli, ["iso", p3, relabeled])
    assert result.exit_code == EXIT_OK
    assert result.output.startswith("isomorphic")

    result = runner.invoke(cli, ["distance", str(hg_file(hg(4, (0, 1, 2), (2, 3)), "d.hg")), "0", "3"])
    assert result.output == "2\n"

    result = runner.invoke(cli, ["two-section", str(hg_file(T3, "t3.hg"))])
    assert parse_text(result.output) == complete_graph(3)


def test_distance_out_of_range_vertex(runner, hg_file):
    result = runner.invoke(cli, ["distance", str(hg_file(path_graph(3))), "0", "7"])
    assert result.exit_code == EXIT_USAGE


def test_oracle_commands(runner, hg_file):
    result = runner.invoke(cli, ["oracle", "pfd", "--kind", "strong", str(hg_file(complete_graph(4)))])
    assert result.exit_code == EXIT_OK
    assert "factors: 2" in result.output

    result = runner.invoke(cli, ["oracle", "count", "--kind", "strong", "4", "2"])
    assert "value: 14" in result.output

    result = runner.invoke(cli, ["oracle", "distance", str(hg_file(hg(4, (0, 1), (2, 3)), "split.hg")), "0", "3"])
    assert "value: inf" in result.output


def test_oracle_dispensable_json(runner, hg_file, king):
    result = runner.invoke(cli, ["oracle", "dispensable", "--json", str(hg_file(king))])
    assert len(json.loads(result.output)["edges"]) == 8


def test_oracle_cap(runner, hg_file):
    result = runner.invoke(
        cli, ["--oracle-pfd-cap", "3", "oracle", "pfd", "--kind", "strong", str(hg_file(complete_graph(4)))]
    )
    assert result.exit_code == EXIT_CAP


def test_gen_is_reproducible(runner):
    args = ["gen", "--n", "6", "--seed", "3", "--require", "connected", "--require", "thin"]
    first = runner.invoke(cli, args)
    second = runner.invoke(cli, args)
    assert first.exit_code == EXIT_OK
    assert first.output == second.output
    assert first.output.startswith("# generated seed=3 n=6")
    assert parse_text(first.output).n == 6


def test_gen_clamps_rank_to_the_vertex_count(runner):
    result = runner.invoke(cli, ["gen", "--n", "2", "--rank-max", "3"])
    assert result.exit_code == EXIT_OK
    assert parse_text(result.output) == complete_graph(2)


def test_gen_attempt_budget_exhausted(runner):
    args = ["--gen-attempts", "20", "gen", "--n", "4", "--rank-max", "2", "--degree-max", "1", "--require", "connected"]
    result = runner.invoke(cli, args)
    assert result.exit_code == EXIT_CAP


def test_gen_rejects_a_negative_seed(runner):
    result = runner.invoke(cli, ["gen", "--n", "4", "--seed", "-1"])
    assert result.exit_code == EXIT_USAGE


def test_schema(runner):
    result = runner.invoke(cli, ["schema", "factorization"])
    assert result.exit_code == EXIT_OK
    assert "index_partition" in json.loads(result.output)["properties"]
