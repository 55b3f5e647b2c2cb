from pathlib import Path

import pytest
from click.testing import CliRunner

from timescore.cli import main
from timescore.display import format_decimal
from timescore.ingest import parse_season
from timescore.scoring import ScoringSystem
from timescore.standings import final_table

ROOT = Path(__file__).resolve().parent.parent
SEASON_CSV = ROOT / "data" / "synthetic_season.csv"
SEASON_JSON = ROOT / "data" / "synthetic_season.json"
GOLDEN = ROOT / "tests" / "golden"

COMMANDS = {
    "table": ["table.csv"],
    "evolution": ["evolution_classic.csv", "evolution_time.csv"],
    "indicators": ["indicators.csv", "indicators.json"],
    "ecdf": ["ecdf_classic.csv", "ecdf_time.csv"],
}


@pytest.fixture()
def runner():
    return CliRunner()


def _invoke(runner, command, out_dir, *extra, season=SEASON_CSV):
    return runner.invoke(
        main, [command, "--input", str(season), "--out", str(out_dir), *extra]
    )


@pytest.mark.parametrize("command,filenames", COMMANDS.items())
def test_commands_match_goldens_and_rerun_identically(
    runner, tmp_path, command, filenames
):
    first = tmp_path / "first"
    second = tmp_path / "second"
    for out_dir in (first, second):
        result = _invoke(runner, command, out_dir)
        assert result.exit_code == 0, result.output
    for name in filenames:
        once = (first / name).read_bytes()
        again = (second / name).read_bytes()
        assert once == again
        assert once == (GOLDEN / name).read_bytes()


def test_golden_table_cells_match_recomputation(runner):
    # Spot-check the frozen file against values recomputed from the library.
    season = parse_season(SEASON_CSV.read_bytes(), "csv")
    classic = final_table(season, ScoringSystem.CLASSIC)
    time_table = final_table(season, ScoringSystem.TIME)
    lines = (GOLDEN / "table.csv").read_text().splitlines()
    top = lines[1].split(",")
    assert top[1] == classic.rows[0].team
    assert top[2] == format_decimal(classic.rows[0].points, 2)
    assert top[4] == time_table.rows[0].team
    assert top[5] == format_decimal(time_table.rows[0].points, 2)


def test_evolution_row_counts(runner, tmp_path):
    result = _invoke(runner, "evolution", tmp_path, "--systems", "classic,time,mixed")
    assert result.exit_code == 0
    season = parse_season(SEASON_CSV.read_bytes(), "csv")
    expected_rows = season.num_rounds * len(season.teams)
    written = sorted(p.name for p in tmp_path.iterdir())
    assert written == ["evolution_classic.csv", "evolution_mixed.csv", "evolution_time.csv"]
    for path in tmp_path.iterdir():
        lines = path.read_text().splitlines()
        assert len(lines) == 1 + expected_rows


def test_csv_and_json_inputs_agree(runner, tmp_path):
    csv_out = tmp_path / "csv"
    json_out = tmp_path / "json"
    assert _invoke(runner, "table", csv_out).exit_code == 0
    assert _invoke(runner, "table", json_out, season=SEASON_JSON).exit_code == 0
    assert (csv_out / "table.csv").read_bytes() == (json_out / "table.csv").read_bytes()


def test_format_flag_overrides_suffix(runner, tmp_path):
    # The JSON file parsed as CSV must fail as data, not crash.
    result = _invoke(runner, "table", tmp_path, "--format", "csv", season=SEASON_JSON)
    assert result.exit_code == 1
    assert "MALFORMED_ROW" in result.stderr


def test_default_weights_flag_equivalence(runner, tmp_path):
    explicit = tmp_path / "explicit"
    implicit = tmp_path / "implicit"
    assert _invoke(runner, "table", explicit, "--weights", "3,1,0").exit_code == 0
    assert _invoke(runner, "table", implicit).exit_code == 0
    assert (explicit / "table.csv").read_bytes() == (implicit / "table.csv").read_bytes()


def test_decimal_comma_rendering(runner, tmp_path):
    result = _invoke(runner, "indicators", tmp_path, "--decimal-comma")
    assert result.exit_code == 0
    text = (tmp_path / "indicators.csv").read_text()
    first_gap_row = text.splitlines()[1]
    assert '"' in first_gap_row or "," in first_gap_row
    # Values like 31.6 render as "31,6" (quoted because the field now holds a comma).
    assert '"31,6"' in text or "31,6" in text.replace('"', "")
    assert "31.6" not in text


def test_empty_season_file_exits_one(runner, tmp_path):
    empty = tmp_path / "empty.csv"
    empty.write_text("round,home,away,goals,length_min\n")
    result = _invoke(runner, "table", tmp_path / "out", season=empty)
    assert result.exit_code == 1
    assert "EMPTY_SEASON" in result.stderr


def test_missing_input_exits_two(runner, tmp_path):
    result = _invoke(runner, "table", tmp_path, season=tmp_path / "nope.csv")
    assert result.exit_code == 2


def test_malformed_input_exits_one_with_line(runner, tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("round,home,away,goals,length_min\n1,Alpha,Beta,H:zz,\n")
    result = _invoke(runner, "table", tmp_path / "out", season=bad)
    assert result.exit_code == 1
    assert "MALFORMED_ROW" in result.stderr
    assert "line 2" in result.stderr


def test_unknown_system_exits_one(runner, tmp_path):
    result = _invoke(runner, "table", tmp_path, "--systems", "classic,elo")
    assert result.exit_code == 1
    assert "unknown scoring system" in result.stderr


def test_bad_weights_exit_one(runner, tmp_path):
    result = _invoke(runner, "table", tmp_path, "--weights", "1,2,3")
    assert result.exit_code == 1


def test_all_draws_fixture_gives_zero_gaps(runner, tmp_path):
    all_draws = tmp_path / "draws.csv"
    all_draws.write_text(
        "round,home,away,goals,length_min\n"
        "1,Alpha,Beta,,\n1,Gamma,Delta,,\n"
        "2,Beta,Alpha,,\n2,Delta,Gamma,,\n"
    )
    result = _invoke(runner, "indicators", tmp_path / "out", season=all_draws)
    assert result.exit_code == 0
    lines = (tmp_path / "out" / "indicators.csv").read_text().splitlines()
    for row in lines[1:4]:  # the three gap rows
        assert row.endswith(",0.0,0.0")


def test_bundled_fixture_time_gaps_at_most_classic(runner):
    season = parse_season(SEASON_CSV.read_bytes(), "csv")
    from timescore.indicators import compute_bundle

    time_bundle = compute_bundle(season, ScoringSystem.TIME)
    classic_bundle = compute_bundle(season, ScoringSystem.CLASSIC)
    assert time_bundle.gap_1_3_pct <= classic_bundle.gap_1_3_pct
    assert time_bundle.gap_1_9_pct <= classic_bundle.gap_1_9_pct
    assert time_bundle.gap_1_last_pct <= classic_bundle.gap_1_last_pct


def test_bundled_csv_and_json_parse_identically():
    csv_season = parse_season(SEASON_CSV.read_bytes(), "csv")
    json_season = parse_season(SEASON_JSON.read_bytes(), "json")
    assert csv_season == json_season


def test_stdout_lists_written_files(runner, tmp_path):
    result = _invoke(runner, "ecdf", tmp_path)
    assert result.exit_code == 0
    assert "ecdf_classic.csv" in result.output
    assert "ecdf_time.csv" in result.output
