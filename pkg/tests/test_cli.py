import json
import re

import pytest

from lectern.gateway import AppConfig
from lectern.gateway.cli import main
from lectern.gateway.service import ReadingService

BODY = (
    "Glaciers carve valleys across the high ranges. Their slow weight grinds "
    "rock into flour. Meltwater streams carry the silt toward distant plains. "
    "Moraines mark every line where the ice once paused and then withdrew.\n\n"
    "Bakers knead dough in the cold hours before dawn. Proofing baskets line "
    "the wooden shelves in quiet rows. Steam from the first loaves fogs the "
    "front windows. Regulars queue outside long before the sign turns.\n\n"
    "Sailors mend canvas sails at anchor while gulls circle the mast. Rigging "
    "lines hum in the harbor wind. Charts stay weighted open on the table."
)


@pytest.fixture()
def article_file(tmp_path):
    path = tmp_path / "article.txt"
    path.write_text(BODY, encoding="utf-8")
    return path


def _lines(capsys) -> list[str]:
    return capsys.readouterr().out.strip().splitlines()


def _fields(lines: list[str], tag: str) -> list[list[str]]:
    return [line.split("\t") for line in lines if line.split("\t")[0] == tag]


class TestAnalyze:
    def test_reports_segmentation_and_reading_time(self, article_file, capsys):
        assert main(["analyze", str(article_file)]) == 0
        lines = _lines(capsys)
        by_tag = {line.split("\t")[0]: line.split("\t") for line in lines}
        assert by_tag["words"][1] == "94"
        assert by_tag["paragraphs"][1] == "3"
        assert by_tag["sentences"][1] == "11"
        assert by_tag["estimated_seconds"][1] == "37.6"
        assert len(_fields(lines, "paragraph")) == 3

    def test_time_filter_lines(self, article_file, capsys):
        assert main(["analyze", str(article_file), "--budget-seconds", "18"]) == 0
        lines = _lines(capsys)
        by_tag = {line.split("\t")[0]: line.split("\t") for line in lines}
        assert by_tag["budget_seconds"][1] == "18"
        assert by_tag["rate"][1] == "0.478723"
        selected = _fields(lines, "selected")
        assert len(selected) == int(by_tag["selected_sentences"][1])
        assert selected

    def test_report_files_written(self, article_file, tmp_path, capsys):
        out_dir = tmp_path / "report"
        rc = main(
            [
                "analyze",
                str(article_file),
                "--budget-seconds",
                "18",
                "--out-dir",
                str(out_dir),
            ]
        )
        assert rc == 0
        csv_path = out_dir / "paragraphs.csv"
        png_path = out_dir / "paragraphs.png"
        assert csv_path.exists() and csv_path.stat().st_size > 0
        assert png_path.exists() and png_path.stat().st_size > 0
        assert csv_path.read_text().splitlines()[0] == "paragraph,words,selected_words"
        report_lines = _fields(_lines(capsys), "report")
        assert report_lines == [["report", str(csv_path), str(png_path)]]

    def test_missing_input_is_user_error(self, tmp_path, capsys):
        rc = main(["analyze", str(tmp_path / "absent.txt")])
        assert rc == 1
        assert "error[not_found]" in capsys.readouterr().err

    def test_config_file_sets_reading_speed(self, article_file, tmp_path, capsys):
        config = tmp_path / "config.json"
        config.write_text(json.dumps({"words_per_minute": 300}))
        assert main(["analyze", str(article_file), "--config", str(config)]) == 0
        lines = _lines(capsys)
        by_tag = {line.split("\t")[0]: line.split("\t") for line in lines}
        assert by_tag["estimated_seconds"][1] == "18.8"

    def test_malformed_config_is_user_error(self, article_file, tmp_path, capsys):
        config = tmp_path / "config.json"
        config.write_text(json.dumps({"words_per_minutes": 300}))
        rc = main(["analyze", str(article_file), "--config", str(config)])
        assert rc == 1
        assert "error[invalid_request]" in capsys.readouterr().err


class TestQuestions:
    def test_one_question_per_unit(self, article_file, capsys):
        assert main(["questions", str(article_file)]) == 0
        lines = _lines(capsys)
        assert lines[0] == "backend\ttemplate_local"
        questions = _fields(lines, "question")
        assert [q[1] for q in questions] == ["q000", "q001", "q002"]
        assert all(q[3].endswith("?") for q in questions)


def _store_with_session(tmp_path) -> tuple[str, str]:
    """Runs a session against the service and returns (store_path, session_json)."""
    store = tmp_path / "store"
    service = ReadingService(AppConfig(store_path=str(store)))
    article = service.ingest(BODY)
    session = service.start_session(article.article_id)
    service.record_focus(session.session_id, 0, 0.0, 60.0)
    service.record_focus(session.session_id, 1, 60.0, 70.0)
    service.annotate(session.session_id, "note", 2, payload="check the rigging")
    service.finish_session(session.session_id)
    session_json = tmp_path / "session.json"
    session_json.write_text(json.dumps(session.to_record()), encoding="utf-8")
    return str(store), str(session_json)


class TestSummarize:
    def test_plain_summary(self, article_file, capsys):
        assert main(["summarize", str(article_file)]) == 0
        lines = _lines(capsys)
        by_tag = {line.split("\t")[0]: line.split("\t") for line in lines}
        assert by_tag["backend"][1] == "weighted_extractive_local"
        assert int(by_tag["word_budget"][1]) == 14  # floor(0.15 * 94)
        assert _fields(lines, "sentence")

    def test_session_file_personalizes_and_explains(self, article_file, tmp_path, capsys):
        _, session_json = _store_with_session(tmp_path)
        rc = main(
            [
                "summarize",
                str(article_file),
                "--session-file",
                session_json,
                "--max-output-tokens",
                "30",
                "--explain",
            ]
        )
        assert rc == 0
        lines = _lines(capsys)
        sentences = _fields(lines, "sentence")
        explanations = _fields(lines, "explanation")
        assert len(explanations) == len(sentences)
        kinds = {e[2] for e in explanations}
        assert kinds <= {"paragraph", "note", "highlight"}

    def test_store_path_loads_latest(self, article_file, tmp_path, capsys):
        store, _ = _store_with_session(tmp_path)
        rc = main(
            ["summarize", str(article_file), "--store-path", store, "--max-output-tokens", "25"]
        )
        assert rc == 0
        assert _fields(_lines(capsys), "sentence")

    def test_session_for_other_article_rejected(self, tmp_path, capsys):
        _, session_json = _store_with_session(tmp_path)
        other = tmp_path / "other.txt"
        other.write_text("Entirely different text about mills.", encoding="utf-8")
        rc = main(["summarize", str(other), "--session-file", session_json])
        assert rc == 1
        assert "error[not_found]" in capsys.readouterr().err

    def test_missing_session_file(self, article_file, tmp_path, capsys):
        rc = main(
            ["summarize", str(article_file), "--session-file", str(tmp_path / "no.json")]
        )
        assert rc == 1
        assert "error[not_found]" in capsys.readouterr().err


class TestSweep:
    def test_tabulates_21_rows(self, article_file, capsys):
        assert main(["sweep", str(article_file), "--target", "1"]) == 0
        lines = _lines(capsys)
        assert lines[0] == "weight\trouge_f1"
        rows = lines[1:]
        assert len(rows) == 21
        pattern = re.compile(r"^\d\.\d\t\d\.\d{9}$")
        assert all(pattern.match(row) for row in rows)
        assert rows[0].startswith("0.0\t")
        assert rows[-1].startswith("2.0\t")

    def test_report_files_written(self, article_file, tmp_path, capsys):
        out_dir = tmp_path / "sweep-report"
        rc = main(
            ["sweep", str(article_file), "--target", "0", "--out-dir", str(out_dir)]
        )
        assert rc == 0
        assert (out_dir / "sweep.csv").stat().st_size > 0
        assert (out_dir / "sweep.png").stat().st_size > 0
        header = (out_dir / "sweep.csv").read_text().splitlines()[0]
        assert header == "weight,rouge_f1"

    def test_unknown_target_is_user_error(self, article_file, capsys):
        rc = main(["sweep", str(article_file), "--target", "9"])
        assert rc == 1
        assert "error[unknown_paragraph]" in capsys.readouterr().err

    def test_missing_target_flag(self, article_file, capsys):
        assert main(["sweep", str(article_file)]) == 1


class TestEntrypoint:
    def test_help_exits_zero(self, capsys):
        assert main(["--help"]) == 0
        assert "Reading assistance" in capsys.readouterr().out

    def test_unknown_command(self, capsys):
        assert main(["frobnicate"]) == 1

    def test_console_script_registered(self):
        import importlib.metadata as md

        scripts = md.entry_points().select(group="console_scripts", name="lectern")
        assert any(ep.value == "lectern.gateway.cli:main" for ep in scripts)
