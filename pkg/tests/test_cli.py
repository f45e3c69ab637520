import io
import os
import subprocess
import sys

import pytest

from posslogic.cli import EXIT_INPUT, EXIT_LIMIT, EXIT_NOT_ESTABLISHED, EXIT_OK, main
from posslogic.parser import parse_trace


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


class TestProve:
    def test_meeting_all_refutations(self):
        code, out, _ = run("prove", "meeting.kb", "~quiet(m)", "--all-refutations")
        assert code == EXIT_OK
        lines = out.splitlines()
        assert "refutation 2 val=P 0.8" in lines
        assert lines[-1] == "RESULT val=N 0.6 unverified"

    def test_trace_round_trip(self):
        code, out, _ = run("prove", "meeting.kb", "~quiet(m)", "--trace")
        assert code == EXIT_OK
        assert "clause=[] val=N 0.6" in out
        assert sum(line.startswith("RESULT") for line in out.splitlines()) == 1
        assert parse_trace(out).valuation.degree == pytest.approx(0.6)

    def test_optimal_flag(self):
        code, out, _ = run("prove", "tweety-bird.kb", "flies(Tweety)")
        assert (code, out) == (EXIT_OK, "RESULT val=N 0.8 optimal\n")

    def test_antarctica(self):
        _, out, _ = run("prove", "tweety-antarctica.kb", "~flies(Tweety)")
        assert out == "RESULT val=N 0.9 optimal\n"

    def test_not_established(self):
        code, out, _ = run("prove", "tweety.kb", "flies(Tweety)")
        assert code == EXIT_NOT_ESTABLISHED
        assert out.startswith("RESULT none")

    def test_validate(self):
        code, out, _ = run("prove", "meeting-updated.kb", "quiet(m)", "--validate")
        assert code == EXIT_OK
        assert "beta=0.75 inc=0.6 valid=true support=C8,C11" in out
        code, out, _ = run("prove", "meeting-updated.kb", "~quiet(m)", "--validate")
        assert code == EXIT_NOT_ESTABLISHED
        assert "valid=false" in out

    def test_limit(self):
        code, out, _ = run("prove", "meeting.kb", "~quiet(m)", "--max-steps", "2")
        assert code == EXIT_LIMIT
        assert "incomplete" in out

    def test_bestfirst_engine(self):
        code, out, _ = run("prove", "tweety-bird.kb", "flies(Tweety)", "--engine", "bestfirst")
        assert code == EXIT_OK and "val=N 0.8" in out


class TestOtherCommands:
    def test_consistency(self):
        assert run("consistency", "meeting-updated.kb")[1] == "Inc=0.6 c=0.4\n"
        assert run("consistency", "meeting-updated.kb", "--semantic")[1] == "Inc=0.6 c=0.4\n"

    def test_extensions(self):
        out = run("extensions", "extensions.kb")[1].splitlines()
        assert out[0] == "{u, v}  rank=1 kept=A,B dropped=D"
        assert len(out) == 3

    @pytest.mark.parametrize("assume,want", [("true", "N 0.6"), ("false", "P 0.8"), ("open", "P 0.8")])
    def test_hypothesize(self, assume, want):
        code, out, _ = run(
            "hypothesize", "meeting.kb", "~quiet(m)", "--hyp", "comes(Bob,X)", "--assume", f"comes(Bob,m)={assume}"
        )
        assert code == EXIT_OK
        assert out.splitlines()[-1] == f"RESULT val={want} unverified under comes(Bob,m)={assume}"

    def test_hypothesize_without_hyps(self):
        assert run("hypothesize", "meeting.kb", "~quiet(m)")[1] == "RESULT val=N 0.6 unverified\n"


class TestErrors:
    def test_missing_file(self):
        code, _, err = run("prove", "no-such.kb", "p")
        assert code == EXIT_INPUT and err.startswith("error:")

    def test_bad_goal(self):
        code, _, err = run("prove", "meeting.kb", "~quiet(")
        assert code == EXIT_INPUT and "goal:1:" in err

    def test_bad_kb(self, tmp_path):
        path = tmp_path / "bad.kb"
        path.write_text("clause p : N 0.5\nclause q : X 1\n")
        code, _, err = run("consistency", str(path))
        assert code == EXIT_INPUT and ":2:" in err

    def test_bad_assumption(self):
        code, _, err = run("hypothesize", "meeting.kb", "~quiet(m)", "--hyp", "comes", "--assume", "comes(Bob,m)=maybe")
        assert code == EXIT_INPUT and "--assume" in err

    def test_nonpositive_limit(self):
        assert run("prove", "meeting.kb", "~quiet(m)", "--max-depth", "0")[0] == EXIT_INPUT


class TestDeterminism:
    def test_byte_identical_processes(self):
        argv = [sys.executable, "-m", "posslogic", "prove", "meeting.kb", "~quiet(m)", "--trace", "--all-refutations"]
        first = subprocess.run(argv, capture_output=True, check=True).stdout
        second = subprocess.run(argv, capture_output=True, check=True, env={**os.environ, "PYTHONHASHSEED": "123"}).stdout
        assert first == second and first
