#!/usr/bin/env python3
"""
Unit tests for the parideals command-line interface.
"""

import unittest
import sys
import os
import io
import json
import tempfile
from pathlib import Path
from contextlib import redirect_stdout
from unittest.mock import patch

# Add src to the path so we can import the package
sys.path.insert(
    0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..", "src"))
)

from parideals.cli import main  # noqa: E402


def _run(argv):
    """Run ``main`` and return ``(exit status, stdout)``."""
    out = io.StringIO()
    with redirect_stdout(out):
        try:
            main(argv)
        except SystemExit as exc:
            return exc.code, out.getvalue()
    raise AssertionError("main() did not exit")


class TestCli(unittest.TestCase):
    """Test cases for the command-line interface."""

    def setUp(self):
        """Set up test fixtures."""
        # Patch logger to suppress output
        self.logger_patcher = patch("parideals.cli.logger")
        self.mock_logger = self.logger_patcher.start()

    def tearDown(self):
        """Tear down test fixtures."""
        self.logger_patcher.stop()

    def test_count_pretty(self):
        """count F4 prints both totals on one line."""
        code, output = _run(["count", "--type", "F", "--rank", "4", "--parabolic", ""])
        self.assertEqual(code, 0)
        self.assertEqual(
            output,
            "type=F4 I={} count_all=105 count_abelian=16 "
            "method=brute_force agreement=true\n",
        )

    def test_count_abelian_only(self):
        """--abelian-only prints just ♯Ab_I."""
        code, output = _run(
            ["count", "--type", "B", "--rank", "3", "--parabolic", "1"]
            + ["--abelian-only"]
        )
        self.assertEqual(code, 0)
        self.assertEqual(output, "3\n")

    def test_count_json(self):
        """JSON output is a list with one census row."""
        code, output = _run(
            ["count", "--type", "C", "--rank", "3", "--parabolic", "3"]
            + ["--format", "json"]
        )
        self.assertEqual(code, 0)
        rows = json.loads(output)
        self.assertEqual(len(rows), 1)
        self.assertEqual(rows[0]["count_all"], 10)
        self.assertEqual(rows[0]["count_abelian"], 4)
        self.assertEqual(rows[0]["method"], "both")
        self.assertTrue(rows[0]["agreement"])

    def test_verify(self):
        """verify C4 checks all sixteen subsets."""
        code, output = _run(["verify", "--type", "C", "--rank", "4"])
        self.assertEqual(code, 0)
        self.assertEqual(output, "formula==oracle for all 16 subsets\n")

    def test_table_csv(self):
        """table G2 in CSV has a header and one row per subset."""
        code, output = _run(["table", "--type", "G", "--rank", "2", "--format", "csv"])
        self.assertEqual(code, 0)
        lines = output.splitlines()
        self.assertEqual(
            lines[0], "type,rank,I,count_all,count_abelian,method,agreement"
        )
        self.assertEqual(lines[1], "G,2,,8,4,brute_force,true")
        self.assertEqual(lines[-1], "G,2,1 2,1,1,brute_force,true")
        self.assertEqual(len(lines), 5)

    def test_table_pretty(self):
        """The pretty table marks nodes of I with a filled circle."""
        code, output = _run(["table", "--type", "B", "--rank", "2"])
        self.assertEqual(code, 0)
        lines = output.splitlines()
        self.assertEqual(len(lines), 5)
        self.assertTrue(lines[1].startswith("∘ ∘"))
        self.assertTrue(lines[-1].startswith("• •"))
        self.assertNotIn("MISMATCH", output)

    def test_enumerate(self):
        """enumerate lists every ideal and the total."""
        code, output = _run(["enumerate", "--type", "A", "--rank", "2"])
        self.assertEqual(code, 0)
        self.assertTrue(output.endswith("total: 5\n"))

    def test_enumerate_json_abelian(self):
        """Abelian ideals of A3 as JSON records."""
        code, output = _run(
            ["enumerate", "--type", "A", "--rank", "3", "--abelian-only"]
            + ["--format", "json"]
        )
        self.assertEqual(code, 0)
        rows = json.loads(output)
        self.assertEqual(len(rows), 8)
        self.assertTrue(all(row["abelian"] for row in rows))
        self.assertEqual(rows[0], {"size": 0, "abelian": True, "minimal_roots": []})

    def test_antichains(self):
        """Histogram of antichain sizes for A3."""
        code, output = _run(
            ["antichains", "--type", "A", "--rank", "3", "--format", "json"]
        )
        self.assertEqual(code, 0)
        row = json.loads(output)
        self.assertEqual(row["histogram"], {"0": 1, "1": 6, "2": 6, "3": 1})

    def test_output_file(self):
        """-o writes to a file and leaves stdout empty."""
        with tempfile.TemporaryDirectory() as tmp:
            target = Path(tmp) / "g2.json"
            code, output = _run(
                ["table", "--type", "G", "--rank", "2", "--format", "json"]
                + ["-o", str(target)]
            )
            self.assertEqual(code, 0)
            self.assertEqual(output, "")
            rows = json.loads(target.read_text(encoding="utf-8"))
            self.assertEqual([r["count_all"] for r in rows], [8, 3, 4, 1])

    def test_repeated_runs_identical(self):
        """Output is byte-identical across runs."""
        argv = ["table", "--type", "C", "--rank", "3", "--format", "csv"]
        self.assertEqual(_run(argv), _run(argv))


if __name__ == "__main__":
    unittest.main()
