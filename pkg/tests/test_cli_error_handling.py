#!/usr/bin/env python3
"""
Unit tests for error handling and exit codes in the parideals CLI.
"""

import unittest
import sys
import os
import io
from contextlib import redirect_stderr, redirect_stdout
from unittest.mock import patch

# Add src to the path so we can import the package
sys.path.insert(
    0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..", "src"))
)

from parideals.census import CountReport, VerifyReport  # noqa: E402
from parideals.cli import EXIT_MISMATCH, EXIT_USAGE, main, run  # noqa: E402
from parideals.errors import NotClassical  # noqa: E402
from parideals.types import CliConfig  # noqa: E402


class TestCliErrorHandling(unittest.TestCase):
    """Test cases for CLI error handling."""

    def setUp(self):
        """Set up test fixtures."""
        # Set up mock for logger
        self.logger_patcher = patch("parideals.cli.logger")
        self.mock_logger = self.logger_patcher.start()

        # Set up mock for sys.exit
        self.exit_patcher = patch("sys.exit")
        self.mock_exit = self.exit_patcher.start()

        self.stderr = io.StringIO()
        self.stdout = io.StringIO()

    def tearDown(self):
        """Tear down test fixtures."""
        self.logger_patcher.stop()
        self.exit_patcher.stop()

    def _main(self, argv):
        with redirect_stderr(self.stderr), redirect_stdout(self.stdout):
            main(argv)

    def test_invalid_rank(self):
        """B1 is not a root system: usage error."""
        self._main(["count", "--type", "B", "--rank", "1"])

        self.mock_exit.assert_called_once_with(EXIT_USAGE)
        self.assertIn("parideals: error:", self.stderr.getvalue())
        self.assertEqual(self.stdout.getvalue(), "")

    def test_unknown_family(self):
        """An unknown family letter is a usage error."""
        self._main(["table", "--type", "Q", "--rank", "3"])

        self.mock_exit.assert_called_once_with(EXIT_USAGE)

    def test_index_out_of_range(self):
        """A simple-root index above the rank is a usage error."""
        self._main(["count", "--type", "A", "--rank", "3", "--parabolic", "1,5"])

        self.mock_exit.assert_called_once_with(EXIT_USAGE)
        self.assertIn("outside 1..3", self.stderr.getvalue())

    def test_unparseable_parabolic(self):
        """Non-numeric indices are rejected by argparse."""
        with patch(
            "argparse.ArgumentParser.error", side_effect=SystemExit(2)
        ) as mock_error:
            with self.assertRaises(SystemExit):
                self._main(["count", "--type", "A", "--rank", "3", "--parabolic", "a"])
            mock_error.assert_called_once()

    def test_verbose_and_quiet_conflict(self):
        """Ensure --verbose and --quiet together trigger a parser error."""
        with patch(
            "argparse.ArgumentParser.error", side_effect=SystemExit(2)
        ) as mock_error:
            with self.assertRaises(SystemExit):
                self._main(["count", "--type", "A", "--rank", "2", "-v", "-q"])
            mock_error.assert_called_once()

    def test_count_mismatch(self):
        """A disagreeing census row exits with status 1."""
        bad = CountReport(
            type="C",
            rank=3,
            I=[],
            count_all=21,
            count_abelian=8,
            method="both",
            agreement=False,
        )
        with patch("parideals.cli.census_row", return_value=bad):
            self._main(["count", "--type", "C", "--rank", "3"])

        self.mock_exit.assert_called_once_with(EXIT_MISMATCH)
        self.mock_logger.error.assert_called_once()

    def test_verify_failures(self):
        """Each failed check is logged and the exit status is 1."""
        report = VerifyReport(type="B", rank=2, subsets=4, failures=["one", "two"])
        with patch("parideals.cli.verify", return_value=report):
            self._main(["verify", "--type", "B", "--rank", "2"])

        self.mock_exit.assert_called_once_with(EXIT_MISMATCH)
        self.assertEqual(self.mock_logger.error.call_count, 3)

    def test_table_mismatch_still_writes(self):
        """The table is printed before a mismatch is reported."""
        rows = [
            CountReport(
                type="G",
                rank=2,
                I=[],
                count_all=8,
                count_abelian=4,
                method="brute_force",
                agreement=False,
            )
        ]
        with patch("parideals.cli.full_census", return_value=rows):
            self._main(["table", "--type", "G", "--rank", "2"])

        self.mock_exit.assert_called_once_with(EXIT_MISMATCH)
        self.assertIn("MISMATCH", self.stdout.getvalue())

    def test_library_error(self):
        """Other package errors map to status 1."""
        with patch("parideals.cli.census_row", side_effect=NotClassical("boom")):
            self._main(["count", "--type", "A", "--rank", "2"])

        self.mock_exit.assert_called_once_with(EXIT_MISMATCH)

    def test_unknown_command(self):
        """run() rejects commands argparse would never produce."""
        with redirect_stderr(self.stderr):
            status = run(CliConfig(command="bogus", type="A", rank=2))

        self.assertEqual(status, EXIT_USAGE)


if __name__ == "__main__":
    unittest.main()
