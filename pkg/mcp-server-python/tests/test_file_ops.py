"""
Unit tests for atomic file writes.
"""

import os
from unittest.mock import patch

import pytest

from utils.file_ops import atomic_write


class TestAtomicWrite:
    """Test suite for atomic_write."""

    def test_creates_file_and_parents(self, tmp_path):
        target = tmp_path / "cache" / "nested" / "codes_n4_v1.csv"
        atomic_write(target, "n,genes\n4,4\n")
        assert target.read_text(encoding="utf-8") == "n,genes\n4,4\n"

    def test_overwrites_existing_file(self, tmp_path):
        target = tmp_path / "out.txt"
        target.write_text("old")
        atomic_write(str(target), "new")
        assert target.read_text() == "new"

    def test_unicode_content(self, tmp_path):
        target = tmp_path / "ring.txt"
        atomic_write(target, "W_∅ ⟨632⟩")
        assert target.read_text(encoding="utf-8") == "W_∅ ⟨632⟩"

    def test_no_temporary_files_left(self, tmp_path):
        atomic_write(tmp_path / "a.csv", "x")
        assert [p.name for p in tmp_path.iterdir()] == ["a.csv"]

    def test_failed_rename_cleans_up(self, tmp_path):
        target = tmp_path / "a.csv"
        target.write_text("previous")
        with patch("utils.file_ops.os.replace", side_effect=OSError("rename failed")):
            with pytest.raises(OSError):
                atomic_write(target, "next")
        assert target.read_text() == "previous"
        assert [p.name for p in tmp_path.iterdir()] == ["a.csv"]

    def test_failed_write_cleans_up(self, tmp_path):
        with patch("utils.file_ops.os.write", side_effect=OSError("disk full")):
            with pytest.raises(OSError):
                atomic_write(tmp_path / "b.csv", "data")
        assert list(tmp_path.iterdir()) == []
        assert not os.path.exists(tmp_path / "b.csv")
