"""
Tests for the CSV census cache.
"""

from unittest.mock import patch

from utils.census_cache import (
    COLUMNS,
    cache_path,
    census_csv,
    load_census,
    read_census,
    write_census,
)
from utils.classification import classify_all
from utils.enumeration import enumerate_codes


def _records(n):
    codes = enumerate_codes(n, workers=1)
    return codes, classify_all(codes, workers=1, verify=False)


class TestCensusCsv:
    """Tests for the CSV rendering."""

    def test_n4_rows(self):
        _, records = _records(4)
        lines = census_csv(records).splitlines()
        assert lines[0] == ",".join(COLUMNS)
        assert lines[1] == "4,4,0,0,1,2,1,True"
        assert lines[2] == "4,41,1,1,,,,False"

    def test_genes_with_commas_are_quoted(self):
        _, records = _records(6)
        text = census_csv(records)
        multi = [r.code for r in records if "," in r.code]
        assert multi
        assert f'"{multi[0]}"' in text


class TestCacheFiles:
    """Tests for write_census and read_census."""

    def test_round_trip(self, tmp_path):
        codes, records = _records(5)
        path = write_census(5, records, tmp_path)
        assert path == cache_path(5, tmp_path)
        assert path.exists()

        cached = read_census(5, tmp_path)
        assert cached is not None
        cached_codes, cached_records = cached
        assert cached_codes == codes
        assert cached_records == records

    def test_missing_file(self, tmp_path):
        assert read_census(5, tmp_path) is None

    def test_corrupted_file_is_ignored(self, tmp_path):
        cache_path(5, tmp_path).write_text("not,a,census\n1,2,3\n")
        assert read_census(5, tmp_path) is None

    def test_wrong_n_is_ignored(self, tmp_path):
        _, records = _records(4)
        cache_path(5, tmp_path).write_text(census_csv(records))
        assert read_census(5, tmp_path) is None


class TestLoadCensus:
    """Tests for load_census."""

    def test_second_load_hits_the_cache(self, tmp_path):
        codes, records, cached = load_census(5, workers=1, verify=False, cache_dir=tmp_path)
        assert cached is False
        assert len(codes) == 6

        with patch("utils.census_cache.enumerate_codes") as enumerate_mock:
            again, again_records, cached = load_census(5, cache_dir=tmp_path)
        enumerate_mock.assert_not_called()
        assert cached is True
        assert again == codes
        assert again_records == records

    def test_without_cache(self, tmp_path):
        _, _, cached = load_census(4, use_cache=False, workers=1, cache_dir=tmp_path)
        assert cached is False
        assert not cache_path(4, tmp_path).exists()

    def test_unwritable_cache_is_not_fatal(self, tmp_path):
        with patch("utils.census_cache.atomic_write", side_effect=OSError("read-only")):
            codes, _, cached = load_census(4, workers=1, verify=False, cache_dir=tmp_path)
        assert cached is False
        assert len(codes) == 2
