import threading
from pathlib import Path

import pytest

from fuzzyrank import bundled
from fuzzyrank.ingest import HeaderMismatch, SchemaViolation
from fuzzyrank.model import InvalidDataset
from fuzzyrank.store import InvalidName, SchemeStore

GOOD_CSV = "id,C1,C2,C3\nA,3.5,F,4\nB,3.9,S,2\n"


@pytest.fixture()
def scheme_text():
    return Path(bundled.scheme_path("academic")).read_text(encoding="utf-8")


@pytest.fixture()
def store(tmp_path):
    return SchemeStore(tmp_path / "store")


class TestSchemes:
    def test_empty_store_lists_nothing(self, store):
        assert store.list_schemes() == []

    def test_put_then_get(self, store, scheme_text):
        store.put_scheme("academic", scheme_text)
        assert store.list_schemes() == ["academic"]
        assert store.get_scheme("academic").criterion_ids() == ["C1", "C2", "C3"]

    def test_persisted_form_is_canonical(self, store, scheme_text):
        # whitespace changes disappear on storage
        store.put_scheme("academic", scheme_text.replace("\n", " ", 3))
        assert store.get_scheme_text("academic") == scheme_text

    def test_overwrite_replaces(self, store, scheme_text):
        store.put_scheme("academic", scheme_text)
        store.put_scheme("academic", scheme_text.replace('"academic"', '"renamed"', 1))
        assert store.get_scheme("academic").name == "renamed"
        assert store.list_schemes() == ["academic"]

    def test_listing_is_sorted(self, store, scheme_text):
        for name in ("zeta", "alpha", "mid"):
            store.put_scheme(name, scheme_text)
        assert store.list_schemes() == ["alpha", "mid", "zeta"]

    def test_missing_scheme_raises_key_error(self, store):
        with pytest.raises(KeyError):
            store.get_scheme("ghost")

    def test_invalid_scheme_text_not_stored(self, store):
        with pytest.raises(SchemaViolation):
            store.put_scheme("bad", '{"name": "x", "scales": [], "criteria": []}')
        assert store.list_schemes() == []

    @pytest.mark.parametrize("name", ["../up", "a/b", ".hidden", "", "a b"])
    def test_invalid_names_rejected(self, store, scheme_text, name):
        with pytest.raises(InvalidName):
            store.put_scheme(name, scheme_text)

    def test_no_temp_files_left_behind(self, store, scheme_text):
        store.put_scheme("academic", scheme_text)
        leftovers = list((store.root / "academic").glob(".tmp-*"))
        assert leftovers == []


class TestDatasets:
    def test_put_returns_row_count(self, store, scheme_text):
        store.put_scheme("academic", scheme_text)
        assert store.put_dataset("academic", "cohort", GOOD_CSV) == 2

    def test_get_round_trip(self, store, scheme_text):
        store.put_scheme("academic", scheme_text)
        store.put_dataset("academic", "cohort", GOOD_CSV)
        assert store.get_dataset_text("academic", "cohort") == GOOD_CSV
        assert [a.id for a in store.get_dataset("academic", "cohort")] == ["A", "B"]

    def test_dataset_for_missing_scheme(self, store):
        with pytest.raises(KeyError):
            store.put_dataset("ghost", "cohort", GOOD_CSV)

    def test_missing_dataset_raises_key_error(self, store, scheme_text):
        store.put_scheme("academic", scheme_text)
        with pytest.raises(KeyError):
            store.get_dataset_text("academic", "ghost")

    def test_invalid_rows_rejected_with_issues(self, store, scheme_text):
        store.put_scheme("academic", scheme_text)
        bad = "id,C1,C2,C3\nA,3.5,WONDERFUL,4\n"
        with pytest.raises(InvalidDataset) as exc:
            store.put_dataset("academic", "cohort", bad)
        assert any("WONDERFUL" in str(issue) for issue in exc.value.issues)
        with pytest.raises(KeyError):
            store.get_dataset_text("academic", "cohort")

    def test_header_mismatch_rejected(self, store, scheme_text):
        store.put_scheme("academic", scheme_text)
        with pytest.raises(HeaderMismatch):
            store.put_dataset("academic", "cohort", "id,C3,C2,C1\nA,4,F,3.5\n")

    def test_invalid_dataset_name(self, store, scheme_text):
        store.put_scheme("academic", scheme_text)
        with pytest.raises(InvalidName):
            store.put_dataset("academic", "../escape", GOOD_CSV)

    def test_concurrent_writes_leave_a_consistent_file(self, store, scheme_text):
        store.put_scheme("academic", scheme_text)
        variants = [
            GOOD_CSV,
            "id,C1,C2,C3\nC,3.2,B,6\n",
            "id,C1,C2,C3\nD,3.8,F,3\nE,3.0,S,5\nF,3.6,B,4\n",
        ]
        threads = [
            threading.Thread(
                target=store.put_dataset, args=("academic", "cohort", text)
            )
            for text in variants * 4
        ]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        assert store.get_dataset_text("academic", "cohort") in variants
