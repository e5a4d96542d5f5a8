"""Directory-per-scheme file store backing the HTTP service.

Layout under the store root:

    <root>/<scheme>/scheme.json        canonical scheme document
    <root>/<scheme>/datasets/<name>.csv
    <root>/<scheme>/.lock              advisory write lock

Reads need no coordination (writes are atomic renames); writes to one
scheme directory serialize on an advisory flock. Missing names raise
KeyError, which the service maps to 404. Stored schemes are re-serialized
to canonical form, so what goes in is what load_scheme would produce.
"""
from __future__ import annotations

import fcntl
import os
import re
import tempfile
from contextlib import contextmanager
from pathlib import Path

from .errors import DomainError
from .ingest import parse_dataset, parse_scheme, serialize_scheme
from .model import Alternative, InvalidDataset, Scheme, validate_dataset

# plain portable filenames only; also blocks path escapes like ".."
_NAME_RE = re.compile(r"^[A-Za-z0-9][A-Za-z0-9_.-]*$")


class InvalidName(DomainError):
    """Store names must be plain alphanumeric tokens."""


def _check_name(name: str) -> str:
    if not _NAME_RE.match(name) or ".." in name:
        raise InvalidName(f"invalid store name {name!r}")
    return name


def _atomic_write(path: Path, text: str) -> None:
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-", suffix=path.suffix)
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


class SchemeStore:
    """File-backed named schemes and datasets."""

    def __init__(self, root):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)

    def _scheme_dir(self, name: str) -> Path:
        return self.root / _check_name(name)

    @contextmanager
    def _write_lock(self, name: str):
        lock_path = self._scheme_dir(name) / ".lock"
        with open(lock_path, "w") as lock:
            fcntl.flock(lock, fcntl.LOCK_EX)
            try:
                yield
            finally:
                fcntl.flock(lock, fcntl.LOCK_UN)

    def list_schemes(self) -> list[str]:
        if not self.root.is_dir():
            return []
        return sorted(
            p.parent.name for p in self.root.glob("*/scheme.json") if p.is_file()
        )

    def put_scheme(self, name: str, text: str) -> Scheme:
        """Validate and store; the persisted form is canonical."""
        scheme = parse_scheme(text, source=name)
        directory = self._scheme_dir(name)
        directory.mkdir(parents=True, exist_ok=True)
        with self._write_lock(name):
            _atomic_write(directory / "scheme.json", serialize_scheme(scheme))
        return scheme

    def get_scheme_text(self, name: str) -> str:
        path = self._scheme_dir(name) / "scheme.json"
        if not path.is_file():
            raise KeyError(name)
        return path.read_text(encoding="utf-8")

    def get_scheme(self, name: str) -> Scheme:
        return parse_scheme(self.get_scheme_text(name), source=name)

    def put_dataset(self, scheme_name: str, dataset_name: str, text: str) -> int:
        """Validate against the stored scheme, then store; returns row count."""
        _check_name(dataset_name)
        scheme = self.get_scheme(scheme_name)
        alts = parse_dataset(text, scheme, source=dataset_name)
        issues = validate_dataset(scheme, alts)
        if issues:
            raise InvalidDataset(issues)
        directory = self._scheme_dir(scheme_name) / "datasets"
        directory.mkdir(parents=True, exist_ok=True)
        with self._write_lock(scheme_name):
            _atomic_write(directory / f"{dataset_name}.csv", text)
        return len(alts)

    def get_dataset_text(self, scheme_name: str, dataset_name: str) -> str:
        _check_name(dataset_name)
        path = self._scheme_dir(scheme_name) / "datasets" / f"{dataset_name}.csv"
        if not path.is_file():
            raise KeyError(dataset_name)
        return path.read_text(encoding="utf-8")

    def get_dataset(self, scheme_name: str, dataset_name: str) -> list[Alternative]:
        scheme = self.get_scheme(scheme_name)
        return parse_dataset(
            self.get_dataset_text(scheme_name, dataset_name), scheme,
            source=dataset_name,
        )
