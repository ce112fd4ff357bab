"""
Record catalog - 码目录
=====================================
Append-only JSON-lines file. The first line is a header

    {"schema": "assoc-codes/catalog", "version": 1}

followed by one CodeRecord per line. Writes go through a per-path lock;
unreadable record lines are skipped with a warning. Queries deduplicate
by (n, k, d, canonical rowspace), keeping the earliest line.
"""

import json
import os
import threading
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional

from termcolor import cprint

from config import CATALOG_SCHEMA, CATALOG_VERSION, catalog_path
from errors import AssocCodesError, CatalogError
from search.records import CodeRecord

_LOCKS: Dict[str, threading.Lock] = {}
_LOCKS_GUARD = threading.Lock()


def _lock_for(path: str) -> threading.Lock:
    key = os.path.abspath(path)
    with _LOCKS_GUARD:
        if key not in _LOCKS:
            _LOCKS[key] = threading.Lock()
        return _LOCKS[key]


@dataclass(frozen=True)
class CatalogQuery:
    """Filters for catalog_query; None means any"""
    n: Optional[int] = None
    k: Optional[int] = None
    d: Optional[int] = None
    min_d: Optional[int] = None
    scheme: Optional[str] = None
    kind: Optional[str] = None          # "exact" | "lower-bound"

    def matches(self, r: CodeRecord) -> bool:
        if self.n is not None and r.n != self.n:
            return False
        if self.k is not None and r.k != self.k:
            return False
        if self.d is not None and r.d != self.d:
            return False
        if self.min_d is not None and r.d < self.min_d:
            return False
        if self.scheme is not None and r.scheme != self.scheme:
            return False
        if self.kind is not None and r.certificate.kind.value != self.kind:
            return False
        return True


class CodeCatalog:
    def __init__(self, path: str = None):
        self.path = catalog_path(path)
        self.lock = _lock_for(self.path)

    def _header(self) -> str:
        return json.dumps({"schema": CATALOG_SCHEMA, "version": CATALOG_VERSION}, sort_keys=True)

    def append(self, record: CodeRecord) -> None:
        self.extend([record])

    def extend(self, records: Iterable[CodeRecord]) -> int:
        lines = [json.dumps(r.to_json(), sort_keys=True) for r in records]
        with self.lock:
            try:
                fresh = not os.path.exists(self.path) or os.path.getsize(self.path) == 0
                with open(self.path, "a", encoding="utf-8") as f:
                    if fresh:
                        f.write(self._header() + "\n")
                    for line in lines:
                        f.write(line + "\n")
            except OSError as exc:
                raise CatalogError(f"cannot write catalog {self.path}: {exc}") from exc
        return len(lines)

    def read(self) -> List[CodeRecord]:
        """Every readable record in file order."""
        if not os.path.exists(self.path):
            return []
        try:
            with open(self.path, encoding="utf-8") as f:
                lines = f.readlines()
        except OSError as exc:
            raise CatalogError(f"cannot read catalog {self.path}: {exc}") from exc

        records = []
        for lineno, line in enumerate(lines, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                payload = json.loads(line)
            except json.JSONDecodeError:
                cprint(f"⚠️ {self.path}:{lineno}: not JSON, skipped", "yellow")
                continue
            if lineno == 1 and isinstance(payload, dict) and "schema" in payload:
                self._check_header(payload)
                continue
            try:
                records.append(CodeRecord.from_json(payload))
            except (KeyError, TypeError, ValueError, AssocCodesError) as exc:
                cprint(f"⚠️ {self.path}:{lineno}: malformed record ({exc}), skipped", "yellow")
        return records

    def _check_header(self, payload: dict):
        if payload.get("schema") != CATALOG_SCHEMA:
            raise CatalogError(f"{self.path}: unknown catalog schema {payload.get('schema')!r}")
        if int(payload.get("version", 0)) > CATALOG_VERSION:
            raise CatalogError(f"{self.path}: catalog version {payload.get('version')} is newer than {CATALOG_VERSION}")

    def query(self, flt: CatalogQuery = None) -> List[CodeRecord]:
        flt = flt or CatalogQuery()
        seen = set()
        out = []
        for r in self.read():
            key = (r.n, r.k, r.d, r.rowspace or tuple(r.generators))
            if key in seen:
                continue
            seen.add(key)
            if flt.matches(r):
                out.append(r)
        return out


def catalog_append(record: CodeRecord, path: str = None) -> None:
    CodeCatalog(path).append(record)


def catalog_query(flt: CatalogQuery = None, path: str = None, **filters) -> List[CodeRecord]:
    if flt is None:
        flt = CatalogQuery(**filters)
    return CodeCatalog(path).query(flt)
