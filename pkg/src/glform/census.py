"""Census CSV ingestion.

The bundled table (``data/census_9.csv``) carries one row per knot: a name,
a PD code, and optional reference columns (sigma, det, V0 data, genus-type
invariants, boolean flags).  Loading validates eagerly and reports failures
with row numbers.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from importlib import resources

from .bounds import KnotRecord
from .diagram import DiagramError, parse_pd


class MissingColumn(ValueError):
    pass


class BadRow(ValueError):
    def __init__(self, row: int, reason: str):
        super().__init__(f"row {row}: {reason}")
        self.row = row
        self.reason = reason


_INT_FIELDS = ("sigma", "det", "v0", "v0_mirror", "tau", "g3", "g4",
               "gamma3", "gamma4", "alt", "dalt")
_BOOL_FIELDS = ("slice", "qa", "no_posdef_filling")


@dataclass(frozen=True)
class CensusTable:
    rows: tuple[KnotRecord, ...]
    source: str
    columns: tuple[str, ...]

    def __len__(self):
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def get(self, name: str) -> KnotRecord | None:
        return self._index().get(name)

    def _index(self):
        if not hasattr(self, "_idx"):
            object.__setattr__(self, "_idx", {r.name: r for r in self.rows})
        return self._idx


def _parse_bool(text: str):
    t = text.strip().lower()
    if t in ("1", "true", "yes"):
        return True
    if t in ("0", "false", "no"):
        return False
    raise ValueError(f"not a boolean: {text!r}")


def load_census(path) -> CensusTable:
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        cols = reader.fieldnames or []
        for required in ("name", "pd"):
            if required not in cols:
                raise MissingColumn(required)
        rows = []
        names = set()
        for lineno, raw in enumerate(reader, start=2):
            name = (raw.get("name") or "").strip()
            if not name:
                raise BadRow(lineno, "empty name")
            if name in names:
                raise BadRow(lineno, f"duplicate name {name}")
            names.add(name)
            pd = (raw.get("pd") or "").strip()
            try:
                parse_pd(pd)
            except DiagramError as exc:
                raise BadRow(lineno, f"bad pd: {exc}") from exc
            kwargs = {"name": name, "pd": pd}
            for f in _INT_FIELDS:
                v = (raw.get(f) or "").strip()
                if v:
                    try:
                        kwargs[f] = int(v)
                    except ValueError as exc:
                        raise BadRow(lineno, f"bad {f}: {v!r}") from exc
            for f in _BOOL_FIELDS:
                v = (raw.get(f) or "").strip()
                if v:
                    try:
                        kwargs[f] = _parse_bool(v)
                    except ValueError as exc:
                        raise BadRow(lineno, str(exc)) from exc
            rows.append(KnotRecord(**kwargs))
    return CensusTable(tuple(rows), str(path), tuple(cols))


def bundled_census_path():
    return resources.files("glform").joinpath("data/census_9.csv")


def load_bundled() -> CensusTable:
    with resources.as_file(bundled_census_path()) as p:
        return load_census(p)
