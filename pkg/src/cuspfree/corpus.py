"""Curve corpora: one JSON object per line.

    {"name": "cusp3", "polynomial": "y^2*z - x^3", "assume_rational_cuspidal": true,
     "expected": {"mdr": 1, "tau": 2, "verdict": "NearlyFree", "d1": 1, "d2": 2, "nu": 1}}

Blank lines and lines starting with ``#`` are ignored; ``expected`` is optional.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Optional

from .errors import CorpusParseError, CuspfreeError
from .linalg import LinalgConfig
from .poly import make_context, parse_poly
from .report import AnalysisReport, analyze

EXPECTED_KEYS = ("mdr", "tau", "verdict", "d1", "d2", "nu")


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    polynomial: str
    assume_rational_cuspidal: bool = False
    expected: Optional[dict] = None
    tags: tuple[str, ...] = ()

    def context(self, linalg: LinalgConfig | None = None):
        return make_context(parse_poly(self.polynomial), self.assume_rational_cuspidal, linalg)


def shipped_corpus_path() -> Path:
    return Path(str(resources.files("cuspfree") / "data" / "corpus.jsonl"))


def parse_corpus(text: str, source: str = "<corpus>") -> list[CorpusEntry]:
    entries = []
    names = set()
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise CorpusParseError(f"{source}:{lineno}: {exc.msg}") from None
        if not isinstance(obj, dict) or "name" not in obj or "polynomial" not in obj:
            raise CorpusParseError(f"{source}:{lineno}: entry needs 'name' and 'polynomial'")
        exp = obj.get("expected")
        if exp is not None:
            unknown = set(exp) - set(EXPECTED_KEYS)
            if unknown:
                raise CorpusParseError(f"{source}:{lineno}: unknown expected keys {sorted(unknown)}")
        if obj["name"] in names:
            raise CorpusParseError(f"{source}:{lineno}: duplicate name {obj['name']!r}")
        names.add(obj["name"])
        entries.append(CorpusEntry(
            name=obj["name"],
            polynomial=obj["polynomial"],
            assume_rational_cuspidal=bool(obj.get("assume_rational_cuspidal", False)),
            expected=exp,
            tags=tuple(obj.get("tags", ())),
        ))
    return entries


def load_corpus(path: str | Path | None = None) -> list[CorpusEntry]:
    path = Path(path) if path is not None else shipped_corpus_path()
    return parse_corpus(path.read_text(), str(path))


def observed(rep: AnalysisReport) -> dict:
    d1, d2 = rep.exponents if rep.exponents else (None, None)
    return {"mdr": rep.mdr, "tau": rep.tau, "verdict": rep.verdict,
            "d1": d1, "d2": d2, "nu": rep.nu}


@dataclass
class BatchResult:
    name: str
    status: str  # "pass", "fail", "error", "unpinned"
    observed: dict = field(default_factory=dict)
    mismatches: dict = field(default_factory=dict)
    problems: list = field(default_factory=list)
    error: Optional[str] = None
    error_status: int = 0
    report: Optional[AnalysisReport] = None


def run_entry(entry: CorpusEntry, linalg: LinalgConfig | None = None) -> BatchResult:
    try:
        rep = analyze(entry.context(linalg))
    except CuspfreeError as exc:
        return BatchResult(entry.name, "error", error=f"{exc.code}: {exc}",
                           error_status=exc.exit_status)
    obs = observed(rep)
    mism = {}
    for k, v in (entry.expected or {}).items():
        if obs.get(k) != v:
            mism[k] = {"expected": v, "observed": obs.get(k)}
    if mism or rep.problems:
        status = "fail"
    elif entry.expected is None:
        status = "unpinned"
    else:
        status = "pass"
    return BatchResult(entry.name, status, obs, mism, list(rep.problems), report=rep)


def run_batch(entries: list[CorpusEntry], linalg: LinalgConfig | None = None) -> list[BatchResult]:
    return [run_entry(e, linalg) for e in entries]
