"""Mine implicit declarations and call sites from semantic facts."""

from __future__ import annotations

import json
import os
from pathlib import Path
from typing import Iterable, Optional

from ._implicitus import (
    Corpus,
    InconsistencyError,
    InputError,
    LabeledCorpus,
    load_corpus,
    load_labeled,
)
from . import _implicitus as _core

__all__ = [
    "Corpus",
    "InconsistencyError",
    "InputError",
    "LabeledCorpus",
    "classify",
    "dedup",
    "default_rules",
    "ingest",
    "load_corpus",
    "load_labeled",
    "report",
    "retain",
    "summarize",
]

PathLike = os.PathLike | str


def ingest(paths: Iterable[PathLike], jobs: int = 1) -> Corpus:
    """Parse and link fact files into a corpus."""
    return _core.ingest([Path(p) for p in paths], jobs)


def classify(corpus: Corpus, rules: Optional[dict] = None, strict: bool = False, jobs: int = 1) -> LabeledCorpus:
    """Filter a corpus by retention and label what survives."""
    return _core.classify(corpus, json.dumps(rules) if rules is not None else "", strict, jobs)


def summarize(labeled: LabeledCorpus) -> dict:
    return json.loads(labeled.summary_text())


def report(labeled: LabeledCorpus, out_dir: PathLike, top: int = 10) -> list[Path]:
    """Write the CSV datasets, top-project tables and plot data; returns the files."""
    return [Path(p) for p in _core.write_report(labeled, Path(out_dir), top)]


def dedup(manifest: PathLike) -> list[dict]:
    """Retention verdict and canonical modules of every project in a manifest."""
    return [json.loads(d) for d in _core.decide_manifest(Path(manifest))]


def retain(project: dict) -> tuple[bool, list[str]]:
    """Retention verdict of one project record, as (retained, failed rules)."""
    return _core.retain_project(
        project["id"],
        project["stars"],
        project["commits"],
        project["firstCommit"],
        project["lastCommit"],
        project["dupRatio"],
        project["inIndex"],
    )


def default_rules() -> dict:
    return json.loads(_core.default_rules_text())
