"""Replayable run records.

Every verification suite the command line runs ends in a Certificate:
the tool version, the exact configuration echo needed to reproduce the
run, the per-check outcomes sorted by check name (assembly order never
depends on completion order), optional dimension and witness-matrix
payloads, and wall-clock timing.  Serialization is deterministic JSON
(sorted keys) so certificates diff cleanly; only the timing field is
expected to vary between replays."""

from __future__ import annotations

import dataclasses
import json
import time
from pathlib import Path

from . import __version__
from .core import Report


def checks_payload(rep: Report) -> list[dict]:
    """The report's checks as JSON rows, sorted by name."""
    rows = [
        {"name": name, "passed": bool(ok), "detail": detail}
        for name, ok, detail in rep.checks
    ]
    rows.sort(key=lambda r: r["name"])
    return rows


def matrix_payload(rows) -> list | None:
    """Sparse witness matrix: per row, [index, scalar-string] pairs
    sorted by index.  Exact strings, no floats."""
    if rows is None:
        return None
    out = []
    for row in rows:
        out.append([[int(k), str(c)] for k, c in sorted(row.items())])
    return out


@dataclasses.dataclass
class Certificate:
    """One command run: what was asked, what was checked, what came out."""

    command: str
    config: dict
    passed: bool
    checks: list
    timing_s: float
    version: str = __version__
    extras: dict = dataclasses.field(default_factory=dict)

    def payload(self) -> dict:
        out = {
            "version": self.version,
            "command": self.command,
            "config": self.config,
            "passed": self.passed,
            "checks": self.checks,
            "timing_s": round(self.timing_s, 6),
        }
        for k, v in self.extras.items():
            out[k] = v
        return out

    def to_json(self) -> str:
        return json.dumps(self.payload(), indent=2, sort_keys=True)

    def write(self, path) -> Path:
        path = Path(path)
        path.write_text(self.to_json() + "\n")
        return path


def build_certificate(command: str, config: dict, rep: Report,
                      started: float, **extras) -> Certificate:
    """Assemble a Certificate from a finished report; `started` is the
    perf_counter() value at the beginning of the run."""
    return Certificate(
        command=command,
        config=config,
        passed=rep.passed,
        checks=checks_payload(rep),
        timing_s=time.perf_counter() - started,
        extras=extras,
    )


def comparable(cert: Certificate) -> dict:
    """The replay-stable part of a certificate: everything except
    timing.  Two runs from the same config echo must agree on this."""
    out = cert.payload()
    out.pop("timing_s", None)
    return out
