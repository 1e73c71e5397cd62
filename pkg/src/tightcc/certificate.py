"""Verdict objects tying a run to its inputs and the checks it performed."""

from __future__ import annotations

import hashlib
import json
import time
from dataclasses import dataclass, field
from typing import Any


def _version() -> str:
    from tightcc import __version__

    return __version__


def digest_bytes(data: bytes) -> str:
    return "sha256:" + hashlib.sha256(data).hexdigest()


def digest_file(path: str) -> str:
    with open(path, "rb") as fh:
        return digest_bytes(fh.read())


def canonical_json(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


@dataclass
class Check:
    name: str
    expected: Any
    observed: Any
    status: str
    detail: Any = None

    def to_dict(self) -> dict:
        d = {"name": self.name, "expected": self.expected, "observed": self.observed, "status": self.status}
        if self.detail is not None:
            d["detail"] = self.detail
        return d


@dataclass
class Certificate:
    """``verdict`` is pass iff every check passed. ``timing`` is the only
    field allowed to differ between reruns of the same command."""

    command: list[str]
    inputs: dict[str, str] = field(default_factory=dict)
    checks: list[Check] = field(default_factory=list)
    extra: dict = field(default_factory=dict)
    started: float = field(default_factory=time.perf_counter)
    elapsed: float | None = None

    def check(self, name: str, expected, observed, ok: bool | None = None, detail=None) -> bool:
        if ok is None:
            ok = expected == observed
        self.checks.append(Check(name, expected, observed, "pass" if ok else "fail", detail))
        return ok

    @property
    def verdict(self) -> str:
        return "pass" if all(c.status == "pass" for c in self.checks) else "fail"

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.status != "pass"]

    def finish(self) -> "Certificate":
        self.elapsed = time.perf_counter() - self.started
        return self

    def to_dict(self) -> dict:
        d = {
            "tool": "tightcc",
            "version": _version(),
            "command": list(self.command),
            "inputs": dict(sorted(self.inputs.items())),
            "verdict": self.verdict,
            "checks": [c.to_dict() for c in self.checks],
            "timing": {"seconds": round(self.elapsed if self.elapsed is not None else 0.0, 6)},
        }
        if self.extra:
            d["extra"] = self.extra
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)


def strip_timing(doc: dict) -> dict:
    """Copy of a certificate (or a document embedding one) without timing fields."""
    out = {}
    for k, v in doc.items():
        if k in ("timing", "wall_time"):
            continue
        out[k] = strip_timing(v) if isinstance(v, dict) else v
    return out
