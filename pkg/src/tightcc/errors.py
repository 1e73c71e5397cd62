"""Exception hierarchy. Every error carries a stable machine-readable code."""

from __future__ import annotations


class TightccError(Exception):
    code = "TIGHTCC_ERROR"

    def to_dict(self) -> dict:
        return {"code": self.code, "message": str(self)}


class DegenerateInstance(TightccError):
    code = "DEGENERATE_INSTANCE"


class UncoveredTriple(TightccError):
    code = "UNCOVERED_TRIPLE"

    def __init__(self, triple):
        self.triple = tuple(triple)
        super().__init__(f"triple {list(self.triple)} lies in no edge (min codegree is 0)")

    def to_dict(self) -> dict:
        d = super().to_dict()
        d["triple"] = list(self.triple)
        return d


class UnsupportedSearch(TightccError):
    code = "UNSUPPORTED_SEARCH"


class PreconditionViolated(TightccError):
    code = "PRECONDITION_VIOLATED"

    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(reason)


class InputError(TightccError):
    """Malformed input document. ``position`` is a JSON-path-like locator."""

    def __init__(self, code: str, message: str, position: str | None = None):
        self.code = code
        self.position = position
        loc = f" at {position}" if position else ""
        super().__init__(f"{message}{loc}")

    def to_dict(self) -> dict:
        d = super().to_dict()
        if self.position is not None:
            d["position"] = self.position
        return d
