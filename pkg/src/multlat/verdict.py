from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Verdict:
    """Outcome of a predicate or theorem check.

    ``witness`` maps role names (``"s"``, ``"i"``, ``"a"``, ...) to element
    indices or tuples of them. A failing verdict always carries one; a
    passing verdict may carry the positive certificate (e.g. the uniform
    ``s`` of an S-prime element). ``reason`` names the failed condition.
    """

    passed: bool
    witness: dict[str, Any] = field(default_factory=dict)
    reason: str = ""
    vacuous: bool = False

    def __bool__(self):
        return self.passed

    @classmethod
    def ok(cls, reason="", vacuous=False, **witness):
        return cls(True, dict(witness), reason, vacuous)

    @classmethod
    def fail(cls, reason, **witness):
        return cls(False, dict(witness), reason)
