from __future__ import annotations

from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not-applicable"


@dataclass
class Certificate:
    """Outcome of checking one theorem or lemma on one algebra."""

    name: str
    status: str
    reason: str = ""
    details: dict = field(default_factory=dict)
    witness: object = None

    @property
    def passed(self) -> bool:
        return self.status == PASS
