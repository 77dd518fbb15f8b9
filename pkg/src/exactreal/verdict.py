"""Three-valued outcome of semi-decidable tests run at finite effort."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Any, Optional


class Status(enum.Enum):
    TRUE = "true-with-witness"
    FALSE = "false-with-witness"
    UNKNOWN = "unknown-at-effort"


@dataclass(frozen=True)
class Verdict:
    """A status plus the evidence that produced it.

    The witness layout depends on the test that issued it; each test
    documents its own.  ``UNKNOWN`` never carries a witness.
    """

    status: Status
    witness: Optional[Any] = None

    @property
    def is_true(self) -> bool:
        return self.status is Status.TRUE

    @property
    def is_false(self) -> bool:
        return self.status is Status.FALSE

    @property
    def is_unknown(self) -> bool:
        return self.status is Status.UNKNOWN

    def __bool__(self):
        raise TypeError("a Verdict is three-valued; test .is_true / .is_false / .is_unknown")

    def __str__(self):
        if self.witness is None:
            return self.status.value
        return f"{self.status.value} {self.witness}"


UNKNOWN = Verdict(Status.UNKNOWN)


def true(witness=None) -> Verdict:
    return Verdict(Status.TRUE, witness)


def false(witness=None) -> Verdict:
    return Verdict(Status.FALSE, witness)
