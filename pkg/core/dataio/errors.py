from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class LocatedError:
    file: str
    location: str  # JSON pointer ("/classes/3/name") or "line N"
    message: str

    def __str__(self) -> str:
        return f"{self.file}:{self.location}: {self.message}"


class DataLoadError(Exception):
    def __init__(self, errors: list[LocatedError]):
        self.errors = sorted(errors, key=lambda e: (e.file, e.location, e.message))
        head = "; ".join(str(e) for e in self.errors[:3])
        more = f" (+{len(self.errors) - 3} more)" if len(self.errors) > 3 else ""
        super().__init__(f"{len(self.errors)} data error(s): {head}{more}")
