"""Tiny pass/fail report containers shared by the verification suites."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, List, Optional


@dataclass
class CheckItem:
    name: str
    passed: bool
    detail: str = ""
    suite: str = ""
    family: str = ""
    ell: int = 0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        ctx = f" [{self.family} ell={self.ell}]" if self.family else ""
        tail = f" -- {self.detail}" if self.detail else ""
        return f"{status}{ctx} {self.name}{tail}"


@dataclass
class CheckReport:
    items: List[CheckItem] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(i.passed for i in self.items)

    @property
    def n_failed(self) -> int:
        return sum(1 for i in self.items if not i.passed)

    def add(self, name: str, passed: bool, detail: str = "") -> CheckItem:
        item = CheckItem(name=name, passed=bool(passed), detail=detail)
        self.items.append(item)
        return item

    def extend(self, other: "CheckReport") -> "CheckReport":
        self.items.extend(other.items)
        return self

    def tag(self, suite: str = "", family: str = "", ell: int = 0) -> "CheckReport":
        for i in self.items:
            i.suite = i.suite or suite
            i.family = i.family or family
            i.ell = i.ell or ell
        return self

    def first_failure(self) -> Optional[CheckItem]:
        for i in self.items:
            if not i.passed:
                return i
        return None

    def lines(self) -> Iterable[str]:
        return (i.line() for i in self.items)
