"""Structured verdict reports: one ``CHECK <name>: PASS|FAIL|SKIP <sep> <detail>`` line per check.

The separator SEP is U+2014, as the report format requires.
"""

from __future__ import annotations

from dataclasses import dataclass, field

PASS, FAIL, SKIP = "PASS", "FAIL", "SKIP"
SEP = "\u2014"


@dataclass
class Report:
    checks: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def add(self, name, status, detail=""):
        if status not in (PASS, FAIL, SKIP):
            raise ValueError(status)
        self.checks.append((name, status, detail))
        return status == PASS

    def check(self, name, ok, detail=""):
        return self.add(name, PASS if ok else FAIL, detail)

    @property
    def passed(self):
        return bool(self.checks) and all(s == PASS for _, s, _ in self.checks)

    @property
    def exit_code(self):
        return 0 if self.passed else 1

    def status(self, name):
        for n, s, _ in self.checks:
            if n == name:
                return s
        raise KeyError(name)

    def lines(self):
        out = [f"CHECK {n}: {s} {SEP} {d}" for n, s, d in self.checks]
        out.extend(f"NOTE {n}" for n in self.notes)
        return out

    def __str__(self):
        return "\n".join(self.lines())
