"""Module for report data structures returned by checks and commands."""

import logging
from enum import Enum


class CheckStatus(Enum):
    """Outcome of a single check."""

    PASSED = "passed"
    FAILED = "failed"


class Check:
    """A named verification with its outcome and the values it compared."""

    name: str
    status: CheckStatus
    details: dict

    def __init__(self, name: str, passed: bool, details: dict = None) -> None:
        """Initialize a Check."""
        self.name = name
        self.status = CheckStatus.PASSED if passed else CheckStatus.FAILED
        self.details = {} if details is None else dict(details)

    @property
    def passed(self) -> bool:
        return self.status is CheckStatus.PASSED

    def __eq__(self, other: object) -> bool:
        """Check equality between two checks."""
        if not isinstance(other, Check):
            return False
        return (
            self.name == other.name
            and self.status == other.status
            and self.details == other.details
        )

    def __repr__(self) -> str:
        return f"Check({self.name}: {self.status.value})"

    def serialize(self) -> dict:
        """Serialize the check to a dictionary."""
        return {"name": self.name, "status": self.status.value, "details": self.details}


class Report:
    """The result of a command: echoed inputs, computed results and checks."""

    def __init__(self, command: str, inputs: dict = None) -> None:
        self.command = command
        self.inputs = {} if inputs is None else dict(inputs)
        self.results = {}
        self.checks = []
        self.timing = None

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        if not check.passed:
            logging.getLogger(__name__).warning("Check %s failed: %s", check.name, check.details)
        return check

    def extend(self, checks) -> None:
        for check in checks:
            self.add(check)

    def merge(self, other: "Report", prefix: str = None) -> None:
        """Append the checks and results of another report."""
        for check in other.checks:
            name = f"{prefix}/{check.name}" if prefix else check.name
            self.checks.append(Check(name, check.passed, check.details))
        if other.results:
            self.results[prefix or other.command] = other.results

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failed_checks(self) -> list:
        return [check for check in self.checks if not check.passed]

    def serialize(self) -> dict:
        """Serialize the report; timing is only present when it was measured."""
        data = {
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "checks": [check.serialize() for check in self.checks],
            "passed": self.passed,
        }
        if self.timing is not None:
            data["timing"] = {"seconds": round(self.timing, 3)}
        return data

    def to_text(self) -> str:
        lines = [f"{self.command}: {'PASSED' if self.passed else 'FAILED'}"]
        for key, value in self.inputs.items():
            lines.append(f"  input {key} = {value}")
        for key, value in self.results.items():
            lines.append(f"  {key} = {value}")
        for check in self.checks:
            lines.append(f"  [{check.status.value}] {check.name}")
        if self.timing is not None:
            lines.append(f"  time {self.timing:.3f}s")
        return "\n".join(lines)
