from dataclasses import dataclass, field


@dataclass(frozen=True)
class Violation:
    code: str
    where: object
    message: str

    def __str__(self):
        return f"{self.code} at {self.where}: {self.message}"


@dataclass
class ValidationReport:
    """Collected violations of one check; empty means the check passed."""

    subject: str = ""
    violations: list = field(default_factory=list)

    def add(self, code, where, message):
        self.violations.append(Violation(code, where, message))

    @property
    def ok(self):
        return not self.violations

    def codes(self):
        return {v.code for v in self.violations}

    def __len__(self):
        return len(self.violations)

    def __iter__(self):
        return iter(self.violations)

    def __str__(self):
        if self.ok:
            return f"{self.subject}: ok"
        lines = [f"{self.subject}: {len(self.violations)} violation(s)"]
        lines += [f"  {v}" for v in self.violations]
        return "\n".join(lines)
