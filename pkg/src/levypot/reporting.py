"""Canonical serialization for tables, reports and CLI output.

All numbers are written with 17 significant digits, which round-trips
doubles exactly, and containers serialize in insertion order with no
whitespace, so identical inputs produce byte-identical files.
"""

import json
import math
from dataclasses import dataclass, field

from .errors import DomainError

TABLE_QUANTITIES = (
    "potential_density",
    "potential_density_asym",
    "levy_density",
    "green_function",
    "green_asym",
    "jump_density",
    "jump_density_bessel",
    "jump_density_asym",
)


def format_number(x) -> str:
    if isinstance(x, bool):
        raise DomainError("canonical_json", "booleans are not numbers")
    if isinstance(x, int):
        return repr(x)
    xv = float(x)
    if not math.isfinite(xv):
        raise DomainError("canonical_json", f"non-finite number {xv} cannot be serialized")
    return "%.17g" % xv


def _emit(obj, out: list):
    if obj is None:
        out.append("null")
    elif obj is True:
        out.append("true")
    elif obj is False:
        out.append("false")
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    elif isinstance(obj, (int, float)):
        out.append(format_number(obj))
    elif isinstance(obj, dict):
        out.append("{")
        for i, (k, v) in enumerate(obj.items()):
            if not isinstance(k, str):
                raise DomainError("canonical_json", f"object keys must be strings, got {k!r}")
            if i:
                out.append(",")
            out.append(json.dumps(k))
            out.append(":")
            _emit(v, out)
        out.append("}")
    elif isinstance(obj, (list, tuple)):
        out.append("[")
        for i, v in enumerate(obj):
            if i:
                out.append(",")
            _emit(v, out)
        out.append("]")
    else:
        raise DomainError("canonical_json", f"cannot serialize {type(obj).__name__}")


def canonical_json(obj) -> str:
    out = []
    _emit(obj, out)
    return "".join(out)


def _check_meta_value(context: str, key: str, value):
    if isinstance(value, bool) or not isinstance(value, (str, int, float)):
        raise DomainError(context, f"metadata value for {key!r} must be str, int or float, got {type(value).__name__}")
    if isinstance(value, float) and not math.isfinite(value):
        raise DomainError(context, f"metadata value for {key!r} must be finite, got {value}")


def _parse_scalar(text: str):
    """Inverse of the key=value header serialization: int, then float, then str."""
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        pass
    return text


@dataclass(frozen=True)
class DensityTable:
    """A quantity evaluated on a strictly increasing positive grid."""

    quantity: str
    model: dict
    grid: tuple
    values: tuple
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.quantity not in TABLE_QUANTITIES:
            raise DomainError("density_table", f"unknown quantity {self.quantity!r}")
        grid = tuple(float(g) for g in self.grid)
        values = tuple(float(v) for v in self.values)
        if len(grid) != len(values):
            raise DomainError("density_table", f"grid has {len(grid)} points but {len(values)} values")
        if len(grid) == 0:
            raise DomainError("density_table", "table must contain at least one point")
        if grid[0] <= 0.0:
            raise DomainError("density_table", f"grid must be positive, starts at {grid[0]}")
        for left, right in zip(grid, grid[1:]):
            if not right > left:
                raise DomainError("density_table", f"grid must be strictly increasing, {right} follows {left}")
        for k, v in self.model.items():
            _check_meta_value("density_table", f"model.{k}", v)
        for k, v in self.meta.items():
            _check_meta_value("density_table", f"meta.{k}", v)
        object.__setattr__(self, "grid", grid)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "model", dict(self.model))
        object.__setattr__(self, "meta", dict(self.meta))

    def to_dict(self) -> dict:
        return {
            "quantity": self.quantity,
            "model": self.model,
            "grid": list(self.grid),
            "values": list(self.values),
            "meta": self.meta,
        }

    def to_json(self) -> str:
        return canonical_json(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "DensityTable":
        raw = json.loads(text)
        return cls(quantity=raw["quantity"], model=raw["model"], grid=raw["grid"],
                   values=raw["values"], meta=raw.get("meta", {}))

    def to_csv(self) -> str:
        lines = [f"# quantity={self.quantity}"]
        for k, v in self.model.items():
            lines.append(f"# model.{k}={v if isinstance(v, str) else format_number(v)}")
        for k, v in self.meta.items():
            lines.append(f"# meta.{k}={v if isinstance(v, str) else format_number(v)}")
        lines.append("x,value")
        for g, v in zip(self.grid, self.values):
            lines.append(f"{format_number(g)},{format_number(v)}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_csv(cls, text: str) -> "DensityTable":
        quantity = None
        model = {}
        meta = {}
        grid = []
        values = []
        saw_header = False
        for line in text.splitlines():
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                body = line[1:].strip()
                if "=" not in body:
                    raise DomainError("density_table", f"malformed header line {line!r}")
                key, _, val = body.partition("=")
                key = key.strip()
                val = val.strip()
                if key == "quantity":
                    quantity = val
                elif key.startswith("model."):
                    model[key[6:]] = _parse_scalar(val)
                elif key.startswith("meta."):
                    meta[key[5:]] = _parse_scalar(val)
                else:
                    raise DomainError("density_table", f"unknown header key {key!r}")
            elif line == "x,value":
                saw_header = True
            else:
                parts = line.split(",")
                if len(parts) != 2:
                    raise DomainError("density_table", f"malformed data row {line!r}")
                grid.append(float(parts[0]))
                values.append(float(parts[1]))
        if quantity is None or not saw_header:
            raise DomainError("density_table", "missing quantity header or column row")
        return cls(quantity=quantity, model=model, grid=grid, values=values, meta=meta)


@dataclass(frozen=True)
class VerifyCase:
    case_id: str
    inputs: dict
    expected: float
    actual: float
    tolerance: float
    passed: bool

    def to_dict(self) -> dict:
        return {
            "case_id": self.case_id,
            "inputs": self.inputs,
            "expected": self.expected,
            "actual": self.actual,
            "tolerance": self.tolerance,
            "pass": self.passed,
        }


@dataclass(frozen=True)
class VerifyReport:
    suite: str
    cases: tuple
    adjudications: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "cases", tuple(self.cases))
        object.__setattr__(self, "adjudications", tuple(self.adjudications))

    @property
    def n_passed(self) -> int:
        return sum(1 for c in self.cases if c.passed)

    @property
    def n_failed(self) -> int:
        return len(self.cases) - self.n_passed

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "cases": [c.to_dict() for c in self.cases],
            "summary": {
                "passed": self.n_passed,
                "failed": self.n_failed,
                "adjudications": [dict(a) for a in self.adjudications],
            },
        }

    def to_json(self) -> str:
        return canonical_json(self.to_dict())
