"""Input validation, configuration loading, and report serialization."""
from __future__ import annotations

import csv
import io
import json
import math
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Any, Dict, Iterable, List, Sequence

from jsonschema import Draft202012Validator

from ..algebra import PolynomialSyntaxError, parse_polynomial
from ..errors import InputError
from ..geometry import TestConfiguration, make_test_configuration, variety_from_input
from ..invariants import PiRational, fmt_q


@lru_cache(maxsize=None)
def load_schema(name: str) -> Dict[str, Any]:
    return json.loads(resources.files("dfseq").joinpath("data", name).read_text())


def _validator(schema_file: str, definition: str = None) -> Draft202012Validator:
    schema = dict(load_schema(schema_file))
    if definition is not None:
        schema.pop("oneOf", None)
        schema["$ref"] = f"#/$defs/{definition}"
    return Draft202012Validator(schema)


def _path(error) -> str:
    parts = []
    for p in error.absolute_path:
        parts.append(f"[{p}]" if isinstance(p, int) else (f".{p}" if parts else str(p)))
    return "".join(parts) or "<root>"


def validate(obj: Any, schema_file: str, definition: str = None) -> None:
    """Raise :class:`InputError` naming the field path of the first violation."""
    errors = sorted(_validator(schema_file, definition).iter_errors(obj), key=lambda e: list(e.absolute_path))
    if errors:
        e = errors[0]
        raise InputError(f"{_path(e)}: {e.message}")


def read_json(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def build_configuration(doc: Dict[str, Any], where: str = "") -> TestConfiguration:
    """Turn one validated configuration object into a certified test configuration."""
    n = doc["numVars"]
    if len(doc["weights"]) != n:
        raise InputError(f"{where}weights: has length {len(doc['weights'])}, expected numVars = {n}")
    gens = []
    for i, text in enumerate(doc["ideal"]):
        try:
            g = parse_polynomial(text, n)
        except PolynomialSyntaxError as exc:
            raise InputError(f"{where}ideal[{i}]: {exc}") from exc
        if not g.is_homogeneous():
            raise InputError(f"{where}ideal[{i}]: generator is not homogeneous: {text}")
        gens.append(g)
    variety = variety_from_input(gens, doc["exponent"], n, doc.get("dimension"))
    return make_test_configuration(variety, doc["weights"])


def source_of(doc: Dict[str, Any]) -> Dict[str, Any]:
    out = {"numVars": doc["numVars"], "exponent": doc["exponent"], "weights": list(doc["weights"])}
    if "name" in doc:
        out = {"name": doc["name"], **out}
    return out


def q(x) -> str:
    return fmt_q(x)


def qs(xs: Iterable) -> List[str]:
    return [fmt_q(x) for x in xs]


def pi_value(p: PiRational) -> Dict[str, Any]:
    return {"coeff": fmt_q(p.coefficient), "times": "1/pi", "float": p.value}


def r_index(r) -> Any:
    return "inf" if r == math.inf else int(r)


def dumps_json(obj: Any) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def dumps_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([fmt_q(v) if isinstance(v, Fraction) else v for v in row])
    return buf.getvalue()
