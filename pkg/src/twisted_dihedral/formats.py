"""Text file formats used by the CLI.

All binary material is lowercase hex inside line-oriented text files with
a v1 header; secret files carry an extra leading SECRET line. Element
files do not repeat the field modulus, so they are always read against a
parameter file, with the header serving as a consistency check.
"""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

from .algebra import (AlgebraElement, AlgebraParams, rep_deserialize,
                      rep_serialize)
from .errors import ParameterError
from .field import FieldParams
from .group import DihedralGroup
from .kex import PublicParams

HEADER_PREFIX = "twisted-dihedral v1"
SECRET_MARKER = "SECRET"


def _lambda_digits(algebra: AlgebraParams) -> str:
    return ",".join(str(d) for d in algebra.lam.digits)


def format_header(algebra: AlgebraParams) -> str:
    return (f"{HEADER_PREFIX} p={algebra.field.p} m={algebra.field.m} "
            f"n={algebra.n} lambda={_lambda_digits(algebra)}")


def check_header(line: str, algebra: AlgebraParams) -> None:
    expected = format_header(algebra)
    if line.strip() != expected:
        raise ParameterError(
            f"header mismatch: expected {expected!r}, found {line.strip()!r}")


def write_element_file(path, algebra: AlgebraParams,
                       elements: Sequence[AlgebraElement],
                       secret: bool = False) -> None:
    lines = []
    if secret:
        lines.append(SECRET_MARKER)
    lines.append(format_header(algebra))
    lines += [rep_serialize(e).hex() for e in elements]
    Path(path).write_text("\n".join(lines) + "\n")


def read_element_file(path, algebra: AlgebraParams,
                      expect: int | None = None) -> list[AlgebraElement]:
    lines = [ln.strip() for ln in Path(path).read_text().splitlines() if ln.strip()]
    if lines and lines[0] == SECRET_MARKER:
        lines = lines[1:]
    if not lines:
        raise ParameterError(f"{path}: empty element file")
    check_header(lines[0], algebra)
    elements = [rep_deserialize(bytes.fromhex(ln), algebra) for ln in lines[1:]]
    if expect is not None and len(elements) != expect:
        raise ParameterError(
            f"{path}: expected {expect} elements, found {len(elements)}")
    return elements


def is_secret_file(path) -> bool:
    with open(path) as fh:
        first = fh.readline().strip()
    return first == SECRET_MARKER


def write_param_file(path, pp: PublicParams) -> None:
    algebra = pp.algebra
    field = algebra.field
    lines = [
        f"p={field.p}",
        f"m={field.m}",
    ]
    if field.m > 1:
        lines.append("modulus=" + ",".join(str(c) for c in field.modulus))
    lines += [
        f"n={algebra.n}",
        f"lambda={_lambda_digits(algebra)}",
        f"h={rep_serialize(pp.h).hex()}",
    ]
    Path(path).write_text("\n".join(lines) + "\n")


def read_param_file(path) -> PublicParams:
    entries: dict[str, str] = {}
    for ln in Path(path).read_text().splitlines():
        ln = ln.strip()
        if not ln or ln.startswith("#"):
            continue
        if "=" not in ln:
            raise ParameterError(f"{path}: malformed line {ln!r}")
        key, value = ln.split("=", 1)
        entries[key.strip()] = value.strip()
    try:
        p = int(entries["p"])
        m = int(entries.get("m", "1"))
        n = int(entries["n"])
        lam_digits = [int(d) for d in entries["lambda"].split(",")]
        h_hex = entries["h"]
    except KeyError as exc:
        raise ParameterError(f"{path}: missing parameter {exc}") from exc
    modulus = None
    if "modulus" in entries:
        modulus = [int(c) for c in entries["modulus"].split(",")]
    elif m > 1:
        raise ParameterError(f"{path}: modulus is required when m > 1")
    field = FieldParams(p, m, modulus)
    if (2 * n) % p != 0:
        raise ParameterError(f"p={p} must divide 2n={2 * n}")
    group = DihedralGroup(n)
    lam = field.elem(lam_digits)
    algebra = AlgebraParams(field, group, lam)
    h = rep_deserialize(bytes.fromhex(h_hex), algebra)
    return PublicParams(algebra, h)


def parse_field_params(text: str) -> FieldParams:
    """Parse the inline form `p=<int> m=<int> modulus=<d0,...,dm>`."""
    entries: dict[str, str] = {}
    for token in text.split():
        if "=" not in token:
            raise ParameterError(f"malformed token {token!r}")
        key, value = token.split("=", 1)
        entries[key] = value
    p = int(entries["p"])
    m = int(entries.get("m", "1"))
    modulus = None
    if "modulus" in entries:
        modulus = [int(c) for c in entries["modulus"].split(",")]
    elif m > 1:
        raise ParameterError("modulus is required when m > 1")
    return FieldParams(p, m, modulus)
