"""Registry of the ten builtin groups plus user-supplied group files."""

from fractions import Fraction
from functools import lru_cache

from ..modeq.equation import ModularEquation
from ..numerics.quadratic import QuadExt
from ..qseries.eta import EtaQuotientSpec
from ..qseries.poly import Poly
from .builtin import BUILTIN_GROUPS
from .groupfile import GroupFileError, dump_group, load_file, parse_group_text
from .radical import RadicalDomainError, RadicalExpr, RadicalParseError, eval_radical, parse_radical
from .records import CMData, GroupRecord, RegistryError


class UnknownGroupError(KeyError):
    def __str__(self):
        return f"unknown group label {self.args[0]!r}"


def _record(entry):
    w = Poly.from_factors(*entry["w"])
    R = Poly.from_factors(*entry["R"])
    a, b, d = entry["x0"]
    notes = {}
    if "C_note" in entry:
        notes["C"] = entry["C_note"]
    return GroupRecord(
        label=entry["label"],
        level=entry["level"],
        eta_spec=EtaQuotientSpec(tuple(entry["eta"]["factors"]), entry["eta"]["power"]),
        w=w,
        R=R,
        meq_n=entry["n"],
        expected_psi=ModularEquation.from_rows(entry["n"], entry["psi_rows"]),
        expected_recurrence=tuple(Poly(row) for row in entry["recurrence"]),
        expected_initials=tuple(Fraction(v) for v in entry["initials"]),
        cm=CMData(entry["tau0"], entry["gamma"], entry["A"], entry.get("M_printed")),
        expected_B=entry["B"],
        expected_C=entry["C"],
        expected_x0=QuadExt(a, b, d),
        notes=notes,
    )


@lru_cache(maxsize=None)
def load_builtin():
    """The ten builtin records, validated; a tuple in table order."""
    return tuple(_record(e).validate() for e in BUILTIN_GROUPS)


def labels():
    return [g.label for g in load_builtin()]


def get_group(label, extra=()):
    for g in tuple(extra) + load_builtin():
        if g.label == label:
            return g
    raise UnknownGroupError(label)


__all__ = [
    "CMData",
    "GroupFileError",
    "GroupRecord",
    "RadicalDomainError",
    "RadicalExpr",
    "RadicalParseError",
    "RegistryError",
    "UnknownGroupError",
    "dump_group",
    "eval_radical",
    "get_group",
    "labels",
    "load_builtin",
    "load_file",
    "parse_group_text",
    "parse_radical",
]
