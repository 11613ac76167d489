"""Plain-text group files.

Grammar (UTF-8, one ``key = value`` per line, ``#`` starts a comment)::

    [group]   label = <text>            level = <int>
    [eta]     factors = a:e a:e ...     power = <int>
    [w]       coeffs = c0 c1 ...        (rational tokens p/q, constant first)
    [R]       coeffs = c0 c1 ...
    [modeq]   n = <int>
    [cm]      tau0 = (p + sqrt(d))/r    gamma = a b c d     A = alpha beta 0 delta
    [expect]  psi.<j> = X-coefficients of Y^j      (one key per power j)
              recurrence.<j> = c0 c1 c2 c3         (P_j(n), one key per j)
              initials = A0 A1 ...
              x0 = a b d                           (a + b*sqrt(d))
              B = <radical>   C = <radical>
              note.<field> = <text>

Sections [cm] and [expect] are optional; every other section is required.
Unknown sections or keys are rejected.
"""

import re
from fractions import Fraction

from ..modeq.equation import ModularEquation
from ..numerics.quadratic import QuadExt
from ..numerics.rational import format_rational, parse_rational
from ..qseries.eta import EtaQuotientSpec
from ..qseries.poly import Poly
from .radical import RadicalParseError, parse_radical
from .records import CMData, GroupRecord


class GroupFileError(ValueError):
    def __init__(self, message, line=None, column=None, source="<group file>"):
        where = source if line is None else f"{source}:{line}:{column or 1}"
        super().__init__(f"{where}: {message}")
        self.line = line
        self.column = column


_KEYS = {
    "group": {"label", "level"},
    "eta": {"factors", "power"},
    "w": {"coeffs"},
    "R": {"coeffs"},
    "modeq": {"n"},
    "cm": {"tau0", "gamma", "A"},
    "expect": {"initials", "x0", "B", "C"},
}
_INDEXED = {"expect": ("psi", "recurrence", "note")}
_REQUIRED = ("group", "eta", "w", "R", "modeq")
_SECTION = re.compile(r"^\[([A-Za-z]+)\]$")
_TAU0 = re.compile(r"^\(\s*(-?\d+)\s*\+\s*sqrt\(\s*(-?\d+)\s*\)\s*\)\s*/\s*(\d+)$")


def parse_group_text(text, source="<group file>"):
    sections = {}
    current = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        stripped = line.strip()
        if not stripped:
            continue
        col = len(line) - len(line.lstrip()) + 1
        m = _SECTION.match(stripped)
        if m:
            name = m.group(1)
            if name not in _KEYS:
                raise GroupFileError(f"unknown section [{name}]", lineno, col, source)
            if name in sections:
                raise GroupFileError(f"duplicate section [{name}]", lineno, col, source)
            current = sections[name] = {}
            continue
        if current is None:
            raise GroupFileError("key outside of any section", lineno, col, source)
        key, eq, value = stripped.partition("=")
        if not eq:
            raise GroupFileError("expected 'key = value'", lineno, col, source)
        key = key.strip()
        section = next(n for n, s in sections.items() if s is current)
        base = key.split(".", 1)[0]
        indexed = "." in key and base in _INDEXED.get(section, ())
        if key not in _KEYS[section] and not indexed:
            raise GroupFileError(f"unknown key {key!r} in [{section}]", lineno, col, source)
        if key in current:
            raise GroupFileError(f"duplicate key {key!r}", lineno, col, source)
        vcol = col + stripped.index("=") + 1
        vcol += len(stripped[stripped.index("=") + 1:]) - len(stripped[stripped.index("=") + 1:].lstrip())
        current[key] = (value.strip(), lineno, vcol)
    for name in _REQUIRED:
        if name not in sections:
            raise GroupFileError(f"missing section [{name}]", source=source)
    return _build(sections, source)


def _get(sections, section, key, source, required=True):
    entry = sections.get(section, {}).get(key)
    if entry is None and required:
        raise GroupFileError(f"missing key {key!r} in [{section}]", source=source)
    return entry


def _convert(entry, fn, what, source):
    value, line, col = entry
    try:
        return fn(value)
    except (ValueError, ZeroDivisionError, RadicalParseError) as exc:
        raise GroupFileError(f"bad {what}: {exc}", line, col, source) from None


def _tokens(fn):
    return lambda text: [fn(tok) for tok in text.split()]


def _factor(tok):
    a, sep, e = tok.partition(":")
    if not sep:
        raise ValueError(f"eta factor {tok!r} must look like a:e")
    return int(a), int(e)


def _tau0(text):
    m = _TAU0.match(text.strip())
    if not m:
        raise ValueError(f"tau0 {text!r} must look like (p + sqrt(d))/r")
    return tuple(int(g) for g in m.groups())


def _ints(count):
    def parse(text):
        vals = [int(tok) for tok in text.split()]
        if len(vals) != count:
            raise ValueError(f"expected {count} integers, got {len(vals)}")
        return tuple(vals)

    return parse


def _indexed(section, prefix, source):
    out = {}
    for key, entry in section.items():
        if key.startswith(prefix + "."):
            idx = _convert((key.split(".", 1)[1], entry[1], entry[2]), int, f"{prefix} index", source)
            out[idx] = entry
    return out


def _build(sections, source):
    g = lambda s, k, req=True: _get(sections, s, k, source, req)
    label = g("group", "label")[0]
    level = _convert(g("group", "level"), int, "level", source)
    factors = _convert(g("eta", "factors"), _tokens(_factor), "eta factors", source)
    power = _convert(g("eta", "power"), int, "eta power", source)
    w = _convert(g("w", "coeffs"), lambda t: Poly(parse_rational(x) for x in t.split()), "w coefficients", source)
    R = _convert(g("R", "coeffs"), lambda t: Poly(parse_rational(x) for x in t.split()), "R coefficients", source)
    n = _convert(g("modeq", "n"), int, "modular equation degree", source)

    cm = None
    if "cm" in sections:
        cm = CMData(
            _convert(g("cm", "tau0"), _tau0, "tau0", source),
            _convert(g("cm", "gamma"), _ints(4), "gamma", source),
            _convert(g("cm", "A"), _ints(4), "A", source),
        )

    expect = sections.get("expect", {})
    psi = None
    rows = _indexed(expect, "psi", source)
    if rows:
        psi_rows = {j: _convert(e, _tokens(int), f"psi row {j}", source) for j, e in rows.items()}
        psi = ModularEquation.from_rows(n, psi_rows)
    rec = None
    rec_rows = _indexed(expect, "recurrence", source)
    if rec_rows:
        if sorted(rec_rows) != list(range(len(rec_rows))):
            raise GroupFileError("recurrence rows must be numbered 0, 1, ..., J", source=source)
        rec = tuple(
            _convert(rec_rows[j], lambda t: Poly(parse_rational(x) for x in t.split()), f"recurrence row {j}", source)
            for j in range(len(rec_rows))
        )
    initials = ()
    if "initials" in expect:
        initials = tuple(_convert(expect["initials"], _tokens(parse_rational), "initials", source))
    x0 = _convert(expect["x0"], QuadExt.parse, "x0", source) if "x0" in expect else None
    B = C = None
    if "B" in expect:
        B = expect["B"][0]
        _convert(expect["B"], parse_radical, "B", source)
    if "C" in expect:
        C = expect["C"][0]
        _convert(expect["C"], parse_radical, "C", source)
    notes = {k.split(".", 1)[1]: v[0] for k, v in expect.items() if k.startswith("note.")}
    return GroupRecord(
        label=label,
        level=level,
        eta_spec=EtaQuotientSpec(tuple(factors), power),
        w=w,
        R=R,
        meq_n=n,
        expected_psi=psi,
        expected_recurrence=rec,
        expected_initials=initials,
        cm=cm,
        expected_B=B,
        expected_C=C,
        expected_x0=x0,
        notes=notes,
    )


def load_file(path):
    """Parse and validate a group file."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return parse_group_text(text, str(path)).validate()


def dump_group(g):
    """Serialize a record to the group-file format."""
    tok = lambda p: " ".join(format_rational(c) for c in p.coeffs) if p.coeffs else "0"
    lines = [
        "[group]",
        f"label = {g.label}",
        f"level = {g.level}",
        "",
        "[eta]",
        "factors = " + " ".join(f"{a}:{e}" for a, e in g.eta_spec.factors),
        f"power = {g.eta_spec.outer_power}",
        "",
        "[w]",
        f"coeffs = {tok(g.w)}",
        "",
        "[R]",
        f"coeffs = {tok(g.R)}",
        "",
        "[modeq]",
        f"n = {g.meq_n}",
    ]
    if g.cm is not None:
        p, d, r = g.cm.tau0_form
        lines += [
            "",
            "[cm]",
            f"tau0 = ({p} + sqrt({d}))/{r}",
            "gamma = " + " ".join(str(v) for v in g.cm.gamma),
            "A = " + " ".join(str(v) for v in g.cm.A),
        ]
    expect = []
    if g.expected_psi is not None:
        for j in range(g.expected_psi.size - 1, -1, -1):
            row = g.expected_psi.row(j)
            if row:
                expect.append(f"psi.{j} = " + " ".join(str(c) for c in row.coeffs))
    if g.expected_recurrence is not None:
        for j, p in enumerate(g.expected_recurrence):
            expect.append(f"recurrence.{j} = " + " ".join(format_rational(p[k]) for k in range(4)))
    if g.expected_initials:
        expect.append("initials = " + " ".join(format_rational(Fraction(a)) for a in g.expected_initials))
    if g.expected_x0 is not None:
        x = g.expected_x0
        expect.append(f"x0 = {format_rational(x.a)} {format_rational(x.b)} {x.d}")
    if g.expected_B is not None:
        expect.append(f"B = {g.expected_B}")
    if g.expected_C is not None:
        expect.append(f"C = {g.expected_C}")
    for k, v in g.notes.items():
        expect.append(f"note.{k} = {v}")
    if expect:
        lines += ["", "[expect]"] + expect
    return "\n".join(lines) + "\n"
