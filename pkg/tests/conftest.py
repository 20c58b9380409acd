from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path

import pytest
import sympy
from sympy.parsing.sympy_parser import (
    implicit_multiplication_application,
    parse_expr,
    standard_transformations,
)

from lieulrich import build
from lieulrich.sing import variable_names

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"

ALL_TYPES = (
    [("A", n) for n in range(1, 9)]
    + [("B", n) for n in range(2, 9)]
    + [("C", n) for n in range(2, 9)]
    + [("D", n) for n in range(3, 9)]
    + [("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]
)
EXCEPTIONAL = [("G", 2), ("F", 4), ("E", 6), ("E", 7), ("E", 8)]
EXCEPTIONAL_CASES = [(s, r, k) for s, r in EXCEPTIONAL for k in range(1, r + 1)]

_TRANSFORMS = standard_transformations + (implicit_multiplication_application,)


def linear_form(expr: str, rank: int) -> tuple[Fraction, ...]:
    """(constant, coefficient of a, of b, ...) for a LaTeX affine expression."""
    names = variable_names(rank)
    syms = sympy.symbols(names)
    src = re.sub(r"\\frac\{(\d+)\}\{(\d+)\}", r"(\1/\2)", expr)
    e = sympy.expand(parse_expr(src, local_dict=dict(zip(names, syms)), transformations=_TRANSFORMS))
    poly = sympy.Poly(e, *syms)
    if poly.total_degree() > 1:
        raise ValueError(f"not affine: {expr}")
    const = e.subs({s: 0 for s in syms})
    return (Fraction(str(const)),) + tuple(Fraction(str(poly.coeff_monomial(s))) for s in syms)


@pytest.fixture(scope="session")
def reference_forms() -> dict[str, list[str]]:
    return json.loads((DATA / "reference_sing_forms.json").read_text())


def rs_of(name: str):
    return build(name[0], int(name[1:]))


# --- acceptance report -------------------------------------------------------

_CRITERIA: list[tuple[str, str, bool, float]] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): an acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker and rep.when == "call":
        _CRITERIA.append((marker.args[0], marker.args[1], rep.passed, rep.duration))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, secs in sorted(_CRITERIA):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {number}  {title}  ({secs:.2f} s)")
