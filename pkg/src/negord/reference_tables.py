"""Hand-transcribed reference tables and the ledger of their known misprints.

Every printed cell is stored exactly as typeset, misprints included, so the
comparison functions can report where computation and print disagree.
Symbolic cells are ``{exponent: coefficient}`` maps in lambda.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as F

from . import families as fam
from .exact import LAMBDA, LaurentPoly


def _L(terms: dict) -> LaurentPoly:
    return LaurentPoly({e: F(c) for e, c in terms.items()})


# y1(n,k;lambda), n = 0..5, k = 0..4
Y1_SYMBOLIC: dict[tuple[int, int], LaurentPoly] = {}
_y1_rows = [
    [{0: 1}, {1: 1}, {2: F(1, 2), 1: 1}, {3: F(1, 6), 2: F(1, 2), 1: F(1, 2)},
     {4: F(1, 24), 3: F(1, 6), 2: F(1, 4), 1: F(1, 6)}],
    [{}, {1: 1}, {2: 1, 1: 1}, {3: F(1, 2), 2: 1, 1: F(1, 2)},
     {4: F(1, 6), 3: F(1, 2), 2: F(1, 2), 1: F(1, 6)}],
    [{}, {1: 1}, {2: 2, 1: 1}, {3: F(3, 2), 2: 2, 1: F(1, 2)},
     {4: F(2, 3), 3: F(3, 2), 2: 1, 1: F(1, 6)}],
    [{}, {1: 1}, {2: 4, 1: 1}, {3: F(9, 2), 2: 4, 1: F(1, 2)},
     {4: F(8, 3), 3: F(9, 2), 2: 2, 1: F(1, 6)}],
    # k=3 cell printed as 27/2 l^3 + 8 l + 1/2 l
    [{}, {1: 1}, {2: 8, 1: 1}, {3: F(27, 2), 1: F(17, 2)},
     {4: F(32, 3), 3: F(27, 2), 2: 4, 1: F(1, 6)}],
    # k=3 cell printed as 81/2 l^3 + 816 l + 1/2 l
    [{}, {1: 1}, {2: 16, 1: 1}, {3: F(81, 2), 1: F(1633, 2)},
     {4: F(128, 3), 3: F(81, 2), 2: 8, 1: F(1, 6)}],
]
for _n, _row in enumerate(_y1_rows):
    for _k, _cell in enumerate(_row):
        Y1_SYMBOLIC[_n, _k] = _L(_cell)

# y1(n,k;1), n, k = 0..9
_y1_num = """
1 2 2 4/3 2/3 4/15 4/45 8/315 2/315 4/2835
0 1 2 2 4/3 2/3 4/15 4/45 8/315 2/315
0 1 3 4 10/3 2 14/15 16/45 4/35 2/63
0 1 5 9 28/3 20/3 18/5 14/9 176/315 6/35
0 1 9 22 85/3 24 224/15 328/45 102/35 62/63
0 1 17 57 274/3 275/3 328/5 1624/45 5048/315 208/35
0 1 33 154 925/3 367 4529/15 8416/45 3224/35 2360/63
0 1 65 429 3238/3 4580/3 7223/5 9065/9 173216/315 8576/35
0 1 129 1222 11665/3 6554 107114/15 252268/45 118717/35 104288/63
0 1 257 3537 42994/3 86645/3 181458/5 1444534/45 6781748/315 402723/35
"""


def _grid(text: str, first_row: int = 0) -> dict[tuple[int, int], F | None]:
    out = {}
    for i, line in enumerate(text.strip().splitlines()):
        for k, cell in enumerate(line.split()):
            out[first_row + i, k] = None if cell == "..." else F(cell)
    return out


Y1_LAMBDA1 = _grid(_y1_num)

# y2(n,k;lambda), n = 0..5, k = 0..3
_y2_rows = [
    [{0: 1}, {-1: F(1, 2), 1: F(1, 2)},
     {2: F(1, 24), 1: F(1, 6), -1: F(1, 6), -2: F(1, 24)},
     {3: F(1, 720), 2: F(1, 120), 1: F(1, 48), -1: F(1, 48), -2: F(1, 120), -3: F(1, 720)}],
    [{}, {1: F(1, 2), -1: F(-1, 2)},
     {2: F(1, 12), 1: F(1, 6), -1: F(-1, 3), -2: F(-1, 6)},
     {3: F(1, 240), 2: F(1, 60), 1: F(1, 28), -1: F(-1, 48), -2: F(-1, 60), -3: F(-1, 240)}],
    [{}, {1: F(1, 2), -1: F(1, 2)},
     {2: F(1, 6), 1: F(1, 6), -1: F(1, 6), -2: F(1, 6)},
     {3: F(1, 80), 2: F(1, 30), 1: F(1, 48), -1: F(1, 48), -2: F(1, 30), -3: F(1, 80)}],
    [{}, {1: F(1, 2), -1: F(-1, 2)},
     {2: F(1, 3), 1: F(1, 6), -1: F(-1, 6), -2: F(-1, 3)},
     {3: F(3, 80), 2: F(1, 15), 1: F(1, 48), -1: F(-1, 48), -2: F(-1, 15), -3: F(-3, 80)}],
    [{}, {1: F(1, 2), -1: F(1, 2)},
     {2: F(2, 3), 1: F(1, 3), -1: F(1, 6), -2: F(2, 3)},
     {3: F(9, 80), 2: F(2, 15), 1: F(1, 48), -1: F(1, 48), -2: F(2, 15), -3: F(9, 80)}],
    [{}, {1: F(1, 2), -1: F(-1, 2)},
     {2: F(4, 3), 1: F(1, 6), -1: F(-1, 6), -2: F(-4, 3)},
     {3: F(27, 80), 2: F(4, 15), 1: F(1, 48), -1: F(-1, 48), -2: F(-4, 15), -3: F(-27, 80)}],
]
Y2_SYMBOLIC: dict[tuple[int, int], LaurentPoly] = {}
for _n, _row in enumerate(_y2_rows):
    for _k, _cell in enumerate(_row):
        Y2_SYMBOLIC[_n, _k] = _L(_cell)

# y2(n,k;1), n = 1..9, k = 0..9
_y2_num = """
0 0 0 0 0 0 0 0 0 0
0 1 2/3 2/15 4/315 2/2835 4/155925 4/6081075 8/638512875 2/10854718875
0 0 0 0 0 0 0 0 0 0
0 1 5/3 8/15 22/315 2/405 34/155925 8/1216215 92/638512875 2/834978375
0 0 0 0 0 0 0 0 0 0
0 1 17/3 47/15 184/315 152/2835 454/155925 634/6081075 1688/638512875 542/10854718875
0 0 0 0 0 0 0 0 0 0
0 1 65/3 338/15 1957/315 2144/2835 7984/155925 2672/1216215 41462/638512875 15206/10854718875
0 0 0 0 0 0 0 0 0 0
"""
Y2_LAMBDA1 = _grid(_y2_num, first_row=1)
# the separately listed n = 0 values, k = 0..4
Y2_ZERO_ROW = {(0, k): v for k, v in enumerate([F(1), F(2), F(2, 3), F(5, 36), F(63, 5292)])}

# E_n^(-k)(1), n = 0..9, k = 0..9 (columns headed 0, -1, ..., -9 in print)
_e_neg = """
1 1/2 3/4 7/8 15/16 33/32 33/64 81/64 ... ...
0 1/2 1 3/2 2 5/2 3 7/2 4 9/2
0 1/2 3/2 3 5 15/2 21/2 14 18 45/2
0 1/2 5/2 27/4 14 25 81/2 245/4 88 243/2
0 1/2 9/2 33/2 85/2 90 168 287 459 1395/2
0 1/2 17/2 171/4 137 1375/4 738 1421 2524 4212
0 1/2 33/2 231/2 925/2 5505/4 13587/4 7364 14508 26550
0 1/2 65/2 1287/4 1619 5725 65007/4 317275/8 86608 173664
0 1/2 129/2 1833/2 11665/2 49155/2 160671/2 441469/2 1068453/2 1173240
0 1/2 513/2 15531/2 161365/2 1951155/4 8499057/4 7418789 22071123 232549335/4
"""
E_NEG_LAMBDA1 = _grid(_e_neg)


# (table, n, k) -> why the printed cell differs from the computed one
KNOWN_TYPOS: dict[tuple[str, int, int], str] = {
    ("y1-symbolic", 0, 1): "constant term of (lambda+1)^k/k! dropped",
    ("y1-symbolic", 0, 2): "constant term of (lambda+1)^k/k! dropped",
    ("y1-symbolic", 0, 3): "constant term of (lambda+1)^k/k! dropped",
    ("y1-symbolic", 0, 4): "constant term of (lambda+1)^k/k! dropped",
    ("y1-symbolic", 4, 3): "'8 lambda' should read '8 lambda^2'",
    ("y1-symbolic", 5, 3): "'816 lambda' should read '16 lambda^2'",
    ("y2-symbolic", 0, 1): "constant term dropped",
    ("y2-symbolic", 0, 2): "constant term dropped",
    ("y2-symbolic", 0, 3): "constant term dropped",
    ("y2-symbolic", 1, 2): "negative-power coefficients -1/3, -1/6 should read -1/6, -1/12",
    ("y2-symbolic", 1, 3): "'lambda/28' should read 'lambda/48'",
    ("y2-symbolic", 4, 2): "'lambda/3' should read 'lambda/6'",
    ("y2-zero-row", 0, 3): "5/36 should read 4/45",
    ("y2-zero-row", 0, 4): "63/5292 should read 2/315",
    ("e-neg", 0, 1): "row n=0 must be all 1 under 0^0 = 1",
    ("e-neg", 0, 2): "row n=0 must be all 1 under 0^0 = 1",
    ("e-neg", 0, 3): "row n=0 must be all 1 under 0^0 = 1",
    ("e-neg", 0, 4): "row n=0 must be all 1 under 0^0 = 1",
    ("e-neg", 0, 5): "row n=0 must be all 1 under 0^0 = 1",
    ("e-neg", 0, 6): "row n=0 must be all 1 under 0^0 = 1",
    ("e-neg", 0, 7): "row n=0 must be all 1 under 0^0 = 1",
    **{("e-neg", 9, k): "row labelled n=9 holds the n=10 values" for k in range(2, 10)},
}


@dataclass(frozen=True)
class TableSource:
    name: str
    family: str
    lam: object
    printed: dict


TABLES: dict[str, TableSource] = {
    "y1-symbolic": TableSource("y1-symbolic", "y1", LAMBDA, Y1_SYMBOLIC),
    "y1-lambda1": TableSource("y1-lambda1", "y1", F(1), Y1_LAMBDA1),
    "y2-symbolic": TableSource("y2-symbolic", "y2", LAMBDA, Y2_SYMBOLIC),
    "y2-lambda1": TableSource("y2-lambda1", "y2", F(1), Y2_LAMBDA1),
    "y2-zero-row": TableSource("y2-zero-row", "y2", F(1), Y2_ZERO_ROW),
    "e-neg": TableSource("e-neg", "e-neg", F(1), E_NEG_LAMBDA1),
}


@dataclass(frozen=True)
class Mismatch:
    table: str
    n: int
    k: int
    printed: object
    computed: object

    @property
    def known(self) -> bool:
        return (self.table, self.n, self.k) in KNOWN_TYPOS

    @property
    def note(self) -> str | None:
        return KNOWN_TYPOS.get((self.table, self.n, self.k))


def compare_table(name: str) -> list[Mismatch]:
    """Cells where the printed value differs from the computed one.

    Cells printed as an ellipsis are skipped.
    """
    src = TABLES[name]
    out = []
    for (n, k), printed in sorted(src.printed.items()):
        if printed is None:
            continue
        computed = fam.evaluate(src.family, n, k, lam=src.lam)
        if computed != printed:
            out.append(Mismatch(name, n, k, printed, computed))
    return out


def printed_cell(family: str, n: int, k: int, lam) -> tuple[str, object] | None:
    """Printed value for a family cell, searching the tables that cover it."""
    for src in TABLES.values():
        if src.family != family or (n, k) not in src.printed:
            continue
        if isinstance(src.lam, LaurentPoly) != isinstance(lam, LaurentPoly):
            continue
        if not isinstance(lam, LaurentPoly) and src.lam != lam:
            continue
        return src.name, src.printed[n, k]
    return None
