"""
Code tables - 码参数表
=====================================
功能:
1. TableRow: one printed row (group, B1/B2 formulas, n, n-k, d, markers)
2. TABLES: the Abelian table (4), the long cyclic table (5) and the
   non-Abelian table (10)
3. GENERATOR_LISTINGS: printed stabilizer generator lists for the worked
   examples, with the construction that produces them

Markers: "l" = best parameters known for that length, "u" = highest rate
for that distance. They are carried as annotations only.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple, Union

from errors import UnknownTableError

# ============================================================================
# 数据类
# ============================================================================


@dataclass(frozen=True)
class TableRow:
    """One row of a printed code table"""
    table: int
    group: str                  # printed group label, e.g. "C_2×C_4"
    b1: str
    b2: str
    n: int
    n_minus_k: int
    d: int
    markers: Tuple[str, ...] = ()

    @property
    def k(self) -> int:
        return self.n - self.n_minus_k

    @property
    def label(self) -> str:
        return f"[[{self.n},{self.k},{self.d}]]"

    def key(self) -> str:
        return f"{self.group} {self.label}"

    def to_dict(self) -> dict:
        return {
            "table": self.table,
            "group": self.group,
            "b1": self.b1,
            "b2": self.b2,
            "n": self.n,
            "n_minus_k": self.n_minus_k,
            "k": self.k,
            "d": self.d,
            "markers": list(self.markers),
        }


@dataclass(frozen=True)
class GeneratorListing:
    """Printed generator list for a worked example"""
    name: str                   # "[[11,1,5]]"
    scheme: str                 # scheme spec
    b1: str
    b2: str
    drop_last: int
    rows: Tuple[str, ...]
    missing: Tuple[int, ...] = ()   # 0-based rows absent from the printed list


def _rows(table: int, group: str, b1: str, b2: str, entries: Sequence[tuple]) -> List[TableRow]:
    """entries: (n - k, d) or (n - k, d, markers) sharing one B1/B2 pair"""
    n = _order(group)
    out = []
    for entry in entries:
        markers = entry[2] if len(entry) > 2 else ()
        out.append(TableRow(table, group, b1, b2, n, entry[0], entry[1], tuple(markers)))
    return out


def _order(group: str) -> int:
    size = 1
    for part in group.split("×"):
        size *= int(part.split("_")[1])
    return size


# ============================================================================
# Abelian group schemes
# ============================================================================

_C21_B1 = "A_3+A_4+A_6+A_9+A_10"
_C21_B2 = "A_3+A_5+A_6+A_7+A_8"

ABELIAN_TABLE: Tuple[TableRow, ...] = tuple(
    _rows(4, "C_8", "A_3+A_4", "A_2+A_3", [(6, 3)])
    + _rows(4, "C_2×C_4", "I_2A_2+XA_1", "I_2A_1+XA_1+XA_2", [(6, 3)])
    + _rows(4, "C_2×C_2×C_2", "I_2I_2X+XI_2I_2+XI_2X+XXX", "I_2I_2X+I_2XI_2+XXI_2+XXX", [(5, 3, "l")])
    + _rows(4, "C_9", "A_1+A_2", "A_2+A_4", [(6, 3)])
    + _rows(4, "C_3×C_3", "I_3A_1+SS+S^2S^2", "I_3A_1+SS^2+S^2S", [(6, 3)])
    + _rows(4, "C_10", "A_2+A_4+A_5", "A_0+A_2+A_3", [(6, 3)])
    + _rows(4, "C_10", "A_4", "A_0+A_3+A_5", [(9, 4)])
    + _rows(4, "C_11", "A_1+A_3+A_4+A_5", "A_2+A_5", [(7, 3)])
    + _rows(4, "C_11", "A_1+A_4+A_5", "A_2+A_5", [(10, 5)])
    + _rows(4, "C_12", "A_2+A_4+A_5+A_6", "A_2+A_3+A_5", [(6, 3, "l")])
    + _rows(4, "C_12", "A_2+A_4+A_5+A_6", "A_2+A_3+A_5+A_6", [(7, 3)])
    + _rows(4, "C_3×C_4", "I_12+I_3A_1+A_1I_4", "A_1A_1+A_1I_4", [(10, 3)])
    + _rows(4, "C_3×C_2×C_2", "A_1I_2I_2+A_1I_2X+A_1XX", "I_3XI_2+I_3XX+A_1I_2X", [(8, 3)])
    + _rows(4, "C_13", "A_1+A_3+A_4+A_5", "A_2+A_3+A_5", [(8, 3), (12, 5)])
    + _rows(4, "C_14", "A_0+A_3+A_4+A_6+A_7", "A_2+A_3+A_5", [(8, 3), (11, 4)])
    + _rows(4, "C_15", "A_3+A_4+A_6+A_7", "A_1+A_2+A_3+A_5", [(9, 3)])
    + _rows(4, "C_16", "A_3+A_4+A_6", "A_2+A_3+A_5", [(11, 3)])
    + _rows(4, "C_16", "A_0+A_3+A_4+A_8", "A_0+A_1+A_2+A_5", [(8, 3)])
    + _rows(4, "C_2×C_8", "I_2A_2+XA_2+XA_4+I_2A_3+I_2A_4+XA_1",
            "I_2A_2+XA_3+I_2A_1+I_2A_3+I_2I_8", [(7, 3)])
    + _rows(4, "C_2×C_2×C_4",
            "I_2I_2A_2+A_1I_2A_1+A_1A_1I_4+I_2A_1I_4+I_2A_1A_1+A_1A_1A_1",
            "I_2I_2A_2+A_1I_2A_2+I_2I_2A_1+I_2A_1A_2+I_2A_1I_4+I_2A_1A_1+A_1A_1A_1", [(8, 3)])
    + _rows(4, "C_4×C_4", "I_4A_1+A_1A_1+A_1A_2+A_2A_2", "I_4A_2+A_1I_4+A_1A_2+A_2I_4+A_2A_1", [(12, 3)])
    + _rows(4, "C_2×C_2×C_2×C_2", "XI_2I_2X+XI_2XX+XXXX+I_2XXX",
            "I_2I_2I_2X+I_2I_2XI_2+I_2I_2XX+I_2XI_2X+I_2XXI_2+XI_2I_2X+XXI_2I_2+XXXI_2", [(9, 3)])
    + _rows(4, "C_17", "A_3+A_4+A_6+A_7+A_8", "A_2+A_3+A_5", [(10, 3), (14, 4)])
    + _rows(4, "C_18", "A_0+A_3+A_4+A_5+A_6", "A_3+A_5+A_6+A_7+A_8+A_9", [(10, 3)])
    + _rows(4, "C_19", "A_3+A_4+A_6+A_9", "A_3+A_5+A_6+A_7", [(10, 3)])
    + _rows(4, "C_20", _C21_B1, _C21_B2, [(8, 3)])
    + _rows(4, "C_21", _C21_B1, _C21_B2, [(8, 3), (11, 4), (12, 5), (16, 7, "l")])
)

# ============================================================================
# Long cyclic codes
# ============================================================================

_C30_B1 = "A_3+A_4+A_6+A_9+A_10+A_14"
_C30_B2 = "A_3+A_5+A_6+A_7+A_8+A_13+A_15"
_C40_B1 = "A_3+A_4+A_6+A_9+A_10+A_12+A_14+A_15+A_16+A_18+A_19"
_C40_B2 = "A_3+A_5+A_6+A_7+A_8+A_12+A_15+A_16+A_17+A_18+A_20"

CYCLIC_LONG_TABLE: Tuple[TableRow, ...] = tuple(
    _rows(5, "C_25", _C21_B1, _C21_B2, [(8, 3), (12, 4)])
    + _rows(5, "C_30", _C30_B1, _C30_B2, [(8, 3), (18, 5)])
    + _rows(5, "C_40", _C40_B1, _C40_B2, [(10, 3, "u"), (14, 5, "u"), (19, 7, "lu")])
)

# ============================================================================
# Non-Abelian group schemes
# ============================================================================

NONABELIAN_TABLE: Tuple[TableRow, ...] = tuple(
    _rows(10, "U_12", "A_1+A_2+A_4", "A_3", [(8, 3)])
    + _rows(10, "U_12", "A_1+A_2+A_5", "A_0+A_4", [(8, 3)])
    + _rows(10, "U_12", "A_2", "A_3+A_5", [(8, 3)])
    + _rows(10, "U_12", "A_1+A_2+A_5", "A_0+A_4", [(11, 4)])
    + _rows(10, "U_18", "A_1+A_2+A_3+A_7+A_8", "A_0+A_1+A_2+A_4+A_5", [(12, 3)])
    + _rows(10, "U_18", "A_1+A_2+A_3+A_7", "A_0+A_1+A_2+A_4", [(13, 3), (16, 4)])
    + _rows(10, "U_24", "A_0+A_1+A_2+A_3+A_4+A_8+A_10", "A_0+A_3+A_5+A_6+A_11", [(12, 3), (16, 5)])
    + _rows(10, "T_12", "A_2+A_4", "A_0+A_5", [(9, 3)])
    + _rows(10, "T_12", "A_0+A_4", "A_1+A_2+A_5", [(10, 3)])
    + _rows(10, "T_16", "A_0+A_1+A_2+A_6", "A_0+A_2+A_3", [(14, 3)])
    + _rows(10, "V_24", "A_0+A_3+A_6+A_7", "A_0+A_2+A_4", [(20, 3)])
    + _rows(10, "D_12", "A_3+A_5", "A_2+A_3+A_5", [(10, 3)])
)

TABLES: Dict[int, Tuple[TableRow, ...]] = {
    4: ABELIAN_TABLE,
    5: CYCLIC_LONG_TABLE,
    10: NONABELIAN_TABLE,
}

TABLE_ALIASES = {"abelian": 4, "cyclic-long": 5, "nonabelian": 10}


def resolve_table_id(table_id: Union[int, str]) -> int:
    if isinstance(table_id, str):
        text = table_id.strip().lower()
        if text in TABLE_ALIASES:
            return TABLE_ALIASES[text]
        try:
            table_id = int(text)
        except ValueError:
            raise UnknownTableError(f"unknown table {table_id!r} (4, 5, 10)") from None
    if table_id not in TABLES:
        raise UnknownTableError(f"unknown table {table_id!r} (4, 5, 10)")
    return table_id


def table_rows(table_id: Union[int, str], rows_filter: Optional[Sequence[str]] = None) -> List[TableRow]:
    """Rows of one table; ``rows_filter`` keeps rows whose group or [[n,k,d]] label is listed."""
    rows = list(TABLES[resolve_table_id(table_id)])
    if not rows_filter:
        return rows
    wanted = {f.replace(" ", "").replace("x", "×") for f in rows_filter}
    return [r for r in rows if r.group in wanted or r.label in wanted]


# ============================================================================
# Generator listings
# ============================================================================

GENERATOR_LISTINGS: Dict[str, GeneratorListing] = {
    "[[5,1,3]]": GeneratorListing(
        "[[5,1,3]]", "cyclic:5", "A_1", "A_2", 1,
        ("IXZZX", "XIXZZ", "ZXIXZ", "ZZXIX"),
    ),
    "[[6,1,3]]": GeneratorListing(
        "[[6,1,3]]", "cyclic:6", "A_2+A_3", "A_0+A_1+A_2", 1,
        ("ZZYXYZ", "ZZZYXY", "YZZZYX", "XYZZZY", "YXYZZZ"),
    ),
    "[[7,1,3]]": GeneratorListing(
        "[[7,1,3]]", "cyclic:7", "A_1", "A_2+A_3", 1,
        ("IXZZZZX", "XIXZZZZ", "ZXIXZZZ", "ZZXIXZZ", "ZZZXIXZ", "ZZZZXIX"),
    ),
    "[[11,1,5]]": GeneratorListing(
        "[[11,1,5]]", "cyclic:11", "A_1+A_4+A_5", "A_2+A_5", 1,
        ("IXZIXYYXIZX", "XIXZIXYYXIZ", "ZXIXZIXYYXI", "IZXIXZIXYYX", "XIZXIXZIXYY",
         "YXIZXIXZIXY", "XYYXIZXIXZI", "IXYYXIZXIXZ", "ZIXYYXIZXIX"),
        missing=(6,),
    ),
    "[[13,1,5]]": GeneratorListing(
        "[[13,1,5]]", "cyclic:13", "A_1+A_3+A_4+A_5", "A_2+A_3+A_5", 1,
        ("IXZYXYIIYXYZX", "XIXZYXYIIYXYZ", "ZXIXZYXYIIYXY", "YZXIXZYXYIIYX",
         "XYZXIXZYXYIIY", "YXYZXIXZYXYII", "IYXYZXIXZYXYI", "IIYXYZXIXZYXY",
         "YIIYXYZXIXZYX", "XYIIYXYZXIXZY", "YXYIIYXYZXIXZ", "ZYXYIIYXYZXIX"),
    ),
    "[[21,5,7]]": GeneratorListing(
        "[[21,5,7]]", "cyclic:21", _C21_B1, _C21_B2, 5,
        ("IIIYXZYZZXXXXZZYZXYII", "IIIIYXZYZZXXXXZZYZXYI", "IIIIIYXZYZZXXXXZZYZXY",
         "YIIIIIYXZYZZXXXXZZYZX", "XYIIIIIYXZYZZXXXXZZYZ", "ZXYIIIIIYXZYZZXXXXZZY",
         "YZXYIIIIIYXZYZZXXXXZZ", "ZYZXYIIIIIYXZYZZXXXXZ", "ZZYZXYIIIIIYXZYZZXXXX",
         "XZZYZXYIIIIIYXZYZZXXX", "XXZZYZXYIIIIIYXZYZZXX", "XXXZZYZXYIIIIIYXZYZZX",
         "XXXXZZYZXYIIIIIYXZYZZ", "ZXXXXZZYZXYIIIIIYXZYZ", "ZZXXXXZZYZXYIIIIIYXZY",
         "YZZXXXXZZYZXYIIIIIYXZ"),
    ),
    "[[12,4,3]]": GeneratorListing(
        "[[12,4,3]]", "u6n:2", "A_2", "A_3+A_5", 4,
        ("IZIIXZZIXZZI", "IIZIIXZZIXZZ", "IIIZZIXZZIXZ", "ZIIIZZIXZZIX",
         "XZZIIZIIXZZI", "IXZZIIZIIXZZ", "ZIXZIIIZZIXZ", "ZZIXZIIIZZIX"),
    ),
}
