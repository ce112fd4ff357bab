"""
Scheme spec strings and scheme export - 方案解析与导出
=====================================
Spec grammar:

    cyclic:N                 C_N
    u6n:N | t4n:N | v8n:N | d2n:N
    product:SPEC,SPEC,...    components are non-product specs
    abelian:N1,N2,...        shorthand for product of cyclic:Ni

Group labels as printed in the code tables (C_12, U_12, T_16, V_24, D_12,
C_2×C_4, C3xC3) are accepted as well.
"""

import re
from typing import Callable, Dict

from errors import SchemeError, SchemeSpecError
from schemes.cyclic import abelian_scheme, cyclic_scheme, product_scheme
from schemes.nonabelian import d2n_scheme, t4n_scheme, u6n_scheme, v8n_scheme
from schemes.scheme import AssociationScheme, VerificationReport

FAMILIES: Dict[str, Callable[[int], AssociationScheme]] = {
    "cyclic": cyclic_scheme,
    "u6n": u6n_scheme,
    "t4n": t4n_scheme,
    "v8n": v8n_scheme,
    "d2n": d2n_scheme,
}

# label letter -> (family, group order divisor)
_LABEL_FAMILIES = {"C": ("cyclic", 1), "U": ("u6n", 6), "T": ("t4n", 4), "V": ("v8n", 8), "D": ("d2n", 2)}
_LABEL_RE = re.compile(r"^([CUTVD])_?\{?(\d+)\}?$")


def _parse_int(text: str, spec: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise SchemeSpecError(f"bad parameter {text!r} in scheme spec {spec!r}") from None


def label_to_spec(label: str) -> str:
    """'C_2×C_4' -> 'product:cyclic:2,cyclic:4', 'U_12' -> 'u6n:2'."""
    parts = [p.strip() for p in re.split(r"[×xX*]", label.replace(" ", "")) if p.strip()]
    specs = []
    for part in parts:
        m = _LABEL_RE.match(part)
        if not m:
            raise SchemeSpecError(f"unrecognised group label {label!r}")
        family, divisor = _LABEL_FAMILIES[m.group(1)]
        order = int(m.group(2))
        if order % divisor:
            raise SchemeSpecError(f"{part}: order {order} is not a multiple of {divisor}")
        specs.append(f"{family}:{order // divisor}")
    if not specs:
        raise SchemeSpecError(f"empty group label {label!r}")
    if len(specs) == 1:
        return specs[0]
    return "product:" + ",".join(specs)


def parse_scheme_spec(spec: str) -> AssociationScheme:
    text = spec.strip()
    if not text:
        raise SchemeSpecError("empty scheme spec")
    if ":" not in text:
        return parse_scheme_spec(label_to_spec(text))

    head, _, rest = text.partition(":")
    head = head.lower()
    try:
        if head == "product":
            items = [item for item in rest.split(",") if item.strip()]
            if not items:
                raise SchemeSpecError(f"product spec {spec!r} has no components")
            components = []
            for item in items:
                if item.strip().lower().startswith(("product", "abelian")):
                    raise SchemeSpecError(f"nested product in {spec!r}")
                components.append(parse_scheme_spec(item))
            return product_scheme(components)
        if head == "abelian":
            factors = tuple(_parse_int(f, spec) for f in rest.split(",") if f.strip())
            if any(f < 2 for f in factors):
                raise SchemeSpecError(f"abelian factors must be >= 2 in {spec!r}")
            return abelian_scheme(factors)
        if head in FAMILIES:
            return FAMILIES[head](_parse_int(rest, spec))
    except SchemeSpecError:
        raise
    except SchemeError as exc:
        raise SchemeSpecError(f"{spec}: {exc}") from exc
    raise SchemeSpecError(f"unknown scheme family {head!r} in {spec!r}")


# ============================================================================
# Export
# ============================================================================

def dump_scheme(s: AssociationScheme, report: VerificationReport = None) -> dict:
    """JSON-ready dump: nu, d, labels, valencies and hex-packed adjacency rows."""
    out = {
        "label": s.label,
        "spec": s.spec,
        "nu": s.nu,
        "classes": s.classes,
        "valencies": s.valencies(),
        "adjacency": [{"index": i, "rows": a.to_hex_rows()} for i, a in enumerate(s.adjacency)],
    }
    if report is not None:
        out["verification"] = report.to_dict()
    return out


def format_scheme_text(s: AssociationScheme, with_matrices: bool = False) -> str:
    lines = [
        f"scheme   {s.label}  ({s.spec})",
        f"vertices {s.nu}",
        f"classes  d={s.classes}, {len(s.adjacency)} adjacency matrices",
        "valency  " + " ".join(f"A_{i}:{v}" for i, v in enumerate(s.valencies())),
    ]
    if with_matrices:
        for i, a in enumerate(s.adjacency):
            lines.append(f"A_{i}")
            lines.extend("  " + r for r in a.to_strings())
    return "\n".join(lines)
