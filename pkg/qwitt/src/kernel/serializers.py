"""
Deterministic plain / json / csv renderings of command results.

Records are plain dicts with a fixed key order. Scalars and Laurent polynomials
are always emitted in canonical rendering, never as decimals.
"""

import csv
import io
import json
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .canonical import CanonicalForm
from .derivation import SigmaDerivation
from .report import Claim
from .scalars import QRational
from .twist import TwistContext

Record = Dict[str, Any]


def _scalars(values: Sequence[QRational]) -> List[str]:
    return [c.render() for c in values]


def delta_record(ctx: TwistContext) -> Record:
    return ctx.describe()


def canonical_record(form: CanonicalForm) -> Record:
    return {
        "alphas": _scalars(form.alphas),
        "d_coordinates": _scalars(form.d_coordinates),
        "inner_witness": form.inner_witness.to_json(),
    }


def bracket_record(
    ctx: TwistContext, n: int, m: int, bracket: SigmaDerivation, form: Optional[CanonicalForm]
) -> Record:
    return {
        "s": ctx.s,
        "qmode": ctx.qmode,
        "n": n,
        "m": m,
        "coeff": bracket.coeff.render(),
        "terms": bracket.coeff.to_json(),
        "reduced": _scalars(form.d_coordinates) if form is not None else None,
    }


def reduce_record(ctx: TwistContext, text: str, form: CanonicalForm) -> Record:
    return {"s": ctx.s, "qmode": ctx.qmode, "input": text, **canonical_record(form)}


def table_record(ctx: TwistContext, rows: List[Tuple[int, int, CanonicalForm]]) -> Record:
    return {
        "s": ctx.s,
        "qmode": ctx.qmode,
        "d": ctx.d,
        "rows": [{"n": n, "m": m, **canonical_record(form)} for n, m, form in rows],
    }


def raw_table_record(ctx: TwistContext, rows: List[Tuple[int, int, SigmaDerivation]]) -> Record:
    return {
        "s": ctx.s,
        "qmode": ctx.qmode,
        "rows": [{"n": n, "m": m, "coeff": b.coeff.render(), "terms": b.coeff.to_json()} for n, m, b in rows],
    }


def report_record(contexts: Sequence[TwistContext], claims_by_s: Sequence[Tuple[int, List[Claim]]]) -> Record:
    """{"s", "qmode", "claims"}; with several s values, s is a list and ids carry an [s=...] suffix"""
    if len(contexts) == 1:
        claims = [claim for _, batch in claims_by_s for claim in batch]
        return {"s": contexts[0].s, "qmode": contexts[0].qmode, "claims": claims}
    claims = [{**claim, "id": f"{claim['id']}[s={s}]"} for s, batch in claims_by_s for claim in batch]
    return {"s": [ctx.s for ctx in contexts], "qmode": contexts[0].qmode, "claims": claims}


# Emitters


def to_json(record: Record) -> str:
    return json.dumps(record, indent=2, ensure_ascii=False)


def _plain_value(value: Any) -> str:
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, list):
        return "[" + ", ".join(_plain_value(v) for v in value) + "]"
    if value is None:
        return "-"
    return str(value)


def to_plain(record: Record) -> str:
    lines = []
    for key, value in record.items():
        if key == "claims":
            for claim in value:
                lines.append(f"{claim['status']:<9} {claim['id']}: {claim['evidence']}")
        elif key == "rows":
            for row in value:
                shown = ", ".join(row["d_coordinates"]) if "d_coordinates" in row else row["coeff"]
                lines.append(f"n={row['n']} m={row['m']}: {shown}")
        elif key == "terms":
            continue
        else:
            lines.append(f"{key}: {_plain_value(value)}")
    return "\n".join(lines)


def _csv(header: List[str], rows: List[List[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue().rstrip("\n")


def to_csv(record: Record) -> str:
    if "rows" in record and "d" not in record:
        return _csv(["n", "m", "coeff"], [[row["n"], row["m"], row["coeff"]] for row in record["rows"]])
    if "rows" in record:
        header = ["n", "m"] + [f"d{i}" for i in range(record["d"])]
        return _csv(header, [[row["n"], row["m"], *row["d_coordinates"]] for row in record["rows"]])
    if "claims" in record:
        return _csv(["id", "status", "evidence"], [[c["id"], c["status"], c["evidence"]] for c in record["claims"]])
    flat = {key: _plain_value(value) for key, value in record.items() if key != "terms"}
    return _csv(list(flat), [list(flat.values())])


EMITTERS = {"plain": to_plain, "json": to_json, "csv": to_csv}


def emit(record: Record, output_format: str) -> str:
    return EMITTERS[output_format](record)
