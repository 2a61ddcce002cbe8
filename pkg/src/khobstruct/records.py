"""JSON record schema for knot/link inputs and obstruction reports.

Records are line-delimited JSON objects, one knot or link per line, so
that very large tables can be streamed.  All polynomial payloads are
exact integer data:

* ``khp``: list of ``[t_exp, q_exp, coeff]`` triples.
* ``jones``: list of ``[q_exp, coeff]`` pairs.
* ``alexander`` (and each entry of ``alexander_quotients``): object
  ``{"lowest": e, "coeffs": [c0, c1, ...]}`` meaning
  ``c0*t^e + c1*t^(e+1) + ...``.
* ``homflypt``: list of ``[a_exp, z_exp, coeff]`` triples.
* ``torsion`` / ``torsion_quotient``: list of ``[q, i, mult]`` triples
  for a sum of ``Z/q^i`` summands.
* ``link_data``: object with ``k``, ``m``, ``pi`` (1-based images),
  ``lk`` (matrix), and optional ``offsets`` (list of
  ``{"signs": [...], "s": int}``).
* ``base``: optional explicit starting decomposition for prime periods,
  ``{"s01": triples, "s11": triples}``.
* ``free_parts``: optional explicit list of triple-lists, one per
  decomposition summand.

``schema_version`` is currently 1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .equivlee import PeriodicLinkData
from .laurent import BiLaurent, QLaurent

SCHEMA_VERSION = 1


class SchemaError(ValueError):
    """A record does not conform to the input schema."""


@dataclass(frozen=True)
class KnotRecord:
    name: str
    khp: BiLaurent | None = None
    field_char: int = 0
    s_invariant: int | None = None
    jones: QLaurent | None = None
    alexander: QLaurent | None = None
    alexander_quotients: tuple[QLaurent, ...] = ()
    homflypt_triples: tuple[tuple[int, int, int], ...] | None = None
    torsion: tuple[tuple[int, int, int], ...] | None = None
    torsion_quotient: tuple[tuple[int, int, int], ...] = ()
    determinant: int | None = None
    determinant_quotient: int | None = None
    link_data: PeriodicLinkData | None = None
    base_blocks: tuple[BiLaurent, BiLaurent] | None = None
    free_parts: tuple[BiLaurent, ...] | None = None
    raw: dict = field(default_factory=dict, compare=False)


def _triples(value, what: str) -> list[tuple[int, int, int]]:
    if not isinstance(value, list):
        raise SchemaError(f"{what} must be a list of triples")
    out = []
    for item in value:
        if not (isinstance(item, list) and len(item) == 3):
            raise SchemaError(f"{what} entries must be 3-element lists")
        if not all(isinstance(x, int) for x in item):
            raise SchemaError(f"{what} entries must be integers")
        out.append((item[0], item[1], item[2]))
    return out


def _alex(value, what: str) -> QLaurent:
    if not (isinstance(value, dict) and "lowest" in value and "coeffs" in value):
        raise SchemaError(f"{what} must be an object with 'lowest' and 'coeffs'")
    lowest, coeffs = value["lowest"], value["coeffs"]
    if not isinstance(lowest, int) or not isinstance(coeffs, list):
        raise SchemaError(f"{what} has malformed fields")
    if not all(isinstance(c, int) for c in coeffs):
        raise SchemaError(f"{what} coefficients must be integers")
    return QLaurent({lowest + i: c for i, c in enumerate(coeffs)})


def _link_data(value) -> PeriodicLinkData:
    try:
        k = int(value["k"])
        m = int(value["m"])
        pi = tuple(int(x) - 1 for x in value["pi"])
        lk = tuple(tuple(int(x) for x in row) for row in value["lk"])
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"malformed link_data: {exc}") from exc
    offsets = []
    for item in value.get("offsets", []):
        try:
            offsets.append((tuple(int(x) for x in item["signs"]), int(item["s"])))
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError(f"malformed link_data offsets: {exc}") from exc
    try:
        return PeriodicLinkData(k=k, m=m, pi=pi, lk=lk, s_pair=tuple(offsets))
    except ValueError as exc:
        raise SchemaError(f"inconsistent link_data: {exc}") from exc


def parse_record(obj: dict) -> KnotRecord:
    if not isinstance(obj, dict):
        raise SchemaError("record must be a JSON object")
    version = obj.get("schema_version", SCHEMA_VERSION)
    if version != SCHEMA_VERSION:
        raise SchemaError(f"unsupported schema_version {version}")
    name = obj.get("name")
    if not isinstance(name, str) or not name:
        raise SchemaError("record requires a nonempty string 'name'")
    khp = None
    if "khp" in obj:
        khp = BiLaurent.from_triples(_triples(obj["khp"], "khp"))
        if not khp.is_nonneg():
            raise SchemaError("khp coefficients must be positive")
    field_char = obj.get("field_char", 0)
    if not isinstance(field_char, int) or field_char < 0:
        raise SchemaError("field_char must be a nonnegative integer")
    s_inv = obj.get("s_invariant")
    if s_inv is not None and not isinstance(s_inv, int):
        raise SchemaError("s_invariant must be an integer")
    jones = None
    if "jones" in obj:
        pairs = obj["jones"]
        if not (
            isinstance(pairs, list)
            and all(isinstance(x, list) and len(x) == 2 for x in pairs)
        ):
            raise SchemaError("jones must be a list of [exp, coeff] pairs")
        jones = QLaurent({int(j): int(c) for j, c in pairs})
    alexander = _alex(obj["alexander"], "alexander") if "alexander" in obj else None
    quotients = tuple(
        _alex(x, "alexander_quotients") for x in obj.get("alexander_quotients", [])
    )
    homfly = tuple(_triples(obj["homflypt"], "homflypt")) if "homflypt" in obj else None
    torsion = tuple(_triples(obj["torsion"], "torsion")) if "torsion" in obj else None
    torsion_q = tuple(_triples(obj.get("torsion_quotient", []), "torsion_quotient"))
    link_data = _link_data(obj["link_data"]) if "link_data" in obj else None
    base_blocks = None
    if "base" in obj:
        base = obj["base"]
        if not (isinstance(base, dict) and "s01" in base and "s11" in base):
            raise SchemaError("base must be an object with 's01' and 's11'")
        base_blocks = (
            BiLaurent.from_triples(_triples(base["s01"], "base.s01")),
            BiLaurent.from_triples(_triples(base["s11"], "base.s11")),
        )
    free_parts = None
    if "free_parts" in obj:
        free_parts = tuple(
            BiLaurent.from_triples(_triples(part, "free_parts"))
            for part in obj["free_parts"]
        )
    for det_key in ("determinant", "determinant_quotient"):
        if det_key in obj and not isinstance(obj[det_key], int):
            raise SchemaError(f"{det_key} must be an integer")
    return KnotRecord(
        name=name,
        khp=khp,
        field_char=field_char,
        s_invariant=s_inv,
        jones=jones,
        alexander=alexander,
        alexander_quotients=quotients,
        homflypt_triples=homfly,
        torsion=torsion,
        torsion_quotient=torsion_q,
        determinant=obj.get("determinant"),
        determinant_quotient=obj.get("determinant_quotient"),
        link_data=link_data,
        base_blocks=base_blocks,
        free_parts=free_parts,
        raw=dict(obj),
    )


def bilaurent_triples(poly: BiLaurent) -> list[list[int]]:
    return [[i, j, c] for (i, j), c in sorted(poly.terms.items())]


def serialize_record(rec: KnotRecord) -> dict:
    """Canonical JSON form of a record (sorted, normalised payloads)."""
    out: dict = {"schema_version": SCHEMA_VERSION, "name": rec.name}
    if rec.khp is not None:
        out["khp"] = bilaurent_triples(rec.khp)
    if rec.field_char:
        out["field_char"] = rec.field_char
    if rec.s_invariant is not None:
        out["s_invariant"] = rec.s_invariant
    if rec.jones is not None:
        out["jones"] = [[j, c] for j, c in sorted(rec.jones.terms.items())]
    if rec.alexander is not None:
        out["alexander"] = _alex_json(rec.alexander)
    if rec.alexander_quotients:
        out["alexander_quotients"] = [_alex_json(a) for a in rec.alexander_quotients]
    if rec.homflypt_triples is not None:
        out["homflypt"] = [list(x) for x in sorted(rec.homflypt_triples)]
    if rec.torsion is not None:
        out["torsion"] = [list(x) for x in sorted(rec.torsion)]
    if rec.torsion_quotient:
        out["torsion_quotient"] = [list(x) for x in sorted(rec.torsion_quotient)]
    if rec.determinant is not None:
        out["determinant"] = rec.determinant
    if rec.determinant_quotient is not None:
        out["determinant_quotient"] = rec.determinant_quotient
    if rec.link_data is not None:
        ld = rec.link_data
        out["link_data"] = {
            "k": ld.k,
            "m": ld.m,
            "pi": [x + 1 for x in ld.pi],
            "lk": [list(row) for row in ld.lk],
        }
        if ld.s_pair:
            out["link_data"]["offsets"] = [
                {"signs": list(signs), "s": s} for signs, s in ld.s_pair
            ]
    if rec.base_blocks is not None:
        out["base"] = {
            "s01": bilaurent_triples(rec.base_blocks[0]),
            "s11": bilaurent_triples(rec.base_blocks[1]),
        }
    if rec.free_parts is not None:
        out["free_parts"] = [bilaurent_triples(p) for p in rec.free_parts]
    return out


def _alex_json(poly: QLaurent) -> dict:
    terms = poly.terms
    if not terms:
        return {"lowest": 0, "coeffs": []}
    lo, hi = min(terms), max(terms)
    return {"lowest": lo, "coeffs": [terms.get(j, 0) for j in range(lo, hi + 1)]}


def dumps_canonical(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))
