"""Lossless JSON formats: points, embedding vectors, fans, reports, polynomials.

Rationals travel as "p/q" strings (denominator 1 omitted), infinities as
"inf" / "-inf"; no floats anywhere.  All emitted structures use canonical
orderings so output is byte-for-byte reproducible.
"""

from __future__ import annotations

from typing import List, Optional, Sequence

from .divisors import BalancingReport, WeightedFan
from .maps import BoundaryDecomposition
from .moduli import EmbeddingVector, ModuliPoint
from .rationals import format_extended, parse_extended
from .semiring import TropicalPolynomial
from .trees import CombinatorialType, Split, _as_labels


def split_to_json(split: Split) -> List[int]:
    return sorted(split.side)


def point_to_json(x: ModuliPoint) -> dict:
    """Point format: {"n": ..., "splits": [{"side": [...], "length": "p/q"|"inf"}]}.

    When the leaf labels are not 1..n (possible after ``forget`` without
    relabeling) an extra "labels" key carries them.
    """
    out: dict = {"n": x.n}
    if x.labels != frozenset(range(1, x.n + 1)):
        out["labels"] = sorted(x.labels)
    out["splits"] = [
        {"side": split_to_json(s), "length": format_extended(v)} for s, v in x.lengths
    ]
    return out


def point_from_json(obj: dict) -> ModuliPoint:
    if not isinstance(obj, dict) or "n" not in obj or "splits" not in obj:
        raise ValueError('a point object needs keys "n" and "splits"')
    labels = _as_labels(obj.get("labels", range(1, int(obj["n"]) + 1)))
    lengths = {}
    for entry in obj["splits"]:
        split = Split.of(labels, entry["side"])
        if split in lengths:
            raise ValueError(f"duplicate split {split.text} in point")
        lengths[split] = parse_extended(entry["length"])
    point = ModuliPoint.of(labels, lengths)
    if point.n != int(obj["n"]):
        raise ValueError('"n" does not match the number of labels')
    return point


def vector_to_json(v: EmbeddingVector) -> List[str]:
    """Vector format: a flat array of "p/q" | "inf" | "-inf" strings in
    canonical coordinate order."""
    return [format_extended(e) for e in v.entries]


def vector_from_json(obj: Sequence, n: int) -> EmbeddingVector:
    if not isinstance(obj, (list, tuple)):
        raise ValueError("a vector is a flat JSON array of rational strings")
    return EmbeddingVector(n, tuple(parse_extended(e) for e in obj))


def fan_to_json(fan: WeightedFan) -> dict:
    return {
        "n": fan.n,
        "dim": fan.dim,
        "cones": [
            {"splits": [split_to_json(s) for s in sorted(c.splits, key=lambda s: s.key)],
             "weight": w}
            for c, w in fan.cones
        ],
    }


def fan_from_json(obj: dict) -> WeightedFan:
    if not isinstance(obj, dict) or not {"n", "dim", "cones"} <= set(obj):
        raise ValueError('a fan object needs keys "n", "dim" and "cones"')
    n = int(obj["n"])
    cones = []
    for entry in obj["cones"]:
        ctype = CombinatorialType.of(n, entry["splits"])
        cones.append((ctype, int(entry.get("weight", 1))))
    fan = WeightedFan(n=n, dim=int(obj["dim"]), cones=tuple(cones))
    return fan


def type_to_json(t: CombinatorialType) -> List[List[int]]:
    return [split_to_json(s) for s in sorted(t.splits, key=lambda s: s.key)]


def report_to_json(report: BalancingReport) -> dict:
    return {
        "face": type_to_json(report.face),
        "adjacent": [
            {
                "cone": type_to_json(rec.cone),
                "extra_split": split_to_json(rec.extra_split),
                "weight": rec.weight,
                "direction": list(rec.direction),
            }
            for rec in report.adjacent
        ],
        "sum": list(report.weighted_sum),
        "balanced": report.balanced,
        "smooth": report.smooth,
    }


def decomposition_to_json(d: BoundaryDecomposition) -> dict:
    return {
        "components": [point_to_json(p) for p in d.components],
        "gluings": [
            [[comp_a, marker_a], [comp_b, marker_b]]
            for (comp_a, marker_a), (comp_b, marker_b) in d.gluings
        ],
    }


def polynomial_to_json(f: TropicalPolynomial) -> dict:
    return {
        "nvars": f.nvars,
        "terms": [
            {"exponents": list(e), "coeff": format_extended(c)} for e, c in f.terms
        ],
    }


def polynomial_from_json(obj: dict) -> TropicalPolynomial:
    if not isinstance(obj, dict) or "terms" not in obj:
        raise ValueError('a polynomial object needs a "terms" key')
    terms = [
        (tuple(entry["exponents"]), parse_extended(entry["coeff"]))
        for entry in obj["terms"]
    ]
    f = TropicalPolynomial.of(terms)
    nvars: Optional[int] = obj.get("nvars")
    if nvars is not None and f.nvars != int(nvars):
        raise ValueError('"nvars" does not match the exponent vectors')
    return f
