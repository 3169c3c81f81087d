"""Versioned JSON encodings of the library's values.

Schema (version 1) in brief:

* fraction: string "p/q" (always reduced, q > 0)
* block:        {"rows": [[[label, ...], ...], ...]}
* target block: {"top": [[label, ...], ...], "bottom": [[label, ...], ...]}
* formal sum:   {"schema": 1, "kind": ..., "terms": [{"term": ..., "coeff": "p/q"}]}
* tabloid:      {"schema": 1, "shape": [[part, ...], ...], "r": r, "d": [...],
                 "fillings": [[[value, ...], ...], ...]}
* target tabloid: like tabloid plus "grade"
* graph:        {"schema": 1, "r": r, "d": [...], "edges": [[u, v, color], ...]}
* polynomial:   {"schema": 1, "degree": r,
                 "terms": [{"monomial": [variable, ...], "coeff": "p/q"}]}
  where a variable is the nested list form of an n-tuple of index multisets
* matrix: the text dump format of exactalg ("rows cols nnz" header then
  "row col p/q" lines)
"""

from fractions import Fraction

from .generic import Block, FormalSum, TabloidFilling, TargetBlock, TargetTabloid
from .graphs import ColoredGraph
from .symfun import NPartition
from .tangent import ConcretePolynomial

SCHEMA_VERSION = 1


def fraction_to_str(x):
    x = Fraction(x)
    return "%d/%d" % (x.numerator, x.denominator)


def fraction_from_str(s):
    return Fraction(s)


def block_to_json(block):
    return {"rows": [[list(cell) for cell in row] for row in block.rows]}


def block_from_json(data):
    return Block([tuple(tuple(c) for c in row) for row in data["rows"]])


def target_block_to_json(tb):
    return {"top": [list(c) for c in tb.top],
            "bottom": [list(c) for c in tb.bottom]}


def target_block_from_json(data):
    return TargetBlock(tuple(tuple(c) for c in data["top"]),
                       tuple(tuple(c) for c in data["bottom"]))


def tabloid_to_json(filling):
    return {
        "schema": SCHEMA_VERSION,
        "shape": [list(c) for c in filling.shape.components],
        "r": filling.r,
        "d": list(filling.d),
        "fillings": [[list(row) for row in f] for f in filling.fillings],
    }


def tabloid_from_json(data):
    return TabloidFilling(
        NPartition([tuple(c) for c in data["shape"]]),
        data["r"], tuple(data["d"]),
        [tuple(tuple(row) for row in f) for f in data["fillings"]])


def target_tabloid_to_json(tt):
    return {
        "schema": SCHEMA_VERSION,
        "shape": [list(c) for c in tt.shape.components],
        "r": tt.r,
        "d": list(tt.d),
        "grade": list(tt.grade),
        "fillings": [[list(row) for row in f] for f in tt.fillings()],
    }


def target_tabloid_from_json(data):
    return TargetTabloid(
        NPartition([tuple(c) for c in data["shape"]]),
        data["r"], tuple(data["d"]), tuple(data["grade"]))


def formal_sum_to_json(fs):
    terms = []
    kind = None
    for key, coeff in fs:
        if isinstance(key, Block):
            kind, enc = "blocks", block_to_json(key)
        elif isinstance(key, TargetBlock):
            kind, enc = "target_blocks", target_block_to_json(key)
        elif isinstance(key, TargetTabloid):
            kind, enc = "target_tabloids", target_tabloid_to_json(key)
        else:
            raise TypeError("cannot encode term of type %s" % type(key).__name__)
        terms.append({"term": enc, "coeff": fraction_to_str(coeff)})
    return {"schema": SCHEMA_VERSION, "kind": kind or "empty", "terms": terms}


def formal_sum_from_json(data):
    decoders = {
        "blocks": block_from_json,
        "target_blocks": target_block_from_json,
        "target_tabloids": target_tabloid_from_json,
    }
    fs = FormalSum()
    if data["kind"] == "empty":
        return fs
    dec = decoders[data["kind"]]
    for t in data["terms"]:
        fs.add_term(dec(t["term"]), fraction_from_str(t["coeff"]))
    return fs


def graph_to_json(graph):
    return {"schema": SCHEMA_VERSION, "r": graph.r, "d": list(graph.d),
            "edges": [list(e) for e in graph.edges]}


def graph_from_json(data):
    return ColoredGraph(data["r"], tuple(data["d"]),
                        [tuple(e) for e in data["edges"]])


def polynomial_to_json(poly):
    return {
        "schema": SCHEMA_VERSION,
        "degree": poly.degree,
        "terms": [
            {"monomial": [[list(part) for part in var] for var in mono],
             "coeff": fraction_to_str(c)}
            for mono, c in sorted(poly.coeffs.items())
        ],
    }


def polynomial_from_json(data):
    coeffs = {}
    for t in data["terms"]:
        mono = tuple(tuple(tuple(part) for part in var) for var in t["monomial"])
        coeffs[mono] = fraction_from_str(t["coeff"])
    return ConcretePolynomial(data["degree"], coeffs)
