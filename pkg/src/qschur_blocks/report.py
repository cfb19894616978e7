"""Text, JSON and TSV renderings of block decompositions and Jantzen edges."""

from __future__ import annotations

import json
from typing import Iterable, Optional

from .blocks import BlockDecomposition, WeightPoset, block_label, chi_with_e_core
from .jantzen import JantzenEdge
from .partitions import Partition


def parts(mu: Optional[Partition]) -> Optional[list[int]]:
    return None if mu is None else list(mu)


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def block_report(poset: WeightPoset, blocks: BlockDecomposition, verified: bool) -> dict:
    """The block report as a JSON-ready dict.

    ``chi_pcore`` is ``[]`` for blocks with ``s == 1``, where it plays no part
    in the classification.
    """
    return {
        "r": poset.r,
        "e": poset.params.e,
        "p": poset.params.p,
        "poset": poset.spec,
        "cosaturated": poset.cosaturated,
        "e_cosaturated": poset.e_cosaturated,
        "blocks": [
            {
                "core": parts(c.core),
                "s": c.s,
                "chi_pcore": parts(c.chi_pcore) if c.chi_pcore is not None else [],
                "members": [parts(mu) for mu in c.members],
            }
            for c in blocks.classes
        ],
        "verified_against_jantzen": verified,
    }


def blocks_text(poset: WeightPoset, blocks: BlockDecomposition, verified: bool,
                diagnostics: bool = False) -> str:
    e, p = poset.params.e, poset.params.p
    lines = [
        f"r={poset.r} e={e} p={p} poset={poset.spec}",
        f"cosaturated={_yes(poset.cosaturated)} e-cosaturated={_yes(poset.e_cosaturated)}",
    ]
    header = ["mu", f"{e}-core", "ell", "s", "chi", f"{p}-core(chi)"]
    if diagnostics:
        header.append("chi via e-core")
    rows = []
    for c in blocks.classes:
        rows.append(None)
        for mu in c.members:
            inv = block_label(poset, mu)
            row = [str(mu), str(inv.core), str(inv.ell), str(inv.s), str(inv.chi), str(inv.chi_pcore)]
            if diagnostics:
                row.append("(" + ", ".join(str(x) for x in chi_with_e_core(poset, mu)) + ")")
            rows.append(row)
    widths = [max([len(header[k])] + [len(r[k]) for r in rows if r]) for k in range(len(header))]
    fmt = lambda cells: "  ".join(x.ljust(w) for x, w in zip(cells, widths)).rstrip()
    lines.append(fmt(header))
    for row in rows:
        lines.append("-" * len(fmt(header)) if row is None else fmt(row))
    lines.append(f"{len(blocks.classes)} blocks; verified against Jantzen linkage: {_yes(verified)}")
    return "\n".join(lines) + "\n"


def blocks_tsv(poset: WeightPoset, blocks: BlockDecomposition) -> str:
    out = ["block\tcore\ts\tchi_pcore\tmember\tell\tchi"]
    for i, c in enumerate(blocks.classes, start=1):
        for mu in c.members:
            inv = block_label(poset, mu)
            pc = "" if c.chi_pcore is None else _tsv(c.chi_pcore)
            out.append("\t".join([str(i), _tsv(c.core), str(c.s), pc, _tsv(mu),
                                  str(inv.ell), _tsv(inv.chi)]))
    return "\n".join(out) + "\n"


def _tsv(mu: Partition) -> str:
    return ",".join(map(str, mu))


def _node(n) -> list[int]:
    return [n.row, n.col]


def edge_record(edge: JantzenEdge) -> dict:
    rec = {"upper": parts(edge.upper), "lower": parts(edge.lower)}
    if edge.row_witness is not None:
        rec["row_witness"] = [_node(n) for n in edge.row_witness]
    if edge.col_witness is not None:
        rec["col_witness"] = [_node(n) for n in edge.col_witness]
    rec["moved_size"] = edge.moved_size
    rec["magnitude"] = edge.magnitude
    rec["sign"] = edge.sign if edge.sign is not None else "unknown"
    return rec


def edges_json(edges: Iterable[JantzenEdge]) -> str:
    return dumps([edge_record(e) for e in edges])


def edges_tsv(edges: Iterable[JantzenEdge]) -> str:
    out = ["upper\tlower\twitness\tmoved_size\tmagnitude\tsign"]
    for e in edges:
        w = e.row_witness or e.col_witness
        wit = ";".join(f"{n.row},{n.col}" for n in w)
        sign = "unknown" if e.sign is None else str(e.sign)
        out.append(f"{_tsv(e.upper)}\t{_tsv(e.lower)}\t{wit}\t{e.moved_size}\t{e.magnitude}\t{sign}")
    return "\n".join(out) + "\n"


def edges_text(edges: Iterable[JantzenEdge]) -> str:
    lines = []
    for e in edges:
        if e.row_witness is not None:
            (a, b), (_, c) = e.row_witness
            how = f"rows: nodes ({a},{b}) ({a},{c})"
        else:
            (x, z), (y, _) = e.col_witness
            how = f"cols: nodes ({x},{z}) ({y},{z})"
        sign = "?" if e.sign is None else ("+" if e.sign > 0 else "-")
        lines.append(f"{e.upper} > {e.lower}  {how}  hook {e.moved_size}  gap {e.magnitude}  sign {sign}")
    return "\n".join(lines) + ("\n" if lines else "")
