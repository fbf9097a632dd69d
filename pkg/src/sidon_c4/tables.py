"""Deficiency and edge-count tables: computed values next to closed forms."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

from . import formulas
from .analysis import difference_profile
from .constructions import SidonSet, bose_chowla, cartesian1, cartesian2, cartesian3, ruzsa, singer
from .graph import build_sum_graph

DEFAULT_Q = (2, 3, 4, 5, 7, 8, 9, 11, 13)
DEFAULT_P = (3, 5, 7, 11, 13)


@dataclass
class Table:
    columns: list[str]
    rows: list[list]

    @property
    def ok(self) -> bool:
        i = self.columns.index("match")
        return all(r[i] for r in self.rows)

    def mismatches(self) -> list[list]:
        i = self.columns.index("match")
        return [r for r in self.rows if not r[i]]

    def to_text(self) -> str:
        cells = [self.columns] + [[_cell(v) for v in r] for r in self.rows]
        widths = [max(len(row[j]) for row in cells) for j in range(len(self.columns))]
        lines = ["  ".join(c.rjust(w) for c, w in zip(row, widths)).rstrip() for row in cells]
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.columns)
        for r in self.rows:
            w.writerow([_cell(v) for v in r])
        return buf.getvalue()


def _cell(v) -> str:
    if isinstance(v, bool):
        return "yes" if v else "NO"
    return str(v)


def instances(qs=DEFAULT_Q, ps=DEFAULT_P) -> list[SidonSet]:
    """Every family at the given parameters, in table order."""
    out = [bose_chowla(q) for q in qs]
    out += [singer(q) for q in qs]
    for make in (ruzsa, cartesian1, cartesian2, cartesian3):
        out += [make(p) for p in ps]
    return out


def deficiency_table(qs=DEFAULT_Q, ps=DEFAULT_P) -> Table:
    rows = []
    for s in instances(qs, ps):
        prof = difference_profile(s)
        want = formulas.deficiency(s.provenance)
        rows.append([str(s.provenance), s.group.order, len(s), prof.size,
                     prof.deficiency, want, prof.deficiency == want])
    return Table(["set", "|X|", "|A|", "|A-A|", "d(A)", "closed form", "match"], rows)


def edges_table(qs=DEFAULT_Q, ps=DEFAULT_P) -> Table:
    rows = []
    for s in instances(qs, ps):
        G = build_sum_graph(s)
        want_p = formulas.absolute_count(s.provenance)
        want_e = formulas.edge_count(s.provenance)
        p_obs = len(G.absolute)
        rows.append([str(s.provenance), G.n, p_obs, want_p, G.edge_count, want_e,
                     p_obs == want_p and G.edge_count == want_e])
    return Table(["set", "|X|", "|P|", "|P| closed form", "|E|", "|E| closed form", "match"], rows)


TABLES = {"deficiency": deficiency_table, "edges": edges_table}
