"""Export of homomorphism instances as OPL integer-program files.

The data file carries the source graph (N vertices, M arcs, 1-based arc
list) and the target 5-tournament as its sorted arc-code list, where arc
(u, v) is coded as the integer u + 5v. The fixed model file decides
whether a vertex map phi exists sending every arc onto a tournament arc,
by forcing phi[tail] + 5*phi[head] to equal one of the ten codes.
"""

from __future__ import annotations

from .digraph import OrientedGraph
from .tournaments import Tournament, arc_codes

_WRAP_COLUMNS = 80

_MODEL = """\
  int N = ...;
  int M = ...;
  range I = 1..10;
  range Vertices = 1..N;
  range Arcs = 1..M;

  int T[i in I] = ...;
  int arc[Arcs][1..2] = ...;

  dvar int phi[j in Vertices];
  dvar boolean z[i in I,a in Arcs];

  minimize 1;

  subject to {
    // the coloring is correct
    forall (a in Arcs)
        phi[arc[a][1]] + 5*phi[arc[a][2]] == sum(i in I) z[i,a]*T[i];

    // colors go from 0 to 4
    forall (j in Vertices) (phi[j] >= 0);
    forall (j in Vertices) (phi[j] <= 4);

    // just one z equals 1 for each arc
    forall (a in Arcs) sum(i in I) z[i,a] == 1;
  }
"""


def export_opl_model() -> str:
    """The fixed model file text."""
    return _MODEL


def export_opl_data(g: OrientedGraph, t: Tournament) -> str:
    """Data file for checking whether g maps into the 5-tournament t.

    Arcs appear in g's stored order; the arc list wraps at 80 columns with
    a 4-space continuation indent.
    """
    codes = arc_codes(t)
    lines = [
        f"  N = {g.n_vertices};",
        f"  M = {len(g.arcs)};",
        "  T = [" + " ".join(str(c) for c in codes) + "];",
    ]
    chunks = [f"[{u + 1} {v + 1}]" for (u, v) in g.arcs]
    current = "  arc = ["
    first = True
    for chunk in chunks:
        piece = chunk if first else " " + chunk
        if not first and len(current) + len(piece) > _WRAP_COLUMNS:
            lines.append(current)
            current = "    " + chunk
        else:
            current += piece
        first = False
    lines.append(current + "];")
    return "\n".join(lines) + "\n"
