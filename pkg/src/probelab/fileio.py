"""Plain-text polytope files.

Grammar, one item per line::

    # comment
    dim <n>
    facet <eta_1> ... <eta_n> <kappa>
    ghost <eta_1> ... <eta_n> <kappa>

Normals are integers and are made primitive on read (``kappa`` is
rescaled); ``kappa`` may be written ``p/q``.
"""

from __future__ import annotations

from typing import Mapping, Optional, Sequence

from .central import AffineFunctional
from .exact import format_rat, parse_rat
from .polytope import HalfSpace, Polytope

__all__ = ["PolytopeFileError", "format_polytope", "parse_polytope", "read_polytope"]


class PolytopeFileError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def parse_polytope(text: str) -> tuple[Polytope, list[AffineFunctional]]:
    dim = None
    facets: list[HalfSpace] = []
    ghosts: list[AffineFunctional] = []
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *rest = line.split()
        if head == "dim":
            if dim is not None:
                raise PolytopeFileError(no, "repeated dim line")
            if len(rest) != 1:
                raise PolytopeFileError(no, "dim takes exactly one integer")
            try:
                dim = int(rest[0])
            except ValueError:
                raise PolytopeFileError(no, f"bad dimension {rest[0]!r}") from None
            if dim < 1:
                raise PolytopeFileError(no, "dimension must be positive")
        elif head in ("facet", "ghost"):
            if dim is None:
                raise PolytopeFileError(no, f"{head} before dim")
            if len(rest) != dim + 1:
                raise PolytopeFileError(no, f"{head} needs {dim} normal entries and a constant, got {len(rest)} tokens")
            try:
                eta = tuple(int(t) for t in rest[:-1])
            except ValueError:
                raise PolytopeFileError(no, "normal entries must be integers") from None
            try:
                kappa = parse_rat(rest[-1])
            except ValueError as exc:
                raise PolytopeFileError(no, str(exc)) from None
            if not any(eta):
                raise PolytopeFileError(no, "zero normal")
            if head == "facet":
                facets.append(HalfSpace(eta, kappa))
            else:
                ghosts.append(AffineFunctional(eta, kappa, True))
        else:
            raise PolytopeFileError(no, f"unknown keyword {head!r}")
    if dim is None:
        raise PolytopeFileError(0, "missing dim line")
    if not facets:
        raise PolytopeFileError(0, "no facet lines")
    return Polytope.from_halfspaces(dim, facets), ghosts


def format_polytope(P: Polytope, ghosts: Sequence[AffineFunctional] = (),
                    comments: Sequence[str] = (),
                    facet_notes: Optional[Mapping[int, str]] = None) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"dim {P.dim}")
    for i, h in enumerate(P.halfspaces):
        line = "facet " + " ".join(str(c) for c in h.eta) + " " + format_rat(h.kappa)
        if facet_notes and i in facet_notes:
            line += f"  # {facet_notes[i]}"
        lines.append(line)
    for g in ghosts:
        lines.append("ghost " + " ".join(str(c) for c in g.eta) + " " + format_rat(g.kappa))
    return "\n".join(lines) + "\n"


def read_polytope(path) -> tuple[Polytope, list[AffineFunctional]]:
    with open(path, encoding="utf-8") as fh:
        return parse_polytope(fh.read())

