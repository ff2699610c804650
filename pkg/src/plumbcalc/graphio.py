"""Line-oriented file formats for plumbing graphs and move traces.

Graph files: ``#`` comments and blank lines are ignored; every other line is

    vertex <id> <weight>
    edge <id> <id>

Trace files are a graph file (the start diagram) followed by move lines, one
move per line:

    blowdown <id>
    cancel <id> <id>
    blowup <weight> <id> [<id> [<id>]]

(The ``blowup`` verb appears only in traces produced with the reducer's
optional blow-up depth; default searches emit blowdown and cancel lines
only.)

Parsing reports the offending line for every malformed document, and the
graph invariants (unique ids, known endpoints, no loops or parallel edges,
forest) are checked incrementally so the diagnostic points at the exact
line that breaks them.
"""

from __future__ import annotations

from .calculus import Move, MoveTrace
from .errors import GraphFormatError
from .graphs import VERTEX_ID_RE, PlumbingGraph

__all__ = [
    "parse_graph",
    "parse_trace",
    "format_graph",
    "format_trace",
    "to_dot",
]


class _Parser:
    def __init__(self, text: str, source: str):
        self.source = source
        self.lines = text.splitlines()
        self.weights: dict[str, int] = {}
        self.edges: list[tuple[str, str]] = []
        self.moves: list[Move] = []
        self._edge_set: set[tuple[str, str]] = set()
        self._parent: dict[str, str] = {}

    def fail(self, lineno: int, message: str):
        raise GraphFormatError(f"{self.source}:{lineno}: {message}")

    def _find(self, x: str) -> str:
        while self._parent[x] != x:
            self._parent[x] = self._parent[self._parent[x]]
            x = self._parent[x]
        return x

    def _id(self, lineno: int, token: str, must_exist: bool) -> str:
        if not VERTEX_ID_RE.match(token):
            self.fail(lineno, f"bad vertex id {token!r}")
        if must_exist and token not in self.weights:
            self.fail(lineno, f"unknown vertex {token!r}")
        return token

    def run(self, allow_moves: bool):
        for lineno, raw in enumerate(self.lines, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            tokens = line.split()
            directive, args = tokens[0], tokens[1:]
            if directive == "vertex":
                self.vertex(lineno, args)
            elif directive == "edge":
                self.edge(lineno, args)
            elif directive in ("blowdown", "cancel", "blowup"):
                if not allow_moves:
                    self.fail(lineno, f"move line {directive!r} in a graph file")
                self.move(lineno, directive, args)
            else:
                self.fail(lineno, f"unknown directive {directive!r}")

    def vertex(self, lineno: int, args):
        if self.moves:
            self.fail(lineno, "vertex line after the first move line")
        if len(args) != 2:
            self.fail(lineno, "vertex line needs exactly: vertex <id> <weight>")
        vid = self._id(lineno, args[0], must_exist=False)
        if vid in self.weights:
            self.fail(lineno, f"duplicate vertex id {vid!r}")
        try:
            weight = int(args[1])
        except ValueError:
            self.fail(lineno, f"weight {args[1]!r} is not an integer")
        self.weights[vid] = weight
        self._parent[vid] = vid

    def edge(self, lineno: int, args):
        if self.moves:
            self.fail(lineno, "edge line after the first move line")
        if len(args) != 2:
            self.fail(lineno, "edge line needs exactly: edge <id> <id>")
        u = self._id(lineno, args[0], must_exist=True)
        v = self._id(lineno, args[1], must_exist=True)
        if u == v:
            self.fail(lineno, f"loop edge at {u!r}")
        key = (u, v) if u < v else (v, u)
        if key in self._edge_set:
            self.fail(lineno, f"parallel edge ({u!r}, {v!r})")
        if self._find(u) == self._find(v):
            self.fail(lineno, f"edge ({u!r}, {v!r}) closes a cycle (graph must be a forest)")
        self._parent[self._find(u)] = self._find(v)
        self._edge_set.add(key)
        self.edges.append(key)

    def move(self, lineno: int, kind: str, args):
        if kind == "blowup":
            if not 2 <= len(args) <= 4:
                self.fail(lineno, "blowup line needs: blowup <weight> <id> [<id> [<id>]]")
            try:
                weight = int(args[0])
            except ValueError:
                self.fail(lineno, f"blow-up weight {args[0]!r} is not an integer")
            ids = tuple(args[1:])
            for token in ids:
                self._id(lineno, token, must_exist=False)
            self.moves.append(Move(kind, ids, weight=weight))
            return
        want = 1 if kind == "blowdown" else 2
        if len(args) != want:
            self.fail(lineno, f"{kind} line needs exactly {want} vertex id(s)")
        for token in args:
            self._id(lineno, token, must_exist=False)
        self.moves.append(Move(kind, tuple(args)))

    def graph(self) -> PlumbingGraph:
        return PlumbingGraph.build(self.weights, self.edges)


def parse_graph(text: str, source: str = "<graph>") -> PlumbingGraph:
    parser = _Parser(text, source)
    parser.run(allow_moves=False)
    return parser.graph()


def parse_trace(text: str, source: str = "<trace>") -> tuple[PlumbingGraph, list[Move]]:
    """Parse a trace document into (start graph, moves).  Moves are not
    replayed here; use MoveTrace.replay or apply_move to validate them
    against the graph."""
    parser = _Parser(text, source)
    parser.run(allow_moves=True)
    return parser.graph(), parser.moves


def format_graph(g: PlumbingGraph, comments=()) -> str:
    lines = [f"# {c}" if c else "#" for c in comments]
    lines += [f"vertex {v} {w}" for v, w in g.vertices]
    lines += [f"edge {u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n" if lines else ""


def format_trace(trace: MoveTrace, comments=()) -> str:
    body = format_graph(trace.start, comments)
    move_lines = "".join(f"{m}\n" for m in trace.moves)
    return body + move_lines


def to_dot(g: PlumbingGraph, name: str = "plumbing") -> str:
    """DOT rendering with weights as labels and stable (sorted) ordering."""
    lines = [f"graph {name} {{"]
    for v, w in g.vertices:
        lines.append(f'  "{v}" [label="{v}: {w}"];')
    for u, v in g.edges:
        lines.append(f'  "{u}" -- "{v}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
