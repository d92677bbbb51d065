"""Text formats for point sets, valued sets and graphs, and the output document.

Input lines: ``x y`` (points), ``x y : v`` (valued points), ``c1 .. cd``
with optional ``: v`` (n-dimensional), ``vertices N`` followed by ``u v``
(graphs), ``n x y`` (custom arrays). ``#`` starts a comment.
"""

from fractions import Fraction

from .rational import fmt_rat, parse_rat


class ParseError(ValueError):
    def __init__(self, line, col, msg):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.line = line
        self.col = col
        self.msg = msg


def _tokens(line):
    """Whitespace tokens with 1-based start columns, comment stripped."""
    cut = line.find("#")
    if cut >= 0:
        line = line[:cut]
    out = []
    i = 0
    while i < len(line):
        if line[i].isspace():
            i += 1
            continue
        j = i
        while j < len(line) and not line[j].isspace():
            j += 1
        out.append((line[i:j], i + 1))
        i = j
    return out


def _split_value(toks):
    """Split off a trailing ``: v``; tolerates ``x y: v`` and ``x y :v``."""
    flat = []
    for t, c in toks:
        if ":" in t and t != ":":
            k = t.index(":")
            if k:
                flat.append((t[:k], c))
            flat.append((":", c + k))
            if t[k + 1:]:
                flat.append((t[k + 1:], c + k + 1))
        else:
            flat.append((t, c))
    if any(t == ":" for t, _ in flat):
        k = next(i for i, (t, _) in enumerate(flat) if t == ":")
        return flat[:k], flat[k + 1:], flat[k][1]
    return flat, None, None


def _rat(tok, lineno):
    t, c = tok
    try:
        return parse_rat(t)
    except ValueError:
        raise ParseError(lineno, c, f"bad rational literal {t!r}") from None


def parse_points(text, dim=None, valued=False):
    """Parse rows of ``dim`` rationals (any fixed dim if None).

    Returns a list of tuples, or of (tuple, value) pairs when ``valued``.
    Duplicate points are an error.
    """
    out = []
    seen = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        toks = _tokens(line)
        if not toks:
            continue
        coords, val, vcol = _split_value(toks)
        if valued and val is None:
            raise ParseError(lineno, len(line.rstrip()) + 1, "missing ': value'")
        if not valued and val is not None:
            raise ParseError(lineno, vcol, "unexpected ':' in a point-only file")
        if valued and len(val) != 1:
            col = val[1][1] if len(val) > 1 else vcol + 1
            raise ParseError(lineno, col, "expected exactly one value after ':'")
        if dim is None:
            dim = len(coords)
            if dim < 2:
                raise ParseError(lineno, toks[0][1], "need at least 2 coordinates")
        if len(coords) != dim:
            col = coords[dim][1] if len(coords) > dim else (coords[-1][1] if coords else 1)
            raise ParseError(lineno, col, f"expected {dim} coordinates, got {len(coords)}")
        p = tuple(_rat(t, lineno) for t in coords)
        if p in seen:
            raise ParseError(lineno, coords[0][1], f"duplicate point (first on line {seen[p]})")
        seen[p] = lineno
        out.append((p, _rat(val[0], lineno)) if valued else p)
    return out


def parse_custom_array(text):
    """Rows ``n x y``: an ordering column then the point."""
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        toks = _tokens(line)
        if not toks:
            continue
        if len(toks) != 3:
            raise ParseError(lineno, toks[0][1], "expected 'n x y'")
        t, c = toks[0]
        try:
            n = int(t)
        except ValueError:
            raise ParseError(lineno, c, f"bad index {t!r}") from None
        out.append((n, (_rat(toks[1], lineno), _rat(toks[2], lineno))))
    return out


def parse_graph(text):
    """``vertices N`` header, then ``u v`` edges. Returns (N, edge list)."""
    n = None
    edges = []
    for lineno, line in enumerate(text.splitlines(), 1):
        toks = _tokens(line)
        if not toks:
            continue
        if n is None:
            if toks[0][0] != "vertices" or len(toks) != 2:
                raise ParseError(lineno, toks[0][1], "expected 'vertices N' header")
            n = _int(toks[1], lineno, "vertex count")
            if n < 0:
                raise ParseError(lineno, toks[1][1], "vertex count must be >= 0")
            continue
        if len(toks) != 2:
            raise ParseError(lineno, toks[0][1], "expected an edge 'u v'")
        u, v = (_int(t, lineno, "vertex") for t in toks)
        for val, (_, col) in zip((u, v), toks):
            if not 0 <= val < n:
                raise ParseError(lineno, col, f"vertex {val} out of range 0..{n - 1}")
        if u == v:
            raise ParseError(lineno, toks[0][1], "loops are not allowed")
        edges.append((u, v))
    if n is None:
        raise ParseError(1, 1, "empty graph file (missing 'vertices N')")
    seen = set()
    for u, v in edges:
        e = (min(u, v), max(u, v))
        if e in seen:
            raise ParseError(1, 1, f"repeated edge {u} {v}")
        seen.add(e)
    return n, edges


def _int(tok, lineno, what):
    t, c = tok
    try:
        return int(t)
    except ValueError:
        raise ParseError(lineno, c, f"bad {what} {t!r}") from None


def write_points(points, values=None):
    lines = []
    for p in points:
        s = " ".join(fmt_rat(c) for c in p)
        if values is not None:
            s += " : " + fmt_rat(values[p])
        lines.append(s)
    return "\n".join(lines) + ("\n" if lines else "")


def write_graph(G):
    lines = [f"vertices {G.n}"] + [f"{u} {v}" for u, v in sorted(G.edges)]
    return "\n".join(lines) + "\n"


class Block(list):
    """Ordered key/value block; values may be scalars, lists or Blocks."""

    def add(self, key, value):
        self.append((key, value))
        return self


class Table(Block):
    """Block rendered as ``key -> value`` lines."""


def fmt_value(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "none"
    if isinstance(v, (Fraction, int)):
        return fmt_rat(v)
    if isinstance(v, float):
        return repr(v)
    if isinstance(v, tuple):
        return " ".join(fmt_value(c) for c in v)
    return str(v)


def render(block, indent=0):
    pad = "  " * indent
    out = []
    for key, value in block:
        if isinstance(value, Table):
            out.append(f"{pad}{key}:")
            out.extend(f"{pad}  {fmt_value(k)} -> {fmt_value(v)}" for k, v in value)
        elif isinstance(value, Block):
            out.append(f"{pad}{key}:")
            out.extend(render(value, indent + 1))
        elif isinstance(value, list) and not value:
            out.append(f"{pad}{key}: []")
        elif isinstance(value, list):
            out.append(f"{pad}{key}:")
            for item in value:
                if isinstance(item, Block):
                    out.append(f"{pad}  -")
                    out.extend(render(item, indent + 2))
                else:
                    out.append(f"{pad}  - {fmt_value(item)}")
        else:
            out.append(f"{pad}{key}: {fmt_value(value)}")
    return out


def render_doc(block):
    return "\n".join(render(block)) + "\n"
