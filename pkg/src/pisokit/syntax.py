"""S-expression syntax for trees, arrows and terms; JSON for diagrams.

Grammar::

    tree  := S | (tree tree)
    arrow := (arrow :dom TREE :cod TREE :terms (((leaf u) (leaf v)) ...))
    term  := arrow | code | decode | p | q | tau-int | sigma-int
           | (id T) | (tau A B C) | (tau-inv A B C) | (sigma A B)
           | (comp t t ...) | (tensor t t) | (tensor-int t t) | (dag t) | (join t t)

``TREE`` may be written bare or as a quoted string.  Leaves are words over
``{L, R}`` and ``u``, ``v`` are bit-strings; the empty word is ``""``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Union

from . import coherence as c
from .errors import TypingError
from .prefix import PrefixArrow
from .trees import S, Tree, TreeError, parse_tree, show


class ParseError(ValueError):
    def __init__(self, msg: str, line: int = 0, col: int = 0):
        self.line, self.col = line, col
        super().__init__(f"{line}:{col}: {msg}" if line else msg)


@dataclass(frozen=True)
class Atom:
    text: str
    quoted: bool
    line: int
    col: int


@dataclass
class Node:
    items: list
    line: int
    col: int


Sexp = Union[Atom, Node]


def tokenize(src: str):
    i, line, col = 0, 1, 1
    n = len(src)
    while i < n:
        ch = src[i]
        if ch == "\n":
            i, line, col = i + 1, line + 1, 1
        elif ch.isspace():
            i, col = i + 1, col + 1
        elif ch == ";":
            while i < n and src[i] != "\n":
                i += 1
        elif ch in "()":
            yield ch, line, col
            i, col = i + 1, col + 1
        elif ch == '"':
            j = src.find('"', i + 1)
            if j < 0:
                raise ParseError("unterminated string", line, col)
            yield Atom(src[i + 1:j], True, line, col), line, col
            col += j + 1 - i
            i = j + 1
        else:
            j = i
            while j < n and not src[j].isspace() and src[j] not in '()";':
                j += 1
            yield Atom(src[i:j], False, line, col), line, col
            col += j - i
            i = j


def read(src: str) -> Sexp:
    stack: list[Node] = []
    result = None
    for tok, line, col in tokenize(src):
        if result is not None:
            msg = "unbalanced ')'" if tok == ")" else "trailing input after expression"
            raise ParseError(msg, line, col)
        if tok == "(":
            stack.append(Node([], line, col))
        elif tok == ")":
            if not stack:
                raise ParseError("unbalanced ')'", line, col)
            node = stack.pop()
            if stack:
                stack[-1].items.append(node)
            else:
                result = node
        elif stack:
            stack[-1].items.append(tok)
        else:
            result = tok
    if stack:
        raise ParseError("unbalanced '(': missing ')'", stack[-1].line, stack[-1].col)
    if result is None:
        raise ParseError("empty input", 1, 1)
    return result


# -- elaboration ------------------------------------------------------------------

def _tree(x: Sexp) -> Tree:
    if isinstance(x, Atom):
        if x.quoted:
            try:
                return parse_tree(x.text)
            except TreeError as exc:
                raise ParseError(str(exc), x.line, x.col) from None
        if x.text == S:
            return S
        raise ParseError(f"expected a tree, got {x.text!r}", x.line, x.col)
    if len(x.items) != 2:
        raise ParseError("a tree node has exactly two children", x.line, x.col)
    return (_tree(x.items[0]), _tree(x.items[1]))


def _word(x: Sexp, alphabet: str, what: str) -> str:
    if not isinstance(x, Atom) or not set(x.text) <= set(alphabet):
        line, col = (x.line, x.col)
        raise ParseError(f"expected a {what} over {{{', '.join(alphabet)}}}", line, col)
    return x.text


def _arrow(x: Node) -> PrefixArrow:
    fields = {}
    items = x.items[1:]
    if len(items) % 2:
        raise ParseError("arrow expects :key value pairs", x.line, x.col)
    for k, v in zip(items[::2], items[1::2]):
        if not isinstance(k, Atom) or k.text not in (":dom", ":cod", ":terms"):
            raise ParseError("arrow keys are :dom, :cod and :terms", k.line, k.col)
        fields[k.text] = v
    for key in (":dom", ":cod", ":terms"):
        if key not in fields:
            raise ParseError(f"arrow is missing {key}", x.line, x.col)
    dom, cod = _tree(fields[":dom"]), _tree(fields[":cod"])
    terms_node = fields[":terms"]
    if not isinstance(terms_node, Node):
        raise ParseError(":terms must be a list", terms_node.line, terms_node.col)
    terms = []
    for t in terms_node.items:
        if not (isinstance(t, Node) and len(t.items) == 2
                and all(isinstance(side, Node) and len(side.items) == 2 for side in t.items)):
            raise ParseError("a term is ((leaf u) (leaf v))", t.line, t.col)
        (tl, u), (sl, v) = (side.items for side in t.items)
        terms.append((
            _word(tl, "LR", "leaf path"), _word(u, "01", "bit-string"),
            _word(sl, "LR", "leaf path"), _word(v, "01", "bit-string"),
        ))
    try:
        return PrefixArrow(dom, cod, tuple(terms))
    except ValueError as exc:
        raise ParseError(str(exc), x.line, x.col) from None


NULLARY = {
    "code": c.Code, "decode": c.Decode, "p": c.P, "q": c.Q,
    "tau-int": c.AssocInternal, "sigma-int": c.SymInternal,
}


def _term(x: Sexp):
    if isinstance(x, Atom):
        if not x.quoted and x.text in NULLARY:
            return NULLARY[x.text]()
        raise ParseError(f"unknown term {x.text!r}", x.line, x.col)
    if not x.items or not isinstance(x.items[0], Atom) or x.items[0].quoted:
        raise ParseError("expected (operator args...)", x.line, x.col)
    head, args = x.items[0].text, x.items[1:]

    def arity(k: int) -> None:
        if len(args) != k:
            raise ParseError(f"{head} takes {k} argument(s), got {len(args)}", x.line, x.col)

    if head == "arrow":
        return c.Literal(_arrow(x))
    if head == "id":
        arity(1)
        return c.Id(_tree(args[0]))
    if head in ("tau", "tau-inv"):
        arity(3)
        trees = [_tree(a) for a in args]
        return c.Assoc(*trees) if head == "tau" else c.AssocInv(*trees)
    if head == "sigma":
        arity(2)
        return c.Sym(_tree(args[0]), _tree(args[1]))
    if head == "comp":
        if len(args) < 2:
            raise ParseError("comp takes at least 2 arguments", x.line, x.col)
        return c.comp(*(_term(a) for a in args))
    if head in ("tensor", "tensor-int", "join"):
        arity(2)
        kind = {"tensor": c.Tensor, "tensor-int": c.TensorInternal, "join": c.Join}[head]
        return kind(_term(args[0]), _term(args[1]))
    if head == "dag":
        arity(1)
        return c.Dagger(_term(args[0]))
    if head == S or isinstance(x.items[0], Node):
        raise ParseError("a tree is not an arrow", x.line, x.col)
    raise ParseError(f"unknown operator {head!r}", x.line, x.col)


def _is_tree(x: Sexp) -> bool:
    if isinstance(x, Atom):
        return not x.quoted and x.text == S
    return len(x.items) == 2 and all(_is_tree(i) for i in x.items)


def parse(src: str):
    """Parse a tree or a term; terms are type-checked."""
    x = read(src)
    if _is_tree(x):
        return _tree(x)
    t = _term(x)
    c.typeof(t)
    return t


def parse_term(src: str):
    t = parse(src)
    if isinstance(t, (str, tuple)):
        raise ParseError("expected a term, got a tree")
    return t


def parse_arrow(src: str) -> PrefixArrow:
    t = parse_term(src)
    if not isinstance(t, c.Literal):
        raise ParseError("expected an arrow literal")
    return t.arrow


# -- printing ---------------------------------------------------------------------

def print_arrow(f: PrefixArrow) -> str:
    terms = " ".join(f'(("{t}" "{u}") ("{s}" "{v}"))' for t, u, s, v in f.terms)
    return f'(arrow :dom "{show(f.dom)}" :cod "{show(f.cod)}" :terms ({terms}))'


_NULLARY_NAMES = {v: k for k, v in NULLARY.items()}


def print_term(t) -> str:
    if isinstance(t, (str, tuple)):
        return show(t)
    if type(t) in _NULLARY_NAMES:
        return _NULLARY_NAMES[type(t)]
    if isinstance(t, c.Literal):
        return print_arrow(t.arrow)
    if isinstance(t, c.Id):
        return f"(id {show(t.tree)})"
    if isinstance(t, c.Assoc):
        return f"(tau {show(t.a)} {show(t.b)} {show(t.c)})"
    if isinstance(t, c.AssocInv):
        return f"(tau-inv {show(t.a)} {show(t.b)} {show(t.c)})"
    if isinstance(t, c.Sym):
        return f"(sigma {show(t.a)} {show(t.b)})"
    if isinstance(t, c.Compose):
        return f"(comp {print_term(t.outer)} {print_term(t.inner)})"
    if isinstance(t, c.Dagger):
        return f"(dag {print_term(t.term)})"
    head = {c.Tensor: "tensor", c.TensorInternal: "tensor-int", c.Join: "join"}[type(t)]
    return f"({head} {print_term(t.left)} {print_term(t.right)})"


# -- diagrams as JSON ----------------------------------------------------------------

def diagram_from_dict(doc: dict) -> c.Diagram:
    try:
        nodes = {}
        for n in doc["nodes"]:
            tree = n["tree"]
            nodes[str(n["id"])] = c.UNTYPED if tree == "untyped" else parse_tree(tree)
        edges = []
        for i, e in enumerate(doc["edges"]):
            term = parse_term(e["term"])
            edges.append(c.Edge(str(e.get("id", i)), str(e["src"]), str(e["dst"]), term))
        asserts = [(tuple(str(x) for x in a), tuple(str(x) for x in b)) for a, b in doc["asserts"]]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed diagram document: {exc}") from None
    except TreeError as exc:
        raise ParseError(str(exc)) from None
    return c.Diagram(nodes, edges, asserts)


def load_diagram(text: str) -> c.Diagram:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    return diagram_from_dict(doc)


def diagram_to_dict(d: c.Diagram) -> dict:
    return {
        "nodes": [{"id": k, "tree": "untyped" if v is c.UNTYPED else show(v)} for k, v in d.nodes.items()],
        "edges": [{"id": e.id, "src": e.src, "dst": e.dst, "term": print_term(e.term)} for e in d.edges],
        "asserts": [[list(a), list(b)] for a, b in d.asserts],
    }


def dump_diagram(d: c.Diagram) -> str:
    return json.dumps(diagram_to_dict(d), indent=2)


# -- matrices --------------------------------------------------------------------

def print_matrix(m) -> str:
    a, b, cc, d = (print_arrow(x) for x in m)
    return f"(({a} {b}) ({cc} {d}))"


def parse_matrix(src: str):
    from .p2matrix import Matrix2

    x = read(src)
    if not (isinstance(x, Node) and len(x.items) == 2
            and all(isinstance(r, Node) and len(r.items) == 2 for r in x.items)):
        raise ParseError("a matrix is ((a b) (c d))", getattr(x, "line", 0), getattr(x, "col", 0))
    cells = []
    for row in x.items:
        for cell in row.items:
            if not (isinstance(cell, Node) and cell.items and getattr(cell.items[0], "text", None) == "arrow"):
                raise ParseError("matrix entries are arrow literals", cell.line, cell.col)
            cells.append(_arrow(cell))
    return Matrix2(*cells)
