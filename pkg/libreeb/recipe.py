"""
Small expression language for building graphs.

  expr    := product (('⊕' | '+') product)*
  product := atom (('×' | '*') atom)*
  atom    := NAME | 'B' '(' expr ')' | 'cone' '(' expr ')'
           | 'refine' '(' expr ',' INT ')' | '(' expr ')'

NAME is a gallery entry or one of the families Cn, Pn, Kn, Wn, Sd.
Parsing and evaluation are separate; parse errors carry the character
position.
"""
import re

from . import fixtures
from .complex import barycentric_refinement, cartesian_product, edge_refine
from .errors import NotRefinableEdge, RecipeError
from .graph_core import (
    complete_graph,
    cone,
    cross_polytope,
    cycle_graph,
    join,
    path_graph,
    wheel_graph,
)

JOIN_OPS = ('⊕', '+')
PRODUCT_OPS = ('×', '*')
FUNCTIONS = ('B', 'cone', 'refine')

# Deeper nesting is rejected rather than recursed into
MAX_DEPTH = 64

_NAME = re.compile(r'[A-Za-z][A-Za-z0-9_-]*')
_INT = re.compile(r'[0-9]+')
_FAMILY = re.compile(r'([CPKWS])([0-9]+)$')

# Largest size accepted per family; S and K grow quadratically in edges
FAMILY_LIMITS = {'S': 32, 'K': 64, 'P': 10000, 'C': 10000, 'W': 10000}


class Node:
    "Parsed recipe: op is 'name', 'join', 'product', 'B', 'cone' or 'refine'"

    __slots__ = ('op', 'args', 'position')

    def __init__(self, op, args, position):
        self.op = op
        self.args = args
        self.position = position

    def __eq__(self, other):
        if not isinstance(other, Node):
            return NotImplemented
        return (self.op, self.args) == (other.op, other.args)

    def __repr__(self):
        return "Node(%s, %r)" % (self.op, self.args)


class _Parser:

    def __init__(self, text):
        self.text = text
        self.pos = 0
        self.depth = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else None

    def expect(self, char):
        if self.peek() != char:
            found = self.peek()
            raise RecipeError("Expected %r, found %s" % (
                char, repr(found) if found is not None else "end of input"), self.pos)
        self.pos += 1

    def parse(self):
        node = self.expr()
        if self.peek() is not None:
            raise RecipeError("Unexpected %r" % self.peek(), self.pos)
        return node

    def expr(self):
        node = self.product()
        while self.peek() in JOIN_OPS:
            position = self.pos
            self.pos += 1
            node = Node('join', (node, self.product()), position)
        return node

    def product(self):
        node = self.atom()
        while self.peek() in PRODUCT_OPS:
            position = self.pos
            self.pos += 1
            node = Node('product', (node, self.atom()), position)
        return node

    def nested(self):
        self.depth += 1
        if self.depth > MAX_DEPTH:
            raise RecipeError("Recipe nested too deeply", self.pos)
        node = self.expr()
        self.depth -= 1
        return node

    def atom(self):
        char = self.peek()
        position = self.pos
        if char is None:
            raise RecipeError("Unexpected end of recipe", position)

        if char == '(':
            self.pos += 1
            node = self.nested()
            self.expect(')')
            return node

        match = _NAME.match(self.text, self.pos)
        if match is None:
            raise RecipeError("Unexpected %r" % char, position)
        name = match.group()
        self.pos = match.end()

        if name in FUNCTIONS and self.peek() == '(':
            self.pos += 1
            inner = self.nested()
            if name == 'refine':
                self.expect(',')
                self.skip()
                number = _INT.match(self.text, self.pos)
                if number is None:
                    raise RecipeError("Expected a dimension", self.pos)
                self.pos = number.end()
                self.expect(')')
                return Node('refine', (inner, int(number.group())), position)
            self.expect(')')
            return Node(name, (inner,), position)

        return Node('name', (name,), position)


def parse(text):
    "Recipe text -> Node tree; RecipeError on malformed input"
    if not isinstance(text, str):
        raise RecipeError("Recipe must be text", 0)
    return _Parser(text).parse()


def named_graph(name, position=0):
    if name in fixtures.GALLERY:
        return fixtures.GALLERY[name]()

    match = _FAMILY.match(name)
    if match is not None:
        family, size = match.group(1), int(match.group(2))
        if size > FAMILY_LIMITS[family]:
            raise RecipeError("%s is larger than %s%d" % (name, family, FAMILY_LIMITS[family]),
                              position)
        if family == 'S':
            return cross_polytope(size)
        if family == 'K' and size >= 1:
            return complete_graph(size)
        if family == 'P' and size >= 1:
            return path_graph(size)
        if family == 'C' and size >= 3:
            return cycle_graph(size)
        if family == 'W' and size >= 3:
            return wheel_graph(size)
    raise RecipeError("Unknown graph %r" % name, position)


def _refine_first_edge(g, d, position):
    "Edge refinement at the first edge, in edge order, that admits one"
    if d < 1:
        raise RecipeError("Edge refinement needs dimension >= 1", position)
    for edge in g.edges:
        try:
            return edge_refine(g, edge, d)
        except NotRefinableEdge:
            continue
    raise RecipeError("No edge admits a %d-dimensional refinement" % d, position)


def evaluate(node):
    if node.op == 'name':
        return named_graph(node.args[0], node.position)
    if node.op == 'join':
        return join(evaluate(node.args[0]), evaluate(node.args[1]))
    if node.op == 'product':
        return cartesian_product(evaluate(node.args[0]), evaluate(node.args[1]))
    if node.op == 'B':
        return barycentric_refinement(evaluate(node.args[0]))
    if node.op == 'cone':
        g = evaluate(node.args[0])
        return cone(g, g.vertices)[0]
    if node.op == 'refine':
        return _refine_first_edge(evaluate(node.args[0]), node.args[1], node.position)
    raise RecipeError("Unknown operation %r" % node.op, node.position)


def generate(text):
    "Parse and evaluate a recipe"
    return evaluate(parse(text))
