"""
File formats: Graph JSON, Coloring JSON, verdict and report records, DOT.

Graph JSON is bit-exact:
  {"vertices": [...], "edges": [[a,b],...]}
vertices sorted, each edge once with sorted endpoints, tuples written as
nested arrays.
"""
import json

from .complex import Coloring, as_rational, format_rational
from .errors import GraphFormatError
from .graph_core import Graph

COMPACT = (',', ':')

# Deepest array nesting accepted in a vertex identifier
MAX_VERTEX_DEPTH = 64


def encode_vertex(vertex):
    "Vertex -> JSON value"
    if isinstance(vertex, tuple):
        return [encode_vertex(part) for part in vertex]
    return vertex


def decode_vertex(value, depth=0):
    "JSON value -> vertex; arrays become tuples"
    if depth > MAX_VERTEX_DEPTH:
        raise GraphFormatError("Vertex identifier nested deeper than %d" % MAX_VERTEX_DEPTH)
    if isinstance(value, bool) or value is None:
        raise GraphFormatError("Invalid vertex identifier %r" % (value,))
    if isinstance(value, (int, str)):
        return value
    if isinstance(value, list):
        return tuple(decode_vertex(part, depth + 1) for part in value)
    raise GraphFormatError("Invalid vertex identifier %r" % (value,))


def vertex_token(vertex):
    "Key used for a vertex in Coloring JSON and DOT"
    if isinstance(vertex, tuple):
        return json.dumps(encode_vertex(vertex), separators=COMPACT)
    return str(vertex)


def _load(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as ex:
        raise GraphFormatError(ex.msg, ex.lineno, ex.colno) from None
    except RecursionError:
        raise GraphFormatError("JSON nested too deeply") from None
    except ValueError as ex:
        raise GraphFormatError(str(ex)) from None


def _read(path):
    "File contents as text; undecodable bytes are a format error"
    with open(path, 'rb') as handle:
        raw = handle.read()
    try:
        return raw.decode('utf-8')
    except UnicodeDecodeError as ex:
        raise GraphFormatError("%s is not UTF-8: byte %d" % (path, ex.start)) from None


##
# Graph JSON
##

def dump_graph(g, **metadata):
    "Graph JSON; metadata keys follow the edges and are ignored by the parser"
    vertices = [encode_vertex(v) for v in g.vertices]
    edges = [[encode_vertex(a), encode_vertex(b)] for a, b in g.edges]
    text = ('{"vertices": ' + json.dumps(vertices, separators=COMPACT)
            + ', "edges": ' + json.dumps(edges, separators=COMPACT))
    for key, value in metadata.items():
        text += ", %s: %s" % (json.dumps(key), json.dumps(value))
    return text + '}'


def graph_from_data(data):
    "Build a graph from already decoded Graph JSON"
    if not isinstance(data, dict) or 'vertices' not in data or 'edges' not in data:
        raise GraphFormatError('Expected an object with "vertices" and "edges"')
    if not isinstance(data['vertices'], list) or not isinstance(data['edges'], list):
        raise GraphFormatError('"vertices" and "edges" must be arrays')

    vertices = [decode_vertex(v) for v in data['vertices']]
    if len(set(vertices)) != len(vertices):
        raise GraphFormatError("Duplicate vertex")
    known = set(vertices)

    seen = set()
    edges = []
    for item in data['edges']:
        if not isinstance(item, list) or len(item) != 2:
            raise GraphFormatError("Edge %r is not a pair" % (item,))
        a, b = decode_vertex(item[0]), decode_vertex(item[1])
        if a == b:
            raise GraphFormatError("Self-loop at %r" % (a,))
        for end in (a, b):
            if end not in known:
                raise GraphFormatError("Edge endpoint %r is not a vertex" % (end,))
        key = frozenset((a, b))
        if key in seen:
            raise GraphFormatError("Duplicate edge %r - %r" % (a, b))
        seen.add(key)
        edges.append((a, b))
    return Graph(vertices, edges)


def parse_graph(text):
    return graph_from_data(_load(text))


def read_graph(path):
    return parse_graph(_read(path))


def write_graph(g, path):
    with open(path, 'w', encoding='utf-8') as handle:
        handle.write(dump_graph(g) + '\n')


##
# Coloring JSON
##

def coloring_data(g, f, **metadata):
    "Coloring JSON object in vertex order, plus optional metadata keys"
    data = {
        'values': {
            vertex_token(v): format_rational(f[v])
            for v in g.vertices
            if v in f
        }
    }
    data.update(metadata)
    return data


def dump_coloring(g, f, **metadata):
    return json.dumps(coloring_data(g, f, **metadata))


def parse_coloring(text, g):
    "Coloring JSON for the vertices of g"
    data = _load(text)
    if not isinstance(data, dict) or not isinstance(data.get('values'), dict):
        raise GraphFormatError('Expected an object with a "values" object')

    by_token = {vertex_token(v): v for v in g}
    values = {}
    for token, raw in data['values'].items():
        if token not in by_token:
            raise GraphFormatError("Coloring names unknown vertex %s" % token)
        if isinstance(raw, bool) or not isinstance(raw, (int, str)):
            raise GraphFormatError("Value of %s must be an integer or a 'p/q' string" % token)
        try:
            values[by_token[token]] = as_rational(raw)
        except (ValueError, ZeroDivisionError):
            raise GraphFormatError("Value of %s is not a rational: %r" % (token, raw)) from None
    return Coloring(values)


def read_coloring(path, g):
    return parse_coloring(_read(path), g)


##
# Reports
##

def _encode(value):
    "Recursively make a record JSON-ready"
    if isinstance(value, dict):
        return {key: _encode(item) for key, item in value.items()}
    if isinstance(value, list):
        return [_encode(item) for item in value]
    return encode_vertex(value)


def dump_record(record):
    "One JSON line for an object exposing as_dict()"
    return json.dumps(_encode(record.as_dict()), separators=COMPACT)


def foliation_data(foliation):
    return [
        {
            'c': format_rational(level.c),
            'surface': json.loads(dump_graph(level.surface)),
            'verdict': level.verdict,
        }
        for level in foliation
    ]


##
# DOT
##

def dump_dot(g, f=None, name='G'):
    """
    Undirected DOT with vertex names taken from vertex_token.

    With a coloring the values become node labels.
    """
    lines = ['graph %s {' % name]
    for v in g.vertices:
        node = json.dumps(vertex_token(v))
        if f is not None and v in f:
            lines.append('  %s [label=%s];' % (node, json.dumps(
                "%s: %s" % (vertex_token(v), format_rational(f[v])))))
        else:
            lines.append('  %s;' % node)
    for a, b in g.edges:
        lines.append('  %s -- %s;' % (json.dumps(vertex_token(a)),
                                      json.dumps(vertex_token(b))))
    lines.append('}')
    return '\n'.join(lines) + '\n'
