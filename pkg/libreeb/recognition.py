"""
Certified recursive recognition of contractible graphs, spheres, balls
and d-graphs (with or without boundary).

Each top-level query gets its own node budget. Sub-results are memoised on
(query kind, dimension, canonical digest) so isomorphic subgraphs met
anywhere in the search are solved once. Witnesses are stored in canonical
labels and translated back through the certificate on every hit. Graphs
over MEMO_LIMIT vertices skip the memo, and the Euler characteristic and
connectivity checks run before any canonical form is built.

Vocab:
  Contractible: K_1, or some x with S(x) and G - x both contractible.
  d-sphere: d-graph which becomes contractible after removing a vertex;
            the empty graph is the (-1)-sphere.
  d-ball: d-graph with boundary, boundary a (d-1)-sphere, and the cone
          over the boundary a d-sphere. K_1 is the 0-ball.
"""
import logging
import threading
from enum import Enum

from .complex import euler_characteristic
from .config import DEFAULT_BUDGET
from .graph_core import (
    canonical_form,
    cone,
    delete_vertex,
    induced_subgraph,
    is_connected,
    sort_vertices,
    unit_sphere,
)
from .stats import SearchStats

log = logging.getLogger(__name__)

# Graphs with more vertices are searched without canonical forms or memo
MEMO_LIMIT = 128


class Answer(Enum):
    YES = 'yes'
    NO = 'no'
    UNKNOWN = 'unknown'


class TopologyVerdict:
    """
    Outcome of one recognition query.

    witness: vertex sequence - the collapse order for contractibility,
             puncture then collapse order for spheres, boundary vertices
             for balls and d-graphs with boundary.
    obstruction: readable reason for a No.
    """

    __slots__ = ('answer', 'witness', 'budget_spent', 'obstruction')

    def __init__(self, answer, witness=None, budget_spent=0, obstruction=None):
        self.answer = answer
        self.witness = witness
        self.budget_spent = budget_spent
        self.obstruction = obstruction

    @property
    def yes(self):
        return self.answer is Answer.YES

    def as_dict(self):
        "JSON-ready apart from the vertex identifiers in the witness"
        data = {
            'answer': self.answer.value,
            'witness': list(self.witness) if self.witness is not None else [],
            'budget_spent': self.budget_spent,
        }
        if self.obstruction is not None:
            data['obstruction'] = self.obstruction
        return data

    def __repr__(self):
        return "<TopologyVerdict %s spent=%d>" % (self.answer.value, self.budget_spent)


class RecognitionCache:
    """
    Memo of definite sub-results shared between queries and threads.

    Entries map (kind, d, digest) to (ok, witness in canonical labels).
    Only Yes/No results are stored, so an entry never changes once written.
    """

    def __init__(self):
        self._lock = threading.Lock()
        self._entries = {}

    def get(self, key):
        with self._lock:
            return self._entries.get(key)

    def put(self, key, value):
        with self._lock:
            self._entries.setdefault(key, value)

    def clear(self):
        with self._lock:
            self._entries.clear()

    def __len__(self):
        with self._lock:
            return len(self._entries)


class _OutOfBudget(Exception):
    "Unwinds the search when the node budget is spent"


class _CollapseFrame:
    "A graph on the collapse stack and the candidate being tried"

    __slots__ = ('graph', 'key', 'form', 'candidates', 'vertex')

    def __init__(self, graph, key, form, candidates):
        self.graph = graph
        self.key = key
        self.form = form
        self.candidates = candidates
        self.vertex = None


def _translate(witness, mapping):
    if witness is None:
        return None
    return [mapping[v] for v in witness]


class Recognizer:
    """
    Runs recognition queries against a budget and a shared cache.

    A recognizer keeps per-query state and is meant for one thread;
    several recognizers may share one RecognitionCache. Graphs larger
    than memo_limit are searched without canonical forms.
    """

    def __init__(self, budget=DEFAULT_BUDGET, cache=None, use_cache=True, stats=None,
                 memo_limit=MEMO_LIMIT):
        assert budget > 0
        self.budget = budget
        if use_cache:
            self.cache = cache if cache is not None else RecognitionCache()
        else:
            self.cache = None
        self.stats = stats if stats is not None else SearchStats()
        self.memo_limit = memo_limit
        self.spent = 0

    @classmethod
    def from_config(cls, config, cache=None):
        return cls(budget=config.budget, cache=cache, use_cache=config.use_cache)

    ##
    # Search internals; each returns (ok, witness)
    ##

    def _tick(self):
        self.spent += 1
        self.stats.node()
        if self.spent > self.budget:
            raise _OutOfBudget()

    def _candidates(self, g):
        "Vertices by ascending degree, ties by canonical label up to memo_limit"
        if len(g) <= self.memo_limit:
            labels = canonical_form(g).certificate
            return sorted(g, key=lambda v: (g.degree(v), labels[v]))
        return sorted(g, key=g.degree)

    def _key(self, kind, d, g):
        "(memo key, canonical form), or (None, None) when g is not memoised"
        if self.cache is None or len(g) > self.memo_limit:
            return None, None
        form = canonical_form(g)
        self.stats.canonical_forms += 1
        return (kind, d, form.digest), form

    def _recall(self, key, form):
        hit = self.cache.get(key)
        if hit is None:
            self.stats.cache_misses += 1
            return None
        self.stats.cache_hits += 1
        ok, witness = hit
        return ok, _translate(witness, form.inverse())

    def _store(self, key, form, result):
        if key is not None:
            ok, witness = result
            self.cache.put(key, (ok, _translate(witness, form.certificate)))
        return result

    def _memo(self, kind, d, g, compute):
        key, form = self._key(kind, d, g)
        if key is not None:
            hit = self._recall(key, form)
            if hit is not None:
                return hit
        self._tick()
        return self._store(key, form, compute(g))

    def _settled_contractible(self, g):
        "Answer reached without search, or None"
        n = len(g)
        if n == 0:
            return False, None
        if n == 1:
            return True, list(g.vertices)
        for apex in g:
            if g.degree(apex) == n - 1:
                # Cones collapse onto their apex
                return True, [v for v in g if v != apex] + [apex]
        if not is_connected(g) or euler_characteristic(g) != 1:
            return False, None
        return None

    def _open_collapse(self, g):
        "A definite (ok, order), or a frame still to be searched"
        settled = self._settled_contractible(g)
        if settled is not None:
            return settled
        key, form = self._key('contractible', 0, g)
        if key is not None:
            hit = self._recall(key, form)
            if hit is not None:
                return hit
        self._tick()
        return _CollapseFrame(g, key, form, iter(self._candidates(g)))

    def _contractible(self, g):
        """
        Collapse search: some x with S(x) contractible and G - x contractible.

        The G - x chain runs on an explicit stack, one frame per removed
        vertex; only the unit sphere checks nest, and those shrink in
        dimension.
        """
        opened = self._open_collapse(g)
        if not isinstance(opened, _CollapseFrame):
            return opened

        stack = [opened]
        result = None
        while stack:
            frame = stack[-1]
            if result is not None:
                ok, order = result
                result = None
                if ok:
                    stack.pop()
                    result = self._store(frame.key, frame.form, (True, [frame.vertex] + order))
                    continue

            opened = None
            for x in frame.candidates:
                ok, _ = self._contractible(unit_sphere(frame.graph, x))
                if not ok:
                    continue
                frame.vertex = x
                opened = self._open_collapse(delete_vertex(frame.graph, x))
                break

            if opened is None:
                stack.pop()
                result = self._store(frame.key, frame.form, (False, None))
            elif isinstance(opened, _CollapseFrame):
                stack.append(opened)
            else:
                result = opened
        return result

    def _sphere(self, g, d):
        if d == -1:
            return (True, []) if g.is_empty() else (False, None)
        if g.is_empty():
            return False, None
        if d >= 1 and not is_connected(g):
            return False, None
        if euler_characteristic(g) != 1 + (-1) ** d:
            return False, None
        return self._memo('sphere', d, g, lambda h: self._search_sphere(h, d))

    def _search_sphere(self, g, d):
        ok, _ = self._dgraph(g, d)
        if not ok:
            return False, None
        for x in self._candidates(g):
            ok, order = self._contractible(delete_vertex(g, x))
            if ok:
                return True, [x] + order
        return False, None

    def _dgraph(self, g, d):
        if g.is_empty():
            return False, None
        return self._memo('dgraph', d, g, lambda h: self._search_dgraph(h, d))

    def _search_dgraph(self, g, d):
        # Small spheres first: cheap failures end the scan early
        for x in self._candidates(g):
            ok, _ = self._sphere(unit_sphere(g, x), d - 1)
            if not ok:
                return False, [x]
        return True, []

    def _dgraph_with_boundary(self, g, d):
        if g.is_empty():
            return False, None
        return self._memo('dgraph-boundary', d, g,
                          lambda h: self._search_dgraph_with_boundary(h, d))

    def _search_dgraph_with_boundary(self, g, d):
        boundary = []
        for x in self._candidates(g):
            sphere = unit_sphere(g, x)
            ok, _ = self._sphere(sphere, d - 1)
            if ok:
                continue
            ok, _ = self._ball(sphere, d - 1)
            if not ok:
                return False, [x]
            boundary.append(x)
        return True, list(sort_vertices(boundary))

    def _ball(self, g, d):
        if d == 0:
            return (True, []) if len(g) == 1 else (False, None)
        if g.is_empty():
            return False, None
        return self._memo('ball', d, g, lambda h: self._search_ball(h, d))

    def _search_ball(self, g, d):
        ok, boundary = self._dgraph_with_boundary(g, d)
        if not ok or not boundary:
            return False, None
        ok, _ = self._sphere(induced_subgraph(g, boundary), d - 1)
        if not ok:
            return False, None
        completed, _ = cone(g, boundary)
        ok, _ = self._sphere(completed, d)
        return (True, boundary) if ok else (False, None)

    ##
    # Top-level queries
    ##

    def _attempt(self, search):
        "(ok, witness) of search, or None once the budget or the stack runs out"
        self.spent = 0
        try:
            return search()
        except _OutOfBudget:
            log.debug("Recognition budget of %d nodes exhausted", self.budget)
        except RecursionError:
            log.warning("Recognition nested too deeply after %d nodes", self.spent)
        self.stats.unknowns += 1
        return None

    def _run(self, search):
        result = self._attempt(search)
        if result is None:
            return TopologyVerdict(Answer.UNKNOWN, None, self.spent)
        ok, witness = result
        if ok:
            return TopologyVerdict(Answer.YES, witness, self.spent)
        return TopologyVerdict(Answer.NO, None, self.spent)

    def is_contractible(self, g):
        verdict = self._run(lambda: self._contractible(g))
        if verdict.answer is Answer.NO:
            verdict.obstruction = "no vertex with contractible S(x) and G - x"
        return verdict

    def is_sphere(self, g, d):
        assert d >= -1
        verdict = self._run(lambda: self._sphere(g, d))
        if verdict.answer is Answer.NO:
            verdict.obstruction = "not a %d-sphere" % d
        return verdict

    def is_dgraph(self, g, d):
        assert d >= 0
        result = self._attempt(lambda: self._dgraph(g, d))
        if result is None:
            return TopologyVerdict(Answer.UNKNOWN, None, self.spent)
        ok, witness = result
        if ok:
            return TopologyVerdict(Answer.YES, [], self.spent)
        if witness is None:
            reason = "empty graph"
        else:
            reason = "unit sphere of %r is not a %d-sphere" % (witness[0], d - 1)
        return TopologyVerdict(Answer.NO, None, self.spent, reason)

    def is_dgraph_with_boundary(self, g, d):
        assert d >= 1
        result = self._attempt(lambda: self._dgraph_with_boundary(g, d))
        if result is None:
            return TopologyVerdict(Answer.UNKNOWN, None, self.spent)
        ok, witness = result
        if ok:
            return TopologyVerdict(Answer.YES, list(sort_vertices(witness)), self.spent)
        if witness is None:
            reason = "empty graph"
        else:
            reason = ("unit sphere of %r is neither a %d-sphere nor a %d-ball"
                      % (witness[0], d - 1, d - 1))
        return TopologyVerdict(Answer.NO, None, self.spent, reason)

    def is_ball(self, g, d):
        assert d >= 0
        verdict = self._run(lambda: self._ball(g, d))
        if verdict.answer is Answer.NO:
            verdict.obstruction = "not a %d-ball" % d
        return verdict

    def check(self, kind, g, d):
        "Dispatch by query name as used on the command line"
        if kind == 'contractible':
            return self.is_contractible(g)
        if kind == 'sphere':
            return self.is_sphere(g, d)
        if kind == 'ball':
            return self.is_ball(g, d)
        if kind == 'dgraph':
            return self.is_dgraph(g, d)
        if kind == 'dgraph-boundary':
            return self.is_dgraph_with_boundary(g, d)
        raise ValueError("Unknown recognition kind %r" % (kind,))


KINDS = ('contractible', 'sphere', 'ball', 'dgraph', 'dgraph-boundary')

# Shared by the module-level helpers below
_shared_cache = RecognitionCache()


def shared_cache():
    "The cache behind every recognizer made by get_recognizer"
    return _shared_cache


def get_recognizer(budget=None, recognizer=None):
    "The given recognizer, or a fresh one on the shared cache"
    if recognizer is not None:
        return recognizer
    return Recognizer(budget=budget or DEFAULT_BUDGET, cache=shared_cache())


def is_contractible(g, budget=None, recognizer=None):
    return get_recognizer(budget, recognizer).is_contractible(g)


def is_sphere(g, d, budget=None, recognizer=None):
    return get_recognizer(budget, recognizer).is_sphere(g, d)


def is_dgraph(g, d, budget=None, recognizer=None):
    return get_recognizer(budget, recognizer).is_dgraph(g, d)


def is_dgraph_with_boundary(g, d, budget=None, recognizer=None):
    return get_recognizer(budget, recognizer).is_dgraph_with_boundary(g, d)


def is_ball(g, d, budget=None, recognizer=None):
    return get_recognizer(budget, recognizer).is_ball(g, d)


def boundary_vertices(g, d, budget=None, recognizer=None):
    """
    Vertices whose unit sphere is a (d-1)-ball.

    Returns (answer, vertices); vertices is None unless the answer is Yes.
    """
    verdict = is_dgraph_with_boundary(g, d, budget=budget, recognizer=recognizer)
    return verdict.answer, verdict.witness


##
# Witness replay
##

def replay_collapse(g, order, recognizer=None):
    """
    Re-check a contractibility witness.

    Every removed vertex must have a contractible unit sphere in the
    remaining graph, itself checked by replaying its own witness, and the
    last vertex must be alone.
    """
    recognizer = get_recognizer(None, recognizer)
    order = list(order)
    if len(order) != len(g) or set(order) != set(g.vertices):
        return False

    current = g
    for x in order[:-1]:
        sphere = unit_sphere(current, x)
        verdict = recognizer.is_contractible(sphere)
        if not verdict.yes or not replay_collapse(sphere, verdict.witness, recognizer):
            return False
        current = delete_vertex(current, x)
    return len(current) == 1


def replay_sphere(g, witness, d, recognizer=None):
    "Re-check a sphere witness: d-graph, then puncture and collapse"
    recognizer = get_recognizer(None, recognizer)
    if d == -1:
        return g.is_empty()
    witness = list(witness or [])
    if not witness or witness[0] not in g:
        return False
    if not recognizer.is_dgraph(g, d).yes:
        return False
    return replay_collapse(delete_vertex(g, witness[0]), witness[1:], recognizer)
