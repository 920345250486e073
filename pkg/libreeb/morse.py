"""
Critical points of locally injective vertex functions.

Vocab:
  S_f^-(x), S_f^+(x): parts of S(x) where f is below / above f(x).
  i_f(x): Poincare-Hopf index 1 - chi(S_f^-(x)).
  j_f(x): symmetric index (i_f(x) + i_-f(x)) / 2.
  Critical (one-sided): S_f^-(x) not contractible.
  Critical (symmetric): S_f^-(x) or S_f^+(x) not contractible.
"""
import logging
from enum import Enum
from fractions import Fraction

from .complex import (
    Coloring,
    betti_numbers,
    center_manifold,
    euler_characteristic,
    format_rational,
)
from .errors import InvalidVertex
from .graph_core import connected_components, induced_subgraph, unit_sphere
from .recognition import Answer, get_recognizer

log = logging.getLogger(__name__)

BELOW = -1
ABOVE = 1


class MorseKind(Enum):
    REGULAR = 'regular'
    EXTREMUM = 'extremum'
    PRODUCT = 'product'
    NON_MORSE = 'non-morse'
    UNKNOWN = 'unknown'


class MorseClass:
    """
    Type of a vertex read off its center manifold.

    Products are reported as S^k x S^l with k >= l; by_betti_only marks
    products recognised from Betti numbers alone (dimension >= 5).
    """

    __slots__ = ('kind', 'k', 'l', 'by_betti_only')

    def __init__(self, kind, k=None, l=None, by_betti_only=False):
        self.kind = kind
        self.k = k
        self.l = l
        self.by_betti_only = by_betti_only
        if kind is MorseKind.PRODUCT:
            assert k >= l >= 0

    @classmethod
    def product(cls, k, l, by_betti_only=False):
        return cls(MorseKind.PRODUCT, max(k, l), min(k, l), by_betti_only)

    @property
    def is_morse(self):
        return self.kind in (MorseKind.REGULAR, MorseKind.EXTREMUM, MorseKind.PRODUCT)

    def __eq__(self, other):
        if not isinstance(other, MorseClass):
            return NotImplemented
        return (self.kind, self.k, self.l) == (other.kind, other.k, other.l)

    def __hash__(self):
        return hash((self.kind, self.k, self.l))

    def __str__(self):
        if self.kind is MorseKind.PRODUCT:
            s = "S^%dxS^%d" % (self.k, self.l)
            return s + "?" if self.by_betti_only else s
        return self.kind.value

    def __repr__(self):
        return "<MorseClass %s>" % self


REGULAR = MorseClass(MorseKind.REGULAR)
EXTREMUM = MorseClass(MorseKind.EXTREMUM)
NON_MORSE = MorseClass(MorseKind.NON_MORSE)
UNKNOWN_CLASS = MorseClass(MorseKind.UNKNOWN)


class CriticalReport:
    """
    Everything known about one vertex under one coloring.

    Criticality flags are None when recognition ran out of budget.
    """

    def __init__(self, vertex, s_minus, s_plus, center, one_sided_critical,
                 symmetric_critical, morse_class):
        self.vertex = vertex
        self.s_minus = s_minus
        self.s_plus = s_plus
        self.center = center
        self.i_minus = 1 - euler_characteristic(s_minus)
        self.i_plus = 1 - euler_characteristic(s_plus)
        self.j = Fraction(self.i_minus + self.i_plus, 2)
        self.one_sided_critical = one_sided_critical
        self.symmetric_critical = symmetric_critical
        self.morse_class = morse_class

    def as_dict(self):
        return {
            'vertex': self.vertex,
            'i_minus': self.i_minus,
            'i_plus': self.i_plus,
            'j': format_rational(self.j),
            'one_sided_critical': self.one_sided_critical,
            'symmetric_critical': self.symmetric_critical,
            'class': str(self.morse_class),
        }

    def __repr__(self):
        return "<CriticalReport %r i-=%d i+=%d class=%s>" % (
            self.vertex, self.i_minus, self.i_plus, self.morse_class)


def stable_sphere(g, f, x, sign):
    "S_f^-(x) for sign -1, S_f^+(x) for sign +1"
    assert sign in (BELOW, ABOVE)
    f.check_locally_injective(g, x)
    level = f[x]
    chosen = [y for y in g.neighbors(x) if sign * (f[y] - level) > 0]
    return induced_subgraph(g, chosen)


def poincare_hopf_index(g, f, x):
    return 1 - euler_characteristic(stable_sphere(g, f, x, BELOW))


def symmetric_index(g, f, x):
    i_minus = poincare_hopf_index(g, f, x)
    i_plus = 1 - euler_characteristic(stable_sphere(g, f, x, ABOVE))
    return Fraction(i_minus + i_plus, 2)


def index_sum(g, f):
    "Sum of i_f over all vertices; equals chi(g)"
    f.check_locally_injective(g)
    return sum(poincare_hopf_index(g, f, x) for x in g)


def green_diagonal(g, x):
    "g(x, x) = 1 - chi(S(x))"
    return 1 - euler_characteristic(unit_sphere(g, x))


##
# Classification
##

def _sphere_betti(k):
    if k == 0:
        return [2]
    return [1] + [0] * (k - 1) + [1]


def _kunneth(a, b):
    product = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            product[i + j] += x * y
    return product


def _trimmed(betti):
    betti = list(betti)
    while betti and betti[-1] == 0:
        betti.pop()
    return betti


def _product_class(b, d, recognizer):
    """
    Match b against S^k x S^l with k + l = d - 2.

    Returns a MorseClass, None for no match, or UNKNOWN_CLASS.
    """
    if d == 2:
        if len(b) == 4 and b.edge_count() == 0:
            return MorseClass.product(0, 0)
        return None

    if d == 3:
        parts = connected_components(b)
        if len(parts) != 2:
            return None
        for part in parts:
            verdict = recognizer.is_sphere(part, 1)
            if verdict.answer is Answer.UNKNOWN:
                return UNKNOWN_CLASS
            if not verdict.yes:
                return None
        return MorseClass.product(1, 0)

    if d == 4:
        parts = connected_components(b)
        if len(parts) == 1:
            if euler_characteristic(b) != 0 or _trimmed(betti_numbers(b)) != [1, 2, 1]:
                return None
            verdict = recognizer.is_dgraph(b, 2)
            if verdict.answer is Answer.UNKNOWN:
                return UNKNOWN_CLASS
            return MorseClass.product(1, 1) if verdict.yes else None
        if len(parts) == 2:
            for part in parts:
                verdict = recognizer.is_sphere(part, 2)
                if verdict.answer is Answer.UNKNOWN:
                    return UNKNOWN_CLASS
                if not verdict.yes:
                    return None
            return MorseClass.product(2, 0)
        return None

    betti = _trimmed(betti_numbers(b))
    for l in range(0, (d - 2) // 2 + 1):
        k = d - 2 - l
        if betti == _trimmed(_kunneth(_sphere_betti(k), _sphere_betti(l))):
            return MorseClass.product(k, l, by_betti_only=True)
    return None


def classify_center_manifold(b, d, recognizer=None):
    "Regular, Extremum, S^k x S^l, NonMorse or UnknownClass"
    recognizer = get_recognizer(None, recognizer)
    if b.is_empty():
        # The empty graph is the (-1)-sphere
        return REGULAR if d == 1 else EXTREMUM

    verdict = recognizer.is_sphere(b, d - 2) if d >= 1 else None
    if verdict is not None:
        if verdict.answer is Answer.UNKNOWN:
            return UNKNOWN_CLASS
        if verdict.yes:
            return REGULAR

    found = _product_class(b, d, recognizer) if d >= 2 else None
    return found if found is not None else NON_MORSE


def _not_contractible(verdict):
    if verdict.answer is Answer.UNKNOWN:
        return None
    return not verdict.yes


def classify_vertex(g, f, x, d, recognizer=None):
    recognizer = get_recognizer(None, recognizer)
    s_minus = stable_sphere(g, f, x, BELOW)
    s_plus = stable_sphere(g, f, x, ABOVE)
    center = center_manifold(g, f, x)

    below = _not_contractible(recognizer.is_contractible(s_minus))
    above = _not_contractible(recognizer.is_contractible(s_plus))
    if below or above:
        symmetric = True
    elif below is None or above is None:
        symmetric = None
    else:
        symmetric = False

    if symmetric is None:
        morse_class = UNKNOWN_CLASS
    elif not symmetric:
        morse_class = REGULAR
    elif center.is_empty():
        morse_class = EXTREMUM
    else:
        morse_class = classify_center_manifold(center, d, recognizer)

    return CriticalReport(x, s_minus, s_plus, center, below, symmetric, morse_class)


class MorseSummary:
    "Per-vertex reports plus the overall verdict"

    def __init__(self, reports):
        self.reports = reports
        self.counts = {}
        for report in reports:
            kind = report.morse_class.kind
            self.counts[kind] = self.counts.get(kind, 0) + 1

        if self.counts.get(MorseKind.UNKNOWN):
            self.answer = Answer.UNKNOWN
        elif self.counts.get(MorseKind.NON_MORSE):
            self.answer = Answer.NO
        else:
            self.answer = Answer.YES

    @property
    def critical(self):
        return [r.vertex for r in self.reports if r.symmetric_critical]

    @property
    def one_sided(self):
        return [r.vertex for r in self.reports if r.one_sided_critical]

    def as_dict(self):
        return {
            'vertices': len(self.reports),
            'critical': len(self.critical),
            'one_sided_critical': len(self.one_sided),
            'morse': self.answer.value,
            'classes': {kind.value: n for kind, n in sorted(
                self.counts.items(), key=lambda item: item[0].value)},
        }

    def __repr__(self):
        return "<MorseSummary critical=%d morse=%s>" % (len(self.critical),
                                                        self.answer.value)


def is_morse(g, f, d, recognizer=None):
    recognizer = get_recognizer(None, recognizer)
    f.check_locally_injective(g)
    return MorseSummary([classify_vertex(g, f, x, d, recognizer) for x in g])


def critical_points(g, f, d, symmetric=True, recognizer=None):
    """
    Vertices critical under the symmetric (default) or one-sided definition.

    Vertices left undecided by the budget are skipped with a warning.
    """
    recognizer = get_recognizer(None, recognizer)
    f.check_locally_injective(g)
    found = []
    for x in g:
        report = classify_vertex(g, f, x, d, recognizer)
        flag = report.symmetric_critical if symmetric else report.one_sided_critical
        if flag is None:
            log.warning("Criticality of %r undecided within budget", x)
        elif flag:
            found.append(x)
    return found


##
# Random colorings and curvature
##

def random_coloring(g, rng):
    "Uniform random total order realised as the values 1..|V|"
    order = rng.permutation(len(g))
    return Coloring({v: int(rank) + 1 for v, rank in zip(g.vertices, order)})


class IndexExpectationEstimate:
    "Sample mean of i_f(x) over random colorings"

    def __init__(self, vertex, sample_count, mean_index, per_sample_sum_check, seed):
        self.vertex = vertex
        self.sample_count = sample_count
        self.mean_index = mean_index
        self.per_sample_sum_check = per_sample_sum_check
        self.seed = seed

    def as_dict(self):
        return {
            'vertex': self.vertex,
            'samples': self.sample_count,
            'mean_index': format_rational(self.mean_index),
            'sum_check': self.per_sample_sum_check,
            'seed': self.seed,
        }

    def __repr__(self):
        return "<IndexExpectationEstimate %r mean=%s n=%d>" % (
            self.vertex, format_rational(self.mean_index), self.sample_count)


def curvature_by_expectation(g, x, samples=1000, seed=0):
    """
    Estimate the curvature at x as E[i_f(x)] over uniform random orders.

    Every sample also checks that its indices sum to chi(g).
    """
    # pylint: disable=import-outside-toplevel
    import numpy as np

    assert samples > 0
    if x not in g:
        raise InvalidVertex(x)
    rng = np.random.default_rng(seed)
    chi = euler_characteristic(g)
    total = 0
    sums_ok = True
    for _ in range(samples):
        f = random_coloring(g, rng)
        indices = {v: poincare_hopf_index(g, f, v) for v in g}
        if sum(indices.values()) != chi:
            log.error("Poincare-Hopf sum %d differs from chi=%d",
                      sum(indices.values()), chi)
            sums_ok = False
        total += indices[x]
    return IndexExpectationEstimate(x, samples, Fraction(total, samples), sums_ok, seed)
