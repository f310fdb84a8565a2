'''
verdicts and reports for axiom checks

A Verdict is the outcome of one check, stamped with the window it was
checked on.  A Report collects verdicts and text lines per pipeline step
and renders them deterministically.
'''
from __future__ import absolute_import, division, print_function

from builtins import object
import itertools
import random
import time

from .iaraerror import AxiomFails, BoundExceeded, HypothesisUnmet

PASS = 'pass'
FAIL = 'fail'
INCONCLUSIVE = 'inconclusive'
HYPOTHESIS = 'hypothesis'

FINITE = 'finite'

# minimum width of the verdict name column
NAME_WIDTH = 30


def sample_tuples(items, arity, limit, seed=0):
    '''
    all arity-tuples of items when there are at most limit of them, otherwise
    limit tuples drawn with a seeded generator
    '''
    items = list(items)
    if not items:
        return []
    if limit is None or len(items) ** arity <= limit:
        return list(itertools.product(items, repeat=arity))
    rng = random.Random(seed)
    return [tuple(rng.choice(items) for _ in range(arity)) for _ in range(limit)]


def cell(value):
    '''table cell text; tuple entries print with str rather than repr'''
    if isinstance(value, tuple):
        inner = ', '.join(cell(x) for x in value)
        return '(%s,)' % inner if len(value) == 1 else '(%s)' % inner
    return str(value)


def window_stamp(window):
    '''text stamp for a window (None means a finite-dimensional instance)'''
    if window is None:
        return FINITE
    return window.stamp()


class Verdict(object):
    '''result of a single axiom or identity check'''
    def __init__(self, name, status, window=FINITE, detail='', witnesses=None):
        self.name = name
        self.status = status
        self.window = window
        self.detail = detail
        self.witnesses = list(witnesses or [])

    @staticmethod
    def check(name, ok, window=FINITE, detail='', witnesses=None):
        return Verdict(name, PASS if ok else FAIL, window, detail, witnesses)

    @property
    def ok(self):
        return self.status == PASS

    def __bool__(self):
        return self.ok
    __nonzero__ = __bool__

    def require(self):
        '''raise if the verdict is not a pass'''
        if self.status == FAIL:
            raise AxiomFails("%s failed: %s" % (self.name, self.detail),
                             witness=self.witnesses[0] if self.witnesses else None)
        if self.status == HYPOTHESIS:
            raise HypothesisUnmet("%s: %s" % (self.name, self.detail))
        if self.status == INCONCLUSIVE:
            raise BoundExceeded("%s inconclusive: %s" % (self.name, self.detail))
        return self

    def as_hypothesis(self):
        '''the same check read as a precondition: failures become unmet hypotheses'''
        status = self.status if self.status in (PASS, INCONCLUSIVE) else HYPOTHESIS
        return Verdict('hypothesis: ' + self.name, status, self.window, self.detail, self.witnesses)

    def line(self, width=NAME_WIDTH):
        text = '%-*s %-12s [%s]' % (max(width, len(self.name)), self.name, self.status.upper(), self.window)
        if self.detail:
            text += ' ' + self.detail
        return text

    def __repr__(self):
        return 'Verdict(%s)' % self.line()


class Section(object):
    '''output of one pipeline step'''
    def __init__(self, title):
        self.title = title
        self.lines = []
        self.verdicts = []
        self.elapsed = None
        self._start = time.time()

    def text(self, line):
        self.lines.append(line)

    def table(self, header, rows):
        '''append an aligned table'''
        rows = [[cell(c) for c in r] for r in rows]
        widths = [len(h) for h in header]
        for r in rows:
            for i, c in enumerate(r):
                widths[i] = max(widths[i], len(c))
        fmt = '  '.join('%%-%us' % w for w in widths)
        self.lines.append((fmt % tuple(header)).rstrip())
        for r in rows:
            self.lines.append((fmt % tuple(r)).rstrip())

    def add(self, verdicts):
        if isinstance(verdicts, Verdict):
            verdicts = [verdicts]
        self.verdicts.extend(verdicts)
        return verdicts

    def finish(self):
        self.elapsed = time.time() - self._start

    @property
    def passed(self):
        return all(v.ok for v in self.verdicts)


class Report(object):
    '''collected output of a pipeline run'''
    def __init__(self, title=''):
        self.title = title
        self.sections = []

    def section(self, title):
        s = Section(title)
        self.sections.append(s)
        return s

    def verdicts(self):
        ret = []
        for s in self.sections:
            ret.extend(s.verdicts)
        return ret

    def verdict(self, name):
        '''the last verdict with the given name, or None'''
        for v in reversed(self.verdicts()):
            if v.name == name:
                return v
        return None

    @property
    def passed(self):
        return all(v.ok for v in self.verdicts())

    def render(self, witnesses=False, timing=False):
        out = []
        if self.title:
            out.append('# %s' % self.title)
        width = max([NAME_WIDTH] + [len(v.name) for v in self.verdicts()])
        for i, s in enumerate(self.sections):
            out.append('== step %u: %s' % (i + 1, s.title))
            for line in s.lines:
                out.append('  ' + line)
            for v in s.verdicts:
                out.append('  ' + v.line(width))
                if witnesses:
                    for w in v.witnesses:
                        out.append('      witness: %s' % (w,))
            if timing and s.elapsed is not None:
                out.append('  time: %.3fs' % s.elapsed)
        counts = {}
        for v in self.verdicts():
            counts[v.status] = counts.get(v.status, 0) + 1
        out.append('== summary: %s' % ', '.join('%s=%u' % (k, counts[k]) for k in sorted(counts)))
        out.append('== result: %s' % ('PASS' if self.passed else 'FAIL'))
        return '\n'.join(out) + '\n'
