'''
affine reflection systems

Roots are integer coordinate tuples in Z^k with a positive semidefinite
rational gram matrix.  Systems taken from infinite toral pairs carry degree
rows (integer functionals giving the lattice degree of a root) and a bound;
only roots with all degrees bounded by it are present, and checks that would
need roots beyond that window are skipped rather than failed.
'''
from __future__ import absolute_import, division, print_function

from builtins import object, range
from fractions import Fraction
import itertools
import logging

import networkx as nx

from .cyclotomic import to_fraction, is_rational, format_scalar
from .iaraerror import StringBroken, RankTooHigh, IARAError, ConfigError
from .iarareport import Verdict, PASS, FAIL, FINITE
from .sparse import (Vector, bilinear, is_positive_semidefinite, lattice_basis,
                     integer_rows, solve, matrix_rank, mat_vec)
from .toral import Root, root_form

logger = logging.getLogger(__name__)

# bound on |(beta, alpha-coroot)| for reduced and non-reduced finite root systems
MAX_CARTAN = 4


def components(roots, form):
    '''connected components of roots under the relation form(a, b) != 0'''
    g = nx.Graph()
    roots = list(roots)
    g.add_nodes_from(range(len(roots)))
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            if form(roots[i], roots[j]):
                g.add_edge(i, j)
    return [sorted(roots[i] for i in c) for c in nx.connected_components(g)]


def is_indecomposable(roots, form):
    roots = list(roots)
    if not roots:
        return False
    return len(components(roots, form)) == 1


class RootString(object):
    '''{beta - d alpha, ..., beta + u alpha}; truncated when it may run past the window'''
    def __init__(self, beta, alpha, d, u, truncated=False):
        self.beta = beta
        self.alpha = alpha
        self.d = d
        self.u = u
        self.truncated = truncated

    def length(self):
        return self.d + self.u + 1

    def __repr__(self):
        return 'RootString(beta=%s, alpha=%s, d=%u, u=%u%s)' % (
            self.beta, self.alpha, self.d, self.u, ', truncated' if self.truncated else '')


class AffineReflectionSystem(object):
    '''a windowed root set in Z^k with a semidefinite form'''
    def __init__(self, gram, roots, degree_rows=None, bound=None, name='R'):
        self.gram = [[Fraction(x) for x in row] for row in gram]
        self.rank = len(self.gram)
        zero = tuple([0] * self.rank)
        rs = set(tuple(int(x) for x in r) for r in roots)
        for r in rs:
            if len(r) != self.rank:
                raise IARAError("root %s does not have %u coordinates" % (r, self.rank))
        rs.add(zero)
        self.roots = sorted(rs)
        self.root_set = rs
        self.degree_rows = [list(r) for r in (degree_rows or [])]
        if isinstance(bound, (list, tuple)):
            if len(bound) != len(self.degree_rows):
                raise IARAError("%u bounds for %u degree rows" % (len(bound), len(self.degree_rows)))
            self.bounds = [int(b) for b in bound]
            bound = max(self.bounds) if self.bounds else None
        else:
            self.bounds = [bound] * len(self.degree_rows)
        self.bound = bound
        self.name = name
        self.basis_roots = None
        logger.debug("system %s: rank %u, %u roots", name, self.rank, len(self.roots))

    def stamp(self):
        if not self.degree_rows:
            return FINITE
        if len(set(self.bounds)) > 1:
            return '|lambda|<=(%s)' % ','.join(str(b) for b in self.bounds)
        return '|lambda|<=%u' % self.bound

    def form(self, a, b):
        return bilinear(a, self.gram, b)

    def is_isotropic(self, a):
        return not self.form(a, a)

    def in_radical(self, a):
        return not any(mat_vec(self.gram, a))

    def nonisotropic(self):
        return [a for a in self.roots if not self.is_isotropic(a)]

    def isotropic(self):
        return [a for a in self.roots if self.is_isotropic(a)]

    def degree(self, a):
        return tuple(sum(x * y for x, y in zip(row, a)) for row in self.degree_rows)

    def in_window(self, a):
        if not self.degree_rows:
            return True
        return all(abs(d) <= b for d, b in zip(self.degree(a), self.bounds))

    def __contains__(self, a):
        return tuple(a) in self.root_set

    def pairing(self, beta, alpha):
        '''(beta, alpha-coroot) = 2 (beta, alpha) / (alpha, alpha)'''
        return 2 * self.form(beta, alpha) / self.form(alpha, alpha)

    def __repr__(self):
        return 'AffineReflectionSystem(%s, rank %u, %u roots, %s)' % (
            self.name, self.rank, len(self.roots), self.stamp())


def _shift(beta, alpha, n):
    return tuple(b + n * a for a, b in zip(alpha, beta))


def root_string(system, beta, alpha):
    '''
    the alpha-string through beta; raises StringBroken when the roots on the
    line through beta are not an unbroken interval around beta
    '''
    beta = tuple(beta)
    alpha = tuple(alpha)
    if system.is_isotropic(alpha):
        raise IARAError("root %s is isotropic" % (alpha,))
    if beta not in system:
        raise IARAError("%s is not a root" % (beta,))
    c = system.pairing(beta, alpha)
    # (beta + n alpha, alpha-coroot) = c + 2n stays within the Cartan bound
    lo = -int((MAX_CARTAN + c) // 2) - 1
    hi = int((MAX_CARTAN - c) // 2) + 1
    lo, hi = min(lo, 0), max(hi, 0)
    truncated = False
    members = []
    for n in range(lo, hi + 1):
        g = _shift(beta, alpha, n)
        if not system.in_window(g):
            truncated = True
        elif g in system:
            members.append(n)
    if not truncated:
        expect = list(range(members[0], members[-1] + 1))
        if members != expect:
            gap = [n for n in expect if n not in members][0]
            raise StringBroken("alpha-string through %s is broken" % (beta,),
                               gap=_shift(beta, alpha, gap))
        if members[0] > 0 or members[-1] < 0:
            raise StringBroken("alpha-string misses %s" % (beta,), gap=beta)
        return RootString(beta, alpha, -members[0], members[-1])
    d = 0
    while _shift(beta, alpha, -d - 1) in system:
        d += 1
    u = 0
    while _shift(beta, alpha, u + 1) in system:
        u += 1
    return RootString(beta, alpha, d, u, truncated=True)


def _check_R2(system):
    basis = lattice_basis([list(r) for r in system.roots if any(r)])
    if len(basis) != system.rank:
        return False, 'roots span a sublattice of rank %u' % len(basis)
    det = 1
    for i, row in enumerate(basis):
        piv = [x for x in row if x][0]
        det *= piv
    if abs(det) != 1:
        return False, '<R> has index %u in Z^%u' % (abs(det), system.rank)
    return True, 'rank %u' % system.rank


def check_R1_R5(system):
    '''R1-R5 on the window, preceded by the form and nonzero-root checks'''
    stamp = system.stamp()
    verdicts = []
    verdicts.append(Verdict.check('form semidefinite', is_positive_semidefinite(system.gram), stamp))
    verdicts.append(Verdict.check('R != {0}', len(system.roots) > 1, stamp,
                                  '%u roots' % len(system.roots)))
    bad = [a for a in system.roots if tuple(-x for x in a) not in system]
    verdicts.append(Verdict.check('R1', not bad, stamp, '' if not bad else '-%s missing' % (bad[0],)))
    ok, detail = _check_R2(system)
    verdicts.append(Verdict.check('R2', ok, stamp, detail))

    nonisotropic = system.nonisotropic()
    checked = skipped = 0
    failure = None
    for a in nonisotropic:
        for b in system.roots:
            c = system.pairing(b, a)
            if c.denominator != 1:
                failure = ('(%s, %s-coroot) = %s is not an integer' % (b, a, c), (b, a))
                break
            try:
                s = root_string(system, b, a)
            except StringBroken as e:
                failure = ('%s, gap at %s' % (e.message, e.gap), (b, a, e.gap))
                break
            if s.truncated:
                skipped += 1
                continue
            checked += 1
            if s.d - s.u != c:
                failure = ('d - u = %d but (beta, alpha-coroot) = %s for beta=%s alpha=%s'
                           % (s.d - s.u, c, b, a), (b, a))
                break
        if failure:
            break
    if failure:
        verdicts.append(Verdict('R3', FAIL, stamp, failure[0], [failure[1]]))
    else:
        verdicts.append(Verdict('R3', PASS, stamp, '%u strings, %u at the window boundary'
                                % (checked, skipped)))

    if not nonisotropic:
        verdicts.append(Verdict('R4', FAIL, stamp, 'no nonisotropic roots'))
    else:
        comps = components(nonisotropic, system.form)
        verdicts.append(Verdict.check('R4', len(comps) == 1, stamp,
                                      '%u components' % len(comps)))

    nonisotropic_set = set(nonisotropic)
    bad = None
    undecided = 0
    for d in system.isotropic():
        if not any(d):
            continue
        found = False
        outside = False
        for a in nonisotropic:
            b = tuple(x - y for x, y in zip(a, d))
            if b in nonisotropic_set:
                found = True
                break
            if not system.in_window(b):
                outside = True
        if not found:
            if outside:
                undecided += 1
            else:
                bad = d
                break
    verdicts.append(Verdict.check('R5', bad is None, stamp,
                                  ('%u isotropic roots beyond the window' % undecided) if bad is None
                                  else '%s is not a difference of nonisotropic roots' % (bad,)))
    return verdicts


def _canonical(kind, n):
    e = lambda i, s=1: tuple(s if k == i else 0 for k in range(n + (1 if kind == 'A' else 0)))
    add = lambda a, b: tuple(x + y for x, y in zip(a, b))
    roots = set()
    if kind == 'G':
        # in the plane x + y + z = 0: e_i - e_j short, +-(2e_i - e_j - e_k) long
        for i in range(3):
            for j in range(3):
                if i != j:
                    roots.add(tuple(1 if k == i else -1 if k == j else 0 for k in range(3)))
            big = tuple(2 if k == i else -1 for k in range(3))
            roots.add(big)
            roots.add(tuple(-x for x in big))
        return sorted(roots)
    if kind == 'F':
        # doubled: +-2e_i +-2e_j long, +-2e_i and (+-1, +-1, +-1, +-1) short
        for i in range(4):
            for s in (2, -2):
                roots.add(e(i, s))
                for j in range(i + 1, 4):
                    for t in (2, -2):
                        roots.add(add(e(i, s), e(j, t)))
        for signs in itertools.product((1, -1), repeat=4):
            roots.add(signs)
        return sorted(roots)
    if kind == 'A':
        for i in range(n + 1):
            for j in range(n + 1):
                if i != j:
                    roots.add(add(e(i), e(j, -1)))
        return sorted(roots)
    for i in range(n):
        for j in range(i + 1, n):
            for s in (1, -1):
                for t in (1, -1):
                    roots.add(add(e(i, s), e(j, t)))
        for s in (1, -1):
            if kind in ('B', 'BC'):
                roots.add(e(i, s))
            if kind in ('C', 'BC'):
                roots.add(e(i, 2 * s))
    return sorted(roots)


CANONICAL_TYPES = [('A', 1), ('A', 2), ('A', 3), ('A', 4), ('B', 2), ('B', 3), ('B', 4),
                   ('C', 3), ('C', 4), ('D', 4), ('G', 2), ('F', 4),
                   ('BC', 1), ('BC', 2), ('BC', 3), ('BC', 4)]
_signatures = None


def _signature(rank, roots, form):
    lengths = [form(a, a) for a in roots]
    shortest = min(lengths)
    ratios = {}
    for l in lengths:
        r = Fraction(l) / shortest
        ratios[r] = ratios.get(r, 0) + 1
    cartan = {}
    for a, la in zip(roots, lengths):
        for b in roots:
            c = 2 * Fraction(form(a, b)) / la
            cartan[c] = cartan.get(c, 0) + 1
    return (rank, len(roots), tuple(sorted(ratios.items())), tuple(sorted(cartan.items())))


def canonical_signatures():
    '''signature -> type label for the finite root systems of rank at most 4'''
    global _signatures
    if _signatures is None:
        _signatures = {}
        dot = lambda a, b: sum(x * y for x, y in zip(a, b))
        for kind, n in CANONICAL_TYPES:
            sig = _signature(n, _canonical(kind, n), dot)
            _signatures.setdefault(sig, '%s_%u' % (kind, n))
    return _signatures


def quotient_roots(system):
    '''nonisotropic roots modulo the radical, one representative per class'''
    classes = {}
    for a in system.nonisotropic():
        key = tuple(mat_vec(system.gram, a))
        if key not in classes:
            classes[key] = a
    return [classes[k] for k in sorted(classes)]


def classify_type(system):
    '''type label of R^x modulo the radical, or "unrecognized"'''
    reps = quotient_roots(system)
    if not reps:
        return 'unrecognized'
    n = matrix_rank([mat_vec(system.gram, a) for a in reps])
    if n > 4:
        raise RankTooHigh("quotient root system has rank %u" % n)
    sig = _signature(n, reps, system.form)
    label = canonical_signatures().get(sig, 'unrecognized')
    logger.debug("%s: rank %u, %u quotient roots, type %s", system.name, n, len(reps), label)
    return label


def _mat_mul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))]
            for i in range(len(a))]


def _transpose(a):
    return [list(r) for r in zip(*a)]


def _apply(m, v):
    return tuple(int(x) for x in mat_vec(m, v))


def check_isotropic_fixed(system, sigma, max_period=120):
    '''
    sigma (an integer matrix on the coordinates) fixes every isotropic root;
    the hypotheses are reported as their own verdicts and the conclusion is
    only checked when all of them hold
    '''
    stamp = system.stamp()
    k = system.rank
    ident = [[1 if i == j else 0 for j in range(k)] for i in range(k)]
    verdicts = []
    period = None
    p = sigma
    for i in range(1, max_period + 1):
        if p == ident:
            period = i
            break
        p = _mat_mul(p, sigma)
    verdicts.append(Verdict.check('finite period', period is not None, stamp,
                                  'period %s' % period).as_hypothesis())
    verdicts.append(Verdict.check('sigma preserves the form',
                                  _mat_mul(_mat_mul(_transpose(sigma), system.gram), sigma) == system.gram,
                                  stamp).as_hypothesis())
    bad = [a for a in system.roots if system.in_window(_apply(sigma, a)) and _apply(sigma, a) not in system]
    verdicts.append(Verdict.check('sigma permutes R', not bad, stamp,
                                  '' if not bad else 'sigma(%s) is not a root' % (bad[0],)).as_hypothesis())
    tame = [v for v in check_R1_R5(system) if v.name == 'R5'][0]
    verdicts.append(Verdict(tame.name + ' tame', tame.status, stamp, tame.detail).as_hypothesis())
    bad = None
    if period is not None:
        for d in system.isotropic():
            if not any(d):
                continue
            total = [0] * k
            cur = d
            for _ in range(period):
                total = [x + y for x, y in zip(total, cur)]
                cur = _apply(sigma, cur)
            if not any(total):
                bad = d
                break
    verdicts.append(Verdict.check('pi(delta) != 0', bad is None and period is not None, stamp,
                                  '' if bad is None else 'orbit of %s sums to 0' % (bad,)).as_hypothesis())
    if not all(v.ok for v in verdicts):
        return verdicts
    moved = [d for d in system.isotropic() if _apply(sigma, d) != d]
    verdicts.append(Verdict.check('isotropic roots fixed', not moved, stamp,
                                  '%u isotropic roots' % len(system.isotropic()) if not moved
                                  else 'sigma(%s) = %s' % (moved[0], _apply(sigma, moved[0])),
                                  [moved[0]] if moved else None))
    return verdicts


def system_from_pair(pair, roots=None, name=None):
    '''
    integer system for the roots of a toral pair: coordinates over a lattice
    basis of <R>, gram from the root form, degree rows from the degree probes
    '''
    if roots is None:
        roots = pair.decomposition().roots()
    coords = []
    for r in roots:
        if not all(is_rational(x) for x in r.coords):
            raise IARAError("root %s is not rational" % (r,))
        coords.append([to_fraction(x) for x in r.coords])
    den, rows = integer_rows(coords)
    basis = lattice_basis(rows)
    columns = [Vector(dict(enumerate(b))) for b in basis]
    ints = []
    for row in rows:
        c = solve(columns, Vector(dict(enumerate(row))))
        ints.append(tuple(int(x) for x in c))
    basis_roots = [Root([Fraction(x, den) for x in b]) for b in basis]
    gram = [[to_fraction(root_form(pair, a, b)) for b in basis_roots] for a in basis_roots]
    degree_rows = []
    bound = None
    if pair.probes and pair.window is not None:
        for i in range(len(pair.probes)):
            degree_rows.append([int(pair.root_degree(b)[i]) for b in basis_roots])
        bound = [pair.probe_bound(i) for i in range(len(pair.probes))]
    system = AffineReflectionSystem(gram, ints, degree_rows, bound, name=name or pair.name)
    system.basis_roots = basis_roots
    return system


def root_map_matrix(system, root_map):
    '''integer matrix of a map on Roots in the coordinates of system_from_pair, or None'''
    if system.basis_roots is None:
        raise IARAError("system has no root basis")
    den, rows = integer_rows([[to_fraction(x) for x in b.coords] for b in system.basis_roots])
    columns = [Vector(dict(enumerate(r))) for r in rows]
    cols = []
    for b in system.basis_roots:
        img = root_map(b)
        target = Vector(dict(enumerate(to_fraction(x) * den for x in img.coords)))
        c = solve(columns, target)
        if c is None or any(Fraction(x).denominator != 1 for x in c):
            return None
        cols.append([int(x) for x in c])
    return _transpose(cols)


def string_table(system, limit=None):
    '''rows (beta, alpha, d, u, (beta, alpha-coroot)) for untruncated strings'''
    rows = []
    for a in system.nonisotropic():
        for b in system.roots:
            try:
                s = root_string(system, b, a)
            except StringBroken:
                continue
            if s.truncated:
                continue
            rows.append((b, a, s.d, s.u, format_scalar(system.pairing(b, a))))
            if limit is not None and len(rows) >= limit:
                return rows
    return rows


def save_dump(system, filename):
    f = open(filename, mode='w')
    f.write(dumps(system))
    f.close()


def dumps(system):
    out = []
    for row in system.gram:
        out.append('gram %s' % ' '.join(str(x) for x in row))
    for row in system.degree_rows:
        out.append('degree %s' % ' '.join(str(x) for x in row))
    if system.bound is not None:
        if len(set(system.bounds)) > 1:
            out.append('window %s' % ' '.join(str(b) for b in system.bounds))
        else:
            out.append('window %u' % system.bound)
    for r in system.roots:
        out.append('root %s' % ' '.join(str(x) for x in r))
    return '\n'.join(out) + '\n'


def loads(text, name='R'):
    '''parse a root dump: gram, degree, window and root lines'''
    gram = []
    roots = []
    degrees = []
    bound = None
    for n, line in enumerate(text.splitlines()):
        line = line.strip()
        if not line or line[0] == '#':
            continue
        a = line.split()
        try:
            if a[0] == 'gram':
                gram.append([Fraction(x) for x in a[1:]])
            elif a[0] == 'root':
                roots.append([int(x) for x in a[1:]])
            elif a[0] == 'degree':
                degrees.append([int(x) for x in a[1:]])
            elif a[0] == 'window' and len(a) >= 2:
                bound = [int(x) for x in a[1:]]
            else:
                raise ConfigError("invalid dump line '%s'" % line, n + 1)
        except ValueError:
            raise ConfigError("bad number in '%s'" % line, n + 1)
    if not gram:
        raise ConfigError("dump has no gram rows")
    if degrees and bound is None:
        raise ConfigError("degree rows need a window line")
    if bound is not None:
        if len(bound) == 1:
            bound = bound[0]
        elif len(bound) != len(degrees):
            raise ConfigError("window has %u bounds for %u degree rows" % (len(bound), len(degrees)))
    return AffineReflectionSystem(gram, roots, degrees, bound, name=name)


def load_dump(filename):
    f = open(filename, mode='r')
    text = f.read()
    f.close()
    return loads(text, name=filename)
