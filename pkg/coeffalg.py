'''
Lambda-graded coefficient algebras

A GradedCoefficientAlgebra is A = sum over lambda in Z^r of B u_lambda for a
finite dimensional commutative base algebra B, with multiplication

    (b u_l)(c u_m) = c(l, m) (bc) u_(l+m)

for a multiplier c.  For a twisted group algebra c is a symmetric
bimultiplicative cocycle with values in the units of F; for the q-algebra
B_q[z^(+-1)] it is the sign picked up by reordering generators into the
fixed normal form.  Elements are sparse Vectors over keys (lambda, b).

Cocycles are validated on generator pairs and triples only: a
bimultiplicative extension of a symmetric generator table satisfies the
cocycle identity everywhere once it holds on generators.
'''
from __future__ import absolute_import, division, print_function

from builtins import object, range
from fractions import Fraction
import itertools
import logging
import numbers

import sympy

from .cyclotomic import inv, format_scalar, to_fraction
from .iaraerror import (IARAError, InvalidCocycle, DegenerateBaseForm, InvalidSignMatrix,
                        NotInvertible, NotHomogeneous, SplitFails, WindowNotSymmetric)
from .iarareport import Verdict, sample_tuples
from .sparse import Vector, solve, kernel, matrix_inverse

logger = logging.getLogger(__name__)

_x = sympy.Symbol('x')


def _fraction(a):
    return Fraction(int(sympy.Rational(a).p), int(sympy.Rational(a).q))


def zero_degree(rank):
    return (0,) * rank


def add_degrees(a, b):
    return tuple(x + y for x, y in zip(a, b))


def neg_degree(a):
    return tuple(-x for x in a)


def unit_degree(rank, i, scale=1):
    return tuple(scale if k == i else 0 for k in range(rank))


class Window(object):
    '''
    finite symmetric set of lattice degrees: the box max|l_i| <= bound, or an
    explicit list of degrees
    '''
    def __init__(self, rank, bound=0, degrees=None):
        self.rank = rank
        self.bound = bound
        if degrees is None:
            self._degrees = sorted(itertools.product(range(-bound, bound + 1), repeat=rank))
            self.explicit = False
        else:
            self._degrees = sorted(set(tuple(d) for d in degrees))
            for d in self._degrees:
                if len(d) != rank:
                    raise WindowNotSymmetric("degree %s does not have rank %u" % (d, rank))
                if neg_degree(d) not in self._degrees:
                    raise WindowNotSymmetric("window contains %s but not its negative" % (d,))
            self.bound = max([max([abs(x) for x in d] or [0]) for d in self._degrees] or [0])
            self.explicit = True
        self._set = set(self._degrees)

    def degrees(self):
        return list(self._degrees)

    def contains(self, degree):
        return tuple(degree) in self._set
    __contains__ = contains

    def __len__(self):
        return len(self._degrees)

    def stamp(self):
        if self.rank == 0:
            return 'finite'
        if self.explicit:
            return 'window of %u degrees' % len(self._degrees)
        return '|lambda|<=%u' % self.bound

    def __repr__(self):
        return 'Window(%u, %s)' % (self.rank, self.stamp())


class BaseAlgebra(object):
    '''
    finite dimensional commutative associative unital algebra B over F given by
    structure constants, with a symmetric invariant form eps_B
    '''
    def __init__(self, dim, table, unit, eps, name='B'):
        self.dim = dim
        self.table = table
        self.unit = dict((i, c) for i, c in unit.items() if c)
        self.eps_matrix = eps
        self.name = name
        self.validate()

    def mul(self, u, v):
        out = {}
        for i, a in u.items():
            for j, b in v.items():
                for k, c in self.table.get((i, j), {}).items():
                    out[k] = out.get(k, 0) + a * b * c
        return dict((k, c) for k, c in out.items() if c)

    def eps(self, u, v):
        s = 0
        for i, a in u.items():
            for j, b in v.items():
                e = self.eps_matrix[i][j]
                if e:
                    s = s + a * b * e
        return s

    def basis_vector(self, i):
        return {i: 1}

    def inverse(self, u):
        '''inverse of u in B, or None when u is not a unit'''
        cols = [Vector(self.mul(u, self.basis_vector(j))) for j in range(self.dim)]
        x = solve(cols, Vector(self.unit))
        if x is None:
            return None
        return dict((j, c) for j, c in enumerate(x) if c)

    def evaluate(self, coeffs, u):
        '''p(u) for p given by its coefficients from the top degree down'''
        out = {}
        for c in coeffs:
            out = self.mul(out, u)
            for k, x in self.unit.items():
                out[k] = out.get(k, 0) + c * x
        return dict((k, x) for k, x in out.items() if x)

    def minimal_polynomial(self, u):
        '''minimal polynomial of u over Q as a sympy Poly in x'''
        powers = [dict(self.unit)]
        while True:
            nxt = self.mul(powers[-1], u)
            c = solve([Vector(p) for p in powers], Vector(nxt))
            if c is not None:
                coeffs = [Fraction(1)] + [-to_fraction(x) for x in reversed(c)]
                return sympy.Poly([sympy.Rational(x.numerator, x.denominator) for x in coeffs], _x,
                                  domain='QQ')
            powers.append(nxt)

    def trace(self, u):
        '''trace of multiplication by u'''
        return sum((self.mul(u, self.basis_vector(j)).get(j, 0) for j in range(self.dim)), Fraction(0))

    def nilradical(self):
        '''basis of the radical of the trace form, which is the nilradical of B'''
        basis = [self.basis_vector(i) for i in range(self.dim)]
        rows = [Vector(dict((j, self.trace(self.mul(a, b))) for j, b in enumerate(basis))) for a in basis]
        return [dict((i, c) for i, c in dep.items() if c) for dep in kernel(rows)]

    def non_unit(self, tries=None):
        '''
        a nonzero non-invertible element of B, or None when B is a field: a
        nilpotent when B is not reduced, otherwise g(c) for a proper factor g
        of the minimal polynomial of some c
        '''
        nil = self.nilradical()
        if nil:
            return nil[0]
        if tries is None:
            tries = 4 * self.dim * self.dim + 8
        for k in range(tries):
            c = dict((i, k ** i) for i in range(self.dim) if k ** i)
            factors = sympy.factor_list(self.minimal_polynomial(c))[1]
            if len(factors) > 1:
                return self.evaluate([_fraction(a) for a in factors[0][0].all_coeffs()], c)
            if factors[0][0].degree() == self.dim:
                return None
        raise IARAError("%s: no primitive element among %u trials" % (self.name, tries))

    def is_field(self):
        return self.non_unit() is None

    def validate(self):
        basis = [self.basis_vector(i) for i in range(self.dim)]
        for b in basis:
            if self.mul(self.unit, b) != b:
                raise DegenerateBaseForm("%s: unit does not act as identity" % self.name)
        for a, b in itertools.product(basis, repeat=2):
            if self.mul(a, b) != self.mul(b, a):
                raise DegenerateBaseForm("%s is not commutative" % self.name)
            if self.eps(a, b) != self.eps(b, a):
                raise DegenerateBaseForm("%s: eps_B is not symmetric" % self.name)
        for a, b, c in itertools.product(basis, repeat=3):
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                raise DegenerateBaseForm("%s is not associative" % self.name)
            if self.eps(self.mul(a, b), c) != self.eps(a, self.mul(b, c)):
                raise DegenerateBaseForm("%s: eps_B is not invariant" % self.name)
        if matrix_inverse(self.eps_matrix) is None:
            raise DegenerateBaseForm("%s: eps_B is degenerate" % self.name)
        if not self.eps(self.unit, self.unit):
            raise DegenerateBaseForm("%s: eps_B(1,1) = 0" % self.name)


def field_base():
    '''B = F'''
    return BaseAlgebra(1, {(0, 0): {0: 1}}, {0: 1}, [[1]], name='F')


def product_base(n):
    '''B = F^n with componentwise product and eps_B(e_i, e_j) = delta_ij / n, so eps_B(1,1) = 1'''
    table = dict(((i, i), {i: 1}) for i in range(n))
    eps = [[Fraction(1, n) if i == j else 0 for j in range(n)] for i in range(n)]
    return BaseAlgebra(n, table, dict((i, 1) for i in range(n)), eps, name='F^%u' % n)


class GradedCoefficientAlgebra(object):
    '''Lambda-graded associative algebra sum B u_lambda with graded form eps'''
    def __init__(self, base, rank, multiplier, kind, name, commutative=True,
                 signs=None, total_order=None, cocycle=None):
        self.base = base
        self.rank = rank
        self._multiplier = multiplier
        self.kind = kind
        self.name = name
        self.commutative = commutative
        self.signs = signs
        self.total_order = total_order
        self.cocycle = cocycle
        self._twist = {}
        self._mul = {}

    def twist(self, l, m):
        key = (l, m)
        if key not in self._twist:
            self._twist[key] = self._multiplier(l, m)
        return self._twist[key]

    def zero(self):
        return zero_degree(self.rank)

    def degree(self, key):
        return key[0]

    def basis(self, degree):
        return [(tuple(degree), b) for b in range(self.base.dim)]

    def unit(self):
        return self.monomial(self.zero())

    def unit_key(self):
        '''the key (0, b) when 1_B is a single basis vector'''
        if len(self.base.unit) == 1 and list(self.base.unit.values())[0] == 1:
            return (self.zero(), list(self.base.unit.keys())[0])
        return None

    def monomial(self, degree, scale=1):
        '''scale * 1_B u_degree'''
        degree = tuple(degree)
        return Vector(dict(((degree, b), scale * c) for b, c in self.base.unit.items()))

    def generator(self, i, power=1):
        return self.monomial(unit_degree(self.rank, i, power))

    def mul_keys(self, k1, k2):
        key = (k1, k2)
        if key not in self._mul:
            (l, b), (m, c) = k1, k2
            t = self.twist(l, m)
            d = add_degrees(l, m)
            prod = self.base.mul({b: 1}, {c: 1})
            self._mul[key] = Vector(dict(((d, k), t * x) for k, x in prod.items()))
        return self._mul[key]

    def mul(self, x, y):
        out = {}
        for k1, a in x.items():
            for k2, b in y.items():
                for k, c in self.mul_keys(k1, k2).items():
                    out[k] = out.get(k, 0) + a * b * c
        return Vector(out)

    def commutator(self, x, y):
        return self.mul(x, y) - self.mul(y, x)

    def eps_keys(self, k1, k2):
        '''eps(x, y) = eps_B((xy)_0, 1)'''
        (l, b), (m, c) = k1, k2
        if add_degrees(l, m) != self.zero():
            return 0
        t = self.twist(l, m)
        return t * self.base.eps(self.base.mul({b: 1}, {c: 1}), self.base.unit)

    def form_eps(self, x, y):
        s = 0
        for k1, a in x.items():
            for k2, b in y.items():
                e = self.eps_keys(k1, k2)
                if e:
                    s = s + a * b * e
        return s

    def bar_sign(self, degree):
        '''the scalar r with bar(u_l) = r u_l'''
        if self.signs is None:
            return 1
        pos = self.total_order
        s = 1
        for i in range(self.rank):
            for j in range(self.rank):
                if pos[i] < pos[j] and self.signs[i][j] == -1 and (degree[i] * degree[j]) % 2:
                    s = -s
        return s

    def bar_keys(self, key):
        return Vector.unit(key, self.bar_sign(key[0]))

    def bar(self, x):
        '''the involution fixing B and each generator, reversing products'''
        return Vector(dict((k, c * self.bar_sign(k[0])) for k, c in x.items()))

    def homogeneous_degree(self, x):
        degrees = set(k[0] for k in x.keys())
        if len(degrees) != 1:
            raise NotHomogeneous("element %s is not homogeneous" % format_element(self, x))
        return degrees.pop()

    def invert_homogeneous(self, x):
        '''inverse of a homogeneous invertible element'''
        l = self.homogeneous_degree(x)
        beta = dict((k[1], c) for k, c in x.items())
        binv = self.base.inverse(beta)
        if binv is None:
            raise NotInvertible("%s is not invertible" % format_element(self, x))
        s = inv(self.twist(l, neg_degree(l)))
        m = neg_degree(l)
        return Vector(dict(((m, b), c * s) for b, c in binv.items()))

    def is_central_degree(self, degree):
        '''u_degree commutes with every generator'''
        for i in range(self.rank):
            e = unit_degree(self.rank, i)
            if self.twist(degree, e) != self.twist(e, degree):
                return False
        return True

    def __repr__(self):
        return 'GradedCoefficientAlgebra(%s)' % self.name


def format_element(alg, x):
    '''render as "2*z1*z2^-1 - b1*z2"'''
    if not x:
        return '0'
    parts = []
    for (l, b), c in sorted(x.items()):
        mono = []
        if alg.base.dim > 1:
            mono.append('b%u' % b)
        for i, e in enumerate(l):
            if e == 1:
                mono.append('z%u' % (i + 1))
            elif e:
                mono.append('z%u^%d' % (i + 1, e))
        text = format_scalar(c)
        if mono:
            if text == '1':
                text = '*'.join(mono)
            elif text == '-1':
                text = '-' + '*'.join(mono)
            else:
                text = '(%s)*%s' % (text, '*'.join(mono))
        parts.append(text)
    return ' + '.join(parts).replace('+ -', '- ')


def _bimultiplicative(table, rank):
    def multiplier(l, m):
        t = 1
        for i in range(rank):
            if not l[i]:
                continue
            for j in range(rank):
                if m[j]:
                    t = t * table[(i, j)] ** (l[i] * m[j])
        return t
    return multiplier


def make_twisted_group_algebra(base, rank, cocycle=None, name=None):
    '''
    B^t[Z^rank] for the symmetric cocycle given on generators by
    cocycle[(i, j)] = tau(e_i, e_j) (0-based indices, missing entries are 1)
    '''
    table = {}
    cocycle = cocycle or {}
    for (i, j) in cocycle:
        if not (0 <= i < rank and 0 <= j < rank):
            raise InvalidCocycle("cocycle entry (%u,%u) outside rank %u" % (i + 1, j + 1, rank))
    for i in range(rank):
        for j in range(rank):
            v = cocycle.get((i, j), cocycle.get((j, i), 1))
            if not v:
                raise InvalidCocycle("tau(e%u,e%u) is not a unit" % (i + 1, j + 1))
            table[(i, j)] = Fraction(v) if isinstance(v, numbers.Rational) else v
    for (i, j), v in cocycle.items():
        if cocycle.get((j, i), v) != v:
            raise InvalidCocycle("tau(e%u,e%u) != tau(e%u,e%u)" % (i + 1, j + 1, j + 1, i + 1))
    tau = _bimultiplicative(table, rank)
    gens = [unit_degree(rank, i) for i in range(rank)]
    for a, b, c in itertools.product(gens, repeat=3):
        if tau(a, b) * tau(add_degrees(a, b), c) != tau(b, c) * tau(a, add_degrees(b, c)):
            raise InvalidCocycle("cocycle identity fails on %s, %s, %s" % (a, b, c))
    if name is None:
        name = '%s^t[Z^%u]' % (base.name, rank) if cocycle else '%s[Z^%u]' % (base.name, rank)
    alg = GradedCoefficientAlgebra(base, rank, tau, 'twisted', name, cocycle=dict(table))
    logger.debug("built twisted group algebra %s", name)
    return alg


def make_q_algebra(base, signs, total_order=None, name=None):
    '''
    B_q[z_1^(+-1), ..., z_r^(+-1)] with z_i z_j = q_ij z_j z_i, normal form
    ordered by total_order (a list giving the position of each generator)
    '''
    rank = len(signs)
    for i in range(rank):
        if len(signs[i]) != rank:
            raise InvalidSignMatrix("sign matrix is not square")
        if signs[i][i] != 1:
            raise InvalidSignMatrix("q_%u%u must be 1" % (i + 1, i + 1))
        for j in range(rank):
            if signs[i][j] not in (1, -1):
                raise InvalidSignMatrix("q_%u%u must be +1 or -1" % (i + 1, j + 1))
            if signs[i][j] != signs[j][i]:
                raise InvalidSignMatrix("q is not symmetric at (%u,%u)" % (i + 1, j + 1))
    if total_order is None:
        total_order = list(range(rank))
    if sorted(total_order) != list(range(rank)):
        raise InvalidSignMatrix("total order must be a permutation of the generators")
    pos = list(total_order)

    def multiplier(l, m):
        # move each z_j^m_j left past z_i^l_i whenever z_i comes later in the normal form
        s = 1
        for i in range(rank):
            for j in range(rank):
                if pos[i] > pos[j] and signs[i][j] == -1 and (l[i] * m[j]) % 2:
                    s = -s
        return s

    commutative = all(signs[i][j] == 1 for i in range(rank) for j in range(rank))
    if name is None:
        name = '%s_q[Z^%u]' % (base.name, rank)
    alg = GradedCoefficientAlgebra(base, rank, multiplier, 'q', name, commutative=commutative,
                                   signs=[list(r) for r in signs], total_order=pos)
    logger.debug("built q-algebra %s (commutative=%s)", name, commutative)
    return alg


def scalar_algebra():
    '''F itself as a rank 0 coefficient algebra'''
    return make_twisted_group_algebra(field_base(), 0, name='F')


def window_keys(alg, window):
    keys = []
    for d in window.degrees():
        keys.extend(alg.basis(d))
    return keys


def is_predivision(alg, window):
    '''every windowed A^lambda contains an invertible element (the unit u_lambda)'''
    witnesses = []
    for d in window.degrees():
        u = alg.monomial(d)
        try:
            ui = alg.invert_homogeneous(u)
        except NotInvertible:
            return Verdict.check('predivision', False, window.stamp(),
                                 'no invertible element in degree %s' % (d,))
        if alg.mul(u, ui) != alg.unit() or alg.mul(ui, u) != alg.unit():
            return Verdict.check('predivision', False, window.stamp(),
                                 'bad inverse in degree %s' % (d,))
        witnesses.append('%s^-1 = %s' % (format_element(alg, u), format_element(alg, ui)))
    return Verdict.check('predivision', True, window.stamp(),
                         'verified on window', witnesses)


def is_division(alg, window):
    '''every nonzero homogeneous element is invertible; equivalent to B being a field'''
    pre = is_predivision(alg, window)
    if not pre.ok:
        return Verdict.check('division', False, window.stamp(), pre.detail)
    # u_lambda is invertible, so b u_lambda is invertible exactly when b is
    b = alg.base.non_unit()
    if b is not None:
        d = window.degrees()[0]
        x = Vector(dict(((tuple(d), k), c) for k, c in b.items()))
        return Verdict.check('division', False, window.stamp(),
                             'non-invertible %s' % format_element(alg, x), [format_element(alg, x)])
    return Verdict.check('division', True, window.stamp(), 'verified on window')


def is_torus(alg, window):
    '''division with one dimensional homogeneous components'''
    div = is_division(alg, window)
    if not div.ok:
        return Verdict.check('torus', False, window.stamp(), div.detail)
    return Verdict.check('torus', alg.base.dim == 1, window.stamp(),
                         'dim A^lambda = %u' % alg.base.dim)


class CenterSplit(object):
    '''degrees of a window sorted into Z(A) and [A,A]'''
    def __init__(self, central, commutators, window):
        self.central = central
        self.commutators = commutators
        self.window = window

    def verdict(self):
        return Verdict.check('A=[A,A]+Z(A)', True, self.window.stamp(),
                             '%u central, %u commutator degrees'
                             % (len(self.central), len(self.commutators)))


def commutator_center_split(alg, window):
    '''
    check that every windowed component lies in [A,A] or in Z(A) and that no
    commutator lands in a central degree
    '''
    central = []
    commutators = {}
    for d in window.degrees():
        if alg.is_central_degree(d):
            central.append(d)
            continue
        for i in range(alg.rank):
            a = add_degrees(d, unit_degree(alg.rank, i, -1))
            c = alg.commutator(alg.monomial(a), alg.generator(i))
            if c:
                commutators[d] = (a, i)
                break
        else:
            raise SplitFails("degree %s is neither central nor a commutator" % (d,))
    for d in central:
        for a in window.degrees():
            b = add_degrees(d, neg_degree(a))
            if b not in window:
                continue
            if alg.commutator(alg.monomial(a), alg.monomial(b)):
                raise SplitFails("[A,A] meets Z(A) in degree %s" % (d,))
    logger.debug("center split of %s: %u central degrees", alg.name, len(central))
    return CenterSplit(central, commutators, window)


def check_identities(alg, window, samples=2000, seed=0):
    '''associativity, invariance, gradedness and support of eps on the window'''
    stamp = window.stamp()
    keys = window_keys(alg, window)
    verdicts = []
    bad = None
    for a, b, c in sample_tuples(keys, 3, samples, seed):
        x, y, z = Vector.unit(a), Vector.unit(b), Vector.unit(c)
        if alg.mul(alg.mul(x, y), z) != alg.mul(x, alg.mul(y, z)):
            bad = (a, b, c)
            break
    verdicts.append(Verdict.check('associativity', bad is None, stamp,
                                  '' if bad is None else 'fails on %s' % (bad,)))
    bad = None
    for a, b, c in sample_tuples(keys, 3, samples, seed):
        x, y, z = Vector.unit(a), Vector.unit(b), Vector.unit(c)
        if alg.form_eps(alg.mul(x, y), z) != alg.form_eps(x, alg.mul(y, z)):
            bad = (a, b, c)
            break
    verdicts.append(Verdict.check('eps invariance', bad is None, stamp,
                                  '' if bad is None else 'fails on %s' % (bad,)))
    bad = None
    for a, b in sample_tuples(keys, 2, samples, seed):
        e = alg.eps_keys(a, b)
        if e != alg.eps_keys(b, a):
            bad = (a, b)
            break
        if e and add_degrees(a[0], b[0]) != alg.zero():
            bad = (a, b)
            break
    verdicts.append(Verdict.check('eps graded symmetric', bad is None, stamp,
                                  '' if bad is None else 'fails on %s' % (bad,)))
    empty = [d for d in window.degrees() if not alg.monomial(d)]
    verdicts.append(Verdict.check('support', not empty, stamp,
                                  '' if not empty else 'A^%s = 0' % (empty[0],)))
    verdicts.append(Verdict.check('eps(1,1) != 0', bool(alg.form_eps(alg.unit(), alg.unit())),
                                  stamp))
    return verdicts


def check_involution(alg, window, samples=2000, seed=0):
    '''bar reverses products, squares to the identity and preserves eps'''
    keys = window_keys(alg, window)
    bad = None
    for a, b in sample_tuples(keys, 2, samples, seed):
        x, y = Vector.unit(a), Vector.unit(b)
        if alg.bar(alg.mul(x, y)) != alg.mul(alg.bar(y), alg.bar(x)):
            bad = (a, b)
            break
        if alg.bar(alg.bar(x)) != x:
            bad = (a, a)
            break
        if alg.form_eps(alg.bar(x), alg.bar(y)) != alg.form_eps(x, y):
            bad = (a, b)
            break
    return Verdict.check('bar involution', bad is None, window.stamp(),
                         '' if bad is None else 'fails on %s' % (bad,))
