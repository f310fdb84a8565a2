'''
finite order automorphisms of toral pairs and the gradings they induce

A FiniteOrderAutomorphism of order m acts on basis keys of the ambient
algebra.  It grades g by the eigenvalues zeta^j, j in Z_m, with projections

    pi_j = (1/m) sum_i zeta^(-ji) sigma^i

and acts on roots by sigma(alpha) = alpha o sigma^-1.  The restricted root
pi(alpha) is the average of the orbit of alpha; it agrees with alpha on the
fixed toral part T^0 and vanishes on the other graded parts of T.
'''
from __future__ import absolute_import, division, print_function

from builtins import object, range
from fractions import Fraction
import logging

import sympy

from .cyclotomic import zeta_power
from .iaraerror import (NotDiagonalizable, RootMismatch, NoWitness, IARAError)
from .iarareport import Verdict, PASS, FAIL, sample_tuples
from .liealg import MatrixAlgebra, DegreeExtension
from .sparse import Vector, EchelonBasis, span_basis, kernel, combine
from .toral import (Root, representative, centralizer, zero_space_abelian)

logger = logging.getLogger(__name__)


class FiniteOrderAutomorphism(object):
    '''an automorphism sigma of period dividing order, given on basis keys'''
    def __init__(self, pair, order, image, name='sigma'):
        self.pair = pair
        self.order = order
        self._image = image
        self.name = name
        self._cache = {}
        self._power_cache = {}
        self._root_matrix = None

    def image_key(self, key):
        r = self._cache.get(key)
        if r is None:
            r = self._image(key)
            self._cache[key] = r
        return r

    def apply(self, x):
        out = {}
        for k, c in x.items():
            for k2, d in self.image_key(k).items():
                out[k2] = out.get(k2, 0) + c * d
        return Vector(out)
    __call__ = apply

    def power(self, x, i):
        for _ in range(i):
            x = self.apply(x)
        return x

    def power_key(self, key, i):
        '''sigma^i of a basis key, 0 <= i < order'''
        ck = (key, i)
        r = self._power_cache.get(ck)
        if r is None:
            r = self.power(Vector.unit(key), i)
            self._power_cache[ck] = r
        return r

    def apply_power(self, x, i):
        i %= self.order
        out = {}
        for k, c in x.items():
            for k2, d in self.power_key(k, i).items():
                out[k2] = out.get(k2, 0) + c * d
        return Vector(out)

    def inverse(self, x):
        return self.apply_power(x, self.order - 1)

    def zeta(self, k):
        return zeta_power(self.order, k)

    def project(self, x, j):
        '''pi_j(x)'''
        m = self.order
        terms = [(self.zeta(-j * i), self.apply_power(x, i)) for i in range(m)]
        return combine(terms).scale(Fraction(1, m))

    def root_matrix(self):
        '''M with sigma^-1(t_k) = sum_l M[l][k] t_l on the toral basis'''
        if self._root_matrix is None:
            pair = self.pair
            cols = []
            for t in pair.toral:
                c = pair.toral_coordinates(self.inverse(t))
                if c is None:
                    raise IARAError("%s does not stabilise T" % self.name)
                cols.append(c)
            n = len(pair.toral)
            self._root_matrix = [[cols[k][l] for k in range(n)] for l in range(n)]
        return self._root_matrix

    def act_on_root(self, alpha):
        '''sigma(alpha) = alpha o sigma^-1'''
        m = self.root_matrix()
        n = len(alpha)
        return Root([sum((m[l][k] * alpha[l] for l in range(n) if m[l][k] and alpha[l]), Fraction(0))
                     for k in range(n)])

    def __repr__(self):
        return 'FiniteOrderAutomorphism(%s, order %u)' % (self.name, self.order)


class Projection(object):
    '''the linear map pi_j'''
    def __init__(self, sigma, j):
        self.sigma = sigma
        self.j = j % sigma.order

    def __call__(self, x):
        return self.sigma.project(x, self.j)


def projection(sigma, j):
    return Projection(sigma, j)


def identity_automorphism(pair):
    return FiniteOrderAutomorphism(pair, 1, lambda k: Vector.unit(k), name='id')


def _matrix_part(alg):
    if isinstance(alg, MatrixAlgebra):
        return alg
    if isinstance(alg, DegreeExtension) and isinstance(alg.inner, MatrixAlgebra):
        return alg.inner
    raise IARAError("%s is not a matrix algebra" % alg.name)


def transpose_involution(pair):
    '''
    sigma(a e_ij) = -bar(a) e_(r(j), r(i)) with r reversing the index order;
    V and V-dagger are fixed.  On sl_K+-(A) this is x -> -x*, on sl_n the
    diagram flip x -> -J x^t J
    '''
    mat = _matrix_part(pair.algebra)
    idx = mat.indices
    rev = dict((idx[p], idx[len(idx) - 1 - p]) for p in range(len(idx)))
    coeff = mat.coeff

    def image(key):
        if key[0] != 'E':
            return Vector.unit(key)
        _, i, j, a = key
        return Vector(dict((('E', rev[j], rev[i], ak), -c)
                           for ak, c in coeff.bar_keys(a).items()))
    return FiniteOrderAutomorphism(pair, 2, image, name='transpose')


def diagonal_automorphism(pair, order, weights):
    '''sigma(a e_ij) = zeta^(w_i - w_j) a e_ij for integer weights on the indices'''
    mat = _matrix_part(pair.algebra)
    w = dict(zip(mat.indices, weights))
    if len(w) != len(mat.indices):
        raise IARAError("need one weight per matrix index")

    def image(key):
        if key[0] != 'E':
            return Vector.unit(key)
        return Vector.unit(key, zeta_power(order, w[key[1]] - w[key[2]]))
    return FiniteOrderAutomorphism(pair, order, image, name='diagonal')


def matrix_automorphism(pair, order, images, name='matrix'):
    '''from explicit images of basis keys; keys not listed are fixed'''
    images = dict((k, v if isinstance(v, Vector) else Vector(v)) for k, v in images.items())
    return FiniteOrderAutomorphism(pair, order, lambda k: images.get(k, Vector.unit(k)), name=name)


def _minimal_order(sigma):
    basis = sigma.pair.basis
    for d in sympy.divisors(sigma.order):
        if all(sigma.power(b, d) == b for b in basis):
            return int(d)
    return None


def verify_A1_A3(sigma, samples=2000, seed=0):
    '''period, homomorphism, T-stability and isometry'''
    pair = sigma.pair
    alg = pair.algebra
    stamp = pair.stamp()
    basis = pair.basis
    verdicts = []
    d = _minimal_order(sigma)
    verdicts.append(Verdict.check('A1 period', d is not None, stamp,
                                  'sigma^%u = id, minimal order %s' % (sigma.order, d)))
    eb = EchelonBasis(basis)
    bad = [b for b in basis if not eb.contains(sigma(b))]
    verdicts.append(Verdict.check('basis span stable', not bad, stamp,
                                  '' if not bad else 'sigma(%s) leaves the span' % alg.describe(bad[0])))
    bad = None
    for x, y in sample_tuples(basis, 2, samples, seed):
        if sigma(alg.bracket(x, y)) != alg.bracket(sigma(x), sigma(y)):
            bad = (x, y)
            break
    verdicts.append(Verdict.check('homomorphism', bad is None, stamp,
                                  '' if bad is None else 'fails on %s, %s'
                                  % (alg.describe(bad[0]), alg.describe(bad[1]))))
    bad = [t for t in pair.toral if pair.toral_coordinates(sigma(t)) is None]
    verdicts.append(Verdict.check('A2 sigma(T)=T', not bad, stamp,
                                  '' if not bad else 'sigma(%s) not in T' % alg.describe(bad[0])))
    bad = None
    for x, y in sample_tuples(basis, 2, samples, seed):
        if alg.form(sigma(x), sigma(y)) != alg.form(x, y):
            bad = (x, y)
            break
    verdicts.append(Verdict.check('A3 isometry', bad is None, stamp,
                                  '' if bad is None else 'fails on %s, %s'
                                  % (alg.describe(bad[0]), alg.describe(bad[1]))))
    return verdicts


class ZmGrading(object):
    '''
    g^j and T^j for j in Z_m; parts[(j, pi(alpha))] is a basis of
    g^j intersected with the restricted root space of pi(alpha)
    '''
    def __init__(self, sigma, parts, toral_parts, restricted):
        self.sigma = sigma
        self.order = sigma.order
        self.parts = parts
        self.toral_parts = toral_parts
        self.restricted = restricted

    def component(self, j):
        j %= self.order
        out = []
        for (i, r) in sorted(self.parts, key=lambda k: (k[0], k[1].sort_key())):
            if i == j:
                out.extend(self.parts[(i, r)])
        return out

    def toral(self, j):
        return list(self.toral_parts.get(j % self.order, []))

    def part(self, j, rroot):
        return list(self.parts.get((j % self.order, rroot), []))

    def restricted_roots(self):
        return sorted(set(r for (_, r) in self.parts))

    def dims(self):
        return [len(self.component(j)) for j in range(self.order)]


def restricted_root(sigma, alpha):
    '''pi(alpha) = (1/m) sum_i sigma^i(alpha)'''
    m = sigma.order
    total = alpha
    cur = alpha
    for _ in range(m - 1):
        cur = sigma.act_on_root(cur)
        total = total + cur
    return total.scale(Fraction(1, m))


def orbit_length(sigma, alpha):
    cur = sigma.act_on_root(alpha)
    n = 1
    while cur != alpha:
        cur = sigma.act_on_root(cur)
        n += 1
        if n > sigma.order:
            raise IARAError("orbit of %s is longer than the order" % (alpha,))
    return n


def orbit_reps(sigma, roots):
    '''lexicographically least root of each orbit'''
    seen = set()
    reps = []
    for a in sorted(roots):
        if a in seen:
            continue
        orbit = [a]
        cur = sigma.act_on_root(a)
        while cur != a:
            orbit.append(cur)
            cur = sigma.act_on_root(cur)
        seen.update(orbit)
        reps.append(min(orbit))
    return sorted(reps)


def zm_grading(sigma, dec=None):
    '''eigenspace decomposition of g and T for the eigenvalues zeta^j'''
    pair = sigma.pair
    dec = dec or pair.decomposition()
    m = sigma.order
    groups = {}
    restricted = {}
    for a in dec.roots():
        ra = restricted_root(sigma, a)
        restricted[a] = ra
        for b in dec.space(a):
            for j in range(m):
                v = sigma.project(b, j)
                if v:
                    groups.setdefault((j, ra), []).append(v)
    parts = {}
    for key, vecs in groups.items():
        parts[key] = span_basis(vecs)
    toral_parts = {}
    for j in range(m):
        vecs = span_basis([sigma.project(t, j) for t in pair.toral])
        if vecs:
            toral_parts[j] = vecs
    grading = ZmGrading(sigma, parts, toral_parts, restricted)
    total = sum(grading.dims())
    if total != pair.dim():
        raise NotDiagonalizable("graded components of %s have total dimension %u, expected %u"
                                % (pair.name, total, pair.dim()))
    if sum(len(v) for v in toral_parts.values()) != len(pair.toral):
        raise NotDiagonalizable("T is not graded by %s" % sigma.name)
    logger.debug("%s grading of %s: dims %s", sigma.name, pair.name, grading.dims())
    return grading


def eigen_projection(sigma, j, x):
    '''
    pi_j(x) computed independently: eigenspaces are kernels of sigma - zeta^k
    on the basis span, x is expanded in them and its zeta^j part returned
    '''
    pair = sigma.pair
    spaces = getattr(sigma, '_eigenspaces', None)
    if spaces is None:
        spaces = []
        for k in range(sigma.order):
            z = sigma.zeta(k)
            images = [sigma(b) - b.scale(z) for b in pair.basis]
            spaces.append([combine((c, pair.basis[i]) for i, c in dep.items())
                           for dep in kernel(images)])
        sigma._eigenspaces = spaces
    eb = EchelonBasis()
    labels = []
    for k, vecs in enumerate(spaces):
        for i, v in enumerate(vecs):
            eb.add(v, (k, i))
            labels.append((k, i))
    coords = eb.coordinates(x)
    if coords is None:
        raise NotDiagonalizable("element is outside the graded span")
    return combine((c, spaces[k][i]) for (k, i), c in coords.items() if k == j % sigma.order)


def xbar(sigma, alpha, x, j, dec=None):
    '''sum_(i < m/l) zeta^(-jil) sigma^(il)(x) for x in g_alpha, l the orbit length'''
    dec = dec or sigma.pair.decomposition()
    if alpha not in dec or not EchelonBasis(dec.space(alpha)).contains(x):
        raise RootMismatch("element is not in g_%s" % (alpha,))
    l = orbit_length(sigma, alpha)
    m = sigma.order
    return combine((sigma.zeta(-j * i * l), sigma.apply_power(x, i * l)) for i in range(m // l))


def fixed_vectors(sigma, vecs, power):
    '''basis of the sigma^power-fixed vectors in span(vecs)'''
    images = [sigma.apply_power(v, power) - v for v in vecs]
    return [combine((c, vecs[i]) for i, c in dep.items()) for dep in kernel(images)]


def verify_A4(sigma, grading=None, dec=None):
    '''
    C_{g^0}(T^0) inside g_0, cross-checked against the orbit criterion
    (pi(alpha) != 0 or no sigma^l-fixed vectors in g_alpha) and, for prime
    order, against pi(alpha) != 0 for all nonzero roots
    '''
    pair = sigma.pair
    dec = dec or pair.decomposition()
    grading = grading or zm_grading(sigma, dec)
    stamp = pair.stamp()
    t0 = grading.toral(0)
    c = centralizer(pair, t0, grading.component(0))
    g0 = EchelonBasis(dec.space(pair.zero_root()))
    outside = [v for v in c if not g0.contains(v)]
    a4 = not outside
    verdicts = [Verdict.check('A4', a4, stamp,
                              'dim C(T^0) = %u' % len(c) if a4 else
                              'centralizer element outside g_0: %s' % pair.algebra.describe(outside[0]),
                              [pair.algebra.describe(v) for v in outside[:1]])]
    bad = None
    for a in dec.nonzero_roots():
        if not grading.restricted[a].is_zero():
            continue
        l = orbit_length(sigma, a)
        if fixed_vectors(sigma, dec.space(a), l):
            bad = a
            break
    verdicts.append(Verdict.check("A4' orbit criterion", (bad is None) == a4, stamp,
                                  'agrees with A4' if (bad is None) == a4 else
                                  'disagrees with A4 at alpha=%s' % (bad,)))
    if sympy.isprime(sigma.order):
        zero = [a for a in dec.nonzero_roots() if grading.restricted[a].is_zero()]
        verdicts.append(Verdict.check("A4'' pi(alpha) != 0", (not zero) == a4, stamp,
                                      'agrees with A4' if (not zero) == a4 else
                                      'disagrees with A4 at alpha=%s' % (zero[0],)))
    return verdicts


def verify_A5(sigma, grading=None, dec=None):
    '''T^j != 0 whenever 0 != g^j_pi(0) lies inside g_0'''
    pair = sigma.pair
    dec = dec or pair.decomposition()
    grading = grading or zm_grading(sigma, dec)
    g0 = EchelonBasis(dec.space(pair.zero_root()))
    zero = pair.zero_root()
    bad = []
    applies = []
    for j in range(sigma.order):
        part = grading.part(j, zero)
        if part and all(g0.contains(v) for v in part):
            applies.append(j)
            if not grading.toral(j):
                bad.append(j)
    return Verdict.check('A5', not bad, pair.stamp(),
                         'checked j in %s' % (applies,) if not bad else 'T^%u = 0' % bad[0])


def pair_search(pair, E, F):
    '''(e, f) with e in span E, f in span F, [e, f] = 0 and (e, f) != 0, or None'''
    alg = pair.algebra
    for e in E:
        images = [alg.bracket(e, f) for f in F]
        for dep in kernel(images):
            f = combine((c, F[i]) for i, c in dep.items())
            if f and alg.form(e, f):
                return e, f
    return None


def find_isotropic_pair(sigma, j, grading=None, dec=None):
    '''
    (e, f, route) with e in g^j_pi(0), f in g^-j_pi(0), [e,f] = 0 and (e,f) != 0;
    tries T^j first, then an abelian g_0, then root spaces with pi(alpha) = 0,
    then the whole components
    '''
    pair = sigma.pair
    dec = dec or pair.decomposition()
    grading = grading or zm_grading(sigma, dec)
    zero = pair.zero_root()
    if not grading.part(j, zero):
        raise NoWitness("g^%u_pi(0) is zero" % (j % sigma.order))
    routes = [('toral', grading.toral(j), grading.toral(-j))]
    g0 = dec.space(zero)
    if zero_space_abelian(pair, dec):
        routes.append(('abelian g_0', span_basis([sigma.project(x, j) for x in g0]),
                       span_basis([sigma.project(x, -j) for x in g0])))
    for a in dec.nonzero_roots():
        if grading.restricted[a].is_zero():
            E = span_basis([sigma.project(x, j) for x in dec.space(a)])
            F = span_basis([sigma.project(y, -j) for y in dec.space(-a)])
            if E and F:
                routes.append(('root %s' % (a,), E, F))
    routes.append(('component', grading.part(j, zero), grading.part(-j, zero)))
    for name, E, F in routes:
        if not E or not F:
            continue
        found = pair_search(pair, E, F)
        if found:
            return found[0], found[1], name
    raise NoWitness("no isotropic pair in degree %u" % (j % sigma.order))


def projection_suite(sigma, grading=None, dec=None, samples=500, seed=0):
    '''the identities of the projection calculus as verdicts'''
    pair = sigma.pair
    alg = pair.algebra
    dec = dec or pair.decomposition()
    grading = grading or zm_grading(sigma, dec)
    m = sigma.order
    stamp = pair.stamp()
    basis = pair.basis
    P = sigma.project
    verdicts = []

    def record(name, bad, detail=''):
        verdicts.append(Verdict(name, PASS if bad is None else FAIL, stamp,
                                detail if bad is None else 'fails on %s' % (bad,)))

    bad = None
    for b in basis:
        if combine((1, P(b, j)) for j in range(m)) != b:
            bad = alg.describe(b)
            break
    record('sum of projections', bad)

    bad = None
    for b in basis:
        for j in range(m):
            pj = P(b, j)
            if sigma(pj) != pj.scale(sigma.zeta(j)) or P(sigma(b), j) != pj.scale(sigma.zeta(j)):
                bad = (alg.describe(b), j)
                break
            for k in range(m):
                if P(pj, k) != (pj if j == k else Vector()):
                    bad = (alg.describe(b), j, k)
                    break
            if bad:
                break
        if bad:
            break
    record('orthogonal idempotents', bad)

    bad = None
    for b in basis:
        for j in range(m):
            if P(b, j) != eigen_projection(sigma, j, b):
                bad = (alg.describe(b), j)
                break
        if bad:
            break
    record('projection oracle', bad)

    pairs = sample_tuples(basis, 2, samples, seed)
    bad = None
    for x, y in pairs:
        for j in range(m):
            for k in range(m):
                pj, pk = P(x, j), P(y, k)
                if (j + k) % m and alg.form(pj, pk):
                    bad = ('form', j, k)
                    break
                if alg.bracket(pj, pk) != P(alg.bracket(x, pk), j + k):
                    bad = ('bracket', j, k)
                    break
            if bad:
                break
        if bad:
            break
    record('graded bracket and form', bad, '%u pairs' % len(pairs))

    roots = dec.roots()
    bad = None
    for a in roots:
        if a.is_zero():
            continue
        ra = grading.restricted[a]
        t0 = grading.toral(0)
        if any(pair.evaluate(ra, t) != pair.evaluate(a, t) for t in t0):
            bad = ('restriction to T^0', a)
            break
        if any(pair.evaluate(ra, t) for j in range(1, m) for t in grading.toral(j)):
            bad = ('vanishing on T^j', a)
            break
        if P(representative(pair, a), 0) != representative(pair, ra):
            bad = ('pi(t_alpha)', a)
            break
        if restricted_root(sigma, sigma.act_on_root(a)) != ra:
            bad = ('orbit invariance', a)
            break
    record('restricted roots', bad)

    bad = None
    for a in sample_tuples(roots, 1, samples, seed):
        a = a[0]
        l = orbit_length(sigma, a)
        for x in dec.space(a):
            for j in range(m):
                xb = xbar(sigma, a, x, j, dec)
                pj = P(x, j)
                rebuilt = combine((sigma.zeta(-j * i), sigma.apply_power(xb, i)) for i in range(l))
                if rebuilt.scale(Fraction(1, m)) != pj or bool(pj) != bool(xb):
                    bad = ('x-bar sum', a, j)
                    break
                for y in dec.space(-a):
                    lhs = alg.bracket(pj, P(y, -j))
                    if lhs.scale(m) != P(alg.bracket(xb, y), 0):
                        bad = ('x-bar bracket', a, j)
                        break
                    if alg.form(pj, P(y, -j)) * m != alg.form(xb, y):
                        bad = ('x-bar form', a, j)
                        break
                if bad:
                    break
            if bad:
                break
        if bad:
            break
    record('orbit sums', bad)

    bad = None
    orbit_of = {}
    for a in roots:
        orbit_of[a] = min([a] + [r for r in _orbit(sigma, a)])
    for a, b in sample_tuples(roots, 2, samples, seed):
        if a == b or grading.restricted[a] != grading.restricted[b]:
            continue
        for x in dec.space(a):
            for y in dec.space(-b):
                if P(alg.bracket(x, y), 0):
                    bad = ('projected bracket', a, b)
                    break
                if orbit_of[a] != orbit_of[b]:
                    for j in range(m):
                        if alg.bracket(P(x, j), P(y, -j)):
                            bad = ('distinct orbits', a, b, j)
                            break
                if bad:
                    break
            if bad:
                break
        if bad:
            break
    record('equal restrictions', bad)

    bad = None
    for (j, ra), vecs in grading.parts.items():
        for v in vecs:
            if sigma(v) != v.scale(sigma.zeta(j)):
                bad = ('eigenvalue', j, ra)
                break
            for t in grading.toral(0):
                if alg.bracket(t, v) != v.scale(pair.evaluate(ra, t)):
                    bad = ('T^0 weight', j, ra)
                    break
            if bad:
                break
        if bad:
            break
    record('double grading', bad, 'dims %s' % grading.dims())
    return verdicts


def _orbit(sigma, alpha):
    out = []
    cur = sigma.act_on_root(alpha)
    while cur != alpha:
        out.append(cur)
        cur = sigma.act_on_root(cur)
    return out


def orbit_table(sigma, grading=None, dec=None):
    '''rows (representative, orbit length, pi(alpha)) over orbit representatives'''
    dec = dec or sigma.pair.decomposition()
    grading = grading or zm_grading(sigma, dec)
    return [(a, orbit_length(sigma, a), grading.restricted[a])
            for a in orbit_reps(sigma, dec.roots())]
