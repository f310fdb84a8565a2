'''
toral pairs, root space decompositions and the IARA axiom checks

A ToralPair is an ambient LieAlgebra together with a finite basis of the
(windowed) algebra g and a basis of the toral subalgebra T.  Roots are
functionals on T, stored as their values on the toral basis.
'''
from __future__ import absolute_import, division, print_function

from builtins import object, range
from fractions import Fraction
import logging
from math import gcd
import random

import sympy
from sympy.polys.matrices import DomainMatrix

from .cyclotomic import (div, embed, is_rational, to_fraction, format_scalar, scalar_order,
                         scalar_sort_key, totient, zeta_power)
from .iaraerror import (NotToral, DegenerateFormOnT, InconsistentDecomposition,
                        NoWitness, AxiomFails, IARAError)
from .iarareport import (Verdict, PASS, FAIL, INCONCLUSIVE, window_stamp, sample_tuples)
from .liealg import check_invariance
from .sparse import (Vector, EchelonBasis, kernel, combine, matrix_inverse, key_order)

logger = logging.getLogger(__name__)


class Root(object):
    '''a functional on T given by its values on the toral basis'''
    __slots__ = ('coords',)

    def __init__(self, coords):
        self.coords = tuple(coords)

    @staticmethod
    def zero(n):
        return Root([0] * n)

    def is_zero(self):
        return not any(self.coords)

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __add__(self, other):
        return Root([a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        return Root([a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return Root([-a for a in self.coords])

    def scale(self, s):
        return Root([a * s for a in self.coords])

    def __eq__(self, other):
        if not isinstance(other, Root):
            return NotImplemented
        return self.coords == other.coords

    def __ne__(self, other):
        r = self.__eq__(other)
        if r is NotImplemented:
            return r
        return not r

    def __hash__(self):
        return hash(self.coords)

    def sort_key(self):
        return tuple(scalar_sort_key(c) for c in self.coords)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        return '(%s)' % ', '.join(format_scalar(c) for c in self.coords)


class ToralPair(object):
    '''a Lie algebra basis with a toral subalgebra'''
    def __init__(self, algebra, basis, toral, name='', window=None, probes=None,
                 split=False, order=1, probe_bounds=None):
        self.algebra = algebra
        self.basis = list(basis)
        self.toral = list(toral)
        self.name = name or algebra.name
        self.window = window
        self.probes = list(probes or [])
        self.probe_bounds = list(probe_bounds) if probe_bounds is not None else None
        if self.probe_bounds is not None and len(self.probe_bounds) != len(self.probes):
            raise IARAError("%u probe bounds for %u probes" % (len(self.probe_bounds), len(self.probes)))
        self.split = split
        self.order = order
        self._gram_inv = None
        self._decomposition = None
        self.toral_echelon = EchelonBasis()
        for i, t in enumerate(self.toral):
            if self.toral_echelon.add(t, i) is not None:
                raise NotToral("toral basis of %s is linearly dependent" % self.name)
        logger.debug("toral pair %s: dim %u, rank T %u", self.name, len(self.basis), len(self.toral))

    def dim(self):
        return len(self.basis)

    def stamp(self):
        return window_stamp(self.window if self.window is not None and self.window.rank else None)

    def gram(self):
        f = self.algebra.form
        return [[f(s, t) for t in self.toral] for s in self.toral]

    def gram_inverse(self):
        if self._gram_inv is None:
            g = self.gram()
            inv = matrix_inverse(g)
            if inv is None:
                raise DegenerateFormOnT("form restricted to T is degenerate on %s" % self.name)
            self._gram_inv = inv
        return self._gram_inv

    def toral_coordinates(self, v):
        '''coordinates of v on the toral basis, or None when v is not in T'''
        c = self.toral_echelon.coordinates(v)
        if c is None:
            return None
        return [c.get(i, 0) for i in range(len(self.toral))]

    def evaluate(self, root, t):
        '''root value at the element t of T'''
        c = self.toral_coordinates(t)
        if c is None:
            raise IARAError("element is not in T")
        return sum((a * b for a, b in zip(c, root.coords) if a and b), Fraction(0))

    def probe_bound(self, i):
        '''window bound on the degrees read off probe i'''
        if self.probe_bounds is not None:
            return self.probe_bounds[i]
        return self.window.bound if self.window is not None else None

    def root_degree(self, root):
        '''lattice degree of a root, read off the degree probes'''
        return tuple(to_fraction(self.evaluate(root, p)) for p in self.probes)

    def decomposition(self):
        if self._decomposition is None:
            self._decomposition = root_space_decomposition(self)
        return self._decomposition

    def zero_root(self):
        return Root.zero(len(self.toral))

    def __repr__(self):
        return 'ToralPair(%s, dim=%u, rank=%u)' % (self.name, len(self.basis), len(self.toral))


class RootDecomposition(object):
    '''root spaces of a toral pair'''
    def __init__(self, pair, spaces):
        self.pair = pair
        self.spaces = spaces
        self._roots = sorted(spaces.keys())

    def roots(self):
        return list(self._roots)

    def nonzero_roots(self):
        return [a for a in self._roots if not a.is_zero()]

    def space(self, root):
        return self.spaces.get(root, [])

    def dim(self, root):
        return len(self.space(root))

    def __contains__(self, root):
        return root in self.spaces

    def total_dim(self):
        return sum(len(v) for v in self.spaces.values())

    def root_of(self, v):
        '''the root whose space contains v, or None'''
        w = weight_of(self.pair, v)
        if w is not None and w in self.spaces:
            return w
        return None


def weight_of(pair, v):
    '''root of v when v is an ad(T) weight vector, otherwise None'''
    if not v:
        return None
    alg = pair.algebra
    k0 = min(v.keys(), key=key_order)
    coords = []
    for t in pair.toral:
        w = alg.bracket(t, v)
        c = div(w.get(k0, 0), v[k0])
        if w != v.scale(c):
            return None
        coords.append(c)
    return Root(coords)


def _q(c):
    return Fraction(int(c.numerator), int(c.denominator))


def _cyclotomic_eigenvalues(m, order):
    '''eigenvalues of m with multiplicities; all of them must lie in Q(zeta_order)'''
    n = len(m)
    zeta = sympy.exp(2 * sympy.pi * sympy.I / order)
    K = sympy.QQ.algebraic_field(zeta)
    z = K.from_sympy(zeta)

    def element(x):
        if is_rational(x):
            f = to_fraction(x)
            return K.from_sympy(sympy.Rational(f.numerator, f.denominator))
        out = K.zero
        for k, c in enumerate(embed(x, order).coeffs):
            if c:
                out = out + K.from_sympy(sympy.Rational(c.numerator, c.denominator)) * z ** k
        return out
    dm = DomainMatrix([[element(x) for x in row] for row in m], (n, n), K)
    poly = sympy.Poly.from_list(dm.charpoly(), sympy.Symbol('lam'), domain=K)
    out = []
    for f, k in poly.factor_list()[1]:
        if f.degree() != 1:
            raise NotToral("ad(t) has eigenvalues outside Q(zeta_%u)" % order)
        a, b = f.rep.to_list()
        r = K.quo(K.neg(b), a).to_list()
        val = sum((_q(c) * zeta_power(order, len(r) - 1 - i) for i, c in enumerate(r) if c), Fraction(0))
        out.append((val, k))
    return out


def _eigenvalues(pair, m):
    '''eigenvalues of m with multiplicities, in Q or in Q(zeta) for the orders in play'''
    lam = sympy.Symbol('lam')
    if all(is_rational(x) for row in m for x in row):
        mat = sympy.Matrix([[sympy.Rational(to_fraction(x).numerator, to_fraction(x).denominator)
                             for x in row] for row in m])
        roots = mat.charpoly(lam).ground_roots()
        if sum(roots.values()) == len(m):
            return [(Fraction(int(r.p), int(r.q)), k) for r, k in roots.items()]
    order = pair.order
    for row in m:
        for x in row:
            o = scalar_order(x)
            order = order * o // gcd(order, o)
    if totient(order) == 1:
        raise NotToral("ad(t) has eigenvalues outside Q")
    return _cyclotomic_eigenvalues(m, order)


def _eigenspaces(pair, block, t):
    '''split the ad(t)-stable span of block into eigenspaces'''
    alg = pair.algebra
    n = len(block)
    eb = EchelonBasis()
    for i, b in enumerate(block):
        eb.add(b, i)
    m = [[0] * n for _ in range(n)]
    for j, b in enumerate(block):
        c = eb.coordinates(alg.bracket(t, b))
        if c is None:
            raise NotToral("basis span is not ad(T)-stable")
        for i, x in c.items():
            m[i][j] = x
    out = []
    found = 0
    for val, _ in sorted(_eigenvalues(pair, m), key=lambda e: scalar_sort_key(e[0])):
        images = [Vector(dict((i, m[i][j] - (val if i == j else 0)) for i in range(n)))
                  for j in range(n)]
        vecs = [combine((c, block[j]) for j, c in dep.items()) for dep in kernel(images)]
        found += len(vecs)
        out.append((val, vecs))
    if found != n:
        raise NotToral("ad(t) is not diagonalizable")
    return out


def root_space_decomposition(pair):
    '''simultaneous eigenspace decomposition of ad(T) on the basis span'''
    spaces = {}
    weights = [weight_of(pair, b) for b in pair.basis]
    if all(w is not None for w in weights):
        for w, b in zip(weights, pair.basis):
            spaces.setdefault(w, []).append(b)
    else:
        logger.debug("%s: basis is not a weight basis, diagonalising", pair.name)
        blocks = [([], list(pair.basis))]
        for t in pair.toral:
            nxt = []
            for coords, block in blocks:
                for val, vecs in _eigenspaces(pair, block, t):
                    if vecs:
                        nxt.append((coords + [val], vecs))
            blocks = nxt
        for coords, vecs in blocks:
            spaces[Root(coords)] = vecs
    dec = RootDecomposition(pair, spaces)
    if dec.total_dim() != len(pair.basis):
        raise InconsistentDecomposition("root spaces of %s have total dimension %u, expected %u"
                                        % (pair.name, dec.total_dim(), len(pair.basis)))
    logger.debug("%s: %u roots", pair.name, len(spaces))
    return dec


def representative(pair, alpha):
    '''the t_alpha in T with (t_alpha, t) = alpha(t)'''
    g = pair.gram_inverse()
    n = len(pair.toral)
    terms = []
    for k in range(n):
        c = 0
        for j in range(n):
            if g[k][j] and alpha[j]:
                c = c + g[k][j] * alpha[j]
        terms.append((c, pair.toral[k]))
    return combine(terms)


def root_form(pair, alpha, beta):
    '''(alpha, beta) = (t_alpha, t_beta)'''
    g = pair.gram_inverse()
    total = 0
    for i, a in enumerate(alpha.coords):
        if not a:
            continue
        for j, b in enumerate(beta.coords):
            if b and g[i][j]:
                total = total + a * g[i][j] * b
    return total


def is_isotropic(pair, alpha):
    return not root_form(pair, alpha, alpha)


def centralizer(pair, S, W):
    '''basis of {w in span W : [s, w] = 0 for all s in S}'''
    if not S:
        return list(W)
    alg = pair.algebra
    images = []
    for w in W:
        out = {}
        for i, s in enumerate(S):
            for k, c in alg.bracket(s, w).items():
                out[(i, k)] = c
        images.append(Vector(out))
    return [combine((c, W[j]) for j, c in dep.items()) for dep in kernel(images)]


def _span_contains(basis, vectors):
    eb = EchelonBasis(basis)
    return all(eb.contains(v) for v in vectors)


def ia2_witness(pair, e, opposite):
    '''
    f in span(opposite) with 0 != [e, f] in T, found in the exact subspace
    {f : [e, f] in T}; returns (f, [e, f]) or None
    '''
    alg = pair.algebra
    images = [Vector(pair.toral_echelon.reduce(alg.bracket(e, f))[0]) for f in opposite]
    for dep in kernel(images):
        f = combine((c, opposite[j]) for j, c in dep.items())
        br = alg.bracket(e, f)
        if br:
            return f, br
    return None


def check_IA1(pair, dec=None, samples=2000, seed=0):
    '''nondegeneracy of the form on T and on each g_alpha x g_-alpha, plus invariance'''
    dec = dec or pair.decomposition()
    stamp = pair.stamp()
    verdicts = []
    try:
        pair.gram_inverse()
        verdicts.append(Verdict('IA1 form on T', PASS, stamp, 'rank %u' % len(pair.toral)))
    except DegenerateFormOnT as e:
        verdicts.append(Verdict('IA1 form on T', FAIL, stamp, e.message))
    f = pair.algebra.form
    bad = None
    for a in dec.roots():
        pos, neg = dec.space(a), dec.space(-a)
        if len(pos) != len(neg):
            bad = (a, 'dim g_a = %u but dim g_-a = %u' % (len(pos), len(neg)))
            break
        if matrix_inverse([[f(x, y) for y in neg] for x in pos]) is None:
            bad = (a, 'pairing g_a x g_-a is degenerate')
            break
    verdicts.append(Verdict.check('IA1 form on g', bad is None, stamp,
                                  '%u root spaces' % len(dec.roots()) if bad is None
                                  else 'alpha=%s: %s' % bad))
    bad = None
    roots = dec.roots()
    for a, b in sample_tuples(roots, 2, samples, seed):
        if (a + b).is_zero():
            continue
        for x in dec.space(a):
            for y in dec.space(b):
                if f(x, y):
                    bad = (a, b)
                    break
            if bad:
                break
        if bad:
            break
    verdicts.append(Verdict.check('root space orthogonality', bad is None, stamp,
                                  '' if bad is None else '(g_%s, g_%s) != 0' % bad))
    verdicts.append(check_invariance(pair.algebra, pair.basis, samples, seed, stamp))
    return verdicts


def check_IA2(pair, dec=None, division=False):
    '''
    IA2: a witness pair with 0 != [e, f] = (e, f) t_alpha for each nonzero
    root; with division=True (IA2') one for every basis vector of g_alpha
    '''
    dec = dec or pair.decomposition()
    name = "IA2'" if division else 'IA2'
    stamp = pair.stamp()
    alg = pair.algebra
    witnesses = []
    for a in dec.nonzero_roots():
        found = False
        for e in dec.space(a):
            w = ia2_witness(pair, e, dec.space(-a))
            if w is None:
                if division:
                    return Verdict(name, FAIL, stamp, 'no f for e=%s in g_%s' % (alg.describe(e), a),
                                   [alg.describe(e)])
                continue
            f, br = w
            expect = representative(pair, a).scale(alg.form(e, f))
            if br != expect:
                return Verdict(name, FAIL, stamp, '[e,f] != (e,f)t_alpha for alpha=%s' % (a,),
                               [(alg.describe(e), alg.describe(f))])
            found = True
            witnesses.append('alpha=%s e=%s f=%s [e,f]=%s' % (a, alg.describe(e), alg.describe(f),
                                                              alg.describe(br)))
            if not division:
                break
        if not found:
            return Verdict(name, FAIL, stamp, 'no witness for alpha=%s' % (a,))
    return Verdict(name, PASS, stamp, '%u nonzero roots' % len(dec.nonzero_roots()), witnesses)


def check_IA2_division(pair, dec=None):
    return check_IA2(pair, dec, division=True)


def nilpotency_index(pair, roots, alpha, beta):
    '''
    smallest n >= 1 with (beta,alpha) + n(alpha,alpha) outside the values
    (gamma,alpha) over roots; beta + n alpha is then not a root
    '''
    values = set(root_form(pair, g, alpha) for g in roots)
    return _first_gap(values, root_form(pair, alpha, alpha), root_form(pair, beta, alpha))


def _first_gap(values, aa, ba):
    n = 1
    while ba + n * aa in values:
        n += 1
    return n


def check_IA3(pair, dec=None, bound=10, samples=None, seed=0):
    '''
    local nilpotency of ad(x) for x in nonisotropic root spaces: the index
    predicted from root values is confirmed by exact iteration; an index above
    bound makes the verdict inconclusive
    '''
    dec = dec or pair.decomposition()
    stamp = pair.stamp()
    alg = pair.algebra
    roots = dec.roots()
    tasks = []
    for a in dec.nonzero_roots():
        if is_isotropic(pair, a):
            continue
        values = set(root_form(pair, g, a) for g in roots)
        aa = root_form(pair, a, a)
        for b in roots:
            n = _first_gap(values, aa, root_form(pair, b, a))
            for x in dec.space(a):
                for y in dec.space(b):
                    tasks.append((a, n, x, y))
    total = len(tasks)
    if samples is not None and total > samples:
        tasks = random.Random(seed).sample(tasks, samples)
    worst = 0
    for a, n, x, y in tasks:
        if n > bound:
            return Verdict('IA3', INCONCLUSIVE, stamp,
                           'index %u for alpha=%s exceeds bound %u' % (n, a, bound))
        if alg.ad_power(x, y, n):
            return Verdict('IA3', FAIL, stamp, 'ad(x)^%u y != 0 for alpha=%s' % (n, a),
                           [(alg.describe(x), alg.describe(y))])
        worst = max(worst, n)
    detail = 'verified up to bound %u (max index %u, %u pairs)' % (bound, worst, len(tasks))
    if len(tasks) < total:
        detail += ', sampled %u of %u' % (len(tasks), total)
    return Verdict('IA3', PASS, stamp, detail)


def check_iara(pair, dec=None, bound=10, division=False, samples=2000, seed=0):
    '''the IA1, IA2 (or IA2') and IA3 suite'''
    dec = dec or pair.decomposition()
    verdicts = check_IA1(pair, dec, samples, seed)
    verdicts.append(check_IA2(pair, dec))
    if division:
        verdicts.append(check_IA2_division(pair, dec))
    verdicts.append(check_IA3(pair, dec, bound, samples, seed))
    return verdicts


def check_split(pair, dec=None):
    '''T is a splitting Cartan subalgebra: T = g_0'''
    dec = dec or pair.decomposition()
    g0 = dec.space(pair.zero_root())
    ok = len(g0) == len(pair.toral) and _span_contains(g0, pair.toral)
    return Verdict.check('splitting Cartan', ok, pair.stamp(),
                         'dim g_0 = %u, dim T = %u' % (len(g0), len(pair.toral)))


def zero_space_abelian(pair, dec=None):
    dec = dec or pair.decomposition()
    g0 = dec.space(pair.zero_root())
    alg = pair.algebra
    for i, x in enumerate(g0):
        for y in g0[i + 1:]:
            if alg.bracket(x, y):
                return False
    return True


def sl2_triple(pair, alpha, dec=None, candidates=None, opposite=None):
    '''
    (e, h, f) with h = 2 t_alpha / (alpha, alpha), e taken from candidates
    (default g_alpha) and f from opposite (default g_-alpha)
    '''
    dec = dec or pair.decomposition()
    aa = root_form(pair, alpha, alpha)
    if not aa:
        raise NoWitness("root %s is isotropic" % (alpha,))
    alg = pair.algebra
    if candidates is None:
        candidates = dec.space(alpha)
    if opposite is None:
        opposite = dec.space(-alpha)
    h = representative(pair, alpha).scale(div(2, aa))
    for e in candidates:
        w = ia2_witness(pair, e, opposite)
        if w is None:
            continue
        f, br = w
        ef = alg.form(e, f)
        if not ef:
            continue
        f = f.scale(div(2, ef * aa))
        if alg.bracket(e, f) != h or alg.bracket(h, e) != e.scale(2) or \
           alg.bracket(h, f) != f.scale(-2):
            raise AxiomFails("sl2 relations fail for alpha=%s" % (alpha,), witness=(e, f))
        return e, h, f
    raise NoWitness("no sl2-triple for alpha=%s" % (alpha,))


def root_table(pair, dec=None):
    '''rows (root, degree, dim, (alpha,alpha)) for reports'''
    dec = dec or pair.decomposition()
    rows = []
    for a in dec.roots():
        deg = pair.root_degree(a) if pair.probes else ()
        rows.append((a, deg, dec.dim(a), format_scalar(root_form(pair, a, a))))
    return rows
