'''
loop algebras and extended affinizations

For a toral pair (g, T) with an automorphism sigma of order m, a commutative
Lambda-graded coefficient algebra A (Lambda = Z^r) and an epimorphism
rho: Lambda -> Z_m, the loop algebra is the sum of g^rho(l) (x) A^l and the
extended affinization adds the central space V = span(c_i) and the degree
derivations d_i.  Everything is built on a finite symmetric window of
degrees l; the toral part is T^0 (x) 1 + V + V-dagger.
'''
from __future__ import absolute_import, division, print_function

from builtins import object, range
from math import gcd
import logging

from .automorph import (FiniteOrderAutomorphism, zm_grading, verify_A1_A3, verify_A4,
                        verify_A5, find_isotropic_pair, pair_search)
from .coeffalg import neg_degree, is_predivision, is_torus
from .cyclotomic import zeta_power, to_fraction
from .fixedpoint import t0_root, indecomposability_transfer, fixed_probes
from .iaraerror import (HypothesisUnmet, FormDegenerate, WindowNotSymmetric, IARAError, NoWitness)
from .iarareport import Verdict, PASS, FAIL
from .liealg import TensorAlgebra, DegreeExtension, check_algebra
from .sparse import Vector, matrix_inverse
from .toral import (Root, ToralPair, check_iara, check_IA2_division, check_split,
                    ia2_witness, zero_space_abelian)

logger = logging.getLogger(__name__)


class GradingHomomorphism(object):
    '''rho: Z^r -> Z_m from the images of the lattice generators'''
    def __init__(self, images, order):
        self.images = [int(x) % order if order else 0 for x in images]
        self.order = order

    def __call__(self, degree):
        if self.order == 1:
            return 0
        return sum(a * b for a, b in zip(self.images, degree)) % self.order

    def is_onto(self):
        if self.order == 1:
            return True
        g = self.order
        for x in self.images:
            g = gcd(g, x)
        return g == 1

    def __repr__(self):
        return 'rho(%s mod %u)' % (', '.join(str(x) for x in self.images), self.order)


class LoopAlgebra(object):
    '''sum over the window of g^rho(l) (x) A^l'''
    def __init__(self, pair, sigma, coeff, rho, window, grading=None):
        if not coeff.commutative:
            raise HypothesisUnmet("loop algebras need a commutative coefficient algebra")
        if window.rank != coeff.rank:
            raise IARAError("window rank %u does not match the coefficient rank %u"
                            % (window.rank, coeff.rank))
        if not isinstance(rho, GradingHomomorphism):
            rho = GradingHomomorphism(rho, sigma.order)
        if len(rho.images) != coeff.rank:
            raise IARAError("rho needs %u generator images" % coeff.rank)
        if not rho.is_onto():
            raise HypothesisUnmet("%s is not onto Z_%u" % (rho, sigma.order))
        self.pair = pair
        self.sigma = sigma
        self.coeff = coeff
        self.rho = rho
        self.window = window
        self.grading = grading or zm_grading(sigma)
        self.algebra = TensorAlgebra(pair.algebra, coeff)
        self._components = {}
        for d in window.degrees():
            j = rho(d)
            comp = []
            for x in self.grading.component(j):
                for ak in coeff.basis(d):
                    comp.append(self.algebra.lift(x, Vector.unit(ak)))
            self._components[d] = comp
        self._check_form()
        logger.info("loop algebra of %s over %s: %u basis vectors on %s",
                    pair.name, coeff.name, sum(len(c) for c in self._components.values()),
                    window.stamp())

    def _check_form(self):
        f = self.algebra.form
        for d, comp in self._components.items():
            opp = self._components.get(neg_degree(d))
            if opp is None:
                raise WindowNotSymmetric("window contains %s but not its negative" % (d,))
            if len(comp) != len(opp):
                raise FormDegenerate("components in degrees %s and its negative differ in dimension" % (d,))
            if comp and matrix_inverse([[f(x, y) for y in opp] for x in comp]) is None:
                raise FormDegenerate("form pairs degree %s degenerately with its negative" % (d,))

    def component(self, degree):
        return list(self._components.get(tuple(degree), []))

    def basis(self):
        out = []
        for d in self.window.degrees():
            out.extend(self._components[d])
        return out

    def dims(self):
        return [(d, len(self._components[d])) for d in self.window.degrees()]


def loop_algebra(pair, sigma, coeff, rho, window, grading=None):
    return LoopAlgebra(pair, sigma, coeff, rho, window, grading)


class HatRoot(object):
    '''pi(alpha) + lambda'''
    def __init__(self, restricted, degree):
        self.restricted = restricted
        self.degree = tuple(degree)

    def is_zero(self):
        return self.restricted.is_zero() and not any(self.degree)

    def __eq__(self, other):
        return isinstance(other, HatRoot) and self.restricted == other.restricted and \
            self.degree == other.degree

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.restricted, self.degree))

    def sort_key(self):
        return (self.degree, self.restricted.sort_key())

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        return '%s+%s' % (self.restricted, self.degree)


class ExtendedAffinization(object):
    '''loop + V + V-dagger with the toral pair (g-hat, T-hat)'''
    def __init__(self, loop):
        self.loop = loop
        inner = loop.algebra
        self.algebra = DegreeExtension(inner, name='%s^' % loop.pair.name)
        r = loop.coeff.rank
        one = loop.coeff.unit()
        self.t0 = loop.grading.toral(0)
        toral = [inner.lift(t, one) for t in self.t0]
        central = [self.algebra.central(i) for i in range(r)]
        derivations = [self.algebra.derivation(i) for i in range(r)]
        toral = toral + central + derivations
        # degrees of the base pair stay visible through its sigma-fixed probes
        inner_probes, inner_bounds = fixed_probes(loop.sigma)
        probes = derivations + [inner.lift(p, one) for p in inner_probes]
        bounds = [loop.window.bound] * r + inner_bounds
        split = loop.pair.split and loop.coeff.base.dim == 1
        self.pair = ToralPair(self.algebra, loop.basis() + central + derivations, toral,
                              name='%s^' % loop.pair.name, window=loop.window,
                              probes=probes, probe_bounds=bounds, split=split)

    def hat_root(self, root):
        '''split a root of (g-hat, T-hat) into its restricted and lattice parts'''
        n = len(self.t0)
        r = self.loop.coeff.rank
        if any(root[n + i] for i in range(r)):
            raise IARAError("root %s does not vanish on V" % (root,))
        return HatRoot(Root(root.coords[:n]), tuple(int(to_fraction(x)) for x in root.coords[n + r:]))

    def root(self, hat):
        '''the root of (g-hat, T-hat) for pi(alpha) + lambda'''
        return Root(list(hat.restricted.coords) + [0] * self.loop.coeff.rank + list(hat.degree))


def extend(loop):
    for d in loop.window.degrees():
        if neg_degree(d) not in loop.window:
            raise WindowNotSymmetric("window contains %s but not its negative" % (d,))
    ext = ExtendedAffinization(loop)
    logger.info("extended affinization %s: dim %u", ext.pair.name, ext.pair.dim())
    return ext


def hat_root_system(ext):
    '''the windowed hat roots computed from the eigenvalues of ad(T-hat)'''
    return sorted(ext.hat_root(a) for a in ext.pair.decomposition().roots())


def hat_root_space(ext, hat):
    return ext.pair.decomposition().space(ext.root(hat))


def predicted_hat_roots(ext):
    '''hat root -> dimension from the restricted roots, the grading and the A^l'''
    loop = ext.loop
    base = loop.pair
    grading = loop.grading
    out = {}
    for d in loop.window.degrees():
        j = loop.rho(d)
        adim = len(loop.coeff.basis(d))
        for rroot in grading.restricted_roots():
            part = grading.part(j, rroot)
            if part and adim:
                hat = HatRoot(t0_root(base, grading, rroot), d)
                out[hat] = out.get(hat, 0) + len(part) * adim
    zero = HatRoot(Root.zero(len(ext.t0)), loop.coeff.zero())
    out[zero] = out.get(zero, 0) + 2 * loop.coeff.rank
    return out


def check_hat_roots(ext):
    predicted = predicted_hat_roots(ext)
    dec = ext.pair.decomposition()
    actual = dict((ext.hat_root(a), dec.dim(a)) for a in dec.roots())
    bad = None
    for hat in sorted(set(predicted) | set(actual)):
        if predicted.get(hat, 0) != actual.get(hat, 0):
            bad = hat
            break
    return Verdict.check('hat roots', bad is None, ext.pair.stamp(),
                         '%u hat roots' % len(actual) if bad is None else
                         'dim at %s is %u, predicted %u' % (bad, actual.get(bad, 0), predicted.get(bad, 0)))

def _base_witness(sigma, grading, t0, j, rroot):
    '''(x, y, route) in g^j and g^-j whose lift to g-hat brackets into T-hat, or None'''
    if rroot.is_zero():
        try:
            e, f, route = find_isotropic_pair(sigma, j, grading)
        except NoWitness:
            return None
        return e, f, 'isotropic pair via %s' % route
    E = grading.part(j, rroot)
    F = grading.part(-j, -rroot)
    for x in E:
        w = ia2_witness(t0, x, F)
        if w is not None:
            return x, w[0], 'bracket in T^0'
    found = pair_search(sigma.pair, E, F)
    if found is not None:
        return found[0], found[1], 'central term'
    return None


def check_IA2_lifted(ext):
    '''
    IA2 on g-hat from base witnesses: x (x) u_l against y (x) u_l^-1 with x, y
    in the restricted root spaces of g^j and g^-j, or an isotropic pair of
    sigma for the zero restricted root
    '''
    loop = ext.loop
    grading = loop.grading
    coeff = loop.coeff
    pair = ext.pair
    stamp = pair.stamp()
    t0 = ToralPair(loop.pair.algebra, [], grading.toral(0), name='(%s, T^0)' % loop.pair.name)
    cache = {}
    routes = {}
    witnesses = []
    for d in loop.window.degrees():
        j = loop.rho(d)
        u = coeff.monomial(d)
        ui = coeff.invert_homogeneous(u)
        for rroot in grading.restricted_roots():
            if (rroot.is_zero() and not any(d)) or not grading.part(j, rroot):
                continue
            if (j, rroot) not in cache:
                cache[(j, rroot)] = _base_witness(loop.sigma, grading, t0, j, rroot)
            found = cache[(j, rroot)]
            if found is None:
                return Verdict('IA2 lifted witnesses', FAIL, stamp,
                               'no base witness for %s in degree %s' % (rroot, d))
            x, y, route = found
            e = loop.algebra.lift(x, u)
            f = loop.algebra.lift(y, ui)
            br = ext.algebra.bracket(e, f)
            if not br or pair.toral_coordinates(br) is None:
                return Verdict('IA2 lifted witnesses', FAIL, stamp,
                               '[e,f] is not a nonzero element of T-hat for %s in degree %s' % (rroot, d),
                               [(ext.algebra.describe(e), ext.algebra.describe(f))])
            routes[route] = routes.get(route, 0) + 1
            witnesses.append('%s+%s via %s: [e,f]=%s' % (rroot, d, route, ext.algebra.describe(br)))
    return Verdict('IA2 lifted witnesses', PASS, stamp,
                   ', '.join('%s %u' % (r, n) for r, n in sorted(routes.items())), witnesses)



def affinization_hypotheses(ext, samples=2000, seed=0):
    loop = ext.loop
    pair = loop.pair
    sigma = loop.sigma
    verdicts = [check_IA2_division(pair)]
    verdicts.extend(verify_A1_A3(sigma, samples, seed))
    verdicts.extend(verify_A4(sigma, loop.grading))
    a5 = verify_A5(sigma, loop.grading)
    abelian = zero_space_abelian(pair)
    verdicts.append(Verdict.check('A5 or abelian g_0', a5.ok or abelian, a5.window,
                                  'g_0 abelian' if abelian else a5.detail))
    verdicts.append(is_predivision(loop.coeff, loop.window))
    return [v.as_hypothesis() for v in verdicts]


def verify_theorem_affinization(ext, bound=10, samples=2000, seed=0):
    '''(g-hat, T-hat) is an IARA with root system R-hat on the window'''
    loop = ext.loop
    pair = ext.pair
    stamp = pair.stamp()
    verdicts = affinization_hypotheses(ext, samples, seed)
    verdicts.extend(check_algebra(ext.algebra, pair.basis, samples, seed, stamp))
    division = is_torus(loop.coeff, loop.window).ok and zero_space_abelian(loop.pair)
    verdicts.extend(check_iara(pair, bound=bound, division=division, samples=samples, seed=seed))
    verdicts.append(check_IA2_lifted(ext))
    if pair.split:
        verdicts.append(check_split(pair))
    verdicts.append(indecomposability_transfer(loop.pair, pair))
    verdicts.append(check_hat_roots(ext))
    return verdicts


def iterate(ext, base_sigma, mu, order=None):
    '''
    sigma-hat = (base_sigma (x) id)(id (x) mu) on the loop part with
    mu(x (x) a) = zeta^(mu . l) x (x) a for a in A^l, identity on V and V-dagger;
    returns (sigma-hat, verdicts)
    '''
    order = order or base_sigma.order
    if order % base_sigma.order:
        raise IARAError("order %u is not a multiple of %u" % (order, base_sigma.order))
    loop = ext.loop
    mu = [int(x) for x in mu]
    if len(mu) != loop.coeff.rank:
        raise IARAError("mu needs %u values" % loop.coeff.rank)

    def image(key):
        if key[0] != 'T':
            return Vector.unit(key)
        _, gk, ak = key
        z = zeta_power(order, sum(a * b for a, b in zip(mu, ak[0])))
        return Vector(dict((('T', k, ak), c * z) for k, c in base_sigma.image_key(gk).items()))

    sigma_hat = FiniteOrderAutomorphism(ext.pair, order, image, name='%s.mu' % base_sigma.name)
    verdicts = verify_A1_A3(sigma_hat)
    grading = zm_grading(sigma_hat)
    verdicts.extend(verify_A4(sigma_hat, grading))
    if loop.sigma.order == 1 and order == base_sigma.order:
        base_grading = zm_grading(base_sigma)
        predicted = 2 * loop.coeff.rank
        for d in loop.window.degrees():
            j = -sum(a * b for a, b in zip(mu, d))
            predicted += len(base_grading.component(j)) * len(loop.coeff.basis(d))
        actual = len(grading.component(0))
        verdicts.append(Verdict.check('iterated fixed algebra', actual == predicted, ext.pair.stamp(),
                                      'dim %u, predicted %u' % (actual, predicted)))
    logger.info("iterated automorphism %s of order %u", sigma_hat.name, order)
    return sigma_hat, verdicts
