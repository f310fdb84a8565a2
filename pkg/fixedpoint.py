'''
the restricted toral pair (g, T^0) and the fixed point subalgebra (g^0, T^0)
'''
from __future__ import absolute_import, division, print_function

from builtins import object
import logging

from .automorph import zm_grading, verify_A1_A3, verify_A4
from .iaraerror import InconsistentDecomposition
from .iarareport import Verdict, PASS
from .rootsys import is_indecomposable
from .toral import (Root, ToralPair, check_iara, check_IA2_division, root_form,
                    is_isotropic)

logger = logging.getLogger(__name__)


def fixed_probes(sigma):
    '''(probes, bounds) of the degree probes fixed by sigma'''
    pair = sigma.pair
    kept = [(p, pair.probe_bound(i)) for i, p in enumerate(pair.probes) if sigma(p) == p]
    return [p for p, _ in kept], [b for _, b in kept]


def t0_root(pair, grading, rroot):
    '''a restricted root (in T coordinates) as a root of (g, T^0)'''
    return Root([pair.evaluate(rroot, t) for t in grading.toral(0)])


class RestrictedPair(object):
    '''(g, T^0) with g_pi(alpha) the sum of the g_beta with pi(beta) = pi(alpha)'''
    def __init__(self, base, sigma, grading, pair):
        self.base = base
        self.sigma = sigma
        self.grading = grading
        self.pair = pair

    def restricted_roots(self):
        '''pi(R) as roots of (g, T^0)'''
        return sorted(set(t0_root(self.base, self.grading, r) for r in self.grading.restricted.values()))

    def predicted_dims(self):
        dims = {}
        dec = self.base.decomposition()
        for a, ra in self.grading.restricted.items():
            r = t0_root(self.base, self.grading, ra)
            dims[r] = dims.get(r, 0) + dec.dim(a)
        return dims


def restricted_pair(pair, sigma, grading=None):
    '''the toral pair (g, T^0), checked against the sum of the original root spaces'''
    grading = grading or zm_grading(sigma)
    basis = []
    for key in sorted(grading.parts, key=lambda k: (k[0], k[1].sort_key())):
        basis.extend(grading.parts[key])
    t0 = grading.toral(0)
    probes, bounds = fixed_probes(sigma)
    rp = ToralPair(pair.algebra, basis, t0, name='(%s, T^0)' % pair.name, window=pair.window,
                   probes=probes, probe_bounds=bounds, order=sigma.order)
    result = RestrictedPair(pair, sigma, grading, rp)
    dec = rp.decomposition()
    predicted = result.predicted_dims()
    actual = dict((r, dec.dim(r)) for r in dec.roots())
    if predicted != actual:
        raise InconsistentDecomposition("restricted root spaces of %s do not match the sums of root spaces"
                                        % pair.name)
    logger.info("restricted pair of %s: %u restricted roots", pair.name, len(actual))
    return result


class FixedSubalgebra(object):
    '''g^0 with T^0 and its root set R^sigma'''
    def __init__(self, base, sigma, grading, pair):
        self.base = base
        self.sigma = sigma
        self.grading = grading
        self.pair = pair

    def roots(self):
        return self.pair.decomposition().roots()


def fixed_subalgebra(pair, sigma, grading=None):
    '''(g^0, T^0) with g^0 the kernel of sigma - id'''
    grading = grading or zm_grading(sigma)
    probes, bounds = fixed_probes(sigma)
    fp = ToralPair(pair.algebra, grading.component(0), grading.toral(0),
                   name='(%s^0, T^0)' % pair.name, window=pair.window,
                   probes=probes, probe_bounds=bounds, split=pair.split)
    logger.info("fixed subalgebra of %s: dim %u", pair.name, fp.dim())
    return FixedSubalgebra(pair, sigma, grading, fp)


def hypotheses(pair, sigma, samples=2000, seed=0, grading=None):
    '''the division IARA and A1-A4 preconditions as hypothesis verdicts'''
    verdicts = [check_IA2_division(pair)]
    verdicts.extend(verify_A1_A3(sigma, samples, seed))
    verdicts.extend(verify_A4(sigma, grading))
    return [v.as_hypothesis() for v in verdicts]


def indecomposability_transfer(base, target, name='indecomposable transfer'):
    '''R^x indecomposable implies the same for the target pair'''
    def nonisotropic(pair):
        return [a for a in pair.decomposition().nonzero_roots() if not is_isotropic(pair, a)]

    def form_of(pair):
        return lambda a, b: root_form(pair, a, b)

    if not is_indecomposable(nonisotropic(base), form_of(base)):
        return Verdict(name, PASS, target.stamp(), 'R^x decomposable, nothing to transfer')
    ok = is_indecomposable(nonisotropic(target), form_of(target))
    return Verdict.check(name, ok, target.stamp(),
                         '' if ok else 'image of an indecomposable R^x decomposes')


def verify_theorem_restricted(pair, sigma, bound=10, samples=2000, seed=0):
    '''(g, T^0) is an IARA with root system pi(R); returns (RestrictedPair, verdicts)'''
    grading = zm_grading(sigma)
    verdicts = hypotheses(pair, sigma, samples, seed, grading)
    rp = restricted_pair(pair, sigma, grading)
    verdicts.extend(check_iara(rp.pair, bound=bound, samples=samples, seed=seed))
    roots = set(rp.pair.decomposition().roots())
    predicted = set(rp.restricted_roots())
    verdicts.append(Verdict.check('root system pi(R)', roots == predicted, rp.pair.stamp(),
                                  '%u restricted roots' % len(roots)))
    verdicts.append(indecomposability_transfer(pair, rp.pair))
    return rp, verdicts


def verify_theorem_fixed(pair, sigma, bound=10, samples=2000, seed=0):
    '''(g^0, T^0) is a division IARA with R^sigma inside pi(R); returns (FixedSubalgebra, verdicts)'''
    grading = zm_grading(sigma)
    verdicts = hypotheses(pair, sigma, samples, seed, grading)
    fs = fixed_subalgebra(pair, sigma, grading)
    fp = fs.pair
    alg = pair.algebra
    bad = None
    basis = fp.basis
    for i, x in enumerate(basis):
        for y in basis[i:]:
            b = alg.bracket(x, y)
            if sigma(b) != b:
                bad = (x, y)
                break
        if bad:
            break
    verdicts.append(Verdict.check('g^0 closed under bracket', bad is None, fp.stamp(),
                                  'dim g^0 = %u' % fp.dim() if bad is None else
                                  '[%s, %s] is not fixed' % (alg.describe(bad[0]), alg.describe(bad[1]))))
    verdicts.extend(check_iara(fp, bound=bound, division=True, samples=samples, seed=seed))
    restricted = set(t0_root(pair, fs.grading, r) for r in fs.grading.restricted.values())
    extra = [r for r in fs.roots() if r not in restricted]
    verdicts.append(Verdict.check('R^sigma in pi(R)', not extra, fp.stamp(),
                                  '%u of %u restricted roots' % (len(fs.roots()), len(restricted))
                                  if not extra else '%s is not a restricted root' % (extra[0],)))
    return fs, verdicts
