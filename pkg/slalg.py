'''
builders for special linear toral pairs

make_sl(n) is sl_n over the base field with the trace form and the diagonal
Cartan subalgebra.  make_sl_Kpm(K, A, window) is sl_{K+-}(A), the matrices
indexed by -K..K with entries in a coefficient algebra A, extended by the
central space V and the degree derivations V-dagger.
'''
from __future__ import absolute_import, division, print_function

from builtins import range
import logging

from .coeffalg import scalar_algebra, commutator_center_split, Window
from .iaraerror import CenterNonzero, SplitFails, HypothesisUnmet, DegenerateBaseForm
from .liealg import MatrixAlgebra, DegreeExtension
from .toral import ToralPair

logger = logging.getLogger(__name__)


def make_sl(n):
    '''sl_n with e_ij (i != j) and h_i = e_ii - e_(i+1)(i+1)'''
    if n < 2:
        raise HypothesisUnmet("sl_n needs n >= 2")
    coeff = scalar_algebra()
    one = coeff.unit()
    alg = MatrixAlgebra(range(1, n + 1), coeff, name='sl%u' % n)
    basis = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                basis.append(alg.element(i, j, one))
    toral = [alg.element(i, i, one) - alg.element(i + 1, i + 1, one) for i in range(1, n)]
    return ToralPair(alg, basis + toral, toral, name='sl%u' % n, split=True)


def make_sl_Kpm(K_size, coeff, window=None):
    '''
    sl_{K+-}(A) + V + V-dagger for K = {1..K_size}, windowed on the lattice
    degrees of A; diagonal parts are differences in central degrees and
    single diagonal units in commutator degrees
    '''
    if K_size < 1:
        raise HypothesisUnmet("K must be nonempty")
    if window is None:
        window = Window(coeff.rank, 1)
    if coeff.form_eps(coeff.unit(), coeff.unit()) != 1:
        raise DegenerateBaseForm("sl_K+-(A) needs eps(1,1) = 1")
    try:
        split = commutator_center_split(coeff, window)
    except SplitFails as e:
        raise CenterNonzero("center of sl_K+-(A) is nonzero: %s" % e.message, inner_exception=e)
    central = set(split.central)
    indices = list(range(-K_size, K_size + 1))
    mat = MatrixAlgebra(indices, coeff, name='sl_%u(%s)' % (len(indices), coeff.name))
    alg = DegreeExtension(mat) if coeff.rank else mat
    one = coeff.unit()
    basis = []
    for d in window.degrees():
        for ak in coeff.basis(d):
            for i in indices:
                for j in indices:
                    if i != j:
                        basis.append(mat.element(i, j, {ak: 1}))
            if d in central:
                for k in indices[:-1]:
                    basis.append(mat.element(k, k, {ak: 1}) - mat.element(k + 1, k + 1, {ak: 1}))
            else:
                for k in indices:
                    basis.append(mat.element(k, k, {ak: 1}))
    toral = [mat.element(k, k, one) - mat.element(k + 1, k + 1, one) for k in indices[:-1]]
    probes = []
    if coeff.rank:
        extra = [alg.central(i) for i in range(coeff.rank)]
        probes = [alg.derivation(i) for i in range(coeff.rank)]
        basis.extend(extra + probes)
        toral.extend(extra + probes)
    name = 'sl_%u(%s)' % (len(indices), coeff.name)
    logger.info("built %s on %s: %u basis vectors", name, window.stamp(), len(basis))
    return ToralPair(alg, basis, toral, name=name, window=window, probes=probes,
                     split=coeff.base.dim == 1)
