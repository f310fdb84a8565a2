'''
pipeline driver and the example gallery

run(config) executes the steps of a PipelineConfig in order against a small
state (current toral pair, automorphism, coefficient algebra and the pairs
produced so far) and collects one report section per step.
'''
from __future__ import absolute_import, division, print_function

from builtins import object
import logging

from . import automorph
from .affinize import (loop_algebra, extend, verify_theorem_affinization, hat_root_system,
                       iterate)
from .coeffalg import (Window, field_base, product_base, make_twisted_group_algebra,
                       make_q_algebra, check_identities, check_involution, is_predivision,
                       is_division, is_torus)
from .fixedpoint import verify_theorem_restricted, verify_theorem_fixed
from .iaraconfig import PipelineConfig, STEP_NAMES
from .iaraerror import IARAError, ConfigError, StepError
from .iarareport import Report, Verdict
from .liealg import check_algebra
from .rootsys import (system_from_pair, check_R1_R5, classify_type, check_isotropic_fixed,
                      root_map_matrix, save_dump, string_table)
from .slalg import make_sl, make_sl_Kpm
from .toral import check_split, root_table, zero_space_abelian

logger = logging.getLogger(__name__)

# steps kept by the single-verb commands
SETUP_STEPS = ['build-base', 'automorphism', 'coeff-algebra']


class PipelineState(object):
    '''what earlier steps produced'''
    def __init__(self):
        self.pair = None
        self.sigma = None
        self.grading = None
        self.coeff = None
        self.ext = None
        self.pairs = {}

    def need(self, what):
        v = getattr(self, what)
        if v is None:
            raise ConfigError("no %s has been built yet" % what.replace('_', ' '))
        return v

    def set_pair(self, pair, role):
        self.pair = pair
        self.sigma = automorph.identity_automorphism(pair)
        self.grading = None
        self.pairs['current'] = pair
        self.pairs[role] = pair

    def source(self, name):
        name = name or 'current'
        pair = self.pairs.get(name)
        if pair is None:
            raise ConfigError("no pair named '%s'" % name)
        return pair


def make_automorphism(pair, step, order):
    kind = step.get('kind')
    if kind == 'identity':
        return automorph.identity_automorphism(pair)
    if kind == 'transpose':
        return automorph.transpose_involution(pair)
    if kind == 'diagonal':
        return automorph.diagonal_automorphism(pair, step.get_int('order', order),
                                               step.get_ints('weights'))
    raise ConfigError("unknown automorphism '%s'" % kind, step.line)


def make_coeff(step):
    base = step.values('base', ['field'])
    if base[0] == 'field':
        b = field_base()
    elif base[0] == 'split' and len(base) == 2 and base[1].isdigit() and int(base[1]) > 0:
        b = product_base(int(base[1]))
    else:
        raise ConfigError("unknown base algebra '%s'" % ' '.join(base), step.line)
    kind = step.get('kind')
    name = step.get('name')
    if kind == 'twisted':
        rank = step.get_int('rank', 1)
        cocycle = {}
        for v in step.all('cocycle'):
            if len(v) != 3:
                raise ConfigError("cocycle needs 'i j value'", step.line)
            try:
                cocycle[(int(v[0]) - 1, int(v[1]) - 1)] = int(v[2])
            except ValueError:
                raise ConfigError("bad cocycle line '%s'" % ' '.join(v), step.line)
        return make_twisted_group_algebra(b, rank, cocycle, name=name)
    if kind == 'q':
        try:
            signs = [[int(x) for x in row] for row in step.all('signs')]
        except ValueError:
            raise ConfigError("signs must be integers", step.line)
        if not signs:
            raise ConfigError("q-algebra needs 'signs' rows", step.line)
        order = step.get_ints('normal-order')
        if order is not None:
            order = [i - 1 for i in order]
        return make_q_algebra(b, signs, order, name=name)
    raise ConfigError("unknown coefficient algebra '%s'" % kind, step.line)


class PipelineRunner(object):
    '''executes configured steps'''
    def __init__(self, config, window=None, seed=None):
        self.config = config
        self.window = window if window is not None else config.window
        self.seed = seed if seed is not None else config.seed
        self.state = PipelineState()
        self.handlers = {
            'build-base': self.build_base,
            'automorphism': self.automorphism,
            'grade': self.grade,
            'restrict': self.restrict,
            'fixpoint': self.fixpoint,
            'coeff-algebra': self.coeff_algebra,
            'affinize': self.affinize,
            'iterate': self.iterate,
            'roots': self.roots,
            'classify': self.classify,
        }

    def samples(self, step):
        n = step.get_int('samples', self.config.samples)
        return n or None

    def bound(self, step):
        return step.get_int('bound', self.config.bound)

    def window_for(self, step, rank):
        return Window(rank, step.get_int('window', self.window))

    def run(self):
        report = Report(self.config.name)
        for i, step in enumerate(self.config.steps):
            if step.name not in STEP_NAMES:
                raise StepError(i + 1, step.name, ConfigError("unknown step '%s'" % step.name))
            section = report.section(step.name)
            logger.info("step %u: %s", i + 1, step.name)
            try:
                self.handlers[step.name](step, section)
            except IARAError as e:
                raise StepError(i + 1, step.name, e)
            section.finish()
        return report

    def describe_pair(self, pair, section):
        dec = pair.decomposition()
        section.text('%s: dim %u, rank T %u, %u roots [%s]'
                     % (pair.name, pair.dim(), len(pair.toral), len(dec.roots()), pair.stamp()))
        if self.config.verbosity >= 2 or pair.dim() <= 16:
            section.table(['root', 'degree', 'dim', '(a,a)'],
                          [(a, d if d else '-', n, f) for a, d, n, f in root_table(pair, dec)])

    def build_base(self, step, section):
        kind = step.get('kind')
        if kind == 'sl':
            pair = make_sl(step.get_int('n', 2))
        elif kind == 'sl_kpm':
            coeff = self.state.need('coeff')
            pair = make_sl_Kpm(step.get_int('K', 1), coeff, self.window_for(step, coeff.rank))
            abelian = zero_space_abelian(pair)
            section.text('g_0 abelian: %s, B a field: %s' % (abelian, coeff.base.is_field()))
            section.add(Verdict.check('g_0 abelian iff B field', abelian == coeff.base.is_field(),
                                      pair.stamp()))
        else:
            raise ConfigError("unknown base '%s'" % kind, step.line)
        self.state.set_pair(pair, 'base')
        self.describe_pair(pair, section)
        section.add(check_algebra(pair.algebra, pair.basis, self.samples(step), self.seed, pair.stamp()))
        if pair.split:
            section.add(check_split(pair))

    def automorphism(self, step, section):
        pair = self.state.need('pair')
        sigma = make_automorphism(pair, step, self.config.order)
        self.state.sigma = sigma
        self.state.grading = None
        section.text('%s of order %u on %s' % (sigma.name, sigma.order, pair.name))
        section.add(automorph.verify_A1_A3(sigma, self.samples(step), self.seed))

    def grading(self):
        if self.state.grading is None:
            self.state.grading = automorph.zm_grading(self.state.need('sigma'))
        return self.state.grading

    def grade(self, step, section):
        sigma = self.state.need('sigma')
        grading = self.grading()
        section.text('dims of g^j: %s' % ' '.join(str(d) for d in grading.dims()))
        section.text('dims of T^j: %s' % ' '.join(str(len(grading.toral(j))) for j in range(sigma.order)))
        rows = automorph.orbit_table(sigma, grading)
        if self.config.verbosity >= 2 or len(rows) <= 16:
            section.table(['alpha', 'orbit', 'pi(alpha)'], rows)
        section.add(automorph.verify_A4(sigma, grading))
        section.add(automorph.verify_A5(sigma, grading))
        section.add(automorph.projection_suite(sigma, grading, samples=self.samples(step) or 500,
                                               seed=self.seed))
        self.sigma_on_roots(system_from_pair(self.state.pair), sigma, section)

    def expect_type(self, step, section, pair, label):
        system = system_from_pair(pair)
        found = classify_type(system)
        section.text('%s type: %s' % (label, found))
        expect = step.get('expect')
        if expect is not None:
            section.add(Verdict.check('type of %s' % label, found == expect, system.stamp(),
                                      'found %s, expected %s' % (found, expect)))
        return system

    def restrict(self, step, section):
        sigma = self.state.need('sigma')
        rp, verdicts = verify_theorem_restricted(self.state.pair, sigma, self.bound(step),
                                                 self.samples(step), self.seed)
        self.state.pairs['restricted'] = rp.pair
        self.describe_pair(rp.pair, section)
        section.add(verdicts)
        system = self.expect_type(step, section, rp.pair, 'pi(R)')
        section.add(check_R1_R5(system))

    def fixpoint(self, step, section):
        sigma = self.state.need('sigma')
        fs, verdicts = verify_theorem_fixed(self.state.pair, sigma, self.bound(step),
                                            self.samples(step), self.seed)
        self.state.pairs['fixed'] = fs.pair
        self.describe_pair(fs.pair, section)
        section.add(verdicts)
        system = self.expect_type(step, section, fs.pair, 'R^sigma')
        section.add(check_R1_R5(system))

    def coeff_algebra(self, step, section):
        coeff = make_coeff(step)
        self.state.coeff = coeff
        window = self.window_for(step, coeff.rank)
        section.text('%s: rank %u, dim B %u, commutative %s [%s]'
                     % (coeff.name, coeff.rank, coeff.base.dim, coeff.commutative, window.stamp()))
        section.text('division: %s, torus: %s' % (is_division(coeff, window).ok,
                                                   is_torus(coeff, window).ok))
        section.add(check_identities(coeff, window, self.samples(step), self.seed))
        section.add(is_predivision(coeff, window))
        if coeff.kind == 'q':
            section.add(check_involution(coeff, window, self.samples(step), self.seed))

    def affinize(self, step, section):
        pair = self.state.need('pair')
        coeff = self.state.need('coeff')
        sigma = self.state.sigma
        window = self.window_for(step, coeff.rank)
        loop = loop_algebra(pair, sigma, coeff, step.get_ints('rho'), window, self.grading())
        ext = extend(loop)
        section.text('%s with %s over %s, %s [%s]' % (pair.name, sigma.name, coeff.name, loop.rho,
                                                       window.stamp()))
        section.text('dims of loop components: %s'
                     % ' '.join('%s:%u' % (','.join(str(x) for x in d), n) for d, n in loop.dims()))
        hats = hat_root_system(ext)
        section.text('%s: dim %u, %u hat roots' % (ext.pair.name, ext.pair.dim(), len(hats)))
        if self.config.verbosity >= 2:
            dec = ext.pair.decomposition()
            section.table(['pi(alpha)', 'lambda', 'dim'],
                          [(h.restricted, h.degree, dec.dim(ext.root(h))) for h in hats])
        section.add(verify_theorem_affinization(ext, self.bound(step), self.samples(step), self.seed))
        self.state.ext = ext
        self.state.set_pair(ext.pair, 'affinized')

    def iterate(self, step, section):
        ext = self.state.need('ext')
        base_sigma = make_automorphism(ext.loop.pair, step, self.config.order)
        sigma_hat, verdicts = iterate(ext, base_sigma, step.get_ints('mu'), step.get_int('order'))
        self.state.sigma = sigma_hat
        self.state.grading = None
        section.text('%s of order %u on %s' % (sigma_hat.name, sigma_hat.order, ext.pair.name))
        section.add(verdicts)

    def roots(self, step, section):
        source = step.get('source', 'current')
        pair = self.state.source(source)
        system = system_from_pair(pair)
        section.text('%s: rank %u, %u roots, %u isotropic [%s]'
                     % (pair.name, system.rank, len(system.roots), len(system.isotropic()),
                        system.stamp()))
        section.text('%u unbroken strings inside the window' % len(string_table(system)))
        section.add(check_R1_R5(system))
        dump = step.get('dump')
        if dump:
            save_dump(system, dump)
            section.text('saved root dump to %s' % dump)
        sigma = self.state.sigma
        if sigma is not None and pair is self.state.pair:
            self.sigma_on_roots(system, sigma, section)

    def sigma_on_roots(self, system, sigma, section):
        '''isotropic roots of the current pair against the active automorphism'''
        section.text('%s of order %u on the roots of %s' % (sigma.name, sigma.order, sigma.pair.name))
        matrix = root_map_matrix(system, sigma.act_on_root)
        if matrix is None:
            section.add(Verdict.check('sigma acts on <R>', False, system.stamp(),
                                      'sigma does not preserve the root lattice').as_hypothesis())
        else:
            section.add(check_isotropic_fixed(system, matrix))

    def classify(self, step, section):
        pair = self.state.source(step.get('source', 'current'))
        self.expect_type(step, section, pair, 'R')


def run(config, window=None, seed=None):
    '''execute a configuration and return its Report'''
    return PipelineRunner(config, window, seed).run()


def only_verb(config, verb):
    '''the setup steps of config followed by its steps named verb'''
    c = config.copy()
    c.steps = [s for s in c.steps if s.name in SETUP_STEPS or s.name == verb]
    return c


def _example7_1():
    c = PipelineConfig('example7_1', window=1)
    c.step('build-base').set('kind', 'sl').set('n', 2)
    c.step('automorphism').set('kind', 'identity')
    c.step('coeff-algebra').set('kind', 'twisted').set('rank', 2).set('cocycle', 1, 2, -1) \
        .set('name', 'F^t[z1,z2]')
    c.step('affinize').set('rho', 0, 0)
    c.step('roots')
    c.step('classify').set('expect', 'A_1')
    return c


def _example7_2():
    c = PipelineConfig('example7_2', order=2, window=2, samples=3000)
    c.step('build-base').set('kind', 'sl').set('n', 3)
    c.step('automorphism').set('kind', 'identity')
    c.step('coeff-algebra').set('kind', 'twisted').set('rank', 1).set('name', 'F[z]')
    c.step('affinize').set('rho', 0)
    c.step('iterate').set('kind', 'transpose').set('mu', 1)
    c.step('grade').set('samples', 200)
    c.step('coeff-algebra').set('kind', 'twisted').set('rank', 1).set('name', 'F[w]')
    c.step('affinize').set('rho', 1)
    c.step('roots')
    c.step('classify').set('expect', 'BC_1')
    return c


def _example7_3():
    c = PipelineConfig('example7_3', order=2, window=1, samples=10000)
    c.step('coeff-algebra').set('kind', 'q').set('signs', 1).set('name', 'F_q[z]')
    c.step('build-base').set('kind', 'sl_kpm').set('K', 1)
    c.step('automorphism').set('kind', 'transpose')
    c.step('grade')
    c.step('restrict').set('expect', 'BC_1')
    c.step('fixpoint').set('expect', 'A_1')
    c.step('coeff-algebra').set('kind', 'twisted').set('rank', 1).set('name', 'F[w]')
    c.step('affinize').set('rho', 1).set('window', 2)
    c.step('roots')
    c.step('classify').set('expect', 'BC_1')
    return c


def _sl_n_untwisted():
    c = PipelineConfig('sl_n_untwisted', window=3)
    c.step('build-base').set('kind', 'sl').set('n', 3)
    c.step('automorphism').set('kind', 'identity')
    c.step('coeff-algebra').set('kind', 'twisted').set('rank', 1).set('name', 'F[z]')
    c.step('affinize').set('rho', 0)
    c.step('roots')
    c.step('classify').set('expect', 'A_2')
    return c


def _sl3_transpose_involution():
    c = PipelineConfig('sl3_transpose_involution', order=2)
    c.step('build-base').set('kind', 'sl').set('n', 3)
    c.step('automorphism').set('kind', 'transpose')
    c.step('grade')
    c.step('restrict').set('expect', 'BC_1')
    c.step('fixpoint').set('expect', 'A_1')
    c.step('roots').set('source', 'fixed')
    return c


PRESETS = [
    ('example7_1', _example7_1),
    ('example7_2', _example7_2),
    ('example7_3', _example7_3),
    ('sl_n_untwisted', _sl_n_untwisted),
    ('sl3_transpose_involution', _sl3_transpose_involution),
]


def presets():
    '''the named example configurations, in order'''
    return [make() for _, make in PRESETS]


def preset_names():
    return [name for name, _ in PRESETS]


def get_preset(name):
    for n, make in PRESETS:
        if n == name:
            return make()
    raise ConfigError("unknown preset '%s'" % name)
