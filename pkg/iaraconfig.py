'''
module for loading/saving pipeline configurations

A configuration is line oriented.  Blank lines and lines starting with '#'
are skipped; '[name]' opens a new step and every other line is a key
followed by whitespace separated values.  Keys before the first step are
global settings.
'''
from __future__ import absolute_import, division, print_function

from builtins import object
import logging

from .iaraerror import ConfigError

logger = logging.getLogger(__name__)

STEP_NAMES = ['build-base', 'automorphism', 'grade', 'restrict', 'fixpoint', 'coeff-algebra',
              'affinize', 'iterate', 'roots', 'classify']

# keys each step must carry
REQUIRED = {
    'build-base': ['kind'],
    'automorphism': ['kind'],
    'coeff-algebra': ['kind'],
    'affinize': ['rho'],
    'iterate': ['mu'],
}

GLOBAL_DEFAULTS = [
    ('order', 1),
    ('window', 1),
    ('bound', 10),
    ('samples', 2000),
    ('verbosity', 1),
    ('seed', 0),
]


class Step(object):
    '''one pipeline step: a name and its key/value lines in file order'''
    def __init__(self, name, params=None, line=None):
        self.name = name
        self.params = list(params or [])
        self.line = line

    def set(self, key, *values):
        self.params.append((key, [str(v) for v in values]))
        return self

    def has(self, key):
        return any(k == key for k, _ in self.params)

    def values(self, key, default=None):
        '''values of the first line with this key'''
        for k, v in self.params:
            if k == key:
                return list(v)
        return default

    def get(self, key, default=None):
        v = self.values(key)
        if v is None:
            return default
        return ' '.join(v)

    def get_int(self, key, default=None):
        v = self.get(key)
        if v is None:
            return default
        try:
            return int(v)
        except ValueError:
            raise ConfigError("%s: '%s' is not an integer" % (key, v), self.line)

    def get_ints(self, key, default=None):
        v = self.values(key)
        if v is None:
            return default
        try:
            return [int(x) for x in v]
        except ValueError:
            raise ConfigError("%s: expected integers, got '%s'" % (key, ' '.join(v)), self.line)

    def all(self, key):
        '''values of every line with this key'''
        return [list(v) for k, v in self.params if k == key]

    def __eq__(self, other):
        return isinstance(other, Step) and self.name == other.name and self.params == other.params

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return 'Step(%s, %s)' % (self.name, self.params)


class PipelineConfig(object):
    '''global settings and ordered steps'''
    def __init__(self, name='', steps=None, **settings):
        self.name = name
        self.settings = dict(GLOBAL_DEFAULTS)
        for k, v in settings.items():
            if k not in self.settings:
                raise ConfigError("unknown global setting '%s'" % k)
            self.settings[k] = v
        self.steps = list(steps or [])

    def __getattr__(self, key):
        if key != 'settings' and key in self.settings:
            return self.settings[key]
        raise AttributeError(key)

    def step(self, name):
        '''append a new step and return it'''
        if name not in STEP_NAMES:
            raise ConfigError("unknown step '%s'" % name)
        s = Step(name)
        self.steps.append(s)
        return s

    def copy(self):
        c = PipelineConfig(self.name, [Step(s.name, [(k, list(v)) for k, v in s.params], s.line)
                                       for s in self.steps])
        c.settings = dict(self.settings)
        return c

    def __eq__(self, other):
        return isinstance(other, PipelineConfig) and self.settings == other.settings and \
            self.steps == other.steps

    def __ne__(self, other):
        return not self.__eq__(other)

    def dumps(self):
        out = []
        if self.name:
            out.append('# %s' % self.name)
        for k, _ in GLOBAL_DEFAULTS:
            out.append('%-10s %s' % (k, self.settings[k]))
        for s in self.steps:
            out.append('')
            out.append('[%s]' % s.name)
            for k, v in s.params:
                out.append('%-10s %s' % (k, ' '.join(v)))
        return '\n'.join(out) + '\n'

    def save(self, filename):
        '''save the configuration to a file'''
        f = open(filename, mode='w')
        f.write(self.dumps())
        f.close()
        logger.info("saved %u steps to %s", len(self.steps), filename)

    @staticmethod
    def loads(text, name=''):
        '''parse configuration text'''
        config = PipelineConfig(name)
        current = None
        for n, line in enumerate(text.splitlines()):
            lineno = n + 1
            line = line.strip()
            if not line or line[0] == '#':
                continue
            if line[0] == '[':
                if line[-1] != ']':
                    raise ConfigError("invalid step header '%s'" % line, lineno)
                sname = line[1:-1].strip()
                if sname not in STEP_NAMES:
                    raise ConfigError("unknown step '%s'" % sname, lineno)
                current = Step(sname, line=lineno)
                config.steps.append(current)
                continue
            a = line.split()
            if len(a) < 2:
                raise ConfigError("invalid line '%s'" % line, lineno)
            if current is None:
                if a[0] not in config.settings:
                    raise ConfigError("unknown global setting '%s'" % a[0], lineno)
                if len(a) != 2:
                    raise ConfigError("global setting '%s' takes one value" % a[0], lineno)
                try:
                    config.settings[a[0]] = int(a[1])
                except ValueError:
                    raise ConfigError("%s: '%s' is not an integer" % (a[0], a[1]), lineno)
                continue
            current.params.append((a[0], a[1:]))
        for s in config.steps:
            for key in REQUIRED.get(s.name, []):
                if not s.has(key):
                    raise ConfigError("step '%s' needs '%s'" % (s.name, key), s.line)
        return config

    @staticmethod
    def load(filename):
        '''load a configuration file'''
        try:
            f = open(filename, mode='r')
        except IOError as e:
            raise ConfigError("failed to open '%s': %s" % (filename, e))
        text = f.read()
        f.close()
        config = PipelineConfig.loads(text, name=filename)
        logger.info("loaded %u steps from %s", len(config.steps), filename)
        return config


def load(filename):
    return PipelineConfig.load(filename)


def loads(text, name=''):
    return PipelineConfig.loads(text, name)
