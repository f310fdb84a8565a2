from __future__ import absolute_import, print_function

from setuptools import setup

version = '0.3.0'

setup (name = 'pyiara',
       version = version,
       description = 'Exact construction and verification of invariant affine reflection algebras',
       long_description = ('A Python library for building toral pairs, finite order automorphisms, '
                           'fixed point subalgebras and extended affinizations over cyclotomic fields, '
                           'and for checking the IARA, automorphism and affine reflection system axioms '
                           'on them with exact arithmetic. See the iara.py tool for the pipeline driver '
                           'and the built in examples.'),
       classifiers=['Development Status :: 4 - Beta',
                    'Environment :: Console',
                    'Intended Audience :: Science/Research',
                    'License :: OSI Approved :: GNU Lesser General Public License v3 (LGPLv3)',
                    'Operating System :: OS Independent',
                    'Programming Language :: Python :: 3.6',
                    'Programming Language :: Python :: 3.7',
                    'Programming Language :: Python :: 3.8',
                    'Programming Language :: Python :: 3.9',
                    'Topic :: Scientific/Engineering :: Mathematics',
                    ],
       license='LGPLv3',
       package_dir = { 'pyiara' : '.' },
       packages = ['pyiara',
                   'pyiara.tools'],
       scripts = [ 'tools/iara.py' ],
       install_requires=[
            'future',
            'sympy',
            'networkx',
       ],
       tests_require=[
            'pytest',
            'hypothesis',
       ],
       setup_requires=[
           'future'
       ],
       )
