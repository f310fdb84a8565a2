#!/usr/bin/env python

'''
build and verify invariant affine reflection algebras

  iara.py run CONFIG          run a pipeline configuration
  iara.py preset NAME         run a named example (--list shows them)
  iara.py roots DUMP          check and classify a root dump
  iara.py grade|restrict|fixpoint|affinize CONFIG
                              run only the setup steps of CONFIG and the named step
'''
from __future__ import absolute_import, print_function

from argparse import ArgumentParser
import logging
import sys

from pyiara import iaraconfig, pipeline, rootsys
from pyiara.iaraerror import IARAError
from pyiara.iarareport import Report

VERBS = ['run', 'preset', 'roots', 'grade', 'restrict', 'fixpoint', 'affinize']


def make_parser():
    parser = ArgumentParser(description=__doc__)
    parser.add_argument("verb", choices=VERBS)
    parser.add_argument("target", nargs='?', default=None, help="config file, preset name or root dump")
    parser.add_argument("--window", type=int, default=None, help="override the window bound")
    parser.add_argument("--witnesses", action='store_true', default=False, help="print witnesses")
    parser.add_argument("--timing", action='store_true', default=False, help="print step timing")
    parser.add_argument("--out", default=None, help="write the report to a file")
    parser.add_argument("--list", action='store_true', default=False, help="list presets")
    parser.add_argument("--verbose", action='store_true', default=False, help="debug logging")
    return parser


def roots_report(filename):
    system = rootsys.load_dump(filename)
    report = Report(filename)
    section = report.section('roots')
    section.text('rank %u, %u roots, %u isotropic [%s]'
                 % (system.rank, len(system.roots), len(system.isotropic()), system.stamp()))
    section.add(rootsys.check_R1_R5(system))
    rows = rootsys.string_table(system)
    section.text('%u unbroken strings inside the window' % len(rows))
    section.table(['beta', 'alpha', 'd', 'u', '(beta,alpha^)'], rows)
    try:
        section.text('type: %s' % rootsys.classify_type(system))
    except IARAError as e:
        section.text('type: %s' % e.message)
    section.finish()
    return report


def main(argv=None):
    args = make_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format='%(name)s: %(message)s')

    if args.verb == 'preset' and args.list:
        for name in pipeline.preset_names():
            print(name)
        return 0
    if args.target is None:
        print("%s needs a target" % args.verb)
        return 2

    try:
        if args.verb == 'roots':
            report = roots_report(args.target)
        else:
            if args.verb == 'preset':
                config = pipeline.get_preset(args.target)
            else:
                config = iaraconfig.load(args.target)
                if args.verb != 'run':
                    config = pipeline.only_verb(config, args.verb)
            report = pipeline.run(config, window=args.window)
    except IARAError as e:
        print("error: %s" % e.message)
        return 2

    text = report.render(witnesses=args.witnesses, timing=args.timing)
    if args.out:
        f = open(args.out, mode='w')
        f.write(text)
        f.close()
    else:
        print(text, end='')
    return 0 if report.passed else 1


if __name__ == '__main__':
    sys.exit(main())
