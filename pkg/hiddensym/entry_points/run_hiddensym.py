#!/usr/bin/env python
"""
hiddensym: Hidden symmetries and universality of globally controlled qubit graphs.
Usage:
    hiddensym analyze [options] [--lie] [--blocks] [--qaoa] [--allow-disconnected]
                      [--extra <file>] <graph>
    hiddensym census [options] (--n <n> | --input <graph6-file>) [--jobs <jobs>]
                     [--checkpoint <path>] [--resume]
    hiddensym verify [options] (--result1 [--locate <census-file>] | --result2 [--N <N>] [--force])
                     [--blocks]
    hiddensym query [options] <census-file> [<filter>]
    hiddensym config [options]
    hiddensym -h | --help

Options:
    -f <file>               Path to configuration file. By default: '~/.hiddensym.conf'.
    --seed <seed>           Seed of all random choices; echoed in every report.
    --log <logfile>         Logfile.
    --pretty                Styled text instead of JSON.
    --lie                   Report the Lie closure dimension.
    --blocks                Report the invariant block dimensions.
    --qaoa                  Use the pair {H_X, H_ZZ} without the Z control.
    --allow-disconnected    Accept disconnected graphs.
    --extra <file>          Extra Hamiltonians (Pauli text, separated by '---').
    --n <n>                 Vertex count of a generated census (2..8).
    --input <graph6-file>   Census over the graphs of a graph6 file.
    --jobs <jobs>           Worker processes [default: 1].
    --checkpoint <path>     Census output; default in the checkpoint directory.
    --resume                Keep the records of an existing checkpoint.
    --result1               The seven-vertex three-pair graph.
    --locate <census-file>  Search the n=7 census hits for the three-pair symmetry.
    --result2               The two-pair family.
    --N <N>                 Chain length of the two-pair family [default: 7].
    --force                 Allow chain lengths below the family minimum.

<graph> is a catalog name (see "hiddensym config"), a graph6 string, or a
file with a graph6 line or an edge list.

Environment:
    HIDDENSYM_CHECKPOINT_DIR, HIDDENSYM_SEED override the options
    checkpoint-dir and seed.

Exit codes: 0 ok, 2 invalid input, 3 undecided or over budget,
4 failed verification.
"""
from __future__ import unicode_literals, absolute_import, print_function

from hiddensym.enums import ExitCode
from hiddensym.log import setup_logging
from hiddensym.main import Session
from hiddensym import workflows

import docopt
import os
import sys

__all__ = (
    'run',
)


def _int(a, name):
    try:
        return int(a[name])
    except (TypeError, ValueError):
        print('Invalid value for %s: %r.' % (name, a[name]))
        sys.exit(ExitCode.INPUT_ERROR)


def main(argv=None):
    a = docopt.docopt(__doc__, argv=argv)
    filename = a['-f']

    # Setup logging.
    setup_logging(a['--log'])

    # Configuration filename.
    default_config = os.path.abspath(os.path.expanduser('~/.hiddensym.conf'))
    if not filename and os.path.exists(default_config):
        filename = default_config

    if filename:
        filename = os.path.abspath(os.path.expanduser(filename))

    session = Session(source_file=filename)
    if a['--seed'] is not None:
        session.handle_command('set-option seed %s' % a['--seed'])
    if session.messages:
        for m in session.messages:
            print(m, file=sys.stderr)
        return ExitCode.INPUT_ERROR

    pretty = a['--pretty']

    if a['analyze']:
        return workflows.cmd_analyze(
            session, a['<graph>'], lie=a['--lie'], blocks=a['--blocks'],
            extra_file=a['--extra'], qaoa=a['--qaoa'],
            allow_disconnected=a['--allow-disconnected'], pretty=pretty)

    elif a['census']:
        return workflows.cmd_census(
            session, n=_int(a, '--n') if a['--n'] else None, input_file=a['--input'],
            jobs=_int(a, '--jobs'), checkpoint=a['--checkpoint'], resume=a['--resume'],
            pretty=pretty)

    elif a['verify']:
        return workflows.cmd_verify(
            session, result1=a['--result1'], result2=a['--result2'], N=_int(a, '--N'),
            force=a['--force'], blocks=a['--blocks'], locate=a['--locate'], pretty=pretty)

    elif a['query']:
        return workflows.cmd_query(session, a['<census-file>'], a['<filter>'] or '', pretty=pretty)

    elif a['config']:
        return workflows.cmd_config(session)

    print('Invalid command.')
    return ExitCode.INPUT_ERROR


def run():
    sys.exit(main())


if __name__ == '__main__':
    run()
