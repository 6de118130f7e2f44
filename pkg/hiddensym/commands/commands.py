from __future__ import unicode_literals
import docopt
import os
import shlex
import six

from hiddensym.commands.aliases import ALIASES
from hiddensym.commands.utils import format_edges, wrap_argument
from hiddensym.constructions.catalog import ConfigError, parse_edge
from hiddensym.log import logger
from hiddensym.options import SetOptionError

__all__ = (
    'call_command_handler',
    'handle_command',
)

COMMANDS_TO_HANDLERS = {}  # Global mapping of config commands to their handlers.


def handle_command(session, input_string):
    """
    Execute one line of config text (rc, config file or `source-file`).
    Errors end up in `session.messages`.
    """
    assert isinstance(input_string, six.text_type)

    input_string = input_string.strip()
    logger.debug('handle command: %s', input_string)

    if input_string and not input_string.startswith('#'):  # Ignore comments.
        try:
            parts = shlex.split(input_string)
        except ValueError as e:
            # E.g. missing closing quote.
            session.show_message('Invalid command %s: %s' % (input_string, e))
        else:
            call_command_handler(parts[0], session, parts[1:])


def call_command_handler(command, session, arguments):
    """
    Run the handler of `command` (an alias or a full name).

    :param arguments: The remaining words of the command line.
    """
    assert isinstance(arguments, list)

    # Resolve aliases.
    command = ALIASES.get(command, command)

    try:
        handler = COMMANDS_TO_HANDLERS[command]
    except KeyError:
        session.show_message('Invalid command: %s' % (command,))
    else:
        try:
            handler(session, arguments)
        except CommandException as e:
            session.show_message(e.message)


def cmd(name, options='', flags=(), options_first=False):
    """
    Register a config command. `options` is the docopt usage after the
    command name; the handler receives `(session, variables)` and reports
    errors by raising CommandException.

    :param flags: Descriptions of the options that take an argument, like
        ``'-b <base>'``. Those options may appear in any order.
    :param options_first: Treat every word after the first positional
        argument as positional, so that values like ``-1`` get through.
    """
    doc = 'Usage:\n    %s %s' % (name, options)
    if flags:
        doc += '\n\nOptions:\n' + ''.join('    %s\n' % f for f in flags)

    # Fail at import time on a broken usage pattern.
    if options:
        try:
            docopt.docopt(doc, [])
        except SystemExit:
            pass

    def decorator(func):
        def command_wrapper(session, arguments):
            # Parse options.
            try:
                received_options = docopt.docopt(
                    doc,
                    arguments,
                    help=False,  # Don't interpret the '-h' option as help.
                    options_first=options_first)
            except SystemExit:
                raise CommandException('Usage: %s %s' % (name, options))

            # Call handler.
            func(session, received_options)

        COMMANDS_TO_HANDLERS[name] = command_wrapper
        return func
    return decorator


class CommandException(Exception):
    " When raised from a command handler, this message will be shown. "
    def __init__(self, message):
        super(CommandException, self).__init__(message)
        self.message = message

#
# The actual commands.
#


def _positive_int(text, what):
    try:
        value = int(text)
        if value < 0:
            raise ValueError
    except ValueError:
        raise CommandException('Invalid %s: %r.' % (what, text))
    return value


@cmd('define-graph', options='[-p <pairs>] [-b <base>] [-N <note>] <name> <n> <edges>...',
     flags=('-p <pairs>', '-b <base>', '-N <note>'))
def define_graph(session, variables):
    """
    Add a named graph. Edges are written "i-j" in the external labels,
    which start at <base> (1 by default). Pairs are a comma separated list
    of such edges.
    """
    base = _positive_int(variables['-b'], 'base') if variables['-b'] is not None else 1
    n = _positive_int(variables['<n>'], 'vertex count')

    try:
        edges = [parse_edge(e, base=0) for e in variables['<edges>']]
        pairs = []
        if variables['-p'] is not None:
            pairs = [parse_edge(p, base=0) for p in variables['-p'].split(',')]
        session.catalog.define_graph(variables['<name>'], n, edges, pairs, base,
                                     variables['-N'] or '')
    except ConfigError as e:
        raise CommandException(e.message)


@cmd('define-family', options='[-l <leaf>] [-m <minimum>] [-N <note>] <name>',
     flags=('-l <leaf>', '-m <minimum>', '-N <note>'))
def define_family(session, variables):
    " Add the parameters of a two-pair family. "
    leaf = _positive_int(variables['-l'], 'leaf position') if variables['-l'] is not None else 3
    minimum = _positive_int(variables['-m'], 'minimum') if variables['-m'] is not None else 7

    try:
        session.catalog.define_family(variables['<name>'], leaf, minimum, variables['-N'] or '')
    except ConfigError as e:
        raise CommandException(e.message)


@cmd('source-file', options='<filename>')
def source_file(session, variables):
    """
    Source configuration file.
    """
    filename = os.path.expanduser(variables['<filename>'])
    try:
        with open(filename, 'rb') as f:
            for line in f:
                line = line.decode('utf-8')
                handle_command(session, line)
    except IOError as e:
        raise CommandException('IOError: %s' % (e, ))


@cmd('set-option', options='<option> <value>', options_first=True)
def set_option(session, variables):
    name = variables['<option>']
    value = variables['<value>']

    option = session.options.get(name)

    if option:
        try:
            option.set_value(session, value)
        except SetOptionError as e:
            raise CommandException(e.message)
    else:
        raise CommandException('Invalid option: %s' % (name, ))


@cmd('show-options')
def show_options(session, variables):
    " Write the current option values as set-option commands. "
    for name, option in sorted(session.options.items()):
        session.write('set-option %s %s' % (name, wrap_argument(option.get_value(session))))


@cmd('list-graphs')
def list_graphs(session, variables):
    " Write the catalog as define commands. "
    catalog = session.catalog
    for name in sorted(catalog.graphs):
        entry = catalog.graphs[name]
        parts = ['define-graph']
        if entry.pairs:
            parts.extend(['-p', format_edges(entry.pairs, entry.base, ',')])
        if entry.base != 1:
            parts.extend(['-b', '%i' % entry.base])
        if entry.note:
            parts.extend(['-N', wrap_argument(entry.note)])
        parts.extend([name, '%i' % entry.graph.n])
        parts.append(format_edges(entry.graph.edge_list(), entry.base))
        session.write(' '.join(parts))

    for name in sorted(catalog.families):
        family = catalog.families[name]
        session.write('define-family -l %i -m %i %s' % (family.leaf, family.minimum, name))
