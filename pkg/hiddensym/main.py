from __future__ import unicode_literals
import os

import six

from .commands.commands import handle_command, call_command_handler
from .constructions.catalog import Catalog
from .log import logger
from .options import ALL_OPTIONS, DEFAULTS
from .rc import CATALOG_COMMANDS
from .utils import make_rng

__all__ = [
    'Session',
]

#: Environment variables that override options after start-up.
ENVIRONMENT = {
    'HIDDENSYM_CHECKPOINT_DIR': 'checkpoint-dir',
    'HIDDENSYM_SEED': 'seed',
}


class Session(object):
    """
    The central object: options, the graph catalog and the messages of
    the config commands.

    :param source_file: Configuration file sourced after the built-in
        catalog.
    :param environ: Mapping read for the overrides in `ENVIRONMENT`
        (``os.environ`` by default).
    """
    def __init__(self, source_file=None, environ=None):
        self.options = ALL_OPTIONS
        for name, value in DEFAULTS.items():
            setattr(self, name, value)

        self.catalog = Catalog()

        #: Error and info messages of config commands.
        self.messages = []

        #: Text written by informational commands.
        self.output = []

        # Load the built-in catalog, then the user file.
        for line in CATALOG_COMMANDS.splitlines():
            self.handle_command(line)

        if source_file:
            call_command_handler('source-file', self, [source_file])

        environ = os.environ if environ is None else environ
        for variable, option in sorted(ENVIRONMENT.items()):
            if environ.get(variable):
                call_command_handler('set-option', self, [option, environ[variable]])

    def handle_command(self, text):
        " Execute one config command. "
        if not isinstance(text, six.text_type):
            text = text.decode('utf-8')
        handle_command(self, text)

    def show_message(self, message):
        " Record a message from a command. "
        logger.warning('Config: %s', message)
        self.messages.append(message)

    def write(self, text):
        self.output.append(text)

    def rng(self):
        " Fresh generator seeded with the session seed. "
        return make_rng(self.seed)

    def checkpoint_path(self, filename):
        " `filename` inside the checkpoint directory, unless it is absolute. "
        return os.path.join(os.path.expanduser(self.checkpoint_dir), filename)
