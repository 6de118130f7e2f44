"""
Session options. They are changed with "set-option", from the config file
or through the environment overrides in `hiddensym.main`.
"""
from __future__ import unicode_literals
from abc import ABCMeta, abstractmethod
import os

import six

from .lie.closure import DEFAULT_TOLERANCE
from .symmetry.commutant import DEFAULT_MAX_UNKNOWNS

__all__ = (
    'Option',
    'SetOptionError',
    'OnOffOption',
    'StringOption',
    'PositiveIntOption',
    'FloatOption',
    'ChoiceOption',
    'ALL_OPTIONS',
    'DEFAULTS',
)


class Option(six.with_metaclass(ABCMeta, object)):
    """
    An option stores its value as an attribute of the session.
    """
    @abstractmethod
    def get_value(self, session):
        """
        The current value as text that `set_value` accepts. (Written by
        "show-options".)
        """

    @abstractmethod
    def set_value(self, session, value):
        " Parse `value` and store it on the session. Raises SetOptionError. "


class SetOptionError(Exception):
    " The value given to set-option was rejected. "
    def __init__(self, message):
        super(SetOptionError, self).__init__(message)
        self.message = message


class OnOffOption(Option):
    " Switch like census-timings, written as on or off. "
    def __init__(self, attribute_name):
        self.attribute_name = attribute_name

    def get_value(self, session):
        return 'on' if getattr(session, self.attribute_name) else 'off'

    def set_value(self, session, value):
        value = value.lower()

        if value in ('on', 'off'):
            setattr(session, self.attribute_name, (value == 'on'))
        else:
            raise SetOptionError('Expecting "on" or "off".')


class StringOption(Option):
    """
    String option, the attribute is set as a Session attribute.
    """
    def __init__(self, attribute_name, possible_values=None):
        self.attribute_name = attribute_name
        self.possible_values = possible_values or []

    def get_value(self, session):
        return '%s' % (getattr(session, self.attribute_name), )

    def set_value(self, session, value):
        setattr(session, self.attribute_name, os.path.expanduser(value))


class ChoiceOption(StringOption):
    " String option restricted to `possible_values`. "
    def set_value(self, session, value):
        if value not in self.possible_values:
            raise SetOptionError('Expecting one of: %s.' % ', '.join(self.possible_values))
        setattr(session, self.attribute_name, value)


class PositiveIntOption(Option):
    """
    Positive integer option, the attribute is set as a Session attribute.
    """
    def __init__(self, attribute_name):
        self.attribute_name = attribute_name

    def get_value(self, session):
        return '%i' % getattr(session, self.attribute_name)

    def set_value(self, session, value):
        """
        Parse a non-negative integer (seeds may be 0). Raise SetOptionError
        otherwise.
        """
        try:
            value = int(value)
            if value < 0:
                raise ValueError
        except ValueError:
            raise SetOptionError('Expecting an integer.')
        else:
            setattr(session, self.attribute_name, value)


class FloatOption(Option):
    " Positive float, for tolerances. "
    def __init__(self, attribute_name):
        self.attribute_name = attribute_name

    def get_value(self, session):
        return '%r' % getattr(session, self.attribute_name)

    def set_value(self, session, value):
        try:
            value = float(value)
            if not value > 0:
                raise ValueError
        except ValueError:
            raise SetOptionError('Expecting a positive number.')
        else:
            setattr(session, self.attribute_name, value)


ALL_OPTIONS = {
    'seed': PositiveIntOption('seed'),
    'tolerance': FloatOption('tolerance'),
    'max-unknowns': PositiveIntOption('max_unknowns'),
    'max-lie-qubits': PositiveIntOption('max_lie_qubits'),
    'lie-method': ChoiceOption('lie_method', ['auto', 'exact', 'float']),
    'census-flush-every': PositiveIntOption('census_flush_every'),
    'census-timings': OnOffOption('census_timings'),
    'strict-family': OnOffOption('strict_family'),
    'checkpoint-dir': StringOption('checkpoint_dir'),
}


#: Attribute values of a fresh session.
DEFAULTS = {
    'seed': 0,
    'tolerance': DEFAULT_TOLERANCE,
    'max_unknowns': DEFAULT_MAX_UNKNOWNS,
    'max_lie_qubits': 5,
    'lie_method': 'auto',
    'census_flush_every': 64,
    'census_timings': False,
    'strict_family': True,
    'checkpoint_dir': '.',
}
