from __future__ import unicode_literals
from collections import OrderedDict

from ..log import logger

__all__ = (
    'ConstructionError',
    'VerificationReport',
)


class ConstructionError(Exception):
    " Raised when a construction gets unusable input. "
    def __init__(self, message):
        super(ConstructionError, self).__init__(message)
        self.message = message


class VerificationReport(object):
    """
    Named boolean checks plus reported (not asserted) values.
    """
    def __init__(self, name):
        self.name = name
        self.checks = OrderedDict()
        self.facts = OrderedDict()

    def check(self, name, value):
        value = bool(value)
        self.checks[name] = value
        if not value:
            logger.warning('%s: check %r failed.', self.name, name)
        return value

    def fact(self, name, value):
        self.facts[name] = value

    @property
    def passed(self):
        return all(self.checks.values())

    def failed(self):
        return [name for name, value in self.checks.items() if not value]

    def to_json(self):
        return {
            'construction': self.name,
            'passed': self.passed,
            'checks': dict(self.checks),
            'facts': dict(self.facts),
        }

    def __repr__(self):
        return 'VerificationReport(%r, passed=%r)' % (self.name, self.passed)
