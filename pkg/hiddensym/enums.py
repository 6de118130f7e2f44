from __future__ import unicode_literals

__all__ = (
    'Verdict',
    'ExitCode',
    'REPORT_SCHEMA',
    'CENSUS_SCHEMA',
)


class Verdict(object):
    " Outcome of the universality pipeline. "
    UNIVERSAL = 'universal'
    NOT_UNIVERSAL = 'not_universal'
    UNDECIDED = 'undecided'

    _ALL = [UNIVERSAL, NOT_UNIVERSAL, UNDECIDED]


class ExitCode(object):
    " Process exit codes of the command line tool. "
    OK = 0
    INPUT_ERROR = 2
    UNDECIDED = 3
    VERIFICATION_FAILED = 4


#: Version tag written into every JSON report.
REPORT_SCHEMA = 'hiddensym.report/1'

#: Version tag of census record lines.
CENSUS_SCHEMA = 'hiddensym.census/1'
