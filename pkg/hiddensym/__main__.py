"""
Entry point for `python -m hiddensym`.
"""
from __future__ import unicode_literals
from .entry_points.run_hiddensym import run

if __name__ == '__main__':
    run()
