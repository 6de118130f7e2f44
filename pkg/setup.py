#!/usr/bin/env python
import os
from setuptools import setup, find_packages


with open(os.path.join(os.path.dirname(__file__), 'README.rst')) as f:
    long_description = f.read()


setup(
    name='hiddensym',
    version='0.1',
    license='LICENSE',
    description='Hidden symmetries and universality of globally controlled qubit graphs.',
    long_description=long_description,
    packages=find_packages('.', exclude=['tests']),
    install_requires = [
        'prompt_toolkit>=2.0.0,<2.1.0',
        'six>=1.9.0',
        'docopt>=0.6.2',
        'numpy>=1.17',
        'scipy>=1.4',
        'networkx>=2.4',
    ],
    extras_require={
        'test': ['pytest'],
    },
    entry_points={
        'console_scripts': [
            'hiddensym = hiddensym.entry_points.run_hiddensym:run',
        ]
    },
)
