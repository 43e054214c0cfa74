# -*- coding: utf-8 -*-
"""
nbspec's setup.py

For more details see https://packaging.python.org/en/latest/distributing/#setup-args
"""
from os import path
from setuptools import setup, find_packages
from codecs import open

ROOT_PATH = path.abspath(path.dirname(__file__))

INSTALL_REQUIREMENTS = [
    'numpy>=1.20',
    'scipy>=1.6',
    'networkx>=3.1'
]

TEST_REQUIREMENTS = [
    'hypothesis',
    'pycodestyle'
]

SETUP_REQUIREMENTS = [
    'setuptools_scm'
]

CLASSIFIERS = [
    'Development Status :: 4 - Beta',
    'Environment :: Console',
    'Intended Audience :: Science/Research',
    'Topic :: Scientific/Engineering :: Mathematics',
    'License :: OSI Approved :: MIT License',
    'Programming Language :: Python :: 3',
    'Programming Language :: Python :: 3.8',
    'Programming Language :: Python :: 3.9',
    'Programming Language :: Python :: 3.10',
    'Programming Language :: Python :: 3.11',
]

ENTRY_POINTS = {
    'console_scripts': [
        'nbspec = nbspec.__main__:main'
    ]
}

PACKAGES = find_packages(exclude=['contrib', 'docs', 'tests', '.eggs'])

README = open(path.join(ROOT_PATH, 'README.rst'), encoding='utf-8').read()

CHANGES = open(path.join(ROOT_PATH, 'CHANGES.rst'), encoding='utf-8').read()

LONG_DESCRIPTION = README + '\n\n' + CHANGES

PACKAGE_DIR = {
    'nbspec': './nbspec'
}

PACKAGE_DATA = {
    'nbspec': ['data/*.cfg']
}

SCM_VERSION = {
    'local_scheme': 'dirty-tag'
}

setup(
    name='nbspec',
    description='Spectra of non-backtracking graphs and their Laplacians, theorem checks and an exhaustive cospectrality census.',
    long_description=LONG_DESCRIPTION,
    url='https://github.com/dbarsam/python-nbspec',
    author='dbarsam',
    author_email='dbarsam@gmail.com',
    license='MIT',
    setup_requires=SETUP_REQUIREMENTS,
    classifiers=CLASSIFIERS,
    keywords='non-backtracking graph laplacian spectrum cospectral census',
    packages=PACKAGES,
    package_dir=PACKAGE_DIR,
    package_data=PACKAGE_DATA,
    test_suite='tests',
    tests_require=TEST_REQUIREMENTS,
    extras_require={'test': TEST_REQUIREMENTS},
    entry_points=ENTRY_POINTS,
    install_requires=INSTALL_REQUIREMENTS,
    python_requires='>=3.8',
    use_scm_version=SCM_VERSION
)
