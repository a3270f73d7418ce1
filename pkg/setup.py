#!/usr/bin/env python

from setuptools import setup

packages = ['starring',
            'starring.theorems',
            'starring.exports']

setup(
    name='starring',
    version='1.0.0',
    description=('Strong zero-divisor graphs of finite *-rings and '
                 'mechanical checks of their theorems'),
    long_description=open('README.rst').read(),
    keywords='ring involution zero-divisor graph Baer p.q.-Baer',

    packages=packages,
    package_data={'': ['README.rst']},
    include_package_data=True,
    python_requires='>=3.8',
    install_requires=['numpy',
                      'networkx',
                      'ordered-set',
                      'lxml'],
    tests_require=['pytest', 'hypothesis'],
    entry_points={'console_scripts': ['starring=starring.cli:main']},
    license='BSD 3-Clause',
    classifiers=[
        'Development Status :: 4 - Beta',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Operating System :: OS Independent',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',
        'License :: OSI Approved :: BSD License',
    ]
)
