from setuptools import find_packages, setup

setup(
    name='orbicount',
    version='0.1.0',
    description='Finite checks of orbifold Euler characteristic and Hecke identities',
    packages=find_packages(exclude=['docs']),
    install_requires=[
        'Flask>=3.0',
        'click>=8.1',
        'numpy>=1.26',
    ],
    extras_require={
        'sentry': ['raven==6.10.0'],
    },
    entry_points={
        'console_scripts': ['orbicount = orbicount.cli:main'],
    },
)
