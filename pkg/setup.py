# -*- coding: utf-8 -*-
import os

from setuptools import setup

PACKAGE = 'chaoslink'
MAJOR = 0
MINOR = 1
PATCH = 0
VERSION = "{0}.{1}.{2}".format(MAJOR, MINOR, PATCH)

MODULE = "python.chaoslink"

with open('README.rst') as readme_file:
    readme = readme_file.read()

with open('HISTORY.rst') as history_file:
    history = history_file.read().replace('.. :changelog:', '')

requirements = [
    "numpy",
    "scipy",
    "Pillow",
    "sqlalchemy>=1.4",
]

test_requirements = [
    "coverage",
]

def write_version(filename="version.py"):
    parts = MODULE.split('.')
    parts.append(filename)
    with open(os.path.join(*parts), 'w') as vfile:
        vfile.write("__version__ = '{0}'".format(VERSION) + os.linesep)
        vfile.write("__version_info__ = ({0}, {1}, {2})".format(MAJOR, MINOR, PATCH) + os.linesep)
        vfile.write(os.linesep)
        vfile.write("__all__ = ('__version__', '__version_info__')" + os.linesep)


if __name__ == "__main__":
    write_version()

    setup(
        name=PACKAGE,
        version=VERSION,
        description="Hyperchaotic image encryption sent over a simulated OFDM link",
        long_description=readme + os.linesep * 2 + history,
        scripts=['scripts/chaoslink'],
        packages=[
            'chaoslink',
            'chaoslink.cipher',
            'chaoslink.database',
            'chaoslink.database.tables',
            'chaoslink.hyperchaos',
            'chaoslink.modem',
            'chaoslink.pipeline',
            'chaoslink.randometrics',
            'chaoslink.setup',
            'chaoslink.utilities',
        ],
        package_dir={'': 'python'},
        include_package_data=True,
        install_requires=requirements,
        python_requires=">=3.6",
        license="GPL",
        zip_safe=False,
        keywords=PACKAGE,
        classifiers=[
            'Development Status :: 2 - Pre-Alpha',
            'Intended Audience :: Developers',
            'Intended Audience :: Science/Research',
            'Topic :: Security :: Cryptography',
            'Topic :: Scientific/Engineering',
            'License :: OSI Approved :: GNU General Public License (GPL)',
            'Natural Language :: English',
            'Programming Language :: Python :: 3',
        ],
        test_suite='tests',
        tests_require=test_requirements
    )
