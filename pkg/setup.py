"""
stack-preimages
Exact enumeration of preimages under the stack-sorting map via valid hook configurations.
"""
import sys

from setuptools import find_packages, setup

short_description = __doc__.split("\n")

# from https://github.com/pytest-dev/pytest-runner#conditional-requirement
needs_pytest = {'pytest', 'test', 'ptr'}.intersection(sys.argv)
pytest_runner = ['pytest-runner'] if needs_pytest else []

try:
    with open("README.md", "r") as handle:
        long_description = handle.read()
except IOError:
    long_description = "\n".join(short_description[2:])

version = {}

with open("stack_preimages/_version.py", "r") as handle:
    exec(handle.read(), version)

setup(
    # Self-descriptive entries which should always be present
    name='stack-preimages',
    author='Stack Preimages Developers',
    description=short_description[1],
    long_description=long_description,
    long_description_content_type="text/markdown",
    version=version["__version__"],
    license='MIT',
    packages=find_packages(),
    include_package_data=True,
    setup_requires=[] + pytest_runner,
    install_requires=["numpy", "sympy"],
    python_requires=">=3.8",
    # Make the command line interface discoverable.
    entry_points={
        "console_scripts": [
            "stack-preimages = stack_preimages.cli:main",
        ]
    },
)
