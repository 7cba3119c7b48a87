#!/usr/bin/env python3
import os
import re

from setuptools import find_packages, setup

if __name__ == "__main__":
    os.chdir(os.path.dirname(os.path.realpath(__file__)))

    with open("eo_strata/__init__.py", "r") as file:
        contents = file.read()
        version = re.search(r'^__version__\s*=\s*"(.*)"', contents, re.M).group(1)
        author = re.search(r'^__author__\s*=\s*"(.*)"', contents, re.M).group(1)

    with open("README.md", "rb") as f:
        long_descr = f.read().decode("utf-8")

    setup(
        name="eo-strata",
        packages=find_packages(exclude=["tests"]),
        package_data={
            'eo_strata': ['launcher/logging.yaml', 'catalog/golden.yaml'],
        },
        install_requires=[
            # Launcher Requirements
            "appdirs",
            "pyyaml",

            # Mathematics
            "sympy",
            "networkx",
            "pyparsing>=3.0",

            # Utils
            "attrs",
            "cached_property",
            "more_itertools>=8.0",
            "pyrsistent",
            "tabulate",
        ],
        extras_require={
            "test": ["pytest", "hypothesis"],
        },
        entry_points={
            "console_scripts": [
                "eo-strata = eo_strata.launcher.main:main"
            ]
        },
        classifiers=[
            "Development Status :: 4 - Beta",
            "Intended Audience :: Science/Research",
            "Programming Language :: Python :: 3.9",
            "Programming Language :: Python :: 3.10",
            "Programming Language :: Python :: 3.11",
            "Programming Language :: Python :: 3.12",
            "Topic :: Scientific/Engineering :: Mathematics",
        ],
        python_requires='>=3.9',  # importlib.resources.files
        version=version,
        description="Ekedahl-Oort strata of principally polarized abelian varieties: final types, Young types, "
                    "Weyl group elements, Dieudonne modules and the complete tables for g <= 4",
        long_description=long_descr,
        long_description_content_type='text/markdown',
        author=author,
    )
