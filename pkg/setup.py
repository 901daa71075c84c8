import pathlib

from setuptools import find_packages, setup

setup(
    name="succinv",
    version="0.1.0",
    license="MIT",
    packages=find_packages(include=["succinv*"]),
    description="Successor-invariant first-order collapse on bounded-degree structures.",
    long_description=pathlib.Path("README.md").read_text(),
    long_description_content_type="text/markdown",
    python_requires=">=3.8",
    install_requires=["apischema==0.18.*", "networkx>=2.6"],
    extras_require={"tests": ["pytest", "pytest-cov"]},
    entry_points={"console_scripts": ["succinv=succinv.cli:main"]},
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
