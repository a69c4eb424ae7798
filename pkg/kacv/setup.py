"""Setup script for the kacv package."""

from pathlib import Path

from setuptools import setup, find_packages

HERE = Path(__file__).resolve().parent

long_description = (HERE / "README.md").read_text(encoding="utf-8")

# This file sits inside the package directory, so subpackages are found
# relative to it and mapped under the kacv namespace.
subpackages = find_packages(where=str(HERE), exclude=["tests", "tests.*"])

setup(
    name="kacv",
    version="1.0.0",
    description=(
        "Exact Kac polynomials of quivers over finite fields, with Peterson "
        "multiplicities and Harder-Narasimhan checks"
    ),
    long_description=long_description,
    long_description_content_type="text/markdown",
    keywords=[
        "quiver representations",
        "Kac polynomial",
        "finite fields",
        "Kac-Moody algebras",
        "root multiplicities",
        "Harder-Narasimhan filtration",
        "quiver varieties",
    ],
    package_dir={"kacv": "."},
    packages=["kacv"] + [f"kacv.{name}" for name in subpackages],
    package_data={"kacv": ["data/quivers/*.quiver", "README.md"]},
    classifiers=[
        "Development Status :: 4 - Beta",
        "Environment :: Console",
        "Intended Audience :: Science/Research",
        "Intended Audience :: Education",
        "Topic :: Scientific/Engineering :: Mathematics",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3 :: Only",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
    ],
    python_requires=">=3.8",
    install_requires=[
        "numpy>=1.21.0,<2.0.0",
        "sympy>=1.9,<2.0",
        "PyYAML>=5.4.0,<7.0.0",
    ],
    extras_require={
        "dev": ["pytest>=7.0.0,<9.0.0"],
    },
    entry_points={
        "console_scripts": [
            "kacv=kacv.cli:main",
        ],
    },
)
