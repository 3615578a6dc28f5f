from setuptools import setup, find_packages


PACKAGE_NAME = "lattice_rr"
PACKAGE_VERSION = "1.0.0"
PACKAGE_DESCRIPTION = """This package counts lattice points on weighted triangles
with Riemann-Roch correction terms computed by Euclidean recursion
"""
EXCLUDE_PACKAGES = ["tests", "tests.*", "scripts"]
INSTALL_REQUIREMENTS = ["numpy", "pylint", "pytest", "scalene", "numba", "tqdm", "rich"]


setup(
    name=PACKAGE_NAME,
    version=PACKAGE_VERSION,
    description=PACKAGE_DESCRIPTION,
    license="GPLv3",
    packages=find_packages(exclude=EXCLUDE_PACKAGES),
    install_requires=INSTALL_REQUIREMENTS,
    entry_points={"console_scripts": ["lattice-rr=lattice_rr.cli:main"]},
    zip_safe=False,
    python_requires=">=3.9"
)
