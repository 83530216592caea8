from setuptools import setup, find_packages

setup(
    name="hyperbolic-root-bounds",
    version="0.1.0",
    description="Certification, splitting, explicit Lipschitz bounds and tracking for roots of hyperbolic polynomial curves",
    packages=find_packages(exclude=("tests", "tests.*")),
    python_requires=">=3.10",
    install_requires=[
        "numpy>=1.26.0",
        "scipy>=1.11.0",
        "click>=8.1.0",
        "pydantic>=2.9.0",
        "pydantic-settings>=2.6.0",
        "pyyaml>=6.0.2",
        "structlog>=24.4.0",
    ],
    entry_points={"console_scripts": ["hyproots = app.main:cli"]},
)
