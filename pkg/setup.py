from setuptools import setup, find_packages

setup(
    name="alternata",
    version="0.1.0",
    packages=find_packages(include=["alternata", "alternata.*"]),
    install_requires=[
        "langgraph>=0.0.15",
        "pydantic>=2.0.0",
        "pyyaml>=6.0",
        "numpy>=1.24",
    ],
    extras_require={
        "dev": ["pytest>=7.0", "hypothesis>=6.0"],
    },
    entry_points={
        "console_scripts": ["alternata=alternata.io.cli:main"],
    },
    python_requires=">=3.10",
)
