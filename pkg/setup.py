from re import findall
from setuptools import setup, find_packages


with open("pydpso/__init__.py", "r") as f:
    version = findall(r"__version__ = \"(.+)\"", f.read())[0]

with open("README.md", "r") as f:
    readme = f.read()

with open("requirements.txt", "r") as f:
    requirements = [x.strip() for x in f.readlines() if x.strip()]


setup(
    name="Pydpso",
    version=version,
    description="Discrete PSO with onlooker-bee search and multi-parent crossover, baselines and a seeded experiment harness.",
    long_description=readme,
    long_description_content_type="text/markdown",
    license="MIT",
    python_requires=">=3.9",
    install_requires=requirements,
    extras_require={"test": ["pytest"]},
    packages=find_packages(exclude=["tests", "examples"]),
    entry_points={
        "console_scripts": ["pydpso = pydpso.cli:main"],
    },
    keywords=[
        "pso",
        "discrete-pso",
        "metaheuristic",
        "genetic-algorithm",
        "bees-algorithm",
        "allocation",
        "optimization",
    ],
)
