from setuptools import setup, find_packages

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

with open("requirements.txt", "r", encoding="utf-8") as fh:
    requirements = [line.split("#")[0].strip() for line in fh.read().splitlines()]
    requirements = [line for line in requirements if line]

setup(
    name="drgibbs",
    version="0.1.0",
    author="drgibbs developers",
    author_email="example@example.com",
    description="Gibbs kernel positivity on distance-regular graphs via polynomial hypergroups",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires=">=3.8",
    install_requires=requirements,
    extras_require={"tests": ["pytest>=7.0", "hypothesis>=6.0"]},
    entry_points={"console_scripts": ["drgibbs=drgibbs.cli:main"]},
)
