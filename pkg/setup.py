from setuptools import setup

setup(
    name="horn_codes",
    version="0.1.0",
    description="Horn problem, Littlewood-Richardson/Kronecker coefficients and evaluation codes on the rational normal curve",
    long_description=open("README.md", encoding="utf-8").read(),
    packages=["horn_codes", "horn_codes.func_tools", "core", "utils"],
    py_modules=["config", "main"],
    include_package_data=True,
    install_requires=[
        "click>=8.0.0",
        "pydantic>=2.0.0",
        "tqdm>=4.65.0",
        "termcolor>=2.4.0",
        "numpy>=1.26.4",
    ],
    entry_points={"console_scripts": ["horn-codes=main:main"]},
)
