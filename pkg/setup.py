import setuptools

with open("README.md", "r") as fh:
    long_description = fh.read()

setuptools.setup(
    name='pyweightedcm',
    version="0.1.0",
    license='Apache Software License 2.0',
    description='Cohen-Macaulay tests for edge ideals of edge-weighted graphs',
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(exclude=["tests"]),
    setup_requires=[
        'setuptools'
    ],
    install_requires=[
        'networkx>=3.2',
        'sympy>=1.12',
        'pandas'
    ],
    entry_points={
        'console_scripts': ['pyweightedcm=pyweightedcm.cli:main'],
    },
    python_requires = '>=3.9'
)
