from setuptools import setup, find_packages
from embed3 import __version__, __author__


install_requires = [
    'atomicwrites',
    'click>=7.1.1',
    'networkx>=3.1',
    'packaging',
]

tests_require = ['pytest']


setup(
    name='embed3',
    version=__version__,
    description='Combinatorial certificates for embeddings of 2-complexes in 3-space.',
    author=__author__,
    license='MIT',
    long_description=open('README.md').read(),
    long_description_content_type='text/markdown',
    packages=find_packages(exclude=['tests', 'tests.*']),
    setup_requires=['wheel'],
    install_requires=install_requires,
    extras_require={
        'tests': tests_require,
    },
    zip_safe=False,
    entry_points={
        'console_scripts': ['embed3=embed3.cli:main'],
    },
    python_requires='>=3.8',
    classifiers=[
        'License :: OSI Approved :: MIT License',
        'Operating System :: OS Independent',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Programming Language :: Python :: 3 :: Only',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
)
