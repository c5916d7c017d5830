from setuptools import setup, find_packages

setup(
    name='pcmk',
    version='1.0.0',
    license='MIT',
    author='pcmk developers',
    packages=find_packages('src'),
    package_dir={'': 'src'},
    url='https://github.com/pcmk-dev/pcmk',
    description="weighted Minkowski problems for C-pseudo-cones: solver, measures and oracles",
    long_description=open('README.md', 'r', encoding='utf-8').read(),
    long_description_content_type='text/markdown',
    keywords="convex geometry Minkowski problem pseudo-cone",
    python_requires='>=3.9',
    classifiers=[
        "Development Status :: 4 - Beta",
        "License :: OSI Approved :: MIT License",
        "Intended Audience :: Science/Research",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3.10",
        "Topic :: Scientific/Engineering :: Mathematics"
    ],
    install_requires=[
        "numpy",
        "scipy",
        "psutil",
        "matplotlib"
    ],
    extras_require={
        'test': [
            "pytest",
            "hypothesis"
        ],
    },
    entry_points={
        'console_scripts': [
            "pcmk = pcmk.cli.main:main"
        ],
    }
)
