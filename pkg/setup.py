import setuptools

with open('requirements.txt') as f:
    requirements = f.read().splitlines()

setuptools.setup(
    name='nvdd',
    version='0.1.0',
    author="nvdd Authors",
    description="Location anonymization with Voronoi-Delaunay duality",
    packages=setuptools.find_packages(
        include=("nvdd*",)),
    package_data={},
    include_package_data=False,
    zip_safe=False,
    classifiers=(
        'Programming Language :: Python :: 3.6',
        'Programming Language :: Python :: 3.7',
        'Programming Language :: Python :: 3.8',
        "License :: OSI Approved :: Apache Software License",
        "Operating System :: OS Independent",
    ),
    install_requires=requirements,
    entry_points={
        'console_scripts': [
            'nvdd=nvdd.cli:main',
        ],
    },
    extras_require={
        'dev': [
            'pytest',
            'pytest-pep8',
            'pytest-cov'
        ]
    }
)
