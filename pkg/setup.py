import os
import setuptools

_here = os.path.abspath(os.path.dirname(__file__))

with open(os.path.join(_here, 'README.md'), encoding='utf-8') as f:
    long_description = f.read()

version = {}
with open(os.path.join(_here, 'crpchips', 'version.py')) as f:
    exec(f.read(), version)

setuptools.setup(
    name='crpchips',
    version=version['__version__'],
    author='crpchips developers',
    description=(\
            'Virtual permutations, Chinese restaurants, chip semigroups ' \
            + 'and their polymorphisms, with a Monte Carlo oracle'),
    long_description=long_description,
    long_description_content_type="text/markdown",
    license='Apache-2.0',
    packages=setuptools.find_packages(),
    package_data={'crpchips': ['schemas/*.schema.json']},
    setup_requires=['numpy', 'scipy>=1.6.0'],
    install_requires=['numpy', 'scipy>=1.6.0', 'jsonschema', 'tqdm'],
    include_package_data=True,
    entry_points={'console_scripts': ['crpchips=crpchips.cli:main']},
    classifiers=[
        'Development Status :: 2 - Pre-Alpha',
        'Intended Audience :: Science/Research',
        'Programming Language :: Python :: 3.9'
        ],
    )
