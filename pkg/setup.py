import os
import sys
import setuptools

short_description = "JSDMix computes Jensen-Shannon divergences of two-component discrete mixtures "
"and the Bayes-error bounds built on them."

# from https://github.com/pytest-dev/pytest-runner#conditional-requirement
needs_pytest = {'pytest', 'test', 'ptr'}.intersection(sys.argv)
pytest_runner = ['pytest-runner'] if needs_pytest else []

try:
    with open("README.md", "r") as handle:
        long_description = handle.read()
except FileNotFoundError:
    long_description = short_description


def _hand_version():
    # single source of truth is jsdmix/_version.py; read it without importing the package
    scope = {}
    with open(os.path.join("jsdmix", "_version.py")) as handle:
        exec(handle.read(), scope)
    return scope["get_versions"]()["version"]


if __name__ == "__main__":
    setuptools.setup(
        name='jsdmix',
        description='Jensen-Shannon divergence of two-component discrete mixtures.',
        author='The JSDMix Development Team',
        license='BSD-3C',
        version=_hand_version(),
        packages=setuptools.find_packages(include=['jsdmix', 'jsdmix.*']),
        include_package_data=True,
        package_data={'jsdmix': [os.path.join('data', '*.json')]},
        setup_requires=[] + pytest_runner,
        python_requires='>=3.8',
        install_requires=['numpy', 'scipy', 'pint', 'pydantic >= 2.0', 'pydantic-settings'],
        extras_require={
            'docs': [
                'numpydoc',
                'sphinx',
                'sphinx-automodapi',
                'sphinx_rtd_theme',
            ],
            'tests': [
                'pytest >= 4.0.0',
                'pytest-cov',
                'hypothesis',
            ],
        },
        tests_require=[
            'pytest >= 4.0.0',
            'pytest-cov',
            'hypothesis',
        ],
        entry_points={
            'console_scripts': ['jsdmix=jsdmix.experiments.cli:main'],
        },
        classifiers=[
            'Development Status :: 4 - Beta',
            'Intended Audience :: Science/Research',
            'Programming Language :: Python :: 3 :: Only',
            'Programming Language :: Python :: 3',
            'Programming Language :: Python :: 3.8',
            'Programming Language :: Python :: 3.9',
            'Programming Language :: Python :: 3.10',
            'Programming Language :: Python :: 3.11',
        ],
        zip_safe=False,
        long_description=long_description,
        long_description_content_type="text/markdown")
