from setuptools import setup, find_packages

setup(name="perichain",
      version="0.1",
      description="Exact computation of canonical bases of the periodic module of the affine Hecke algebra of GL_d "
                  "and of the matching q-wedge tensor modules.",
      author="perichain contributors",
      platforms=["any"],  # or more specific, e.g. "win32", "cygwin", "osx"
      license="BSD",
      url="",
      packages=find_packages(include=['perichain', 'perichain.*']),
      install_requires=['numpy',
                        'sympy',
                        'ruamel.yaml',
                        'pytest',
                        'tabulate',
                        'tqdm',
                        'pathos',
                        'humanfriendly',
                        'pandas'])
