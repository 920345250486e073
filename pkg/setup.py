#!/usr/bin/env python3

from setuptools import setup

from libreeb import VERSION

setup(name="reebsphere",
      version=".".join(str(f) for f in VERSION),
      description="Sphere recognition and two-critical-point colorings of finite simple graphs",
      keywords="discrete morse theory graph sphere ball reeb critical points",
      packages=['libreeb', 'libreeb.tests'],
      scripts=['reebsphere'],
      install_requires=['networkx>=2.5', 'numpy>=1.17'],
      license="MIT",
      classifiers=[
          "Development Status :: 4 - Beta",
          "Topic :: Scientific/Engineering :: Mathematics",
          "License :: OSI Approved :: MIT License",
      ],

)
