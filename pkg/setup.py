from setuptools import setup, find_packages


setup(name='wbc_cluster',
      version='0.1.0',
      description='Clustering tendency, K-means, PAM and silhouette analysis '
                  'of the Wisconsin breast cancer data',
      long_description=open('readme_pypi.rst').read(),
      classifiers=[
        'Development Status :: 4 - Beta',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: GNU General Public License v3 (GPLv3)',
        'Operating System :: OS Independent',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Topic :: Scientific/Engineering',
      ],
      keywords='data_science clustering kmeans pam silhouette hopkins',
      license='GNU General Public License v3 (GPLv3)',
      packages=find_packages(exclude=['tests']),
      python_requires='>=3.8',
      install_requires=[
          'pandas>=1.5',
          'numpy>=1.20',
          'scipy>=1.6',
          'matplotlib>=3.5',
          'plotnine>=0.12',
          'typer>=0.9',
          'click>=8.0',
          'PyYAML>=5.4',
          'jsonschema>=4.0',
          'liac-arff>=2.5',
      ],
      extras_require={
          'test': ['pytest>=7', 'hypothesis>=6'],
      },
      entry_points={
          'console_scripts': ['wbc-cluster = wbc_cluster.cli:main'],
      },
      package_data={'wbc_cluster': ['report_schema.json']},
      include_package_data=True,
      zip_safe=False)
