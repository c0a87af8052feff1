import sys

from setuptools import setup

with open('README.rst') as inp:
    long_description = inp.read()

__version__ = ''
inp = open('llvlab/__init__.py')
for line in inp:
    if (line.startswith('__version__')):
        exec(line.strip())
        break
inp.close()

def isInstalled(module_name):
    """Check if a required package is installed, by trying to import it."""

    try:
        return __import__(module_name)
    except ImportError:
        return False
    else:
        return True

if not isInstalled('numpy'):
    print("""NumPy is not installed. This package is required for LLVLab
and needs to be installed before you can use LLVLab.
You can find NumPy at: https://numpy.org""")

PACKAGES = ['llvlab', 'llvlab.exactla', 'llvlab.graded', 'llvlab.liealg',
            'llvlab.models', 'llvlab.verbitsky', 'llvlab.routines',
            'llvlab.tests']
PACKAGE_DATA = {
    'llvlab.tests': ['data/*.json'],
}

SCRIPTS = ['llv-lab=llvlab.routines:main']

setup(
    name='LLVLab',
    version=__version__,
    author='LLVLab developers',
    description='Exact computations with Looijenga-Lunts-Verbitsky Lie '
                'algebras',
    long_description=long_description,
    packages=PACKAGES,
    package_data=PACKAGE_DATA,
    license='GPLv3',
    keywords=('Lie algebra, Lefschetz, sl2-triple, hyperkahler, '
              'cohomology, exact linear algebra, rational arithmetic'),
    classifiers=[
                 'Development Status :: 4 - Beta',
                 'Intended Audience :: Science/Research',
                 'License :: OSI Approved :: GNU General Public License (GPL)',
                 'Operating System :: OS Independent',
                 'Programming Language :: Python',
                 'Programming Language :: Python :: 3',
                 'Topic :: Scientific/Engineering :: Mathematics',
                ],
    entry_points={'console_scripts': SCRIPTS},
    python_requires='>=3.7',
    install_requires=['numpy'],
    provides=['LLVLab({0:s})'.format(__version__)]
    )
