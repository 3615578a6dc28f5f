import sys

from lattice_rr.cli import main


if __name__ == '__main__':
    sys.exit(main())
