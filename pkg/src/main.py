"""Used to run the design toolkit from the command line"""

import sys

from commands import run


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
