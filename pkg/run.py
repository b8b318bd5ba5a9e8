import sys

from alternata.io.cli import main

if __name__ == "__main__":
    # Defaults to the full law run when no command is given.
    sys.exit(main(sys.argv[1:] or ["check-laws", "--all"]))
