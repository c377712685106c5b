import sys

from motion_surveillance.cli import main


if __name__ == "__main__":
    sys.exit(main())
