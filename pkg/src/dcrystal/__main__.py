import sys

from dcrystal.cli import main

sys.exit(main())
