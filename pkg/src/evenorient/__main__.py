import sys

from evenorient.cli import main

sys.exit(main())
