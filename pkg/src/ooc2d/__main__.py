import sys

from ooc2d.cli import main

sys.exit(main())
