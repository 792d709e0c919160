"""Run the command line interface with `python -m tdgmine`."""

import sys

from tdgmine.cli import main

###################################################################################################
###################################################################################################

sys.exit(main())
