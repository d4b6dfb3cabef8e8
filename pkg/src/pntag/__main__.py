import sys

from pntag.cli import main

sys.exit(main())
