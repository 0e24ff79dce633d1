import sys

from grcodes.cli import main

sys.exit(main())
