import sys

from sunroots.cli import main

sys.exit(main())
