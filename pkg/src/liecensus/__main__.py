import sys

from liecensus.cli import main

sys.exit(main())
