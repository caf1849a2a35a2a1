import sys

from semiclassical.cli import main

sys.exit(main())
