import sys

from descent_forge.cli import main

sys.exit(main())
