import sys

from normtrace.cli import main

sys.exit(main())
