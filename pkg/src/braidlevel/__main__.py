import sys

from braidlevel.cli import main

sys.exit(main())
