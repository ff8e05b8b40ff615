import sys

from nvdd.cli import main

sys.exit(main())
