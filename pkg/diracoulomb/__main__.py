import sys

from diracoulomb.cli.main import main

sys.exit(main())
