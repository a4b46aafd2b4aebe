import sys

from gbtd.cli import main

sys.exit(main())
