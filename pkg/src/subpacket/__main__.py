import sys

from subpacket.cli import main

sys.exit(main())
