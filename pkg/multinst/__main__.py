import sys

from multinst.main import main

sys.exit(main())
