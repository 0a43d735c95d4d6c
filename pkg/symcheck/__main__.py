import sys

from symcheck.main import main

sys.exit(main())
