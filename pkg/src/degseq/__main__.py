import sys

from degseq.cli import main

sys.exit(main())
