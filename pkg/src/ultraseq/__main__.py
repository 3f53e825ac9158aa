import sys

from ultraseq.cli import main

sys.exit(main())
