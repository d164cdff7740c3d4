from supertask.cli import main
import sys

sys.exit(main())
