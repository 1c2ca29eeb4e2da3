import sys

from okounkov.main import main

sys.exit(main())
