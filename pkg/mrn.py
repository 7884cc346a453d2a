#!/usr/bin/env python3

from mrn.cli import main

if __name__ == "__main__":
    main()
