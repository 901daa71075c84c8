from succinv.cli import main

main()
