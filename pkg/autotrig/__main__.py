from autotrig.cli.cli import main

main()
