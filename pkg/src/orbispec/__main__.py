from orbispec.command import main

main()
