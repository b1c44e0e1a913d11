from ss3.cli import main

main()
