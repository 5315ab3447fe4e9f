from zeckwin.main import main

main()
