match cmd:
    case "go":
        run()
    case _:
        stop()
