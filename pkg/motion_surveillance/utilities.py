def _boxed(text):
    msg = "\n+{}+\n".format((len(text)+2)*'-')
    msg += "| {} |\n".format(text)
    msg += "+{}+\n".format((len(text)+2)*'-')
    return msg

def success_message(summary):
    return _boxed("Run successful. {}".format(summary))

def error_message(trace):
    return _boxed("Run unsuccessful. Trace: {}".format(trace))

def stats_info(stats):
    msg = ""
    for key, value in stats.items():
        if isinstance(value, float):
            msg += "{}: {:.6f}\n".format(key, value)
        else:
            msg += "{}: {}\n".format(key, value)
    return msg

def parse_grid(text):
    """Parses "RxC" into (rows, cols)."""
    parts = text.lower().split("x")
    if len(parts) != 2 or not all(part.isdigit() for part in parts):
        raise ValueError("Invalid grid '{}', expected RxC".format(text))
    return int(parts[0]), int(parts[1])

def parse_modes(text):
    """Parses a comma-separated mode list, dropping blanks and duplicates."""
    modes = []
    for mode in text.split(","):
        mode = mode.strip()
        if mode and mode not in modes:
            modes.append(mode)
    return modes
