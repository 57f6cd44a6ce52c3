import sys


def show_progress_bar(processed, total, label="Sampling"):
    """
    Displays a simple text progress bar on stderr, keeping stdout free for reports.
    """
    progress = int((processed / total) * 100) if total else 100
    bar_length = 50  # length of the progress bar in characters
    filled_length = int(bar_length * progress / 100)
    bar = '#' * filled_length + '-' * (bar_length - filled_length)

    sys.stderr.write(f"\r{label}: [{bar}] {progress}%")
    sys.stderr.flush()

    if processed >= total:
        sys.stderr.write("\n")
