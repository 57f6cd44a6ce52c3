def format_significant(value, digits=12):
    """
    Format a number with a fixed count of significant digits; negative zero prints as 0.
    """
    value = float(value)
    if value == 0.0:
        value = 0.0
    return f"{value:.{digits}g}"
