"""Motion detection for surveillance video by background subtraction and two-frame differencing."""

__version__ = "0.1.0"
